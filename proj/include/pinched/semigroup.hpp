#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pinched/multidegree.hpp"

namespace pinched {

enum class PinchClass { MaxD, MaxDMinus1, Interior };

std::string to_string(PinchClass c);

/// The ring P_{n,d,m}: degree-d Veronese semigroup in n variables with the
/// single generator m removed.
class PinchConfig {
 public:
  /// Throws std::invalid_argument unless n >= 2, d >= 2, |m| = d, m has
  /// length n. The d = 2, max m = 1 configurations are rejected: there two
  /// coordinates of m attain d - 1 and the closed-form theory does not apply.
  PinchConfig(int n, int d, Multidegree m);

  /// n = 2 shorthand: m_i = (i, d - i).
  static PinchConfig from_pinch_index(int d, int i);

  int n() const { return n_; }
  int d() const { return d_; }
  const Multidegree& m() const { return m_; }
  PinchClass pinch_class() const { return class_; }

  /// Number of degree-d monomials, binom(n+d-1, d). The ring has N - 1 generators.
  int big_n() const { return big_n_; }

  /// Position of the largest coordinate of m (first one on ties).
  int peak() const { return peak_; }
  /// For MaxDMinus1: the position holding the 1. Otherwise -1.
  int tail() const { return tail_; }

  /// Permutation sorting m descending (stable); normalized()[j] = m[perm[j]].
  const std::vector<int>& normalizing_permutation() const { return perm_; }
  Multidegree normalize(const Multidegree& h) const { return h.permuted(perm_); }
  PinchConfig normalized() const { return PinchConfig(n_, d_, normalize(m_)); }

  std::string str() const;

  friend bool operator==(const PinchConfig& a, const PinchConfig& b) {
    return a.n_ == b.n_ && a.d_ == b.d_ && a.m_ == b.m_;
  }

 private:
  int n_;
  int d_;
  Multidegree m_;
  PinchClass class_;
  int big_n_;
  int peak_ = 0;
  int tail_ = -1;
  std::vector<int> perm_;
};

/// A_{n,d} with m removed, descending lex order.
struct GeneratorSet {
  std::vector<Multidegree> gens;
  int big_n = 0;

  int size() const { return static_cast<int>(gens.size()); }
  const Multidegree& operator[](int i) const { return gens[i]; }
  /// Index of g in gens, or -1.
  int index_of(const Multidegree& g) const;
};

GeneratorSet generate_generators(const PinchConfig& config);

/// Every composition of d into n parts (A_{n,d}), descending lex.
std::vector<Multidegree> veronese_generators(int n, int d);

/// Membership in the pinched semigroup from the explicit description of the
/// elements it misses. Throws std::invalid_argument on a dimension mismatch.
bool is_member_closed(const Multidegree& h, const PinchConfig& config);

/// Independent membership oracle: decides h in H by searching for a
/// representation as a sum of exactly |h|/d generators. Memoized per instance.
class BruteForceMembership {
 public:
  BruteForceMembership(const PinchConfig& config, int degree_bound);

  /// Throws std::out_of_range when |h| exceeds the degree bound.
  bool contains(const Multidegree& h);

  std::size_t memo_size() const { return memo_.size(); }

 private:
  bool search(const Multidegree& h);

  PinchConfig config_;
  GeneratorSet gens_;
  int degree_bound_;
  std::unordered_map<Multidegree, bool, MultidegreeHash> memo_;
};

/// One-shot wrapper with a fresh memo table.
bool is_member_bruteforce(const Multidegree& h, const PinchConfig& config, int degree_bound);

/// Elements of H of total degree t*d, descending lex. t = 0 gives the zero vector.
std::vector<Multidegree> enumerate_degree(const PinchConfig& config, int t);

struct NormalityWitness {
  Multidegree z;
  int multiplier;
};

/// Looks for z outside H with k*z in H, for |z| = t*d, 1 <= t <= degree_bound
/// and 2 <= k <= multiplier_bound. Only z in N^n are tried: a vector with a
/// negative entry has no positive multiple in N^n. Finding nothing is not a
/// proof of normality.
std::optional<NormalityWitness> normality_probe(const PinchConfig& config, int degree_bound,
                                                int multiplier_bound);

}  // namespace pinched
