#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pinched/complex.hpp"
#include "pinched/sparse_rank.hpp"

namespace pinched {

class FieldSpec {
 public:
  enum class Kind { Rationals, PrimeField };

  static FieldSpec rationals() { return FieldSpec(Kind::Rationals, 0); }
  /// Throws std::invalid_argument unless p is a prime below 2^31.
  static FieldSpec prime(std::uint32_t p);
  static FieldSpec default_field() { return prime(32003); }
  /// "QQ" / "Q" / "rationals", or a prime such as "32003" or "GF(2)".
  static FieldSpec parse(const std::string& text);

  Kind kind() const { return kind_; }
  std::uint32_t characteristic() const { return p_; }
  /// "QQ" or "GF(p)"; stable, used in cache file names.
  std::string str() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(Kind k, std::uint32_t p) : kind_(k), p_(p) {}
  Kind kind_;
  std::uint32_t p_;
};

/// Dimensions of reduced homology, indexed from k = -1. Trailing zeros are
/// trimmed so equal profiles compare equal.
class HomologyProfile {
 public:
  HomologyProfile() = default;
  /// dims[0] is H̃_{-1}.
  explicit HomologyProfile(std::vector<std::int64_t> dims);

  std::int64_t dim(int k) const;
  /// Highest k with a nonzero dimension, or -2 if all vanish.
  int top() const { return static_cast<int>(dims_.size()) - 2; }
  bool is_zero() const { return dims_.empty(); }
  const std::vector<std::int64_t>& raw() const { return dims_; }
  std::int64_t euler_characteristic() const;

  friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;

 private:
  std::vector<std::int64_t> dims_;
};

/// ∂_k : C_k -> C_{k-1} with C_{-1} spanned by the empty face. Rows index
/// (k-1)-faces, columns k-faces, both in the complex's face order. The sign of
/// the facet dropping the j-th smallest vertex is (-1)^j.
SparseMatrix boundary_matrix(const SimplicialComplex& c, int k);

HomologyProfile reduced_homology(const SimplicialComplex& c, const FieldSpec& field);

/// ∂_{k} ∘ ∂_{k+1} = 0 for every k, over the integers.
bool boundary_squares_to_zero(const SimplicialComplex& c);

/// Σ_{k >= -1} (-1)^k f_k, counting the empty face when present.
std::int64_t reduced_euler_characteristic(const SimplicialComplex& c);

/// H̃_{i-2}(Δ*) = H̃_{#V-i-1}(Δ) for all i, with V the vertex set of c.
/// Vacuously true when V is empty, where the statement does not apply.
bool alexander_duality_holds(const SimplicialComplex& c, const FieldSpec& field);

}  // namespace pinched
