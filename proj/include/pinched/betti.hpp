#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

#include "pinched/complex.hpp"
#include "pinched/homology.hpp"
#include "pinched/semigroup.hpp"

namespace pinched {

/// (homological degree i, coarse degree s); the internal degree is s*d.
using Cell = std::pair<int, int>;

struct ScanRange {
  int i_max = 0;
  int s_max = 0;
  friend bool operator==(const ScanRange&, const ScanRange&) = default;
};

/// Graded Betti numbers β_{i,sd} over the scanned rectangle. Every cell of
/// the rectangle is stored, zeros included. Column s = s_max is the guard.
class BettiTable {
 public:
  BettiTable(PinchConfig config, FieldSpec field, ScanRange range);

  const PinchConfig& config() const { return config_; }
  const FieldSpec& field() const { return field_; }
  const ScanRange& range() const { return range_; }
  const std::map<Cell, std::int64_t>& entries() const { return entries_; }

  /// Throws std::out_of_range outside the scanned range.
  std::int64_t at(int i, int s) const;
  void add(int i, int s, std::int64_t value);
  /// Σ_s β_{i,s}
  std::int64_t total(int i) const;
  bool guard_column_zero() const;

  friend bool operator==(const BettiTable& a, const BettiTable& b) {
    return a.config_ == b.config_ && a.range_ == b.range_ && a.entries_ == b.entries_;
  }

 private:
  PinchConfig config_;
  FieldSpec field_;
  ScanRange range_;
  std::map<Cell, std::int64_t> entries_;
};

/// Storage for per-degree homology, keyed by h in normalized coordinates
/// (see PinchConfig::normalize). Implementations need not be thread safe:
/// the engine calls them from one thread.
class HomologyStore {
 public:
  virtual ~HomologyStore() = default;
  virtual std::optional<HomologyProfile> lookup(const Multidegree& normalized_h) = 0;
  virtual void store(const Multidegree& normalized_h, const HomologyProfile& profile) = 0;
};

class ResourceRefusal : public std::runtime_error {
 public:
  ResourceRefusal(const std::string& what, double estimate)
      : std::runtime_error(what), estimate_(estimate) {}
  double estimate() const { return estimate_; }

 private:
  double estimate_;
};

class InsufficientScan : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using ComplexObserver =
    std::function<void(const SquarefreeDivisorComplex&, const HomologyProfile&)>;

struct EngineOptions {
  int threads = 1;
  /// Upper bound on the number of divisor complexes one call may build.
  std::int64_t max_complexes = 5'000'000;
  /// Upper bound on estimate_cost(); larger runs are refused.
  double subset_budget = 2e8;
  HomologyStore* cache = nullptr;
  /// Called once per freshly built complex, in sorted-h order, from the
  /// calling thread. Cache hits are not rebuilt and not observed.
  ComplexObserver observer;
};

/// Σ_s #{h : |h| = sd} · Σ_{k <= min(s, N-1)} binom(N-1, k): an upper bound
/// on the subsets the complex builder may visit.
double estimate_cost(const PinchConfig& config, int s_max);

/// Default coarse-degree bound: i_max + 3 for n = 2 (regularity two plus a
/// guard column). Nothing for n >= 3, where the caller must choose.
std::optional<int> default_s_max(const PinchConfig& config, int i_max);

/// β_{i,sd} = Σ_{|h| = sd} dim H̃_{i-1}(Δ_h) for 0 <= i <= i_max, 0 <= s <= s_max.
/// Needs i_max <= N - 2 and s_max >= i_max + 1.
BettiTable graded_betti(const PinchConfig& config, const FieldSpec& field, int i_max, int s_max,
                        const EngineOptions& options = {});

/// Per-h contributions to β_{i,td}; only nonzero values are listed.
std::map<Multidegree, std::int64_t> multigraded_betti(const PinchConfig& config,
                                                      const FieldSpec& field, int i, int t,
                                                      const EngineOptions& options = {});

struct ClassificationReport {
  int pdim = 0;
  int depth = 0;
  int krull_dim = 0;
  bool is_cm = false;
  bool is_gorenstein = false;
  /// Largest p <= pdim with β_{i,s} = 0 whenever 0 < i <= p and s != i + 1.
  int linearity_index = 0;
  /// max (s - i) over nonzero entries.
  int observed_regularity = 0;
};

/// Reads pdim off the table and derives the rest by Auslander-Buchsbaum.
/// Throws InsufficientScan unless i_max = N - 2 and the guard column is zero.
ClassificationReport classify(const BettiTable& table);

struct NonCmWitness {
  Multidegree h;
  int i;
  std::int64_t dim;
  std::int64_t faces;
};

/// Builds the single complex certifying failure of Cohen-Macaulayness:
/// for max m = d - 1 (n >= 3), h = m plus N - n + 1 generators other than m
/// and d e_peak, with i = N - n; for interior pinches, h = Σ A_{n,d} with
/// i = N - 2. Throws std::invalid_argument for the Cohen-Macaulay classes.
NonCmWitness witness_non_cm(const PinchConfig& config, const FieldSpec& field = FieldSpec::default_field());

}  // namespace pinched
