#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pinched/betti.hpp"

namespace pinched {

struct Claim {
  enum class Kind { Equals, Zero, NonZero };
  Cell cell;
  Kind kind;
  std::int64_t value = 0;  // Equals only
  std::string label;
};

/// Predicted shape of an n = 2 Betti table over cells (i, s). Every scanned
/// cell that carries no claim and is not unknown is predicted to vanish.
struct ExpectedTable {
  std::string source;
  std::vector<Claim> claims;
  std::set<Cell> unknown;

  std::map<Cell, std::int64_t> known() const;
  std::set<Cell> zero() const;
  std::set<Cell> nonzero() const;
  /// Claimed or unknown.
  bool covers(const Cell& cell) const;
  /// known, zero and unknown are pairwise disjoint, nonzero avoids zero and unknown.
  bool disjoint() const;
};

/// max m = d: row 1 carries i C(d-1, i+1) for 1 <= i <= d-2.
ExpectedTable expected_max_d(int d);
/// max m = d-1: row 1 carries C(d, i+1) i (d-i-2)/(d-1) for 1 <= i <= d-3,
/// plus a lone 1 at (d-2, d). Throws std::logic_error on a non-integral value.
ExpectedTable expected_max_d_minus_1(int d);
/// Interior pinch m = (i, d-i), 2 <= i <= ceil(d/2), max(i, d-i) < d-1.
ExpectedTable expected_interior(int d, int i);

/// Interior index of an n = 2 configuration m = (a, d-a): a when
/// a <= ceil(d/2), else d - a.
int interior_index(const PinchConfig& config);
/// Dispatch on the pinch class for n = 2.
ExpectedTable expected_for(const PinchConfig& config);

struct FormulaValue {
  mpz_class quotient;
  mpz_class remainder;
};
/// C(d, i+1) i (d-i-2) divided by d-1, with remainder.
FormulaValue gorenstein_strand_value(int d, int i);

struct Check {
  std::string label;
  std::string source;
  bool judged = true;
  bool passed = false;
  std::string expected;
  std::string actual;
};

struct VerificationReport {
  PinchConfig config;
  FieldSpec field;
  std::vector<Check> checks;
  std::optional<BettiTable> table;
  std::optional<ClassificationReport> classification;
  std::optional<ExpectedTable> expected;
  std::optional<NonCmWitness> witness;
  bool all_pass = true;

  void add(Check check);
};

struct VerifyOptions {
  EngineOptions engine;
  /// Coarse-degree bound for a full table scan when n >= 3; without it only
  /// the witness (or the normality probe) is run.
  std::optional<int> s_max;
  int normality_degree_bound = 3;
  int normality_multiplier_bound = 3;
};

/// Throws ResourceRefusal when the engine refuses the table scan.
VerificationReport verify(const PinchConfig& config, const FieldSpec& field,
                          const VerifyOptions& options = {});

/// max m = d, or n = 2 and max m = d-1.
bool predicted_cm(const PinchConfig& config);
/// n = 2 only: max m = d-1, or the d = 3 hypersurface with max m = d.
bool predicted_gorenstein(const PinchConfig& config);

/// "beta(i,sd)" for display.
std::string cell_name(const Cell& cell);

}  // namespace pinched
