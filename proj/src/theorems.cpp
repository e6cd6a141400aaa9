#include "pinched/theorems.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "pinched/series.hpp"

namespace pinched {

std::map<Cell, std::int64_t> ExpectedTable::known() const {
  std::map<Cell, std::int64_t> out;
  for (const auto& c : claims) {
    if (c.kind == Claim::Kind::Equals) out.emplace(c.cell, c.value);
  }
  return out;
}

std::set<Cell> ExpectedTable::zero() const {
  std::set<Cell> out;
  for (const auto& c : claims) {
    if (c.kind == Claim::Kind::Zero) out.insert(c.cell);
  }
  return out;
}

std::set<Cell> ExpectedTable::nonzero() const {
  std::set<Cell> out;
  for (const auto& c : claims) {
    if (c.kind == Claim::Kind::NonZero) out.insert(c.cell);
  }
  return out;
}

bool ExpectedTable::covers(const Cell& cell) const {
  if (unknown.count(cell)) return true;
  return std::any_of(claims.begin(), claims.end(), [&](const Claim& c) { return c.cell == cell; });
}

bool ExpectedTable::disjoint() const {
  const auto k = known();
  const auto z = zero();
  const auto nz = nonzero();
  for (const auto& [cell, v] : k) {
    if (z.count(cell) || unknown.count(cell)) return false;
  }
  for (const auto& cell : z) {
    if (unknown.count(cell) || nz.count(cell)) return false;
  }
  for (const auto& cell : nz) {
    if (unknown.count(cell)) return false;
  }
  return true;
}

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("expected value exceeds 64 bits");
  return r;
}

void equals(ExpectedTable& e, Cell cell, std::int64_t value, std::string label) {
  e.claims.push_back({cell, Claim::Kind::Equals, value, std::move(label)});
}

void zero_at(ExpectedTable& e, Cell cell, std::string label) {
  for (const auto& c : e.claims) {
    if (c.cell == cell) return;
  }
  e.claims.push_back({cell, Claim::Kind::Zero, 0, std::move(label)});
}

void nonzero_at(ExpectedTable& e, Cell cell, std::string label) {
  e.claims.push_back({cell, Claim::Kind::NonZero, 0, std::move(label)});
}

}  // namespace

ExpectedTable expected_max_d(int d) {
  if (d < 3) throw std::invalid_argument("expected_max_d needs d >= 3");
  ExpectedTable e;
  e.source = "Betti table for max m = d";
  equals(e, {0, 0}, 1, "unit in degree zero");
  for (int i = 1; i <= d - 2; ++i) {
    equals(e, {i, i + 1}, checked_mul(i, binomial(d - 1, i + 1)), "linear strand i C(d-1,i+1)");
  }
  return e;
}

FormulaValue gorenstein_strand_value(int d, int i) {
  mpz_class num;
  mpz_bin_uiui(num.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(i + 1));
  num *= i * (d - i - 2);
  return {num / (d - 1), num % (d - 1)};
}

ExpectedTable expected_max_d_minus_1(int d) {
  if (d < 3) throw std::invalid_argument("expected_max_d_minus_1 needs d >= 3");
  ExpectedTable e;
  e.source = "Betti table for max m = d-1";
  equals(e, {0, 0}, 1, "unit in degree zero");
  for (int i = 1; i <= d - 3; ++i) {
    const auto v = gorenstein_strand_value(d, i);
    if (v.remainder != 0) {
      throw std::logic_error("C(d,i+1) i (d-i-2)/(d-1) is not integral at d=" +
                             std::to_string(d) + ", i=" + std::to_string(i));
    }
    if (!v.quotient.fits_slong_p()) throw std::overflow_error("strand value exceeds 64 bits");
    equals(e, {i, i + 1}, v.quotient.get_si(), "linear strand C(d,i+1) i(d-i-2)/(d-1)");
  }
  equals(e, {d - 2, d}, 1, "socle in row 2");
  return e;
}

ExpectedTable expected_interior(int d, int i) {
  if (d < 4 || i < 2 || i > (d + 1) / 2 || std::max(i, d - i) >= d - 1) {
    throw std::invalid_argument("expected_interior needs d >= 4, 2 <= i <= ceil(d/2), max(i,d-i) < d-1");
  }
  ExpectedTable e;
  e.source = "Betti table for an interior pinch";
  equals(e, {0, 0}, 1, "unit in degree zero");
  for (int j = 1; j <= i - 1; ++j) {
    const std::int64_t v = checked_mul(d - 1, binomial(d - 2, j)) - binomial(d, j) - binomial(d - 2, j + 1);
    equals(e, {j, j + 1}, v, "linear strand (d-1)C(d-2,j) - C(d,j) - C(d-2,j+1)");
  }
  equals(e, {d - 3, d - 1}, binomial(d, 2) - 1, "row 2 column d-3: C(d,2) - 1");
  equals(e, {d - 2, d}, binomial(d, 3) - binomial(d, 2) + 1, "row 2 column d-2: C(d,3) - C(d,2) + 1");
  equals(e, {d - 1, d + 1}, 1, "row 2 last column: 1");
  nonzero_at(e, {d - 3, d - 2}, "row 1 column d-3 nonvanishing");
  nonzero_at(e, {i - 1, i + 1}, "first nonlinear syzygy at (i-1, (i+1)d)");
  zero_at(e, {i - 2, i}, "linearity threshold: row 2 column i-2 vanishes");
  zero_at(e, {d - 2, d - 1}, "row 1 column d-2 vanishes");
  zero_at(e, {d - 1, d}, "row 1 column d-1 vanishes");
  for (int j = i; j <= d - 3; ++j) {
    if (!e.covers({j, j + 1})) e.unknown.insert({j, j + 1});
  }
  for (int j = i - 1; j <= d - 4; ++j) {
    if (!e.covers({j, j + 2})) e.unknown.insert({j, j + 2});
  }
  return e;
}

int interior_index(const PinchConfig& config) {
  if (config.n() != 2) throw std::invalid_argument("interior index is defined for n = 2");
  const int a = config.m()[0];
  const int d = config.d();
  return a <= (d + 1) / 2 ? a : d - a;
}

ExpectedTable expected_for(const PinchConfig& config) {
  if (config.n() != 2) throw std::invalid_argument("expected tables exist for n = 2 only");
  switch (config.pinch_class()) {
    case PinchClass::MaxD:
      return expected_max_d(config.d());
    case PinchClass::MaxDMinus1:
      return expected_max_d_minus_1(config.d());
    case PinchClass::Interior:
      break;
  }
  return expected_interior(config.d(), interior_index(config));
}

bool predicted_cm(const PinchConfig& config) {
  return config.pinch_class() == PinchClass::MaxD ||
         (config.n() == 2 && config.pinch_class() == PinchClass::MaxDMinus1);
}

bool predicted_gorenstein(const PinchConfig& config) {
  if (config.n() != 2) throw std::invalid_argument("Gorenstein prediction is stated for n = 2");
  return config.pinch_class() == PinchClass::MaxDMinus1 ||
         (config.pinch_class() == PinchClass::MaxD && config.d() == 3);
}

std::string cell_name(const Cell& cell) {
  return "beta(" + std::to_string(cell.first) + "," + std::to_string(cell.second) + "d)";
}

void VerificationReport::add(Check check) {
  if (check.judged && !check.passed) all_pass = false;
  checks.push_back(std::move(check));
}

namespace {

std::string yes_no(bool b) { return b ? "true" : "false"; }

Check judged(std::string label, std::string source, std::string expected, std::string actual,
             bool passed) {
  return {std::move(label), std::move(source), true, passed, std::move(expected), std::move(actual)};
}

bool certify(VerificationReport& rep, const BettiTable& table) {
  std::string actual = "0";
  for (int i = 0; i <= table.range().i_max; ++i) {
    if (auto v = table.at(i, table.range().s_max)) {
      actual = cell_name({i, table.range().s_max}) + "=" + std::to_string(v);
      break;
    }
  }
  const bool ok = table.guard_column_zero();
  rep.add(judged("guard column s=" + std::to_string(table.range().s_max) + " vanishes",
                 "scan certification", "0", actual, ok));
  return ok;
}

void check_shape(VerificationReport& rep, const BettiTable& table, const ExpectedTable& e) {
  for (const auto& c : e.claims) {
    const auto [i, s] = c.cell;
    const bool inside = i >= 0 && s >= 0 && i <= table.range().i_max && s <= table.range().s_max;
    const std::string actual = inside ? std::to_string(table.at(i, s)) : "outside scan";
    const std::int64_t v = inside ? table.at(i, s) : 0;
    std::string expected;
    bool passed = inside;
    switch (c.kind) {
      case Claim::Kind::Equals:
        expected = std::to_string(c.value);
        passed = passed && v == c.value;
        break;
      case Claim::Kind::Zero:
        expected = "0";
        passed = passed && v == 0;
        break;
      case Claim::Kind::NonZero:
        expected = "nonzero";
        passed = passed && v != 0;
        break;
    }
    rep.add(judged(c.label + " " + cell_name(c.cell), e.source, expected, actual, passed));
  }
  for (const auto& cell : e.unknown) {
    Check u{"unknown entry " + cell_name(cell), e.source, false, true, "*",
            std::to_string(table.at(cell.first, cell.second))};
    rep.add(std::move(u));
  }
  std::ostringstream offenders;
  bool clean = true;
  for (const auto& [cell, v] : table.entries()) {
    if (v == 0 || e.covers(cell)) continue;
    offenders << (clean ? "" : " ") << cell_name(cell) << "=" << v;
    clean = false;
  }
  rep.add(judged("all other cells vanish", e.source, "0", clean ? "0" : offenders.str(), clean));
}

void verify_plane(VerificationReport& rep, const VerifyOptions& options) {
  const PinchConfig& config = rep.config;
  const int d = config.d();
  const int i_max = config.big_n() - 2;
  const int s_max = *default_s_max(config, i_max);
  BettiTable table = graded_betti(config, rep.field, i_max, s_max, options.engine);
  rep.table = table;
  if (!certify(rep, table)) return;

  const ExpectedTable e = expected_for(config);
  rep.expected = e;
  check_shape(rep, table, e);

  const ClassificationReport cr = classify(table);
  rep.classification = cr;
  const std::string cls = "Cohen-Macaulay and Gorenstein classification";
  rep.add(judged("Cohen-Macaulay iff max m >= d-1", cls, yes_no(predicted_cm(config)),
                 yes_no(cr.is_cm), cr.is_cm == predicted_cm(config)));
  const int want_pdim = predicted_cm(config) ? config.big_n() - 1 - config.n() : config.big_n() - 2;
  rep.add(judged("projective dimension", cls, std::to_string(want_pdim), std::to_string(cr.pdim),
                 cr.pdim == want_pdim));
  rep.add(judged("Gorenstein iff max m = d-1", cls, yes_no(predicted_gorenstein(config)),
                 yes_no(cr.is_gorenstein), cr.is_gorenstein == predicted_gorenstein(config)));

  int want_linear = 0;
  switch (config.pinch_class()) {
    case PinchClass::MaxD: want_linear = d - 2; break;
    case PinchClass::MaxDMinus1: want_linear = d - 3; break;
    case PinchClass::Interior: want_linear = interior_index(config) - 2; break;
  }
  rep.add(judged("linearity index", "linearity of the resolution", std::to_string(want_linear),
                 std::to_string(cr.linearity_index), cr.linearity_index == want_linear));
  const int want_reg = config.pinch_class() == PinchClass::MaxD ? 1 : 2;
  rep.add(judged("regularity", "regularity of the pinched ring", std::to_string(want_reg),
                 std::to_string(cr.observed_regularity), cr.observed_regularity == want_reg));

  const bool kpoly = k_polynomial_check(table, config);
  rep.add(judged("K-polynomial equals P(z)(1-z^d)^(N-1)", "Hilbert series", "true", yes_no(kpoly),
                 kpoly));
}

void verify_higher(VerificationReport& rep, const VerifyOptions& options) {
  const PinchConfig& config = rep.config;
  const bool cm = predicted_cm(config);
  if (cm) {
    const auto w = normality_probe(config, options.normality_degree_bound,
                                   options.normality_multiplier_bound);
    rep.add(judged("no normality obstruction up to degree " +
                       std::to_string(options.normality_degree_bound) + "d",
                   "normality of the max m = d semigroup", "none",
                   w ? w->z.str() + " x" + std::to_string(w->multiplier) : "none", !w));
  } else {
    const NonCmWitness w = witness_non_cm(config, rep.field);
    rep.witness = w;
    rep.add(judged("non-Cohen-Macaulay witness at h=" + w.h.str() + ", i=" + std::to_string(w.i),
                   "Cohen-Macaulay and Gorenstein classification", "nonzero",
                   std::to_string(w.dim), w.dim > 0));
  }
  if (!options.s_max) return;

  const int i_max = config.big_n() - 2;
  BettiTable table = graded_betti(config, rep.field, i_max, *options.s_max, options.engine);
  rep.table = table;
  if (!certify(rep, table)) return;
  const ClassificationReport cr = classify(table);
  rep.classification = cr;
  rep.add(judged("Cohen-Macaulay iff max m = d", "Cohen-Macaulay and Gorenstein classification",
                 yes_no(cm), yes_no(cr.is_cm), cr.is_cm == cm));
  const int lo = config.big_n() - config.n() - 1, hi = config.big_n() - 2;
  rep.add(judged("projective dimension bounds", "Auslander-Buchsbaum",
                 "[" + std::to_string(lo) + "," + std::to_string(hi) + "]", std::to_string(cr.pdim),
                 lo <= cr.pdim && cr.pdim <= hi));
  const bool kpoly = k_polynomial_check(table, config);
  rep.add(judged("K-polynomial equals P(z)(1-z^d)^(N-1)", "Hilbert series", "true", yes_no(kpoly),
                 kpoly));
}

}  // namespace

VerificationReport verify(const PinchConfig& config, const FieldSpec& field,
                          const VerifyOptions& options) {
  VerificationReport rep{config, field, {}, {}, {}, {}, {}, true};
  if (config.n() == 2) {
    verify_plane(rep, options);
  } else {
    verify_higher(rep, options);
  }
  return rep;
}

}  // namespace pinched
