#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pinched/betti.hpp"
#include "pinched/series.hpp"
#include "pinched/theorems.hpp"

using namespace pinched;

namespace {

RationalFunction over_square(const Polynomial& num, int d) {
  return RationalFunction(num, Polynomial::one_minus_power(d, 2));
}

Polynomial in_z(std::initializer_list<std::pair<int, long>> terms) {
  Polynomial p;
  for (auto [e, c] : terms) p += Polynomial::monomial(c, e);
  return p;
}

std::vector<PinchConfig> all_configs(int n, int d) {
  std::vector<PinchConfig> out;
  for (const auto& m : compositions(n, d)) {
    try {
      out.emplace_back(n, d, m);
    } catch (const std::invalid_argument&) {
    }
  }
  return out;
}

}  // namespace

TEST(Polynomial, Arithmetic) {
  const Polynomial a{1, 2, 0, 0};
  EXPECT_EQ(a.degree(), 1);
  EXPECT_EQ(a * a, (Polynomial{1, 4, 4}));
  EXPECT_EQ(Polynomial::one_minus_power(2, 2), (Polynomial{1, 0, -2, 0, 1}));
  const auto [q, r] = divmod(Polynomial{-1, 0, 1}, Polynomial{-1, 1});
  EXPECT_EQ(q, (Polynomial{1, 1}));
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(gcd(Polynomial{-1, 0, 1}, Polynomial{1, 2, 1}), (Polynomial{1, 1}));
  EXPECT_EQ((Polynomial{0, 0, 3}).valuation(), 2);
  EXPECT_EQ((Polynomial{1, 2, 3}).reversed(), (Polynomial{3, 2, 1}));
  EXPECT_EQ((Polynomial{1, 0, 5}).compress(2), (Polynomial{1, 5}));
  EXPECT_THROW((Polynomial{1, 1}).compress(2), std::invalid_argument);
  EXPECT_THROW(divmod(Polynomial{1}, Polynomial{}), std::domain_error);
}

TEST(RationalFunction, LowestTermsAndNormalization) {
  const RationalFunction f(Polynomial{-2, 0, 2}, Polynomial{-2, 2});
  EXPECT_TRUE(f.is_polynomial());
  EXPECT_EQ(f.numerator(), (Polynomial{1, 1}));
  const RationalFunction g(Polynomial{3}, Polynomial{2, -4});
  EXPECT_EQ(g.denominator(), (Polynomial{1, -2}));
  EXPECT_EQ(g.numerator(), Polynomial::constant(mpq_class(3, 2)));
  const auto [num, den] = g.integer_form();
  EXPECT_EQ(num, (std::vector<mpz_class>{3}));
  EXPECT_EQ(den, (std::vector<mpz_class>{2, -4}));
  EXPECT_THROW(RationalFunction(Polynomial{1}, Polynomial{}), std::domain_error);
}

TEST(HilbertClosed, KnownExamples) {
  for (int d = 3; d <= 9; ++d) {
    EXPECT_EQ(hilbert_closed(PinchConfig(2, d, Multidegree{d, 0})),
              over_square(in_z({{0, 1}, {d, d - 2}}), d));
    EXPECT_EQ(hilbert_closed(PinchConfig(2, d, Multidegree{d - 1, 1})),
              over_square(in_z({{0, 1}, {d, d - 2}, {2 * d, 1}}), d));
  }
  const auto c = hilbert_closed(PinchConfig(2, 3, Multidegree{3, 0})).expand(9);
  EXPECT_EQ(c[0], 1);
  EXPECT_EQ(c[3], 3);
  EXPECT_EQ(c[6], 5);
  EXPECT_EQ(c[9], 7);
  EXPECT_EQ(c[4], 0);
}

TEST(HilbertClosed, MatchesCountingThroughDegreeTwelveD) {
  for (int n = 2; n <= 3; ++n) {
    for (int d = 2; d <= 5; ++d) {
      for (const auto& c : all_configs(n, d)) {
        EXPECT_EQ(hilbert_closed(c).expand(12 * d), hilbert_by_counting(c, 12 * d)) << c.str();
      }
    }
  }
}

TEST(HilbertClosed, CountsAgreeWithSumsetOracle) {
  const auto layers = oracle::semigroup_layers(3, 3, {1, 1, 1}, 5);
  const auto coeffs = hilbert_closed(PinchConfig(3, 3, Multidegree{1, 1, 1})).expand(15);
  for (int t = 0; t <= 5; ++t) EXPECT_EQ(coeffs[3 * t], static_cast<long>(layers[t].size()));
}

TEST(VeroneseModule, KnownExamples) {
  for (int d = 2; d <= 8; ++d) {
    EXPECT_EQ(veronese_module_series(2, d, 0), over_square(in_z({{0, 1}, {d, d - 1}}), d));
    for (int k = 0; k < d; ++k) {
      EXPECT_EQ(veronese_module_series(1, d, k),
                RationalFunction(Polynomial::monomial(1, k), Polynomial::one_minus_power(d, 1)));
    }
  }
  const auto c = veronese_module_series(3, 2, 1).expand(41);
  for (int t = 0; t <= 20; ++t) {
    EXPECT_EQ(c[1 + 2 * t], oracle::binom(2 * t + 3, 2));
    // Direct count of degree 1 + 2t monomials in three variables.
    EXPECT_EQ(c[1 + 2 * t], static_cast<long>(oracle::all_vectors(3, 1 + 2 * t).size()));
    EXPECT_EQ(c[2 * t], 0);
  }
  EXPECT_THROW(veronese_module_series(2, 3, 3), std::invalid_argument);
  EXPECT_THROW(veronese_module_series(0, 3, 0), std::invalid_argument);
}

TEST(VeroneseModule, DerivativeIdentity) {
  for (int n = 1; n <= 4; ++n) {
    for (int d = 2; d <= 6; ++d) {
      for (int k = 1; k < d; ++k) {
        const auto lhs = veronese_module_series(n, d, k).derivative();
        const auto rhs = RationalFunction(Polynomial{n}) * veronese_module_series(n + 1, d, k - 1);
        EXPECT_EQ(lhs, rhs) << n << ' ' << d << ' ' << k;
      }
    }
  }
}

TEST(HPolynomial, KnownExamples) {
  EXPECT_EQ(h_polynomial(PinchConfig(2, 5, Multidegree{4, 1})), (Polynomial{1, 0, -5, 5, 0, -1}));
  for (int d = 3; d <= 10; ++d) {
    EXPECT_EQ(h_polynomial_closed_form(d, PinchClass::MaxD).coeff(0), 1);
    EXPECT_EQ(h_polynomial_closed_form(d, PinchClass::Interior).coeff(1), 0);
  }
  EXPECT_THROW(h_polynomial(PinchConfig(3, 3, Multidegree{3, 0, 0})), std::invalid_argument);
}

TEST(HPolynomial, ClosedFormsMatchTheSeries) {
  for (int d = 3; d <= 10; ++d) {
    for (int a = 0; a <= d; ++a) {
      const PinchConfig c(2, d, Multidegree{a, d - a});
      EXPECT_EQ(h_polynomial(c), h_polynomial_closed_form(d, c.pinch_class())) << c.str();
    }
  }
}

TEST(HPolynomial, OtherClassesHaveNoTermPastD) {
  for (int d = 3; d <= 10; ++d) {
    EXPECT_LE(h_polynomial_closed_form(d, PinchClass::MaxD).degree(), d);
    EXPECT_LE(h_polynomial_closed_form(d, PinchClass::MaxDMinus1).degree(), d);
  }
}

TEST(KPolynomial, KnownExamples) {
  for (const auto& [c, totals] :
       std::vector<std::pair<PinchConfig, std::vector<std::int64_t>>>{
           {PinchConfig(2, 4, Multidegree{4, 0}), {1, 3, 2}},
           {PinchConfig(2, 5, Multidegree{4, 1}), {1, 5, 5, 1}}}) {
    const int n_minus_2 = c.big_n() - 2;
    auto table = graded_betti(c, FieldSpec::default_field(), n_minus_2, n_minus_2 + 3);
    for (std::size_t i = 0; i < totals.size(); ++i) EXPECT_EQ(table.total(static_cast<int>(i)), totals[i]);
    EXPECT_TRUE(k_polynomial_check(table, c));
    table.add(1, 2, 1);
    EXPECT_FALSE(k_polynomial_check(table, c));
  }
}

TEST(KPolynomial, RejectsUncertifiedTable) {
  const PinchConfig c(2, 4, Multidegree{4, 0});
  BettiTable table(c, FieldSpec::default_field(), {2, 5});
  table.add(0, 0, 1);
  table.add(2, 5, 1);
  EXPECT_THROW(k_polynomial_check(table, c), std::invalid_argument);
}

TEST(Canonical, PartnerExamples) {
  EXPECT_EQ(canonical_partner(2, 5, 1), 2);
  EXPECT_EQ(canonical_partner(3, 4, 2), 3);
  for (int n = 1; n <= 4; ++n) {
    for (int d = n; d <= 8; ++d) EXPECT_EQ(canonical_partner(n, d, d - n), 0);
  }
  EXPECT_THROW(canonical_partner(2, 5, 5), std::invalid_argument);
  EXPECT_THROW(canonical_partner(2, 5, -1), std::invalid_argument);
}

TEST(Canonical, PartnerIsAnInvolution) {
  for (int n = 1; n <= 5; ++n) {
    for (int d = 1; d <= 9; ++d) {
      for (int k = 0; k < d; ++k) EXPECT_EQ(canonical_partner(n, d, canonical_partner(n, d, k)), k);
    }
  }
}

TEST(Canonical, SeriesExamples) {
  const auto a = canonical_series_check(1, 1, 0);
  EXPECT_TRUE(a.holds);
  EXPECT_EQ(a.shift, 1);
  EXPECT_EQ(a.sign, 1);
  const auto b = canonical_series_check(2, 2, 0);
  EXPECT_TRUE(b.holds);
  EXPECT_EQ(b.shift, 2);
  EXPECT_TRUE(canonical_series_check(2, 5, 1).holds);
}

TEST(Canonical, HoldsForSmallParameters) {
  for (int n = 1; n <= 3; ++n) {
    for (int d = 1; d <= 6; ++d) {
      for (int k = 0; k < d; ++k) {
        const auto r = canonical_series_check(n, d, k);
        EXPECT_TRUE(r.holds) << n << ' ' << d << ' ' << k;
        EXPECT_EQ(r.sign, 1);
        EXPECT_EQ(r.shift, n);
      }
    }
  }
}

TEST(Canonical, ReciprocalSubstitution) {
  // 1/(1 - 1/z) = -z / (1 - z)
  const auto r = substitute_reciprocal(RationalFunction(Polynomial{1}, Polynomial{1, -1}));
  EXPECT_EQ(r.value * RationalFunction(Polynomial::monomial(1, r.shift)) ,
            RationalFunction(Polynomial{0, -1}, Polynomial{1, -1}));
}

TEST(GorensteinStrand, IntegralForAllDUpTo64) {
  for (int d = 4; d <= 64; ++d) {
    for (int i = 1; i <= d - 3; ++i) {
      const auto v = gorenstein_strand_value(d, i);
      EXPECT_EQ(v.remainder, 0) << "d=" << d << " i=" << i;
      EXPECT_GT(v.quotient, 0);
    }
  }
}
