#include <gtest/gtest.h>

#include <bit>
#include <random>

#include "pinched/betti.hpp"
#include "pinched/series.hpp"

using namespace pinched;

namespace {

struct Tally {
  int complexes = 0;
  int nonvoid = 0;
  int failures = 0;
};

// Runs every chain-level property on each complex the engine builds.
ComplexObserver checker(Tally& tally, bool all_fields) {
  return [&tally, all_fields](const SquarefreeDivisorComplex& built, const HomologyProfile& profile) {
    ++tally.complexes;
    const SimplicialComplex& c = built.complex;
    bool ok = boundary_squares_to_zero(c);
    ok = ok && profile.euler_characteristic() == reduced_euler_characteristic(c);
    if (!c.is_void() && c.vertex_set() != 0) {
      ++tally.nonvoid;
      ok = ok && alexander_duality_holds(c, FieldSpec::default_field());
      const auto dual = alexander_dual(c);
      ok = ok && (dual.is_void() ? c == SimplicialComplex::simplex(c.ground_size(), c.vertex_set())
                                 : alexander_dual(dual) == c);
    }
    if (all_fields) {
      ok = ok && reduced_homology(c, FieldSpec::prime(2)) == profile &&
           reduced_homology(c, FieldSpec::rationals()) == profile;
    }
    if (!ok) {
      ++tally.failures;
      ADD_FAILURE() << "property failure at h=" << built.degree.str();
    }
  };
}

}  // namespace

TEST(Properties, ChainLevelInvariantsOnEveryTwoVariableComplex) {
  Tally tally;
  EngineOptions opts;
  opts.observer = checker(tally, true);
  for (int d = 3; d <= 7; ++d) {
    for (int a = 0; a <= d; ++a) {
      const PinchConfig c(2, d, Multidegree{a, d - a});
      graded_betti(c, FieldSpec::default_field(), c.big_n() - 2, c.big_n() + 1, opts);
    }
  }
  EXPECT_EQ(tally.failures, 0);
  EXPECT_GT(tally.complexes, 1000);
  EXPECT_GT(tally.nonvoid, 1000);
}

TEST(Properties, ChainLevelInvariantsForThreeVariables) {
  Tally tally;
  EngineOptions opts;
  opts.observer = checker(tally, false);
  opts.threads = 4;
  for (const auto& m : {Multidegree{3, 0, 0}, Multidegree{2, 1, 0}, Multidegree{1, 1, 1}}) {
    const PinchConfig c(3, 3, m);
    graded_betti(c, FieldSpec::default_field(), c.big_n() - 2, 11, opts);
  }
  EXPECT_EQ(tally.failures, 0);
  EXPECT_GT(tally.complexes, 500);
}

TEST(Properties, EulerCharacteristicOfTheTableMatchesTheSeries) {
  // Σ_i (-1)^i β_{i,s} summed over s is the K-polynomial at z = 1, which
  // vanishes since the ring has positive dimension.
  for (int d = 3; d <= 7; ++d) {
    for (int a = 0; a <= d; ++a) {
      const PinchConfig c(2, d, Multidegree{a, d - a});
      const auto t = graded_betti(c, FieldSpec::default_field(), c.big_n() - 2, c.big_n() + 1);
      std::int64_t alt = 0;
      for (int i = 0; i <= t.range().i_max; ++i) alt += (i % 2 ? -1 : 1) * t.total(i);
      EXPECT_EQ(alt, 0) << c.str();
    }
  }
}

TEST(Properties, RandomMembersGiveConsistentComplexes) {
  std::mt19937 rng(8128);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 2);
    const int d = 3 + static_cast<int>(rng() % (n == 2 ? 5 : 2));
    const auto comps = compositions(n, d);
    std::optional<PinchConfig> c;
    try {
      c.emplace(n, d, comps[rng() % comps.size()]);
    } catch (const std::invalid_argument&) {
      continue;
    }
    const auto pts = enumerate_degree(*c, 1 + static_cast<int>(rng() % 4));
    const Multidegree& h = pts[rng() % pts.size()];
    const auto built = build_divisor_complex(h, *c);
    const auto& cx = built.complex;
    ASSERT_FALSE(cx.is_void());
    EXPECT_TRUE(boundary_squares_to_zero(cx));
    // Faces have at most |h|/d vertices, so homology lives below that.
    EXPECT_LE(cx.dimension(), h.total() / d - 1);
    EXPECT_EQ(reduced_homology(cx, FieldSpec::default_field()).euler_characteristic(),
              reduced_euler_characteristic(cx));
    if (cx.vertex_set() != 0) EXPECT_TRUE(alexander_duality_holds(cx, FieldSpec::prime(2)));
  }
}
