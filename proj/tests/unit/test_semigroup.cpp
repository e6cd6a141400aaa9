#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "pinched/semigroup.hpp"
#include "pinched/series.hpp"

using namespace pinched;

namespace {

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

TEST(PinchConfig, Validation) {
  EXPECT_THROW(PinchConfig(1, 3, Multidegree{3}), std::invalid_argument);
  EXPECT_THROW(PinchConfig(2, 1, Multidegree{1, 0}), std::invalid_argument);
  EXPECT_THROW(PinchConfig(2, 3, Multidegree{2, 0}), std::invalid_argument);
  EXPECT_THROW(PinchConfig(2, 3, Multidegree{2, 1, 0}), std::invalid_argument);
  EXPECT_THROW(PinchConfig(2, 2, Multidegree{1, 1}), std::invalid_argument);
  EXPECT_NO_THROW(PinchConfig(2, 2, Multidegree{2, 0}));
}

TEST(PinchConfig, Classes) {
  EXPECT_EQ(PinchConfig(2, 5, Multidegree{0, 5}).pinch_class(), PinchClass::MaxD);
  EXPECT_EQ(PinchConfig(2, 5, Multidegree{4, 1}).pinch_class(), PinchClass::MaxDMinus1);
  EXPECT_EQ(PinchConfig(2, 5, Multidegree{2, 3}).pinch_class(), PinchClass::Interior);
  EXPECT_EQ(PinchConfig(3, 3, Multidegree{1, 1, 1}).pinch_class(), PinchClass::Interior);
  EXPECT_EQ(to_string(PinchClass::MaxDMinus1), "max_m_eq_d_minus_1");
  // n = 2, d = 3 has no interior pinch.
  for (const auto& c : all_configs(2, 3)) EXPECT_NE(c.pinch_class(), PinchClass::Interior);
}

TEST(PinchConfig, PinchIndexAndShape) {
  const auto c = PinchConfig::from_pinch_index(6, 2);
  EXPECT_EQ(c.m(), (Multidegree{2, 4}));
  EXPECT_EQ(c.big_n(), 7);
  EXPECT_EQ(c.peak(), 1);
  const PinchConfig t(3, 4, Multidegree{0, 1, 3});
  EXPECT_EQ(t.peak(), 2);
  EXPECT_EQ(t.tail(), 1);
  EXPECT_EQ(t.big_n(), 15);
  EXPECT_EQ(t.normalized().m(), (Multidegree{3, 1, 0}));
  EXPECT_EQ(t.normalize(Multidegree{5, 6, 7}), (Multidegree{7, 6, 5}));
}

TEST(Generators, KnownExamples) {
  const auto g = generate_generators(PinchConfig(2, 3, Multidegree{3, 0}));
  ASSERT_EQ(g.size(), 3);
  EXPECT_EQ(g[0], (Multidegree{2, 1}));
  EXPECT_EQ(g[1], (Multidegree{1, 2}));
  EXPECT_EQ(g[2], (Multidegree{0, 3}));

  const auto g5 = generate_generators(PinchConfig(2, 5, Multidegree{2, 3}));
  EXPECT_EQ(g5.size(), 5);
  EXPECT_EQ(g5.index_of(Multidegree{2, 3}), -1);
  EXPECT_EQ(g5.index_of(Multidegree{3, 2}), 2);

  EXPECT_EQ(generate_generators(PinchConfig(3, 3, Multidegree{1, 1, 1})).size(), 9);
}

TEST(Generators, InvariantsForAllSmallConfigs) {
  for (int n = 2; n <= 4; ++n) {
    for (int d = 2; d <= 5; ++d) {
      for (const auto& c : all_configs(n, d)) {
        const auto g = generate_generators(c);
        EXPECT_EQ(g.size(), c.big_n() - 1);
        EXPECT_EQ(g.big_n, c.big_n());
        EXPECT_TRUE(std::is_sorted(g.gens.rbegin(), g.gens.rend()));
        EXPECT_EQ(std::set<Multidegree>(g.gens.begin(), g.gens.end()).size(), g.gens.size());
        for (const auto& a : g.gens) EXPECT_EQ(a.total(), d);
        EXPECT_EQ(g.index_of(c.m()), -1);
      }
    }
  }
}

TEST(Membership, KnownExamples) {
  const PinchConfig c21(2, 3, Multidegree{2, 1});
  EXPECT_FALSE(is_member_closed(Multidegree{5, 1}, c21));
  EXPECT_TRUE(is_member_closed(Multidegree{0, 0}, c21));
  const PinchConfig c30(2, 3, Multidegree{3, 0});
  EXPECT_TRUE(is_member_closed(Multidegree{4, 2}, c30));
  EXPECT_FALSE(is_member_closed(Multidegree{5, 1}, c30));
  EXPECT_TRUE(is_member_closed(Multidegree::zero(3), PinchConfig(3, 4, Multidegree{2, 1, 1})));

  EXPECT_TRUE(is_member_bruteforce(Multidegree{2, 4}, PinchConfig(2, 3, Multidegree{1, 2}), 6));
  EXPECT_FALSE(is_member_bruteforce(Multidegree{3, 0}, c30, 3));
  EXPECT_TRUE(is_member_bruteforce(Multidegree{4, 2}, c30, 6));
  EXPECT_FALSE(is_member_bruteforce(Multidegree{5, 1}, c30, 6));
}

TEST(Membership, DegreeNotMultipleOfD) {
  const PinchConfig c(2, 4, Multidegree{2, 2});
  EXPECT_FALSE(is_member_closed(Multidegree{3, 2}, c));
  EXPECT_FALSE(is_member_bruteforce(Multidegree{3, 2}, c, 5));
}

TEST(Membership, Errors) {
  const PinchConfig c(2, 4, Multidegree{2, 2});
  EXPECT_THROW(is_member_closed(Multidegree{4, 0, 0}, c), std::invalid_argument);
  BruteForceMembership oracle(c, 8);
  EXPECT_THROW(oracle.contains(Multidegree{8, 4}), std::out_of_range);
  EXPECT_TRUE(oracle.contains(Multidegree{4, 4}));
  EXPECT_GT(oracle.memo_size(), 0u);
}

TEST(Membership, ClosedMatchesSumsetOracle) {
  // Independent of both library oracles: repeated sumsets of the generators.
  for (int n = 2; n <= 3; ++n) {
    for (int d = 2; d <= (n == 2 ? 6 : 4); ++d) {
      for (const auto& c : all_configs(n, d)) {
        const int t_max = n == 2 ? 6 : 4;
        const auto layers = oracle::semigroup_layers(n, d, c.m().coords(), t_max);
        for (int t = 0; t <= t_max; ++t) {
          for (const auto& v : oracle::all_vectors(n, t * d)) {
            EXPECT_EQ(is_member_closed(Multidegree(v), c), layers[t].count(v) == 1)
                << c.str() << " h=" << Multidegree(v).str();
          }
        }
      }
    }
  }
}

TEST(EnumerateDegree, KnownExamples) {
  EXPECT_EQ(enumerate_degree(PinchConfig(2, 3, Multidegree{3, 0}), 1).size(), 3u);
  const auto six = enumerate_degree(PinchConfig(2, 3, Multidegree{2, 1}), 2);
  EXPECT_EQ(six.size(), 6u);
  EXPECT_EQ(std::count(six.begin(), six.end(), Multidegree{5, 1}), 0);
  EXPECT_EQ(enumerate_degree(PinchConfig(2, 3, Multidegree{3, 0}), 2).size(), 5u);
  const auto zero = enumerate_degree(PinchConfig(3, 3, Multidegree{3, 0, 0}), 0);
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_EQ(zero[0], Multidegree::zero(3));
}

TEST(EnumerateDegree, SortedAndCountedByTheSeries) {
  for (int n = 2; n <= 3; ++n) {
    for (int d = 3; d <= 5; ++d) {
      for (const auto& c : all_configs(n, d)) {
        const auto coeffs = hilbert_closed(c).expand(6 * d);
        for (int t = 0; t <= 6; ++t) {
          const auto e = enumerate_degree(c, t);
          EXPECT_TRUE(std::is_sorted(e.rbegin(), e.rend()));
          EXPECT_EQ(mpq_class(static_cast<long>(e.size())), coeffs[t * d]) << c.str() << " t=" << t;
        }
      }
    }
  }
}

TEST(Normality, KnownExamples) {
  EXPECT_FALSE(normality_probe(PinchConfig(2, 4, Multidegree{4, 0}), 6, 4).has_value());

  const auto w = normality_probe(PinchConfig(2, 5, Multidegree{2, 3}), 6, 4);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->z, (Multidegree{2, 3}));
  EXPECT_EQ(w->multiplier, 2);
  const PinchConfig c23(2, 5, Multidegree{2, 3});
  EXPECT_FALSE(is_member_bruteforce(w->z, c23, 10));
  EXPECT_TRUE(is_member_bruteforce(w->z.scaled(2), c23, 10));

  const auto w31 = normality_probe(PinchConfig(2, 4, Multidegree{3, 1}), 6, 4);
  ASSERT_TRUE(w31.has_value());
  EXPECT_EQ(w31->z, (Multidegree{3, 1}));
  EXPECT_EQ(w31->multiplier, 2);

  EXPECT_THROW(normality_probe(c23, 0, 4), std::invalid_argument);
}

TEST(Properties, PermutationEquivariance) {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 40; ++trial) {
    const int d = 2 + static_cast<int>(rng() % 5);
    const auto comps = compositions(3, d);
    const Multidegree m = comps[rng() % comps.size()];
    std::optional<PinchConfig> c;
    try {
      c.emplace(3, d, m);
    } catch (const std::invalid_argument&) {
      continue;
    }
    std::vector<int> perm{0, 1, 2};
    std::shuffle(perm.begin(), perm.end(), rng);
    const PinchConfig pc(3, d, m.permuted(perm));
    auto g = generate_generators(*c).gens;
    auto pg = generate_generators(pc).gens;
    std::set<Multidegree> mapped;
    for (const auto& a : g) mapped.insert(a.permuted(perm));
    EXPECT_EQ(mapped, std::set<Multidegree>(pg.begin(), pg.end()));
    for (int k = 0; k < 30; ++k) {
      const int t = static_cast<int>(rng() % 5);
      const auto pts = compositions(3, t * d);
      const Multidegree h = pts[rng() % pts.size()];
      EXPECT_EQ(is_member_closed(h, *c), is_member_closed(h.permuted(perm), pc));
    }
  }
}

TEST(Properties, ClosedUnderAddition) {
  std::mt19937 rng(777);
  for (int n = 2; n <= 3; ++n) {
    for (int d = 3; d <= 6; ++d) {
      for (const auto& c : all_configs(n, d)) {
        std::vector<Multidegree> members;
        for (int t = 0; t <= 3; ++t) {
          for (auto& h : enumerate_degree(c, t)) members.push_back(std::move(h));
        }
        for (int k = 0; k < 50; ++k) {
          const auto& a = members[rng() % members.size()];
          const auto& b = members[rng() % members.size()];
          EXPECT_TRUE(is_member_closed(a + b, c)) << c.str() << ' ' << a.str() << " + " << b.str();
        }
      }
    }
  }
}
