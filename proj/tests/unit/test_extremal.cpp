#include <gtest/gtest.h>

#include "rainbow/errors.hpp"
#include "rainbow/extremal.hpp"
#include "rainbow/hall.hpp"
#include "rainbow/oracles.hpp"
#include "rainbow/shifting.hpp"
#include "test_support.hpp"

namespace rainbow {
namespace {

TEST(Formulas, FR2) {
  EXPECT_EQ(f_r2(4, 2), 3U);
  EXPECT_EQ(f_r2(10, 3), 17U);
  EXPECT_EQ(f_r2(10, 1), 0U);
  EXPECT_THROW(f_r2(5, 3), InputError);
}

TEST(Formulas, FLargeN) {
  EXPECT_EQ(f_large_n(6, 2, 3), 9U);
  EXPECT_EQ(f_large_n(5, 2, 2), 4U);
  for (int n = 2; n <= 12; ++n) {
    for (int r = 1; r <= n; ++r) EXPECT_EQ(f_large_n(n, r, 2), binomial(n - 1, r - 1));
  }
}

TEST(Formulas, G) {
  EXPECT_EQ(g_formula(2, 2, 2), 2U);
  EXPECT_EQ(g_formula(3, 3, 2), 9U);
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(g_formula(n, 3, 1), 0U);
}

TEST(Formulas, Binomial) {
  EXPECT_EQ(binomial(5, 2), 10U);
  EXPECT_EQ(binomial(5, 0), 1U);
  EXPECT_EQ(binomial(2, 5), 0U);
  EXPECT_EQ(binomial(40, 20), 137846528820ULL);
}

TEST(StarFamily, SizesAndNoRainbowMatching) {
  for (int n = 1; n <= 4; ++n) {
    for (int r = 1; r <= 3; ++r) {
      for (int k = 1; k <= 3; ++k) {
        if (k - 1 > n) continue;
        const Family f = star_family(n, r, k);
        ASSERT_EQ(f.k(), static_cast<std::size_t>(k));
        for (const Hypergraph& h : f) EXPECT_EQ(h.size(), g_formula(n, r, k));
        EXPECT_TRUE(is_shifted(f));
        if (k >= 2) {
          EXPECT_FALSE(rainbow_exact(f)) << n << " " << r << " " << k;
        }
      }
    }
  }
  EXPECT_EQ(star_family(3, 3, 3)[0].size(), 18U);
  EXPECT_THROW(star_family(2, 2, 4), InputError);
}

TEST(StarFamily, AddingAnyEdgeToAllMembersCreatesAMatching) {
  for (int n = 1; n <= 3; ++n) {
    for (int r = 1; r <= 2; ++r) {
      for (int k = 2; k <= 3; ++k) {
        if (k - 1 > n) continue;
        const Family base = star_family(n, r, k);
        for (const Edge& e : base.ground().universe()) {
          if (base[0].contains(e)) continue;
          std::vector<Hypergraph> members(base.members());
          for (Hypergraph& h : members) h.insert(e);
          const Family grown(base.ground(), std::move(members));
          EXPECT_TRUE(rainbow_exact(grown)) << n << " " << r << " " << k;
        }
      }
    }
  }
}

TEST(StealFamily, SizesAndShape) {
  const Family f = steal_family(3, 6);
  std::vector<std::size_t> sizes;
  std::size_t total = 0;
  for (const Hypergraph& h : f) {
    sizes.push_back(h.size());
    total += h.size();
  }
  EXPECT_EQ(sizes, (std::vector<std::size_t>{9, 21, 21, 21}));
  EXPECT_EQ(total, 72U);
  EXPECT_TRUE(is_shifted(f));
  EXPECT_FALSE(check_hall_condition(f).holds);
  EXPECT_FALSE(hall_size_algorithm(f).success());
  const auto m = rainbow_exact(f);
  ASSERT_TRUE(m);
  EXPECT_TRUE(testing::validates(f, *m));
}

TEST(StealFamily, PaperWitnessIsARainbowMatching) {
  const Family f = steal_family(3, 6);
  const RainbowMatching witness{{Edge{0, 2}, Edge{5, 0}, Edge{1, 4}, Edge{2, 3}}};
  EXPECT_TRUE(is_rainbow_matching(f, witness));
}

TEST(StealFamily, TotalsAcrossParameters) {
  for (int q = 3; q <= 5; ++q) {
    for (int n = q + 1; n <= 8; ++n) {
      const Family f = steal_family(q, n);
      std::size_t total = 0;
      for (const Hypergraph& h : f) total += h.size();
      EXPECT_EQ(total, static_cast<std::size_t>(q * (q + 1) * n));
      EXPECT_EQ(f[1].size(), static_cast<std::size_t>((q + 1) * n - q));
      EXPECT_FALSE(check_hall_condition(f).holds);
    }
  }
}

TEST(StealFamily, RejectsBadParameters) {
  EXPECT_THROW(steal_family(2, 6), InputError);
  EXPECT_THROW(steal_family(4, 4), InputError);
}

TEST(R3Counterexample, EnumeratedCounts) {
  for (int n = 2; n <= 4; ++n) {
    const Family f = r3_counterexample(n);
    ASSERT_EQ(f.k(), 2U);
    EXPECT_EQ(f[0].edges(), (std::vector<Edge>{{0, 0, 0}}));
    // Brute count of [n]^3 edges meeting (1,1,1).
    std::size_t meeting = 0;
    for (const Edge& e : testing::all_edges(f.ground())) {
      if (e[0] == 0 || e[1] == 0 || e[2] == 0) ++meeting;
    }
    EXPECT_EQ(f[1].size(), meeting);
    EXPECT_EQ(f[1].size(), static_cast<std::size_t>(n * n * n - (n - 1) * (n - 1) * (n - 1)));
    EXPECT_FALSE(rainbow_exact(f));
    const std::size_t total = f[0].size() + f[1].size();
    EXPECT_EQ(total, static_cast<std::size_t>(3 * n * n - 3 * n + 2));
    EXPECT_EQ(total > static_cast<std::size_t>(2 * n * n), n >= 3);
  }
  EXPECT_THROW(r3_counterexample(1), InputError);
}

TEST(EkrStar, SizesAndNu) {
  EXPECT_EQ(ekr_star(4, 2).size(), 3U);
  EXPECT_EQ(ekr_star(6, 3).size(), 10U);
  for (int n = 2; n <= 8; ++n) {
    for (int r = 1; 2 * r <= n; ++r) {
      const Hypergraph h = ekr_star(n, r);
      EXPECT_EQ(h.size(), binomial(n - 1, r - 1));
      EXPECT_EQ(nu_exact(h), 1U);
    }
  }
  EXPECT_THROW(ekr_star(5, 3), InputError);
}

}  // namespace
}  // namespace rainbow
