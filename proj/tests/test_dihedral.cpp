#include <gtest/gtest.h>

#include "minroots/coxeter.hpp"
#include "minroots/dihedral.hpp"

namespace minroots {
namespace {

TEST(CoeffC, InitialValues) {
  const auto ring = BaseRing::get(7);
  EXPECT_TRUE(coeff_C(0, 7, *ring).is_zero());
  EXPECT_TRUE(coeff_C(1, 7, *ring).equals_integer(1));
}

TEST(CoeffC, InfiniteOrderIsLinear) {
  // (st)^n alpha has coefficients (C_{2n+1}, C_{2n}) = (2n+1, 2n).
  const auto z = BaseRing::get(3);
  for (unsigned n = 0; n < 20; ++n) {
    EXPECT_TRUE(coeff_C(2 * n + 1, kInfinity, *z).equals_integer(2 * n + 1));
    EXPECT_TRUE(coeff_C(2 * n, kInfinity, *z).equals_integer(2 * n));
  }
}

TEST(CoeffC, GoldenRatioIdentity) {
  const auto r5 = BaseRing::get(5);
  const RingElem c = r5->embed(5);
  EXPECT_EQ(coeff_C(3, 5, *r5), c * c - r5->one());
  EXPECT_EQ(coeff_C(3, 5, *r5), c);
}

TEST(CoeffC, RecurrenceMatchesClosedForm) {
  for (Order m = 2; m <= 30; ++m) {
    const auto ring = BaseRing::get(elementary_level(m));
    for (unsigned n = 0; n <= m; ++n) EXPECT_EQ(coeff_C(n, m, *ring), coeff_C_closed(n, m, *ring)) << m << " " << n;
  }
}

TEST(CoeffC, VanishesAtM) {
  for (Order m = 2; m <= 30; ++m) {
    const auto ring = BaseRing::get(elementary_level(m));
    EXPECT_TRUE(coeff_C(m, m, *ring).is_zero()) << m;
  }
}

// C_n = sin(n pi/m)/sin(pi/m) grows exactly while its midpoint (2n-1)pi/2m
// lies below pi/2.
TEST(CoeffC, IncreasesWhileTwoNMinusOneBelowM) {
  for (Order m = 2; m <= 30; ++m) {
    const auto ring = BaseRing::get(elementary_level(m));
    for (unsigned n = 1; n <= m; ++n) {
      const int sign = (coeff_C(n, m, *ring) - coeff_C(n - 1, m, *ring)).sign();
      const int expected = 2 * n - 1 < m ? 1 : (2 * n - 1 == m ? 0 : -1);
      EXPECT_EQ(sign, expected) << m << " " << n;
    }
  }
}

TEST(DihedralSystem, SmallTables) {
  const DihedralSystem d3(3);
  ASSERT_EQ(d3.size(), 3u);
  EXPECT_TRUE(d3.root(1).coeff_s.equals_integer(1));
  EXPECT_TRUE(d3.root(1).coeff_t.equals_integer(1));

  const DihedralSystem d4(4);
  ASSERT_EQ(d4.size(), 4u);
  const RingElem sqrt2 = d4.ring()->embed(4);
  EXPECT_TRUE(d4.root(d4.alpha_s()).coeff_s.equals_integer(1));
  EXPECT_TRUE(d4.root(d4.alpha_t()).coeff_t.equals_integer(1));
  // t alpha_s = alpha_s + sqrt2 alpha_t is fixed by s.
  const Entry ta = d4.reflect(false, d4.alpha_s());
  ASSERT_TRUE(ta.is_index());
  EXPECT_TRUE(d4.root(ta.value()).coeff_s.equals_integer(1));
  EXPECT_EQ(d4.root(ta.value()).coeff_t, sqrt2);
  EXPECT_EQ(d4.reflect(true, ta.value()), ta);
}

TEST(DihedralSystem, InfiniteHasTwoMinimalRoots) {
  const DihedralSystem d(kInfinity);
  ASSERT_EQ(d.size(), 2u);
  EXPECT_TRUE(d.reflect(true, d.alpha_s()).is_negative_simple());
  EXPECT_TRUE(d.reflect(false, d.alpha_s()).is_non_minimal());
  EXPECT_TRUE(d.reflect(true, d.alpha_t()).is_non_minimal());
  EXPECT_TRUE(d.reflect(false, d.alpha_t()).is_negative_simple());
}

TEST(DihedralSystem, ActionsAreInvolutionsAndDepthsLayered) {
  for (Order m = 2; m <= 30; ++m) {
    const DihedralSystem d(m);
    ASSERT_EQ(d.size(), m);
    std::vector<unsigned> layer(m + 1, 0);
    unsigned deepest = 0;
    for (std::size_t j = 0; j < m; ++j) {
      ++layer[d.root(j).depth];
      deepest = std::max(deepest, d.root(j).depth);
      for (bool first : {true, false}) {
        const Entry e = d.reflect(first, j);
        if (e.is_negative_simple()) {
          EXPECT_EQ(j, first ? d.alpha_s() : d.alpha_t());
          continue;
        }
        ASSERT_TRUE(e.is_index());
        EXPECT_EQ(d.reflect(first, e.value()), Entry::index(static_cast<std::uint32_t>(j)));
      }
    }
    EXPECT_EQ(layer[1], 2u) << m;
    EXPECT_EQ(layer[deepest], m % 2 ? 1u : 2u) << m;
  }
}

}  // namespace
}  // namespace minroots
