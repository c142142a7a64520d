#include <gtest/gtest.h>

#include "minroots/coxeter.hpp"
#include "minroots/error.hpp"
#include "support.hpp"

namespace minroots {
namespace {

TEST(GeneratorSet, BasicOperations) {
  GeneratorSet a;
  EXPECT_TRUE(a.empty());
  a.insert(0);
  a.insert(5);
  a.insert(63);
  EXPECT_EQ(a.size(), 3u);
  EXPECT_TRUE(a.contains(63));
  EXPECT_EQ(a.first(), 0u);
  a.erase(0);
  EXPECT_EQ(a.first(), 5u);
  EXPECT_TRUE(GeneratorSet::single(5).subset_of(a));
  std::vector<Generator> seen;
  a.for_each([&](Generator g) { seen.push_back(g); });
  EXPECT_EQ(seen, (std::vector<Generator>{5, 63}));
  EXPECT_EQ(GeneratorSet::from_hex(a.to_hex()), a);
}

TEST(CoxeterSystem, ParsesInfinityTokens) {
  const auto sys = parse_system("# comment\n3\n1 inf 2\n0 1 3\n2 3 1\n");
  EXPECT_EQ(sys.rank(), 3u);
  EXPECT_TRUE(sys.is_infinite(0, 1));
  EXPECT_TRUE(sys.linked(0, 1));
  EXPECT_FALSE(sys.linked(0, 2));
  EXPECT_EQ(sys.order(1, 2), 3u);
}

TEST(CoxeterSystem, RejectsBadMatrices) {
  EXPECT_THROW(parse_system("2\n1 3\n4 1\n"), ParseError);
  EXPECT_THROW(parse_system("2\n2 3\n3 1\n"), ParseError);
  EXPECT_THROW(parse_system("2\n1 1\n1 1\n"), ParseError);
  EXPECT_THROW(parse_system("2\n1 3\n"), ParseError);
  EXPECT_THROW(parse_system("2\n1 x\nx 1\n"), ParseError);
  EXPECT_THROW(parse_system(""), ParseError);
  EXPECT_THROW(load_system(test::data_path("missing.cox")), ParseError);
  EXPECT_THROW(test::load("bad_asym.cox"), ParseError);
}

TEST(CoxeterSystem, BaseLevel) {
  EXPECT_EQ(test::load("a2.cox").base_level(), 3u);
  EXPECT_EQ(test::load("tri343.cox").base_level(), 12u);
  EXPECT_EQ(test::load("h3.cox").base_level(), 15u);
  EXPECT_EQ(test::load("a3.cox").base_level(), 3u);
  EXPECT_EQ(test::load("affine_a1.cox").base_level(), 3u);
  EXPECT_EQ(parse_system("1\n1\n").base_level(), 3u);
}

TEST(CoxeterSystem, TextRoundTripAndSymmetricNeighbors) {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 50; ++k) {
    const auto sys = test::random_system(rng, 5, {2, 3, 4, 5, 6, kInfinity});
    EXPECT_EQ(parse_system(sys.to_text()), sys);
    for (Generator s = 0; s < 5; ++s)
      for (Generator t = 0; t < 5; ++t) EXPECT_EQ(sys.neighbors(s).contains(t), sys.neighbors(t).contains(s));
    for (Generator s = 0; s < 5; ++s)
      for (Generator t = 0; t < 5; ++t)
        if (sys.linked(s, t) && !sys.is_infinite(s, t)) EXPECT_EQ(sys.base_level() % sys.order(s, t), 0u);
  }
}

}  // namespace
}  // namespace minroots
