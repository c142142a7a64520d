#include <gtest/gtest.h>

#include <random>

#include "minroots/brink.hpp"
#include "minroots/error.hpp"
#include "minroots/naive.hpp"
#include "minroots/oracle.hpp"
#include "minroots/wordeng.hpp"
#include "support.hpp"

namespace minroots {
namespace {

// 1-based literals.
Word w1(std::initializer_list<Generator> letters) {
  Word w;
  for (const Generator g : letters) w.push_back(g - 1);
  return w;
}

class WordEngine : public ::testing::Test {
 protected:
  const CoxeterSystem a2 = test::load("a2.cox");
  const CoxeterSystem inf = test::load("i2_inf.cox");
  const MinimalRootTable ta2 = build_table_brink(a2);
  const MinimalRootTable tinf = build_table_brink(inf);
};

TEST_F(WordEngine, LeftMultiplyExamples) {
  EXPECT_EQ(left_multiply(ta2, 1, w1({1, 2})), w1({1, 2, 1}));
  EXPECT_EQ(left_multiply(ta2, 0, w1({1, 2, 1})), w1({2, 1}));
  EXPECT_EQ(left_multiply(ta2, 1, Word{}), w1({2}));
  EXPECT_EQ(left_multiply(tinf, 0, w1({2, 1})), w1({1, 2, 1}));
  EXPECT_THROW(left_multiply(ta2, 2, Word{}), std::out_of_range);
}

TEST_F(WordEngine, NormalizeAndMultiply) {
  EXPECT_EQ(normalize(ta2, w1({2, 1, 2})), w1({1, 2, 1}));
  EXPECT_EQ(normalize(ta2, w1({1, 1})), Word{});
  EXPECT_EQ(normalize(ta2, Word{}), Word{});
  EXPECT_EQ(multiply(ta2, Word{}, w1({2, 1})), w1({2, 1}));
  EXPECT_EQ(multiply(ta2, w1({1}), w1({2, 1})), w1({1, 2, 1}));
}

TEST_F(WordEngine, LengthAndDescents) {
  EXPECT_EQ(length(ta2, w1({1, 2, 1, 1})), 2u);
  EXPECT_EQ(left_descents(ta2, w1({1, 2, 1})), GeneratorSet(0b11));
  EXPECT_EQ(left_descents(ta2, Word{}), GeneratorSet());
}

TEST_F(WordEngine, Growth) {
  EXPECT_EQ(growth(ta2, 5), (std::vector<std::size_t>{1, 2, 2, 1, 0, 0}));
  EXPECT_EQ(growth(tinf, 4), (std::vector<std::size_t>{1, 2, 2, 2, 2}));
  EXPECT_THROW(growth(tinf, 100, 50), ResourceError);
}

TEST_F(WordEngine, ParseAndFormat) {
  EXPECT_EQ(parse_word("2 1 2", 2), w1({2, 1, 2}));
  EXPECT_EQ(parse_word("212", 2), w1({2, 1, 2}));
  EXPECT_EQ(parse_word("", 2), Word{});
  EXPECT_EQ(format_word(w1({1, 2, 1})), "1 2 1");
  EXPECT_THROW(parse_word("3", 2), ParseError);
  EXPECT_THROW(parse_word("1 x", 2), ParseError);
  EXPECT_EQ(parse_word("10 2", 12), (Word{9, 1}));
}

TEST(WordEngineOracle, GrowthMatchesBallSpheres) {
  for (const char* name : {"affine_a2.cox", "tri343.cox", "h3.cox", "affine_b2.cox"}) {
    const auto sys = test::load(name);
    const auto table = build_table_brink(sys);
    const CayleyBall ball(sys, 10);
    EXPECT_EQ(growth(table, 10), ball.sphere_sizes()) << name;
  }
}

TEST(WordEngineOracle, InverseCancelsAndNormalizeIdempotent) {
  const auto sys = test::load("tri343.cox");
  const auto table = build_table_naive(sys);
  const CayleyBall ball(sys, 8);
  for (std::size_t i = 0; i < ball.size(); ++i) {
    const Word& nf = ball.normal_form(i);
    EXPECT_EQ(normalize(table, nf), nf);
    const Word inverse = normalize(table, Word(nf.rbegin(), nf.rend()));
    EXPECT_EQ(multiply(table, nf, inverse), Word{});
    for (Generator s = 0; s < sys.rank(); ++s) {
      const std::size_t a = nf.size(), b = left_multiply(table, s, nf).size();
      EXPECT_EQ(a > b ? a - b : b - a, 1u);
    }
  }
}

TEST(WordEngineOracle, RandomProductsMatchMatrices) {
  // Normal forms of random words and products against matrix products.
  std::mt19937_64 rng(41);
  for (const char* name : {"tri343.cox", "affine_b2.cox", "h4.cox"}) {
    const auto sys = test::load(name);
    const auto table = build_table_brink(sys);
    const Realization r(sys);
    auto matrix_of = [&](const Word& w) {
      auto m = r.identity();
      for (const Generator g : w) m = r.times_generator(m, g);
      return m;
    };
    std::uniform_int_distribution<Generator> g(0, sys.rank() - 1);
    for (int k = 0; k < 100; ++k) {
      Word a(12), b(9);
      for (auto& x : a) x = g(rng);
      for (auto& x : b) x = g(rng);
      const Word na = normalize(table, a), nb = normalize(table, b);
      EXPECT_EQ(matrix_of(na), matrix_of(a));
      Word ab = a;
      ab.insert(ab.end(), b.begin(), b.end());
      EXPECT_EQ(matrix_of(multiply(table, na, nb)), matrix_of(ab));
    }
  }
}

}  // namespace
}  // namespace minroots
