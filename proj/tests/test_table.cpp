#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "minroots/error.hpp"
#include "minroots/naive.hpp"
#include "minroots/table.hpp"
#include "support.hpp"

namespace minroots {
namespace {

// Copy of `table` with roots permuted by `perm` (new index k holds old root perm[k]).
MinimalRootTable permuted(const MinimalRootTable& table, const std::vector<std::uint32_t>& perm) {
  std::vector<std::uint32_t> where(perm.size());
  for (std::uint32_t k = 0; k < perm.size(); ++k) where[perm[k]] = k;
  MinimalRootTable out(table.rank());
  std::vector<RootCoordinates> coords;
  for (const std::uint32_t old : perm) {
    const std::uint32_t k = out.add_root(table.depth(old));
    out.set_descents(k, table.descents(old));
    for (Generator s = 0; s < table.rank(); ++s) {
      const Entry e = table.entry(s, old);
      out.set_entry(s, k, e.is_index() ? Entry::index(where[e.value()]) : e);
    }
    coords.push_back(table.coords(old));
  }
  out.set_coords(table.ring(), std::move(coords));
  return out;
}

TEST(Canonicalize, SimplesFirstInAnyOrder) {
  const auto table = build_table_naive(test::load("a2.cox"));
  const auto shuffled = permuted(table, {2, 1, 0});
  const auto canon = canonicalize(shuffled);
  EXPECT_EQ(canon.simple_generator(0), std::optional<Generator>(0));
  EXPECT_EQ(canon.simple_generator(1), std::optional<Generator>(1));
  EXPECT_EQ(canon.depth(2), 2u);
  EXPECT_EQ(canon, canonicalize(table));
}

TEST(Canonicalize, IdempotentAndPermutationInvariant) {
  std::mt19937_64 rng(3);
  for (const char* name : {"tri343.cox", "h3.cox", "affine_b2.cox", "b3.cox"}) {
    const auto table = build_table_naive(test::load(name));
    const auto canon = canonicalize(table);
    EXPECT_EQ(canonicalize(canon), canon) << name;
    std::vector<std::uint32_t> perm(table.size());
    std::iota(perm.begin(), perm.end(), 0u);
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_EQ(canonicalize(permuted(table, perm)), canon) << name;
  }
}

TEST(Canonicalize, RequiresCoordinates) {
  auto table = build_table_naive(test::load("a2.cox"));
  table.drop_coords();
  EXPECT_THROW(canonicalize(table), std::invalid_argument);
}

TEST(Serialize, RoundTrip) {
  for (const char* name : {"a2.cox", "tri343.cox", "h3.cox", "i2_inf.cox", "affine_a2.cox"}) {
    const auto sys = test::load(name);
    const auto table = canonicalize(build_table_naive(sys));
    const std::string text = serialize(table);
    const auto back = deserialize(text, BaseRing::get(sys.base_level()));
    EXPECT_EQ(back, table) << name;
    EXPECT_EQ(serialize(back), text) << name;
  }
}

TEST(Serialize, A2Text) {
  const auto table = canonicalize(build_table_naive(test::load("a2.cox")));
  EXPECT_EQ(serialize(table),
            "minroots 1\nrank 2\ncount 3\n"
            "root 0 depth 1 descents 1 coeffs 1|0\n"
            "root 1 depth 1 descents 2 coeffs 0|1\n"
            "root 2 depth 2 descents 3 coeffs 1|1\n"
            "refl 0 - 2\nrefl 1 2 -\nrefl 2 1 0\n");
}

TEST(Serialize, TriangleGroupHasSevenRoots) {
  const auto text = serialize(canonicalize(build_table_naive(test::load("tri343.cox"))));
  EXPECT_EQ(deserialize(text).size(), 7u);
}

TEST(Deserialize, RejectsMalformedInput) {
  const std::string good = serialize(canonicalize(build_table_naive(test::load("a2.cox"))));
  auto with = [&](const std::string& from, const std::string& to) {
    std::string t = good;
    t.replace(t.find(from), from.size(), to);
    return t;
  };
  EXPECT_THROW(deserialize(with("refl 2 1 0", "refl 2 3 0")), ParseError);
  EXPECT_THROW(deserialize(with("minroots 1", "minroots 2")), ParseError);
  EXPECT_THROW(deserialize(with("count 3", "count 4")), ParseError);
  EXPECT_THROW(deserialize(with("refl 2 1 0", "refl 2 1")), ParseError);
  EXPECT_THROW(deserialize(with("coeffs 1|1", "coeffs 1|x")), ParseError);
  EXPECT_THROW(deserialize(""), ParseError);
}

TEST(Table, EntryDescentsMatchStored) {
  const auto table = build_table_naive(test::load("tri343.cox"));
  for (std::uint32_t i = 0; i < table.size(); ++i) EXPECT_EQ(table.entry_descents(i), table.descents(i));
}

}  // namespace
}  // namespace minroots
