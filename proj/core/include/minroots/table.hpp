#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "minroots/cyclo.hpp"
#include "minroots/entry.hpp"
#include "minroots/generator_set.hpp"

namespace minroots {

/// Coordinates of a root in the basis of simple roots, one per generator.
using RootCoordinates = std::vector<RingElem>;

/// The reflection table: for each minimal root i and generator s, the entry
/// for s applied to root i, plus per-root depth and descent set. Coordinates
/// over a common ring are optional.
class MinimalRootTable {
 public:
  explicit MinimalRootTable(unsigned rank) : rank_(rank) {}

  unsigned rank() const { return rank_; }
  std::size_t size() const { return depth_.size(); }

  /// Appends a root with every entry unset and returns its index.
  std::uint32_t add_root(unsigned depth);

  Entry entry(Generator s, std::uint32_t i) const { return refl_[std::size_t{i} * rank_ + s]; }
  void set_entry(Generator s, std::uint32_t i, Entry e) { refl_[std::size_t{i} * rank_ + s] = e; }

  unsigned depth(std::uint32_t i) const { return depth_[i]; }
  GeneratorSet descents(std::uint32_t i) const { return descents_[i]; }
  void set_descents(std::uint32_t i, GeneratorSet d) { descents_[i] = d; }
  /// Descents read off the entries: s with entry negative-simple or pointing
  /// to a root of smaller depth.
  GeneratorSet entry_descents(std::uint32_t i) const;
  /// Overwrites every stored descent set with entry_descents.
  void derive_descents();

  /// The generator whose simple root is root i, if any.
  std::optional<Generator> simple_generator(std::uint32_t i) const;

  bool has_coords() const { return ring_ != nullptr; }
  const std::shared_ptr<const BaseRing>& ring() const { return ring_; }
  const RootCoordinates& coords(std::uint32_t i) const { return coords_[i]; }
  /// Installs coordinates for every root at once; all must live in `ring`.
  void set_coords(std::shared_ptr<const BaseRing> ring, std::vector<RootCoordinates> coords);
  void drop_coords();

  bool operator==(const MinimalRootTable& o) const;

 private:
  unsigned rank_;
  std::vector<Entry> refl_;
  std::vector<unsigned> depth_;
  std::vector<GeneratorSet> descents_;
  std::shared_ptr<const BaseRing> ring_;
  std::vector<RootCoordinates> coords_;
};

/// Reindexes roots by (depth, coordinates); coordinates are compared one
/// generator at a time in index order, larger value first, so the simple
/// roots come out as 0..rank-1 in generator order. Requires coordinates.
MinimalRootTable canonicalize(const MinimalRootTable& table);

/// Table file, version 1.
std::string serialize(const MinimalRootTable& table);

/// Parses a table file. Ring elements rendered as "poly<L>:..." fix the ring;
/// an all-integer table uses `ring_hint` if given, else the integers.
MinimalRootTable deserialize(std::string_view text, std::shared_ptr<const BaseRing> ring_hint = nullptr);

}  // namespace minroots
