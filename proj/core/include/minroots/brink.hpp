#pragma once

#include <array>
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "minroots/coxeter.hpp"
#include "minroots/naive.hpp"
#include "minroots/roots.hpp"
#include "minroots/table.hpp"

namespace minroots {

/// How a root was first defined.
enum class Origin : std::uint8_t { Simple, Dihedral, Extension, Promotion, Fusion, Composition, Replacement };
inline constexpr std::size_t kOriginCount = 7;
const char* origin_name(Origin o);

/// Splits a tree support at the node set T: each component of support \ T
/// together with the T nodes attached to it, plus every link between two T
/// nodes as a component of its own. A single node is one component.
std::vector<GeneratorSet> t_components(const CoxeterSystem& sys, GeneratorSet support, GeneratorSet T);

/// Glues roots that overlap only in nodes where every part has coefficient 1.
/// All parts must be in `ring` (or in a ring whose level divides its level).
/// Throws std::invalid_argument if a shared node is not a unit in some part
/// or the glued support is not a tree.
RootCoordinates glue(const CoxeterSystem& sys, const BaseRing& ring, const std::vector<RootCoordinates>& parts);

/// Builder working with indecomposable roots (explicit coefficients in an
/// elementary ring) and composite roots (lists of indecomposable
/// components). Descents of new roots come from walks through the table
/// rather than from a coordinate lookup.
class BrinkBuilder {
 public:
  struct Record {
    bool composite = false;
    GeneratorSet support, units;
    // Indecomposable roots.
    unsigned level = 3;
    Order degree = 3;
    RootCoordinates coeffs;
    // Composite roots: sorted component indices.
    std::vector<std::uint32_t> components;
    Origin origin = Origin::Simple;
    std::uint32_t parent = 0;
    Generator via = 0;
  };

  struct Census {
    std::array<std::size_t, kOriginCount> defined{};
    std::size_t indecomposable = 0, composite = 0;
    /// Post-hoc checks of each definition's preconditions; empty when clean.
    std::vector<std::string> violations;
  };

  BrinkBuilder(const CoxeterSystem& sys, BuildOptions options = {});
  BrinkBuilder(CoxeterSystem&&, BuildOptions = {}) = delete;

  /// Runs the construction. Coordinates are attached when `with_coords`.
  MinimalRootTable run(bool with_coords = true);

  const std::vector<Record>& records() const { return records_; }
  const Census& census() const { return census_; }

  /// Components of root i containing s (just {i} for an indecomposable root).
  std::vector<std::uint32_t> star(std::uint32_t i, Generator s) const;
  /// Coordinates of root i in `ring` (level divisible by every degree used).
  RootCoordinates expand(std::uint32_t i, const BaseRing& ring) const;

 private:
  using Key = std::vector<std::uint32_t>;

  void stage();
  void finish(std::uint32_t i);
  Entry decide(std::uint32_t i, Generator s);
  Entry promote_or_fuse(std::uint32_t i, Generator s, Origin tag);
  Entry extend(std::uint32_t i, Generator s, Generator t);
  Entry compose(std::uint32_t i, Generator s, Generator t);
  Entry replace(std::uint32_t i, Generator s, std::uint32_t part);
  std::uint32_t define(std::uint32_t parent, Generator s, Record rec);
  void walk_descents(std::uint32_t mu, std::uint32_t lambda, Generator s);
  void propagate_locks(std::uint32_t i);
  void set_pair(Generator s, std::uint32_t a, std::uint32_t b);
  void set_lock(Generator s, std::uint32_t i);
  bool is_descent(Generator s, std::uint32_t i) const;
  void check_special_nodes(std::uint32_t i) const;
  const LinkWeights& weights(unsigned level);
  unsigned arithmetic_level(GeneratorSet support, bool& mixed) const;
  void verify_census();
  [[noreturn]] void fail(const std::string& what, std::uint32_t i, Generator s) const;

  const CoxeterSystem& sys_;
  BuildOptions options_;
  MinimalRootTable table_;
  std::vector<Record> records_;
  std::map<Key, std::uint32_t> composites_;
  std::deque<std::uint32_t> queue_;
  std::map<unsigned, std::unique_ptr<LinkWeights>> weights_;
  // simple_image_[s * rank + t]: the dihedral root s.alpha_t, when s-t is a finite link.
  std::vector<std::uint32_t> simple_image_;
  Census census_;
  bool staging_ = false;
};

/// Convenience wrapper: BrinkBuilder(sys, options).run(true).
MinimalRootTable build_table_brink(const CoxeterSystem& sys, const BuildOptions& options = {});

}  // namespace minroots
