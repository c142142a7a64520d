#pragma once

#include <cstddef>
#include <vector>

#include "minroots/coxeter.hpp"
#include "minroots/table.hpp"

namespace minroots {

struct BuildOptions {
  /// Abort with ResourceError once the table would exceed this many roots.
  std::size_t max_roots = 5'000'000;
};

/// Breadth-first construction over the common ring of the system: every
/// unassigned (s, root) pair is decided by an exact sign test and new roots
/// are deduplicated through a lookup keyed by their coordinates. The result
/// carries coordinates. If `finish_depths` is given it receives the depth of
/// each root in the order roots were finished.
MinimalRootTable build_table_naive(const CoxeterSystem& sys, const BuildOptions& options = {},
                                   std::vector<unsigned>* finish_depths = nullptr);

}  // namespace minroots
