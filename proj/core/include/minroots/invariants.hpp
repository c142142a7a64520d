#pragma once

#include <string>
#include <vector>

#include "minroots/coxeter.hpp"
#include "minroots/table.hpp"

namespace minroots {

struct CheckResult {
  std::string name;
  bool ok = true;
  /// First counterexample when !ok.
  std::string detail;
};

/// Runs every structural check on a finished table. Checks that need
/// coordinates are reported as failures when the table has none.
///
///   entries-set, involution, negative-simple, depth, descents: combinatorial
///   trichotomy: sign of 2 lambda.alpha_s against the entry, with exact images
///   lock-inheritance: a non-minimal entry persists up every ascent
///   monotone-coefficients: ascents never decrease a coordinate
///   coefficient-bounds: c = 1 or c^2 >= 2; values in (1, 2) are 2cos(pi/m)
///   support-shape: supports are trees without infinite links
///   forbidden-links: no 1 next to c in (1,2) on a simple link, no 1=1 on a multiple link
///   single-multiple-link: indecomposable roots span at most one link with m > 3
std::vector<CheckResult> check_invariants(const CoxeterSystem& sys, const MinimalRootTable& table);

bool all_passed(const std::vector<CheckResult>& results);

/// Support tree helpers shared with the structural builder.
GeneratorSet support_of(const RootCoordinates& c);
/// True if `support` induces a connected acyclic subgraph with no infinite link.
bool is_tree_support(const CoxeterSystem& sys, GeneratorSet support);
/// Support nodes with at most one neighbor inside the support.
GeneratorSet boundary_of(const CoxeterSystem& sys, GeneratorSet support);

}  // namespace minroots
