#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "minroots/coxeter.hpp"
#include "minroots/table.hpp"

namespace minroots {

struct CrossCheckReport {
  std::vector<std::string> lines;  // "CHECK <name> PASS|FAIL <detail>"
  bool passed = true;
  std::size_t roots = 0;
  std::size_t ball_elements = 0;
  std::size_t multiplications = 0;
  std::size_t max_lookups_over_length = 0;  // 0 when every scan stays within |nf|

  void add(const std::string& name, bool ok, const std::string& detail);
};

/// Builds the table with both algorithms and checks (a) canonical equality,
/// (b) every structural invariant, (c) left_multiply against the Cayley
/// oracle for every generator and every element of length <= radius, and
/// (d) at most one table read per scanned letter.
CrossCheckReport cross_check(const CoxeterSystem& sys, unsigned radius, std::size_t max_ball = 4'000'000);

/// Same checks for a given table, compared against a fresh naive build.
/// The table must carry coordinates and have its simple roots first.
CrossCheckReport cross_check_table(const CoxeterSystem& sys, const MinimalRootTable& table, unsigned radius,
                                   std::size_t max_ball = 4'000'000);

/// 10 for rank <= 3, otherwise 6.
unsigned default_ball_radius(const CoxeterSystem& sys);

}  // namespace minroots
