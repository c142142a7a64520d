#include "minroots/verify.hpp"

#include <sstream>

#include "minroots/brink.hpp"
#include "minroots/invariants.hpp"
#include "minroots/naive.hpp"
#include "minroots/oracle.hpp"
#include "minroots/wordeng.hpp"

namespace minroots {

namespace {

std::string entry_text(Entry e) {
  if (e.is_negative_simple()) return "-";
  if (e.is_non_minimal()) return "+";
  if (e.is_unset()) return "unset";
  return std::to_string(e.value());
}

// First difference between two canonical tables, or "" if none.
std::string first_difference(const MinimalRootTable& expected, const MinimalRootTable& found) {
  std::ostringstream out;
  if (expected.size() != found.size()) {
    out << "N expected=" << expected.size() << " found=" << found.size();
    return out.str();
  }
  for (std::uint32_t i = 0; i < expected.size(); ++i) {
    if (expected.depth(i) != found.depth(i)) {
      out << "root=" << i << " depth expected=" << expected.depth(i) << " found=" << found.depth(i);
      return out.str();
    }
    for (Generator s = 0; s < expected.rank(); ++s)
      if (!(expected.entry(s, i) == found.entry(s, i))) {
        out << "s=" << s + 1 << " root=" << i << " expected=" << entry_text(expected.entry(s, i))
            << " found=" << entry_text(found.entry(s, i));
        return out.str();
      }
    if (expected.has_coords() && found.has_coords() && !(expected.coords(i) == found.coords(i))) {
      out << "root=" << i << " coordinates differ";
      return out.str();
    }
  }
  return "";
}

void check_multiplication(const CoxeterSystem& sys, const MinimalRootTable& table, unsigned radius,
                          std::size_t max_ball, CrossCheckReport& report) {
  const CayleyBall ball(sys, radius + 1, max_ball);
  report.ball_elements = ball.size();
  std::string mult_fail, scan_fail;
  for (std::size_t i = 0; i < ball.size() && mult_fail.empty(); ++i) {
    if (ball.length(i) > radius) continue;
    const Word& nf = ball.normal_form(i);
    for (Generator s = 0; s < sys.rank(); ++s) {
      ScanStats stats;
      const Word got = left_multiply(table, s, nf, &stats);
      ++report.multiplications;
      if (stats.lookups > nf.size()) {
        report.max_lookups_over_length = std::max(report.max_lookups_over_length, stats.lookups - nf.size());
        if (scan_fail.empty())
          scan_fail = "s=" + std::to_string(s + 1) + " w=[" + format_word(nf) + "] lookups=" +
                      std::to_string(stats.lookups);
      }
      const std::size_t j = ball.left_product(s, i);
      const Word expected = j == CayleyBall::npos ? Word{} : ball.normal_form(j);
      if (j == CayleyBall::npos || got != expected) {
        mult_fail = "s=" + std::to_string(s + 1) + " w=[" + format_word(nf) + "] expected=[" +
                    format_word(expected) + "] found=[" + format_word(got) + "]";
        break;
      }
    }
  }
  report.add("multiplication", mult_fail.empty(),
             mult_fail.empty() ? "elements=" + std::to_string(ball.size()) + " products=" +
                                     std::to_string(report.multiplications)
                               : mult_fail);
  report.add("linear-scan", scan_fail.empty(), scan_fail.empty() ? "lookups<=|nf|" : scan_fail);
}

void check_table(const CoxeterSystem& sys, const MinimalRootTable& table, unsigned radius, std::size_t max_ball,
                 CrossCheckReport& report) {
  for (const auto& r : check_invariants(sys, table)) report.add("invariant:" + r.name, r.ok, r.detail);
  check_multiplication(sys, table, radius, max_ball, report);
}

}  // namespace

void CrossCheckReport::add(const std::string& name, bool ok, const std::string& detail) {
  lines.push_back("CHECK " + name + (ok ? " PASS" : " FAIL") + (detail.empty() ? "" : " " + detail));
  passed = passed && ok;
}

unsigned default_ball_radius(const CoxeterSystem& sys) { return sys.rank() <= 3 ? 10 : 6; }

CrossCheckReport cross_check(const CoxeterSystem& sys, unsigned radius, std::size_t max_ball) {
  CrossCheckReport report;
  const MinimalRootTable naive = build_table_naive(sys);
  const MinimalRootTable brink = build_table_brink(sys);
  report.roots = naive.size();
  const std::string diff = first_difference(canonicalize(naive), canonicalize(brink));
  report.add("builders-agree", diff.empty(), diff.empty() ? "N=" + std::to_string(naive.size()) : diff);
  check_table(sys, brink, radius, max_ball, report);
  return report;
}

CrossCheckReport cross_check_table(const CoxeterSystem& sys, const MinimalRootTable& table, unsigned radius,
                                   std::size_t max_ball) {
  CrossCheckReport report;
  const MinimalRootTable naive = build_table_naive(sys);
  report.roots = table.size();
  const std::string diff = first_difference(canonicalize(naive), canonicalize(table));
  report.add("reference-table", diff.empty(), diff.empty() ? "N=" + std::to_string(table.size()) : diff);
  check_table(sys, table, radius, max_ball, report);
  return report;
}

}  // namespace minroots
