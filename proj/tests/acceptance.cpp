// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "minroots/brink.hpp"
#include "minroots/dihedral.hpp"
#include "minroots/invariants.hpp"
#include "minroots/naive.hpp"
#include "minroots/oracle.hpp"
#include "minroots/table.hpp"
#include "minroots/wordeng.hpp"
#include "support.hpp"

namespace {

using namespace minroots;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

struct Named {
  std::string name;
  CoxeterSystem sys;
};

std::vector<Named> corpus() {
  std::vector<Named> out;
  for (const char* f : {"a2.cox", "b2.cox", "g2.cox", "i2_7.cox", "i2_inf.cox", "a3.cox", "b3.cox", "h3.cox",
                        "tri343.cox", "affine_a1.cox", "affine_a2.cox", "affine_b2.cox"})
    out.push_back({f, test::load(f)});
  std::mt19937_64 rng(20240601);
  for (int k = 0; k < 50; ++k)
    out.push_back({"random4-" + std::to_string(k), test::random_system(rng, 4, {2, 3, 4, 5, kInfinity})});
  return out;
}

std::string canonical_text(const MinimalRootTable& t) { return serialize(canonicalize(t)); }

Outcome triangle_group() {
  Outcome o;
  const auto start = Clock::now();
  const auto sys = test::load("tri343.cox");
  const auto naive = build_table_naive(sys);
  const auto brink = build_table_brink(sys);
  if (naive.size() != 7) o.fail("naive N=" + std::to_string(naive.size()));
  if (brink.size() != 7) o.fail("brink N=" + std::to_string(brink.size()));
  if (canonical_text(naive) != canonical_text(brink)) o.fail("canonical tables differ");
  const double t = seconds_since(start);
  if (t >= 1.0) o.fail("took " + std::to_string(t) + " s");
  if (o.ok) o.detail = "N=7 identical tables in " + std::to_string(t) + " s";
  return o;
}

Outcome finite_counts() {
  Outcome o;
  const auto start = Clock::now();
  const std::vector<std::pair<std::string, std::size_t>> expected = {
      {"a2.cox", 3}, {"b2.cox", 4}, {"g2.cox", 6}, {"i2_7.cox", 7}, {"a3.cox", 6}, {"b3.cox", 9}, {"h3.cox", 15}};
  std::ostringstream seen;
  for (const auto& [name, n] : expected) {
    const auto sys = test::load(name);
    const std::size_t closure = positive_root_closure(sys).size();
    if (closure != n) o.fail(name + " closure=" + std::to_string(closure));
    const std::size_t a = build_table_naive(sys).size(), b = build_table_brink(sys).size();
    if (a != closure || b != closure)
      o.fail(name + " closure=" + std::to_string(closure) + " naive=" + std::to_string(a) + " brink=" +
             std::to_string(b));
    seen << name.substr(0, name.size() - 4) << "=" << closure << " ";
  }
  const double t = seconds_since(start);
  if (t >= 5.0) o.fail("took " + std::to_string(t) + " s");
  if (o.ok) o.detail = seen.str() + "in " + std::to_string(t) + " s";
  return o;
}

Outcome infinite_dihedral() {
  Outcome o;
  const auto sys = test::load("i2_inf.cox");
  for (const auto& [algo, table] : {std::pair{"naive", build_table_naive(sys)}, {"brink", build_table_brink(sys)}}) {
    if (table.size() != 2) o.fail(std::string(algo) + " N=" + std::to_string(table.size()));
    else if (!table.entry(1, 0).is_non_minimal() || !table.entry(0, 1).is_non_minimal())
      o.fail(std::string(algo) + " cross entries are not non-minimal");
  }
  if (o.ok) o.detail = "N=2, cross entries non-minimal in both builders";
  return o;
}

Outcome cross_builders(const std::vector<Named>& groups, std::map<std::string, MinimalRootTable>& tables,
                       std::map<std::string, MinimalRootTable>& naive_tables) {
  Outcome o;
  const auto start = Clock::now();
  for (const auto& g : groups) {
    auto naive = build_table_naive(g.sys);
    auto brink = build_table_brink(g.sys);
    if (canonical_text(naive) != canonical_text(brink)) o.fail(g.name + " tables differ");
    tables.emplace(g.name, std::move(brink));
    naive_tables.emplace(g.name, std::move(naive));
  }
  const double t = seconds_since(start);
  if (t >= 60.0) o.fail("took " + std::to_string(t) + " s");
  if (o.ok) o.detail = std::to_string(groups.size()) + " groups byte-identical in " + std::to_string(t) + " s";
  return o;
}

void multiplication(const std::vector<Named>& groups, const std::map<std::string, MinimalRootTable>& tables,
                    Outcome& mult, Outcome& scan) {
  std::size_t products = 0, worst_group_ms = 0;
  for (const auto& g : groups) {
    const auto start = Clock::now();
    const unsigned radius = g.sys.rank() <= 3 ? 10 : 6;
    const CayleyBall ball(g.sys, radius + 1);
    const auto& table = tables.at(g.name);
    for (std::size_t i = 0; i < ball.size(); ++i) {
      if (ball.length(i) > radius) continue;
      const Word& nf = ball.normal_form(i);
      for (Generator s = 0; s < g.sys.rank(); ++s) {
        ScanStats stats;
        const Word got = left_multiply(table, s, nf, &stats);
        ++products;
        if (stats.lookups > nf.size())
          scan.fail(g.name + " s=" + std::to_string(s + 1) + " |nf|=" + std::to_string(nf.size()) +
                    " lookups=" + std::to_string(stats.lookups));
        const std::size_t j = ball.left_product(s, i);
        if (j == CayleyBall::npos || got != ball.normal_form(j))
          mult.fail(g.name + " s=" + std::to_string(s + 1) + " w=[" + format_word(nf) + "] found=[" +
                    format_word(got) + "]");
      }
    }
    const double t = seconds_since(start);
    worst_group_ms = std::max(worst_group_ms, static_cast<std::size_t>(t * 1000));
    if (t >= 60.0) mult.fail(g.name + " took " + std::to_string(t) + " s");
  }
  if (mult.ok)
    mult.detail = std::to_string(products) + " products agree, slowest group " + std::to_string(worst_group_ms) + " ms";
  if (scan.ok) scan.detail = "lookups <= |nf| in all " + std::to_string(products) + " calls";
}

Outcome invariants(const std::vector<Named>& groups, const std::map<std::string, MinimalRootTable>& brink,
                   const std::map<std::string, MinimalRootTable>& naive) {
  Outcome o;
  std::size_t checks = 0;
  for (const auto& g : groups)
    for (const auto* tables : {&brink, &naive})
      for (const auto& r : check_invariants(g.sys, tables->at(g.name))) {
        ++checks;
        if (!r.ok) o.fail(g.name + " " + r.name + ": " + r.detail);
      }
  if (o.ok) o.detail = std::to_string(checks) + " checks over " + std::to_string(2 * groups.size()) + " tables";
  return o;
}

// sign(C_n - C_{n-1}) = +1 iff n < m/2, with the recurrence equal to the
// closed-form sum, for m <= 30 and 1 <= n <= m.
Outcome dihedral_theory() {
  Outcome o;
  std::size_t mono_failures = 0;
  for (Order m = 2; m <= 30; ++m) {
    const auto ring = BaseRing::get(elementary_level(m));
    for (unsigned n = 0; n <= m; ++n)
      if (!(coeff_C(n, m, *ring) == coeff_C_closed(n, m, *ring)))
        o.fail("recurrence differs from closed form at m=" + std::to_string(m) + " n=" + std::to_string(n));
    for (unsigned n = 1; n <= m; ++n) {
      const bool increasing = (coeff_C(n, m, *ring) - coeff_C(n - 1, m, *ring)).sign() == 1;
      const bool claimed = 2 * n < m;
      if (increasing != claimed) {
        ++mono_failures;
        o.fail("monotonicity at m=" + std::to_string(m) + " n=" + std::to_string(n) + ": C_n - C_{n-1} is " +
               (increasing ? "positive" : "not positive") + " but n " + (claimed ? "<" : ">=") + " m/2");
      }
    }
  }
  if (mono_failures) o.detail += " (" + std::to_string(mono_failures) + " monotonicity counterexamples)";
  if (o.ok) o.detail = "m <= 30, n <= m";
  return o;
}

Outcome rank_eight_budget() {
  Outcome o;
  std::mt19937_64 rng(8080);
  double worst = 0;
  std::size_t largest = 0;
  for (int k = 0; k < 10; ++k) {
    const auto sys = test::random_system(rng, 8, {2, 3, 4, 5});
    const auto start = Clock::now();
    const auto table = build_table_brink(sys);
    const double t = seconds_since(start);
    worst = std::max(worst, t);
    largest = std::max(largest, table.size());
    if (t >= 10.0) o.fail("matrix " + std::to_string(k) + " took " + std::to_string(t) + " s");
  }
  if (o.ok) o.detail = "10 matrices, slowest " + std::to_string(worst) + " s, largest N=" + std::to_string(largest);
  return o;
}

}  // namespace

int main() {
  const auto groups = corpus();
  std::map<std::string, MinimalRootTable> brink, naive;
  Outcome results[10];
  std::function<Outcome()> run[10] = {
      nullptr,
      triangle_group,
      finite_counts,
      infinite_dihedral,
      [&] { return cross_builders(groups, brink, naive); },
      nullptr,
      nullptr,
      [&] { return invariants(groups, brink, naive); },
      dihedral_theory,
      rank_eight_budget,
  };
  const char* names[10] = {"",
                           "triangle group 3-4-3",
                           "finite-group counts",
                           "infinite dihedral",
                           "cross-builder equivalence",
                           "multiplication agreement",
                           "linear-scan lookups",
                           "invariant suites",
                           "dihedral theory",
                           "rank-8 build budget"};
  for (int c = 1; c <= 9; ++c) {
    try {
      if (c == 5) multiplication(groups, brink, results[5], results[6]);
      else if (c != 6) results[c] = run[c]();
    } catch (const std::exception& e) {
      results[c].fail(std::string("exception: ") + e.what());
    }
  }
  bool all = true;
  for (int c = 1; c <= 9; ++c) {
    std::printf("criterion %d %s: %s  %s\n", c, names[c], results[c].ok ? "PASS" : "FAIL", results[c].detail.c_str());
    all = all && results[c].ok;
  }
  return all ? 0 : 1;
}
