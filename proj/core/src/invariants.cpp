#include "minroots/invariants.hpp"

#include <sstream>

#include "minroots/roots.hpp"

namespace minroots {

GeneratorSet support_of(const RootCoordinates& c) {
  GeneratorSet s;
  for (Generator g = 0; g < c.size(); ++g)
    if (!c[g].is_zero()) s.insert(g);
  return s;
}

bool is_tree_support(const CoxeterSystem& sys, GeneratorSet support) {
  if (support.empty()) return false;
  unsigned edges = 0;
  bool ok = true;
  support.for_each([&](Generator a) {
    (sys.neighbors(a) & support).for_each([&](Generator b) {
      if (a < b) {
        ++edges;
        if (sys.is_infinite(a, b)) ok = false;
      }
    });
  });
  if (!ok || edges + 1 != support.size()) return false;
  // Connected: flood from the first node.
  GeneratorSet seen = GeneratorSet::single(support.first());
  GeneratorSet frontier = seen;
  while (!frontier.empty()) {
    GeneratorSet next;
    frontier.for_each([&](Generator a) { next |= sys.neighbors(a) & support; });
    frontier = next.minus(seen);
    seen |= frontier;
  }
  return seen == support;
}

GeneratorSet boundary_of(const CoxeterSystem& sys, GeneratorSet support) {
  GeneratorSet b;
  support.for_each([&](Generator a) {
    if ((sys.neighbors(a) & support).size() <= 1) b.insert(a);
  });
  return b;
}

namespace {

class Checker {
 public:
  explicit Checker(std::string name) { result_.name = std::move(name); }

  template <class... Args>
  void fail(const Args&... args) {
    if (!result_.ok) return;
    result_.ok = false;
    std::ostringstream os;
    (os << ... << args);
    result_.detail = os.str();
  }
  bool failed() const { return !result_.ok; }
  CheckResult done() { return std::move(result_); }

 private:
  CheckResult result_;
};

bool is_ascent(const MinimalRootTable& t, Generator s, std::uint32_t i) {
  const Entry e = t.entry(s, i);
  return e.is_index() && t.depth(e.value()) > t.depth(i);
}

}  // namespace

std::vector<CheckResult> check_invariants(const CoxeterSystem& sys, const MinimalRootTable& table) {
  std::vector<CheckResult> out;
  const unsigned n = table.rank();
  const auto N = static_cast<std::uint32_t>(table.size());

  {
    Checker c("entries-set");
    if (n != sys.rank()) c.fail("table rank ", n, " differs from system rank ", sys.rank());
    for (std::uint32_t i = 0; i < N && !c.failed(); ++i)
      for (Generator s = 0; s < n; ++s)
        if (table.entry(s, i).is_unset()) c.fail("s=", s, " root=", i, " unset");
    out.push_back(c.done());
    if (!out.back().ok) return out;
  }
  {
    Checker c("involution");
    for (std::uint32_t i = 0; i < N; ++i)
      for (Generator s = 0; s < n; ++s) {
        const Entry e = table.entry(s, i);
        if (e.is_index() && !(table.entry(s, e.value()) == Entry::index(i)))
          c.fail("s=", s, " root=", i, " maps to ", e.value(), " which does not map back");
      }
    out.push_back(c.done());
  }
  {
    Checker c("negative-simple");
    std::vector<unsigned> per_gen(n, 0);
    for (std::uint32_t i = 0; i < N; ++i) {
      unsigned here = 0;
      for (Generator s = 0; s < n; ++s)
        if (table.entry(s, i).is_negative_simple()) {
          ++per_gen[s];
          ++here;
          if (table.depth(i) != 1) c.fail("root ", i, " carries a negative-simple entry at depth ", table.depth(i));
          if (table.has_coords() && !(table.coords(i) == simple_coordinates(*table.ring(), n, s)))
            c.fail("root ", i, " carries a negative-simple entry for s=", s, " but is not alpha_s");
        }
      if (here > 1) c.fail("root ", i, " has ", here, " negative-simple entries");
      if (table.depth(i) == 1 && here != 1) c.fail("depth-1 root ", i, " is not a simple root");
    }
    for (Generator s = 0; s < n; ++s)
      if (per_gen[s] != 1) c.fail("generator ", s, " has ", per_gen[s], " negative-simple entries");
    out.push_back(c.done());
  }
  {
    Checker c("depth");
    for (std::uint32_t i = 0; i < N; ++i)
      for (Generator s = 0; s < n; ++s) {
        const Entry e = table.entry(s, i);
        if (!e.is_index() || e.value() == i) continue;
        const int d = static_cast<int>(table.depth(e.value())) - static_cast<int>(table.depth(i));
        if (d != 1 && d != -1) c.fail("s=", s, " root=", i, " depth ", table.depth(i), " -> ", table.depth(e.value()));
      }
    out.push_back(c.done());
  }
  {
    Checker c("descents");
    for (std::uint32_t i = 0; i < N; ++i)
      if (!(table.descents(i) == table.entry_descents(i)))
        c.fail("root=", i, " stored ", table.descents(i).to_hex(), " expected ", table.entry_descents(i).to_hex());
    out.push_back(c.done());
  }
  {
    Checker c("lock-inheritance");
    for (std::uint32_t i = 0; i < N; ++i)
      for (Generator s = 0; s < n; ++s) {
        if (!table.entry(s, i).is_non_minimal()) continue;
        for (Generator u = 0; u < n; ++u)
          if (is_ascent(table, u, i)) {
            const auto j = table.entry(u, i).value();
            if (!table.entry(s, j).is_non_minimal())
              c.fail("s=", s, " root=", i, " is locked but ascent by ", u, " to ", j, " is not");
          }
      }
    out.push_back(c.done());
  }

  const char* coord_checks[] = {"trichotomy",     "monotone-coefficients", "coefficient-bounds",
                                "support-shape",  "forbidden-links",       "single-multiple-link"};
  if (!table.has_coords()) {
    for (const char* name : coord_checks) out.push_back({name, false, "table has no coordinates"});
    return out;
  }

  const auto& ring = *table.ring();
  const LinkWeights w(sys, table.ring());
  const RingElem one = ring.one();
  const RingElem two = ring.constant(2);

  {
    Checker c("trichotomy");
    for (std::uint32_t i = 0; i < N && !c.failed(); ++i)
      for (Generator s = 0; s < n; ++s) {
        const Entry e = table.entry(s, i);
        const RingElem p = doubled_dot(w, table.coords(i), s);
        const int sg = p.sign();
        if (e.is_negative_simple()) {
          if (sg <= 0) c.fail("s=", s, " root=", i, " expected=positive-product found=", p.to_string());
          continue;
        }
        if (e.is_non_minimal()) {
          if ((p + two).sign() > 0) c.fail("s=", s, " root=", i, " expected=minimal found=+ (p=", p.to_string(), ")");
          continue;
        }
        const auto j = e.value();
        if (j == i) {
          if (sg != 0) c.fail("s=", s, " root=", i, " fixed but p=", p.to_string());
          continue;
        }
        const bool down = table.depth(j) < table.depth(i);
        if ((down && sg <= 0) || (!down && (sg >= 0 || (p + two).sign() <= 0)))
          c.fail("s=", s, " root=", i, " entry ", j, " disagrees with p=", p.to_string());
        else if (!(reflect_coordinates(w, table.coords(i), s) == table.coords(j)))
          c.fail("s=", s, " root=", i, " entry ", j, " has the wrong coordinates");
      }
    out.push_back(c.done());
  }
  {
    Checker c("monotone-coefficients");
    for (std::uint32_t i = 0; i < N; ++i)
      for (Generator s = 0; s < n; ++s) {
        if (!is_ascent(table, s, i)) continue;
        const auto j = table.entry(s, i).value();
        for (Generator g = 0; g < n; ++g)
          if ((table.coords(j)[g] - table.coords(i)[g]).sign() < 0)
            c.fail("ascent ", i, " -> ", j, " by ", s, " lowers coordinate ", g);
      }
    out.push_back(c.done());
  }
  {
    Checker c("coefficient-bounds");
    std::vector<RingElem> link_values;
    for (Generator a = 0; a < n; ++a)
      for (Generator b = a + 1; b < n; ++b)
        if (!sys.is_infinite(a, b)) link_values.push_back(w(a, b));
    for (std::uint32_t i = 0; i < N; ++i)
      for (Generator g = 0; g < n; ++g) {
        const RingElem& x = table.coords(i)[g];
        if (x.is_zero()) continue;
        if (x == one) continue;
        if ((x - one).sign() < 0) c.fail("root=", i, " coordinate ", g, " = ", x.to_string(), " below 1");
        if ((x * x - two).sign() < 0) c.fail("root=", i, " coordinate ", g, " = ", x.to_string(), " has square below 2");
        if ((x - two).sign() < 0) {
          bool found = false;
          for (const auto& v : link_values) found = found || v == x;
          if (!found) c.fail("root=", i, " coordinate ", g, " = ", x.to_string(), " lies in (1,2) but is no 2cos(pi/m)");
        }
      }
    out.push_back(c.done());
  }
  {
    Checker c("support-shape");
    for (std::uint32_t i = 0; i < N; ++i)
      if (!is_tree_support(sys, support_of(table.coords(i))))
        c.fail("root=", i, " support ", support_of(table.coords(i)).to_hex(), " is not a finite-link tree");
    out.push_back(c.done());
  }
  {
    Checker c("forbidden-links");
    for (std::uint32_t i = 0; i < N; ++i) {
      const auto& x = table.coords(i);
      for (Generator a = 0; a < n; ++a)
        for (Generator b = 0; b < n; ++b) {
          if (!sys.linked(a, b) || sys.is_infinite(a, b) || !(x[a] == one)) continue;
          if (sys.order(a, b) == 3) {
            if ((x[b] - one).sign() > 0 && (x[b] - two).sign() < 0)
              c.fail("root=", i, " simple link ", a, "-", b, " carries 1 and ", x[b].to_string());
          } else if (x[b] == one) {
            c.fail("root=", i, " multiple link ", a, "=", b, " carries 1 and 1");
          }
        }
    }
    out.push_back(c.done());
  }
  {
    Checker c("single-multiple-link");
    for (std::uint32_t i = 0; i < N; ++i) {
      const auto& x = table.coords(i);
      const GeneratorSet supp = support_of(x);
      GeneratorSet units;
      supp.for_each([&](Generator g) {
        if (x[g] == one) units.insert(g);
      });
      if (!units.subset_of(boundary_of(sys, supp))) continue;
      unsigned multiple = 0;
      supp.for_each([&](Generator a) {
        (sys.neighbors(a) & supp).for_each([&](Generator b) {
          if (a < b && sys.order(a, b) > 3) ++multiple;
        });
      });
      if (multiple > 1) c.fail("indecomposable root=", i, " spans ", multiple, " multiple links");
    }
    out.push_back(c.done());
  }
  return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.ok) return false;
  return true;
}

}  // namespace minroots
