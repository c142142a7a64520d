#include "minroots/brink.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "minroots/dihedral.hpp"
#include "minroots/error.hpp"
#include "minroots/invariants.hpp"

namespace minroots {

const char* origin_name(Origin o) {
  switch (o) {
    case Origin::Simple: return "simple";
    case Origin::Dihedral: return "dihedral";
    case Origin::Extension: return "extension";
    case Origin::Promotion: return "promotion";
    case Origin::Fusion: return "fusion";
    case Origin::Composition: return "composition";
    case Origin::Replacement: return "replacement";
  }
  return "?";
}

std::vector<GeneratorSet> t_components(const CoxeterSystem& sys, GeneratorSet support, GeneratorSet T) {
  if (support.size() <= 1) return {support};
  T = T & support;
  std::vector<GeneratorSet> out;
  GeneratorSet rest = support.minus(T);
  while (!rest.empty()) {
    GeneratorSet comp = GeneratorSet::single(rest.first());
    GeneratorSet frontier = comp;
    while (!frontier.empty()) {
      GeneratorSet next;
      frontier.for_each([&](Generator a) { next |= sys.neighbors(a) & rest; });
      frontier = next.minus(comp);
      comp |= frontier;
    }
    rest = rest.minus(comp);
    GeneratorSet attached;
    comp.for_each([&](Generator a) { attached |= sys.neighbors(a) & T; });
    out.push_back(comp | attached);
  }
  T.for_each([&](Generator a) {
    (sys.neighbors(a) & T).for_each([&](Generator b) {
      if (a < b) out.push_back(GeneratorSet::single(a) | GeneratorSet::single(b));
    });
  });
  if (out.empty()) out.push_back(support);  // a lone T node
  std::sort(out.begin(), out.end(), [](GeneratorSet x, GeneratorSet y) {
    return x.first() != y.first() ? x.first() < y.first() : x.bits() < y.bits();
  });
  return out;
}

RootCoordinates glue(const CoxeterSystem& sys, const BaseRing& ring, const std::vector<RootCoordinates>& parts) {
  RootCoordinates out(sys.rank(), ring.zero());
  const RingElem one = ring.one();
  for (const auto& part : parts) {
    for (Generator g = 0; g < sys.rank(); ++g) {
      if (part[g].is_zero()) continue;
      RingElem v = ring.promote(part[g]);
      if (!out[g].is_zero() && !(out[g] == one && v == one))
        throw std::invalid_argument("parts overlap at node " + std::to_string(g) + " which is not a unit node");
      out[g] = std::move(v);
    }
  }
  if (!is_tree_support(sys, support_of(out))) throw std::invalid_argument("glued support is not a tree");
  return out;
}

BrinkBuilder::BrinkBuilder(const CoxeterSystem& sys, BuildOptions options)
    : sys_(sys), options_(options), table_(sys.rank()), simple_image_(std::size_t{sys.rank()} * sys.rank(), 0) {}

void BrinkBuilder::fail(const std::string& what, std::uint32_t i, Generator s) const {
  throw InvariantError("brink builder: " + what + " (root " + std::to_string(i) + ", generator " + std::to_string(s) +
                       ")");
}

const LinkWeights& BrinkBuilder::weights(unsigned level) {
  auto& slot = weights_[level];
  if (!slot) slot = std::make_unique<LinkWeights>(sys_, BaseRing::get(level));
  return *slot;
}

bool BrinkBuilder::is_descent(Generator s, std::uint32_t i) const {
  const Entry e = table_.entry(s, i);
  return e.is_index() && table_.depth(e.value()) < table_.depth(i);
}

void BrinkBuilder::set_pair(Generator s, std::uint32_t a, std::uint32_t b) {
  for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
    const Entry cur = table_.entry(s, x);
    if (cur.is_unset()) table_.set_entry(s, x, Entry::index(y));
    else if (!(cur == Entry::index(y))) fail("conflicting reflection entries", x, s);
  }
}

void BrinkBuilder::set_lock(Generator s, std::uint32_t i) {
  const Entry cur = table_.entry(s, i);
  if (cur.is_unset()) table_.set_entry(s, i, Entry::non_minimal());
  else if (!cur.is_non_minimal()) fail("inherited lock contradicts a computed entry", i, s);
}

std::vector<std::uint32_t> BrinkBuilder::star(std::uint32_t i, Generator s) const {
  const Record& r = records_[i];
  if (!r.composite) return {i};
  std::vector<std::uint32_t> out;
  for (const auto c : r.components)
    if (records_[c].support.contains(s)) out.push_back(c);
  return out;
}

RootCoordinates BrinkBuilder::expand(std::uint32_t i, const BaseRing& ring) const {
  RootCoordinates out(sys_.rank(), ring.zero());
  auto add = [&](const Record& r) {
    r.support.for_each([&](Generator g) { out[g] = ring.promote(r.coeffs[g]); });
  };
  const Record& r = records_[i];
  if (!r.composite) add(r);
  else
    for (const auto c : r.components) add(records_[c]);
  return out;
}

unsigned BrinkBuilder::arithmetic_level(GeneratorSet support, bool& mixed) const {
  unsigned level = 3;
  unsigned multiple = 0;
  support.for_each([&](Generator a) {
    (sys_.neighbors(a) & support).for_each([&](Generator b) {
      const Order m = sys_.order(a, b);
      if (a < b && m > 3 && m != kInfinity) {
        ++multiple;
        level = std::lcm(level == 3 ? 1 : level, m);
      }
    });
  });
  mixed = multiple > 1;
  return level;
}

void BrinkBuilder::stage() {
  const unsigned n = sys_.rank();
  const auto z = BaseRing::get(3);
  for (Generator s = 0; s < n; ++s) {
    const auto i = table_.add_root(1);
    table_.set_entry(s, i, Entry::negative_simple());
    Record r;
    r.support = r.units = GeneratorSet::single(s);
    r.coeffs = simple_coordinates(*z, n, s);
    r.parent = i;
    r.via = s;
    records_.push_back(std::move(r));
    ++census_.defined[static_cast<std::size_t>(Origin::Simple)];
  }

  std::vector<std::uint32_t> later;
  for (Generator a = 0; a < n; ++a)
    for (Generator b = a + 1; b < n; ++b) {
      const Order m = sys_.order(a, b);
      if (m == 2) {
        table_.set_entry(b, a, Entry::index(a));
        table_.set_entry(a, b, Entry::index(b));
        continue;
      }
      if (m == kInfinity) {
        table_.set_entry(b, a, Entry::non_minimal());
        table_.set_entry(a, b, Entry::non_minimal());
        continue;
      }
      const DihedralSystem dih(m);
      std::vector<std::uint32_t> idx(dih.size());
      idx[dih.alpha_s()] = a;
      idx[dih.alpha_t()] = b;
      for (std::size_t j = 1; j + 1 < dih.size(); ++j) {
        const auto& root = dih.root(j);
        if (table_.size() >= options_.max_roots)
          throw ResourceError("minimal root count exceeds the cap of " + std::to_string(options_.max_roots));
        idx[j] = table_.add_root(root.depth);
        Record r;
        r.support = GeneratorSet::single(a) | GeneratorSet::single(b);
        r.level = elementary_level(m);
        r.degree = m > 3 ? m : 3;
        r.coeffs = RootCoordinates(n, dih.ring()->zero());
        r.coeffs[a] = root.coeff_s;
        r.coeffs[b] = root.coeff_t;
        if (root.coeff_s.equals_integer(1)) r.units.insert(a);
        if (root.coeff_t.equals_integer(1)) r.units.insert(b);
        r.origin = Origin::Dihedral;
        records_.push_back(std::move(r));
        ++census_.defined[static_cast<std::size_t>(Origin::Dihedral)];
        later.push_back(idx[j]);
      }
      for (std::size_t j = 0; j < dih.size(); ++j) {
        const Entry es = dih.reflect(true, j), et = dih.reflect(false, j);
        if (es.is_index()) table_.set_entry(a, idx[j], Entry::index(idx[es.value()]));
        if (et.is_index()) table_.set_entry(b, idx[j], Entry::index(idx[et.value()]));
        // Record where each dihedral root came from: its lower neighbor.
        if (j != dih.alpha_s() && j != dih.alpha_t()) {
          Record& r = records_[idx[j]];
          const bool down_s = es.is_index() && dih.root(es.value()).depth < dih.root(j).depth;
          r.via = down_s ? a : b;
          r.parent = idx[(down_s ? es : et).value()];
        }
      }
      simple_image_[std::size_t{b} * n + a] = idx[dih.reflect(false, dih.alpha_s()).value()];
      simple_image_[std::size_t{a} * n + b] = idx[dih.reflect(true, dih.alpha_t()).value()];
    }

  for (Generator s = 0; s < n; ++s) propagate_locks(s);
  for (unsigned d : {2u, 3u})
    for (const auto i : later)
      if (table_.depth(i) == d) queue_.push_back(i);
  staging_ = true;
  for (const auto i : later)
    if (table_.depth(i) >= 4) finish(i);
  staging_ = false;
}

void BrinkBuilder::finish(std::uint32_t i) {
  for (Generator s = 0; s < sys_.rank(); ++s) {
    if (!table_.entry(s, i).is_unset()) continue;
    const Entry e = decide(i, s);
    if (e.is_index()) set_pair(s, i, e.value());
    else set_lock(s, i);
  }
  propagate_locks(i);
}

void BrinkBuilder::propagate_locks(std::uint32_t i) {
  GeneratorSet locks;
  for (Generator u = 0; u < sys_.rank(); ++u)
    if (table_.entry(u, i).is_non_minimal()) locks.insert(u);
  if (locks.empty()) return;
  for (Generator s = 0; s < sys_.rank(); ++s) {
    const Entry e = table_.entry(s, i);
    if (!e.is_index() || table_.depth(e.value()) <= table_.depth(i)) continue;
    locks.for_each([&](Generator u) { set_lock(u, e.value()); });
  }
}

Entry BrinkBuilder::decide(std::uint32_t i, Generator s) {
  const Record& r = records_[i];
  if (r.support.contains(s)) {
    const auto parts = star(i, s);
    if (parts.size() == 1) {
      if (parts[0] == i) return promote_or_fuse(i, s, Origin::Promotion);
      return replace(i, s, parts[0]);
    }
    if (parts == r.components) return promote_or_fuse(i, s, Origin::Fusion);
    const auto it = composites_.find(parts);
    if (it == composites_.end()) fail("star of a junction was never defined", i, s);
    return replace(i, s, it->second);
  }

  const GeneratorSet links = sys_.neighbors(s) & r.support;
  if (links.empty()) return Entry::index(i);
  if (links.size() >= 2) return Entry::non_minimal();
  const Generator t = links.first();
  if (sys_.is_infinite(s, t)) return Entry::non_minimal();
  if (r.units.contains(t)) return compose(i, s, t);
  if (!r.composite) return extend(i, s, t);
  const auto parts = star(i, t);
  if (parts.size() != 1) fail("non-unit node shared by several components", i, s);
  return replace(i, s, parts[0]);
}

Entry BrinkBuilder::promote_or_fuse(std::uint32_t i, Generator s, Origin tag) {
  const Record& r = records_[i];
  bool mixed = false;
  const unsigned level = arithmetic_level(r.support, mixed);
  const LinkWeights& w = weights(level);
  auto c = classify(w, expand(i, w.ring()), s, false);
  switch (c.kind) {
    case Classification::Kind::Fixed: return Entry::index(i);
    case Classification::Kind::NonMinimal: return Entry::non_minimal();
    case Classification::Kind::NewMinimal: break;
    default: fail("unrecorded descent found by arithmetic", i, s);
  }
  if (mixed) fail("new indecomposable root would span two multiple links", i, s);
  Record nr;
  nr.support = r.support;
  nr.level = level;
  nr.degree = level == 3 ? 3 : level;
  nr.coeffs = std::move(c.image);
  nr.support.for_each([&](Generator g) {
    if (nr.coeffs[g].equals_integer(1)) nr.units.insert(g);
  });
  nr.origin = tag;
  return Entry::index(define(i, s, std::move(nr)));
}

Entry BrinkBuilder::extend(std::uint32_t i, Generator s, Generator t) {
  const Record& r = records_[i];
  const GeneratorSet support = r.support | GeneratorSet::single(s);
  bool mixed = false;
  const unsigned level = arithmetic_level(support, mixed);
  const LinkWeights& w = weights(level);
  auto c = classify(w, expand(i, w.ring()), s, false);
  switch (c.kind) {
    case Classification::Kind::NonMinimal: return Entry::non_minimal();
    case Classification::Kind::NewMinimal: break;
    default: fail("extension across link to node " + std::to_string(t) + " is not an ascent", i, s);
  }
  if (mixed) fail("extension would span two multiple links", i, s);
  Record nr;
  nr.support = support;
  nr.level = level;
  nr.degree = level == 3 ? 3 : level;
  nr.coeffs = std::move(c.image);
  nr.units = r.units;
  if (nr.coeffs[s].equals_integer(1)) nr.units.insert(s);
  nr.origin = Origin::Extension;
  return Entry::index(define(i, s, std::move(nr)));
}

Entry BrinkBuilder::compose(std::uint32_t i, Generator s, Generator t) {
  const Record& r = records_[i];
  const std::uint32_t dihedral = simple_image_[std::size_t{s} * sys_.rank() + t];
  Key key = r.composite ? r.components : Key{i};
  key.push_back(dihedral);
  std::sort(key.begin(), key.end());
  if (composites_.count(key)) fail("composite defined twice", i, s);
  Record nr;
  nr.composite = true;
  nr.components = std::move(key);
  nr.support = r.support | records_[dihedral].support;
  nr.units = r.units | records_[dihedral].units;
  nr.origin = Origin::Composition;
  return Entry::index(define(i, s, std::move(nr)));
}

Entry BrinkBuilder::replace(std::uint32_t i, Generator s, std::uint32_t part) {
  const Entry e = table_.entry(s, part);
  if (e.is_unset()) fail("reflection of component " + std::to_string(part) + " not yet known", i, s);
  if (e.is_non_minimal()) return Entry::non_minimal();
  if (e.is_negative_simple()) fail("component reflects to a negative root", i, s);
  const std::uint32_t nu = e.value();
  if (nu == part) return Entry::index(i);
  if (table_.depth(nu) < table_.depth(part)) fail("unrecorded descent found through component", i, s);

  const Record& r = records_[i];
  const Key old = records_[part].composite ? records_[part].components : Key{part};
  const Key fresh = records_[nu].composite ? records_[nu].components : Key{nu};
  Key key;
  std::set_difference(r.components.begin(), r.components.end(), old.begin(), old.end(), std::back_inserter(key));
  key.insert(key.end(), fresh.begin(), fresh.end());
  std::sort(key.begin(), key.end());
  if (composites_.count(key)) fail("composite defined twice", i, s);
  Record nr;
  nr.composite = true;
  for (const auto c : key) {
    nr.support |= records_[c].support;
    nr.units |= records_[c].units;
  }
  nr.components = std::move(key);
  nr.origin = Origin::Replacement;
  return Entry::index(define(i, s, std::move(nr)));
}

std::uint32_t BrinkBuilder::define(std::uint32_t parent, Generator s, Record rec) {
  if (staging_) fail("deep dihedral root has a minimal ascent outside its edge", parent, s);
  if (table_.size() >= options_.max_roots)
    throw ResourceError("minimal root count exceeds the cap of " + std::to_string(options_.max_roots));
  const std::uint32_t mu = table_.add_root(table_.depth(parent) + 1);
  rec.parent = parent;
  rec.via = s;
  if (rec.composite) composites_.emplace(rec.components, mu);
  ++census_.defined[static_cast<std::size_t>(rec.origin)];
  records_.push_back(std::move(rec));
  set_pair(s, parent, mu);
  if (!records_[mu].composite && records_[mu].degree > 6) check_special_nodes(mu);
  walk_descents(mu, parent, s);
  for (Generator u = 0; u < sys_.rank(); ++u)
    if (table_.entry(u, parent).is_non_minimal()) set_lock(u, mu);
  queue_.push_back(mu);
  return mu;
}

void BrinkBuilder::walk_descents(std::uint32_t mu, std::uint32_t lambda, Generator s) {
  for (Generator t = 0; t < sys_.rank(); ++t) {
    if (t == s || sys_.is_infinite(s, t)) continue;
    const Order m = sys_.order(s, t);
    // Walk down from lambda with t, s, t, ... while each step descends.
    std::uint32_t cur = lambda;
    unsigned steps = 0;
    while (true) {
      const Generator letter = steps % 2 == 0 ? t : s;
      const Entry e = table_.entry(letter, cur);
      if (e.is_negative_simple()) fail("descent walk reached a simple root", mu, t);
      if (!e.is_index() || table_.depth(e.value()) >= table_.depth(cur)) break;
      cur = e.value();
      if (++steps >= m) fail("descent walk longer than the edge order", mu, t);
    }
    if (steps + 1 != m) continue;
    // mu is the top of its orbit; t.mu ends the ascent from nu that avoids lambda.
    const std::uint32_t nu = cur;
    std::uint32_t ends[2];
    for (int side = 0; side < 2; ++side) {
      std::uint32_t x = nu;
      for (unsigned k = 0; k + 1 < m; ++k) {
        const Generator letter = (k % 2 == 0) == (side == 0) ? s : t;
        const Entry e = table_.entry(letter, x);
        if (!e.is_index() || table_.depth(e.value()) != table_.depth(x) + 1)
          fail("ascent from the orbit minimum is not recorded", x, letter);
        x = e.value();
      }
      ends[side] = x;
    }
    if ((ends[0] == lambda) == (ends[1] == lambda)) fail("orbit ascent does not separate lambda", mu, t);
    set_pair(t, mu, ends[0] == lambda ? ends[1] : ends[0]);
  }
}

void BrinkBuilder::check_special_nodes(std::uint32_t i) const {
  const Record& r = records_[i];
  if (r.support.size() <= 2) return;
  const Order m = r.degree;
  Generator x = 0, y = 0;
  r.support.for_each([&](Generator a) {
    (sys_.neighbors(a) & r.support).for_each([&](Generator b) {
      if (a < b && sys_.order(a, b) == m) x = a, y = b;
    });
  });
  const auto& ring = *BaseRing::get(r.level);
  const RingElem c = ring.generator();
  auto multiple_of_c = [&](const RingElem& v) {
    for (std::size_t k = 0; k < v.coeffs().size(); ++k)
      if ((k == 1) != (v[k] != 0)) return false;
    return v[1] > 0;
  };
  const GeneratorSet boundary = boundary_of(sys_, r.support);
  for (auto [a, b] : {std::pair{x, y}, std::pair{y, x}}) {
    if (!boundary.contains(a)) continue;
    const RingElem& va = r.coeffs[a];
    bool ok;
    GeneratorSet others = r.support.minus(GeneratorSet::single(a));
    if (va.equals_integer(1)) {
      ok = true;
    } else if ((va - ring.constant(2)).sign() > 0 && r.coeffs[b] == c) {
      ok = true;
      others.erase(b);
    } else {
      continue;
    }
    others.for_each([&](Generator g) { ok = ok && multiple_of_c(r.coeffs[g]); });
    if (ok) return;
  }
  std::ostringstream os;
  os << "coefficients of degree-" << m << " root violate the special-node pattern:";
  r.support.for_each([&](Generator g) { os << ' ' << g << '=' << r.coeffs[g].to_string(); });
  fail(os.str(), i, r.via);
}

void BrinkBuilder::verify_census() {
  auto note = [&](std::uint32_t i, const std::string& what) {
    census_.violations.push_back("root " + std::to_string(i) + " (" + origin_name(records_[i].origin) + "): " + what);
  };
  for (std::uint32_t i = 0; i < records_.size(); ++i) {
    const Record& r = records_[i];
    const Record& p = records_[r.parent];
    if (r.composite) ++census_.composite;
    else ++census_.indecomposable;

    // Decomposition: components are exactly the T-components at the unit nodes.
    std::vector<GeneratorSet> expected = t_components(sys_, r.support, r.units);
    std::vector<GeneratorSet> found;
    if (r.composite)
      for (const auto c : r.components) found.push_back(records_[c].support);
    else
      found.push_back(r.support);
    std::sort(found.begin(), found.end(), [](GeneratorSet a, GeneratorSet b) {
      return a.first() != b.first() ? a.first() < b.first() : a.bits() < b.bits();
    });
    if (found != expected) note(i, "components differ from the T-components of its support");
    if (r.composite)
      for (const auto c : r.components)
        if (records_[c].composite) note(i, "component " + std::to_string(c) + " is itself composite");

    switch (r.origin) {
      case Origin::Simple:
      case Origin::Dihedral:
        break;
      case Origin::Extension:
        if (p.composite || p.support.contains(r.via) || !(r.support == (p.support | GeneratorSet::single(r.via))) ||
            (sys_.neighbors(r.via) & p.support).size() != 1)
          note(i, "extension preconditions fail");
        break;
      case Origin::Promotion:
        if (p.composite || !(p.support == r.support) || !r.support.contains(r.via))
          note(i, "promotion preconditions fail");
        break;
      case Origin::Fusion:
        if (!p.composite || !(p.support == r.support) || star(r.parent, r.via).size() < 2 ||
            star(r.parent, r.via) != p.components || !p.units.contains(r.via))
          note(i, "fusion preconditions fail");
        break;
      case Origin::Composition: {
        if (!r.composite || p.support.contains(r.via) || (sys_.neighbors(r.via) & p.support).size() != 1)
          note(i, "composition preconditions fail");
        break;
      }
      case Origin::Replacement:
        if (!r.composite || !p.composite) note(i, "replacement preconditions fail");
        break;
    }
  }
}

MinimalRootTable BrinkBuilder::run(bool with_coords) {
  stage();
  while (!queue_.empty()) {
    const auto i = queue_.front();
    queue_.pop_front();
    finish(i);
  }
  for (std::uint32_t i = 0; i < table_.size(); ++i)
    for (Generator s = 0; s < sys_.rank(); ++s)
      if (table_.entry(s, i).is_unset()) fail("entry left unset", i, s);
  table_.derive_descents();
  verify_census();
  if (with_coords) {
    const auto ring = BaseRing::get(sys_.base_level());
    std::vector<RootCoordinates> coords;
    coords.reserve(table_.size());
    for (std::uint32_t i = 0; i < table_.size(); ++i) coords.push_back(expand(i, *ring));
    table_.set_coords(ring, std::move(coords));
  }
  return table_;
}

MinimalRootTable build_table_brink(const CoxeterSystem& sys, const BuildOptions& options) {
  BrinkBuilder b(sys, options);
  return b.run(true);
}

}  // namespace minroots
