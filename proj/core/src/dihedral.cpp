#include "minroots/dihedral.hpp"

#include <deque>
#include <stdexcept>

#include "minroots/error.hpp"

namespace minroots {

namespace {

// 2cos(k pi / m) as an element of `ring`.
RingElem two_cos_in(unsigned k, Order m, const BaseRing& ring) {
  if (ring.level() % m == 0) return ring.two_cos(k * (ring.level() / m));
  if (m > 3) throw std::invalid_argument("edge order does not divide the ring level");
  // Rational for m = 2, 3: evaluate in the degenerate ring of that level.
  const auto small = BaseRing::get(m);
  return ring.constant(small->two_cos(k)[0]);
}

}  // namespace

unsigned elementary_level(Order m) { return (m <= 3 || m == kInfinity) ? 3 : m; }

RingElem coeff_C(unsigned n, Order m, const BaseRing& ring) {
  const RingElem c = ring.link_weight(m);
  RingElem prev = ring.zero();
  if (n == 0) return prev;
  RingElem cur = ring.one();
  for (unsigned i = 1; i < n; ++i) {
    RingElem next = c * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

RingElem coeff_C_closed(unsigned n, Order m, const BaseRing& ring) {
  if (m == kInfinity) throw std::invalid_argument("closed form needs a finite order");
  RingElem sum = ring.zero();
  if (n == 0) return sum;
  // Pair z^k with z^{-k}: exponents n-1, n-3, ..., down to 0 or 1.
  for (unsigned k = n - 1;; k -= 2) {
    sum += k == 0 ? ring.one() : two_cos_in(k, m, ring);
    if (k < 2) break;
  }
  return sum;
}

DihedralSystem::DihedralSystem(Order m) : m_(m), ring_(BaseRing::get(elementary_level(m))) {
  if (m < 2) throw std::invalid_argument("dihedral order must be at least 2");
  const BaseRing& r = *ring_;
  if (m == kInfinity) {
    roots_.push_back({1, r.one(), r.zero()});
    roots_.push_back({1, r.zero(), r.one()});
    s_ = {Entry::negative_simple(), Entry::non_minimal()};
    t_ = {Entry::non_minimal(), Entry::negative_simple()};
    return;
  }

  std::vector<RingElem> C;
  for (unsigned n = 0; n <= m; ++n) C.push_back(coeff_C(n, m, r));
  for (unsigned j = 0; j < m; ++j) {
    roots_.push_back({0, C[j + 1], C[j]});
    // s(a, b) = (c b - a, b) lands on (C_{j-1}, C_j) = root m - j;
    // t(a, b) = (a, c a - b) lands on (C_{j+1}, C_{j+2}) = root m - 2 - j.
    s_.push_back(j == 0 ? Entry::negative_simple() : Entry::index(m - j));
    t_.push_back(j == m - 1 ? Entry::negative_simple() : Entry::index(m - 2 - j));
  }

  // Depth by breadth-first search from the simple roots.
  std::deque<std::size_t> queue{0, m - 1};
  roots_[0].depth = roots_[m - 1].depth = 1;
  while (!queue.empty()) {
    const std::size_t j = queue.front();
    queue.pop_front();
    for (const Entry e : {s_[j], t_[j]}) {
      if (!e.is_index() || roots_[e.value()].depth != 0) continue;
      roots_[e.value()].depth = roots_[j].depth + 1;
      queue.push_back(e.value());
    }
  }
  for (const auto& root : roots_)
    if (root.depth == 0) throw InvariantError("dihedral root unreachable from the simple roots");
}

}  // namespace minroots
