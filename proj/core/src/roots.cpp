#include "minroots/roots.hpp"

#include <stdexcept>
#include <string>

namespace minroots {

LinkWeights::LinkWeights(const CoxeterSystem& sys, std::shared_ptr<const BaseRing> ring)
    : sys_(&sys), ring_(std::move(ring)) {
  const unsigned n = sys.rank();
  w_.reserve(std::size_t{n} * n);
  for (Generator s = 0; s < n; ++s)
    for (Generator t = 0; t < n; ++t) {
      const Order m = sys.order(s, t);
      if (s == t) w_.push_back(ring_->zero());
      else if (m <= 3 || m == kInfinity || ring_->level() % m == 0) w_.push_back(ring_->link_weight(m));
      else w_.emplace_back();
    }
}

void LinkWeights::missing(Generator s, Generator t) const {
  throw std::logic_error("link " + std::to_string(s) + "-" + std::to_string(t) + " of order " +
                         std::to_string(sys_->order(s, t)) + " is not representable in ring level " +
                         std::to_string(ring_->level()));
}

RingElem doubled_dot(const LinkWeights& w, const RootCoordinates& lambda, Generator s) {
  RingElem p = lambda[s].scaled(2);
  w.system().neighbors(s).for_each([&](Generator b) {
    if (!lambda[b].is_zero()) p -= w(s, b) * lambda[b];
  });
  return p;
}

RootCoordinates reflect_coordinates(const LinkWeights& w, const RootCoordinates& lambda, Generator s) {
  RootCoordinates out = lambda;
  RingElem v = -lambda[s];
  w.system().neighbors(s).for_each([&](Generator b) {
    if (!lambda[b].is_zero()) v += w(s, b) * lambda[b];
  });
  out[s] = std::move(v);
  return out;
}

RootCoordinates simple_coordinates(const BaseRing& ring, unsigned rank, Generator s) {
  RootCoordinates c(rank, ring.zero());
  c[s] = ring.one();
  return c;
}

Classification classify(const LinkWeights& w, const RootCoordinates& lambda, Generator s, bool lambda_is_alpha_s) {
  using Kind = Classification::Kind;
  if (lambda_is_alpha_s) return {Kind::NegativeSimple, {}};
  const RingElem p = doubled_dot(w, lambda, s);
  const int sg = p.sign();
  if (sg == 0) return {Kind::Fixed, {}};
  if (sg < 0 && (p + w.ring().constant(2)).sign() <= 0) return {Kind::NonMinimal, {}};
  RootCoordinates image = lambda;
  // s.lambda = lambda - p alpha_s.
  image[s] = lambda[s] - p;
  return {sg > 0 ? Kind::Descent : Kind::NewMinimal, std::move(image)};
}

}  // namespace minroots
