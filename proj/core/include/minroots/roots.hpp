#pragma once

#include <memory>
#include <vector>

#include "minroots/coxeter.hpp"
#include "minroots/cyclo.hpp"
#include "minroots/table.hpp"

namespace minroots {

/// -2 alpha_s . alpha_t for every pair of generators, precomputed in one
/// ring: embed(m) for finite m, 2 for infinity, 0 on the diagonal. Pairs
/// whose value does not lie in the ring (m > 3 not dividing the level) are
/// left out and throw when read.
class LinkWeights {
 public:
  LinkWeights(const CoxeterSystem& sys, std::shared_ptr<const BaseRing> ring);
  LinkWeights(CoxeterSystem&&, std::shared_ptr<const BaseRing>) = delete;

  const CoxeterSystem& system() const { return *sys_; }
  const BaseRing& ring() const { return *ring_; }
  const std::shared_ptr<const BaseRing>& ring_ptr() const { return ring_; }
  const RingElem& operator()(Generator s, Generator t) const {
    const RingElem& v = w_[s * sys_->rank() + t];
    if (v.ring() == nullptr) missing(s, t);
    return v;
  }

 private:
  [[noreturn]] void missing(Generator s, Generator t) const;

  const CoxeterSystem* sys_;
  std::shared_ptr<const BaseRing> ring_;
  std::vector<RingElem> w_;
};

/// 2 lambda . alpha_s = 2 lambda_s - sum over neighbors b of w(s,b) lambda_b.
RingElem doubled_dot(const LinkWeights& w, const RootCoordinates& lambda, Generator s);

/// s.lambda: only coordinate s changes, to -lambda_s + sum w(s,b) lambda_b.
RootCoordinates reflect_coordinates(const LinkWeights& w, const RootCoordinates& lambda, Generator s);

/// The simple root alpha_s as a coordinate tuple.
RootCoordinates simple_coordinates(const BaseRing& ring, unsigned rank, Generator s);

/// What s does to a minimal root.
struct Classification {
  enum class Kind { NegativeSimple, Fixed, Descent, NewMinimal, NonMinimal };
  Kind kind;
  /// s.lambda when kind is Descent or NewMinimal.
  RootCoordinates image;
};

/// Decides s.lambda from the sign of p = 2 lambda . alpha_s: positive is a
/// descent, zero fixes lambda, and a negative p makes s.lambda non-minimal
/// exactly when p <= -2.
Classification classify(const LinkWeights& w, const RootCoordinates& lambda, Generator s, bool lambda_is_alpha_s);

}  // namespace minroots
