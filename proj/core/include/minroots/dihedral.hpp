#pragma once

#include <memory>
#include <vector>

#include "minroots/coxeter.hpp"
#include "minroots/cyclo.hpp"
#include "minroots/entry.hpp"

namespace minroots {

/// C_n for the edge order m, with C_0 = 0, C_1 = 1 and
/// C_{n+2} = c C_{n+1} - C_n where c = 2cos(pi/m) (c = 2 for infinity).
/// The result lives in `ring`, whose level must be a multiple of m when m > 3.
RingElem coeff_C(unsigned n, Order m, const BaseRing& ring);

/// The same number as the symmetric sum z^{n-1} + z^{n-3} + ... + z^{1-n},
/// z = exp(i pi/m), folded into 2cos terms. Finite m only.
RingElem coeff_C_closed(unsigned n, Order m, const BaseRing& ring);

/// The positive roots of the rank-2 system on generators s (first) and t.
/// Root j has coefficients (C_{j+1}, C_j) on (alpha_s, alpha_t), so root 0 is
/// alpha_s and root m-1 is alpha_t. For m = infinity only alpha_s and alpha_t
/// are kept (they are the only minimal roots) at indices 0 and 1.
class DihedralSystem {
 public:
  struct Root {
    unsigned depth;
    RingElem coeff_s, coeff_t;
  };

  /// Coefficients are placed in the elementary ring of level m (level 3 for
  /// m <= 3 or infinity).
  explicit DihedralSystem(Order m);

  Order order() const { return m_; }
  std::size_t size() const { return roots_.size(); }
  const Root& root(std::size_t j) const { return roots_[j]; }
  const std::shared_ptr<const BaseRing>& ring() const { return ring_; }

  /// Image of root j under s (first = true) or t; indices refer to this system.
  Entry reflect(bool first, std::size_t j) const { return first ? s_[j] : t_[j]; }

  std::size_t alpha_s() const { return 0; }
  std::size_t alpha_t() const { return roots_.size() - 1; }

 private:
  Order m_;
  std::shared_ptr<const BaseRing> ring_;
  std::vector<Root> roots_;
  std::vector<Entry> s_, t_;
};

/// Level of the elementary ring holding coefficients for edge order m.
unsigned elementary_level(Order m);

}  // namespace minroots
