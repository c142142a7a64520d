#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace minroots {

#ifdef MINROOTS_WIDE_COEFFS
using Coeff = __int128;
#else
using Coeff = std::int64_t;
#endif

using BigInt = boost::multiprecision::cpp_int;

/// Minimal polynomial of 2cos(pi/level), coefficients low degree first.
/// Built from the cyclotomic polynomial Phi_{2 level} rewritten in z + 1/z.
std::vector<BigInt> minimal_polynomial(unsigned level);

/// Cyclotomic polynomial Phi_n, coefficients low degree first.
std::vector<BigInt> cyclotomic_polynomial(unsigned n);

class BaseRing;

/// An element of Z[c] with c = 2cos(pi/L), stored in the power basis
/// 1, c, ..., c^{d-1} reduced modulo the minimal polynomial. Arithmetic is
/// checked: an overflowing coefficient throws OverflowError.
class RingElem {
 public:
  using Coeffs = boost::container::small_vector<Coeff, 4>;

  RingElem() = default;
  RingElem(const BaseRing* ring, Coeffs coeffs) : ring_(ring), c_(std::move(coeffs)) {}

  const BaseRing* ring() const { return ring_; }
  const Coeffs& coeffs() const { return c_; }
  Coeff operator[](std::size_t i) const { return c_[i]; }

  bool is_zero() const;
  bool is_constant() const;
  /// True iff the element is the rational integer n.
  bool equals_integer(Coeff n) const;

  RingElem operator+(const RingElem& o) const;
  RingElem operator-(const RingElem& o) const;
  RingElem operator*(const RingElem& o) const;
  RingElem operator-() const;
  RingElem& operator+=(const RingElem& o) { return *this = *this + o; }
  RingElem& operator-=(const RingElem& o) { return *this = *this - o; }
  RingElem& operator*=(const RingElem& o) { return *this = *this * o; }
  RingElem scaled(Coeff n) const;

  /// Exact sign of the real number this element denotes: -1, 0 or +1.
  int sign() const;
  /// Canonical rendering: "a" for constants, otherwise "poly<L>:a0,...,a_{d-1}".
  std::string to_string() const;

  bool operator==(const RingElem& o) const { return ring_ == o.ring_ && c_ == o.c_; }

 private:
  const BaseRing* ring_ = nullptr;
  Coeffs c_;
};

/// Z[2cos(pi/L)] together with an isolating interval for its generator.
/// Instances are interned per level and live for the whole process, so raw
/// pointers to them (as held by RingElem) never dangle.
class BaseRing {
 public:
  /// Interned ring of the given level (level >= 1). Thread-safe.
  static std::shared_ptr<const BaseRing> get(unsigned level);

  unsigned level() const { return level_; }
  unsigned degree() const { return static_cast<unsigned>(psi_.size()) - 1; }
  /// Minimal polynomial coefficients, low degree first, monic.
  const std::vector<Coeff>& psi() const { return psi_; }

  RingElem zero() const;
  RingElem one() const;
  RingElem constant(Coeff n) const;
  /// The generator c = 2cos(pi/L).
  RingElem generator() const;
  /// 2cos(k pi / L) = D_k(c) with D_0 = 2, D_1 = x, D_{k+1} = x D_k - D_{k-1}.
  RingElem two_cos(unsigned k) const;
  /// 2cos(pi/m). Requires m | L; m = 2 and m = 3 are accepted for every
  /// level since their values (0 and 1) are rational.
  RingElem embed(unsigned m) const;
  /// -2 alpha_s . alpha_t for an edge of order m: embed(m), or 2 for infinity.
  RingElem link_weight(std::uint32_t m) const;
  /// Maps an element of a ring whose level divides this one into this ring.
  RingElem promote(const RingElem& e) const;
  /// Builds an element from explicit power-basis coefficients.
  RingElem from_coeffs(const std::vector<Coeff>& coeffs) const;
  /// Parses the canonical rendering produced by RingElem::to_string.
  RingElem parse(std::string_view text) const;

  /// Dyadic isolating interval [lo, hi] * 2^-exp of the generator, at the
  /// precision cached at construction.
  struct Interval {
    BigInt lo, hi;
    unsigned exp = 0;
  };
  const Interval& isolating_interval() const { return interval_; }
  /// Sign of the minimal polynomial at the dyadic point num * 2^-exp.
  int psi_sign_at(const BigInt& num, unsigned exp) const;

  int sign(const RingElem& e) const;

  // Checked primitive operations, used by RingElem.
  RingElem add(const RingElem& a, const RingElem& b) const;
  RingElem sub(const RingElem& a, const RingElem& b) const;
  RingElem mul(const RingElem& a, const RingElem& b) const;

  explicit BaseRing(unsigned level);

 private:
  unsigned level_;
  std::vector<Coeff> psi_;
  std::vector<BigInt> psi_big_;
  // reduction_[j] = x^{d+j} mod psi, j = 0..d-2.
  std::vector<std::vector<Coeff>> reduction_;
  Interval interval_;
};

/// Euler's totient.
unsigned euler_phi(unsigned n);

}  // namespace minroots
