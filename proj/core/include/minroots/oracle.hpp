#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "minroots/coxeter.hpp"
#include "minroots/cyclo.hpp"
#include "minroots/table.hpp"
#include "minroots/wordeng.hpp"

namespace minroots {

/// Exact matrices of the standard realization in the basis of simple roots.
/// Generator s acts on coordinate columns as the identity except row s,
/// which becomes (-1 at s, w(s,b) at each neighbor b).
class Realization {
 public:
  using Matrix = std::vector<RingElem>;  // row-major rank x rank

  /// Uses the ring of level sys.base_level() unless one is given.
  explicit Realization(const CoxeterSystem& sys, std::shared_ptr<const BaseRing> ring = nullptr);
  explicit Realization(CoxeterSystem&&, std::shared_ptr<const BaseRing> = nullptr) = delete;

  const CoxeterSystem& system() const { return *sys_; }
  const BaseRing& ring() const { return *ring_; }
  unsigned rank() const { return sys_->rank(); }

  const Matrix& generator(Generator s) const { return gens_[s]; }
  Matrix identity() const;
  Matrix multiply(const Matrix& a, const Matrix& b) const;
  /// a * M_s, touching only the columns of s and its neighbors.
  Matrix times_generator(const Matrix& a, Generator s) const;
  /// M_s * a, touching only row s.
  Matrix generator_times(Generator s, const Matrix& a) const;
  /// Byte string identifying the matrix exactly.
  static std::string key(const Matrix& m);

 private:
  const CoxeterSystem* sys_;
  std::shared_ptr<const BaseRing> ring_;
  std::vector<RingElem> w_;  // w_[s * rank + t] = -2 alpha_s . alpha_t
  std::vector<Matrix> gens_;
};

/// realization_matrices(sys, ring)[s] is the matrix of generator s.
std::vector<Realization::Matrix> realization_matrices(const CoxeterSystem& sys,
                                                      std::shared_ptr<const BaseRing> ring = nullptr);

/// All group elements of length <= radius, found by breadth-first right
/// multiplication over exact matrices, with their normal forms: the last
/// letter of NF(w) is the least s with l(ws) < l(w), preceded by NF(ws).
class CayleyBall {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  CayleyBall(const CoxeterSystem& sys, unsigned radius, std::size_t max_elements = 4'000'000);
  CayleyBall(CoxeterSystem&&, unsigned, std::size_t = 0) = delete;

  unsigned radius() const { return radius_; }
  std::size_t size() const { return elements_.size(); }
  unsigned length(std::size_t i) const { return length_[i]; }
  const Word& normal_form(std::size_t i) const { return nf_[i]; }
  const Realization::Matrix& matrix(std::size_t i) const { return elements_[i]; }

  /// Index of the element with this matrix, or npos if outside the ball.
  std::size_t find(const Realization::Matrix& m) const;
  /// Index of w_i * s, or npos.
  std::size_t right_product(std::size_t i, Generator s) const { return right_[i * realization_.rank() + s]; }
  /// Index of s * w_i, or npos.
  std::size_t left_product(Generator s, std::size_t i) const;
  /// Elements of each length 0..radius.
  std::vector<std::size_t> sphere_sizes() const;

  const Realization& realization() const { return realization_; }

 private:
  Realization realization_;
  unsigned radius_;
  std::vector<Realization::Matrix> elements_;
  std::vector<unsigned> length_;
  std::vector<Word> nf_;
  std::vector<std::size_t> right_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Positive roots reachable from the simple roots by reflections, in the
/// ring of level sys.base_level(). Only terminates for finite groups; throws
/// ResourceError past `cap` roots.
std::vector<RootCoordinates> positive_root_closure(const CoxeterSystem& sys, std::size_t cap = 100'000);

}  // namespace minroots
