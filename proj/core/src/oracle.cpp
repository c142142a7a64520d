#include "minroots/oracle.hpp"

#include <deque>
#include <stdexcept>

#include "minroots/error.hpp"

namespace minroots {

Realization::Realization(const CoxeterSystem& sys, std::shared_ptr<const BaseRing> ring)
    : sys_(&sys), ring_(ring ? std::move(ring) : BaseRing::get(sys.base_level())) {
  const unsigned n = sys.rank();
  for (Generator s = 0; s < n; ++s)
    for (Generator t = 0; t < n; ++t) w_.push_back(s == t ? ring_->zero() : ring_->link_weight(sys.order(s, t)));
  for (Generator s = 0; s < n; ++s) {
    Matrix m = identity();
    for (Generator t = 0; t < n; ++t) m[s * n + t] = s == t ? ring_->constant(-1) : w_[s * n + t];
    gens_.push_back(std::move(m));
  }
}

Realization::Matrix Realization::identity() const {
  const unsigned n = rank();
  Matrix m(std::size_t{n} * n, ring_->zero());
  for (unsigned i = 0; i < n; ++i) m[i * n + i] = ring_->one();
  return m;
}

Realization::Matrix Realization::multiply(const Matrix& a, const Matrix& b) const {
  const unsigned n = rank();
  Matrix c(std::size_t{n} * n, ring_->zero());
  for (unsigned i = 0; i < n; ++i)
    for (unsigned k = 0; k < n; ++k) {
      const RingElem& x = a[i * n + k];
      if (x.is_zero()) continue;
      for (unsigned j = 0; j < n; ++j)
        if (!b[k * n + j].is_zero()) c[i * n + j] += x * b[k * n + j];
    }
  return c;
}

Realization::Matrix Realization::times_generator(const Matrix& a, Generator s) const {
  // Column j of a * M_s is a_j + a_s w(s,j) for j != s, and -a_s for j = s.
  const unsigned n = rank();
  Matrix c = a;
  for (unsigned i = 0; i < n; ++i) {
    const RingElem& as = a[i * n + s];
    c[i * n + s] = -as;
    if (as.is_zero()) continue;
    sys_->neighbors(s).for_each([&](Generator j) { c[i * n + j] += as * w_[s * n + j]; });
  }
  return c;
}

Realization::Matrix Realization::generator_times(Generator s, const Matrix& a) const {
  const unsigned n = rank();
  Matrix c = a;
  for (unsigned j = 0; j < n; ++j) {
    RingElem v = -a[s * n + j];
    sys_->neighbors(s).for_each([&](Generator b) {
      if (!a[b * n + j].is_zero()) v += w_[s * n + b] * a[b * n + j];
    });
    c[s * n + j] = std::move(v);
  }
  return c;
}

std::string Realization::key(const Matrix& m) {
  std::string k;
  for (const auto& x : m)
    for (const Coeff v : x.coeffs()) k.append(reinterpret_cast<const char*>(&v), sizeof v);
  return k;
}

std::vector<Realization::Matrix> realization_matrices(const CoxeterSystem& sys, std::shared_ptr<const BaseRing> ring) {
  const Realization r(sys, std::move(ring));
  std::vector<Realization::Matrix> out;
  for (Generator s = 0; s < sys.rank(); ++s) out.push_back(r.generator(s));
  return out;
}

CayleyBall::CayleyBall(const CoxeterSystem& sys, unsigned radius, std::size_t max_elements)
    : realization_(sys), radius_(radius) {
  const unsigned n = sys.rank();
  elements_.push_back(realization_.identity());
  length_.push_back(0);
  index_.emplace(Realization::key(elements_[0]), 0);

  for (std::size_t i = 0; i < elements_.size(); ++i) {
    for (Generator s = 0; s < n; ++s) {
      Realization::Matrix m = realization_.times_generator(elements_[i], s);
      std::string k = Realization::key(m);
      auto it = index_.find(k);
      std::size_t j = npos;
      if (it != index_.end()) {
        j = it->second;
      } else if (length_[i] < radius_) {
        if (elements_.size() >= max_elements)
          throw ResourceError("Cayley ball exceeds " + std::to_string(max_elements) + " elements");
        j = elements_.size();
        elements_.push_back(std::move(m));
        length_.push_back(length_[i] + 1);
        index_.emplace(std::move(k), j);
      }
      right_.push_back(j);
    }
  }

  nf_.resize(elements_.size());
  for (std::size_t i = 1; i < elements_.size(); ++i) {
    for (Generator s = 0; s < n; ++s) {
      const std::size_t j = right_product(i, s);
      if (j == npos || length_[j] >= length_[i]) continue;
      nf_[i] = nf_[j];
      nf_[i].push_back(s);
      break;
    }
    if (nf_[i].size() != length_[i]) throw InvariantError("oracle normal form length differs from distance");
  }
}

std::size_t CayleyBall::find(const Realization::Matrix& m) const {
  const auto it = index_.find(Realization::key(m));
  return it == index_.end() ? npos : it->second;
}

std::size_t CayleyBall::left_product(Generator s, std::size_t i) const {
  return find(realization_.generator_times(s, elements_[i]));
}

std::vector<std::size_t> CayleyBall::sphere_sizes() const {
  std::vector<std::size_t> out(radius_ + 1, 0);
  for (const unsigned l : length_) ++out[l];
  return out;
}

std::vector<RootCoordinates> positive_root_closure(const CoxeterSystem& sys, std::size_t cap) {
  const Realization r(sys);
  const unsigned n = sys.rank();
  const auto& ring = r.ring();
  std::vector<RootCoordinates> roots;
  std::unordered_map<std::string, std::size_t> seen;
  auto key = [](const RootCoordinates& c) { return Realization::key(c); };
  for (Generator s = 0; s < n; ++s) {
    RootCoordinates c(n, ring.zero());
    c[s] = ring.one();
    seen.emplace(key(c), roots.size());
    roots.push_back(std::move(c));
  }
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (Generator s = 0; s < n; ++s) {
      // Apply M_s to the coordinate column.
      RootCoordinates c = roots[i];
      RingElem v = -c[s];
      for (Generator b = 0; b < n; ++b)
        if (b != s && !c[b].is_zero()) v += r.generator(s)[s * n + b] * c[b];
      c[s] = std::move(v);
      if (c[s].sign() < 0) continue;
      std::string k = key(c);
      if (seen.count(k)) continue;
      if (roots.size() >= cap) throw ResourceError("positive root closure exceeds " + std::to_string(cap) + " roots");
      seen.emplace(std::move(k), roots.size());
      roots.push_back(std::move(c));
    }
  }
  return roots;
}

}  // namespace minroots
