#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "minroots/generator_set.hpp"

namespace minroots {

/// Order m(s,t) of the product st.
using Order = std::uint32_t;

/// Sentinel for m(s,t) = infinity. Compares greater than every finite order,
/// so "linked" tests (m >= 3) hold for it without special casing.
inline constexpr Order kInfinity = std::numeric_limits<Order>::max();

/// A Coxeter system given by its symmetric matrix of orders. Generators are
/// the indices 0..rank-1 and that order is the one used by normal forms.
class CoxeterSystem {
 public:
  /// Validates and stores a row-major rank*rank matrix. Throws ParseError on
  /// a non-symmetric matrix, a diagonal entry other than 1, or an off-diagonal
  /// entry below 2.
  CoxeterSystem(unsigned rank, std::vector<Order> matrix);

  unsigned rank() const { return rank_; }
  Order order(Generator s, Generator t) const { return m_[s * rank_ + t]; }
  bool is_infinite(Generator s, Generator t) const { return order(s, t) == kInfinity; }
  /// True when s and t are joined in the Coxeter graph (m >= 3, including infinity).
  bool linked(Generator s, Generator t) const { return s != t && order(s, t) >= 3; }

  /// {t != s : m(s,t) >= 3}.
  GeneratorSet neighbors(Generator s) const { return neighbors_[s]; }

  /// lcm of the finite off-diagonal orders above 2 (2cos(pi/2) = 0 lives in
  /// every ring). An empty lcm is reported as 3 so the ring degenerates to Z.
  unsigned base_level() const;

  /// Canonical matrix-file rendering ("inf" for infinity).
  std::string to_text() const;

  bool operator==(const CoxeterSystem&) const = default;

 private:
  unsigned rank_;
  std::vector<Order> m_;
  std::vector<GeneratorSet> neighbors_;
};

/// Parses the matrix file format: rank on the first significant line, then
/// rank rows of rank tokens; "inf" and "0" both mean infinity; lines starting
/// with '#' are comments.
CoxeterSystem parse_system(std::string_view text);

/// Reads and parses a matrix file.
CoxeterSystem load_system(const std::string& path);

}  // namespace minroots
