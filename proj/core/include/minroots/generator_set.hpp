#pragma once

#include <bit>
#include <cstdint>
#include <string>

namespace minroots {

using Generator = std::uint32_t;

/// Maximum rank supported by the bitset representation.
inline constexpr unsigned kMaxRank = 64;

/// A subset of the generators, stored as a 64-bit mask.
class GeneratorSet {
 public:
  constexpr GeneratorSet() = default;
  constexpr explicit GeneratorSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr GeneratorSet single(Generator s) { return GeneratorSet(std::uint64_t{1} << s); }

  constexpr bool contains(Generator s) const { return (bits_ >> s) & 1U; }
  constexpr void insert(Generator s) { bits_ |= std::uint64_t{1} << s; }
  constexpr void erase(Generator s) { bits_ &= ~(std::uint64_t{1} << s); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr unsigned size() const { return static_cast<unsigned>(std::popcount(bits_)); }
  constexpr std::uint64_t bits() const { return bits_; }

  /// Lowest member; undefined on an empty set.
  constexpr Generator first() const { return static_cast<Generator>(std::countr_zero(bits_)); }

  constexpr GeneratorSet operator|(GeneratorSet o) const { return GeneratorSet(bits_ | o.bits_); }
  constexpr GeneratorSet operator&(GeneratorSet o) const { return GeneratorSet(bits_ & o.bits_); }
  constexpr GeneratorSet minus(GeneratorSet o) const { return GeneratorSet(bits_ & ~o.bits_); }
  constexpr GeneratorSet& operator|=(GeneratorSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr bool operator==(const GeneratorSet&) const = default;
  constexpr bool subset_of(GeneratorSet o) const { return (bits_ & ~o.bits_) == 0; }

  /// Iterates members in increasing generator order.
  template <class F>
  constexpr void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(static_cast<Generator>(std::countr_zero(b)));
  }

  /// Lower-case hexadecimal rendering without prefix ("0" for the empty set).
  std::string to_hex() const;
  static GeneratorSet from_hex(const std::string& text);

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace minroots
