#pragma once

#include <cstdint>

namespace minroots {

/// One cell of the reflection table: the index of the minimal root s.lambda,
/// or one of the two virtual values. "Negative simple" marks lambda = alpha_s
/// (s.lambda is negative); "non-minimal" marks a positive non-minimal image.
class Entry {
 public:
  constexpr Entry() = default;

  static constexpr Entry index(std::uint32_t i) { return Entry(static_cast<std::int32_t>(i)); }
  static constexpr Entry negative_simple() { return Entry(kNegSimple); }
  static constexpr Entry non_minimal() { return Entry(kNonMinimal); }

  constexpr bool is_index() const { return raw_ >= 0; }
  constexpr bool is_negative_simple() const { return raw_ == kNegSimple; }
  constexpr bool is_non_minimal() const { return raw_ == kNonMinimal; }
  constexpr bool is_unset() const { return raw_ == kUnset; }
  constexpr std::uint32_t value() const { return static_cast<std::uint32_t>(raw_); }

  constexpr bool operator==(const Entry&) const = default;

 private:
  static constexpr std::int32_t kNegSimple = -1;
  static constexpr std::int32_t kNonMinimal = -2;
  static constexpr std::int32_t kUnset = -3;

  constexpr explicit Entry(std::int32_t raw) : raw_(raw) {}
  std::int32_t raw_ = kUnset;
};

}  // namespace minroots
