#pragma once

#include <stdexcept>
#include <string>

namespace minroots {

/// Malformed matrix or table text. The message names the offending
/// line/row/column when one is known.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A fixed-width ring coefficient would have overflowed.
class OverflowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured cap (root count, ball size) was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency check failed during construction. Always a bug
/// or a violated structural theorem; never caused by user input alone.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace minroots
