#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "minroots/generator_set.hpp"
#include "minroots/table.hpp"

namespace minroots {

/// A word in the generators, 0-based.
using Word = std::vector<Generator>;

/// Counts reflection-table reads made by left_multiply.
struct ScanStats {
  std::size_t lookups = 0;
};

/// Normal form of s * w for w given in normal form. One table read per
/// scanned letter: the scan tracks the root w_i^{-1} alpha_s, remembers the
/// last position where it is a simple root smaller than the current letter,
/// and either deletes a letter (the root becomes negative) or inserts s's
/// image at the remembered position. The table's simple roots must be the
/// roots 0..rank-1 in generator order.
Word left_multiply(const MinimalRootTable& table, Generator s, const Word& nf, ScanStats* stats = nullptr);

/// Normal form of an arbitrary word: right-to-left fold of left_multiply.
Word normalize(const MinimalRootTable& table, const Word& word);

/// Normal form of a * b for normal forms a and b.
Word multiply(const MinimalRootTable& table, const Word& a, const Word& b);

std::size_t length(const MinimalRootTable& table, const Word& word);

/// {s : s * nf is shorter than nf}.
GeneratorSet left_descents(const MinimalRootTable& table, const Word& nf);

/// Number of group elements of each length 0..max_len, enumerating normal
/// forms breadth first. Throws ResourceError beyond max_elements.
std::vector<std::size_t> growth(const MinimalRootTable& table, unsigned max_len,
                                std::size_t max_elements = 10'000'000);

/// Parses 1-based generator numbers separated by whitespace. When rank <= 9 a
/// token of several digits is read one letter per digit.
Word parse_word(std::string_view text, unsigned rank);

/// 1-based, space separated.
std::string format_word(const Word& word);

}  // namespace minroots
