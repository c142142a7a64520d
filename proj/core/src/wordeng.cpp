#include "minroots/wordeng.hpp"

#include <charconv>
#include <stdexcept>

#include "minroots/error.hpp"

namespace minroots {

namespace {

void check_letter(const MinimalRootTable& table, Generator s) {
  if (s >= table.rank()) throw std::out_of_range("generator " + std::to_string(s + 1) + " out of range");
}

}  // namespace

Word left_multiply(const MinimalRootTable& table, Generator s, const Word& nf, ScanStats* stats) {
  check_letter(table, s);
  if (!table.entry(s, s).is_negative_simple())
    throw std::invalid_argument("table does not list the simple roots first");
  const std::uint32_t rank = table.rank();
  std::size_t k = 0;
  Generator t = s;
  std::uint32_t root = s;
  for (std::size_t i = 0; i < nf.size(); ++i) {
    const Generator letter = nf[i];
    check_letter(table, letter);
    const Entry e = table.entry(letter, root);
    if (stats) ++stats->lookups;
    if (e.is_negative_simple()) {
      Word out;
      out.reserve(nf.size() - 1);
      out.insert(out.end(), nf.begin(), nf.begin() + static_cast<std::ptrdiff_t>(i));
      out.insert(out.end(), nf.begin() + static_cast<std::ptrdiff_t>(i) + 1, nf.end());
      return out;
    }
    if (e.is_non_minimal()) break;
    root = e.value();
    if (root < rank && root < letter) {
      k = i + 1;
      t = root;
    }
  }
  Word out;
  out.reserve(nf.size() + 1);
  out.insert(out.end(), nf.begin(), nf.begin() + static_cast<std::ptrdiff_t>(k));
  out.push_back(t);
  out.insert(out.end(), nf.begin() + static_cast<std::ptrdiff_t>(k), nf.end());
  return out;
}

Word normalize(const MinimalRootTable& table, const Word& word) {
  Word nf;
  for (auto it = word.rbegin(); it != word.rend(); ++it) nf = left_multiply(table, *it, nf);
  return nf;
}

Word multiply(const MinimalRootTable& table, const Word& a, const Word& b) {
  Word nf = b;
  for (auto it = a.rbegin(); it != a.rend(); ++it) nf = left_multiply(table, *it, nf);
  return nf;
}

std::size_t length(const MinimalRootTable& table, const Word& word) { return normalize(table, word).size(); }

GeneratorSet left_descents(const MinimalRootTable& table, const Word& nf) {
  GeneratorSet d;
  for (Generator s = 0; s < table.rank(); ++s)
    if (left_multiply(table, s, nf).size() < nf.size()) d.insert(s);
  return d;
}

std::vector<std::size_t> growth(const MinimalRootTable& table, unsigned max_len, std::size_t max_elements) {
  std::vector<std::size_t> counts{1};
  std::vector<Word> layer{Word{}};
  std::size_t total = 1;
  for (unsigned len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const auto& nf : layer)
      for (Generator s = 0; s < table.rank(); ++s) {
        Word cand = nf;
        cand.push_back(s);
        if (normalize(table, cand) != cand) continue;
        if (++total > max_elements)
          throw ResourceError("growth enumeration exceeds " + std::to_string(max_elements) + " elements");
        next.push_back(std::move(cand));
      }
    counts.push_back(next.size());
    layer = std::move(next);
  }
  return counts;
}

Word parse_word(std::string_view text, unsigned rank) {
  Word w;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == ',')) ++i;
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ' && text[j] != '\t' && text[j] != ',') ++j;
    if (j == i) break;
    const std::string_view tok = text.substr(i, j - i);
    i = j;
    for (const char c : tok)
      if (c < '0' || c > '9') throw ParseError("malformed word token '" + std::string(tok) + "'");
    std::vector<unsigned> letters;
    if (rank <= 9 && tok.size() > 1) {
      for (const char c : tok) letters.push_back(static_cast<unsigned>(c - '0'));
    } else {
      unsigned v = 0;
      const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc()) throw ParseError("malformed word token '" + std::string(tok) + "'");
      letters.push_back(v);
    }
    for (const unsigned v : letters) {
      if (v < 1 || v > rank)
        throw ParseError("generator " + std::to_string(v) + " out of range 1.." + std::to_string(rank));
      w.push_back(v - 1);
    }
  }
  return w;
}

std::string format_word(const Word& word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(word[i] + 1);
  }
  return out;
}

}  // namespace minroots
