#include "minroots/table.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

#include "minroots/error.hpp"

namespace minroots {

std::uint32_t MinimalRootTable::add_root(unsigned depth) {
  const auto i = static_cast<std::uint32_t>(depth_.size());
  depth_.push_back(depth);
  descents_.emplace_back();
  refl_.resize(refl_.size() + rank_);
  if (ring_) coords_.emplace_back();
  return i;
}

GeneratorSet MinimalRootTable::entry_descents(std::uint32_t i) const {
  GeneratorSet d;
  for (Generator s = 0; s < rank_; ++s) {
    const Entry e = entry(s, i);
    if (e.is_negative_simple() || (e.is_index() && depth_[e.value()] < depth_[i])) d.insert(s);
  }
  return d;
}

void MinimalRootTable::derive_descents() {
  for (std::uint32_t i = 0; i < size(); ++i) descents_[i] = entry_descents(i);
}

std::optional<Generator> MinimalRootTable::simple_generator(std::uint32_t i) const {
  for (Generator s = 0; s < rank_; ++s)
    if (entry(s, i).is_negative_simple()) return s;
  return std::nullopt;
}

void MinimalRootTable::set_coords(std::shared_ptr<const BaseRing> ring, std::vector<RootCoordinates> coords) {
  if (coords.size() != size()) throw std::invalid_argument("coordinate count does not match the table");
  for (const auto& c : coords) {
    if (c.size() != rank_) throw std::invalid_argument("coordinate tuple has the wrong length");
    for (const auto& x : c)
      if (x.ring() != ring.get()) throw std::invalid_argument("coordinates from a different ring");
  }
  ring_ = std::move(ring);
  coords_ = std::move(coords);
}

void MinimalRootTable::drop_coords() {
  ring_.reset();
  coords_.clear();
}

bool MinimalRootTable::operator==(const MinimalRootTable& o) const {
  return rank_ == o.rank_ && refl_ == o.refl_ && depth_ == o.depth_ && descents_ == o.descents_ &&
         ring_ == o.ring_ && coords_ == o.coords_;
}

MinimalRootTable canonicalize(const MinimalRootTable& table) {
  if (!table.has_coords()) throw std::invalid_argument("canonicalize needs root coordinates");
  const std::size_t n = table.size();
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (table.depth(a) != table.depth(b)) return table.depth(a) < table.depth(b);
    const auto& ca = table.coords(a);
    const auto& cb = table.coords(b);
    for (Generator g = 0; g < table.rank(); ++g) {
      if (ca[g] == cb[g]) continue;
      const int sg = (ca[g] - cb[g]).sign();
      if (sg != 0) return sg > 0;
    }
    return false;
  });

  std::vector<std::uint32_t> new_index(n);
  for (std::uint32_t k = 0; k < n; ++k) new_index[order[k]] = k;

  MinimalRootTable out(table.rank());
  std::vector<RootCoordinates> coords;
  coords.reserve(n);
  for (std::uint32_t k = 0; k < n; ++k) {
    const std::uint32_t old = order[k];
    out.add_root(table.depth(old));
    out.set_descents(k, table.descents(old));
    for (Generator s = 0; s < table.rank(); ++s) {
      const Entry e = table.entry(s, old);
      out.set_entry(s, k, e.is_index() ? Entry::index(new_index[e.value()]) : e);
    }
    coords.push_back(table.coords(old));
  }
  out.set_coords(table.ring(), std::move(coords));
  return out;
}

std::string serialize(const MinimalRootTable& table) {
  std::ostringstream out;
  out << "minroots 1\n";
  out << "rank " << table.rank() << "\n";
  out << "count " << table.size() << "\n";
  for (std::uint32_t i = 0; i < table.size(); ++i) {
    out << "root " << i << " depth " << table.depth(i) << " descents " << table.descents(i).to_hex();
    if (table.has_coords()) {
      out << " coeffs ";
      const auto& c = table.coords(i);
      for (std::size_t g = 0; g < c.size(); ++g) out << (g ? "|" : "") << c[g].to_string();
    }
    out << "\n";
  }
  for (std::uint32_t i = 0; i < table.size(); ++i) {
    out << "refl " << i;
    for (Generator s = 0; s < table.rank(); ++s) {
      const Entry e = table.entry(s, i);
      out << ' ';
      if (e.is_negative_simple()) out << '-';
      else if (e.is_non_minimal()) out << '+';
      else if (e.is_index()) out << e.value();
      else throw std::invalid_argument("cannot serialize a table with unset entries");
    }
    out << "\n";
  }
  return out.str();
}

namespace {

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  // Next line split into whitespace tokens; empty when the input is exhausted.
  std::vector<std::string_view> next() {
    std::vector<std::string_view> tokens;
    while (tokens.empty() && pos_ < text_.size()) {
      std::size_t end = text_.find('\n', pos_);
      if (end == std::string_view::npos) end = text_.size();
      std::string_view line = text_.substr(pos_, end - pos_);
      pos_ = end + 1;
      ++line_no_;
      std::size_t i = 0;
      while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) tokens.push_back(line.substr(i, j - i));
        i = j;
      }
    }
    return tokens;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("table line " + std::to_string(line_no_) + ": " + what);
  }

  std::uint64_t number(std::string_view tok) const {
    std::uint64_t v = 0;
    const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size()) fail("expected a number, found '" + std::string(tok) + "'");
    return v;
  }

  void expect(const std::vector<std::string_view>& tokens, std::size_t count, std::string_view keyword) const {
    if (tokens.size() < 1 || tokens[0] != keyword) fail("expected '" + std::string(keyword) + "'");
    if (tokens.size() != count) fail("wrong number of fields on '" + std::string(keyword) + "' line");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_no_ = 0;
};

std::vector<std::string_view> split_bar(std::string_view s) {
  std::vector<std::string_view> out;
  while (true) {
    const auto bar = s.find('|');
    out.push_back(s.substr(0, bar));
    if (bar == std::string_view::npos) break;
    s = s.substr(bar + 1);
  }
  return out;
}

}  // namespace

MinimalRootTable deserialize(std::string_view text, std::shared_ptr<const BaseRing> ring_hint) {
  LineReader in(text);
  auto tok = in.next();
  if (tok.size() != 2 || tok[0] != "minroots") in.fail("missing 'minroots' header");
  if (tok[1] != "1") in.fail("unsupported table version " + std::string(tok[1]));
  tok = in.next();
  in.expect(tok, 2, "rank");
  const auto rank = in.number(tok[1]);
  if (rank == 0 || rank > kMaxRank) in.fail("rank out of range");
  tok = in.next();
  in.expect(tok, 2, "count");
  const auto count = in.number(tok[1]);

  MinimalRootTable table(static_cast<unsigned>(rank));
  std::vector<std::vector<std::string_view>> raw_coeffs;
  bool any_coeffs = false;
  for (std::uint64_t i = 0; i < count; ++i) {
    tok = in.next();
    if (tok.size() != 6 && tok.size() != 8) in.fail("malformed 'root' line");
    if (tok[0] != "root" || tok[2] != "depth" || tok[4] != "descents") in.fail("malformed 'root' line");
    if (in.number(tok[1]) != i) in.fail("root lines out of order");
    const auto depth = in.number(tok[3]);
    if (depth == 0) in.fail("root depth must be positive");
    table.add_root(static_cast<unsigned>(depth));
    table.set_descents(static_cast<std::uint32_t>(i), GeneratorSet::from_hex(std::string(tok[5])));
    if (tok.size() == 8) {
      if (tok[6] != "coeffs") in.fail("expected 'coeffs'");
      raw_coeffs.push_back(split_bar(tok[7]));
      if (raw_coeffs.back().size() != rank) in.fail("wrong number of coefficients");
      any_coeffs = true;
    } else {
      raw_coeffs.emplace_back();
    }
  }
  for (std::uint64_t i = 0; i < count; ++i) {
    tok = in.next();
    in.expect(tok, rank + 2, "refl");
    if (in.number(tok[1]) != i) in.fail("refl lines out of order");
    for (Generator s = 0; s < rank; ++s) {
      const auto t = tok[s + 2];
      Entry e;
      if (t == "-") e = Entry::negative_simple();
      else if (t == "+") e = Entry::non_minimal();
      else {
        const auto j = in.number(t);
        if (j >= count) in.fail("entry index " + std::string(t) + " out of range");
        e = Entry::index(static_cast<std::uint32_t>(j));
      }
      table.set_entry(s, static_cast<std::uint32_t>(i), e);
    }
  }
  if (!in.next().empty()) in.fail("trailing content after the table");

  if (any_coeffs) {
    std::shared_ptr<const BaseRing> ring = ring_hint;
    for (const auto& row : raw_coeffs) {
      if (row.empty()) throw ParseError("coefficients present for some roots but not others");
      for (const auto c : row) {
        if (c.rfind("poly", 0) != 0) continue;
        const auto colon = c.find(':');
        unsigned level = 0;
        const auto [p, ec] = std::from_chars(c.data() + 4, c.data() + (colon == std::string_view::npos ? 4 : colon), level);
        if (ec != std::errc() || level == 0) throw ParseError("malformed ring element '" + std::string(c) + "'");
        if (!ring || ring->level() != level) {
          if (ring && ring != ring_hint) throw ParseError("table mixes ring levels");
          ring = BaseRing::get(level);
        }
      }
    }
    if (!ring) ring = BaseRing::get(3);
    std::vector<RootCoordinates> coords;
    for (const auto& row : raw_coeffs) {
      RootCoordinates c;
      for (const auto x : row) c.push_back(ring->parse(x));
      coords.push_back(std::move(c));
    }
    table.set_coords(ring, std::move(coords));
  }
  return table;
}

}  // namespace minroots
