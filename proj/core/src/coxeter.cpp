#include "minroots/coxeter.hpp"

#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

#include "minroots/error.hpp"

namespace minroots {

CoxeterSystem::CoxeterSystem(unsigned rank, std::vector<Order> matrix)
    : rank_(rank), m_(std::move(matrix)) {
  if (rank_ == 0) throw ParseError("rank must be positive");
  if (rank_ > kMaxRank) throw ParseError("rank " + std::to_string(rank_) + " exceeds the supported maximum of 64");
  if (m_.size() != std::size_t{rank_} * rank_) throw ParseError("matrix has the wrong number of entries");
  for (Generator i = 0; i < rank_; ++i) {
    for (Generator j = 0; j < rank_; ++j) {
      const Order v = order(i, j);
      const std::string where = "row " + std::to_string(i + 1) + ", column " + std::to_string(j + 1);
      if (i == j && v != 1) throw ParseError("diagonal entry at " + where + " must be 1");
      if (i != j && v < 2) throw ParseError("off-diagonal entry at " + where + " must be at least 2");
      if (v != order(j, i)) throw ParseError("matrix is not symmetric at " + where);
    }
  }
  neighbors_.resize(rank_);
  for (Generator i = 0; i < rank_; ++i)
    for (Generator j = 0; j < rank_; ++j)
      if (linked(i, j)) neighbors_[i].insert(j);
}

unsigned CoxeterSystem::base_level() const {
  unsigned level = 1;
  for (Generator i = 0; i < rank_; ++i)
    for (Generator j = i + 1; j < rank_; ++j)
      if (order(i, j) != kInfinity && order(i, j) > 2) level = std::lcm(level, order(i, j));
  return level == 1 ? 3 : level;
}

std::string CoxeterSystem::to_text() const {
  std::ostringstream out;
  out << rank_ << '\n';
  for (Generator i = 0; i < rank_; ++i) {
    for (Generator j = 0; j < rank_; ++j) {
      if (j) out << ' ';
      if (order(i, j) == kInfinity) out << "inf";
      else out << order(i, j);
    }
    out << '\n';
  }
  return out.str();
}

namespace {

std::vector<std::string> significant_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(pos, end - pos));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first != std::string::npos && line[first] != '#') lines.push_back(line);
    pos = end + 1;
  }
  return lines;
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

Order parse_order(const std::string& tok, std::size_t row, std::size_t col) {
  if (tok == "inf" || tok == "0") return kInfinity;
  Order v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || v == kInfinity)
    throw ParseError("malformed entry '" + tok + "' at row " + std::to_string(row) + ", column " +
                     std::to_string(col));
  return v;
}

}  // namespace

CoxeterSystem parse_system(std::string_view text) {
  const auto lines = significant_lines(text);
  if (lines.empty()) throw ParseError("empty matrix file");
  const auto head = tokens(lines[0]);
  unsigned rank = 0;
  if (head.size() != 1 || std::from_chars(head[0].data(), head[0].data() + head[0].size(), rank).ec != std::errc() ||
      rank == 0)
    throw ParseError("first line must hold the rank as a positive integer");
  if (rank > kMaxRank) throw ParseError("rank " + std::to_string(rank) + " exceeds the supported maximum of 64");
  if (lines.size() != rank + 1)
    throw ParseError("expected " + std::to_string(rank) + " matrix rows, found " + std::to_string(lines.size() - 1));
  std::vector<Order> m;
  m.reserve(std::size_t{rank} * rank);
  for (unsigned r = 0; r < rank; ++r) {
    const auto row = tokens(lines[r + 1]);
    if (row.size() != rank)
      throw ParseError("row " + std::to_string(r + 1) + " has " + std::to_string(row.size()) + " entries, expected " +
                       std::to_string(rank));
    for (unsigned c = 0; c < rank; ++c) m.push_back(parse_order(row[c], r + 1, c + 1));
  }
  return CoxeterSystem(rank, std::move(m));
}

CoxeterSystem load_system(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open matrix file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_system(buf.str());
}

}  // namespace minroots
