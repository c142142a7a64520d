#include "minroots/generator_set.hpp"

#include <cstdio>

#include "minroots/error.hpp"

namespace minroots {

std::string GeneratorSet::to_hex() const {
  char buf[20];
  std::snprintf(buf, sizeof buf, "%llx", static_cast<unsigned long long>(bits_));
  return buf;
}

GeneratorSet GeneratorSet::from_hex(const std::string& text) {
  if (text.empty() || text.size() > 16) throw ParseError("bad generator bitset '" + text + "'");
  std::uint64_t v = 0;
  for (char ch : text) {
    unsigned d;
    if (ch >= '0' && ch <= '9') d = ch - '0';
    else if (ch >= 'a' && ch <= 'f') d = ch - 'a' + 10;
    else if (ch >= 'A' && ch <= 'F') d = ch - 'A' + 10;
    else throw ParseError("bad generator bitset '" + text + "'");
    v = (v << 4) | d;
  }
  return GeneratorSet(v);
}

}  // namespace minroots
