#pragma once

#include <random>
#include <string>
#include <vector>

#include "minroots/coxeter.hpp"

namespace minroots::test {

inline std::string data_path(const std::string& name) { return std::string(MINROOTS_TEST_DATA) + "/" + name; }

inline CoxeterSystem load(const std::string& name) { return load_system(data_path(name)); }

/// Symmetric matrix with off-diagonal orders drawn uniformly from `orders`.
inline CoxeterSystem random_system(std::mt19937_64& rng, unsigned rank, const std::vector<Order>& orders) {
  std::vector<Order> m(std::size_t{rank} * rank, 1);
  std::uniform_int_distribution<std::size_t> pick(0, orders.size() - 1);
  for (unsigned i = 0; i < rank; ++i)
    for (unsigned j = i + 1; j < rank; ++j) m[i * rank + j] = m[j * rank + i] = orders[pick(rng)];
  return CoxeterSystem(rank, std::move(m));
}

}  // namespace minroots::test
