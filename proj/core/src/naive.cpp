#include "minroots/naive.hpp"

#include <deque>
#include <string>
#include <unordered_map>

#include "minroots/error.hpp"
#include "minroots/roots.hpp"

namespace minroots {

namespace {

std::string coordinate_key(const RootCoordinates& c) {
  std::string key;
  for (const auto& x : c) {
    for (const Coeff v : x.coeffs()) key.append(reinterpret_cast<const char*>(&v), sizeof v);
  }
  return key;
}

}  // namespace

MinimalRootTable build_table_naive(const CoxeterSystem& sys, const BuildOptions& options,
                                   std::vector<unsigned>* finish_depths) {
  const unsigned n = sys.rank();
  const auto ring = BaseRing::get(sys.base_level());
  const LinkWeights weights(sys, ring);

  MinimalRootTable table(n);
  std::vector<RootCoordinates> coords;
  std::unordered_map<std::string, std::uint32_t> lookup;
  std::deque<std::uint32_t> queue;

  for (Generator s = 0; s < n; ++s) {
    const auto i = table.add_root(1);
    table.set_entry(s, i, Entry::negative_simple());
    coords.push_back(simple_coordinates(*ring, n, s));
    lookup.emplace(coordinate_key(coords.back()), i);
    queue.push_back(i);
  }

  while (!queue.empty()) {
    const std::uint32_t i = queue.front();
    queue.pop_front();
    if (finish_depths) finish_depths->push_back(table.depth(i));
    for (Generator s = 0; s < n; ++s) {
      if (!table.entry(s, i).is_unset()) continue;
      auto c = classify(weights, coords[i], s, false);
      switch (c.kind) {
        case Classification::Kind::NegativeSimple:
          throw InvariantError("unassigned entry at a simple root");
        case Classification::Kind::Fixed:
          table.set_entry(s, i, Entry::index(i));
          break;
        case Classification::Kind::NonMinimal:
          table.set_entry(s, i, Entry::non_minimal());
          break;
        case Classification::Kind::Descent:
          throw InvariantError("descent of root " + std::to_string(i) + " by generator " + std::to_string(s) +
                               " was not recorded when its image was finished");
        case Classification::Kind::NewMinimal: {
          const std::string key = coordinate_key(c.image);
          auto [it, inserted] = lookup.try_emplace(key, static_cast<std::uint32_t>(table.size()));
          std::uint32_t j = it->second;
          if (inserted) {
            if (table.size() >= options.max_roots)
              throw ResourceError("minimal root count exceeds the cap of " + std::to_string(options.max_roots));
            j = table.add_root(table.depth(i) + 1);
            coords.push_back(std::move(c.image));
            queue.push_back(j);
          } else if (table.depth(j) != table.depth(i) + 1) {
            throw InvariantError("ascent from root " + std::to_string(i) + " lands on root " + std::to_string(j) +
                                 " of unexpected depth");
          }
          table.set_entry(s, i, Entry::index(j));
          table.set_entry(s, j, Entry::index(i));
          break;
        }
      }
    }
  }
  table.derive_descents();
  table.set_coords(ring, std::move(coords));
  return table;
}

}  // namespace minroots
