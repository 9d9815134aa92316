#include "erlab/partition.hpp"

#include <algorithm>

namespace erlab {

std::optional<int> SPartition::part_of(Vertex v, Vertex x) const {
  const auto& m = members[v];
  auto it = std::lower_bound(m.begin(), m.end(), x);
  if (it == m.end() || *it != x) return std::nullopt;
  return parts[v][std::size_t(it - m.begin())];
}

std::vector<std::size_t> SPartition::part_sizes(Vertex v) const {
  std::vector<std::size_t> sizes(std::size_t(s), 0);
  for (int p : parts[v]) ++sizes[std::size_t(p)];
  return sizes;
}

}  // namespace erlab
