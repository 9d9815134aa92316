#pragma once

#include <optional>
#include <vector>

#include "erlab/graph.hpp"

namespace erlab {

/// Part assignment f_v : K_v -> [s] for every clique of a cover.
/// parts[v][i] is the part of members[v][i]; members[v] is sorted.
struct SPartition {
  int s = 0;
  std::vector<VertexSet> members;
  std::vector<std::vector<int>> parts;

  std::optional<int> part_of(Vertex v, Vertex x) const;
  /// Sizes of the s parts of K_v.
  std::vector<std::size_t> part_sizes(Vertex v) const;

  friend bool operator==(const SPartition&, const SPartition&) = default;
};

}  // namespace erlab
