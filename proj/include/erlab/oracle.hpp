#pragma once

// Brute-force reference implementations. Nothing here calls into the
// solvers, extractors or constructors; the only shared code is the Graph
// and EdgeColoring containers themselves. Intended for small inputs.

#include <cstdint>
#include <optional>
#include <vector>

#include "erlab/graph.hpp"

namespace erlab::oracle {

/// Every s-subset tested pairwise, in lexicographic order.
std::vector<VertexSet> all_cliques(const Graph& g, int s);

/// Bitmask of each K_s (n <= 32).
std::vector<std::uint32_t> clique_masks(const Graph& g, int s);

/// contains[mask] = 1 iff G[mask] has a K_s, via a superset closure over all
/// 2^n masks. n <= 24.
std::vector<std::uint8_t> contains_clique_table(const Graph& g, int s);

struct AlphaOracle {
  std::size_t size = 0;
  VertexSet witness;  // lexicographically least maximum set
};
AlphaOracle alpha(const Graph& g, int s);

/// Number of K_s-free subsets with at least min_size vertices.
std::uint64_t count_free(const Graph& g, int s, std::size_t min_size);

/// Whether `set` spans no hyperedge fully.
bool independent_in(const std::vector<VertexSet>& family, const VertexSet& set);
/// Largest independent set of a hypergraph on n <= 24 vertices.
std::size_t max_independent(std::size_t n, const std::vector<VertexSet>& family);

/// Any monochromatic K_b, checked over all b-subsets.
bool has_mono_clique(const Graph& g, const EdgeColoring& c, int b);

/// Ordering checks: ell(i) for the given order and the invariants.
std::vector<int> ell_of_order(const EdgeColoring& c, const VertexSet& order);

/// Condition (1): v1v2 is not of v1's most frequent colour in the whole K_k
/// (ties to the smallest colour). Condition (2): for i >= 3, the edges from
/// v_i back to v_1..v_{i-1} carry at least two colours.
bool half_sequence_ok(std::size_t k, const EdgeColoring& c, const VertexSet& seq);

/// Every s-set with one vertex in each of s distinct parts of some clique,
/// restricted to X. parts_of(v) lists (member, part) pairs of K_v.
std::vector<VertexSet> transversals(const std::vector<std::vector<std::pair<Vertex, int>>>& cliques,
                                    const std::vector<Vertex>& chosen_cliques,
                                    const VertexSet& X, int s);

/// Max over i-subsets T of X of the number of hyperedges containing T,
/// by enumerating all i-subsets that appear in some hyperedge.
std::uint64_t codegree(const std::vector<VertexSet>& hyperedges, int i);

/// The k-blow-up of a hypergraph on n vertices: vertex (u, j) -> u*k + j.
std::vector<VertexSet> hypergraph_blow_up(const std::vector<VertexSet>& edges, std::size_t k);

}  // namespace erlab::oracle
