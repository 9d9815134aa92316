#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "json.hpp"

#include "erlab/graph.hpp"
#include "erlab/hypergraph.hpp"
#include "erlab/partition.hpp"

namespace erlab {

/// How a vertex set X of the incidence graph spreads over the cliques K_v.
struct DensityProfile {
  VertexSet X;                               // sorted
  std::vector<std::size_t> a;                // a[v] = |X ∩ K_v|
  std::map<int, VertexSet> dyadic_classes;   // i -> {v : 2^(i-1) <= a_v < 2^i}
  int ell_dyadic = 0;                        // 0 when X meets no clique
  VertexSet evenly_partitioned;              // I'_ell, ascending
  std::size_t membership_total = 0;          // sum of a_v
};

struct WitnessParams {
  std::size_t N = 0;  // vertex count of the clique hypergraph
  std::size_t m = 0;  // size threshold on X
  double alpha = 0;
  double lambda = 0;
};

/// The sub-hypergraph of s-cliques that pick one vertex of X from each of s
/// distinct parts of an evenly partitioned clique of the dominant class.
struct WitnessSubgraph {
  int s = 0;
  std::vector<VertexSet> hyperedges;     // sorted; empty unless materialised
  std::uint64_t e_count = 0;             // from the part-count formula
  std::vector<std::uint64_t> codegrees;  // codegrees[i-1] = Delta_i
  WitnessParams params;
};

struct DensityWitness {
  DensityProfile profile;
  WitnessSubgraph witness;
};

/// Builds the profile and witness for X. Codegrees are computed from part
/// counts, which is exact when any two cliques share at most one vertex (the
/// incidence-graph case); other covers fall back to explicit enumeration.
/// Throws ParameterError when X is empty or s exceeds the number of parts.
DensityWitness density_witness(const Graph& g_star, const CliqueCover& cover,
                               const SPartition& partition, VertexSet X, int s,
                               bool materialize = true);

struct DensityReport {
  double edge_margin = 0;               // e / (alpha |X|^s)
  std::vector<double> codegree_margins; // [i-1]: lambda (e/|X|)^(1-(i-1)/(s-1)) / Delta_i
  bool holds = false;
  double alpha_star = 0;   // e / |X|^s
  double lambda_star = 0;  // max_i Delta_i / (e/|X|)^(1-(i-1)/(s-1))
};

/// Evaluates both inequality families at W.params and the smallest (alpha,
/// lambda) that W itself satisfies. Throws ParameterError when X_size is 0.
DensityReport check_uniform_density(const WitnessSubgraph& W, std::size_t X_size);

nlohmann::json to_json(const DensityReport& r);

/// Elementary symmetric polynomial e_k of the given counts.
std::uint64_t elementary_symmetric(const std::vector<std::uint64_t>& counts, int k);

/// All s-cliques of g, as sorted vertex sets in lexicographic order; the
/// edge set of the K_s hypergraph.
std::vector<VertexSet> clique_hypergraph(const Graph& g, int s);

/// Compares the K_s hypergraph of blow_up(g, k) with the k-blow-up of the
/// K_s hypergraph of g. Returns the first differing hyperedge, if any.
struct BlowUpTransfer {
  bool equal = false;
  bool counts_ok = false;  // v = k v(G), e = k^2 e(G)
  std::size_t hyperedges = 0;
  std::optional<VertexSet> mismatch;
};
BlowUpTransfer check_blow_up_transfer(const Graph& g, std::size_t k, int s);

}  // namespace erlab
