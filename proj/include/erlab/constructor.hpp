#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "erlab/graph.hpp"
#include "erlab/hypergraph.hpp"
#include "erlab/partition.hpp"

namespace erlab {

// ---- linear triangle-free hypergraph -------------------------------------

struct HypergraphBuildReport {
  std::size_t edges = 0;
  double packing_ratio = 0;       // edges / (n^2 / R^2)
  std::size_t linear_ceiling = 0; // floor(n(n-1) / (R(R-1)))
  std::size_t attempts = 0;
};

struct HypergraphBuild {
  LinearHypergraph hypergraph;
  HypergraphBuildReport report;
};

/// max(3, ceil(log2 n)).
int default_uniformity(std::size_t n);

/// Random-greedy packing: R-sets are grown along random vertex orders and
/// accepted while the family stays linear and triangle-free. Stops after
/// `patience` consecutive failed attempts (0 picks a size-based default).
HypergraphBuild build_linear_tf_hypergraph(std::size_t n, int R, std::uint64_t seed,
                                           std::size_t patience = 0);

// ---- sparsification -------------------------------------------------------

enum class PartitionScheme {
  uniform,   // f_v(x) independent and uniform on [s]
  balanced,  // shuffle K_v, then deal parts round-robin
};

struct SparsifyOptions {
  int s = 2;
  std::uint64_t seed = 1;
  std::size_t samples = 100;
  std::optional<std::size_t> threshold;  // minimum |X|; default = number of cliques
  std::size_t retry_limit = 32;
  PartitionScheme scheme = PartitionScheme::uniform;
  /// When false a failed certification is recorded instead of thrown, and
  /// the best attempt is kept.
  bool require_certificate = true;
};

/// One sampled X and how the dominant dyadic class fared on it.
struct EvenPartitionSample {
  VertexSet X;
  int dominant_class = 0;        // i with 2^(i-1) <= a_v < 2^i
  std::size_t class_size = 0;    // |I_i|
  std::size_t evenly = 0;        // |I'_i|
  bool passed = true;
};

struct SparsifyCertificate {
  bool passed = false;
  bool vacuous = false;  // threshold above |V(G)|: no X qualifies
  std::size_t attempts = 0;
  std::size_t samples = 0;
  std::size_t threshold = 0;
  std::size_t failing_samples = 0;  // in the kept attempt
  std::optional<EvenPartitionSample> worst;
};

class CertificationFailure : public std::runtime_error {
 public:
  CertificationFailure(const std::string& what, SparsifyCertificate cert)
      : std::runtime_error(what), cert_(std::move(cert)) {}
  const SparsifyCertificate& certificate() const { return cert_; }

 private:
  SparsifyCertificate cert_;
};

struct SparsifyResult {
  Graph g_star;
  SPartition partition;
  SparsifyCertificate certificate;
};

/// Part assignment for one attempt; exposed for tests and replays.
SPartition random_partition(const CliqueCover& cover, int s, std::uint64_t seed,
                            std::size_t attempt, PartitionScheme scheme);
/// Keeps the edges of G whose endpoints lie in different parts of their clique.
Graph apply_partition(const Graph& g, const CliqueCover& cover, const SPartition& p);
/// Every part of K_v meets X in at least |X ∩ K_v| / (s+1) vertices.
bool evenly_partitioned(const SPartition& p, Vertex v, const VertexSet& sorted_X);
EvenPartitionSample check_even_partition(const CliqueCover& cover, const SPartition& p,
                                         VertexSet X);

SparsifyResult sparsify(const Graph& g, const CliqueCover& cover, const SparsifyOptions& opts);

// ---- blow-up and overlay --------------------------------------------------

/// Vertex (u, i) becomes u*k + i.
Graph blow_up(const Graph& g, std::size_t k);

struct OverlayRecord {
  std::vector<VertexSet> permutations;  // permutations[c][x] = union label of copy c's vertex x
  std::vector<Edge> union_edges;        // sorted
  std::vector<std::vector<int>> provenance;  // sorted copy indices per union edge
  VertexSet retained;                   // union labels kept, ascending
};

struct OverlayResult {
  Graph graph;  // vertex i is union vertex retained[i]
  OverlayRecord record;
};

OverlayResult overlay_and_retain(const std::vector<Graph>& copies, double retention_p,
                                 std::uint64_t seed);

// ---- full upper-bound instance ---------------------------------------------

struct ConstructionParams {
  int s = 5;
  int b = 3;
  int t = 2;
  std::size_t k = 1;
  double retention_p = 1.0;
  std::optional<int> R;
  std::uint64_t seed = 1;
  std::size_t samples = 100;
  std::size_t retry_limit = 32;
  std::optional<std::size_t> threshold;
  PartitionScheme scheme = PartitionScheme::uniform;
  std::uint64_t pi_search_nodes = 5'000'000;
};

struct ResolvedParams {
  ConstructionParams input;
  std::size_t n = 0;
  int ell = 0;
  int beta = 0;
  int R = 0;
  long long C_const = 0;  // 32 s (s+1)^2
};

/// Computes ell and beta from the Ramsey table; throws ParameterError when
/// ell > t and UnresolvedRamsey when ell cannot be determined.
ResolvedParams resolve_params(const ConstructionParams& params, std::size_t n);

/// A colouring of K_s with ell colours and no monochromatic K_b, or none.
std::optional<EdgeColoring> clique_palette(int s, int b, int ell, std::uint64_t search_nodes);

struct CertificateCheck {
  std::string name;
  bool passed = false;
  bool hard = true;  // soft checks are reported but do not fail the bundle
  std::string detail;
  nlohmann::json witness;
};

struct UpperBoundInstance {
  ResolvedParams params;
  LinearHypergraph hypergraph;
  HypergraphBuildReport hypergraph_report;
  Graph incidence;
  CliqueCover cover;
  Graph g_star;
  SPartition partition;
  SparsifyCertificate sparsify_certificate;
  Graph blown;
  OverlayRecord overlay;
  Graph final_graph;
  EdgeColoring coloring;
  EdgeColoring pi;
  std::vector<CertificateCheck> checks;

  bool certified() const;
};

UpperBoundInstance construct_upper_bound_instance(const ConstructionParams& params, std::size_t n);

/// Structured certificate: parameters, stage counts, check name -> result.
/// Keys are sorted and no timings are included.
nlohmann::json certificate_json(const UpperBoundInstance& inst);

/// Writes hypergraph.txt, incidence.txt, gstar.txt, partition.txt,
/// final_graph.txt, coloring.txt, pi.txt, overlay.json and certificate.json.
void write_instance(const UpperBoundInstance& inst, const std::filesystem::path& dir);

/// Re-checks a stored instance directory: the colouring covers the final
/// graph and no colour class contains K_b. Returns the failing check, if any.
std::optional<CertificateCheck> replay_instance(const std::filesystem::path& dir, int b);

}  // namespace erlab
