#include "erlab/constructor.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

#include "erlab/bitset.hpp"
#include "erlab/errors.hpp"
#include "erlab/freeness.hpp"
#include "erlab/io.hpp"
#include "erlab/random.hpp"

namespace erlab {

namespace {
// Stream tags for derive_seed, one per pipeline stage.
constexpr std::uint64_t kTagHypergraph = 1;
constexpr std::uint64_t kTagSparsify = 2;
constexpr std::uint64_t kTagOverlay = 3;
constexpr std::uint64_t kTagPermutation = 11;
constexpr std::uint64_t kTagRetention = 12;
constexpr std::uint64_t kTagSamples = 21;
}  // namespace

int default_uniformity(std::size_t n) {
  int log2n = n <= 1 ? 0 : int(std::bit_width(n - 1));  // ceil(log2 n)
  return std::max(3, log2n);
}

HypergraphBuild build_linear_tf_hypergraph(std::size_t n, int R, std::uint64_t seed,
                                           std::size_t patience) {
  if (R < 3) throw ParameterError("uniformity R must be at least 3");
  if (std::size_t(R) > n)
    throw ParameterError("R=" + std::to_string(R) + " exceeds n=" + std::to_string(n));
  if (patience == 0) patience = std::max<std::size_t>(200, 4 * n);

  // forbidden[x] holds every y that may no longer share a new edge with x:
  // pairs already covered (linearity) and pairs that would close a
  // hypergraph triangle with two existing edges meeting at a third vertex.
  std::vector<Bitset> forbidden(n, Bitset(n));
  std::vector<VertexSet> through(n);
  std::vector<VertexSet> edges;
  Rng rng(derive_seed(seed, kTagHypergraph));
  VertexSet order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = Vertex(i);

  auto forbid = [&](Vertex x, Vertex y) {
    forbidden[x].set(y);
    forbidden[y].set(x);
  };

  std::size_t failures = 0, attempts = 0;
  Bitset allowed(n);
  while (failures < patience) {
    ++attempts;
    rng.shuffle(std::span<Vertex>(order));
    for (std::size_t i = 0; i < n; ++i) allowed.set(i);
    VertexSet e;
    for (Vertex v : order) {
      if (!allowed.test(v)) continue;
      e.push_back(v);
      if (e.size() == std::size_t(R)) break;
      allowed.reset(v);
      auto aw = allowed.words();
      auto fw = forbidden[v].words();
      for (std::size_t w = 0; w < aw.size(); ++w) aw[w] &= ~fw[w];
    }
    if (e.size() < std::size_t(R)) {
      ++failures;
      continue;
    }
    failures = 0;
    std::sort(e.begin(), e.end());
    for (std::size_t a = 0; a < e.size(); ++a)
      for (std::size_t b = a + 1; b < e.size(); ++b) forbid(e[a], e[b]);
    for (Vertex w : e)
      for (Vertex f : through[w])
        for (Vertex x : e)
          if (x != w)
            for (Vertex y : edges[f])
              if (y != w) forbid(x, y);
    for (Vertex w : e) through[w].push_back(Vertex(edges.size()));
    edges.push_back(std::move(e));
  }

  HypergraphBuild out;
  out.hypergraph = LinearHypergraph(n, R, std::move(edges));
  const auto report = validate_hypergraph(out.hypergraph);
  if (!report.linear || !report.triangle_free)
    throw std::logic_error("greedy packing produced an invalid hypergraph");
  out.report.edges = out.hypergraph.edges.size();
  out.report.packing_ratio = double(out.report.edges) * R * R / (double(n) * double(n));
  out.report.linear_ceiling = n * (n - 1) / (std::size_t(R) * std::size_t(R - 1));
  out.report.attempts = attempts;
  return out;
}

// ---- sparsification ---------------------------------------------------------

SPartition random_partition(const CliqueCover& cover, int s, std::uint64_t seed,
                            std::size_t attempt, PartitionScheme scheme) {
  SPartition p;
  p.s = s;
  p.members = cover.cliques;
  p.parts.resize(cover.cliques.size());
  for (std::size_t v = 0; v < cover.cliques.size(); ++v) {
    Rng rng(derive_seed(seed, attempt + 1, v));
    const std::size_t size = cover.cliques[v].size();
    auto& parts = p.parts[v];
    parts.assign(size, 0);
    if (scheme == PartitionScheme::uniform) {
      for (auto& part : parts) part = int(rng.below(std::uint64_t(s)));
    } else {
      std::vector<std::size_t> slots(size);
      for (std::size_t i = 0; i < size; ++i) slots[i] = i;
      rng.shuffle(std::span<std::size_t>(slots));
      for (std::size_t i = 0; i < size; ++i) parts[slots[i]] = int(i % std::size_t(s));
    }
  }
  return p;
}

Graph apply_partition(const Graph& g, const CliqueCover& cover, const SPartition& p) {
  std::vector<Edge> kept;
  for (const Edge& e : g.edges()) {
    const auto v = cover.shared_clique(e.u, e.v);
    if (!v) throw StructuralError("edge outside every clique of the cover");
    if (*p.part_of(*v, e.u) != *p.part_of(*v, e.v)) kept.push_back(e);
  }
  return Graph(g.order(), kept);
}

bool evenly_partitioned(const SPartition& p, Vertex v, const VertexSet& sorted_X) {
  std::vector<std::size_t> count(std::size_t(p.s), 0);
  std::size_t total = 0;
  const auto& members = p.members[v];
  for (std::size_t i = 0; i < members.size(); ++i)
    if (std::binary_search(sorted_X.begin(), sorted_X.end(), members[i])) {
      ++count[std::size_t(p.parts[v][i])];
      ++total;
    }
  for (std::size_t c : count)
    if (c * std::size_t(p.s + 1) < total) return false;
  return true;
}

EvenPartitionSample check_even_partition(const CliqueCover& cover, const SPartition& p,
                                         VertexSet X) {
  std::sort(X.begin(), X.end());
  EvenPartitionSample sample;
  std::vector<std::size_t> a(cover.cliques.size(), 0);
  for (Vertex x : X)
    for (Vertex v : cover.memberships[x]) ++a[v];
  std::map<int, std::size_t> weight;
  for (std::size_t v = 0; v < a.size(); ++v)
    if (a[v] > 0) weight[int(std::bit_width(a[v]))] += a[v];
  if (weight.empty()) {
    sample.X = std::move(X);
    return sample;
  }
  int best = weight.begin()->first;
  for (auto [cls, w] : weight)
    if (w > weight[best]) best = cls;  // strict: ties stay with the smaller index
  sample.dominant_class = best;
  for (std::size_t v = 0; v < a.size(); ++v) {
    if (a[v] == 0 || int(std::bit_width(a[v])) != best) continue;
    ++sample.class_size;
    if (evenly_partitioned(p, Vertex(v), X)) ++sample.evenly;
  }
  sample.passed = 2 * sample.evenly >= sample.class_size;
  sample.X = std::move(X);
  return sample;
}

namespace {

bool worse(const EvenPartitionSample& a, const EvenPartitionSample& b) {
  // Compare evenly/class_size without division.
  return a.evenly * b.class_size < b.evenly * a.class_size;
}

}  // namespace

SparsifyResult sparsify(const Graph& g, const CliqueCover& cover, const SparsifyOptions& opts) {
  if (opts.s < 2) throw ParameterError("sparsify needs s >= 2");
  if (cover.memberships.size() != g.order())
    throw StructuralError("cover does not match the graph's vertex count");
  const std::size_t N = g.order();
  const std::size_t threshold = opts.threshold.value_or(cover.cliques.size());

  SparsifyResult best;
  std::optional<std::size_t> best_failing;
  const std::size_t attempts = std::max<std::size_t>(1, opts.retry_limit);
  for (std::size_t attempt = 0; attempt < attempts; ++attempt) {
    SPartition p = random_partition(cover, opts.s, opts.seed, attempt, opts.scheme);
    SparsifyCertificate cert;
    cert.attempts = attempt + 1;
    cert.threshold = threshold;
    if (threshold > N || threshold == 0) {
      // No X of the required size exists (or the empty set qualifies, which
      // is evenly partitioned everywhere): the certificate holds vacuously.
      cert.vacuous = true;
      cert.passed = true;
      return {apply_partition(g, cover, p), std::move(p), cert};
    }
    Rng rng(derive_seed(opts.seed, kTagSamples, attempt));
    VertexSet pool(N);
    for (std::size_t i = 0; i < N; ++i) pool[i] = Vertex(i);
    for (std::size_t j = 0; j < opts.samples; ++j) {
      const std::size_t size = threshold + std::size_t(rng.below(N - threshold + 1));
      for (std::size_t i = 0; i < size; ++i) std::swap(pool[i], pool[i + rng.below(N - i)]);
      auto sample = check_even_partition(cover, p, VertexSet(pool.begin(), pool.begin() + std::ptrdiff_t(size)));
      ++cert.samples;
      if (!sample.passed) ++cert.failing_samples;
      if (!cert.worst || worse(sample, *cert.worst)) cert.worst = std::move(sample);
    }
    cert.passed = cert.failing_samples == 0;
    if (!best_failing || cert.failing_samples < *best_failing) {
      best_failing = cert.failing_samples;
      best = {Graph(), std::move(p), cert};
    }
    best.certificate.attempts = attempt + 1;
    if (cert.passed) break;
  }
  if (!best.certificate.passed && opts.require_certificate)
    throw CertificationFailure("even-partition certification failed after " +
                                   std::to_string(attempts) + " attempts",
                               best.certificate);
  best.g_star = apply_partition(g, cover, best.partition);
  return best;
}

// ---- blow-up and overlay ----------------------------------------------------

Graph blow_up(const Graph& g, std::size_t k) {
  if (k < 1) throw ParameterError("blow-up factor must be at least 1");
  std::vector<Edge> edges;
  edges.reserve(g.size() * k * k);
  for (const Edge& e : g.edges())
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        edges.push_back(make_edge(Vertex(e.u * k + i), Vertex(e.v * k + j)));
  return Graph(g.order() * k, edges);
}

OverlayResult overlay_and_retain(const std::vector<Graph>& copies, double retention_p,
                                 std::uint64_t seed) {
  if (copies.empty()) throw ParameterError("overlay needs at least one copy");
  if (!(retention_p >= 0.0 && retention_p <= 1.0))
    throw ParameterError("retention probability must lie in [0, 1]");
  const std::size_t N = copies.front().order();
  for (const auto& c : copies)
    if (c.order() != N) throw ParameterError("overlay copies must share one vertex count");

  OverlayRecord rec;
  std::vector<std::pair<Edge, int>> tagged;
  for (std::size_t c = 0; c < copies.size(); ++c) {
    VertexSet perm(N);
    for (std::size_t i = 0; i < N; ++i) perm[i] = Vertex(i);
    Rng rng(derive_seed(seed, kTagPermutation, c));
    rng.shuffle(std::span<Vertex>(perm));
    for (const Edge& e : copies[c].edges())
      tagged.push_back({make_edge(perm[e.u], perm[e.v]), int(c)});
    rec.permutations.push_back(std::move(perm));
  }
  std::sort(tagged.begin(), tagged.end());
  for (const auto& [e, c] : tagged) {
    if (rec.union_edges.empty() || rec.union_edges.back() != e) {
      rec.union_edges.push_back(e);
      rec.provenance.emplace_back();
    }
    rec.provenance.back().push_back(c);
  }
  Rng keep(derive_seed(seed, kTagRetention));
  for (std::size_t x = 0; x < N; ++x)
    if (keep.bernoulli(retention_p)) rec.retained.push_back(Vertex(x));

  const Graph union_graph(N, rec.union_edges);
  OverlayResult out{union_graph.induced(rec.retained), std::move(rec)};
  return out;
}

// ---- full pipeline ------------------------------------------------------------

ResolvedParams resolve_params(const ConstructionParams& params, std::size_t n) {
  if (params.s < 2) throw ParameterError("s must be at least 2");
  if (params.b < 3) throw ParameterError("b must be at least 3");
  if (params.t < 1) throw ParameterError("t must be at least 1");
  if (params.k < 1) throw ParameterError("k must be at least 1");
  if (!(params.retention_p >= 0.0 && params.retention_p <= 1.0))
    throw ParameterError("retention probability must lie in [0, 1]");
  ResolvedParams rp;
  rp.input = params;
  rp.n = n;
  rp.R = params.R.value_or(default_uniformity(n));
  rp.C_const = 32LL * params.s * (params.s + 1) * (params.s + 1);
  const auto& table = RamseyTable::standard();
  rp.ell = 0;
  for (int ell = 0; ell <= params.t; ++ell) {
    if (!table.multicolor_at_most(ell, params.b, std::size_t(params.s))) {
      rp.ell = ell;
      break;
    }
  }
  if (rp.ell == 0)
    throw ParameterError("no ell <= t with r_ell(" + std::to_string(params.b) + ") > " +
                         std::to_string(params.s) + ": the construction is vacuous");
  rp.beta = params.t / rp.ell - 1;
  return rp;
}

namespace {

EdgeColoring double_pentagon() {
  const Graph k5 = Graph::complete(5);
  std::vector<int> colors;
  for (const Edge& e : k5.edges()) {
    const int d = int(e.v - e.u) % 5;
    colors.push_back(d == 1 || d == 4 ? 0 : 1);
  }
  return EdgeColoring(k5, colors, 2);
}

// Vertices as ell-digit base-(b-1) strings; an edge takes the position of
// the first differing digit. Each colour class is (b-1)-partite.
EdgeColoring product_coloring(int s, int b, int ell) {
  const Graph ks = Graph::complete(std::size_t(s));
  std::vector<int> colors;
  for (const Edge& e : ks.edges()) {
    int x = int(e.u), y = int(e.v), pos = 0;
    while (x % (b - 1) == y % (b - 1)) {
      x /= (b - 1);
      y /= (b - 1);
      ++pos;
    }
    colors.push_back(pos);
  }
  return EdgeColoring(ks, colors, ell);
}

EdgeColoring restrict_to_first(const EdgeColoring& c, std::size_t s, int colours) {
  const Graph ks = Graph::complete(s);
  std::vector<int> colors;
  for (const Edge& e : ks.edges()) colors.push_back(c.at(e.u, e.v));
  return EdgeColoring(ks, colors, colours);
}

}  // namespace

std::optional<EdgeColoring> clique_palette(int s, int b, int ell, std::uint64_t search_nodes) {
  if (s < 1 || b < 3 || ell < 0) throw ParameterError("invalid palette request");
  const Graph ks = Graph::complete(std::size_t(s));
  if (ks.size() == 0) return EdgeColoring(ks, {}, std::max(1, ell));
  if (ell == 0) return std::nullopt;
  if (s < b) return EdgeColoring(ks, std::vector<int>(ks.size(), 0), ell);
  if (s == 5 && b == 3 && ell == 2) return double_pentagon();

  static std::mutex mutex;
  static std::map<std::tuple<int, int, int, std::uint64_t>, std::optional<EdgeColoring>> cache;
  const auto key = std::make_tuple(s, b, ell, search_nodes);
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  std::optional<EdgeColoring> result;
  FreenessQuery q{ks, ell, b, std::nullopt};
  const SearchResult r = search_free_coloring(q, SearchBudget{search_nodes, 0});
  if (r.status == SearchStatus::found) {
    result = EdgeColoring(ks, r.coloring->colors(), ell);
  } else if (r.status == SearchStatus::inconclusive) {
    // Explicit constructions settle the cases the bounded search cannot.
    long long cells = 1;
    for (int i = 0; i < ell && cells < s; ++i) cells *= (b - 1);
    if (cells >= s) {
      result = product_coloring(s, b, ell);
    } else if (b == 3 && ell == 3 && s <= 16) {
      result = restrict_to_first(greenwood_gleason_coloring(), std::size_t(s), 3);
    }
  }
  if (result && find_mono_clique(ks, *result, b)) result.reset();
  std::lock_guard<std::mutex> lock(mutex);
  cache[key] = result;
  return result;
}

bool UpperBoundInstance::certified() const {
  for (const auto& c : checks)
    if (c.hard && !c.passed) return false;
  return true;
}

namespace {

nlohmann::json vertex_list(const VertexSet& vs) {
  nlohmann::json j = nlohmann::json::array();
  for (Vertex v : vs) j.push_back(v);
  return j;
}

void add_check(std::vector<CertificateCheck>& checks, std::string name, bool passed,
               std::string detail, nlohmann::json witness = nullptr, bool hard = true) {
  checks.push_back({std::move(name), passed, hard, std::move(detail), std::move(witness)});
}

}  // namespace

UpperBoundInstance construct_upper_bound_instance(const ConstructionParams& params, std::size_t n) {
  UpperBoundInstance inst;
  inst.params = resolve_params(params, n);
  const auto& rp = inst.params;
  const int s = params.s, b = params.b, ell = rp.ell;

  auto pi = clique_palette(s, b, ell, params.pi_search_nodes);
  if (!pi)
    throw UnsupportedParameters("no verified " + std::to_string(ell) + "-colouring of K_" +
                                std::to_string(s) + " without a monochromatic K_" +
                                std::to_string(b));
  inst.pi = *pi;

  auto built = build_linear_tf_hypergraph(n, rp.R, derive_seed(params.seed, kTagHypergraph));
  inst.hypergraph = std::move(built.hypergraph);
  inst.hypergraph_report = built.report;
  auto [incidence, cover] = incidence_graph(inst.hypergraph);
  inst.incidence = std::move(incidence);
  inst.cover = std::move(cover);

  SparsifyOptions so;
  so.s = s;
  so.seed = derive_seed(params.seed, kTagSparsify);
  so.samples = params.samples;
  so.threshold = params.threshold;
  so.retry_limit = params.retry_limit;
  so.scheme = params.scheme;
  so.require_certificate = false;
  auto sp = sparsify(inst.incidence, inst.cover, so);
  inst.g_star = std::move(sp.g_star);
  inst.partition = std::move(sp.partition);
  inst.sparsify_certificate = sp.certificate;

  inst.blown = blow_up(inst.g_star, params.k);
  std::vector<Graph> copies(std::size_t(rp.beta + 1), inst.blown);
  auto overlay = overlay_and_retain(copies, params.retention_p, derive_seed(params.seed, kTagOverlay));
  inst.final_graph = std::move(overlay.graph);
  inst.overlay = std::move(overlay.record);

  // Colour: final vertex -> union vertex -> (lowest contributing copy,
  // blown vertex) -> incidence vertex -> shared clique and parts -> pi.
  const auto& rec = inst.overlay;
  const std::size_t N = inst.blown.order();
  std::vector<VertexSet> inverse(rec.permutations.size(), VertexSet(N));
  for (std::size_t c = 0; c < rec.permutations.size(); ++c)
    for (std::size_t x = 0; x < N; ++x) inverse[c][rec.permutations[c][x]] = Vertex(x);
  std::vector<int> colors;
  colors.reserve(inst.final_graph.size());
  for (const Edge& e : inst.final_graph.edges()) {
    const Vertex r1 = rec.retained[e.u], r2 = rec.retained[e.v];
    const Edge ue = make_edge(r1, r2);
    const auto it = std::lower_bound(rec.union_edges.begin(), rec.union_edges.end(), ue);
    const int copy = rec.provenance[std::size_t(it - rec.union_edges.begin())].front();
    const Vertex x1 = Vertex(inverse[std::size_t(copy)][r1] / params.k);
    const Vertex x2 = Vertex(inverse[std::size_t(copy)][r2] / params.k);
    const Vertex v = *inst.cover.shared_clique(x1, x2);
    const int p1 = *inst.partition.part_of(v, x1), p2 = *inst.partition.part_of(v, x2);
    colors.push_back(inst.pi.at(Vertex(p1), Vertex(p2)) + copy * ell);
  }
  inst.coloring = EdgeColoring(inst.final_graph, colors, params.t);

  // ---- certificates ----
  auto& checks = inst.checks;
  add_check(checks, "params.ell_le_t", ell <= params.t,
            "ell=" + std::to_string(ell) + " t=" + std::to_string(params.t));
  add_check(checks, "pi.mono_free", !find_mono_clique(Graph::complete(std::size_t(s)), inst.pi, b),
            "colouring of K_" + std::to_string(s) + " with " + std::to_string(ell) + " colours");

  const auto hr = validate_hypergraph(inst.hypergraph);
  add_check(checks, "hypergraph.linear", hr.linear, std::to_string(inst.hypergraph.edges.size()) + " edges",
            hr.linear_witness ? nlohmann::json{hr.linear_witness->first, hr.linear_witness->second}
                              : nlohmann::json(nullptr));
  add_check(checks, "hypergraph.triangle_free", hr.triangle_free, "",
            hr.triangle_witness ? nlohmann::json(*hr.triangle_witness) : nlohmann::json(nullptr));

  add_check(checks, "incidence.cover_partitions_edges",
            cover_partitions_edges(inst.incidence, inst.cover), "");
  for (int q : {3, 4}) {
    auto outside = clique_outside_cover(inst.incidence, inst.cover, q);
    add_check(checks, "incidence.k" + std::to_string(q) + "_in_some_clique", !outside, "",
              outside ? vertex_list(*outside) : nlohmann::json(nullptr));
  }

  bool subgraph = true;
  for (const Edge& e : inst.g_star.edges()) subgraph = subgraph && inst.incidence.adjacent(e.u, e.v);
  add_check(checks, "sparsify.subgraph", subgraph, "E(G_*) within E(G)");
  std::optional<std::pair<Vertex, Edge>> bad_pair;
  for (std::size_t v = 0; v < inst.cover.cliques.size() && !bad_pair; ++v) {
    const auto& kv = inst.cover.cliques[v];
    for (std::size_t i = 0; i < kv.size() && !bad_pair; ++i)
      for (std::size_t j = i + 1; j < kv.size(); ++j) {
        const bool split = inst.partition.parts[v][i] != inst.partition.parts[v][j];
        if (inst.g_star.adjacent(kv[i], kv[j]) != split) {
          bad_pair = std::make_pair(Vertex(v), Edge{kv[i], kv[j]});
          break;
        }
      }
  }
  add_check(checks, "sparsify.complete_partite", !bad_pair,
            "G_*[K_v] complete " + std::to_string(s) + "-partite for every v",
            bad_pair ? nlohmann::json{bad_pair->first, bad_pair->second.u, bad_pair->second.v}
                     : nlohmann::json(nullptr));
  {
    const auto& cert = inst.sparsify_certificate;
    nlohmann::json w = nullptr;
    if (cert.worst)
      w = {{"dominant_class", cert.worst->dominant_class},
           {"class_size", cert.worst->class_size},
           {"evenly", cert.worst->evenly},
           {"X_size", cert.worst->X.size()}};
    add_check(checks, "sparsify.even_partition", cert.passed,
              std::to_string(cert.samples) + " samples, " + std::to_string(cert.failing_samples) +
                  " failing, " + std::to_string(cert.attempts) + " attempts" +
                  (cert.vacuous ? ", vacuous" : ""),
              w, /*hard=*/false);
  }

  add_check(checks, "blow_up.counts",
            inst.blown.order() == params.k * inst.g_star.order() &&
                inst.blown.size() == params.k * params.k * inst.g_star.size(),
            std::to_string(inst.blown.order()) + " vertices, " + std::to_string(inst.blown.size()) +
                " edges");

  bool bijective = true;
  for (const auto& perm : rec.permutations) {
    VertexSet sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) bijective = bijective && sorted[i] == i;
  }
  add_check(checks, "overlay.permutations_bijective", bijective,
            std::to_string(rec.permutations.size()) + " copies");
  bool provenance_ok = rec.provenance.size() == rec.union_edges.size();
  for (const auto& p : rec.provenance) provenance_ok = provenance_ok && !p.empty();
  add_check(checks, "overlay.provenance_nonempty", provenance_ok,
            std::to_string(rec.union_edges.size()) + " union edges");

  add_check(checks, "coloring.covers_edges", inst.coloring.covers_exactly(inst.final_graph), "");
  for (int c = 0; c < params.t; ++c) {
    auto hit = find_mono_clique_in_color(inst.final_graph, inst.coloring, c, b);
    add_check(checks, "coloring.no_mono_k" + std::to_string(b) + ".color_" + std::to_string(c), !hit,
              "", hit ? vertex_list(*hit) : nlohmann::json(nullptr));
  }
  bool palette_ok = true;
  nlohmann::json palette_witness = nullptr;
  for (std::size_t i = 0; i < inst.final_graph.size() && palette_ok; ++i) {
    const Edge& e = inst.final_graph.edges()[i];
    const Edge ue = make_edge(rec.retained[e.u], rec.retained[e.v]);
    const auto it = std::lower_bound(rec.union_edges.begin(), rec.union_edges.end(), ue);
    const int copy = rec.provenance[std::size_t(it - rec.union_edges.begin())].front();
    if (inst.coloring.colors()[i] / ell != copy) {
      palette_ok = false;
      palette_witness = {e.u, e.v};
    }
  }
  add_check(checks, "coloring.palette_disjoint", palette_ok,
            "copy c uses colours [c*ell, (c+1)*ell)", palette_witness);
  add_check(checks, "coloring.colors_used_le_t",
            int(inst.coloring.used_colors()) <= params.t && (rp.beta + 1) * ell <= params.t,
            std::to_string(inst.coloring.used_colors()) + " used, palette " +
                std::to_string((rp.beta + 1) * ell));
  return inst;
}

nlohmann::json certificate_json(const UpperBoundInstance& inst) {
  const auto& rp = inst.params;
  nlohmann::json j;
  j["parameters"] = {
      {"s", rp.input.s},
      {"b", rp.input.b},
      {"t", rp.input.t},
      {"n", rp.n},
      {"ell", rp.ell},
      {"beta", rp.beta},
      {"k", rp.input.k},
      {"R", rp.R},
      {"C_const", rp.C_const},
      {"retention_p", rp.input.retention_p},
      {"seed", rp.input.seed},
      {"samples", rp.input.samples},
      {"retry_limit", rp.input.retry_limit},
      {"threshold", inst.sparsify_certificate.threshold},
      {"partition_scheme", rp.input.scheme == PartitionScheme::uniform ? "uniform" : "balanced"},
  };
  j["counts"] = {
      {"hypergraph_edges", inst.hypergraph.edges.size()},
      {"packing_ratio", inst.hypergraph_report.packing_ratio},
      {"linear_ceiling", inst.hypergraph_report.linear_ceiling},
      {"incidence_vertices", inst.incidence.order()},
      {"incidence_edges", inst.incidence.size()},
      {"gstar_edges", inst.g_star.size()},
      {"blowup_vertices", inst.blown.order()},
      {"blowup_edges", inst.blown.size()},
      {"union_edges", inst.overlay.union_edges.size()},
      {"final_vertices", inst.final_graph.order()},
      {"final_edges", inst.final_graph.size()},
      {"colors_used", inst.coloring.used_colors()},
  };
  nlohmann::json checks = nlohmann::json::object();
  for (const auto& c : inst.checks)
    checks[c.name] = {{"pass", c.passed}, {"hard", c.hard}, {"detail", c.detail}, {"witness", c.witness}};
  j["checks"] = checks;
  j["certified"] = inst.certified();
  j["note"] = "asymptotic edge counts and growth rates: asymptotic — reported, not asserted";
  return j;
}

void write_instance(const UpperBoundInstance& inst, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  auto dump = [&](const char* name, auto&& writer) {
    std::ostringstream ss;
    writer(ss);
    save_text(dir / name, ss.str());
  };
  dump("hypergraph.txt", [&](std::ostream& o) { write_hypergraph(o, inst.hypergraph); });
  dump("incidence.txt", [&](std::ostream& o) { write_graph(o, inst.incidence); });
  dump("gstar.txt", [&](std::ostream& o) { write_graph(o, inst.g_star); });
  dump("partition.txt", [&](std::ostream& o) { write_partition(o, inst.partition); });
  dump("final_graph.txt", [&](std::ostream& o) { write_graph(o, inst.final_graph); });
  dump("coloring.txt", [&](std::ostream& o) { write_coloring(o, inst.coloring); });
  dump("pi.txt", [&](std::ostream& o) { write_coloring(o, inst.pi); });
  nlohmann::json overlay;
  overlay["permutations"] = inst.overlay.permutations;
  overlay["retained"] = inst.overlay.retained;
  save_text(dir / "overlay.json", overlay.dump() + "\n");
  save_text(dir / "certificate.json", certificate_json(inst).dump(2) + "\n");
}

std::optional<CertificateCheck> replay_instance(const std::filesystem::path& dir, int b) {
  const Graph g = load_graph(dir / "final_graph.txt");
  const EdgeColoring c = load_coloring(dir / "coloring.txt");
  if (!c.covers_exactly(g)) {
    try {
      c.require_covers(g);
    } catch (const StructuralError& e) {
      return CertificateCheck{"replay.coloring_covers_edges", false, true, e.what(), nullptr};
    }
  }
  if (auto hit = find_mono_clique(g, c, b)) {
    nlohmann::json w = {{"color", hit->color}, {"clique", vertex_list(hit->clique)}};
    return CertificateCheck{"replay.no_mono_k" + std::to_string(b), false, true,
                            "monochromatic K_" + std::to_string(b) + " in colour " +
                                std::to_string(hit->color),
                            w};
  }
  return std::nullopt;
}

}  // namespace erlab
