#include "erlab/alpha.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>

#include "erlab/bitset.hpp"
#include "erlab/bounds.hpp"
#include "erlab/errors.hpp"
#include "erlab/freeness.hpp"
#include "erlab/random.hpp"

namespace erlab {

namespace {

constexpr std::uint64_t kTagAlteration = 31;
constexpr std::uint64_t kTagExtract = 32;

using Words = std::vector<std::uint64_t>;

// Is there a clique of `need` vertices among the set bits of cand?
bool has_clique(const Graph& g, Words cand, int need) {
  if (need <= 0) return true;
  for (std::size_t w = 0; w < cand.size(); ++w) {
    while (cand[w]) {
      const int bit = std::countr_zero(cand[w]);
      cand[w] &= cand[w] - 1;
      if (need == 1) return true;
      const Vertex x = Vertex(w * 64 + std::size_t(bit));
      const auto row = g.row(x);
      Words next(cand.size(), 0);
      bool any = false;
      // Only later bits: earlier ones were already tried as the first pick.
      for (std::size_t j = w; j < cand.size(); ++j) {
        next[j] = cand[j] & row[j];
        any = any || next[j];
      }
      if (any && has_clique(g, std::move(next), need - 1)) return true;
    }
  }
  return false;
}

bool completes(const Graph& g, const Words& members, Vertex v, int s) {
  const auto row = g.row(v);
  Words cand(members.size());
  bool any = false;
  for (std::size_t j = 0; j < cand.size(); ++j) {
    cand[j] = members[j] & row[j];
    any = any || cand[j];
  }
  if (s - 1 <= 0) return true;
  if (!any) return false;
  return has_clique(g, std::move(cand), s - 1);
}

Words to_words(std::size_t n, const VertexSet& vs) {
  Words w((n + 63) / 64, 0);
  for (Vertex v : vs) w[v >> 6] |= std::uint64_t{1} << (v & 63);
  return w;
}

class AlphaSearch {
 public:
  AlphaSearch(const Graph& g, int s, const AlphaOptions& o)
      : g_(g), s_(s), opts_(o), words_(g.words_per_row()), chosen_(words_, 0) {}

  AlphaResult run() {
    dfs(0, 0);
    AlphaResult r;
    r.size = best_.size();
    r.witness = best_;
    r.optimal = !aborted_;
    r.upper = aborted_ ? std::max(best_.size(), open_upper_) : best_.size();
    r.nodes = nodes_;
    return r;
  }

 private:
  bool is_chosen(Vertex v) const { return (chosen_[v >> 6] >> (v & 63)) & 1U; }

  std::size_t partition_bound(Words cand) const {
    std::size_t bound = 0;
    const std::size_t cap = std::size_t(s_ - 1);
    for (std::size_t w = 0; w < cand.size(); ++w) {
      while (cand[w]) {
        const Vertex v = Vertex(w * 64 + std::size_t(std::countr_zero(cand[w])));
        // Grow a clique greedily from v inside the remaining candidates.
        std::size_t size = 1;
        cand[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
        Words inside(cand.size());
        const auto row = g_.row(v);
        for (std::size_t j = 0; j < cand.size(); ++j) inside[j] = cand[j] & row[j];
        for (std::size_t j = 0; j < inside.size(); ++j) {
          while (inside[j]) {
            const Vertex u = Vertex(j * 64 + std::size_t(std::countr_zero(inside[j])));
            ++size;
            cand[u >> 6] &= ~(std::uint64_t{1} << (u & 63));
            const auto ru = g_.row(u);
            for (std::size_t q = 0; q < inside.size(); ++q) inside[q] &= ru[q];
          }
        }
        bound += std::min(size, cap);
      }
    }
    return bound;
  }

  void dfs(Vertex v, std::size_t size) {
    ++nodes_;
    const std::size_t n = g_.order();
    Words cand(words_, 0);
    Vertex first = Vertex(n);
    for (Vertex u = v; u < n; ++u) {
      if (completes(g_, chosen_, u, s_)) continue;
      cand[u >> 6] |= std::uint64_t{1} << (u & 63);
      if (first == n) first = u;
    }
    if (first == n) {
      if (!recorded_ || size > best_.size()) record();
      return;
    }
    const std::size_t bound = size + partition_bound(cand);
    if (recorded_ && bound <= best_.size()) return;
    if (opts_.max_nodes && nodes_ > opts_.max_nodes) {
      aborted_ = true;
      open_upper_ = std::max(open_upper_, bound);
      return;
    }
    chosen_[first >> 6] |= std::uint64_t{1} << (first & 63);
    dfs(first + 1, size + 1);
    chosen_[first >> 6] &= ~(std::uint64_t{1} << (first & 63));
    if (aborted_) {
      open_upper_ = std::max(open_upper_, bound);
      return;
    }
    dfs(first + 1, size);
  }

  void record() {
    recorded_ = true;
    best_.clear();
    for (Vertex u = 0; u < g_.order(); ++u)
      if (is_chosen(u)) best_.push_back(u);
  }

  const Graph& g_;
  int s_;
  AlphaOptions opts_;
  std::size_t words_;
  Words chosen_;
  VertexSet best_;
  bool recorded_ = false;
  bool aborted_ = false;
  std::size_t open_upper_ = 0;
  std::uint64_t nodes_ = 0;
};

}  // namespace

bool completes_clique(const Graph& g, const VertexSet& members, Vertex v, int s) {
  if (s < 1) throw ParameterError("clique order must be positive");
  return completes(g, to_words(g.order(), members), v, s);
}

AlphaResult alpha_exact(const Graph& g, int s, const AlphaOptions& opts) {
  if (s < 2) throw ParameterError("alpha_exact needs s >= 2");
  return AlphaSearch(g, s, opts).run();
}

namespace {

bool mask_has_clique(const std::vector<std::uint32_t>& adj, std::uint32_t cand, int need) {
  if (need <= 0) return true;
  while (cand) {
    if (need == 1) return true;
    const int x = std::countr_zero(cand);
    cand &= cand - 1;
    const std::uint32_t next = cand & adj[std::size_t(x)];
    if (std::popcount(next) >= need - 1 && mask_has_clique(adj, next, need - 1)) return true;
  }
  return false;
}

std::uint64_t count_rec(const std::vector<std::uint32_t>& adj, int s, std::size_t n,
                        std::size_t min_size, std::size_t v, std::uint32_t chosen,
                        std::size_t size) {
  if (size + (n - v) < min_size) return 0;
  if (v == n) return 1;
  std::uint64_t total = count_rec(adj, s, n, min_size, v + 1, chosen, size);
  if (!mask_has_clique(adj, chosen & adj[v], s - 1))
    total += count_rec(adj, s, n, min_size, v + 1, chosen | (std::uint32_t{1} << v), size + 1);
  return total;
}

}  // namespace

std::uint64_t count_free_subsets(const Graph& g, int s, std::size_t min_size, std::size_t limit) {
  if (s < 2) throw ParameterError("count_free_subsets needs s >= 2");
  const std::size_t hard_limit = 31;
  if (g.order() > std::min(limit, hard_limit))
    throw ParameterError("count_free_subsets enumerates at most " + std::to_string(limit) +
                         " vertices; use alpha_exact for larger graphs");
  const std::size_t n = g.order();
  std::vector<std::uint32_t> adj(n, 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= std::uint32_t{1} << e.v;
    adj[e.v] |= std::uint32_t{1} << e.u;
  }
  return count_rec(adj, s, n, min_size, 0, 0, 0);
}

VertexSet extend_to_maximal(const Graph& g, int s, VertexSet start) {
  Words chosen = to_words(g.order(), start);
  for (Vertex v = 0; v < g.order(); ++v) {
    if ((chosen[v >> 6] >> (v & 63)) & 1U) continue;
    if (!completes(g, chosen, v, s)) chosen[v >> 6] |= std::uint64_t{1} << (v & 63);
  }
  VertexSet out;
  for (Vertex v = 0; v < g.order(); ++v)
    if ((chosen[v >> 6] >> (v & 63)) & 1U) out.push_back(v);
  return out;
}

VertexSet greedy_free_subset(const Graph& g, int s) { return extend_to_maximal(g, s, {}); }

// ---- alteration ------------------------------------------------------------------

double alteration_probability(const AlterationParams& params) {
  if (params.p) return std::clamp(*params.p, 0.0, 1.0);
  double best = std::numeric_limits<double>::infinity();
  for (const auto& f : params.families) {
    if (f.edges.empty()) continue;
    const double ratio = double(params.n) / double(f.edges.size());
    best = std::min(best, std::pow(ratio, 1.0 / double(f.uniformity - 1)));
  }
  return std::min(1.0, best / 3.0);
}

AlterationResult alteration_set(const AlterationParams& params) {
  for (const auto& f : params.families) {
    if (f.uniformity < 2) throw ParameterError("alteration families need uniformity >= 2");
    for (const auto& e : f.edges) {
      if (e.size() != std::size_t(f.uniformity))
        throw StructuralError("hyperedge size differs from the family's uniformity");
      for (Vertex v : e)
        if (v >= params.n) throw StructuralError("hyperedge vertex outside [n]");
    }
  }
  AlterationResult r;
  r.p = alteration_probability(params);
  Rng rng(derive_seed(params.seed, kTagAlteration));
  std::vector<char> keep(params.n, 0);
  for (std::size_t v = 0; v < params.n; ++v) keep[v] = rng.bernoulli(r.p) ? 1 : 0;
  r.sampled = std::size_t(std::count(keep.begin(), keep.end(), 1));
  for (const auto& f : params.families)
    for (const auto& e : f.edges) {
      bool full = true;
      for (Vertex v : e) full = full && keep[v];
      if (!full) continue;
      keep[*std::min_element(e.begin(), e.end())] = 0;
      ++r.deleted;
    }
  for (std::size_t v = 0; v < params.n; ++v)
    if (keep[v]) r.set.push_back(Vertex(v));
  return r;
}

// ---- extractors -------------------------------------------------------------------

VertexColorStats vertex_color_stats(const Graph& g, const EdgeColoring& coloring) {
  coloring.require_covers(g);
  VertexColorStats st;
  const std::size_t n = g.order();
  st.d_st.assign(n, 0);
  st.d_nd.assign(n, 0);
  st.xi.assign(n, 0);
  for (Vertex x = 0; x < n; ++x) {
    std::map<int, std::size_t> cls;
    for (Vertex y : g.neighbors(x)) ++cls[coloring.at(x, y)];
    std::vector<std::size_t> sizes;
    for (auto [c, k] : cls) sizes.push_back(k);
    std::sort(sizes.rbegin(), sizes.rend());
    if (!sizes.empty()) st.d_st[x] = sizes[0];
    if (sizes.size() > 1) st.d_nd[x] = sizes[1];
    st.xi[x] = double(st.d_st[x]) * double(st.d_nd[x]);
    st.mean_xi += st.xi[x];
    st.max_xi = std::max(st.max_xi, st.xi[x]);
  }
  if (n) st.mean_xi /= double(n);
  return st;
}

namespace {

void require_no_mono_triangle(const Graph& g, const EdgeColoring& coloring) {
  if (auto hit = find_mono_clique(g, coloring, 3)) {
    std::vector<std::size_t> w(hit->clique.begin(), hit->clique.end());
    throw PreconditionError("monochromatic triangle in colour " + std::to_string(hit->color), w);
  }
}

int colors_inside(const Graph& g, const EdgeColoring& coloring, const VertexSet& set) {
  std::vector<int> seen;
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j)
      if (g.adjacent(set[i], set[j])) seen.push_back(coloring.at(set[i], set[j]));
  std::sort(seen.begin(), seen.end());
  return int(std::unique(seen.begin(), seen.end()) - seen.begin());
}

EdgeColoring restrict_coloring(const Graph& sub, const EdgeColoring& coloring,
                               const VertexSet& ids) {
  std::vector<int> colors;
  colors.reserve(sub.size());
  for (const Edge& e : sub.edges()) colors.push_back(coloring.at(ids[e.u], ids[e.v]));
  return EdgeColoring(sub, std::move(colors), std::max(1, coloring.num_colors()));
}

VertexSet lift(const VertexSet& local, const VertexSet& ids) {
  VertexSet out;
  for (Vertex v : local) out.push_back(ids[v]);
  std::sort(out.begin(), out.end());
  return out;
}

// Alteration on the K_s hypergraph of g; returns local ids.
VertexSet alter_cliques(const Graph& g, int s, std::uint64_t seed) {
  AlterationParams ap;
  ap.n = g.order();
  ap.seed = seed;
  ap.families.push_back({s, enumerate_cliques(g, s)});
  return alteration_set(ap).set;
}

// Deletes the lowest id of every K_s still inside `set`; a safety net that
// should never fire for the families argument, and is logged when it does.
std::size_t patch_cliques(const Graph& g, int s, VertexSet& set) {
  const Graph h = g.induced(set);
  std::vector<char> drop(set.size(), 0);
  std::size_t patched = 0;
  for (const auto& c : enumerate_cliques(h, s)) {
    bool alive = true;
    for (Vertex v : c) alive = alive && !drop[v];
    if (!alive) continue;
    drop[c.front()] = 1;
    ++patched;
  }
  VertexSet out;
  for (std::size_t i = 0; i < set.size(); ++i)
    if (!drop[i]) out.push_back(set[i]);
  set = std::move(out);
  return patched;
}

class RecursiveExtractor {
 public:
  RecursiveExtractor(const Graph& g, const EdgeColoring& c, int s, const ExtractOptions& o,
                     ExtractResult& out)
      : g_(g), c_(c), s_(s), opts_(o), out_(out), table_(RamseyTable::standard()), gt_(table_) {}

  VertexSet run(const VertexSet& U, int t, int depth) {
    const Graph h = g_.induced(U);
    const EdgeColoring hc = restrict_coloring(h, c_, U);
    std::vector<int> used;
    for (int col : hc.colors()) used.push_back(col);
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    const int tc = std::min(t, int(used.size()));
    const std::string at = "depth " + std::to_string(depth) + ": ";

    if (table_.multicolor_at_most(tc, 3, std::size_t(s_))) {
      out_.log.push_back(at + std::to_string(U.size()) + " vertices span " + std::to_string(tc) +
                         " colours, K_s-free outright");
      if (depth == 0) out_.branch = "ramsey";
      return U;
    }

    double alpha = 0;
    std::vector<std::pair<int, double>> levels;  // (i, exponent alpha / a_{t-g(i)})
    try {
      alpha = exponent_lower(s_, tc, table_, gt_).value.convert_to<double>();
      for (int i = 2; i <= s_; ++i) {
        const int child = tc - gt_(i);
        if (child < 0) continue;
        const double a = exponent_lower(s_, child, table_, gt_).value.convert_to<double>();
        levels.push_back({i, alpha / a});
      }
    } catch (const UnresolvedRamsey& e) {
      out_.log.push_back(at + "thresholds unavailable (" + e.entry() + "), altering directly");
      levels.clear();
    }

    const double n = double(U.size());
    for (auto [i, expo] : levels) {
      const double threshold = opts_.threshold_scale * std::pow(n, expo);
      auto hit = scan_level(h, hc, i, gt_(i), threshold);
      if (!hit) continue;
      const auto& [pattern, members] = *hit;
      std::vector<int> distinct = pattern;
      std::sort(distinct.begin(), distinct.end());
      distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
      out_.log.push_back(at + "level i=" + std::to_string(i) + " found " +
                         std::to_string(members.size()) + " vertices on a pattern with " +
                         std::to_string(distinct.size()) + " colours (threshold " +
                         std::to_string(threshold) + ")");
      if (depth == 0) out_.branch = "pigeonhole";
      const VertexSet Y = lift(members, U);
      return run(Y, tc - int(distinct.size()), depth + 1);
    }
    if (depth == 0) out_.branch = "alteration";
    const VertexSet local = alter_cliques(h, s_, derive_seed(opts_.seed, kTagExtract, std::uint64_t(depth)));
    out_.log.push_back(at + "no level fired, alteration kept " + std::to_string(local.size()) +
                       " of " + std::to_string(U.size()));
    return lift(local, U);
  }

 private:
  // Best (i-1)-clique tuple whose coloured common neighbourhood reaches the
  // threshold; returns the colour pattern and its class (local ids).
  std::optional<std::pair<std::vector<int>, VertexSet>> scan_level(const Graph& h,
                                                                   const EdgeColoring& hc, int i,
                                                                   int gi, double threshold) {
    std::optional<std::pair<std::vector<int>, VertexSet>> best;
    std::uint64_t scanned = 0;
    const std::size_t n = h.order();
    if (double(n) < threshold) return best;
    auto visit = [&](const VertexSet& tuple) {
      if (++scanned > opts_.tuple_budget) return false;
      std::map<std::vector<int>, VertexSet> classes;
      std::size_t qualifying = 0;
      for (Vertex u = 0; u < n; ++u) {
        std::vector<int> pattern;
        bool ok = true;
        for (Vertex v : tuple) {
          if (u == v || !h.adjacent(u, v)) {
            ok = false;
            break;
          }
          pattern.push_back(hc.at(u, v));
        }
        if (!ok) continue;
        std::vector<int> d = pattern;
        std::sort(d.begin(), d.end());
        if (std::unique(d.begin(), d.end()) - d.begin() < gi) continue;
        ++qualifying;
        classes[pattern].push_back(u);
      }
      if (double(qualifying) < threshold) return true;
      for (auto& [pattern, members] : classes)
        if (!best || members.size() > best->second.size()) best = {{pattern, members}};
      return true;
    };
    if (i == 2) {
      for (Vertex v = 0; v < n; ++v)
        if (!visit(VertexSet{v})) break;
    } else {
      for_each_clique(h, i - 1, visit);
    }
    if (scanned > opts_.tuple_budget)
      out_.log.push_back("level i=" + std::to_string(i) + " scan stopped at the tuple budget");
    return best;
  }

  const Graph& g_;
  const EdgeColoring& c_;
  int s_;
  ExtractOptions opts_;
  ExtractResult& out_;
  const RamseyTable& table_;
  GTable gt_;
};

void finish(const Graph& g, const EdgeColoring* coloring, int s, const ExtractOptions& opts,
            ExtractResult& r) {
  if (opts.extend_to_maximal) {
    const std::size_t before = r.set.size();
    r.set = extend_to_maximal(g, s, r.set);
    if (r.set.size() > before)
      r.log.push_back("extended from " + std::to_string(before) + " to " +
                      std::to_string(r.set.size()) + " vertices");
  }
  std::sort(r.set.begin(), r.set.end());
  if (!is_clique_free(g, r.set, s)) throw std::logic_error("extractor produced a set containing K_s");
  if (coloring) r.colors_spanned = colors_inside(g, *coloring, r.set);
}

}  // namespace

ExtractResult recursive_free_subset(const Graph& g, const EdgeColoring& coloring, int s, int t,
                                    const ExtractOptions& opts) {
  if (s < 2) throw ParameterError("recursive_free_subset needs s >= 2");
  if (t < 1) throw ParameterError("recursive_free_subset needs t >= 1");
  coloring.require_covers(g);
  require_no_mono_triangle(g, coloring);
  if (int(coloring.used_colors()) > t)
    throw ParameterError("colouring uses " + std::to_string(coloring.used_colors()) +
                         " colours, more than t=" + std::to_string(t));
  ExtractResult r;
  VertexSet all(g.order());
  for (std::size_t v = 0; v < all.size(); ++v) all[v] = Vertex(v);
  RecursiveExtractor ex(g, coloring, s, opts, r);
  r.set = ex.run(all, t, 0);
  finish(g, &coloring, s, opts, r);
  return r;
}

namespace {

// Ordered tuples (x, v2, ..., v_len) forming a clique where every v_i with
// i >= 3 sees two colours back; first_ok filters v2. Sets are collected.
void grow_tuples(const Graph& g, const EdgeColoring& c, std::size_t len, VertexSet& cur,
                 const std::function<bool(Vertex)>& first_ok, std::vector<VertexSet>& out,
                 std::uint64_t& budget) {
  if (budget == 0) return;
  if (cur.size() == len) {
    VertexSet e = cur;
    std::sort(e.begin(), e.end());
    out.push_back(std::move(e));
    --budget;
    return;
  }
  const Vertex x = cur.front();
  for (Vertex v : g.neighbors(x)) {
    if (std::find(cur.begin(), cur.end(), v) != cur.end()) continue;
    if (cur.size() == 1) {
      if (!first_ok(v)) continue;
    } else {
      bool clique = true;
      for (std::size_t j = 1; j < cur.size() && clique; ++j) clique = g.adjacent(cur[j], v);
      if (!clique) continue;
      const int first = c.at(cur[0], v);
      bool two = false;
      for (std::size_t j = 1; j < cur.size() && !two; ++j) two = c.at(cur[j], v) != first;
      if (!two) continue;
    }
    cur.push_back(v);
    grow_tuples(g, c, len, cur, first_ok, out, budget);
    cur.pop_back();
    if (budget == 0) return;
  }
}

}  // namespace

ExtractResult lay3_free_subset(const Graph& g, const EdgeColoring& coloring, int s,
                               const ExtractOptions& opts) {
  if (s < 3) throw ParameterError("lay3_free_subset needs s >= 3");
  coloring.require_covers(g);
  require_no_mono_triangle(g, coloring);
  ExtractResult r;
  const std::size_t n = g.order();
  if (n == 0) return r;
  const int t = int(coloring.used_colors());
  const double alpha = lay3_exponent(s).convert_to<double>();
  const double beta = alpha + 1;
  const VertexColorStats st = vertex_color_stats(g, coloring);
  const double stat = opts.use_max_xi ? st.max_xi : st.mean_xi;
  const double nn = double(n);
  const double cut = opts.threshold_scale * std::pow(nn, beta);
  r.log.push_back(std::string(opts.use_max_xi ? "max" : "mean") + " xi = " + std::to_string(stat) +
                  ", threshold n^beta = " + std::to_string(cut));

  if (stat >= cut && t >= 2) {
    r.branch = "pigeonhole";
    // Most frequent ordered colour pair at a common vertex.
    std::map<std::pair<int, int>, double> pairs;
    for (Vertex x = 0; x < n; ++x) {
      std::map<int, double> cls;
      for (Vertex y : g.neighbors(x)) cls[coloring.at(x, y)] += 1;
      for (auto [a, ka] : cls)
        for (auto [b, kb] : cls)
          if (a != b) pairs[{a, b}] += ka * kb;
    }
    auto top = pairs.begin();
    for (auto it = pairs.begin(); it != pairs.end(); ++it)
      if (it->second > top->second) top = it;
    const auto [red, blue] = top->first;
    const std::size_t words = g.words_per_row();
    std::vector<Words> by_red(n, Words(words, 0)), by_blue(n, Words(words, 0));
    for (const Edge& e : g.edges()) {
      const int col = coloring.at(e.u, e.v);
      for (auto [a, b] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
        if (col == red) by_red[a][b >> 6] |= std::uint64_t{1} << (b & 63);
        if (col == blue) by_blue[a][b >> 6] |= std::uint64_t{1} << (b & 63);
      }
    }
    std::size_t best = 0;
    Vertex by = 0, bz = 0;
    for (Vertex y = 0; y < n; ++y)
      for (Vertex z = 0; z < n; ++z) {
        if (y == z) continue;
        const std::size_t c = intersection_count(by_red[y], by_blue[z]);
        if (c > best) best = c, by = y, bz = z;
      }
    VertexSet S;
    for (Vertex x = 0; x < n; ++x)
      if (best && ((by_red[by][x >> 6] & by_blue[bz][x >> 6]) >> (x & 63)) & 1U) S.push_back(x);
    r.log.push_back("pair (" + std::to_string(red) + "," + std::to_string(blue) + ") via y=" +
                    std::to_string(by) + ", z=" + std::to_string(bz) + ": " +
                    std::to_string(S.size()) + " vertices");
    if (!is_clique_free(g, S, s)) {
      // Only possible when r_{t-2}(3) > s; thin the set instead of failing.
      const Graph h = g.induced(S);
      S = lift(alter_cliques(h, s, derive_seed(opts.seed, kTagExtract, 1)), S);
      r.log.push_back("set contained K_s (t-2 colours do not force freeness); altered to " +
                      std::to_string(S.size()));
    }
    r.set = std::move(S);
    finish(g, &coloring, s, opts, r);
    return r;
  }

  r.branch = "families";
  const int sp = (s + 1) / 2;
  const double denom = double(s + sp - 2);
  std::vector<int> mf(n, -1);
  for (Vertex x = 0; x < n; ++x) {
    std::map<int, int> freq;
    for (Vertex y : g.neighbors(x)) ++freq[coloring.at(x, y)];
    int count = -1;
    for (auto [col, k] : freq)
      if (k > count) mf[x] = col, count = k;
  }
  HyperFamily F{s, {}}, G{sp, {}};
  std::uint64_t budget = opts.tuple_budget;
  std::size_t f_vertices = 0;
  for (Vertex x = 0; x < n; ++x) {
    const double split = st.xi[x] > 0 ? std::pow(st.xi[x], double(s - 1) / denom) /
                                            std::pow(nn, alpha * double(s - sp) / denom)
                                      : 0.0;
    VertexSet cur{x};
    if (double(st.d_st[x]) <= split) {
      ++f_vertices;
      grow_tuples(g, coloring, std::size_t(s), cur, [](Vertex) { return true; }, F.edges, budget);
    } else {
      const int top = mf[x];
      grow_tuples(g, coloring, std::size_t(sp), cur,
                  [&](Vertex v) { return coloring.at(x, v) != top; }, G.edges, budget);
    }
  }
  if (budget == 0) {
    // Enumeration too large: fall back to the plain K_s hypergraph, which is
    // always a valid family.
    r.log.push_back("family enumeration hit the tuple budget; using all K_s copies");
    F.edges = enumerate_cliques(g, s);
    G.edges.clear();
  }
  for (auto* fam : {&F, &G}) {
    std::sort(fam->edges.begin(), fam->edges.end());
    fam->edges.erase(std::unique(fam->edges.begin(), fam->edges.end()), fam->edges.end());
  }
  r.log.push_back(std::to_string(f_vertices) + " vertices took the F branch; |F|=" +
                  std::to_string(F.edges.size()) + ", |G|=" + std::to_string(G.edges.size()));
  AlterationParams ap;
  ap.n = n;
  ap.seed = derive_seed(opts.seed, kTagExtract, 2);
  ap.families = {F, G};
  auto alt = alteration_set(ap);
  r.set = std::move(alt.set);
  if (const std::size_t patched = patch_cliques(g, s, r.set))
    r.log.push_back("patched " + std::to_string(patched) + " K_s copies missed by the families");
  finish(g, &coloring, s, opts, r);
  return r;
}

ExtractResult alteration_free_subset(const Graph& g, int s, const ExtractOptions& opts) {
  if (s < 2) throw ParameterError("alteration_free_subset needs s >= 2");
  ExtractResult r;
  r.branch = "alteration";
  r.set = alter_cliques(g, s, derive_seed(opts.seed, kTagExtract, 0));
  finish(g, nullptr, s, opts, r);
  return r;
}

}  // namespace erlab
