#include "erlab/freeness.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "erlab/errors.hpp"
#include "erlab/rational.hpp"

namespace erlab {

const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::none: return "none";
    case SearchStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::verified_exhaustively: return "verified-exhaustively";
    case Provenance::verified_witness: return "verified-witness";
    case Provenance::literature: return "literature";
    case Provenance::unknown: return "unknown";
  }
  return "?";
}

std::optional<VertexSet> find_mono_clique_in_color(const Graph& g, const EdgeColoring& coloring,
                                                   int color, int b) {
  const Graph cls = color_class(g, coloring, color);
  std::optional<VertexSet> found;
  for_each_clique(cls, b, [&](const VertexSet& c) {
    found = c;
    return false;
  });
  return found;
}

std::optional<MonoClique> find_mono_clique(const Graph& g, const EdgeColoring& coloring, int b) {
  if (b < 2) throw ParameterError("find_mono_clique needs b >= 2");
  coloring.require_covers(g);
  std::optional<MonoClique> best;
  for (int c = 0; c < coloring.num_colors(); ++c) {
    auto hit = find_mono_clique_in_color(g, coloring, c, b);
    if (hit && (!best || *hit < best->clique)) best = MonoClique{c, *hit};
  }
  return best;
}

namespace {

class ColoringSearch {
 public:
  ColoringSearch(const FreenessQuery& q, const SearchBudget& budget)
      : g_(q.graph), b_(q.b), local_(q.local_bound), budget_(budget) {
    const auto& edges = g_.edges();
    order_.resize(edges.size());
    for (std::size_t i = 0; i < order_.size(); ++i) order_[i] = i;
    // Edges grouped by their larger endpoint, so every vertex's star closes
    // as early as possible and triangles are checked soon after they appear.
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      return std::pair(edges[a].v, edges[a].u) < std::pair(edges[b].v, edges[b].u);
    });
    palette_ = q.t ? *q.t : int(std::max<std::size_t>(1, edges.size()));
    const std::size_t n = g_.order();
    words_ = (n + 63) / 64;
    adj_.assign(std::size_t(palette_) * n * words_, 0);
    assigned_.assign(edges.size(), -1);
    if (local_) {
      per_vertex_.assign(n * std::size_t(palette_), 0);
      distinct_.assign(n, 0);
    }
    start_ = std::chrono::steady_clock::now();
  }

  SearchResult run() {
    SearchResult r;
    const bool ok = palette_ > 0 || order_.empty();
    if (!ok) {
      r.status = SearchStatus::none;
    } else {
      r.status = dfs(0);
    }
    r.nodes = nodes_;
    if (r.status == SearchStatus::found)
      r.coloring = EdgeColoring(g_, assigned_, std::max(1, max_used_ + 1));
    return r;
  }

 private:
  std::uint64_t* row(int c, Vertex v) {
    return adj_.data() + (std::size_t(c) * g_.order() + v) * words_;
  }

  bool has_clique(int c, std::vector<std::uint64_t>& cand, int need) {
    if (need == 0) return true;
    for (std::size_t w = 0; w < words_; ++w) {
      while (cand[w]) {
        const int bit = std::countr_zero(cand[w]);
        cand[w] &= cand[w] - 1;
        const Vertex x = Vertex(w * 64 + std::size_t(bit));
        if (need == 1) return true;
        std::vector<std::uint64_t> next(words_);
        const std::uint64_t* rx = row(c, x);
        bool any = false;
        for (std::size_t j = 0; j < words_; ++j) {
          next[j] = cand[j] & rx[j];
          any = any || next[j];
        }
        if (any && has_clique(c, next, need - 1)) return true;
      }
    }
    return false;
  }

  bool closes_clique(int c, Vertex u, Vertex v) {
    std::vector<std::uint64_t> common(words_);
    const std::uint64_t* ru = row(c, u);
    const std::uint64_t* rv = row(c, v);
    bool any = false;
    for (std::size_t j = 0; j < words_; ++j) {
      common[j] = ru[j] & rv[j];
      any = any || common[j];
    }
    if (b_ == 2) return true;
    if (!any) return false;
    return has_clique(c, common, b_ - 2);
  }

  void toggle(int c, Vertex u, Vertex v) {
    row(c, u)[v >> 6] ^= std::uint64_t{1} << (v & 63);
    row(c, v)[u >> 6] ^= std::uint64_t{1} << (u & 63);
  }

  bool out_of_budget() {
    if (budget_.max_nodes && nodes_ >= budget_.max_nodes) return true;
    if (budget_.max_seconds > 0 && (nodes_ & 1023) == 0) {
      const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start_;
      if (dt.count() > budget_.max_seconds) return true;
    }
    return false;
  }

  SearchStatus dfs(std::size_t depth) {
    if (depth == order_.size()) return SearchStatus::found;
    ++nodes_;
    if (out_of_budget()) return SearchStatus::inconclusive;
    const std::size_t e = order_[depth];
    const Vertex u = g_.edges()[e].u;
    const Vertex v = g_.edges()[e].v;
    // New colours enter in first-use order; any colouring can be relabelled
    // into this form, so nothing is lost.
    const int top = std::min(palette_ - 1, max_used_ + 1);
    bool inconclusive = false;
    for (int c = 0; c <= top; ++c) {
      std::size_t* cu = nullptr;
      std::size_t* cv = nullptr;
      if (local_) {
        cu = &per_vertex_[std::size_t(u) * std::size_t(palette_) + std::size_t(c)];
        cv = &per_vertex_[std::size_t(v) * std::size_t(palette_) + std::size_t(c)];
        if (*cu == 0 && distinct_[u] + 1 > std::size_t(*local_)) continue;
        if (*cv == 0 && distinct_[v] + 1 > std::size_t(*local_)) continue;
      }
      if (closes_clique(c, u, v)) continue;

      const int saved_max = max_used_;
      max_used_ = std::max(max_used_, c);
      assigned_[e] = c;
      toggle(c, u, v);
      if (local_) {
        if ((*cu)++ == 0) ++distinct_[u];
        if ((*cv)++ == 0) ++distinct_[v];
      }
      const SearchStatus r = dfs(depth + 1);
      if (r == SearchStatus::found) return r;
      if (local_) {
        if (--(*cu) == 0) --distinct_[u];
        if (--(*cv) == 0) --distinct_[v];
      }
      toggle(c, u, v);
      assigned_[e] = -1;
      max_used_ = saved_max;
      if (r == SearchStatus::inconclusive) {
        inconclusive = true;
        break;
      }
    }
    return inconclusive ? SearchStatus::inconclusive : SearchStatus::none;
  }

  const Graph& g_;
  int b_;
  std::optional<int> local_;
  SearchBudget budget_;
  std::vector<std::size_t> order_;
  int palette_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> adj_;
  std::vector<int> assigned_;
  std::vector<std::size_t> per_vertex_;
  std::vector<std::size_t> distinct_;
  int max_used_ = -1;
  std::uint64_t nodes_ = 0;
  std::chrono::steady_clock::time_point start_;
};

std::string hex64(std::uint64_t x) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

SearchResult search_free_coloring(const FreenessQuery& query, const SearchBudget& budget) {
  if (query.b < 3) throw ParameterError("search_free_coloring needs b >= 3");
  if (query.t && *query.t < 0) throw ParameterError("colour count must be non-negative");
  if (query.local_bound && *query.local_bound < 0)
    throw ParameterError("local bound must be non-negative");
  ColoringSearch search(query, budget);
  SearchResult r = search.run();
  if (r.coloring && find_mono_clique(query.graph, *r.coloring, query.b))
    throw std::logic_error("search returned a colouring with a monochromatic clique");
  return r;
}

RamseyEntry ramsey_oracle(RamseyKind kind, int param, int b, std::size_t n_max,
                          const SearchBudget& budget) {
  if (param < 0) throw ParameterError("Ramsey parameter must be non-negative");
  RamseyEntry entry;
  entry.kind = kind;
  entry.param = param;
  entry.b = b;
  auto query_for = [&](std::size_t n) {
    FreenessQuery q;
    q.graph = Graph::complete(n);
    q.b = b;
    if (kind == RamseyKind::multicolor) {
      q.t = param;
    } else {
      q.local_bound = param;
    }
    return q;
  };
  std::string log = std::string(kind == RamseyKind::multicolor ? "multicolor" : "local") + "," +
                    std::to_string(param) + "," + std::to_string(b) + ";";
  for (std::size_t n = 1; n <= n_max; ++n) {
    const SearchResult r = search_free_coloring(query_for(n), budget);
    entry.transcript.push_back({n, r.status, r.nodes});
    log += std::to_string(n) + ":" + to_string(r.status) + ":" + std::to_string(r.nodes) + ";";
    if (r.status == SearchStatus::found) {
      entry.witness = r.coloring;
      entry.lower = n + 1;
      continue;
    }
    if (r.status == SearchStatus::inconclusive) {
      entry.inconclusive = true;
      break;
    }
    entry.value = n;
    entry.status = Provenance::verified_exhaustively;
    // Monotonicity: K_{n+1} contains K_n, so it cannot be colourable either.
    const SearchResult next = search_free_coloring(query_for(n + 1), budget);
    if (next.status == SearchStatus::found)
      throw std::logic_error("Ramsey sweep not monotone at n=" + std::to_string(n + 1));
    log += "check:" + std::to_string(n + 1) + ":" + to_string(next.status) + ";";
    break;
  }
  entry.digest = hex64(fnv1a(log));
  return entry;
}

EdgeColoring greenwood_gleason_coloring() {
  // GF(16) = GF(2)[x]/(x^4 + x + 1); x generates the multiplicative group.
  int log_table[16] = {};
  int a = 1;
  for (int i = 0; i < 15; ++i) {
    log_table[a] = i;
    a <<= 1;
    if (a & 16) a ^= 0x13;
  }
  const Graph k16 = Graph::complete(16);
  std::vector<int> colors;
  for (const Edge& e : k16.edges()) colors.push_back(log_table[int(e.u ^ e.v)] % 3);
  return EdgeColoring(k16, colors, 3);
}

namespace {

std::size_t saturating(const BigInt& x) {
  if (x > BigInt(std::numeric_limits<std::size_t>::max())) return std::numeric_limits<std::size_t>::max();
  return x.convert_to<std::size_t>();
}

std::string multicolor_name(int t, int b) {
  return "r_" + std::to_string(t) + "(" + std::to_string(b) + ")";
}
std::string local_name(int k) { return "r^loc_" + std::to_string(k) + "(3)"; }

TableEntry from_run(const RamseyEntry& run) {
  TableEntry e;
  if (run.value) {
    e.lower = Bound{*run.value, Provenance::verified_exhaustively};
    e.upper = Bound{*run.value, Provenance::verified_exhaustively};
  } else {
    e.lower = Bound{run.lower, Provenance::verified_witness};
  }
  return e;
}

bool at_most(const TableEntry& e, std::size_t s, const std::string& name) {
  if (e.upper && e.upper->value <= s) return true;
  if (e.lower && e.lower->value > s) return false;
  throw UnresolvedRamsey(name + " vs " + std::to_string(s));
}

}  // namespace

const RamseyTable& RamseyTable::standard() {
  static const RamseyTable table = [] {
    RamseyTable t;
    auto record = [&](const std::string& name, const RamseyEntry& run) {
      t.runs_[name] = run;
      return from_run(run);
    };
    for (int colours = 0; colours <= 2; ++colours)
      t.multi_[{colours, 3}] =
          record(multicolor_name(colours, 3), ramsey_oracle(RamseyKind::multicolor, colours, 3, 7));
    for (int k = 0; k <= 2; ++k)
      t.local_[k] = record(local_name(k), ramsey_oracle(RamseyKind::local, k, 3, 7));

    const EdgeColoring gg = greenwood_gleason_coloring();
    const bool gg_ok = !find_mono_clique(Graph::complete(16), gg, 3) && gg.used_colors() == 3;
    if (!gg_ok) throw std::logic_error("GF(16) witness failed to replay");
    t.multi_[{3, 3}] = {Bound{17, Provenance::verified_witness}, Bound{17, Provenance::literature}};
    // Every vertex of the witness sees exactly three colours, so it is also
    // a 3-local colouring.
    t.local_[3] = {Bound{17, Provenance::verified_witness}, std::nullopt};
    t.multi_[{4, 3}] = {Bound{51, Provenance::literature}, Bound{62, Provenance::literature}};
    t.multi_[{5, 3}] = {Bound{162, Provenance::literature}, Bound{307, Provenance::literature}};
    t.multi_[{2, 4}] = {Bound{18, Provenance::literature}, Bound{18, Provenance::literature}};
    t.multi_[{2, 5}] = {Bound{43, Provenance::literature}, Bound{46, Provenance::literature}};
    return t;
  }();
  return table;
}

TableEntry RamseyTable::multicolor(int t, int b) const {
  if (t < 0 || b < 2) throw ParameterError("invalid Ramsey parameters");
  if (auto it = multi_.find({t, b}); it != multi_.end()) return it->second;
  TableEntry e;
  if (t == 0) {
    // No colour is available for any edge, so only K_1 qualifies.
    e.lower = e.upper = Bound{2, Provenance::verified_exhaustively};
    return e;
  }
  if (t == 1) {
    e.lower = e.upper = Bound{std::size_t(b), Provenance::verified_exhaustively};
    return e;
  }
  // Lower: the product colouring of K_{(b-1)^t}. Upper: the multinomial
  // bound (t(b-1))! / ((b-1)!)^t, and for triangles 1 + sum_k t!/k!.
  BigInt power = 1;
  for (int i = 0; i < t; ++i) power *= (b - 1);
  e.lower = Bound{saturating(power + 1), Provenance::verified_witness};
  BigInt num = 1;
  for (int i = 2; i <= t * (b - 1); ++i) num *= i;
  BigInt den = 1;
  for (int j = 0; j < t; ++j)
    for (int i = 2; i <= b - 1; ++i) den *= i;
  BigInt upper = num / den;
  if (b == 3) {
    BigInt sum = 0, term = 1;  // term = t!/k! for k = t, t-1, ..., 0
    for (int k = t; k >= 0; --k) {
      sum += term;
      term *= k;
    }
    const BigInt alt = sum + 1;
    if (alt < upper) upper = alt;
  }
  e.upper = Bound{saturating(upper), Provenance::literature};
  return e;
}

TableEntry RamseyTable::local(int k) const {
  if (k < 0) throw ParameterError("invalid local Ramsey parameter");
  if (auto it = local_.find(k); it != local_.end()) return it->second;
  // r^loc_k(3) >= r_k(3).
  TableEntry e;
  e.lower = multicolor(k, 3).lower;
  return e;
}

bool RamseyTable::multicolor_at_most(int t, int b, std::size_t s) const {
  return at_most(multicolor(t, b), s, multicolor_name(t, b));
}

bool RamseyTable::local_at_most(int k, std::size_t s) const {
  return at_most(local(k), s, local_name(k));
}

GTable::GTable(const RamseyTable& table, int cap) {
  for (int i = 1; i <= cap; ++i) {
    GEntry g;
    Provenance weakest = Provenance::verified_exhaustively;
    auto weaken = [&](const std::optional<Bound>& b) {
      if (b && int(b->provenance) > int(weakest)) weakest = b->provenance;
    };
    bool settled = false;
    try {
      for (int k = 0; k <= i; ++k) {
        const TableEntry e = table.local(k);
        if (!table.local_at_most(k, std::size_t(i))) {
          weaken(e.lower);
          g.value = k;
          settled = true;
          break;
        }
        weaken(e.upper);
      }
    } catch (const UnresolvedRamsey& err) {
      unresolved_ = err.entry();
      break;
    }
    if (!settled) break;
    g.provenance = weakest;
    entries_.push_back(g);
  }
}

GEntry GTable::entry(int i) const {
  if (i < 1 || i > max_resolved())
    throw UnresolvedRamsey("g(" + std::to_string(i) + ")" +
                           (unresolved_.empty() ? "" : " needs " + unresolved_));
  return entries_[std::size_t(i - 1)];
}

}  // namespace erlab
