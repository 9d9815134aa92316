#include "erlab/hypergraph.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "erlab/errors.hpp"

namespace erlab {

LinearHypergraph::LinearHypergraph(std::size_t n_, int R_, std::vector<VertexSet> edges_)
    : n(n_), R(R_), edges(std::move(edges_)) {
  if (R < 2) throw ParameterError("uniformity R must be at least 2");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto& e = edges[i];
    const std::string where = "hyperedge " + std::to_string(i);
    if (e.size() != std::size_t(R))
      throw StructuralError(where + " has " + std::to_string(e.size()) + " vertices, expected " +
                            std::to_string(R));
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end())
      throw StructuralError(where + " repeats a vertex");
    if (e.back() >= n) throw StructuralError(where + " has a vertex outside the ground set");
  }
}

namespace {

std::vector<VertexSet> incidences(const LinearHypergraph& h) {
  std::vector<VertexSet> by_vertex(h.n);
  for (std::size_t i = 0; i < h.edges.size(); ++i)
    for (Vertex v : h.edges[i]) by_vertex[v].push_back(Vertex(i));
  return by_vertex;
}

std::uint64_t pair_key(Vertex x, Vertex y) {
  if (x > y) std::swap(x, y);
  return (std::uint64_t(x) << 32) | y;
}

// For linear inputs a triangle is a pair of edges meeting at w plus a third
// edge through some x in e_a - w and y in e_b - w; linearity rules out the
// third edge also passing through w.
std::optional<std::array<std::size_t, 3>> first_triangle_linear(
    const LinearHypergraph& h, const std::vector<VertexSet>& by_vertex) {
  std::unordered_map<std::uint64_t, Vertex> pair_edge;
  pair_edge.reserve(h.edges.size() * std::size_t(h.R) * std::size_t(h.R - 1) / 2);
  for (std::size_t i = 0; i < h.edges.size(); ++i) {
    const auto& e = h.edges[i];
    for (std::size_t a = 0; a < e.size(); ++a)
      for (std::size_t b = a + 1; b < e.size(); ++b) pair_edge.emplace(pair_key(e[a], e[b]), Vertex(i));
  }
  for (std::size_t i = 0; i < h.edges.size(); ++i) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    const auto& ei = h.edges[i];
    for (Vertex w : ei) {
      for (Vertex j : by_vertex[w]) {
        if (j <= i) continue;
        for (Vertex x : ei) {
          if (x == w) continue;
          for (Vertex y : h.edges[j]) {
            if (y == w) continue;
            auto it = pair_edge.find(pair_key(x, y));
            if (it == pair_edge.end() || it->second <= i) continue;
            const std::pair<std::size_t, std::size_t> cand =
                std::minmax(std::size_t(j), std::size_t(it->second));
            if (!best || cand < *best) best = cand;
          }
        }
      }
    }
    if (best) return std::array<std::size_t, 3>{i, best->first, best->second};
  }
  return std::nullopt;
}

std::optional<std::array<std::size_t, 3>> first_triangle_general(
    const LinearHypergraph& h, const std::vector<VertexSet>& by_vertex) {
  const std::size_t m = h.edges.size();
  auto meet = [&](std::size_t a, std::size_t b) {
    std::size_t c = 0;
    std::size_t p = 0, q = 0;
    const auto& ea = h.edges[a];
    const auto& eb = h.edges[b];
    while (p < ea.size() && q < eb.size()) {
      if (ea[p] < eb[q]) ++p;
      else if (eb[q] < ea[p]) ++q;
      else { ++c; ++p; ++q; }
    }
    return c;
  };
  for (std::size_t a = 0; a < m; ++a) {
    std::vector<std::size_t> single;  // b > a with |e_a ∩ e_b| = 1
    std::vector<std::size_t> count(m, 0);
    for (Vertex v : h.edges[a])
      for (Vertex b : by_vertex[v])
        if (b > a) ++count[b];
    for (std::size_t b = a + 1; b < m; ++b)
      if (count[b] == 1) single.push_back(b);
    for (std::size_t p = 0; p < single.size(); ++p)
      for (std::size_t q = p + 1; q < single.size(); ++q) {
        const std::size_t b = single[p], c = single[q];
        if (meet(b, c) != 1) continue;
        bool common = false;
        for (Vertex v : h.edges[a])
          if (std::binary_search(h.edges[b].begin(), h.edges[b].end(), v) &&
              std::binary_search(h.edges[c].begin(), h.edges[c].end(), v))
            common = true;
        if (!common) return std::array<std::size_t, 3>{a, b, c};
      }
  }
  return std::nullopt;
}

}  // namespace

HypergraphReport validate_hypergraph(const LinearHypergraph& h) {
  for (std::size_t i = 0; i < h.edges.size(); ++i) {
    const auto& e = h.edges[i];
    if (e.size() != std::size_t(h.R) || !std::is_sorted(e.begin(), e.end()) ||
        std::adjacent_find(e.begin(), e.end()) != e.end() || (!e.empty() && e.back() >= h.n))
      throw StructuralError("hyperedge " + std::to_string(i) + " is malformed");
  }
  HypergraphReport report;
  const auto by_vertex = incidences(h);
  std::vector<std::size_t> count(h.edges.size(), 0);
  std::vector<std::size_t> touched;
  for (std::size_t a = 0; a < h.edges.size() && report.linear; ++a) {
    touched.clear();
    for (Vertex v : h.edges[a])
      for (Vertex b : by_vertex[v])
        if (b > a && count[b]++ == 0) touched.push_back(b);
    std::optional<std::size_t> first;
    for (std::size_t b : touched) {
      if (count[b] >= 2 && (!first || b < *first)) first = b;
      count[b] = 0;
    }
    if (first) {
      report.linear = false;
      report.linear_witness = std::make_pair(a, *first);
    }
  }
  report.triangle_witness = report.linear ? first_triangle_linear(h, by_vertex)
                                          : first_triangle_general(h, by_vertex);
  report.triangle_free = !report.triangle_witness.has_value();
  return report;
}

std::optional<Vertex> CliqueCover::shared_clique(Vertex x, Vertex y) const {
  const auto& a = memberships[x];
  const auto& b = memberships[y];
  std::size_t p = 0, q = 0;
  while (p < a.size() && q < b.size()) {
    if (a[p] < b[q]) ++p;
    else if (b[q] < a[p]) ++q;
    else return a[p];
  }
  return std::nullopt;
}

CliqueCover clique_cover(const LinearHypergraph& h) {
  CliqueCover cover;
  cover.cliques = incidences(h);
  cover.memberships = h.edges;
  return cover;
}

std::pair<Graph, CliqueCover> incidence_graph(const LinearHypergraph& h) {
  const auto report = validate_hypergraph(h);
  if (!report.linear) {
    const auto [a, b] = *report.linear_witness;
    throw PreconditionError("hyperedges " + std::to_string(a) + " and " + std::to_string(b) +
                                " share more than one vertex",
                            {a, b});
  }
  CliqueCover cover = clique_cover(h);
  std::vector<Edge> edges;
  for (const auto& clique : cover.cliques)
    for (std::size_t i = 0; i < clique.size(); ++i)
      for (std::size_t j = i + 1; j < clique.size(); ++j) edges.push_back({clique[i], clique[j]});
  return {Graph(h.edges.size(), edges), std::move(cover)};
}

bool cover_partitions_edges(const Graph& g, const CliqueCover& cover) {
  std::size_t inside = 0;
  for (const auto& clique : cover.cliques) {
    for (std::size_t i = 0; i < clique.size(); ++i)
      for (std::size_t j = i + 1; j < clique.size(); ++j) {
        if (!g.adjacent(clique[i], clique[j])) return false;
        ++inside;
      }
  }
  // Every clique pair is an edge; equal totals then mean no edge is counted
  // twice and none is left out.
  if (inside != g.size()) return false;
  for (const Edge& e : g.edges())
    if (!cover.shared_clique(e.u, e.v)) return false;
  return true;
}

std::optional<VertexSet> clique_outside_cover(const Graph& g, const CliqueCover& cover, int b) {
  std::optional<VertexSet> found;
  for_each_clique(g, b, [&](const VertexSet& c) {
    auto v = cover.shared_clique(c[0], c[1]);
    bool inside = v.has_value();
    for (std::size_t i = 2; inside && i < c.size(); ++i) {
      const auto& m = cover.memberships[c[i]];
      inside = std::binary_search(m.begin(), m.end(), *v);
    }
    if (!inside) found = c;
    return inside;
  });
  return found;
}

}  // namespace erlab
