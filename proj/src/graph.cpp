#include "erlab/graph.hpp"

#include <algorithm>
#include <string>

#include "erlab/errors.hpp"

namespace erlab {

namespace {
std::string edge_name(Vertex u, Vertex v) {
  return "{" + std::to_string(u) + "," + std::to_string(v) + "}";
}
}  // namespace

Edge make_edge(Vertex a, Vertex b) {
  if (a == b) throw StructuralError("loop at vertex " + std::to_string(a));
  return a < b ? Edge{a, b} : Edge{b, a};
}

Graph::Graph(std::size_t n) : Graph(n, std::span<const Edge>{}) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges)
    : n_(n), words_((n + 63) / 64), bits_(n * ((n + 63) / 64), 0) {
  edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n)
      throw StructuralError("edge " + edge_name(e.u, e.v) + " out of range for n=" +
                            std::to_string(n));
    edges_.push_back(make_edge(e.u, e.v));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  std::vector<std::size_t> deg(n, 0);
  for (const Edge& e : edges_) {
    bits_[std::size_t(e.u) * words_ + (e.v >> 6)] |= std::uint64_t{1} << (e.v & 63);
    bits_[std::size_t(e.v) * words_ + (e.u >> 6)] |= std::uint64_t{1} << (e.u & 63);
    ++deg[e.u];
    ++deg[e.v];
  }
  offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
  nbrs_.resize(offsets_[n]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  // Lexicographic edge order fills every list in ascending order: edges
  // (u, x) with u < x all precede the edges (x, w).
  for (const Edge& e : edges_) {
    nbrs_[fill[e.u]++] = e.v;
    nbrs_[fill[e.v]++] = e.u;
  }

  first_edge_.assign(n + 1, 0);
  for (const Edge& e : edges_) ++first_edge_[e.u + 1];
  for (std::size_t v = 0; v < n; ++v) first_edge_[v + 1] += first_edge_[v];
}

Graph Graph::complete(std::size_t n) {
  std::vector<Edge> edges;
  edges.reserve(n * (n - (n > 0)) / 2);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph(n, edges);
}

std::optional<std::size_t> Graph::edge_index(Vertex u, Vertex v) const {
  if (u == v || u >= n_ || v >= n_) return std::nullopt;
  if (u > v) std::swap(u, v);
  if (!adjacent(u, v)) return std::nullopt;
  const auto begin = edges_.begin() + std::ptrdiff_t(first_edge_[u]);
  const auto end = edges_.begin() + std::ptrdiff_t(first_edge_[u + 1]);
  auto it = std::lower_bound(begin, end, Edge{u, v});
  return std::size_t(it - edges_.begin());
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
  std::vector<Vertex> local(n_, Vertex(-1));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= n_) throw StructuralError("induced: vertex out of range");
    if (local[vertices[i]] != Vertex(-1)) throw StructuralError("induced: repeated vertex");
    local[vertices[i]] = Vertex(i);
  }
  std::vector<Edge> out;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (Vertex w : neighbors(vertices[i]))
      if (local[w] != Vertex(-1) && local[w] > i) out.push_back({Vertex(i), local[w]});
  return Graph(vertices.size(), out);
}

EdgeColoring::EdgeColoring(const Graph& graph, std::vector<int> colors, int num_colors)
    : edges_(graph.edges()), colors_(std::move(colors)), num_colors_(num_colors) {
  if (colors_.size() != edges_.size())
    throw StructuralError("colouring has " + std::to_string(colors_.size()) +
                          " colours for " + std::to_string(edges_.size()) + " edges");
  for (int c : colors_)
    if (c < 0 || c >= num_colors_)
      throw StructuralError("colour " + std::to_string(c) + " outside [0," +
                            std::to_string(num_colors_) + ")");
}

EdgeColoring EdgeColoring::from_pairs(std::vector<std::pair<Edge, int>> pairs,
                                      std::optional<int> num_colors) {
  for (auto& [e, c] : pairs) {
    e = make_edge(e.u, e.v);
    if (c < 0) throw StructuralError("negative colour on edge " + edge_name(e.u, e.v));
  }
  std::sort(pairs.begin(), pairs.end());
  EdgeColoring out;
  int max_color = -1;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [e, c] = pairs[i];
    if (i > 0 && pairs[i - 1].first == e) {
      if (pairs[i - 1].second != c)
        throw StructuralError("edge " + edge_name(e.u, e.v) + " has two colours");
      continue;
    }
    out.edges_.push_back(e);
    out.colors_.push_back(c);
    max_color = std::max(max_color, c);
  }
  out.num_colors_ = num_colors.value_or(max_color + 1);
  if (max_color >= out.num_colors_)
    throw StructuralError("colour " + std::to_string(max_color) + " exceeds palette of " +
                          std::to_string(out.num_colors_));
  return out;
}

std::optional<int> EdgeColoring::color(Vertex u, Vertex v) const {
  if (u == v) return std::nullopt;
  const Edge key = u < v ? Edge{u, v} : Edge{v, u};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return colors_[std::size_t(it - edges_.begin())];
}

int EdgeColoring::at(Vertex u, Vertex v) const {
  auto c = color(u, v);
  if (!c) throw StructuralError("edge " + edge_name(u, v) + " is not coloured");
  return *c;
}

bool EdgeColoring::covers_exactly(const Graph& graph) const {
  return edges_ == graph.edges();
}

void EdgeColoring::require_covers(const Graph& graph) const {
  const auto& ge = graph.edges();
  std::size_t i = 0, j = 0;
  while (i < ge.size() || j < edges_.size()) {
    if (j == edges_.size() || (i < ge.size() && ge[i] < edges_[j]))
      throw StructuralError("edge " + edge_name(ge[i].u, ge[i].v) + " is not coloured");
    if (i == ge.size() || edges_[j] < ge[i])
      throw StructuralError("coloured pair " + edge_name(edges_[j].u, edges_[j].v) +
                            " is not an edge");
    ++i;
    ++j;
  }
}

std::size_t EdgeColoring::used_colors() const {
  std::vector<int> c = colors_;
  std::sort(c.begin(), c.end());
  return std::size_t(std::unique(c.begin(), c.end()) - c.begin());
}

Graph color_class(const Graph& graph, const EdgeColoring& coloring, int color) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < coloring.edges().size(); ++i)
    if (coloring.colors()[i] == color) out.push_back(coloring.edges()[i]);
  return Graph(graph.order(), out);
}

std::vector<VertexSet> enumerate_cliques(const Graph& graph, int s) {
  if (s < 2) throw ParameterError("enumerate_cliques needs s >= 2");
  std::vector<VertexSet> out;
  for_each_clique(graph, s, [&](const VertexSet& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

std::uint64_t count_cliques(const Graph& graph, int s) {
  if (s < 1) return 0;
  std::uint64_t count = 0;
  for_each_clique(graph, s, [&](const VertexSet&) {
    ++count;
    return true;
  });
  return count;
}

bool is_clique(const Graph& graph, std::span<const Vertex> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (vertices[i] == vertices[j] || !graph.adjacent(vertices[i], vertices[j])) return false;
  return true;
}

bool is_clique_free(const Graph& graph, std::span<const Vertex> vertices, int s) {
  if (s <= 1) return vertices.empty();
  if (vertices.size() < std::size_t(s)) return true;
  const Graph sub = graph.induced(vertices);
  return for_each_clique(sub, s, [](const VertexSet&) { return false; });
}

}  // namespace erlab
