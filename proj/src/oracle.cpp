#include "erlab/oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "erlab/errors.hpp"

namespace erlab::oracle {

namespace {

template <class F>
void for_each_subset(std::size_t n, int s, F&& f) {
  if (s < 0 || std::size_t(s) > n) return;
  VertexSet idx(static_cast<std::size_t>(s));
  for (int i = 0; i < s; ++i) idx[std::size_t(i)] = Vertex(i);
  while (true) {
    f(idx);
    int i = s - 1;
    while (i >= 0 && idx[std::size_t(i)] == n - std::size_t(s) + std::size_t(i)) --i;
    if (i < 0) return;
    ++idx[std::size_t(i)];
    for (int j = i + 1; j < s; ++j) idx[std::size_t(j)] = idx[std::size_t(j) - 1] + 1;
  }
}

std::vector<std::uint8_t> closure(std::size_t n, const std::vector<std::uint32_t>& masks) {
  if (n > 24) throw ParameterError("oracle tables are limited to 24 vertices");
  std::vector<std::uint8_t> table(std::size_t{1} << n, 0);
  for (auto m : masks) table[m] = 1;
  for (std::size_t b = 0; b < n; ++b) {
    const std::size_t bit = std::size_t{1} << b;
    for (std::size_t mask = 0; mask < table.size(); ++mask)
      if ((mask & bit) && table[mask ^ bit]) table[mask] = 1;
  }
  return table;
}

std::uint32_t to_mask(const VertexSet& vs) {
  std::uint32_t m = 0;
  for (Vertex v : vs) m |= std::uint32_t{1} << v;
  return m;
}

}  // namespace

std::vector<VertexSet> all_cliques(const Graph& g, int s) {
  std::vector<VertexSet> out;
  for_each_subset(g.order(), s, [&](const VertexSet& sub) {
    for (std::size_t i = 0; i < sub.size(); ++i)
      for (std::size_t j = i + 1; j < sub.size(); ++j)
        if (!g.adjacent(sub[i], sub[j])) return;
    out.push_back(sub);
  });
  return out;
}

std::vector<std::uint32_t> clique_masks(const Graph& g, int s) {
  if (g.order() > 32) throw ParameterError("clique masks need n <= 32");
  std::vector<std::uint32_t> out;
  for (const auto& c : all_cliques(g, s)) out.push_back(to_mask(c));
  return out;
}

std::vector<std::uint8_t> contains_clique_table(const Graph& g, int s) {
  return closure(g.order(), clique_masks(g, s));
}

AlphaOracle alpha(const Graph& g, int s) {
  const auto table = contains_clique_table(g, s);
  std::uint32_t best = 0;
  int best_size = 0;
  for (std::uint32_t mask = 0; mask < table.size(); ++mask) {
    if (table[mask]) continue;
    const int size = std::popcount(mask);
    if (size > best_size) {
      best = mask;
      best_size = size;
    } else if (size == best_size) {
      // Lexicographically smaller sorted list <=> owns the lowest differing bit.
      const std::uint32_t diff = mask ^ best;
      if (diff && (mask & (diff & (~diff + 1)))) best = mask;
    }
  }
  AlphaOracle out;
  out.size = std::size_t(best_size);
  for (Vertex v = 0; v < g.order(); ++v)
    if (best >> v & 1U) out.witness.push_back(v);
  return out;
}

std::uint64_t count_free(const Graph& g, int s, std::size_t min_size) {
  const auto table = contains_clique_table(g, s);
  std::uint64_t count = 0;
  for (std::size_t mask = 0; mask < table.size(); ++mask)
    if (!table[mask] && std::size_t(std::popcount(mask)) >= min_size) ++count;
  return count;
}

bool independent_in(const std::vector<VertexSet>& family, const VertexSet& set) {
  VertexSet sorted = set;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& e : family) {
    bool all = !e.empty();
    for (Vertex v : e) all = all && std::binary_search(sorted.begin(), sorted.end(), v);
    if (all) return false;
  }
  return true;
}

std::size_t max_independent(std::size_t n, const std::vector<VertexSet>& family) {
  std::vector<std::uint32_t> masks;
  for (const auto& e : family) masks.push_back(to_mask(e));
  const auto table = closure(n, masks);
  int best = 0;
  for (std::size_t mask = 0; mask < table.size(); ++mask)
    if (!table[mask]) best = std::max(best, std::popcount(mask));
  return std::size_t(best);
}

bool has_mono_clique(const Graph& g, const EdgeColoring& c, int b) {
  bool found = false;
  for_each_subset(g.order(), b, [&](const VertexSet& sub) {
    if (found) return;
    std::optional<int> colour;
    for (std::size_t i = 0; i < sub.size(); ++i)
      for (std::size_t j = i + 1; j < sub.size(); ++j) {
        auto cij = c.color(sub[i], sub[j]);
        if (!cij || !g.adjacent(sub[i], sub[j])) return;
        if (colour && *colour != *cij) return;
        colour = cij;
      }
    found = true;
  });
  return found;
}

std::vector<int> ell_of_order(const EdgeColoring& c, const VertexSet& order) {
  std::vector<int> ell(order.size(), 0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    std::vector<int> seen;
    for (std::size_t j = 0; j < i; ++j) seen.push_back(c.at(order[i], order[j]));
    std::sort(seen.begin(), seen.end());
    ell[i] = int(std::unique(seen.begin(), seen.end()) - seen.begin());
  }
  return ell;
}

bool half_sequence_ok(std::size_t k, const EdgeColoring& c, const VertexSet& seq) {
  if (seq.size() != (k + 1) / 2) return false;
  VertexSet sorted = seq;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  if (!sorted.empty() && sorted.back() >= k) return false;
  if (seq.size() >= 2) {
    std::map<int, int> freq;
    for (Vertex w = 0; w < k; ++w)
      if (w != seq[0]) ++freq[c.at(seq[0], w)];
    int top = -1, top_count = -1;
    for (auto [colour, count] : freq)
      if (count > top_count) top = colour, top_count = count;
    if (c.at(seq[0], seq[1]) == top) return false;
  }
  for (std::size_t i = 2; i < seq.size(); ++i) {
    const int first = c.at(seq[0], seq[i]);
    bool two = false;
    for (std::size_t j = 1; j < i; ++j) two = two || c.at(seq[j], seq[i]) != first;
    if (!two) return false;
  }
  return true;
}

std::vector<VertexSet> transversals(const std::vector<std::vector<std::pair<Vertex, int>>>& cliques,
                                    const std::vector<Vertex>& chosen_cliques,
                                    const VertexSet& X, int s) {
  VertexSet xs = X;
  std::sort(xs.begin(), xs.end());
  std::vector<VertexSet> out;
  for (Vertex v : chosen_cliques) {
    std::vector<std::pair<Vertex, int>> inside;
    for (const auto& [x, part] : cliques[v])
      if (std::binary_search(xs.begin(), xs.end(), x)) inside.push_back({x, part});
    for_each_subset(inside.size(), s, [&](const VertexSet& idx) {
      std::vector<int> parts;
      VertexSet members;
      for (Vertex i : idx) {
        parts.push_back(inside[i].second);
        members.push_back(inside[i].first);
      }
      std::sort(parts.begin(), parts.end());
      if (std::adjacent_find(parts.begin(), parts.end()) != parts.end()) return;
      std::sort(members.begin(), members.end());
      out.push_back(members);
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t codegree(const std::vector<VertexSet>& hyperedges, int i) {
  std::map<VertexSet, std::uint64_t> counts;
  for (const auto& e : hyperedges) {
    for_each_subset(e.size(), i, [&](const VertexSet& idx) {
      VertexSet sub;
      for (Vertex j : idx) sub.push_back(e[j]);
      std::sort(sub.begin(), sub.end());
      ++counts[sub];
    });
  }
  std::uint64_t best = 0;
  for (const auto& [sub, count] : counts) best = std::max(best, count);
  return best;
}

std::vector<VertexSet> hypergraph_blow_up(const std::vector<VertexSet>& edges, std::size_t k) {
  std::vector<VertexSet> out;
  for (const auto& e : edges) {
    std::vector<std::size_t> fiber(e.size(), 0);
    while (true) {
      VertexSet lifted;
      for (std::size_t j = 0; j < e.size(); ++j) lifted.push_back(Vertex(e[j] * k + fiber[j]));
      std::sort(lifted.begin(), lifted.end());
      out.push_back(lifted);
      std::size_t j = 0;
      while (j < e.size() && ++fiber[j] == k) fiber[j++] = 0;
      if (j == e.size()) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace erlab::oracle
