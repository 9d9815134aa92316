#include "erlab/density.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <string>

#include "erlab/constructor.hpp"
#include "erlab/errors.hpp"

namespace erlab {

std::uint64_t elementary_symmetric(const std::vector<std::uint64_t>& counts, int k) {
  if (k < 0) return 0;
  // e[j] after processing a prefix of counts; the usual DP.
  std::vector<std::uint64_t> e(std::size_t(k) + 1, 0);
  e[0] = 1;
  for (std::uint64_t c : counts)
    for (std::size_t j = std::size_t(k); j >= 1; --j) e[j] += e[j - 1] * c;
  return e[std::size_t(k)];
}

namespace {

template <class F>
void for_each_index_subset(std::size_t n, std::size_t r, F&& f) {
  if (r > n) return;
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    f(idx);
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == n - r + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Members of K_v inside X, grouped by part.
std::vector<VertexSet> members_by_part(const SPartition& p, Vertex v, const VertexSet& X) {
  std::vector<VertexSet> groups(std::size_t(p.s));
  const auto& members = p.members[v];
  for (std::size_t i = 0; i < members.size(); ++i)
    if (std::binary_search(X.begin(), X.end(), members[i]))
      groups[std::size_t(p.parts[v][i])].push_back(members[i]);
  return groups;
}

std::vector<std::uint64_t> sizes(const std::vector<VertexSet>& groups) {
  std::vector<std::uint64_t> out;
  for (const auto& g : groups) out.push_back(g.size());
  return out;
}

void emit_transversals(const std::vector<VertexSet>& groups, int s, std::vector<VertexSet>& out) {
  for_each_index_subset(groups.size(), std::size_t(s), [&](const std::vector<std::size_t>& chosen) {
    for (std::size_t j : chosen)
      if (groups[j].empty()) return;
    std::vector<std::size_t> pos(chosen.size(), 0);
    while (true) {
      VertexSet e;
      for (std::size_t q = 0; q < chosen.size(); ++q) e.push_back(groups[chosen[q]][pos[q]]);
      std::sort(e.begin(), e.end());
      out.push_back(std::move(e));
      std::size_t q = 0;
      while (q < chosen.size() && ++pos[q] == groups[chosen[q]].size()) pos[q++] = 0;
      if (q == chosen.size()) break;
    }
  });
}

std::vector<std::uint64_t> codegrees_by_enumeration(const std::vector<VertexSet>& edges, int s) {
  std::vector<std::uint64_t> out(std::size_t(s), 0);
  for (int i = 1; i <= s; ++i) {
    std::map<VertexSet, std::uint64_t> count;
    for (const auto& e : edges)
      for_each_index_subset(e.size(), std::size_t(i), [&](const std::vector<std::size_t>& idx) {
        VertexSet sub;
        for (std::size_t j : idx) sub.push_back(e[j]);
        const auto c = ++count[sub];
        out[std::size_t(i - 1)] = std::max(out[std::size_t(i - 1)], c);
      });
  }
  return out;
}

double exponent_for(int i, int s) { return 1.0 - double(i - 1) / double(s - 1); }

}  // namespace

DensityWitness density_witness(const Graph& g_star, const CliqueCover& cover,
                               const SPartition& partition, VertexSet X, int s,
                               bool materialize) {
  if (X.empty()) throw ParameterError("density_witness needs a non-empty X");
  if (s < 2) throw ParameterError("density_witness needs s >= 2");
  if (s > partition.s)
    throw ParameterError("s=" + std::to_string(s) + " exceeds the " +
                         std::to_string(partition.s) + " parts of the partition");
  if (partition.members.size() != cover.cliques.size())
    throw StructuralError("partition does not match the clique cover");
  std::sort(X.begin(), X.end());
  X.erase(std::unique(X.begin(), X.end()), X.end());
  for (Vertex x : X)
    if (x >= g_star.order()) throw StructuralError("X contains a vertex outside the graph");

  DensityWitness out;
  auto& prof = out.profile;
  prof.a.assign(cover.cliques.size(), 0);
  for (Vertex x : X)
    for (Vertex v : cover.memberships[x]) ++prof.a[v];
  std::map<int, std::size_t> weight;
  for (std::size_t v = 0; v < prof.a.size(); ++v) {
    if (prof.a[v] == 0) continue;
    const int cls = int(std::bit_width(prof.a[v]));
    prof.dyadic_classes[cls].push_back(Vertex(v));
    weight[cls] += prof.a[v];
    prof.membership_total += prof.a[v];
  }
  if (!weight.empty()) {
    int best = weight.begin()->first;
    for (auto [cls, w] : weight)
      if (w > weight[best]) best = cls;
    prof.ell_dyadic = best;
    for (Vertex v : prof.dyadic_classes[best])
      if (evenly_partitioned(partition, v, X)) prof.evenly_partitioned.push_back(v);
  }

  auto& w = out.witness;
  w.s = s;
  w.codegrees.assign(std::size_t(s), 0);
  const std::size_t n_ground = cover.cliques.size();
  w.params.N = g_star.order();
  w.params.m = n_ground;
  w.params.alpha = std::pow(double(std::max<std::size_t>(n_ground, 1)), -double(s - 1));
  w.params.lambda = std::log2(double(std::max<std::size_t>(n_ground, 2)));

  // Two cliques of I' sharing two vertices of X would let an i-set (i >= 2)
  // sit in several cliques; detect that before trusting the formulas.
  bool linear = true;
  {
    std::map<std::pair<Vertex, Vertex>, int> shared;
    for (Vertex x : X) {
      VertexSet in;
      for (Vertex v : cover.memberships[x])
        if (std::binary_search(prof.evenly_partitioned.begin(), prof.evenly_partitioned.end(), v))
          in.push_back(v);
      for (std::size_t i = 0; i < in.size() && linear; ++i)
        for (std::size_t j = i + 1; j < in.size(); ++j)
          if (++shared[{in[i], in[j]}] >= 2) linear = false;
    }
  }

  std::map<Vertex, std::uint64_t> through;  // x -> hyperedges containing x
  for (Vertex v : prof.evenly_partitioned) {
    const auto groups = members_by_part(partition, v, X);
    const auto c = sizes(groups);
    w.e_count += elementary_symmetric(c, s);
    if (materialize || !linear) emit_transversals(groups, s, w.hyperedges);
    if (!linear) continue;
    for (std::size_t j = 0; j < groups.size(); ++j) {
      auto rest = c;
      rest[j] = 0;
      const std::uint64_t per = elementary_symmetric(rest, s - 1);
      if (per == 0) continue;
      for (Vertex x : groups[j]) through[x] += per;
    }
    for (int i = 2; i <= s; ++i) {
      auto& best = w.codegrees[std::size_t(i - 1)];
      for_each_index_subset(c.size(), std::size_t(i), [&](const std::vector<std::size_t>& P) {
        auto rest = c;
        for (std::size_t j : P) {
          if (c[j] == 0) return;
          rest[j] = 0;
        }
        best = std::max(best, elementary_symmetric(rest, s - i));
      });
    }
  }
  std::sort(w.hyperedges.begin(), w.hyperedges.end());
  if (linear) {
    for (auto [x, cnt] : through) w.codegrees[0] = std::max(w.codegrees[0], cnt);
  } else {
    w.hyperedges.erase(std::unique(w.hyperedges.begin(), w.hyperedges.end()), w.hyperedges.end());
    w.codegrees = codegrees_by_enumeration(w.hyperedges, s);
  }
  if (!materialize) w.hyperedges.clear();
  prof.X = std::move(X);
  return out;
}

DensityReport check_uniform_density(const WitnessSubgraph& W, std::size_t X_size) {
  if (X_size == 0) throw ParameterError("check_uniform_density needs |X| > 0");
  if (W.s < 2 || W.codegrees.size() != std::size_t(W.s))
    throw StructuralError("witness codegree table does not match s");
  constexpr double inf = std::numeric_limits<double>::infinity();
  const double e = double(W.e_count);
  const double x = double(X_size);
  const int s = W.s;
  DensityReport r;
  const double need = W.params.alpha * std::pow(x, s);
  r.edge_margin = need > 0 ? e / need : (e > 0 ? inf : (need == 0 ? inf : 0));
  // Margins are compared with a relative slack so that exact ties computed
  // in floating point still count as satisfied.
  constexpr double slack = 1e-12;
  r.holds = r.edge_margin >= 1 - slack;
  for (int i = 1; i <= s; ++i) {
    const double delta = double(W.codegrees[std::size_t(i - 1)]);
    const double cap = W.params.lambda * std::pow(e / x, exponent_for(i, s));
    const double m = delta == 0 ? inf : cap / delta;
    r.codegree_margins.push_back(m);
    r.holds = r.holds && m >= 1 - slack;
  }
  r.alpha_star = e / std::pow(x, s);
  r.lambda_star = 0;
  if (W.e_count > 0)
    for (int i = 1; i <= s; ++i)
      r.lambda_star = std::max(r.lambda_star, double(W.codegrees[std::size_t(i - 1)]) /
                                                  std::pow(e / x, exponent_for(i, s)));
  return r;
}

namespace {

nlohmann::json number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  return v;
}

}  // namespace

nlohmann::json to_json(const DensityReport& r) {
  nlohmann::json j;
  j["edge_margin"] = number(r.edge_margin);
  j["codegree_margins"] = nlohmann::json::array();
  for (double m : r.codegree_margins) j["codegree_margins"].push_back(number(m));
  j["holds"] = r.holds;
  j["alpha_star"] = number(r.alpha_star);
  j["lambda_star"] = number(r.lambda_star);
  return j;
}

std::vector<VertexSet> clique_hypergraph(const Graph& g, int s) { return enumerate_cliques(g, s); }

BlowUpTransfer check_blow_up_transfer(const Graph& g, std::size_t k, int s) {
  if (k < 1) throw ParameterError("blow-up factor must be at least 1");
  BlowUpTransfer out;
  const Graph big = blow_up(g, k);
  out.counts_ok = big.order() == k * g.order() && big.size() == k * k * g.size();
  const auto lifted_direct = clique_hypergraph(big, s);
  std::vector<VertexSet> lifted;
  for (const auto& e : clique_hypergraph(g, s)) {
    std::vector<std::size_t> fiber(e.size(), 0);
    while (true) {
      VertexSet x;
      for (std::size_t j = 0; j < e.size(); ++j) x.push_back(Vertex(e[j] * k + fiber[j]));
      lifted.push_back(std::move(x));  // fibers keep the order of e, so x is sorted
      std::size_t j = 0;
      while (j < e.size() && ++fiber[j] == k) fiber[j++] = 0;
      if (j == e.size()) break;
    }
  }
  std::sort(lifted.begin(), lifted.end());
  out.hyperedges = lifted.size();
  out.equal = lifted == lifted_direct;
  if (!out.equal) {
    std::vector<VertexSet> diff;
    std::set_symmetric_difference(lifted.begin(), lifted.end(), lifted_direct.begin(),
                                  lifted_direct.end(), std::back_inserter(diff));
    if (!diff.empty()) out.mismatch = diff.front();
  }
  return out;
}

}  // namespace erlab
