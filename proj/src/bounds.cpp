#include "erlab/bounds.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "erlab/errors.hpp"

namespace erlab {

const char* to_string(Regime r) {
  switch (r) {
    case Regime::saturated: return "saturated";
    case Regime::half: return "half";
    case Regime::lay3: return "lay3";
    case Regime::recursive: return "recursive";
    case Regime::upper: return "upper";
  }
  return "?";
}

Rational lay3_exponent(int s) {
  const int h = (s + 1) / 2;
  return Rational(s + h - 3, 2 * s + 2 * h - 5);
}

namespace {

class LowerSolver {
 public:
  LowerSolver(int s, const RamseyTable& table, const GTable& g) : s_(s), table_(table), g_(g) {}

  const TraceStep& solve(int t) {
    if (auto it = memo_.find(t); it != memo_.end()) return it->second;
    TraceStep step;
    step.t = t;
    const auto s = std::size_t(s_);
    if (table_.multicolor_at_most(t, 3, s)) {
      step.value = 1;
      step.regime = Regime::saturated;
    } else if (t >= 1 && table_.multicolor_at_most(t - 1, 3, s)) {
      step.value = Rational(1, 2);
      step.regime = Regime::half;
    } else if (s_ >= 3 && t >= 2 && table_.multicolor_at_most(t - 2, 3, s)) {
      step.value = lay3_exponent(s_);
      step.regime = Regime::lay3;
    } else {
      Rational sum = 0;
      for (int i = 2; i <= s_; ++i) {
        const int gi = g_(i);
        used_[i] = gi;
        const int child = t - gi;
        if (child < 0)
          throw ParameterError("recursion index t - g(" + std::to_string(i) + ") = " +
                               std::to_string(child) + " is negative");
        step.children.push_back(child);
        sum += 1 / solve(child).value;
      }
      step.value = 1 / (1 + sum / (s_ - 1));
      step.regime = Regime::recursive;
    }
    return memo_.emplace(t, std::move(step)).first->second;
  }

  std::vector<TraceStep> trace() const {
    std::vector<TraceStep> out;
    for (const auto& [t, step] : memo_) out.push_back(step);
    return out;
  }
  std::vector<std::pair<int, int>> g_used() const { return {used_.begin(), used_.end()}; }

 private:
  int s_;
  const RamseyTable& table_;
  const GTable& g_;
  std::map<int, TraceStep> memo_;
  std::map<int, int> used_;
};

}  // namespace

ExponentResult exponent_lower(int s, int t, const RamseyTable& table) {
  const GTable g(table);
  return exponent_lower(s, t, table, g);
}

ExponentResult exponent_lower(int s, int t, const RamseyTable& table, const GTable& g) {
  if (s < 2) throw ParameterError("exponent_lower needs s >= 2");
  if (t < 0) throw ParameterError("exponent_lower needs t >= 0");
  LowerSolver solver(s, table, g);
  const TraceStep& top = solver.solve(t);
  ExponentResult r;
  r.s = s;
  r.t = t;
  r.value = top.value;
  r.regime = top.regime;
  r.trace = solver.trace();
  r.g_used = solver.g_used();
  return r;
}

ExponentResult exponent_upper(int s, int b, int t, const RamseyTable& table) {
  if (s < 2) throw ParameterError("exponent_upper needs s >= 2");
  if (b < 3) throw ParameterError("exponent_upper needs b >= 3");
  if (t < 1) throw ParameterError("exponent_upper needs t >= 1");
  // r_ell(b) > s is guaranteed once (b-1)^ell >= s, so the scan is finite.
  int ell = 0;
  while (table.multicolor_at_most(ell, b, std::size_t(s))) ++ell;
  ExponentResult r;
  r.s = s;
  r.t = t;
  r.b = b;
  r.ell = ell;
  r.regime = Regime::upper;
  r.value = Rational(1, t / ell + 1);
  TraceStep step;
  step.t = t;
  step.value = r.value;
  step.regime = Regime::upper;
  r.trace.push_back(step);
  return r;
}

std::optional<Rational> replay_trace(const ExponentResult& r) {
  std::map<int, const TraceStep*> by_t;
  for (const auto& step : r.trace) by_t[step.t] = &step;
  if (r.regime == Regime::upper) {
    if (!r.ell || *r.ell < 1) return std::nullopt;
    return Rational(1, r.t / *r.ell + 1);
  }
  for (const auto& step : r.trace) {
    Rational expect;
    switch (step.regime) {
      case Regime::saturated: expect = 1; break;
      case Regime::half: expect = Rational(1, 2); break;
      case Regime::lay3: expect = lay3_exponent(r.s); break;
      case Regime::recursive: {
        if (step.children.size() != std::size_t(r.s - 1)) return std::nullopt;
        Rational sum = 0;
        for (int child : step.children) {
          auto it = by_t.find(child);
          if (it == by_t.end() || child >= step.t) return std::nullopt;
          sum += 1 / it->second->value;
        }
        expect = 1 / (1 + sum / (r.s - 1));
        break;
      }
      case Regime::upper: return std::nullopt;
    }
    if (expect != step.value) return std::nullopt;
  }
  auto it = by_t.find(r.t);
  if (it == by_t.end()) return std::nullopt;
  return it->second->value;
}

Rational uncolored_exponent(int s, int t) {
  if (s < 2 || t < 1) throw ParameterError("uncolored_exponent needs s >= 2, t >= 1");
  std::vector<Rational> a(std::size_t(t) + 1, Rational(1));
  for (int j = s + 1; j <= t; ++j) {
    Rational sum = 0;
    for (int i = 1; i <= s - 1; ++i) sum += 1 / a[std::size_t(j - i)];
    a[std::size_t(j)] = 1 / (1 + sum / (s - 1));
  }
  return a[std::size_t(t)];
}

nlohmann::json to_json(const ExponentResult& r) {
  nlohmann::json j;
  j["s"] = r.s;
  j["t"] = r.t;
  j["value"] = to_string(r.value);
  j["regime"] = to_string(r.regime);
  if (r.b) j["b"] = *r.b;
  if (r.ell) j["ell"] = *r.ell;
  j["trace"] = nlohmann::json::array();
  for (const auto& step : r.trace) {
    nlohmann::json e{{"t", step.t}, {"a", to_string(step.value)}, {"regime", to_string(step.regime)}};
    if (!step.children.empty()) e["children"] = step.children;
    j["trace"].push_back(e);
  }
  j["g"] = nlohmann::json::object();
  for (auto [i, gi] : r.g_used) j["g"][std::to_string(i)] = gi;
  return j;
}

// ---- orderings ---------------------------------------------------------------

namespace {

void require_triangle_free(std::size_t k, const EdgeColoring& coloring) {
  const Graph kk = Graph::complete(k);
  if (auto hit = find_mono_clique(kk, coloring, 3)) {
    std::vector<std::size_t> w(hit->clique.begin(), hit->clique.end());
    throw PreconditionError("monochromatic triangle in colour " + std::to_string(hit->color), w);
  }
}

int distinct_colors(const EdgeColoring& c, Vertex x, const VertexSet& others) {
  std::vector<int> seen;
  for (Vertex y : others)
    if (y != x) seen.push_back(c.at(x, y));
  std::sort(seen.begin(), seen.end());
  return int(std::unique(seen.begin(), seen.end()) - seen.begin());
}

}  // namespace

std::vector<int> ell_profile(const EdgeColoring& coloring, const VertexSet& pi) {
  std::vector<int> ell(pi.size(), 0);
  for (std::size_t j = 1; j < pi.size(); ++j)
    ell[j] = distinct_colors(coloring, pi[j], VertexSet(pi.begin(), pi.begin() + std::ptrdiff_t(j)));
  return ell;
}

OrderingResult order_vertices(std::size_t k, const EdgeColoring& coloring, OrderStart start,
                              const GTable* g) {
  require_triangle_free(k, coloring);
  OrderingResult r;
  if (start == OrderStart::identity) {
    for (std::size_t v = 0; v < k; ++v) r.pi.push_back(Vertex(v));
  } else {
    // Each prefix ends at a vertex of maximum colour degree inside the
    // prefix, so ell(i) is the local colour number of the first i vertices:
    // non-decreasing, and at least g(i) because the prefix is itself free
    // of monochromatic triangles.
    VertexSet rest(k);
    for (std::size_t v = 0; v < k; ++v) rest[v] = Vertex(v);
    VertexSet backwards;
    while (!rest.empty()) {
      std::size_t pick = 0;
      int best = -1;
      for (std::size_t j = 0; j < rest.size(); ++j) {
        const int d = distinct_colors(coloring, rest[j], rest);
        if (d > best) best = d, pick = j;
      }
      backwards.push_back(rest[pick]);
      rest.erase(rest.begin() + std::ptrdiff_t(pick));
    }
    r.pi.assign(backwards.rbegin(), backwards.rend());
  }

  r.ell = ell_profile(coloring, r.pi);
  // Each swap lowers ell at the first changed position and leaves earlier
  // positions alone, so the profile falls lexicographically and the loop ends.
  const std::size_t cap = k * k * k + 16;
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t j = 1; j + 1 < r.pi.size(); ++j) {
      if (r.ell[j] > r.ell[j + 1]) {
        std::swap(r.pi[j], r.pi[j + 1]);
        r.ell = ell_profile(coloring, r.pi);
        ++r.swaps;
        moved = true;
        if (r.swaps > cap) throw std::logic_error("swap descent did not settle");
        break;
      }
    }
  }
  for (std::size_t a = 1; a < r.ell.size(); ++a)
    for (std::size_t b = a + 1; b < r.ell.size(); ++b)
      if (r.ell[a] > r.ell[b]) ++r.n_pi;

  const GTable local_g(RamseyTable::standard());
  const GTable& table = g ? *g : local_g;
  for (std::size_t i = 2; i <= k && int(i) <= table.max_resolved(); ++i) {
    r.g_checked = int(i);
    if (r.ell[i - 1] < table(int(i))) r.meets_g = false;
  }
  return r;
}

int most_frequent_color(std::size_t k, const EdgeColoring& coloring, Vertex x) {
  std::map<int, int> freq;
  for (Vertex w = 0; w < k; ++w)
    if (w != x) ++freq[coloring.at(x, w)];
  int top = -1, count = -1;
  for (auto [c, n] : freq)
    if (n > count) top = c, count = n;
  return top;
}

namespace {

class HalfSequence {
 public:
  HalfSequence(std::size_t k, const EdgeColoring& c) : k_(k), c_(c) {
    mf_.resize(k);
    for (Vertex x = 0; x < k; ++x) mf_[x] = most_frequent_color(k, c, x);
  }

  // U sorted ascending; returns ceil(|U|/2) vertices.
  VertexSet run(const VertexSet& U) {
    if (U.size() <= 2) return {U.front()};
    if (U.size() == 3) return base(U);
    VertexSet smaller(U.begin(), U.end() - 1);  // drop the largest id
    if (U.size() % 2 == 0) return run(smaller);

    const VertexSet V = run(smaller);
    VertexSet W;
    for (Vertex u : U)
      if (std::find(V.begin(), V.end(), u) == V.end()) W.push_back(u);

    std::vector<int> common(W.size(), -1);
    for (std::size_t j = 0; j < W.size(); ++j) {
      const int first = c_.at(W[j], V[0]);
      bool mixed = false;
      for (Vertex v : V) mixed = mixed || c_.at(W[j], v) != first;
      if (mixed) {
        VertexSet out = V;
        out.push_back(W[j]);
        return out;
      }
      common[j] = first;
    }
    for (std::size_t j = 0; j < W.size(); ++j) {
      if (common[j] != mf_[W[j]]) {
        VertexSet out{W[j]};
        out.insert(out.end(), V.begin(), V.end());
        return out;
      }
    }
    for (std::size_t a = 0; a < W.size(); ++a)
      for (std::size_t b = 0; b < W.size(); ++b) {
        if (a == b || common[a] == common[b]) continue;
        // c(w_a w_b) differs from c(w_a): it is not the most frequent at w_a.
        if (c_.at(W[a], W[b]) == common[a]) continue;
        VertexSet out{W[a], W[b]};
        out.insert(out.end(), V.begin(), V.end() - 1);
        return out;
      }
    // Every w shares one colour with V, and that colour never appears inside
    // W, so any ordering of W with a non-decreasing profile works.
    return order_within(W);
  }

 private:
  VertexSet base(const VertexSet& U) {
    for (std::size_t a = 0; a < 3; ++a) {
      const Vertex x = U[a];
      const Vertex y = U[(a + 1) % 3], z = U[(a + 2) % 3];
      const Vertex lo = std::min(y, z), hi = std::max(y, z);
      if (c_.at(x, lo) == c_.at(x, hi)) continue;
      if (c_.at(x, lo) != mf_[x]) return {x, lo};
      return {x, hi};
    }
    throw std::logic_error("monochromatic triangle reached the base case");
  }

  VertexSet order_within(const VertexSet& W) {
    VertexSet rest = W;
    VertexSet backwards;
    while (!rest.empty()) {
      std::size_t pick = 0;
      int best = -1;
      for (std::size_t j = 0; j < rest.size(); ++j) {
        const int d = distinct_colors(c_, rest[j], rest);
        if (d > best) best = d, pick = j;
      }
      backwards.push_back(rest[pick]);
      rest.erase(rest.begin() + std::ptrdiff_t(pick));
    }
    return VertexSet(backwards.rbegin(), backwards.rend());
  }

  std::size_t k_;
  const EdgeColoring& c_;
  std::vector<int> mf_;
};

}  // namespace

VertexSet half_sequence(std::size_t k, const EdgeColoring& coloring) {
  if (k == 0) throw ParameterError("half_sequence needs k >= 1");
  require_triangle_free(k, coloring);
  VertexSet all(k);
  for (std::size_t v = 0; v < k; ++v) all[v] = Vertex(v);
  return HalfSequence(k, coloring).run(all);
}

}  // namespace erlab
