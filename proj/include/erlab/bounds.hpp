#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "erlab/freeness.hpp"
#include "erlab/graph.hpp"
#include "erlab/rational.hpp"

namespace erlab {

enum class Regime { saturated, half, lay3, recursive, upper };
const char* to_string(Regime r);

/// One settled exponent a_{t'} together with how it was obtained.
struct TraceStep {
  int t = 0;
  Rational value;
  Regime regime = Regime::saturated;
  std::vector<int> children;  // t - g(i) for i = 2..s, recursive steps only
};

struct ExponentResult {
  int s = 0;
  int t = 0;
  Rational value;
  Regime regime = Regime::saturated;
  std::vector<TraceStep> trace;            // ascending t, one entry per index used
  std::vector<std::pair<int, int>> g_used; // (i, g(i))
  std::optional<int> ell;                  // upper bound only
  std::optional<int> b;                    // upper bound only
};

/// (s + ceil(s/2) - 3) / (2s + 2 ceil(s/2) - 5), the three-level seed value.
Rational lay3_exponent(int s);

/// Four-case lower exponent for K_3 colourings. Throws UnresolvedRamsey when
/// a needed comparison r_j(3) vs s or a g value is not settled.
ExponentResult exponent_lower(int s, int t, const RamseyTable& table = RamseyTable::standard());
ExponentResult exponent_lower(int s, int t, const RamseyTable& table, const GTable& g);

/// 1 / (floor(t / ell) + 1) with ell the least index such that r_ell(b) > s.
ExponentResult exponent_upper(int s, int b, int t,
                              const RamseyTable& table = RamseyTable::standard());

/// Recomputes the value from the trace alone, in exact arithmetic; returns
/// nullopt when the trace is inconsistent.
std::optional<Rational> replay_trace(const ExponentResult& r);

/// The uncoloured recursion a'_t = 1 for t <= s and
/// 1/a'_t = 1 + (1/(s-1)) sum_{i=1}^{s-1} 1/a'_{t-i}; shown for comparison.
Rational uncolored_exponent(int s, int t);

nlohmann::json to_json(const ExponentResult& r);

// ---- orderings of coloured cliques ----------------------------------------

enum class OrderStart {
  greedy,    // backwards: last is the vertex seeing the most colours in what is left
  identity,  // 0, 1, ..., k-1
};

struct OrderingResult {
  VertexSet pi;            // pi[j] = vertex at position j + 1
  std::vector<int> ell;    // ell[j] = colours from pi[j] back to pi[0..j-1]
  std::size_t n_pi = 0;    // pairs j < j' with ell[j] > ell[j']
  std::size_t swaps = 0;
  int g_checked = 0;       // positions 2..g_checked were compared with g
  bool meets_g = true;     // ell(i) >= g(i) for every checked i
};

/// Colours from each position back to the earlier ones.
std::vector<int> ell_profile(const EdgeColoring& coloring, const VertexSet& pi);

/// Ordering of K_k with a non-decreasing colour profile, refined by adjacent
/// swaps. Throws PreconditionError with the monochromatic triangle.
OrderingResult order_vertices(std::size_t k, const EdgeColoring& coloring,
                              OrderStart start = OrderStart::greedy,
                              const GTable* g = nullptr);

/// ceil(k/2) vertices: the first edge avoids the first vertex's most
/// frequent colour (ties to the smallest colour), and every later vertex
/// sees at least two colours back to the earlier ones.
VertexSet half_sequence(std::size_t k, const EdgeColoring& coloring);

/// Most frequent colour on the edges of K_k at x; ties to the smallest colour.
int most_frequent_color(std::size_t k, const EdgeColoring& coloring, Vertex x);

}  // namespace erlab
