#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "erlab/graph.hpp"

namespace erlab {

struct MonoClique {
  int color = 0;
  VertexSet clique;
};

/// First monochromatic K_b in lexicographic clique order (ties across colours
/// go to the smaller colour). Throws StructuralError when the colouring does
/// not cover E(G) exactly.
std::optional<MonoClique> find_mono_clique(const Graph& g, const EdgeColoring& coloring, int b);

/// Same search restricted to one colour class.
std::optional<VertexSet> find_mono_clique_in_color(const Graph& g, const EdgeColoring& coloring,
                                                   int color, int b);

enum class SearchStatus { found, none, inconclusive };
const char* to_string(SearchStatus s);

struct SearchBudget {
  std::uint64_t max_nodes = 0;  // 0 = unlimited
  double max_seconds = 0;       // 0 = unlimited; wall-clock limits are not reproducible
};

struct FreenessQuery {
  Graph graph;
  std::optional<int> t;            // colour count; empty = unbounded palette (local variant)
  int b = 3;
  std::optional<int> local_bound;  // cap on distinct colours at each vertex
};

struct SearchResult {
  SearchStatus status = SearchStatus::inconclusive;
  std::optional<EdgeColoring> coloring;
  std::uint64_t nodes = 0;
};

/// Exhaustive backtracking over edge colourings with colour-symmetry
/// breaking. A returned colouring has been re-checked with find_mono_clique.
SearchResult search_free_coloring(const FreenessQuery& query, const SearchBudget& budget = {});

enum class RamseyKind { multicolor, local };

enum class Provenance { verified_exhaustively, verified_witness, literature, unknown };
const char* to_string(Provenance p);

struct SweepStep {
  std::size_t n = 0;
  SearchStatus status = SearchStatus::inconclusive;
  std::uint64_t nodes = 0;
};

/// Result of sweeping K_1, K_2, ... for the first n without a valid colouring.
struct RamseyEntry {
  RamseyKind kind = RamseyKind::multicolor;
  int param = 0;  // t for multicolour, k for local
  int b = 3;
  std::optional<std::size_t> value;
  std::size_t lower = 1;  // value >= lower is certain
  Provenance status = Provenance::unknown;
  bool inconclusive = false;
  std::vector<SweepStep> transcript;
  std::string digest;  // FNV-1a over the transcript
  std::optional<EdgeColoring> witness;  // colouring of K_{value-1} (or the largest K_n reached)
};

RamseyEntry ramsey_oracle(RamseyKind kind, int param, int b, std::size_t n_max,
                          const SearchBudget& budget = {});

struct Bound {
  std::size_t value = 0;
  Provenance provenance = Provenance::unknown;
};

struct TableEntry {
  std::optional<Bound> lower;  // r >= lower.value
  std::optional<Bound> upper;  // r <= upper.value
  bool exact() const { return lower && upper && lower->value == upper->value; }
};

/// 16-vertex 3-colouring of K_16 from the cubic-residue classes of GF(16):
/// each colour class is triangle-free and every vertex sees 3 colours.
EdgeColoring greenwood_gleason_coloring();

/// Multicolour and local Ramsey values with per-bound provenance.
class RamseyTable {
 public:
  /// Runs the small exhaustive oracles once and replays the shipped
  /// witnesses; cached for the process.
  static const RamseyTable& standard();

  TableEntry multicolor(int t, int b) const;
  TableEntry local(int k) const;

  /// Decides r_t(b) <= s; throws UnresolvedRamsey naming the entry when the
  /// bounds straddle s.
  bool multicolor_at_most(int t, int b, std::size_t s) const;
  /// Decides r^loc_k(3) <= s, same convention.
  bool local_at_most(int k, std::size_t s) const;

  const std::map<std::string, RamseyEntry>& oracle_runs() const { return runs_; }

  void set_multicolor(int t, int b, TableEntry e) { multi_[{t, b}] = e; }
  void set_local(int k, TableEntry e) { local_[k] = e; }

 private:
  std::map<std::pair<int, int>, TableEntry> multi_;
  std::map<int, TableEntry> local_;
  std::map<std::string, RamseyEntry> runs_;
};

/// g(i) = smallest k with r^loc_k(3) > i.
struct GEntry {
  int value = 0;
  Provenance provenance = Provenance::unknown;
};

class GTable {
 public:
  /// Entries are served for 1 <= i <= cap and only when the table settles
  /// both comparisons defining g(i). The default cap keeps to values settled
  /// by exhaustive search; raising it admits the GF(16) witness bound
  /// r^loc_3(3) >= 17, which resolves i <= 16.
  explicit GTable(const RamseyTable& table, int cap = 6);

  /// Throws UnresolvedRamsey outside the resolved range.
  int operator()(int i) const { return entry(i).value; }
  GEntry entry(int i) const;
  int max_resolved() const { return int(entries_.size()); }

 private:
  std::vector<GEntry> entries_;  // entries_[i - 1]
  std::string unresolved_;       // first entry that could not be settled
};

}  // namespace erlab
