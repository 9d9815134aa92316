#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace erlab {

inline constexpr const char* kAsymptoticLabel = "asymptotic — reported, not asserted";

// ---- experiment ------------------------------------------------------------

struct ExperimentConfig {
  int s = 5;
  int b = 3;
  int t = 2;
  std::vector<std::size_t> n;          // grid of hypergraph ground-set sizes
  std::size_t k = 1;                   // blow-up factor, same at every grid point
  std::optional<int> R;                // empty: default uniformity per n
  double retention_p = 1.0;
  std::vector<std::uint64_t> seeds;
  std::uint64_t alpha_nodes = 2'000'000;   // branch-and-bound budget per row
  std::size_t exact_max_vertices = 400;    // above this only the sandwich is reported
  std::uint64_t pi_search_nodes = 5'000'000;
  bool timings = false;                // fill the ms column (breaks byte-identity)
  bool write_instances = true;         // store and replay artifacts per row
  std::string out_dir = "experiment";
};

/// Parses a JSON config. Unknown keys, a missing grid or empty seeds throw
/// ParameterError.
ExperimentConfig config_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ExperimentConfig& c);

struct ExperimentRow {
  std::size_t n = 0;
  std::uint64_t seed = 0;
  int s = 0, b = 0, t = 0;
  std::size_t vertices = 0;  // order of the final graph
  std::size_t edges = 0;
  std::size_t alpha_lo = 0;
  std::size_t alpha_hi = 0;
  bool exact = false;
  bool cert_ok = false;
  bool inconclusive = false;  // node budget ran out before alpha was settled
  std::string lo_source;      // exact, branch-and-bound, recursive, lay3, greedy, alteration
  std::vector<std::string> failed_checks;
  std::string error;          // exception text when the row could not be built
  long long ms = 0;
};

struct FitResult {
  double slope = 0;
  double intercept = 0;
  double r2 = 0;
  double ci_lo = 0;  // 95% interval for the slope
  double ci_hi = 0;
  std::vector<std::pair<double, double>> points;  // inputs echoed
};

/// Least squares on (log n, log alpha). Needs at least three rows, distinct
/// n and positive values; throws ParameterError otherwise.
FitResult fit_exponent(const std::vector<std::pair<double, double>>& rows);

struct RunReport {
  ExperimentConfig config;
  std::vector<ExperimentRow> rows;  // sorted by (n, seed)
  std::optional<FitResult> fit;
  std::string fit_error;
  std::string exponent_lower;  // "p/q" or the unresolved reason
  std::string exponent_upper;
  std::optional<bool> soft_target_met;  // |slope - upper| <= 0.15
  bool hard_failure = false;            // some row failed certification
};

/// Builds, certifies and measures every (n, seed) pair. Rows run on up to
/// ERLAB_WORKERS threads; the result does not depend on the thread count.
RunReport run_experiment(const ExperimentConfig& config);

nlohmann::json to_json(const RunReport& r);
std::string report_csv(const RunReport& r);
std::string report_svg(const RunReport& r);

/// report.csv, report.json and plot.svg under `dir`.
void write_report(const RunReport& r, const std::filesystem::path& dir);

/// Thread cap from ERLAB_WORKERS, else the hardware concurrency (at least 1).
unsigned worker_count();

// ---- verification suite -------------------------------------------------------

enum class VerifyLevel { fast, full };

struct VerifyOptions {
  VerifyLevel level = VerifyLevel::fast;
  std::filesystem::path corpus_dir;  // small graphs used by the blow-up and counting checks
  std::filesystem::path work_dir;    // scratch space for determinism reruns
  std::optional<std::filesystem::path> instance;  // extra stored instance to replay
  int instance_b = 3;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<CriterionResult> results;
  bool ok() const;
};

/// Runs the numbered acceptance checks; fast covers 1, 2, 7 and 11.
VerifyReport verify_suite(const VerifyOptions& opts);

/// Runs a single check by number (1..13), or 0 for the stored-instance replay.
CriterionResult verify_criterion(int id, const VerifyOptions& opts);

}  // namespace erlab
