#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>

#include "erlab/errors.hpp"
#include "erlab/harness.hpp"
#include "erlab/io.hpp"

using namespace erlab;
namespace fs = std::filesystem;

namespace {

ExperimentConfig small_config(const std::string& name) {
  ExperimentConfig c;
  c.s = 5, c.b = 3, c.t = 2;
  c.n = {32, 64, 96};
  c.seeds = {1, 2};
  c.out_dir = (fs::temp_directory_path() / ("erlab_harness_" + name)).string();
  fs::remove_all(c.out_dir);
  return c;
}

}  // namespace

TEST(Fit, ExactPowerLaw) {
  std::vector<std::pair<double, double>> rows;
  for (double n : {16.0, 64.0, 256.0, 1024.0}) rows.push_back({n, std::sqrt(n)});
  const auto f = fit_exponent(rows);
  EXPECT_NEAR(f.slope, 0.5, 1e-12);
  EXPECT_NEAR(f.r2, 1.0, 1e-12);
  EXPECT_NEAR(f.ci_lo, 0.5, 1e-9);
  EXPECT_NEAR(f.ci_hi, 0.5, 1e-9);
}

TEST(Fit, ConstantHasZeroSlope) {
  const auto f = fit_exponent({{10, 7}, {20, 7}, {40, 7}});
  EXPECT_NEAR(f.slope, 0.0, 1e-12);
}

TEST(Fit, NoisySlopeInsideInterval) {
  const auto f = fit_exponent({{10, 3.0}, {20, 4.9}, {40, 6.1}, {80, 9.5}, {160, 12.0}});
  EXPECT_LT(f.ci_lo, f.slope);
  EXPECT_GT(f.ci_hi, f.slope);
  EXPECT_LT(f.r2, 1.0);
}

TEST(Fit, Refusals) {
  EXPECT_THROW(fit_exponent({{1, 1}, {2, 2}}), ParameterError);
  EXPECT_THROW(fit_exponent({{2, 1}, {2, 2}, {3, 3}}), ParameterError);
  EXPECT_THROW(fit_exponent({{1, 0}, {2, 2}, {3, 3}}), ParameterError);
}

TEST(Config, ParsesAndRejectsUnknownKeys) {
  const auto j = nlohmann::json::parse(R"({"s":5,"b":3,"t":4,"n":[32,64],"seeds":[1],"k":2,"R":null})");
  const auto c = config_from_json(j);
  EXPECT_EQ(c.t, 4);
  EXPECT_EQ(c.k, 2u);
  EXPECT_FALSE(c.R.has_value());
  EXPECT_EQ(config_from_json(to_json(c)).n, c.n);
  EXPECT_THROW(config_from_json(nlohmann::json::parse(R"({"n":[32],"seeds":[1],"colour":2})")), ParameterError);
  EXPECT_THROW(config_from_json(nlohmann::json::parse(R"({"n":[32],"seeds":[]})")), ParameterError);
  EXPECT_THROW(config_from_json(nlohmann::json::parse(R"({"seeds":[1]})")), ParameterError);
}

TEST(Experiment, RowsCertifiedAndSorted) {
  const auto c = small_config("rows");
  const auto rep = run_experiment(c);
  ASSERT_EQ(rep.rows.size(), 6u);
  for (std::size_t i = 0; i < rep.rows.size(); ++i) {
    const auto& r = rep.rows[i];
    EXPECT_TRUE(r.cert_ok) << r.n << " " << r.error;
    EXPECT_LE(r.alpha_lo, r.alpha_hi);
    EXPECT_LE(r.alpha_hi, r.vertices);
    EXPECT_EQ(r.ms, 0);
    if (i) EXPECT_LE(rep.rows[i - 1].n, r.n);
  }
  EXPECT_TRUE(rep.fit.has_value());
  EXPECT_EQ(rep.exponent_upper, "1/2");
  EXPECT_FALSE(rep.hard_failure);
}

TEST(Experiment, ReportFiles) {
  auto c = small_config("files");
  const auto rep = run_experiment(c);
  write_report(rep, c.out_dir);
  const std::string csv = load_text(fs::path(c.out_dir) / "report.csv");
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "n,seed,s,b,t,alpha_lo,alpha_hi,exact,cert_ok,ms");
  const auto j = nlohmann::json::parse(load_text(fs::path(c.out_dir) / "report.json"));
  EXPECT_EQ(j.at("label"), kAsymptoticLabel);
  EXPECT_TRUE(j.at("fit").contains("ci95"));
  const std::string svg = load_text(fs::path(c.out_dir) / "plot.svg");
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_TRUE(fs::exists(fs::path(c.out_dir) / "instances" / "n32_seed1" / "certificate.json"));
}

TEST(Experiment, IndependentOfWorkerCount) {
  auto c = small_config("workers");
  c.write_instances = false;
  setenv("ERLAB_WORKERS", "1", 1);
  EXPECT_EQ(worker_count(), 1u);
  const auto one = to_json(run_experiment(c)).dump();
  setenv("ERLAB_WORKERS", "3", 1);
  EXPECT_EQ(worker_count(), 3u);
  const auto three = to_json(run_experiment(c)).dump();
  unsetenv("ERLAB_WORKERS");
  EXPECT_EQ(one, three);
}

TEST(Experiment, RepeatedSeedsGiveIdenticalRows) {
  auto c = small_config("repeat");
  c.n = {64};
  c.seeds = {5, 5};
  c.write_instances = false;
  const auto rep = run_experiment(c);
  ASSERT_EQ(rep.rows.size(), 2u);
  EXPECT_EQ(to_json(rep).at("rows")[0].dump(), to_json(rep).at("rows")[1].dump());
  EXPECT_FALSE(rep.fit.has_value());  // one grid point cannot be fitted
  EXPECT_FALSE(rep.fit_error.empty());
}

TEST(Experiment, SmallGridAlphaIsMonotone) {
  // Soft in general; on this grid every row is exact and the column grows.
  auto c = small_config("mono");
  c.s = 4, c.t = 2;
  c.n = {16, 24, 32};
  c.seeds = {1};
  c.write_instances = false;
  const auto rep = run_experiment(c);
  for (const auto& r : rep.rows) {
    EXPECT_TRUE(r.cert_ok) << r.error;
    EXPECT_TRUE(r.exact);
  }
  for (std::size_t i = 0; i < rep.rows.size(); ++i)
    std::cout << "n=" << rep.rows[i].n << " alpha=" << rep.rows[i].alpha_lo << "\n";
}

TEST(Verify, FastLevelPasses) {
  VerifyOptions o;
  o.level = VerifyLevel::fast;
  o.corpus_dir = ERLAB_TEST_CORPUS;
  o.work_dir = fs::temp_directory_path() / "erlab_verify_fast";
  const auto rep = verify_suite(o);
  ASSERT_EQ(rep.results.size(), 4u);
  for (const auto& r : rep.results) EXPECT_TRUE(r.passed) << r.id << " " << r.detail;
}

TEST(Verify, CorruptedInstanceReportsWitness) {
  const fs::path dir = fs::temp_directory_path() / "erlab_verify_corrupt";
  fs::remove_all(dir);
  // K_3 coloured all one colour.
  save_text(dir / "final_graph.txt", "graph 3 3\n0 1\n0 2\n1 2\n");
  save_text(dir / "coloring.txt", "0 1 0\n0 2 0\n1 2 0\n");
  VerifyOptions o;
  o.instance = dir;
  const auto r = verify_criterion(0, o);
  EXPECT_FALSE(r.passed);
  EXPECT_NE(r.detail.find("[0,1,2]"), std::string::npos) << r.detail;
}
