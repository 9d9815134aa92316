#include "erlab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <boost/math/distributions/students_t.hpp>

#include "erlab/alpha.hpp"
#include "erlab/bounds.hpp"
#include "erlab/constructor.hpp"
#include "erlab/errors.hpp"
#include "erlab/freeness.hpp"
#include "erlab/io.hpp"
#include "erlab/random.hpp"

namespace erlab {

using nlohmann::json;

// ---- config -------------------------------------------------------------------

ExperimentConfig config_from_json(const json& j) {
  if (!j.is_object()) throw ParameterError("experiment config must be a JSON object");
  static const std::set<std::string> known = {
      "s", "b", "t", "n", "k", "R", "retention_p", "seeds", "alpha_nodes",
      "exact_max_vertices", "pi_search_nodes", "timings", "write_instances", "out_dir"};
  for (const auto& [key, _] : j.items())
    if (!known.count(key)) throw ParameterError("unknown experiment config key '" + key + "'");
  ExperimentConfig c;
  try {
    if (j.contains("s")) c.s = j.at("s").get<int>();
    if (j.contains("b")) c.b = j.at("b").get<int>();
    if (j.contains("t")) c.t = j.at("t").get<int>();
    if (j.contains("n")) c.n = j.at("n").get<std::vector<std::size_t>>();
    if (j.contains("k")) c.k = j.at("k").get<std::size_t>();
    if (j.contains("R") && !j.at("R").is_null()) c.R = j.at("R").get<int>();
    if (j.contains("retention_p")) c.retention_p = j.at("retention_p").get<double>();
    if (j.contains("seeds")) c.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
    if (j.contains("alpha_nodes")) c.alpha_nodes = j.at("alpha_nodes").get<std::uint64_t>();
    if (j.contains("exact_max_vertices"))
      c.exact_max_vertices = j.at("exact_max_vertices").get<std::size_t>();
    if (j.contains("pi_search_nodes")) c.pi_search_nodes = j.at("pi_search_nodes").get<std::uint64_t>();
    if (j.contains("timings")) c.timings = j.at("timings").get<bool>();
    if (j.contains("write_instances")) c.write_instances = j.at("write_instances").get<bool>();
    if (j.contains("out_dir")) c.out_dir = j.at("out_dir").get<std::string>();
  } catch (const json::exception& e) {
    throw ParameterError(std::string("experiment config: ") + e.what());
  }
  if (c.n.empty()) throw ParameterError("experiment config needs a non-empty n grid");
  if (c.seeds.empty()) throw ParameterError("experiment config needs at least one seed");
  if (c.k < 1) throw ParameterError("k must be at least 1");
  if (!(c.retention_p > 0 && c.retention_p <= 1)) throw ParameterError("retention_p must lie in (0, 1]");
  return c;
}

json to_json(const ExperimentConfig& c) {
  return json{{"s", c.s},
              {"b", c.b},
              {"t", c.t},
              {"n", c.n},
              {"k", c.k},
              {"R", c.R ? json(*c.R) : json(nullptr)},
              {"retention_p", c.retention_p},
              {"seeds", c.seeds},
              {"alpha_nodes", c.alpha_nodes},
              {"exact_max_vertices", c.exact_max_vertices},
              {"pi_search_nodes", c.pi_search_nodes},
              {"timings", c.timings},
              {"write_instances", c.write_instances},
              {"out_dir", c.out_dir}};
}

unsigned worker_count() {
  if (const char* env = std::getenv("ERLAB_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v >= 1) return unsigned(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

// ---- fit --------------------------------------------------------------------------

FitResult fit_exponent(const std::vector<std::pair<double, double>>& rows) {
  if (rows.size() < 3) throw ParameterError("fit needs at least 3 rows, got " + std::to_string(rows.size()));
  std::set<double> seen;
  for (auto [n, a] : rows) {
    if (!(n > 0 && a > 0)) throw ParameterError("fit needs positive n and alpha");
    if (!seen.insert(n).second) throw ParameterError("fit needs distinct n");
  }
  const double m = double(rows.size());
  double sx = 0, sy = 0;
  for (auto [n, a] : rows) sx += std::log(n), sy += std::log(a);
  const double mx = sx / m, my = sy / m;
  double sxx = 0, sxy = 0, syy = 0;
  for (auto [n, a] : rows) {
    const double dx = std::log(n) - mx, dy = std::log(a) - my;
    sxx += dx * dx, sxy += dx * dy, syy += dy * dy;
  }
  FitResult f;
  f.points = rows;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  double sse = 0;
  for (auto [n, a] : rows) {
    const double r = std::log(a) - (f.intercept + f.slope * std::log(n));
    sse += r * r;
  }
  f.r2 = syy > 0 ? 1 - sse / syy : 1.0;
  const double df = m - 2;
  const double se = std::sqrt(std::max(0.0, sse / df / sxx));
  const boost::math::students_t dist(df);
  const double q = boost::math::quantile(boost::math::complement(dist, 0.025));
  f.ci_lo = f.slope - q * se;
  f.ci_hi = f.slope + q * se;
  return f;
}

// ---- experiment -------------------------------------------------------------------

namespace {

ExperimentRow run_row(const ExperimentConfig& c, std::size_t n, std::uint64_t seed) {
  ExperimentRow row;
  row.n = n, row.seed = seed, row.s = c.s, row.b = c.b, row.t = c.t;
  const auto start = std::chrono::steady_clock::now();
  try {
    ConstructionParams p;
    p.s = c.s, p.b = c.b, p.t = c.t, p.k = c.k, p.R = c.R;
    p.retention_p = c.retention_p;
    p.seed = seed;
    p.pi_search_nodes = c.pi_search_nodes;
    const UpperBoundInstance inst = construct_upper_bound_instance(p, n);
    const Graph& G = inst.final_graph;
    row.vertices = G.order();
    row.edges = G.size();
    for (const auto& ch : inst.checks)
      if (ch.hard && !ch.passed) row.failed_checks.push_back(ch.name);
    if (c.write_instances) {
      const auto dir = std::filesystem::path(c.out_dir) / "instances" /
                       ("n" + std::to_string(n) + "_seed" + std::to_string(seed));
      write_instance(inst, dir);
      if (auto bad = replay_instance(dir, c.b)) row.failed_checks.push_back("replay." + bad->name);
    }
    row.cert_ok = row.failed_checks.empty();

    std::size_t lo = 0, hi = G.order();
    auto consider = [&](std::size_t v, const char* name) {
      if (v > lo || row.lo_source.empty()) lo = std::max(lo, v), row.lo_source = name;
    };
    consider(greedy_free_subset(G, c.s).size(), "greedy");
    ExtractOptions eo;
    eo.seed = seed;
    if (c.b == 3) {
      try {
        consider(recursive_free_subset(G, inst.coloring, c.s, c.t, eo).set.size(), "recursive");
        if (c.s >= 3) consider(lay3_free_subset(G, inst.coloring, c.s, eo).set.size(), "lay3");
      } catch (const PreconditionError&) {
      } catch (const UnresolvedRamsey&) {
      } catch (const ParameterError&) {
      }
    }
    consider(alteration_free_subset(G, c.s, eo).set.size(), "alteration");
    if (G.order() <= c.exact_max_vertices) {
      AlphaOptions ao;
      ao.max_nodes = c.alpha_nodes;
      const AlphaResult a = alpha_exact(G, c.s, ao);
      if (a.optimal) {
        lo = hi = a.size;
        row.exact = true;
        row.lo_source = "exact";
      } else {
        consider(a.size, "branch-and-bound");
        hi = std::min(hi, a.upper);
        row.inconclusive = true;
      }
    } else {
      row.inconclusive = lo < hi;
    }
    row.alpha_lo = lo;
    row.alpha_hi = hi;
  } catch (const std::exception& e) {
    row.error = e.what();
    row.cert_ok = false;
  }
  if (c.timings)
    row.ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                 .count();
  return row;
}

std::string fmt(double v, int digits = 4) {
  if (!std::isfinite(v)) return v > 0 ? "inf" : (v < 0 ? "-inf" : "nan");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

}  // namespace

RunReport run_experiment(const ExperimentConfig& config) {
  if (config.n.empty() || config.seeds.empty())
    throw ParameterError("experiment needs a non-empty grid and seed list");
  RunReport rep;
  rep.config = config;
  // Every grid point must be resolvable before any work starts.
  for (std::size_t n : config.n) {
    ConstructionParams p;
    p.s = config.s, p.b = config.b, p.t = config.t, p.k = config.k, p.R = config.R;
    (void)resolve_params(p, n);
  }

  std::vector<std::pair<std::size_t, std::uint64_t>> jobs;
  for (std::size_t n : config.n)
    for (std::uint64_t seed : config.seeds) jobs.push_back({n, seed});
  rep.rows.resize(jobs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++)
      rep.rows[i] = run_row(config, jobs[i].first, jobs[i].second);
  };
  const unsigned workers = std::min<std::size_t>(worker_count(), jobs.size());
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  std::stable_sort(rep.rows.begin(), rep.rows.end(), [](const auto& a, const auto& b) {
    return std::pair(a.n, a.seed) < std::pair(b.n, b.seed);
  });

  // Averages per grid point over certified rows; flagged rows stay out of the fit.
  std::map<std::size_t, std::pair<double, double>> sums;
  std::map<std::size_t, int> counts;
  for (const auto& r : rep.rows) {
    if (!r.cert_ok || !r.error.empty()) {
      rep.hard_failure = true;
      continue;
    }
    sums[r.n].first += double(r.vertices);
    sums[r.n].second += double(r.alpha_lo);
    ++counts[r.n];
  }
  std::vector<std::pair<double, double>> pts;
  for (auto [n, s] : sums) pts.push_back({s.first / counts[n], s.second / counts[n]});
  try {
    rep.fit = fit_exponent(pts);
  } catch (const ParameterError& e) {
    rep.fit_error = e.what();
  }

  std::optional<double> upper;
  try {
    const auto u = exponent_upper(config.s, config.b, config.t);
    rep.exponent_upper = to_string(u.value);
    upper = u.value.convert_to<double>();
  } catch (const std::exception& e) {
    rep.exponent_upper = std::string("unresolved: ") + e.what();
  }
  if (config.b == 3) {
    try {
      rep.exponent_lower = to_string(exponent_lower(config.s, config.t).value);
    } catch (const std::exception& e) {
      rep.exponent_lower = std::string("unresolved: ") + e.what();
    }
  } else {
    rep.exponent_lower = "n/a (lower exponents are for triangles only)";
  }
  if (rep.fit && upper) rep.soft_target_met = std::abs(rep.fit->slope - *upper) <= 0.15;
  return rep;
}

json to_json(const RunReport& r) {
  json rows = json::array();
  for (const auto& x : r.rows)
    rows.push_back({{"n", x.n},
                    {"seed", x.seed},
                    {"s", x.s},
                    {"b", x.b},
                    {"t", x.t},
                    {"vertices", x.vertices},
                    {"edges", x.edges},
                    {"alpha_lo", x.alpha_lo},
                    {"alpha_hi", x.alpha_hi},
                    {"exact", x.exact},
                    {"cert_ok", x.cert_ok},
                    {"inconclusive", x.inconclusive},
                    {"lo_source", x.lo_source},
                    {"failed_checks", x.failed_checks},
                    {"error", x.error},
                    {"ms", x.ms}});
  json fit = nullptr;
  if (r.fit) {
    json pts = json::array();
    for (auto [n, a] : r.fit->points) pts.push_back({n, a});
    fit = {{"x", "mean final-graph order per grid point"},
           {"y", "mean alpha_lo per grid point"},
           {"slope", r.fit->slope},
           {"intercept", r.fit->intercept},
           {"r2", r.fit->r2},
           {"ci95", {r.fit->ci_lo, r.fit->ci_hi}},
           {"points", pts}};
  }
  return json{{"label", kAsymptoticLabel},
              {"config", to_json(r.config)},
              {"rows", rows},
              {"fit", fit},
              {"fit_error", r.fit_error},
              {"exponent_lower", r.exponent_lower},
              {"exponent_upper", r.exponent_upper},
              {"soft_target", {{"tolerance", 0.15},
                               {"against", "exponent_upper"},
                               {"met", r.soft_target_met ? json(*r.soft_target_met) : json(nullptr)}}},
              {"hard_failure", r.hard_failure}};
}

std::string report_csv(const RunReport& r) {
  std::ostringstream out;
  out << "n,seed,s,b,t,alpha_lo,alpha_hi,exact,cert_ok,ms\n";
  for (const auto& x : r.rows)
    out << x.n << ',' << x.seed << ',' << x.s << ',' << x.b << ',' << x.t << ',' << x.alpha_lo << ','
        << x.alpha_hi << ',' << (x.exact ? 1 : 0) << ',' << (x.cert_ok ? 1 : 0) << ',' << x.ms << '\n';
  return out.str();
}

std::string report_svg(const RunReport& r) {
  constexpr double W = 640, H = 420, L = 60, Rm = 20, T = 40, B = 50;
  std::vector<std::pair<double, double>> pts;
  for (const auto& x : r.rows)
    if (x.cert_ok && x.error.empty() && x.vertices > 0 && x.alpha_lo > 0)
      pts.push_back({std::log10(double(x.vertices)), std::log10(double(x.alpha_lo))});
  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\">\n";
  s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  s << "<text x=\"" << L << "\" y=\"24\" font-size=\"14\" font-family=\"sans-serif\">log10 alpha_s vs log10 |V| ("
    << kAsymptoticLabel << ")</text>\n";
  if (pts.empty()) {
    s << "<text x=\"" << L << "\" y=\"" << H / 2 << "\" font-family=\"sans-serif\">no certified rows</text>\n</svg>\n";
    return s.str();
  }
  double x0 = pts[0].first, x1 = x0, y0 = pts[0].second, y1 = y0;
  for (auto [x, y] : pts) x0 = std::min(x0, x), x1 = std::max(x1, x), y0 = std::min(y0, y), y1 = std::max(y1, y);
  if (x1 - x0 < 1e-9) x0 -= 0.5, x1 += 0.5;
  if (y1 - y0 < 1e-9) y0 -= 0.5, y1 += 0.5;
  auto px = [&](double x) { return L + (x - x0) / (x1 - x0) * (W - L - Rm); };
  auto py = [&](double y) { return H - B - (y - y0) / (y1 - y0) * (H - T - B); };
  s << "<line x1=\"" << L << "\" y1=\"" << H - B << "\" x2=\"" << W - Rm << "\" y2=\"" << H - B
    << "\" stroke=\"black\"/>\n";
  s << "<line x1=\"" << L << "\" y1=\"" << T << "\" x2=\"" << L << "\" y2=\"" << H - B << "\" stroke=\"black\"/>\n";
  s << "<text x=\"" << L << "\" y=\"" << H - B + 18 << "\" font-size=\"11\">" << fmt(x0, 2) << "</text>\n";
  s << "<text x=\"" << W - Rm - 30 << "\" y=\"" << H - B + 18 << "\" font-size=\"11\">" << fmt(x1, 2) << "</text>\n";
  s << "<text x=\"5\" y=\"" << H - B << "\" font-size=\"11\">" << fmt(y0, 2) << "</text>\n";
  s << "<text x=\"5\" y=\"" << T + 10 << "\" font-size=\"11\">" << fmt(y1, 2) << "</text>\n";
  for (auto [x, y] : pts)
    s << "<circle cx=\"" << fmt(px(x), 2) << "\" cy=\"" << fmt(py(y), 2) << "\" r=\"3\" fill=\"steelblue\"/>\n";
  if (r.fit) {
    // The fit is in natural logs; slope is base-independent, intercept is not.
    const double b = r.fit->intercept / std::log(10.0);
    s << "<line x1=\"" << fmt(px(x0), 2) << "\" y1=\"" << fmt(py(b + r.fit->slope * x0), 2) << "\" x2=\""
      << fmt(px(x1), 2) << "\" y2=\"" << fmt(py(b + r.fit->slope * x1), 2)
      << "\" stroke=\"firebrick\" stroke-dasharray=\"4 3\"/>\n";
    s << "<text x=\"" << L + 10 << "\" y=\"" << T + 14 << "\" font-size=\"12\">slope " << fmt(r.fit->slope)
      << " [" << fmt(r.fit->ci_lo) << ", " << fmt(r.fit->ci_hi) << "], target " << r.exponent_upper << "</text>\n";
  }
  s << "</svg>\n";
  return s.str();
}

void write_report(const RunReport& r, const std::filesystem::path& dir) {
  save_text(dir / "report.csv", report_csv(r));
  save_text(dir / "report.json", to_json(r).dump(2) + "\n");
  save_text(dir / "plot.svg", report_svg(r));
}

}  // namespace erlab
