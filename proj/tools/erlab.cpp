#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "erlab/alpha.hpp"
#include "erlab/bounds.hpp"
#include "erlab/constructor.hpp"
#include "erlab/density.hpp"
#include "erlab/errors.hpp"
#include "erlab/freeness.hpp"
#include "erlab/harness.hpp"
#include "erlab/io.hpp"
#include "erlab/oracle.hpp"
#include "erlab/random.hpp"

#ifndef ERLAB_DEFAULT_CORPUS
#define ERLAB_DEFAULT_CORPUS "tests/corpus"
#endif

namespace fs = std::filesystem;
using nlohmann::json;
using namespace erlab;

namespace {

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

json vertex_list(const VertexSet& vs) { return json(vs); }

// ---- construct ---------------------------------------------------------------

struct ConstructArgs {
  ConstructionParams p;
  std::size_t n = 64;
  std::string out_dir = "instance";
  std::optional<std::size_t> threshold;
  std::string scheme = "uniform";
};

int run_construct(const ConstructArgs& a) {
  ConstructionParams p = a.p;
  p.threshold = a.threshold;
  p.scheme = a.scheme == "balanced" ? PartitionScheme::balanced : PartitionScheme::uniform;
  const auto inst = construct_upper_bound_instance(p, a.n);
  write_instance(inst, a.out_dir);
  json summary = {{"out_dir", a.out_dir},
                  {"certified", inst.certified()},
                  {"vertices", inst.final_graph.order()},
                  {"edges", inst.final_graph.size()}};
  json failed = json::array();
  for (const auto& c : inst.checks)
    if (!c.passed) failed.push_back({{"name", c.name}, {"hard", c.hard}, {"detail", c.detail}});
  summary["failed_checks"] = failed;
  print(summary);
  return inst.certified() ? 0 : 1;
}

// ---- density -----------------------------------------------------------------

struct DensityArgs {
  std::string instance;
  std::size_t samples = 20;
  std::uint64_t seed = 1;
  std::optional<int> s;
  double fraction = 0.5;
};

int run_density(const DensityArgs& a) {
  const fs::path dir = a.instance;
  const LinearHypergraph h = load_hypergraph(dir / "hypergraph.txt");
  const Graph g_star = load_graph(dir / "gstar.txt");
  const SPartition partition = load_partition(dir / "partition.txt");
  const CliqueCover cover = clique_cover(h);
  const int s = a.s.value_or(partition.s);
  Rng rng(derive_seed(a.seed, 41));
  json samples = json::array();
  double alpha_star = 0, lambda_star = 0;
  bool any = false, all_hold = true;
  for (std::size_t i = 0; i < a.samples; ++i) {
    VertexSet X;
    for (Vertex x = 0; x < g_star.order(); ++x)
      if (rng.bernoulli(a.fraction)) X.push_back(x);
    if (X.empty()) continue;
    const auto dw = density_witness(g_star, cover, partition, X, s, false);
    const auto rep = check_uniform_density(dw.witness, X.size());
    all_hold = all_hold && rep.holds;
    if (dw.witness.e_count > 0) {
      alpha_star = any ? std::min(alpha_star, rep.alpha_star) : rep.alpha_star;
      lambda_star = std::max(lambda_star, rep.lambda_star);
      any = true;
    }
    samples.push_back({{"X_size", X.size()},
                       {"dominant_class", dw.profile.ell_dyadic},
                       {"class_size", dw.profile.ell_dyadic ? dw.profile.dyadic_classes.at(dw.profile.ell_dyadic).size() : 0},
                       {"evenly_partitioned", dw.profile.evenly_partitioned.size()},
                       {"e_count", dw.witness.e_count},
                       {"codegrees", dw.witness.codegrees},
                       {"report", to_json(rep)}});
  }
  print({{"instance", a.instance},
         {"s", s},
         {"seed", a.seed},
         {"samples", samples},
         {"fitted", any ? json{{"alpha", alpha_star}, {"lambda", lambda_star}} : json(nullptr)},
         {"default_params_hold", all_hold},
         {"label", kAsymptoticLabel}});
  return 0;
}

// ---- ramsey ------------------------------------------------------------------

struct RamseyArgs {
  std::string kind = "multicolor";
  std::string param;
  std::size_t nmax = 6;
  double budget_ms = 0;
  std::uint64_t budget_nodes = 0;
  std::string out;
};

int run_ramsey(const RamseyArgs& a) {
  const RamseyKind kind = a.kind == "local" ? RamseyKind::local : RamseyKind::multicolor;
  int param = 0, b = 3;
  {
    std::string text = a.param;
    std::replace(text.begin(), text.end(), ',', ' ');
    std::istringstream in(text);
    if (!(in >> param)) throw ParameterError("--param needs an integer");
    if (kind == RamseyKind::multicolor && !(in >> b)) throw ParameterError("multicolor --param is t,b");
  }
  SearchBudget budget;
  budget.max_nodes = a.budget_nodes;
  budget.max_seconds = a.budget_ms / 1000.0;
  const RamseyEntry e = ramsey_oracle(kind, param, b, a.nmax, budget);
  json steps = json::array();
  for (const auto& st : e.transcript)
    steps.push_back({{"n", st.n}, {"status", to_string(st.status)}, {"nodes", st.nodes}});
  json out = {{"kind", a.kind},
              {"param", param},
              {"b", b},
              {"value", e.value ? json(*e.value) : json(nullptr)},
              {"lower", e.lower},
              {"status", to_string(e.status)},
              {"inconclusive", e.inconclusive},
              {"digest", e.digest},
              {"transcript", steps}};
  if (e.witness && !a.out.empty()) {
    std::ostringstream text;
    write_coloring(text, *e.witness);
    save_text(a.out, text.str());
    out["witness_file"] = a.out;
  }
  print(out);
  return 0;
}

// ---- alpha / extract ---------------------------------------------------------

struct AlphaArgs {
  std::string graph;
  int s = 3;
  bool exact = false;
  bool count = false;
  std::size_t min_size = 0;
  std::uint64_t max_nodes = 0;
  std::string out;
};

int run_alpha(const AlphaArgs& a) {
  const Graph g = load_graph(a.graph);
  if (a.count) {
    print({{"graph", a.graph}, {"s", a.s}, {"min_size", a.min_size},
           {"count", count_free_subsets(g, a.s, a.min_size)}});
    return 0;
  }
  AlphaOptions o;
  o.max_nodes = a.max_nodes;
  const AlphaResult r = alpha_exact(g, a.s, o);
  if (!a.out.empty()) {
    std::ostringstream text;
    write_vertex_set(text, r.witness);
    save_text(a.out, text.str());
  }
  print({{"graph", a.graph}, {"s", a.s}, {"alpha", r.size}, {"optimal", r.optimal},
         {"upper", r.upper}, {"nodes", r.nodes}, {"witness", vertex_list(r.witness)}});
  return r.optimal ? 0 : 1;
}

struct ExtractArgs {
  std::string graph, coloring, method = "recursive", out = "extract.txt";
  int s = 5, t = 2;
  std::uint64_t seed = 1;
  double threshold_scale = 1.0;
  bool use_max_xi = false;
  bool no_extend = false;
};

int run_extract(const ExtractArgs& a) {
  const Graph g = load_graph(a.graph);
  ExtractOptions o;
  o.seed = a.seed;
  o.threshold_scale = a.threshold_scale;
  o.use_max_xi = a.use_max_xi;
  o.extend_to_maximal = !a.no_extend;
  ExtractResult r;
  if (a.method == "alteration") {
    r = alteration_free_subset(g, a.s, o);
  } else {
    const EdgeColoring c = load_coloring(a.coloring);
    r = a.method == "lay3" ? lay3_free_subset(g, c, a.s, o) : recursive_free_subset(g, c, a.s, a.t, o);
  }
  std::ostringstream text;
  write_vertex_set(text, r.set);
  save_text(a.out, text.str());
  // Validity is re-derived from the written set, not taken from the extractor.
  const bool valid = enumerate_cliques(g.induced(r.set), a.s).empty();
  print({{"method", a.method},
         {"branch", r.branch},
         {"size", r.set.size()},
         {"ks_free", valid},
         {"colors_spanned", r.colors_spanned ? json(*r.colors_spanned) : json(nullptr)},
         {"witness_file", a.out},
         {"log", r.log}});
  return valid ? 0 : 1;
}

// ---- bounds ------------------------------------------------------------------

struct ExponentArgs {
  int s = 5, t = 2, b = 3;
  bool upper = false, as_json = false, uncolored = false;
};

int run_exponents(const ExponentArgs& a) {
  if (a.uncolored) {
    const Rational v = uncolored_exponent(a.s, a.t);
    if (a.as_json)
      print({{"s", a.s}, {"t", a.t}, {"value", to_string(v)}, {"regime", "uncolored (comparison only)"}});
    else
      std::cout << to_string(v) << " uncolored (comparison only)\n";
    return 0;
  }
  const ExponentResult r = a.upper ? exponent_upper(a.s, a.b, a.t) : exponent_lower(a.s, a.t);
  if (a.as_json) {
    print(to_json(r));
    return 0;
  }
  std::cout << to_string(r.value) << " " << to_string(r.regime) << "\n";
  if (r.ell) std::cout << "ell " << *r.ell << "\n";
  for (const auto& st : r.trace) {
    std::cout << "a_" << st.t << " = " << to_string(st.value) << " (" << to_string(st.regime) << ")";
    if (!st.children.empty()) {
      std::cout << " from";
      for (int c : st.children) std::cout << " a_" << c;
    }
    std::cout << "\n";
  }
  for (auto [i, gi] : r.g_used) std::cout << "g(" << i << ") = " << gi << "\n";
  return 0;
}

EdgeColoring load_complete_coloring(const std::string& path, std::size_t k) {
  EdgeColoring c = load_coloring(path);
  c.require_covers(Graph::complete(k));
  return c;
}

int run_order(std::size_t k, const std::string& path, const std::string& start) {
  const EdgeColoring c = load_complete_coloring(path, k);
  const GTable g(RamseyTable::standard());
  const auto r = order_vertices(k, c, start == "identity" ? OrderStart::identity : OrderStart::greedy, &g);
  print({{"pi", vertex_list(r.pi)}, {"ell", r.ell}, {"n_pi", r.n_pi}, {"swaps", r.swaps},
         {"g_checked", r.g_checked}, {"meets_g", r.meets_g}});
  return r.n_pi == 0 && r.meets_g ? 0 : 1;
}

int run_halfseq(std::size_t k, const std::string& path) {
  const EdgeColoring c = load_complete_coloring(path, k);
  const VertexSet seq = half_sequence(k, c);
  const bool ok = oracle::half_sequence_ok(k, c, seq);
  print({{"sequence", vertex_list(seq)}, {"checker", ok}});
  return ok ? 0 : 1;
}

// ---- harness -----------------------------------------------------------------

int run_experiment_cmd(const std::string& config_path, const std::string& out_override) {
  json j;
  try {
    j = json::parse(load_text(config_path));
  } catch (const json::parse_error& e) {
    throw ParameterError(std::string("config is not valid JSON: ") + e.what());
  }
  ExperimentConfig c = config_from_json(j);
  if (!out_override.empty()) c.out_dir = out_override;
  const RunReport rep = run_experiment(c);
  write_report(rep, c.out_dir);
  json summary = {{"out_dir", c.out_dir}, {"rows", rep.rows.size()}, {"hard_failure", rep.hard_failure},
                  {"exponent_upper", rep.exponent_upper}, {"label", kAsymptoticLabel}};
  if (rep.fit)
    summary["fit"] = {{"slope", rep.fit->slope}, {"ci95", {rep.fit->ci_lo, rep.fit->ci_hi}}, {"r2", rep.fit->r2}};
  else
    summary["fit_error"] = rep.fit_error;
  print(summary);
  return rep.hard_failure ? 1 : 0;
}

int run_verify(const std::string& level, const std::string& corpus, const std::string& work,
               const std::string& instance, int b, const std::vector<int>& only) {
  VerifyOptions o;
  o.level = level == "full" ? VerifyLevel::full : VerifyLevel::fast;
  o.corpus_dir = corpus;
  o.work_dir = work;
  o.instance_b = b;
  if (!instance.empty()) o.instance = instance;
  std::vector<CriterionResult> results;
  if (!only.empty()) {
    for (int id : only) results.push_back(verify_criterion(id, o));
  } else {
    results = verify_suite(o).results;
  }
  bool ok = true;
  for (const auto& r : results) {
    std::cout << (r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << ": " << r.detail << "\n";
    ok = ok && r.passed;
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"erlab: multicolour Erdos-Rogers constructions, bounds and experiments"};
  app.require_subcommand(1);

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "build and certify an upper-bound instance");
  construct->add_option("--s", ca.p.s)->required();
  construct->add_option("--b", ca.p.b)->required();
  construct->add_option("--t", ca.p.t)->required();
  construct->add_option("--n", ca.n)->required();
  construct->add_option("--k", ca.p.k);
  construct->add_option("--R", ca.p.R);
  construct->add_option("--retention-p", ca.p.retention_p);
  construct->add_option("--seed", ca.p.seed);
  construct->add_option("--samples", ca.p.samples);
  construct->add_option("--threshold", ca.threshold);
  construct->add_option("--scheme", ca.scheme)->check(CLI::IsMember({"uniform", "balanced"}));
  construct->add_option("--out-dir", ca.out_dir);

  DensityArgs da;
  auto* density = app.add_subcommand("density", "sampled density witnesses of a stored instance");
  density->add_option("--instance", da.instance)->required();
  density->add_option("--samples", da.samples);
  density->add_option("--seed", da.seed);
  density->add_option("--s", da.s);
  density->add_option("--fraction", da.fraction, "probability of keeping each vertex in X");

  RamseyArgs ra;
  auto* ramsey = app.add_subcommand("ramsey", "exhaustive Ramsey or local-Ramsey sweep");
  ramsey->add_option("--kind", ra.kind)->check(CLI::IsMember({"multicolor", "local"}));
  ramsey->add_option("--param", ra.param, "t,b for multicolor; k for local")->required();
  ramsey->add_option("--nmax", ra.nmax);
  ramsey->add_option("--budget-ms", ra.budget_ms, "wall-clock cap per n (not reproducible)");
  ramsey->add_option("--budget-nodes", ra.budget_nodes);
  ramsey->add_option("--out", ra.out, "where to save the witness colouring");

  AlphaArgs aa;
  auto* alpha = app.add_subcommand("alpha", "s-independence number or K_s-free subset count");
  alpha->add_option("--graph", aa.graph)->required();
  alpha->add_option("--s", aa.s)->required();
  auto* exact_flag = alpha->add_flag("--exact", aa.exact);
  auto* count_flag = alpha->add_flag("--count", aa.count);
  exact_flag->excludes(count_flag);
  alpha->add_option("--min-size", aa.min_size);
  alpha->add_option("--max-nodes", aa.max_nodes);
  alpha->add_option("--out", aa.out, "witness file");

  ExtractArgs ea;
  auto* extract = app.add_subcommand("extract", "constructive K_s-free subset");
  extract->add_option("--graph", ea.graph)->required();
  extract->add_option("--coloring", ea.coloring);
  extract->add_option("--s", ea.s)->required();
  extract->add_option("--t", ea.t);
  extract->add_option("--method", ea.method)->check(CLI::IsMember({"recursive", "lay3", "alteration"}));
  extract->add_option("--seed", ea.seed);
  extract->add_option("--threshold-scale", ea.threshold_scale);
  extract->add_flag("--use-max-xi", ea.use_max_xi);
  extract->add_flag("--no-extend", ea.no_extend);
  extract->add_option("--out", ea.out);

  ExponentArgs xa;
  auto* exponents = app.add_subcommand("exponents", "exact lower or upper exponents");
  exponents->add_option("--s", xa.s)->required();
  exponents->add_option("--t", xa.t)->required();
  exponents->add_flag("--upper", xa.upper);
  exponents->add_option("--b", xa.b);
  exponents->add_flag("--json", xa.as_json);
  exponents->add_flag("--uncolored", xa.uncolored, "uncoloured recursion, for comparison only");

  std::size_t ok_k = 0;
  std::string ok_coloring, ok_start = "greedy";
  auto* order = app.add_subcommand("order", "vertex ordering with non-decreasing colour profile");
  order->add_option("--k", ok_k)->required();
  order->add_option("--coloring", ok_coloring)->required();
  order->add_option("--start", ok_start)->check(CLI::IsMember({"greedy", "identity"}));

  std::size_t hs_k = 0;
  std::string hs_coloring;
  auto* halfseq = app.add_subcommand("halfseq", "half-length sequence with two colours back");
  halfseq->add_option("--k", hs_k)->required();
  halfseq->add_option("--coloring", hs_coloring)->required();

  std::string ex_config, ex_out;
  auto* experiment = app.add_subcommand("experiment", "run an experiment grid and write reports");
  experiment->add_option("--config", ex_config)->required();
  experiment->add_option("--out-dir", ex_out, "overrides out_dir from the config");

  std::string v_level = "fast", v_corpus = ERLAB_DEFAULT_CORPUS, v_work = "verify-work", v_instance;
  int v_b = 3;
  std::vector<int> v_only;
  auto* verify = app.add_subcommand("verify", "numbered acceptance checks");
  verify->add_option("--level", v_level)->check(CLI::IsMember({"fast", "full"}));
  verify->add_option("--corpus", v_corpus);
  verify->add_option("--work-dir", v_work);
  verify->add_option("--instance", v_instance, "also replay a stored instance directory");
  verify->add_option("--b", v_b);
  verify->add_option("--only", v_only, "run just these check numbers");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*construct) return run_construct(ca);
    if (*density) return run_density(da);
    if (*ramsey) return run_ramsey(ra);
    if (*alpha) return run_alpha(aa);
    if (*extract) return run_extract(ea);
    if (*exponents) return run_exponents(xa);
    if (*order) return run_order(ok_k, ok_coloring, ok_start);
    if (*halfseq) return run_halfseq(hs_k, hs_coloring);
    if (*experiment) return run_experiment_cmd(ex_config, ex_out);
    if (*verify) return run_verify(v_level, v_corpus, v_work, v_instance, v_b, v_only);
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\nwitness:";
    for (auto v : e.witness()) std::cerr << ' ' << v;
    std::cerr << "\n";
    return 4;
  } catch (const UnresolvedRamsey& e) {
    std::cerr << e.what() << "\n";
    return 5;
  } catch (const ParameterError& e) {
    std::cerr << "bad parameters: " << e.what() << "\n";
    return 2;
  } catch (const StructuralError& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
