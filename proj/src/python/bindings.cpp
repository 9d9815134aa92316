// Thin layer: structured results cross the boundary as JSON text and are
// decoded on the Python side, so rationals stay exact ("p/q" strings).
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "erlab/alpha.hpp"
#include "erlab/bounds.hpp"
#include "erlab/constructor.hpp"
#include "erlab/errors.hpp"
#include "erlab/graph.hpp"
#include "erlab/harness.hpp"
#include "erlab/io.hpp"

namespace py = pybind11;
using namespace erlab;

namespace {

Graph graph_from(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  std::vector<Edge> e;
  e.reserve(edges.size());
  for (const auto& [u, v] : edges) e.push_back({u, v});
  return Graph(n, e);
}

std::string construct(int s, int b, int t, std::size_t n, std::size_t k, std::optional<int> R,
                      double retention_p, std::uint64_t seed,
                      std::optional<std::filesystem::path> out_dir) {
  ConstructionParams p;
  p.s = s, p.b = b, p.t = t, p.k = k, p.R = R, p.retention_p = retention_p, p.seed = seed;
  const auto inst = construct_upper_bound_instance(p, n);
  if (out_dir) write_instance(inst, *out_dir);
  return certificate_json(inst).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "native core of erlab";

  py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_RuntimeError);
  py::register_exception<UnresolvedRamsey>(m, "UnresolvedRamsey", PyExc_RuntimeError);
  py::register_exception<StructuralError>(m, "StructuralError", PyExc_RuntimeError);

  m.def("exponent_lower", [](int s, int t) { return to_json(exponent_lower(s, t)).dump(); },
        py::arg("s"), py::arg("t"));
  m.def("exponent_upper", [](int s, int b, int t) { return to_json(exponent_upper(s, b, t)).dump(); },
        py::arg("s"), py::arg("b"), py::arg("t"));
  m.def("uncolored_exponent", [](int s, int t) { return to_string(uncolored_exponent(s, t)); },
        py::arg("s"), py::arg("t"));

  m.def("alpha_exact",
        [](std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges, int s, std::uint64_t max_nodes) {
          AlphaOptions o;
          o.max_nodes = max_nodes;
          const auto r = alpha_exact(graph_from(n, edges), s, o);
          return py::make_tuple(r.size, r.witness, r.optimal, r.upper);
        },
        py::arg("n"), py::arg("edges"), py::arg("s"), py::arg("max_nodes") = 0,
        "(size, witness, optimal, upper) for the largest K_s-free vertex set");
  m.def("count_free_subsets",
        [](std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges, int s, std::size_t min_size) {
          return count_free_subsets(graph_from(n, edges), s, min_size);
        },
        py::arg("n"), py::arg("edges"), py::arg("s"), py::arg("min_size") = 0);

  m.def("construct", &construct, py::arg("s"), py::arg("b"), py::arg("t"), py::arg("n"),
        py::arg("k") = 1, py::arg("R") = py::none(), py::arg("retention_p") = 1.0, py::arg("seed") = 1,
        py::arg("out_dir") = py::none(), "certificate JSON of one upper-bound instance");
  m.def("replay_instance",
        [](const std::filesystem::path& dir, int b) -> std::optional<std::string> {
          if (auto bad = replay_instance(dir, b)) return bad->name + ": " + bad->detail;
          return std::nullopt;
        },
        py::arg("dir"), py::arg("b") = 3);

  m.def("run_experiment",
        [](const std::string& config_json, bool write) {
          const auto c = config_from_json(nlohmann::json::parse(config_json));
          RunReport rep;
          {
            py::gil_scoped_release nogil;
            rep = run_experiment(c);
            if (write) write_report(rep, c.out_dir);
          }
          return to_json(rep).dump();
        },
        py::arg("config_json"), py::arg("write") = false);
  m.def("fit_exponent",
        [](const std::vector<std::pair<double, double>>& rows) {
          const auto f = fit_exponent(rows);
          return py::dict(py::arg("slope") = f.slope, py::arg("intercept") = f.intercept,
                          py::arg("r2") = f.r2, py::arg("ci95") = py::make_tuple(f.ci_lo, f.ci_hi));
        },
        py::arg("rows"));

  m.def("verify",
        [](const std::string& level, const std::filesystem::path& corpus, const std::filesystem::path& work) {
          VerifyOptions o;
          if (level == "fast") o.level = VerifyLevel::fast;
          else if (level == "full") o.level = VerifyLevel::full;
          else throw ParameterError("level must be fast or full");
          o.corpus_dir = corpus;
          o.work_dir = work;
          VerifyReport rep;
          {
            py::gil_scoped_release nogil;
            rep = verify_suite(o);
          }
          py::list out;
          for (const auto& r : rep.results) out.append(py::make_tuple(r.id, r.name, r.passed, r.detail));
          return out;
        },
        py::arg("level"), py::arg("corpus_dir"), py::arg("work_dir"));

  m.attr("ASYMPTOTIC_LABEL") = kAsymptoticLabel;
}
