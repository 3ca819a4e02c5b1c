#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <utility>
#include <vector>

#include "frackansa/bench.hpp"
#include "frackansa/quadrature.hpp"
#include "frackansa/special.hpp"

namespace py = pybind11;
using namespace frackansa;

namespace {

py::dict report_dict(const ErrorReport& r) {
  py::dict d;
  d["spacing"] = r.spacing;
  d["n_nodes"] = r.n_nodes;
  d["mae"] = r.mae;
  d["max_rel_err"] = r.max_rel_err;
  d["rate"] = r.rate;
  d["wall_ms"] = r.wall_ms;
  return d;
}

py::dict result_dict(const CaseResult& res) {
  Eigen::MatrixXd nodes(static_cast<Eigen::Index>(res.nodes.size()), 2);
  for (std::size_t k = 0; k < res.nodes.size(); ++k) {
    nodes(static_cast<Eigen::Index>(k), 0) = res.nodes.node(k).x;
    nodes(static_cast<Eigen::Index>(k), 1) = res.nodes.node(k).y;
  }
  py::list times, fields;
  for (const FieldSnapshot& snap : res.snapshots) {
    times.append(snap.t);
    fields.append(Eigen::VectorXd(snap.values));
  }
  py::dict d;
  d["nodes"] = nodes;
  d["n_interior"] = res.nodes.interior.size();
  d["times"] = times;
  d["fields"] = fields;
  d["has_exact"] = res.has_exact;
  d["mae"] = res.report.mae;
  d["max_rel_err"] = res.report.max_rel_err;
  d["wall_ms"] = res.report.wall_ms;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "meshless solver for spatiotemporal fractional diffusion problems";

  m.def("mittag_leffler",
        static_cast<double (*)(double, double)>(&mittag_leffler),
        py::arg("alpha"), py::arg("x"),
        "One-parameter Mittag-Leffler function for real arguments.");
  m.def("mittag_leffler",
        static_cast<std::complex<double> (*)(double, std::complex<double>)>(
            &mittag_leffler),
        py::arg("alpha"), py::arg("z"),
        "One-parameter Mittag-Leffler function for complex arguments.");

  m.def(
      "gauss_jacobi",
      [](int n, double a, double b) {
        const QuadratureRule rule = gauss_jacobi(n, a, b);
        return std::make_pair(rule.nodes, rule.weights);
      },
      py::arg("n"), py::arg("a"), py::arg("b"),
      "Nodes and weights for the weight (1-x)^a (1+x)^b on [-1, 1].");

  m.def(
      "list_cases",
      [] {
        std::vector<std::pair<std::string, std::string>> out;
        for (const CaseInfo& c : list_cases()) out.emplace_back(c.id, c.description);
        return out;
      },
      "Available benchmark cases as (id, description) pairs.");

  py::class_<RunConfig>(m, "RunConfig",
                        "Run parameters; NaN / -1 / empty fall back to the "
                        "case defaults.")
      .def(py::init<>())
      .def_readwrite("case_id", &RunConfig::case_id)
      .def_readwrite("alpha", &RunConfig::alpha)
      .def_readwrite("beta", &RunConfig::beta)
      .def_readwrite("beta_x", &RunConfig::beta_x)
      .def_readwrite("beta_y", &RunConfig::beta_y)
      .def_readwrite("shape_c", &RunConfig::shape_c)
      .def_readwrite("spacing", &RunConfig::spacing)
      .def_readwrite("omega", &RunConfig::omega)
      .def_readwrite("velocity", &RunConfig::velocity)
      .def_readwrite("diffusion", &RunConfig::diffusion)
      .def_readwrite("diffusion2", &RunConfig::diffusion2)
      .def_readwrite("node_count", &RunConfig::node_count)
      .def_readwrite("quad_points", &RunConfig::quad_points)
      .def_readwrite("angular_points", &RunConfig::angular_points)
      .def_readwrite("node_mode", &RunConfig::node_mode)
      .def_readwrite("times", &RunConfig::times)
      .def_readwrite("seed", &RunConfig::seed)
      .def_readwrite("seed_set", &RunConfig::seed_set)
      .def_readwrite("out_dir", &RunConfig::out_dir)
      .def_readwrite("large", &RunConfig::large);

  m.def(
      "run_case", [](const RunConfig& cfg) { return result_dict(run_case(cfg)); },
      py::arg("config"),
      "Solve one case; returns nodes, per-time fields, and error metrics.");

  m.def(
      "convergence_study",
      [](const std::string& case_id, const std::vector<double>& spacings,
         const RunConfig& base) {
        py::list rows;
        for (const ErrorReport& r : convergence_study(case_id, spacings, base))
          rows.append(report_dict(r));
        return rows;
      },
      py::arg("case_id"), py::arg("spacings"), py::arg("base") = RunConfig{},
      "Refinement study; one row per spacing with the error-ratio column.");
}
