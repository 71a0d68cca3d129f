#include "dirac/cli.hpp"
#include "dirac/clifford.hpp"
#include "dirac/dispersion.hpp"
#include "dirac/io.hpp"
#include "dirac/report.hpp"
#include "dirac/spectrum.hpp"

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace dirac;

namespace {

MomentumSample sample_of(const std::array<double, 3>& p, double m) { return {p, m}; }

std::vector<std::vector<std::pair<std::string, std::string>>> entries(const ExactMatrix& x) {
  std::vector<std::vector<std::pair<std::string, std::string>>> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) out[i].emplace_back(to_string(x(i, j).re()), to_string(x(i, j).im()));
  return out;
}

py::dict solve(std::size_t n, std::size_t r) {
  const SolveResult res = solve_forced_coefficients({n, r});
  py::dict out;
  if (const auto* sol = std::get_if<ForcedCoefficientSolution>(&res)) {
    out["feasible"] = true;
    py::dict assignments;
    for (const auto& [k, form] : sol->assignments) assignments[py::int_(k)] = form.to_string();
    out["assignments"] = assignments;
    out["free"] = std::vector<std::size_t>(sol->free.begin(), sol->free.end());
    out["lines"] = sol->render();
    if (sol->complete() && n % 2 == 0) {
      try {
        out["factorization"] = factorized_spectrum(*sol);
      } catch (const FactorizationError&) {
        out["factorization"] = py::none();
      }
    }
  } else {
    const auto& cert = std::get<InfeasibilityCertificate>(res);
    out["feasible"] = false;
    out["kind"] = cert.kind == InfeasibilityCertificate::Kind::contradiction ? "contradiction" : "non_polynomial";
    out["witness"] = cert.witness.to_string();
    out["sources"] = cert.sources;
    out["narrative"] = cert.narrative;
    out["lines"] = cert.render();
  }
  return out;
}

py::dict dispersion(const MatrixSet& set, std::size_t r, bool massless) {
  const DispersionReport rep = check_dispersion(set, r, massless ? MassMode::massless : MassMode::massive);
  py::dict out;
  out["pass"] = rep.pass;
  out["char_poly"] = rep.char_poly.to_string();
  py::dict residuals;
  for (const auto& res : rep.residuals) residuals[py::str(res.name)] = res.value.to_string();
  out["residuals"] = residuals;
  return out;
}

py::dict anticommutation(const MatrixSet& set) {
  const CliffordReport rep = check_anticommutation(set);
  py::dict out;
  out["pass"] = rep.pass;
  out["failures"] = rep.failures();
  return out;
}

py::tuple run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact and numeric audits of Dirac matrix sets";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<CanonicalizationError>(m, "CanonicalizationError", PyExc_ValueError);
  py::register_exception<SpinorError>(m, "SpinorError", PyExc_RuntimeError);

  py::class_<MatrixSet>(m, "MatrixSet")
      .def_static("from_json", [](const std::string& text) { return parse_matrix_text(text); }, py::arg("text"))
      .def_static("load", [](const std::string& path) { return parse_matrix_file(path); }, py::arg("path"))
      .def_property_readonly("dimension", &MatrixSet::dimension)
      .def_property_readonly("label", &MatrixSet::label)
      .def("matrix", [](const MatrixSet& s, std::size_t k) { return entries(s.matrix(k)); }, py::arg("index"),
           "Entries of alpha1, alpha2, alpha3 or beta (index 0..3) as (re, im) rational strings.")
      .def("numeric", [](const MatrixSet& s, std::size_t k) { return to_numeric(s.matrix(k)); }, py::arg("index"))
      .def("to_json", &serialize_matrix_set)
      .def("__eq__", [](const MatrixSet& a, const MatrixSet& b) { return a == b; })
      .def("__repr__", [](const MatrixSet& s) {
        return "<MatrixSet " + (s.label().empty() ? std::string("(unlabelled)") : s.label()) +
               " n=" + std::to_string(s.dimension()) + ">";
      });

  m.def("catalog", &catalog, py::arg("name"));
  m.def("catalog_names", &catalog_names);
  m.def("solve", &solve, py::arg("n"), py::arg("multiplicity"));
  m.def("check_dispersion", &dispersion, py::arg("set"), py::arg("multiplicity") = 2, py::arg("massless") = false);
  m.def("check_anticommutation", &anticommutation, py::arg("set"));
  m.def("check_trace_det", [](const MatrixSet& s) { return check_trace_det(s).pass; }, py::arg("set"));
  m.def("char_poly", [](const MatrixSet& s) { return char_poly(build_hamiltonian(s)).poly().to_string(); },
        py::arg("set"));
  m.def("verify_report", [](const MatrixSet& s, std::size_t r) { return verify_report(s, r).render(); },
        py::arg("set"), py::arg("multiplicity") = 2);
  m.def("derive_report", [](const MatrixSet& s) { return derive_report(s).render(); }, py::arg("set"));
  m.def("eigenvalues",
        [](const MatrixSet& s, const std::array<double, 3>& p, double mass) {
          return eigensolve(s, sample_of(p, mass)).eigenvalues;
        },
        py::arg("set"), py::arg("p"), py::arg("m"));
  m.def("positive_energy_spinors",
        [](const MatrixSet& s, const std::array<double, 3>& p, double mass) {
          return positive_energy_spinors(s, sample_of(p, mass)).vectors;
        },
        py::arg("set"), py::arg("p"), py::arg("m"));
  m.def("spectrum_csv",
        [](const MatrixSet& s, double mass, const std::string& grid) {
          return render_csv(sweep(s, parse_grid(grid, mass)).rows, s.dimension());
        },
        py::arg("set"), py::arg("m"), py::arg("grid"));
  m.def("run_cli", &run, py::arg("args"), "Runs one command line; returns (exit code, stdout, stderr).");
}
