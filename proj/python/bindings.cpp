// Copyright 2026 The glambert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "glambert/cli.hpp"
#include "glambert/compare.hpp"
#include "glambert/identity_lab.hpp"
#include "glambert/numeric.hpp"
#include "glambert/orthopoly.hpp"
#include "glambert/report.hpp"
#include "glambert/solvers.hpp"

namespace py = pybind11;
using namespace glambert;

namespace {

Equation make_equation(const std::string& family, double a, double b, double s, double t, double l) {
  Equation eq;
  eq.kind = kind_from_name(family);
  eq.a = a;
  eq.b = b;
  eq.s = s;
  eq.t = t;
  eq.l = l;
  return eq;
}

SolveOptions make_options(int max_terms, double tol, bool accelerate, const std::string& branch,
                          bool paper_as_printed) {
  SolveOptions o;
  o.maxTerms = max_terms;
  o.tol = tol;
  o.accelerate = accelerate;
  o.paperAsPrinted = paper_as_printed;
  if (branch == "baseA") {
    o.branch = Branch::BaseA;
  } else if (branch == "baseB") {
    o.branch = Branch::BaseB;
  } else if (branch != "auto") {
    throw ContractViolation("branch must be auto, baseA or baseB");
  }
  return o;
}

std::vector<std::string> rat_strings(const RatPoly& p) {
  std::vector<std::string> out;
  for (const auto& c : p.coeffs()) out.push_back(c.get_str());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Series solvers for generalized Lambert-W equations";

  py::register_exception<Error>(m, "GlambertError", PyExc_RuntimeError);
  py::register_exception<DegenerateParams>(m, "DegenerateParams", PyExc_ValueError);
  py::register_exception<PoleAtBase>(m, "PoleAtBase", PyExc_ValueError);
  py::register_exception<ContractViolation>(m, "ContractViolation", PyExc_ValueError);
  py::register_exception<OutOfBranch>(m, "OutOfBranch", PyExc_ValueError);
  py::register_exception<InsufficientTerms>(m, "InsufficientTerms", PyExc_ValueError);

  py::class_<SolveReport>(m, "SolveReport")
      .def_readonly("family", &SolveReport::family)
      .def_readonly("params", &SolveReport::params)
      .def_readonly("root", &SolveReport::root)
      .def_readonly("terms_used", &SolveReport::termsUsed)
      .def_readonly("residual", &SolveReport::residual)
      .def_readonly("converged", &SolveReport::converged)
      .def_property_readonly("branch", [](const SolveReport& r) { return branch_name(r.branch); })
      .def_readonly("accelerated", &SolveReport::accelerated)
      .def_readonly("warnings", &SolveReport::warnings)
      .def_readonly("partial_sums", &SolveReport::partialSums)
      .def("to_json", [](const SolveReport& r) { return dump(to_json(r)); })
      .def("__repr__", [](const SolveReport& r) {
        std::ostringstream os;
        os << "<SolveReport " << r.family << " root=" << format_number(r.root) << " converged=" << r.converged
           << ">";
        return os.str();
      });

  m.def(
      "solve",
      [](const std::string& family, double a, double b, double s, double t, double l, int max_terms, double tol,
         bool accelerate, const std::string& branch, bool paper_as_printed) {
        return solve(make_equation(family, a, b, s, t, l),
                     make_options(max_terms, tol, accelerate, branch, paper_as_printed));
      },
      py::arg("family"), py::kw_only(), py::arg("a") = 0.0, py::arg("b") = 0.0, py::arg("s") = 0.0,
      py::arg("t") = 0.0, py::arg("l") = 0.0, py::arg("max_terms") = kDefaultOrder, py::arg("tol") = 1e-12,
      py::arg("accelerate") = false, py::arg("branch") = "auto", py::arg("paper_as_printed") = false,
      "Sums the root series of one equation family and returns a SolveReport.");

  m.def(
      "compare",
      [](const std::string& family, double a, double b, double s, double t, double l, bool accelerate,
         bool paper_as_printed) {
        return dump(to_json(compare_report(make_equation(family, a, b, s, t, l),
                                           make_options(kDefaultOrder, 1e-12, accelerate, "auto", paper_as_printed))));
      },
      py::arg("family"), py::kw_only(), py::arg("a") = 0.0, py::arg("b") = 0.0, py::arg("s") = 0.0,
      py::arg("t") = 0.0, py::arg("l") = 0.0, py::arg("accelerate") = false, py::arg("paper_as_printed") = false,
      "Series root against the Newton oracle, as a JSON document.");

  m.def(
      "series_coefficients",
      [](const std::string& family, double a, double b, double s, double t, int order) {
        return series_coefficients(make_equation(family, a, b, s, t, 1.0), order);
      },
      py::arg("family"), py::kw_only(), py::arg("a") = 0.0, py::arg("b") = 0.0, py::arg("s") = 0.0,
      py::arg("t") = 0.0, py::arg("order") = kDefaultOrder);

  m.def(
      "radius_estimate",
      [](const std::vector<double>& coeffs, const std::string& method) {
        RadiusMethod m = RadiusMethod::Auto;
        if (method == "ratio") m = RadiusMethod::Ratio;
        if (method == "dombSykes") m = RadiusMethod::DombSykes;
        const RadiusEstimate r = radius_estimate(coeffs, m);
        py::dict d;
        d["estimate"] = r.estimate;
        d["method"] = method_name(r.method);
        d["nUsed"] = r.nUsed;
        d["confidence"] = confidence_name(r.confidence);
        return d;
      },
      py::arg("coeffs"), py::arg("method") = "auto");

  m.def("wynn_epsilon", [](const std::vector<double>& sums) { return wynn_epsilon(sums); }, py::arg("partial_sums"));
  m.def("lambert_w", &lambert_w_principal, py::arg("z"), "Principal branch W0.");

  m.def(
      "bessel_poly", [](int n) { return rat_strings(bessel_poly(n)); }, py::arg("n"),
      "Coefficients of B_n, lowest power first, as exact rational strings.");
  m.def(
      "novel_bessel_rep",
      [](int n) {
        const ExpLaurent rep = novel_bessel_rep(n);
        std::vector<std::pair<int, std::string>> terms;
        for (const auto& [k, c] : rep.terms()) terms.emplace_back(k, c.get_str());
        return terms;
      },
      py::arg("n"), "(power of x, coefficient) pairs of the Laurent form.");
  m.def("novel_rep_matches_bessel", &novel_rep_matches_bessel, py::arg("n"));

  m.def("errata_report", []() { return dump(to_json(errata_report())); });
  m.def(
      "identity_suite",
      [](int max_n) {
        std::vector<std::tuple<std::string, int, bool>> out;
        for (const auto& c : run_identity_suite(max_n)) out.emplace_back(c.name, c.n, c.passed);
        return out;
      },
      py::arg("max_n") = 10);

  m.def(
      "run_command",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run_command(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command-line interface in-process: (exit code, stdout, stderr).");
}
