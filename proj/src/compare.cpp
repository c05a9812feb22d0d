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

#include "glambert/compare.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace glambert {

double oracle_root(const Equation& eq, double x0) {
  const double f0 = eq.residual(x0);
  const double tol = std::max(1e-13, 64 * std::numeric_limits<double>::epsilon() * eq.magnitude(x0));
  if (std::fabs(f0) <= tol) return x0;
  const double reach = 10.0 * std::max(1.0, std::fabs(x0));
  for (double delta = 1e-8 * std::max(1.0, std::fabs(x0)); delta <= reach; delta *= 2.0) {
    double lo = x0 - delta;
    double hi = x0 + delta;
    // x^2 e^{-2/x} blows up just left of zero; stay on the side of x0.
    if (eq.kind == EquationKind::BesselRecip && x0 > 0 && lo <= 0) lo = 0.5 * x0;
    if (eq.kind == EquationKind::BesselRecip && x0 < 0 && hi >= 0) hi = 0.5 * x0;
    const double flo = eq.residual(lo);
    const double fhi = eq.residual(hi);
    if (std::isfinite(flo) && std::isfinite(fhi) && std::signbit(flo) != std::signbit(fhi)) {
      return newton_solve(RootProblem{eq, lo, hi}, x0, tol);
    }
  }
  throw NoRootInInterval("no sign change of the residual within " + std::to_string(reach) + " of " +
                         std::to_string(x0));
}

ComparisonRecord compare_report(const Equation& eq, const SolveOptions& opts) {
  SolveOptions plain = opts;
  plain.paperAsPrinted = false;
  ComparisonRecord rec;
  rec.report = solve(eq, plain);
  rec.seriesRoot = rec.report.root;

  const double x0 = std::isfinite(rec.report.root) ? rec.report.root : eq.base();
  try {
    rec.newtonRoot = oracle_root(eq, x0);
    rec.difference = std::fabs(rec.seriesRoot - rec.newtonRoot);
  } catch (const Error& e) {
    rec.newtonRoot = std::numeric_limits<double>::quiet_NaN();
    rec.difference = std::numeric_limits<double>::quiet_NaN();
    rec.report.warnings.push_back(std::string("oracle: ") + e.what());
  }

  if (opts.accelerate && rec.report.partialSums.size() >= 5) {
    rec.acceleratedRoot = wynn_epsilon(rec.report.partialSums);
  }

  try {
    SolveOptions coeff_opts = plain;
    if (rec.report.branch == Branch::BaseB) coeff_opts.branch = Branch::BaseB;
    rec.radius = radius_estimate(series_coefficients(eq, opts.maxTerms, coeff_opts));
  } catch (const InsufficientTerms&) {
    rec.radius.reset();
  }

  const bool has_printed_variant = eq.kind == EquationKind::RatioExp || eq.kind == EquationKind::Gauss ||
                                   eq.kind == EquationKind::DoubleExp;
  if (opts.paperAsPrinted && has_printed_variant) {
    SolveOptions printed = plain;
    printed.paperAsPrinted = true;
    printed.accelerate = false;
    rec.paperAsPrintedRoot = solve(eq, printed).root;
  }
  return rec;
}

}  // namespace glambert
