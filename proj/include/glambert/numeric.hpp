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

#pragma once

#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "glambert/equations.hpp"
#include "glambert/error.hpp"
#include "glambert/lagrange.hpp"

namespace glambert {

/// Residual |r(x)| could not be pushed below the requested tolerance even
/// though the bracket collapsed to adjacent doubles.
class ToleranceNotMet : public Error {
 public:
  using Error::Error;
};

struct RootProblem {
  Equation equation;
  double lo = -1.0;
  double hi = 1.0;
};

/// Newton's method on the analytic derivative, safeguarded by bisection
/// whenever [lo, hi] brackets a sign change. The returned root always has
/// |residual| <= tol.
double newton_solve(const RootProblem& p, double x0, double tol);

using Bracket = std::pair<double, double>;

/// Sign-change subintervals of a uniform grid with `steps` cells. A grid
/// point where the residual is exactly zero closes the bracket to its left.
std::vector<Bracket> bracket_scan(const RootProblem& p, int steps);

enum class RadiusMethod { Auto, Ratio, DombSykes };
enum class Confidence { Stable, Noisy };

std::string method_name(RadiusMethod m);
std::string confidence_name(Confidence c);

struct RadiusEstimate {
  double estimate = std::numeric_limits<double>::infinity();
  RadiusMethod method = RadiusMethod::Ratio;
  int nUsed = 0;
  Confidence confidence = Confidence::Stable;
};

/**
 * Radius of convergence from the tail of c_1..c_N (coeffs[n-1] = c_n).
 *
 * Ratios are formed between consecutive nonzero coefficients,
 * (|c_m| / |c_k|)^{1/(m-k)}, so series with a vanishing parity class work.
 * Ratio: 1 / max over the last half of the ratios.
 * DombSykes: least-squares line of ratio against 1/n over the last half,
 * radius = 1 / intercept (infinite when the intercept is not positive).
 * Auto picks DombSykes when the tail ratios vary by at most 20%, Ratio
 * otherwise. Needs at least 10 nonzero coefficients.
 */
RadiusEstimate radius_estimate(std::span<const double> coeffs, RadiusMethod method = RadiusMethod::Auto);
RadiusEstimate radius_estimate(const SeriesSolution& sol, RadiusMethod method = RadiusMethod::Auto);

/// Wynn epsilon extrapolation of a sequence of partial sums; returns the
/// latest entry of the deepest even column reached.
double wynn_epsilon(std::span<const double> partial_sums);

/// Principal branch W_0 via Halley iteration. Throws OutOfBranch for z < -1/e.
double lambert_w_principal(double z);

}  // namespace glambert
