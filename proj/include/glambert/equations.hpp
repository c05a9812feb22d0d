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

#include <string>
#include <utility>
#include <vector>

namespace glambert {

/// The six equation families the solvers handle.
enum class EquationKind { QuadExp, RatioExp, Gauss, DoubleExp, BesselRecip, PlainExp };

std::string kind_name(EquationKind k);
/// Inverse of kind_name; throws ContractViolation on an unknown name.
EquationKind kind_from_name(const std::string& name);

/// (x - a)(x - b) = l e^x
struct QuadExpParams {
  double a = 0.0;
  double b = 0.0;
  double l = 0.0;
};

/// (x - s)/(x - t) = l e^x
struct RatioExpParams {
  double s = 0.0;
  double t = 0.0;
  double l = 0.0;
};

/// x = a + l f(x) for the single-shift families.
struct ScalarShiftParams {
  double a = 0.0;
  double l = 0.0;
};

/**
 * Residual of an equation in the form whose zero is the root, together with
 * its analytic derivative:
 *
 *   QuadExp      (x-a)(x-b) - l e^x
 *   RatioExp     x - s - l e^x (x-t)
 *   Gauss        x - a - l e^{-x^2/2}
 *   DoubleExp    x - a - l e^{e^x}
 *   BesselRecip  x - a - l x^2 e^{-2/x}
 *   PlainExp     x - a - l e^x
 */
struct Equation {
  EquationKind kind = EquationKind::PlainExp;
  double a = 0.0;
  double b = 0.0;
  double s = 0.0;
  double t = 0.0;
  double l = 0.0;

  static Equation quadexp(const QuadExpParams& p) { return {EquationKind::QuadExp, p.a, p.b, 0, 0, p.l}; }
  static Equation ratioexp(const RatioExpParams& p) { return {EquationKind::RatioExp, 0, 0, p.s, p.t, p.l}; }
  static Equation shift(EquationKind k, const ScalarShiftParams& p) { return {k, p.a, 0, 0, 0, p.l}; }

  double residual(double x) const;
  double derivative(double x) const;
  /// Sum of the absolute values of the residual's parts; sets the scale of
  /// the rounding error in residual(x).
  double magnitude(double x) const;
  /// Point the series branch starts from at l = 0.
  double base() const;
  /// Named parameters in a fixed order, for reports.
  std::vector<std::pair<std::string, double>> params() const;
};

}  // namespace glambert
