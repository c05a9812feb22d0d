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

#include "glambert/equations.hpp"

#include <cmath>

#include "glambert/error.hpp"

namespace glambert {

std::string kind_name(EquationKind k) {
  switch (k) {
    case EquationKind::QuadExp:
      return "quadexp";
    case EquationKind::RatioExp:
      return "ratioexp";
    case EquationKind::Gauss:
      return "gauss";
    case EquationKind::DoubleExp:
      return "doubleexp";
    case EquationKind::BesselRecip:
      return "besselrecip";
    case EquationKind::PlainExp:
      return "plainexp";
  }
  return "unknown";
}

EquationKind kind_from_name(const std::string& name) {
  for (auto k : {EquationKind::QuadExp, EquationKind::RatioExp, EquationKind::Gauss, EquationKind::DoubleExp,
                 EquationKind::BesselRecip, EquationKind::PlainExp}) {
    if (kind_name(k) == name) return k;
  }
  throw ContractViolation("unknown equation family '" + name + "'");
}

double Equation::residual(double x) const {
  switch (kind) {
    case EquationKind::QuadExp:
      return (x - a) * (x - b) - l * std::exp(x);
    case EquationKind::RatioExp:
      return x - s - l * std::exp(x) * (x - t);
    case EquationKind::Gauss:
      return x - a - l * std::exp(-x * x / 2);
    case EquationKind::DoubleExp:
      return x - a - l * std::exp(std::exp(x));
    case EquationKind::BesselRecip:
      return x - a - l * x * x * std::exp(-2 / x);
    case EquationKind::PlainExp:
      return x - a - l * std::exp(x);
  }
  return 0.0;
}

double Equation::derivative(double x) const {
  switch (kind) {
    case EquationKind::QuadExp:
      return 2 * x - a - b - l * std::exp(x);
    case EquationKind::RatioExp:
      return 1 - l * std::exp(x) * (x - t + 1);
    case EquationKind::Gauss:
      return 1 + l * x * std::exp(-x * x / 2);
    case EquationKind::DoubleExp:
      return 1 - l * std::exp(x + std::exp(x));
    case EquationKind::BesselRecip:
      return 1 - l * (2 * x + 2) * std::exp(-2 / x);
    case EquationKind::PlainExp:
      return 1 - l * std::exp(x);
  }
  return 0.0;
}

double Equation::magnitude(double x) const {
  switch (kind) {
    case EquationKind::QuadExp:
      return std::fabs((x - a) * (x - b)) + std::fabs(l * std::exp(x));
    case EquationKind::RatioExp:
      return std::fabs(x) + std::fabs(s) + std::fabs(l * std::exp(x) * (x - t));
    case EquationKind::Gauss:
      return std::fabs(x) + std::fabs(a) + std::fabs(l * std::exp(-x * x / 2));
    case EquationKind::DoubleExp:
      return std::fabs(x) + std::fabs(a) + std::fabs(l * std::exp(std::exp(x)));
    case EquationKind::BesselRecip:
      return std::fabs(x) + std::fabs(a) + std::fabs(l * x * x * std::exp(-2 / x));
    case EquationKind::PlainExp:
      return std::fabs(x) + std::fabs(a) + std::fabs(l * std::exp(x));
  }
  return 0.0;
}

double Equation::base() const { return kind == EquationKind::RatioExp ? s : a; }

std::vector<std::pair<std::string, double>> Equation::params() const {
  switch (kind) {
    case EquationKind::QuadExp:
      return {{"a", a}, {"b", b}, {"l", l}};
    case EquationKind::RatioExp:
      return {{"s", s}, {"t", t}, {"l", l}};
    default:
      return {{"a", a}, {"l", l}};
  }
}

}  // namespace glambert
