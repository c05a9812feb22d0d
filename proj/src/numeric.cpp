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

#include "glambert/numeric.hpp"

#include <algorithm>
#include <cmath>

namespace glambert {

double newton_solve(const RootProblem& p, double x0, double tol) {
  if (!(p.lo < p.hi)) throw ContractViolation("newton_solve: empty search interval");
  if (!(tol > 0.0)) throw ContractViolation("newton_solve: tolerance must be positive");
  const Equation& eq = p.equation;
  double lo = p.lo;
  double hi = p.hi;
  double flo = eq.residual(lo);
  double fhi = eq.residual(hi);
  const double f_at_lo = flo;
  const double f_at_hi = fhi;
  auto endpoint_root = [&]() -> const double* {
    if (std::fabs(f_at_lo) <= tol) return &p.lo;
    if (std::fabs(f_at_hi) <= tol) return &p.hi;
    return nullptr;
  };
  const bool bracketed = std::signbit(flo) != std::signbit(fhi);

  double x = (x0 >= lo && x0 <= hi) ? x0 : 0.5 * (lo + hi);
  for (int iter = 0; iter < 400; ++iter) {
    const double fx = eq.residual(x);
    if (std::fabs(fx) <= tol) return x;
    if (bracketed) {
      if (std::signbit(fx) == std::signbit(flo)) {
        lo = x;
        flo = fx;
      } else {
        hi = x;
      }
      if (std::nextafter(lo, hi) >= hi) break;
    }
    const double d = eq.derivative(x);
    double next = x - fx / d;
    const bool newton_ok = std::isfinite(d) && std::fabs(d) >= 1e-14 && std::isfinite(next) && next > lo && next < hi;
    if (!newton_ok) {
      if (!bracketed) {
        if (const double* r = endpoint_root()) return *r;
        throw NoRootInInterval("Newton left [" + std::to_string(p.lo) + ", " + std::to_string(p.hi) +
                               "] and the interval has no sign change");
      }
      next = 0.5 * (lo + hi);
    }
    if (next == x) {
      if (!bracketed) break;
      next = 0.5 * (lo + hi);
      if (next == x) break;
    }
    x = next;
  }
  const double fx = eq.residual(x);
  if (std::fabs(fx) <= tol) return x;
  if (const double* r = endpoint_root()) return *r;
  if (!bracketed) throw NoRootInInterval("Newton stagnated without a sign change in the interval");
  throw ToleranceNotMet("residual " + std::to_string(std::fabs(fx)) + " above tolerance at machine resolution");
}

std::vector<Bracket> bracket_scan(const RootProblem& p, int steps) {
  if (steps < 2) throw ContractViolation("bracket_scan: need at least 2 steps");
  if (!(p.lo < p.hi)) throw ContractViolation("bracket_scan: empty search interval");
  std::vector<Bracket> out;
  const double h = (p.hi - p.lo) / steps;
  double x_prev = p.lo;
  double f_prev = p.equation.residual(x_prev);
  if (f_prev == 0.0) out.emplace_back(x_prev, x_prev);
  for (int i = 1; i <= steps; ++i) {
    const double x = (i == steps) ? p.hi : p.lo + i * h;
    const double f = p.equation.residual(x);
    if (f == 0.0 || (f_prev != 0.0 && std::signbit(f) != std::signbit(f_prev))) out.emplace_back(x_prev, x);
    x_prev = x;
    f_prev = f;
  }
  return out;
}

std::string method_name(RadiusMethod m) {
  switch (m) {
    case RadiusMethod::Auto:
      return "auto";
    case RadiusMethod::Ratio:
      return "ratio";
    case RadiusMethod::DombSykes:
      return "dombSykes";
  }
  return "unknown";
}

std::string confidence_name(Confidence c) { return c == Confidence::Stable ? "stable" : "noisy"; }

RadiusEstimate radius_estimate(std::span<const double> coeffs, RadiusMethod method) {
  struct Point {
    int n;
    double log_mag;
  };
  std::vector<Point> nonzero;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0.0 && std::isfinite(coeffs[i])) {
      nonzero.push_back({static_cast<int>(i) + 1, std::log(std::fabs(coeffs[i]))});
    }
  }
  if (nonzero.size() < 10) {
    throw InsufficientTerms("radius_estimate: need at least 10 nonzero coefficients, got " +
                            std::to_string(nonzero.size()));
  }
  std::vector<double> inv_n;
  std::vector<double> ratio;
  for (std::size_t i = 1; i < nonzero.size(); ++i) {
    const int gap = nonzero[i].n - nonzero[i - 1].n;
    inv_n.push_back(1.0 / nonzero[i].n);
    ratio.push_back(std::exp((nonzero[i].log_mag - nonzero[i - 1].log_mag) / gap));
  }
  const std::size_t start = ratio.size() / 2;
  const std::size_t count = ratio.size() - start;
  const auto [mn, mx] = std::minmax_element(ratio.begin() + start, ratio.end());
  const bool stable = (*mx - *mn) <= 0.2 * *mx;

  RadiusEstimate est;
  est.nUsed = static_cast<int>(count);
  est.confidence = stable ? Confidence::Stable : Confidence::Noisy;
  est.method = method == RadiusMethod::Auto ? (stable ? RadiusMethod::DombSykes : RadiusMethod::Ratio) : method;

  if (est.method == RadiusMethod::Ratio) {
    est.estimate = *mx > 0.0 ? 1.0 / *mx : std::numeric_limits<double>::infinity();
    return est;
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = start; i < ratio.size(); ++i) {
    sx += inv_n[i];
    sy += ratio[i];
    sxx += inv_n[i] * inv_n[i];
    sxy += inv_n[i] * ratio[i];
  }
  const double k = static_cast<double>(count);
  const double denom = k * sxx - sx * sx;
  double intercept = sy / k;
  if (denom > 0.0) {
    const double slope = (k * sxy - sx * sy) / denom;
    intercept = (sy - slope * sx) / k;
  }
  est.estimate = intercept > 0.0 ? 1.0 / intercept : std::numeric_limits<double>::infinity();
  return est;
}

RadiusEstimate radius_estimate(const SeriesSolution& sol, RadiusMethod method) {
  return radius_estimate(std::span<const double>(sol.coeffs), method);
}

double wynn_epsilon(std::span<const double> s) {
  if (s.size() < 5) throw InsufficientTerms("wynn_epsilon: need at least 5 partial sums");
  // Two previous columns of the epsilon table; column j has s.size() - j entries.
  std::vector<double> older(s.size() + 1, 0.0);
  std::vector<double> current(s.begin(), s.end());
  double best = s.back();
  for (std::size_t j = 1; current.size() > 1; ++j) {
    std::vector<double> next(current.size() - 1);
    for (std::size_t k = 0; k < next.size(); ++k) {
      const double diff = current[k + 1] - current[k];
      if (std::fabs(diff) < 1e-300 || !std::isfinite(diff)) return best;
      next[k] = older[k + 1] + 1.0 / diff;
      if (!std::isfinite(next[k])) return best;
    }
    older = std::move(current);
    current = std::move(next);
    if (j % 2 == 0) best = current.back();
  }
  return best;
}

double lambert_w_principal(double z) {
  constexpr double kBranchPoint = -0.36787944117144233;  // -1/e
  if (std::isnan(z)) return z;
  if (z < kBranchPoint) throw OutOfBranch("W_0 is undefined below -1/e (z = " + std::to_string(z) + ")");
  if (z == 0.0) return 0.0;
  if (z == kBranchPoint) return -1.0;

  double w;
  if (z < -0.25) {
    const double p = std::sqrt(2.0 * (std::exp(1.0) * z + 1.0));
    w = -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p;
  } else if (z < 3.0) {
    // Winitzki's approximation
    const double l1 = std::log1p(z);
    w = l1 * (1.0 - std::log1p(l1) / (2.0 + l1));
  } else {
    const double l1 = std::log(z);
    const double l2 = std::log(l1);
    w = l1 - l2 + l2 / l1;
  }

  for (int i = 0; i < 64; ++i) {
    const double ew = std::exp(w);
    const double f = w * ew - z;
    if (f == 0.0) break;
    const double wp1 = w + 1.0;
    const double dw = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
    if (!std::isfinite(dw)) break;
    w -= dw;
    if (std::fabs(dw) <= 4 * std::numeric_limits<double>::epsilon() * (1.0 + std::fabs(w))) break;
  }
  return w;
}

}  // namespace glambert
