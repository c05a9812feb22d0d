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

#include <functional>
#include <string>
#include <vector>

#include "glambert/rat.hpp"
#include "glambert/trunc_series.hpp"

namespace glambert {

/// Shape of f in x = a + l f(x).
enum class Family {
  PlainExp,        // e^x
  ExpOverLinear,   // e^x / (x - param)
  ExpTimesLinear,  // e^x (x - param)
  Gauss,           // e^{-x^2/2}
  DoubleExp,       // e^{e^x}
  SqExpRecip,      // x^2 e^{-2/x}
};

std::string family_name(Family f);

template <class T>
struct FunctionalDescriptor {
  Family family = Family::PlainExp;
  T param = T(0);
};

using Descriptor = FunctionalDescriptor<double>;
using ExactDescriptor = FunctionalDescriptor<Rat>;

/// Taylor expansion of f(a + w) to order N. Throws PoleAtBase when a is a
/// pole of f.
template <class T>
TruncSeries<T> f_series(const FunctionalDescriptor<T>& desc, const T& a, int order);

/// Root expansion x(l) = base + sum_{n=1}^{N} c_n l^n.
struct SeriesSolution {
  Descriptor family;
  double base = 0.0;
  int order = 0;
  std::vector<double> coeffs;  // coeffs[n-1] = c_n

  double coeff(int n) const;
};

/// Exact form of a SeriesSolution: c_n = scaled[n-1] * exp(n * unit_exponent).
struct ExactSeriesSolution {
  ExactDescriptor family;
  Rat base;
  int order = 0;
  std::vector<Rat> scaled;
  Rat unit_exponent;

  const Rat& scaled_coeff(int n) const;
  double numeric_coeff(int n) const;
  SeriesSolution to_numeric() const;
};

/// c_n = (1/n) [w^{n-1}] f(a+w)^n, n = 1..N, by direct series powering.
SeriesSolution lagrange_coefficients(const Descriptor& desc, double a, int order);
ExactSeriesSolution lagrange_coefficients_exact(const ExactDescriptor& desc, const Rat& a, int order);

struct SummationOptions {
  double tol = 1e-12;
  int maxTerms = kDefaultOrder;
};

struct SeriesSum {
  double value = 0.0;
  int termsUsed = 0;
  bool diverged = false;
  /// Stopped because the terms fell below tol relative to the partial sum.
  bool converged = false;
  std::vector<double> terms;        // terms[n-1] is the n-th summand
  std::vector<double> partialSums;  // partialSums[0] = base
};

/**
 * Sums base + term(1) + term(2) + ... with the shared stopping rules:
 *  - stop once two consecutive terms satisfy |t_n| <= tol |S_n|;
 *  - flag divergence after three consecutive growing nonzero terms at n >= 5,
 *    or on a non-finite term.
 * Exact zero terms are ignored by the growth test.
 */
SeriesSum sum_terms(double base, const std::function<double(int)>& term, const SummationOptions& opts);

SeriesSum series_eval(const SeriesSolution& sol, double l, const SummationOptions& opts = {});

/// c * l^n without spurious overflow.
double scaled_power(double c, double l, int n);

}  // namespace glambert
