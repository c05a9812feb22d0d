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
#include <vector>

#include "glambert/rat.hpp"

namespace glambert {

/// Dense univariate polynomial with exact rational coefficients; index is
/// the power. Trailing zeros are stripped, so the zero polynomial is empty.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rat> coeffs);

  const std::vector<Rat>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rat coeff(int k) const;
  Rat leading() const;

  RatPoly derivative() const;
  std::vector<double> to_doubles() const;
  std::string to_string(const std::string& var = "x") const;

  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const Rat& s, const RatPoly& a);

  static RatPoly x();
  static RatPoly constant(const Rat& c);

 private:
  void strip();

  std::vector<Rat> coeffs_;
};

// Krall-Frink Bessel polynomial y_n(z) = sum_k (n+k)!/((n-k)! k!) (z/2)^k.
RatPoly bessel_poly(int n);
// Same family through y_n = (2n-1) z y_{n-1} + y_{n-2}.
RatPoly bessel_poly_recurrence(int n);

// Generalized Laguerre L_n^{(alpha)} from the explicit binomial sum.
RatPoly laguerre_poly(int n, int alpha);
RatPoly laguerre_poly_recurrence(int n, int alpha);

// Probabilists' Hermite He_n from He_{n+1} = x He_n - n He_{n-1}.
RatPoly hermite_prob_poly(int n);
RatPoly hermite_prob_poly_sum(int n);

// Touchard polynomial in y = e^x: phi_{n+1}(y) = y (phi_n(y) + phi_n'(y)).
RatPoly touchard_poly(int n);
// phi_n(y) = sum_k S(n, k) y^k with Stirling numbers of the second kind.
RatPoly touchard_poly_stirling(int n);

Rat poly_eval(const RatPoly& p, const Rat& x);

/// Compensated Horner (error-free transformations), accurate to roughly
/// twice working precision before the final rounding.
double poly_eval(const RatPoly& p, double x);
double poly_eval(const std::vector<double>& coeffs, double x);

}  // namespace glambert
