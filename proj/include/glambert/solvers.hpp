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

#include "glambert/equations.hpp"
#include "glambert/lagrange.hpp"
#include "glambert/rat.hpp"

namespace glambert {

/// Which base point the series is expanded around. Single-branch families
/// always report BaseA.
enum class Branch { Auto, BaseA, BaseB };

std::string branch_name(Branch b);

struct SolveOptions {
  int maxTerms = kDefaultOrder;
  double tol = 1e-12;
  /// Wynn epsilon on the partial sums.
  bool accelerate = false;
  Branch branch = Branch::Auto;
  /// Sum the uncorrected published series instead of the verified one
  /// (ratioexp, gauss, doubleexp only). Diagnostic use.
  bool paperAsPrinted = false;
};

struct SolveReport {
  std::string family;
  std::vector<std::pair<std::string, double>> params;
  double root = 0.0;
  int termsUsed = 0;
  double residual = 0.0;
  bool converged = false;
  Branch branch = Branch::BaseA;
  bool accelerated = false;
  std::vector<std::string> warnings;

  // Not serialized.
  std::vector<double> partialSums;
  bool diverged = false;
};

/// Summand in log-magnitude form: value = sign * exp(log_abs).
struct LogTerm {
  double log_abs = 0.0;
  int sign = 0;

  double value() const;
};

// Closed-form n-th summands (l included). They throw DegenerateParams where
// the closed form divides by zero.

/// Bessel-polynomial series around a (BaseA) or around b (BaseB).
LogTerm quadexp_log_term(int n, const QuadExpParams& p, Branch branch = Branch::BaseA);
double quadexp_term(int n, const QuadExpParams& p, Branch branch = Branch::BaseA);

/// (e^{ns}(s-t)/n) L_{n-1}^{(1)}(n(t-s)) l^n, around s.
LogTerm ratioexp_log_term(int n, const RatioExpParams& p);
double ratioexp_term(int n, const RatioExpParams& p);
/// Published variant: (t-s)^n l^n / n * L_{n-1}^{(1)}(n(t-s)), around t.
double ratioexp_term_as_printed(int n, const RatioExpParams& p);

/// (-1)^{n-1} n^{(n-1)/2} e^{-n a^2/2} He_{n-1}(sqrt(n) a) l^n / n!
LogTerm gauss_log_term(int n, const ScalarShiftParams& p);
double gauss_term(int n, const ScalarShiftParams& p);
/// Published variant: l^n/n! e^{+n a^2/2} H_{n-1}(sqrt(n) a) with H_m = (-1)^m He_m.
double gauss_term_as_printed(int n, const ScalarShiftParams& p);

/// e^{n e^a} phi_{n-1}(n e^a) l^n / n!
LogTerm doubleexp_log_term(int n, const ScalarShiftParams& p);
double doubleexp_term(int n, const ScalarShiftParams& p);
/// Published variant with prefactor e^{e^a} in place of e^{n e^a}.
double doubleexp_term_as_printed(int n, const ScalarShiftParams& p);

/// n^{n-1} e^{na} l^n / n!
LogTerm plainexp_log_term(int n, const ScalarShiftParams& p);
double plainexp_term(int n, const ScalarShiftParams& p);

/// Exact rational parts of the closed-form coefficients (l = 1). Each
/// coefficient equals the returned rational times exp(n * E) with E the
/// family's unit exponent: a, s, -a^2/2 and 1 (doubleexp at a = 0) for
/// quadexp, ratioexp, gauss and doubleexp; a for plainexp.
namespace exact {
Rat quadexp_coeff(int n, const Rat& a, const Rat& b);
Rat ratioexp_coeff(int n, const Rat& s, const Rat& t);
Rat gauss_coeff(int n, const Rat& a);
Rat doubleexp_coeff_at_zero(int n);
Rat plainexp_coeff(int n);
}  // namespace exact

SolveReport quadexp_solve(const QuadExpParams& p, const SolveOptions& opts = {});
SolveReport ratioexp_solve(const RatioExpParams& p, const SolveOptions& opts = {});
SolveReport gauss_solve(const ScalarShiftParams& p, const SolveOptions& opts = {});
SolveReport doubleexp_solve(const ScalarShiftParams& p, const SolveOptions& opts = {});
/// No closed form; sums the Lagrange coefficients of f = x^2 e^{-2/x}.
SolveReport besselrecip_solve(const ScalarShiftParams& p, const SolveOptions& opts = {});
SolveReport plainexp_solve(const ScalarShiftParams& p, const SolveOptions& opts = {});

/// Dispatches on eq.kind.
SolveReport solve(const Equation& eq, const SolveOptions& opts = {});

/// Summands c_n l^n, n = 1..order, of the series the solver would sum
/// (branch and paperAsPrinted taken from opts; Auto means BaseA).
std::vector<double> series_terms(const Equation& eq, int order, const SolveOptions& opts = {});

/// Base point matching series_terms.
double series_base(const Equation& eq, const SolveOptions& opts = {});

/// c_1..c_N of the root series in powers of l (series_terms at l = 1).
std::vector<double> series_coefficients(const Equation& eq, int order, const SolveOptions& opts = {});

}  // namespace glambert
