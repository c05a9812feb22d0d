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

#include "glambert/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "glambert/error.hpp"
#include "glambert/numeric.hpp"
#include "glambert/orthopoly.hpp"

namespace glambert {

std::string branch_name(Branch b) {
  switch (b) {
    case Branch::Auto:
      return "auto";
    case Branch::BaseA:
      return "baseA";
    case Branch::BaseB:
      return "baseB";
  }
  return "unknown";
}

double LogTerm::value() const { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }

namespace {

int sgn_d(double x) { return (x > 0) - (x < 0); }

/// Multiplies a LogTerm by a plain double factor.
LogTerm times(LogTerm t, double factor) {
  if (factor == 0.0 || t.sign == 0) return {0.0, 0};
  return {t.log_abs + std::log(std::fabs(factor)), t.sign * sgn_d(factor)};
}

/// l^n / n!
LogTerm power_over_factorial(double l, int n) {
  if (l == 0.0) return {0.0, 0};
  const int sign = (l < 0 && n % 2 == 1) ? -1 : 1;
  return {n * std::log(std::fabs(l)) - std::lgamma(n + 1.0), sign};
}

/// Polynomial value in log form. Evaluated exactly at the (exactly
/// representable) double argument, so alternating coefficients do not cancel.
LogTerm poly_log(const RatPoly& poly, double x) {
  const Rat v = poly_eval(poly, rat_from_double(x));
  const int sign = sign_of(v);
  return sign == 0 ? LogTerm{0.0, 0} : LogTerm{log_abs(v), sign};
}

LogTerm times(LogTerm t, LogTerm factor) {
  if (factor.sign == 0 || t.sign == 0) return {0.0, 0};
  return {t.log_abs + factor.log_abs, t.sign * factor.sign};
}

void require_positive(int n) {
  if (n < 1) throw ContractViolation("series term index must be positive");
}

}  // namespace

LogTerm quadexp_log_term(int n, const QuadExpParams& p, Branch branch) {
  require_positive(n);
  if (p.a == p.b) throw DegenerateParams("quadexp closed form needs a != b (got a = b = " + std::to_string(p.a) + ")");
  if (p.l == 0.0) return {0.0, 0};
  const double d = p.a - p.b;
  const bool around_b = branch == Branch::BaseB;
  // term = (1/(n! n)) X^n B_{n-1}(z)
  const double base = around_b ? p.b : p.a;
  const double z = (around_b ? 2.0 : -2.0) / (n * d);
  const int x_sign = (around_b ? -1 : 1) * sgn_d(p.l) * sgn_d(d);
  const double log_x = std::log(static_cast<double>(n)) + std::log(std::fabs(p.l)) + base - std::log(std::fabs(d));
  const LogTerm bessel = poly_log(bessel_poly(n - 1), z);
  LogTerm t{n * log_x - std::lgamma(n + 1.0) - std::log(static_cast<double>(n)),
            (x_sign < 0 && n % 2 == 1) ? -1 : 1};
  return times(t, bessel);
}

double quadexp_term(int n, const QuadExpParams& p, Branch branch) { return quadexp_log_term(n, p, branch).value(); }

LogTerm ratioexp_log_term(int n, const RatioExpParams& p) {
  require_positive(n);
  if (p.s == p.t) throw DegenerateParams("ratioexp needs s != t (got s = t = " + std::to_string(p.s) + ")");
  const LogTerm lag = poly_log(laguerre_poly(n - 1, 1), n * (p.t - p.s));
  if (p.l == 0.0) return {0.0, 0};
  LogTerm t{n * std::log(std::fabs(p.l)) + n * p.s - std::log(static_cast<double>(n)),
            (p.l < 0 && n % 2 == 1) ? -1 : 1};
  return times(times(t, p.s - p.t), lag);
}

double ratioexp_term(int n, const RatioExpParams& p) { return ratioexp_log_term(n, p).value(); }

double ratioexp_term_as_printed(int n, const RatioExpParams& p) {
  require_positive(n);
  const double u = p.t - p.s;
  const double lag = poly_log(laguerre_poly(n - 1, 1), n * u).value();
  return scaled_power(lag / n, u * p.l, n);
}

LogTerm gauss_log_term(int n, const ScalarShiftParams& p) {
  require_positive(n);
  const LogTerm he = poly_log(hermite_prob_poly(n - 1), std::sqrt(static_cast<double>(n)) * p.a);
  LogTerm t = power_over_factorial(p.l, n);
  t.log_abs += 0.5 * (n - 1) * std::log(static_cast<double>(n)) - n * p.a * p.a / 2;
  if ((n - 1) % 2 == 1) t.sign = -t.sign;
  return times(t, he);
}

double gauss_term(int n, const ScalarShiftParams& p) { return gauss_log_term(n, p).value(); }

double gauss_term_as_printed(int n, const ScalarShiftParams& p) {
  require_positive(n);
  LogTerm h = poly_log(hermite_prob_poly(n - 1), std::sqrt(static_cast<double>(n)) * p.a);
  if ((n - 1) % 2 == 1) h.sign = -h.sign;
  LogTerm t = power_over_factorial(p.l, n);
  t.log_abs += n * p.a * p.a / 2;
  return times(t, h).value();
}

LogTerm doubleexp_log_term(int n, const ScalarShiftParams& p) {
  require_positive(n);
  const double y = n * std::exp(p.a);
  LogTerm t = power_over_factorial(p.l, n);
  t.log_abs += y;
  return times(t, poly_log(touchard_poly(n - 1), y));
}

double doubleexp_term(int n, const ScalarShiftParams& p) { return doubleexp_log_term(n, p).value(); }

double doubleexp_term_as_printed(int n, const ScalarShiftParams& p) {
  require_positive(n);
  const double y = n * std::exp(p.a);
  LogTerm t = power_over_factorial(p.l, n);
  t.log_abs += std::exp(p.a);
  return times(t, poly_log(touchard_poly(n - 1), y)).value();
}

LogTerm plainexp_log_term(int n, const ScalarShiftParams& p) {
  require_positive(n);
  LogTerm t = power_over_factorial(p.l, n);
  t.log_abs += (n - 1) * std::log(static_cast<double>(n)) + n * p.a;
  return t;
}

double plainexp_term(int n, const ScalarShiftParams& p) { return plainexp_log_term(n, p).value(); }

namespace exact {

namespace {

Rat factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rat(f);
}

Rat rat_pow(const Rat& x, int n) {
  Rat r = 1;
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

}  // namespace

Rat quadexp_coeff(int n, const Rat& a, const Rat& b) {
  require_positive(n);
  if (a == b) throw DegenerateParams("quadexp closed form needs a != b");
  const Rat d = a - b;
  // (1/(n! n)) (n/d)^n B_{n-1}(-2/(n d))
  Rat z = Rat(-2) / (Rat(n) * d);
  Rat value = rat_pow(Rat(n) / d, n) / (factorial(n) * n);
  return value * poly_eval(bessel_poly(n - 1), z);
}

Rat ratioexp_coeff(int n, const Rat& s, const Rat& t) {
  require_positive(n);
  if (s == t) throw DegenerateParams("ratioexp needs s != t");
  Rat arg = Rat(n) * (t - s);
  Rat value = (s - t) / n;
  return value * poly_eval(laguerre_poly(n - 1, 1), arg);
}

Rat gauss_coeff(int n, const Rat& a) {
  require_positive(n);
  // n^{(n-1)/2} He_{n-1}(sqrt(n) a): He_{n-1} only has powers j of the same
  // parity as n-1, so every n^{(n-1+j)/2} is an integer power.
  const RatPoly he = hermite_prob_poly(n - 1);
  Rat sum = 0;
  for (int j = 0; j <= he.degree(); ++j) {
    if (he.coeff(j) == 0) continue;
    sum += he.coeff(j) * rat_pow(Rat(n), (n - 1 + j) / 2) * rat_pow(a, j);
  }
  Rat value = sum / factorial(n);
  return (n - 1) % 2 == 1 ? Rat(-value) : value;
}

Rat doubleexp_coeff_at_zero(int n) {
  require_positive(n);
  return poly_eval(touchard_poly(n - 1), Rat(n)) / factorial(n);
}

Rat plainexp_coeff(int n) {
  require_positive(n);
  return rat_pow(Rat(n), n - 1) / factorial(n);
}

}  // namespace exact

namespace {

using TermFn = std::function<double(int)>;

SolveReport sum_and_check(const Equation& eq, double base, const TermFn& term, const SolveOptions& opts,
                          Branch branch) {
  if (opts.maxTerms < 1) throw ContractViolation("maxTerms must be at least 1");
  if (!(opts.tol > 0.0)) throw ContractViolation("tol must be positive");
  SolveReport r;
  r.family = kind_name(eq.kind);
  r.params = eq.params();
  r.branch = branch;

  if (eq.l == 0.0) {
    r.root = base;
    r.termsUsed = 0;
    r.residual = std::fabs(eq.residual(base));
    r.converged = true;
    r.partialSums = {base};
    return r;
  }

  const SeriesSum sum = sum_terms(base, term, SummationOptions{opts.tol, opts.maxTerms});
  r.root = sum.value;
  r.termsUsed = sum.termsUsed;
  r.partialSums = sum.partialSums;
  r.diverged = sum.diverged;
  r.residual = std::fabs(eq.residual(r.root));
  bool converged = sum.converged && !sum.diverged;

  if (opts.accelerate && !sum.diverged && sum.partialSums.size() >= 5) {
    const double acc = wynn_epsilon(sum.partialSums);
    const double acc_res = std::fabs(eq.residual(acc));
    // Never accept an extrapolation that loses more than a digit.
    if (std::isfinite(acc) && (!std::isfinite(r.residual) || acc_res <= 10 * r.residual)) {
      r.root = acc;
      r.residual = acc_res;
      r.accelerated = true;
      converged = true;
    } else {
      r.warnings.push_back("Wynn extrapolation rejected: residual " + std::to_string(acc_res) + " vs raw " +
                           std::to_string(r.residual));
    }
  }

  const double allowed = 1e-8 * std::max(1.0, std::fabs(eq.l));
  if (sum.diverged) {
    r.warnings.push_back("series terms grow: l lies outside the convergence disc of this branch");
  } else if (!sum.converged && !r.accelerated) {
    r.warnings.push_back("tolerance not reached within " + std::to_string(opts.maxTerms) + " terms");
  }
  if (converged && !(r.residual <= allowed)) {
    r.warnings.push_back("residual " + std::to_string(r.residual) + " exceeds " + std::to_string(allowed));
    converged = false;
  }
  r.converged = converged;
  return r;
}

void note_as_printed(SolveReport& r) {
  r.warnings.insert(r.warnings.begin(), "summed the uncorrected published series (diagnostic)");
}

}  // namespace

SolveReport quadexp_solve(const QuadExpParams& p, const SolveOptions& opts) {
  if (p.a == p.b) throw DegenerateParams("quadexp closed form needs a != b (got a = b = " + std::to_string(p.a) + ")");
  if (opts.paperAsPrinted) throw ContractViolation("quadexp has no separate published variant");
  const Equation eq = Equation::quadexp(p);
  auto run = [&](Branch b) {
    return sum_and_check(
        eq, b == Branch::BaseB ? p.b : p.a, [&](int n) { return quadexp_term(n, p, b); }, opts, b);
  };
  if (opts.branch != Branch::Auto) return run(opts.branch);
  SolveReport first = run(Branch::BaseA);
  if (first.converged) return first;
  SolveReport second = run(Branch::BaseB);
  if (second.converged) {
    second.warnings.insert(second.warnings.begin(), "series around a did not converge; used the series around b");
    return second;
  }
  first.warnings.push_back("series around b did not converge either");
  return first;
}

SolveReport ratioexp_solve(const RatioExpParams& p, const SolveOptions& opts) {
  if (p.s == p.t) throw DegenerateParams("ratioexp needs s != t (got s = t = " + std::to_string(p.s) + ")");
  const Equation eq = Equation::ratioexp(p);
  if (opts.paperAsPrinted) {
    auto r = sum_and_check(
        eq, p.t, [&](int n) { return ratioexp_term_as_printed(n, p); }, opts, Branch::BaseA);
    note_as_printed(r);
    return r;
  }
  return sum_and_check(
      eq, p.s, [&](int n) { return ratioexp_term(n, p); }, opts, Branch::BaseA);
}

SolveReport gauss_solve(const ScalarShiftParams& p, const SolveOptions& opts) {
  const Equation eq = Equation::shift(EquationKind::Gauss, p);
  if (opts.paperAsPrinted) {
    auto r = sum_and_check(
        eq, p.a, [&](int n) { return gauss_term_as_printed(n, p); }, opts, Branch::BaseA);
    note_as_printed(r);
    return r;
  }
  return sum_and_check(
      eq, p.a, [&](int n) { return gauss_term(n, p); }, opts, Branch::BaseA);
}

SolveReport doubleexp_solve(const ScalarShiftParams& p, const SolveOptions& opts) {
  const Equation eq = Equation::shift(EquationKind::DoubleExp, p);
  if (opts.paperAsPrinted) {
    auto r = sum_and_check(
        eq, p.a, [&](int n) { return doubleexp_term_as_printed(n, p); }, opts, Branch::BaseA);
    note_as_printed(r);
    return r;
  }
  return sum_and_check(
      eq, p.a, [&](int n) { return doubleexp_term(n, p); }, opts, Branch::BaseA);
}

SolveReport besselrecip_solve(const ScalarShiftParams& p, const SolveOptions& opts) {
  if (p.a == 0.0) throw PoleAtBase("besselrecip needs a != 0");
  if (opts.paperAsPrinted) throw ContractViolation("besselrecip has no separate published variant");
  const Equation eq = Equation::shift(EquationKind::BesselRecip, p);
  if (p.l == 0.0) return sum_and_check(eq, p.a, [](int) { return 0.0; }, opts, Branch::BaseA);
  const SeriesSolution sol = lagrange_coefficients(Descriptor{Family::SqExpRecip, 0.0}, p.a, opts.maxTerms);
  return sum_and_check(
      eq, p.a, [&](int n) { return scaled_power(sol.coeffs[n - 1], p.l, n); }, opts, Branch::BaseA);
}

SolveReport plainexp_solve(const ScalarShiftParams& p, const SolveOptions& opts) {
  if (opts.paperAsPrinted) throw ContractViolation("plainexp has no separate published variant");
  const Equation eq = Equation::shift(EquationKind::PlainExp, p);
  SolveReport r = sum_and_check(
      eq, p.a, [&](int n) { return plainexp_term(n, p); }, opts, Branch::BaseA);
  const double z = std::fabs(p.l * std::exp(p.a));
  if (z >= std::exp(-1.0)) {
    r.converged = false;
    r.warnings.push_back("|l e^a| = " + std::to_string(z) + " is not below 1/e, outside the principal branch radius");
  }
  return r;
}

SolveReport solve(const Equation& eq, const SolveOptions& opts) {
  const ScalarShiftParams shift{eq.a, eq.l};
  switch (eq.kind) {
    case EquationKind::QuadExp:
      return quadexp_solve({eq.a, eq.b, eq.l}, opts);
    case EquationKind::RatioExp:
      return ratioexp_solve({eq.s, eq.t, eq.l}, opts);
    case EquationKind::Gauss:
      return gauss_solve(shift, opts);
    case EquationKind::DoubleExp:
      return doubleexp_solve(shift, opts);
    case EquationKind::BesselRecip:
      return besselrecip_solve(shift, opts);
    case EquationKind::PlainExp:
      return plainexp_solve(shift, opts);
  }
  throw ContractViolation("unknown equation family");
}

std::vector<double> series_terms(const Equation& eq, int order, const SolveOptions& opts) {
  if (order < 1) throw ContractViolation("order must be at least 1");
  std::vector<double> c;
  c.reserve(order);
  const Branch branch = opts.branch == Branch::BaseB ? Branch::BaseB : Branch::BaseA;
  const ScalarShiftParams shift{eq.a, eq.l};
  for (int n = 1; n <= order; ++n) {
    switch (eq.kind) {
      case EquationKind::QuadExp:
        c.push_back(quadexp_term(n, {eq.a, eq.b, eq.l}, branch));
        break;
      case EquationKind::RatioExp:
        c.push_back(opts.paperAsPrinted ? ratioexp_term_as_printed(n, {eq.s, eq.t, eq.l})
                                        : ratioexp_term(n, {eq.s, eq.t, eq.l}));
        break;
      case EquationKind::Gauss:
        c.push_back(opts.paperAsPrinted ? gauss_term_as_printed(n, shift) : gauss_term(n, shift));
        break;
      case EquationKind::DoubleExp:
        c.push_back(opts.paperAsPrinted ? doubleexp_term_as_printed(n, shift) : doubleexp_term(n, shift));
        break;
      case EquationKind::PlainExp:
        c.push_back(plainexp_term(n, shift));
        break;
      case EquationKind::BesselRecip: {
        if (eq.a == 0.0) throw PoleAtBase("besselrecip needs a != 0");
        const auto sol = lagrange_coefficients(Descriptor{Family::SqExpRecip, 0.0}, eq.a, order);
        for (int m = 1; m <= order; ++m) c.push_back(scaled_power(sol.coeffs[m - 1], eq.l, m));
        return c;
      }
    }
  }
  return c;
}

double series_base(const Equation& eq, const SolveOptions& opts) {
  switch (eq.kind) {
    case EquationKind::QuadExp:
      return opts.branch == Branch::BaseB ? eq.b : eq.a;
    case EquationKind::RatioExp:
      return opts.paperAsPrinted ? eq.t : eq.s;
    default:
      return eq.a;
  }
}

std::vector<double> series_coefficients(const Equation& eq, int order, const SolveOptions& opts) {
  Equation unit = eq;
  unit.l = 1.0;
  return series_terms(unit, order, opts);
}

}  // namespace glambert
