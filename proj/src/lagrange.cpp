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

#include "glambert/lagrange.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "glambert/error.hpp"

namespace glambert {

std::string family_name(Family f) {
  switch (f) {
    case Family::PlainExp:
      return "PlainExp";
    case Family::ExpOverLinear:
      return "ExpOverLinear";
    case Family::ExpTimesLinear:
      return "ExpTimesLinear";
    case Family::Gauss:
      return "Gauss";
    case Family::DoubleExp:
      return "DoubleExp";
    case Family::SqExpRecip:
      return "SqExpRecip";
  }
  return "unknown";
}

template <class T>
TruncSeries<T> f_series(const FunctionalDescriptor<T>& desc, const T& a, int order) {
  using S = TruncSeries<T>;
  const S w_plus_a = S::linear(a, order, a, T(1));
  switch (desc.family) {
    case Family::PlainExp:
      return ts_exp_linear(T(1), a, order);
    case Family::ExpOverLinear: {
      if (a == desc.param) throw PoleAtBase("e^x/(x - b) has a pole at the base point a = b");
      T shift = a - desc.param;
      return ts_mul(ts_exp_linear(T(1), a, order), ts_recip(S::linear(a, order, shift, T(1))));
    }
    case Family::ExpTimesLinear: {
      T shift = a - desc.param;
      return ts_mul(ts_exp_linear(T(1), a, order), S::linear(a, order, shift, T(1)));
    }
    case Family::Gauss: {
      // -(a + w)^2 / 2
      std::vector<T> c(order + 1, T(0));
      T c0 = -a * a / T(2);
      c[0] = c0;
      if (order >= 1) c[1] = -a;
      if (order >= 2) c[2] = T(-1) / T(2);
      return ts_exp(S(a, std::move(c)));
    }
    case Family::DoubleExp:
      // e^{a+w} must be folded before exponentiating again, which the exact
      // backend can only do at a = 0.
      return ts_exp(ts_fold_scale(ts_exp_linear(T(1), a, order)));
    case Family::SqExpRecip: {
      if (a == T(0)) throw PoleAtBase("x^2 e^{-2/x} has an essential singularity at the base point 0");
      const S inner = ts_scale(ts_recip(w_plus_a), T(-2));
      return ts_mul(ts_mul(w_plus_a, w_plus_a), ts_exp(inner));
    }
  }
  throw ContractViolation("unknown family");
}

template TruncSeries<double> f_series(const FunctionalDescriptor<double>&, const double&, int);
template TruncSeries<Rat> f_series(const FunctionalDescriptor<Rat>&, const Rat&, int);

namespace {

template <class T>
std::pair<std::vector<T>, T> lagrange_core(const FunctionalDescriptor<T>& desc, const T& a, int order) {
  if (order < 1) throw ContractViolation("lagrange_coefficients: order must be at least 1");
  const auto g = f_series(desc, a, order - 1);
  auto power = TruncSeries<T>::one(a, order - 1);
  std::vector<T> out;
  out.reserve(order);
  for (int n = 1; n <= order; ++n) {
    power = ts_mul(power, g);
    T cn = power.coeff(n - 1) / T(n);
    out.push_back(std::move(cn));
  }
  return {std::move(out), g.scale_exponent()};
}

double scaled_value(double log_mag, int sign) {
  return sign == 0 ? 0.0 : sign * std::exp(log_mag);
}

}  // namespace

double SeriesSolution::coeff(int n) const {
  if (n < 1 || n > static_cast<int>(coeffs.size())) {
    throw IndexError("series coefficient index " + std::to_string(n) + " outside [1, " +
                     std::to_string(coeffs.size()) + "]");
  }
  return coeffs[n - 1];
}

const Rat& ExactSeriesSolution::scaled_coeff(int n) const {
  if (n < 1 || n > static_cast<int>(scaled.size())) {
    throw IndexError("series coefficient index " + std::to_string(n) + " outside [1, " +
                     std::to_string(scaled.size()) + "]");
  }
  return scaled[n - 1];
}

double ExactSeriesSolution::numeric_coeff(int n) const {
  const Rat& q = scaled_coeff(n);
  if (q == 0) return 0.0;
  const double e = n * unit_exponent.get_d();
  const double direct = q.get_d() * std::exp(e);
  if (std::isfinite(direct) && direct != 0.0 && std::isnormal(q.get_d())) return direct;
  return scaled_value(log_abs(q) + e, sgn(q));
}

SeriesSolution ExactSeriesSolution::to_numeric() const {
  SeriesSolution s;
  s.family = Descriptor{family.family, family.param.get_d()};
  s.base = base.get_d();
  s.order = order;
  s.coeffs.reserve(order);
  for (int n = 1; n <= order; ++n) s.coeffs.push_back(numeric_coeff(n));
  return s;
}

SeriesSolution lagrange_coefficients(const Descriptor& desc, double a, int order) {
  auto [scaled, unit] = lagrange_core(desc, a, order);
  SeriesSolution s;
  s.family = desc;
  s.base = a;
  s.order = order;
  s.coeffs.reserve(order);
  for (int n = 1; n <= order; ++n) {
    const double q = scaled[n - 1];
    const double direct = q * std::exp(n * unit);
    if (q == 0.0 || (std::isfinite(direct) && direct != 0.0)) {
      s.coeffs.push_back(direct);
    } else {
      s.coeffs.push_back(scaled_value(std::log(std::fabs(q)) + n * unit, q > 0 ? 1 : -1));
    }
  }
  return s;
}

ExactSeriesSolution lagrange_coefficients_exact(const ExactDescriptor& desc, const Rat& a, int order) {
  auto [scaled, unit] = lagrange_core(desc, a, order);
  ExactSeriesSolution s;
  s.family = desc;
  s.base = a;
  s.order = order;
  s.scaled = std::move(scaled);
  s.unit_exponent = std::move(unit);
  return s;
}

double scaled_power(double c, double l, int n) {
  if (c == 0.0 || l == 0.0) return 0.0;
  const double direct = c * std::pow(l, n);
  if (std::isfinite(direct) && std::isnormal(direct)) return direct;
  const double lg = std::log(std::fabs(c)) + n * std::log(std::fabs(l));
  const int sign = ((c < 0) != (l < 0 && n % 2 == 1)) ? -1 : 1;
  return scaled_value(lg, sign);
}

SeriesSum sum_terms(double base, const std::function<double(int)>& term, const SummationOptions& opts) {
  if (opts.maxTerms < 1) throw ContractViolation("maxTerms must be at least 1");
  if (!(opts.tol > 0.0)) throw ContractViolation("tol must be positive");
  SeriesSum out;
  out.value = base;
  out.partialSums.push_back(base);
  double last_nonzero = -1.0;
  int growth = 0;
  int small = 0;
  for (int n = 1; n <= opts.maxTerms; ++n) {
    const double t = term(n);
    out.termsUsed = n;
    if (!std::isfinite(t)) {
      out.diverged = true;
      break;
    }
    out.value += t;
    out.terms.push_back(t);
    out.partialSums.push_back(out.value);
    const double mag = std::fabs(t);
    if (mag != 0.0) {
      if (last_nonzero >= 0.0 && n >= 5 && mag > last_nonzero) {
        ++growth;
      } else {
        growth = 0;
      }
      last_nonzero = mag;
      if (growth >= 3) {
        out.diverged = true;
        break;
      }
    }
    small = (mag <= opts.tol * std::fabs(out.value)) ? small + 1 : 0;
    if (small >= 2) {
      out.converged = true;
      break;
    }
  }
  return out;
}

SeriesSum series_eval(const SeriesSolution& sol, double l, const SummationOptions& opts) {
  if (l == 0.0) {
    SeriesSum out;
    out.value = sol.base;
    out.converged = true;
    out.partialSums.push_back(sol.base);
    return out;
  }
  SummationOptions capped = opts;
  capped.maxTerms = std::min(opts.maxTerms, sol.order);
  return sum_terms(
      sol.base, [&](int n) { return scaled_power(sol.coeffs[n - 1], l, n); }, capped);
}

}  // namespace glambert
