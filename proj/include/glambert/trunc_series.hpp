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

#include <cmath>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "glambert/error.hpp"
#include "glambert/rat.hpp"

namespace glambert {

inline constexpr int kDefaultOrder = 40;

/**
 * Truncated power series in the local variable w = x - base:
 *
 *     value(w) = exp(E) * (c_0 + c_1 w + ... + c_N w^N) + O(w^{N+1})
 *
 * The exponent E is kept apart from the coefficients so that transcendental
 * prefactors such as e^{n a} never have to be folded into an exact rational
 * coefficient. T is either Rat (exact) or double.
 */
template <class T>
class TruncSeries {
 public:
  TruncSeries(T base, std::vector<T> coeffs, T scale_exponent = T(0))
      : base_(std::move(base)), coeffs_(std::move(coeffs)), scale_(std::move(scale_exponent)) {
    if (coeffs_.empty()) throw ContractViolation("TruncSeries needs at least one coefficient");
  }

  static TruncSeries zero(const T& base, int order) {
    check_order(order);
    return TruncSeries(base, std::vector<T>(order + 1, T(0)));
  }

  static TruncSeries one(const T& base, int order) {
    auto s = zero(base, order);
    s.coeffs_[0] = T(1);
    return s;
  }

  /// c0 + c1 * w
  static TruncSeries linear(const T& base, int order, const T& c0, const T& c1) {
    auto s = zero(base, order);
    s.coeffs_[0] = c0;
    if (order >= 1) s.coeffs_[1] = c1;
    return s;
  }

  const T& base() const { return base_; }
  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<T>& coeffs() const { return coeffs_; }
  const T& scale_exponent() const { return scale_; }

  const T& coeff(int k) const {
    if (k < 0 || k > order()) {
      throw IndexError("coefficient index " + std::to_string(k) + " outside [0, " +
                       std::to_string(order()) + "]");
    }
    return coeffs_[k];
  }

  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    return a.base_ == b.base_ && a.scale_ == b.scale_ && a.coeffs_ == b.coeffs_;
  }

 private:
  static void check_order(int order) {
    if (order < 0) throw ContractViolation("negative truncation order");
  }

  T base_;
  std::vector<T> coeffs_;
  T scale_;
};

namespace detail {

template <class T>
void require_compatible(const TruncSeries<T>& a, const TruncSeries<T>& b, const char* op) {
  if (a.order() != b.order() || !(a.base() == b.base())) {
    throw ContractViolation(std::string(op) + ": operands differ in base point or order");
  }
}

}  // namespace detail

/// Sum; both operands must carry the same exponential prefactor.
template <class T>
TruncSeries<T> ts_add(const TruncSeries<T>& a, const TruncSeries<T>& b) {
  detail::require_compatible(a, b, "ts_add");
  if (!(a.scale_exponent() == b.scale_exponent())) {
    throw ContractViolation("ts_add: operands carry different exponential prefactors");
  }
  std::vector<T> c(a.coeffs().size());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeffs()[k] + b.coeffs()[k];
  return TruncSeries<T>(a.base(), std::move(c), a.scale_exponent());
}

template <class T>
TruncSeries<T> ts_scale(const TruncSeries<T>& s, const T& factor) {
  std::vector<T> c(s.coeffs().size());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = s.coeffs()[k] * factor;
  return TruncSeries<T>(s.base(), std::move(c), s.scale_exponent());
}

/// Cauchy product truncated at the common order.
template <class T>
TruncSeries<T> ts_mul(const TruncSeries<T>& a, const TruncSeries<T>& b) {
  detail::require_compatible(a, b, "ts_mul");
  const int n = a.order();
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<T> c(n + 1, T(0));
  for (int k = 0; k <= n; ++k) {
    T acc(0);
    for (int j = 0; j <= k; ++j) acc += x[j] * y[k - j];
    c[k] = acc;
  }
  T scale = a.scale_exponent() + b.scale_exponent();
  return TruncSeries<T>(a.base(), std::move(c), std::move(scale));
}

/// s^n by binary powering; n = 0 gives the constant one series.
template <class T>
TruncSeries<T> ts_pow(const TruncSeries<T>& s, int n) {
  if (n < 0) throw ContractViolation("ts_pow: negative exponent");
  auto result = TruncSeries<T>::one(s.base(), s.order());
  if (n == 0) return result;
  auto square = s;
  bool first = true;
  while (true) {
    if (n & 1) {
      result = first ? square : ts_mul(result, square);
      first = false;
    }
    n >>= 1;
    if (n == 0) break;
    square = ts_mul(square, square);
  }
  return result;
}

template <class T>
TruncSeries<T> ts_recip(const TruncSeries<T>& s) {
  const auto& c = s.coeffs();
  if (c[0] == T(0)) throw NonInvertibleSeries("ts_recip: constant coefficient is zero");
  const int n = s.order();
  std::vector<T> r(n + 1, T(0));
  const T inv0 = T(1) / c[0];
  r[0] = inv0;
  for (int k = 1; k <= n; ++k) {
    T acc(0);
    for (int j = 1; j <= k; ++j) acc += c[j] * r[k - j];
    r[k] = -acc * inv0;
  }
  T scale = -s.scale_exponent();
  return TruncSeries<T>(s.base(), std::move(r), std::move(scale));
}

/// e^{c (base + w)}; the factor e^{c base} is carried as the prefactor exponent.
template <class T>
TruncSeries<T> ts_exp_linear(const T& c, const T& base, int order) {
  if (order < 0) throw ContractViolation("negative truncation order");
  std::vector<T> coeffs(order + 1, T(0));
  coeffs[0] = T(1);
  for (int k = 1; k <= order; ++k) {
    T next = coeffs[k - 1] * c / T(k);
    coeffs[k] = next;
  }
  T scale = c * base;
  return TruncSeries<T>(base, std::move(coeffs), std::move(scale));
}

/// exp(s) for a series without prefactor. The constant term becomes the
/// prefactor exponent, so the coefficients stay exact when s is rational.
template <class T>
TruncSeries<T> ts_exp(const TruncSeries<T>& s) {
  if (!(s.scale_exponent() == T(0))) {
    throw ContractViolation("ts_exp: argument must not carry an exponential prefactor");
  }
  const auto& g = s.coeffs();
  const int n = s.order();
  std::vector<T> h(n + 1, T(0));
  h[0] = T(1);
  // h' = g' h  =>  k h_k = sum_{j=1..k} j g_j h_{k-j}
  for (int k = 1; k <= n; ++k) {
    T acc(0);
    for (int j = 1; j <= k; ++j) acc += T(j) * g[j] * h[k - j];
    h[k] = acc / T(k);
  }
  return TruncSeries<T>(s.base(), std::move(h), g[0]);
}

template <class T>
const T& ts_coeff(const TruncSeries<T>& s, int k) {
  return s.coeff(k);
}

/// Multiplies the prefactor into the coefficients. Only possible for the
/// floating backend, or when the prefactor is already e^0.
template <class T>
TruncSeries<T> ts_fold_scale(const TruncSeries<T>& s) {
  if (s.scale_exponent() == T(0)) return s;
  if constexpr (std::is_floating_point_v<T>) {
    return TruncSeries<T>(s.base(), ts_scale(s, std::exp(s.scale_exponent())).coeffs(), T(0));
  } else {
    throw ContractViolation("transcendental prefactor cannot be folded into exact coefficients");
  }
}

/// Numeric value of the k-th Taylor coefficient, prefactor included.
template <class T>
double ts_numeric_coeff(const TruncSeries<T>& s, int k) {
  const T& c = s.coeff(k);
  if (c == T(0)) return 0.0;
  const double direct = to_double(c);
  const double factor = std::exp(to_double(s.scale_exponent()));
  const double product = direct * factor;
  if (std::isfinite(product) && product != 0.0 && std::isnormal(direct)) return product;
  const double lg = log_abs(c) + to_double(s.scale_exponent());
  return sign_of(c) * std::exp(lg);
}

}  // namespace glambert
