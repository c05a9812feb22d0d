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

#include "glambert/orthopoly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "glambert/error.hpp"

namespace glambert {

namespace {

void require_non_negative(int n, const char* what) {
  if (n < 0) throw ContractViolation(std::string(what) + ": negative degree");
}

mpz_class factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

mpz_class binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return b;
}

}  // namespace

RatPoly::RatPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { strip(); }

void RatPoly::strip() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat RatPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[k];
}

Rat RatPoly::leading() const { return is_zero() ? Rat(0) : coeffs_.back(); }

RatPoly RatPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rat> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return RatPoly(std::move(d));
}

std::vector<double> RatPoly::to_doubles() const {
  std::vector<double> out(coeffs_.size());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) out[k] = coeffs_[k].get_d();
  return out;
}

std::string RatPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= degree(); ++k) {
    Rat c = coeffs_[k];
    if (c == 0) continue;
    if (!first) {
      os << (c < 0 ? " - " : " + ");
      c = abs(c);
    }
    first = false;
    if (k == 0) {
      os << c.get_str();
      continue;
    }
    if (c != 1) os << c.get_str() << "*";
    os << var;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
  std::vector<Rat> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k < a.coeffs_.size()) c[k] += a.coeffs_[k];
    if (k < b.coeffs_.size()) c[k] += b.coeffs_[k];
  }
  return RatPoly(std::move(c));
}

RatPoly operator*(const Rat& s, const RatPoly& a) {
  std::vector<Rat> c(a.coeffs_.size());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = s * a.coeffs_[k];
  return RatPoly(std::move(c));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) { return a + Rat(-1) * b; }

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RatPoly(std::move(c));
}

RatPoly RatPoly::x() { return RatPoly({Rat(0), Rat(1)}); }
RatPoly RatPoly::constant(const Rat& c) { return RatPoly({c}); }

RatPoly bessel_poly(int n) {
  require_non_negative(n, "bessel_poly");
  std::vector<Rat> c(n + 1);
  for (int k = 0; k <= n; ++k) {
    mpz_class num = factorial(n + k);
    mpz_class den = factorial(n - k) * factorial(k);
    den <<= k;  // (z/2)^k
    Rat term(num, den);
    term.canonicalize();
    c[k] = term;
  }
  return RatPoly(std::move(c));
}

RatPoly bessel_poly_recurrence(int n) {
  require_non_negative(n, "bessel_poly_recurrence");
  RatPoly prev = RatPoly::constant(1);
  if (n == 0) return prev;
  RatPoly cur({Rat(1), Rat(1)});
  for (int m = 2; m <= n; ++m) {
    RatPoly next = Rat(2 * m - 1) * (RatPoly::x() * cur) + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

RatPoly laguerre_poly(int n, int alpha) {
  require_non_negative(n, "laguerre_poly");
  if (alpha < 0) throw ContractViolation("laguerre_poly: alpha must be non-negative");
  std::vector<Rat> c(n + 1);
  for (int k = 0; k <= n; ++k) {
    Rat term(binomial(n + alpha, n - k), factorial(k));
    term.canonicalize();
    c[k] = (k % 2 == 0) ? term : Rat(-term);
  }
  return RatPoly(std::move(c));
}

RatPoly laguerre_poly_recurrence(int n, int alpha) {
  require_non_negative(n, "laguerre_poly_recurrence");
  if (alpha < 0) throw ContractViolation("laguerre_poly_recurrence: alpha must be non-negative");
  RatPoly prev = RatPoly::constant(1);
  if (n == 0) return prev;
  RatPoly cur({Rat(1 + alpha), Rat(-1)});
  // (m+1) L_{m+1} = (2m + 1 + alpha - x) L_m - (m + alpha) L_{m-1}
  for (int m = 1; m < n; ++m) {
    RatPoly factor({Rat(2 * m + 1 + alpha), Rat(-1)});
    RatPoly next = make_rat(1, m + 1) * (factor * cur - Rat(m + alpha) * prev);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

RatPoly hermite_prob_poly(int n) {
  require_non_negative(n, "hermite_prob_poly");
  RatPoly prev = RatPoly::constant(1);
  if (n == 0) return prev;
  RatPoly cur = RatPoly::x();
  for (int m = 1; m < n; ++m) {
    RatPoly next = RatPoly::x() * cur - Rat(m) * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

RatPoly hermite_prob_poly_sum(int n) {
  require_non_negative(n, "hermite_prob_poly_sum");
  // He_n(x) = n! sum_m (-1)^m x^{n-2m} / (m! (n-2m)! 2^m)
  std::vector<Rat> c(n + 1);
  const mpz_class nf = factorial(n);
  for (int m = 0; 2 * m <= n; ++m) {
    mpz_class den = factorial(m) * factorial(n - 2 * m);
    den <<= m;
    Rat term(nf, den);
    term.canonicalize();
    c[n - 2 * m] = (m % 2 == 0) ? term : Rat(-term);
  }
  return RatPoly(std::move(c));
}

RatPoly touchard_poly(int n) {
  require_non_negative(n, "touchard_poly");
  RatPoly p = RatPoly::constant(1);
  for (int m = 0; m < n; ++m) p = RatPoly::x() * (p + p.derivative());
  return p;
}

RatPoly touchard_poly_stirling(int n) {
  require_non_negative(n, "touchard_poly_stirling");
  // S(m, k) = k S(m-1, k) + S(m-1, k-1)
  std::vector<mpz_class> row(n + 1, 0);
  row[0] = 1;
  for (int m = 1; m <= n; ++m) {
    for (int k = m; k >= 1; --k) row[k] = k * row[k] + row[k - 1];
    row[0] = 0;
  }
  std::vector<Rat> c(n + 1);
  for (int k = 0; k <= n; ++k) c[k] = Rat(row[k]);
  return RatPoly(std::move(c));
}

Rat poly_eval(const RatPoly& p, const Rat& x) {
  Rat acc = 0;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double poly_eval(const std::vector<double>& c, double x) {
  if (c.empty()) return 0.0;
  // Graillat-Louvet-Langlois compensated Horner.
  double s = c.back();
  double err = 0.0;
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    const double p = s * x;
    const double pe = std::fma(s, x, -p);
    const double t = p + c[i];
    const double z = t - p;
    const double se = (p - (t - z)) + (c[i] - z);
    s = t;
    err = err * x + (pe + se);
  }
  return s + err;
}

double poly_eval(const RatPoly& p, double x) { return poly_eval(p.to_doubles(), x); }

}  // namespace glambert
