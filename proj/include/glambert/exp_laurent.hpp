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

#include <map>
#include <string>

#include "glambert/rat.hpp"

namespace glambert {

/**
 * e^{m u} * sum_k c_k u^k with finitely many integer powers k (negative
 * allowed) and exact rational coefficients. Closed under d/du, which keeps
 * the exponential rate m. Zero coefficients are never stored; the zero
 * expression is compatible with every rate.
 */
class ExpLaurent {
 public:
  using Terms = std::map<int, Rat>;

  ExpLaurent() = default;
  ExpLaurent(int exp_rate, Terms terms);

  static ExpLaurent monomial(int exp_rate, int power, const Rat& coeff = Rat(1));
  static ExpLaurent constant(const Rat& c) { return monomial(0, 0, c); }

  int exp_rate() const { return exp_rate_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rat coeff(int power) const;
  int min_power() const;
  int max_power() const;

  std::string to_string(const std::string& var = "u") const;

  friend bool operator==(const ExpLaurent& a, const ExpLaurent& b);
  friend ExpLaurent operator+(const ExpLaurent& a, const ExpLaurent& b);
  friend ExpLaurent operator-(const ExpLaurent& a, const ExpLaurent& b);
  friend ExpLaurent operator-(const ExpLaurent& a);
  friend ExpLaurent operator*(const ExpLaurent& a, const ExpLaurent& b);
  friend ExpLaurent operator*(const Rat& s, const ExpLaurent& a);

 private:
  void canonicalize();

  int exp_rate_ = 0;
  Terms terms_;
};

ExpLaurent el_mul(const ExpLaurent& a, const ExpLaurent& b);

/// d/du
ExpLaurent el_derive(const ExpLaurent& e);

/// -u^2 d/du, i.e. the derivative with respect to 1/u.
ExpLaurent el_recip_derive(const ExpLaurent& e);

/// u^k * e
ExpLaurent el_shift(const ExpLaurent& e, int k);

}  // namespace glambert
