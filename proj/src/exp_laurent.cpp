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

#include "glambert/exp_laurent.hpp"

#include <sstream>
#include <utility>

#include "glambert/error.hpp"

namespace glambert {

ExpLaurent::ExpLaurent(int exp_rate, Terms terms) : exp_rate_(exp_rate), terms_(std::move(terms)) {
  canonicalize();
}

ExpLaurent ExpLaurent::monomial(int exp_rate, int power, const Rat& coeff) {
  return ExpLaurent(exp_rate, Terms{{power, coeff}});
}

void ExpLaurent::canonicalize() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
}

Rat ExpLaurent::coeff(int power) const {
  auto it = terms_.find(power);
  return it == terms_.end() ? Rat(0) : it->second;
}

int ExpLaurent::min_power() const {
  if (terms_.empty()) throw ContractViolation("min_power of the zero expression");
  return terms_.begin()->first;
}

int ExpLaurent::max_power() const {
  if (terms_.empty()) throw ContractViolation("max_power of the zero expression");
  return terms_.rbegin()->first;
}

std::string ExpLaurent::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  if (exp_rate_ != 0) os << "e^(" << exp_rate_ << var << ")*(";
  bool first = true;
  // highest power first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Rat c = it->second;
    if (!first) {
      os << (c < 0 ? " - " : " + ");
      c = abs(c);
    }
    first = false;
    if (it->first == 0) {
      os << c.get_str();
    } else {
      if (c != 1) os << c.get_str() << "*";
      os << var;
      if (it->first != 1) os << "^" << it->first;
    }
  }
  if (exp_rate_ != 0) os << ")";
  return os.str();
}

bool operator==(const ExpLaurent& a, const ExpLaurent& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.exp_rate_ == b.exp_rate_ && a.terms_ == b.terms_;
}

ExpLaurent operator+(const ExpLaurent& a, const ExpLaurent& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.exp_rate_ != b.exp_rate_) {
    throw ContractViolation("cannot add exponential-Laurent terms with different rates");
  }
  ExpLaurent::Terms t = a.terms_;
  for (const auto& [k, c] : b.terms_) t[k] += c;
  return ExpLaurent(a.exp_rate_, std::move(t));
}

ExpLaurent operator-(const ExpLaurent& a) { return Rat(-1) * a; }

ExpLaurent operator-(const ExpLaurent& a, const ExpLaurent& b) { return a + (-b); }

ExpLaurent operator*(const Rat& s, const ExpLaurent& a) {
  ExpLaurent::Terms t;
  for (const auto& [k, c] : a.terms_) t.emplace(k, s * c);
  return ExpLaurent(a.exp_rate_, std::move(t));
}

ExpLaurent operator*(const ExpLaurent& a, const ExpLaurent& b) {
  if (a.is_zero() || b.is_zero()) return {};
  ExpLaurent::Terms t;
  for (const auto& [i, x] : a.terms_) {
    for (const auto& [j, y] : b.terms_) t[i + j] += x * y;
  }
  return ExpLaurent(a.exp_rate_ + b.exp_rate_, std::move(t));
}

ExpLaurent el_mul(const ExpLaurent& a, const ExpLaurent& b) { return a * b; }

ExpLaurent el_derive(const ExpLaurent& e) {
  // c u^k e^{mu}  ->  c m u^k + c k u^{k-1}
  ExpLaurent::Terms t;
  const int m = e.exp_rate();
  for (const auto& [k, c] : e.terms()) {
    if (m != 0) t[k] += c * m;
    if (k != 0) t[k - 1] += c * k;
  }
  return ExpLaurent(m, std::move(t));
}

ExpLaurent el_shift(const ExpLaurent& e, int k) {
  return e * ExpLaurent::monomial(0, k);
}

ExpLaurent el_recip_derive(const ExpLaurent& e) {
  return Rat(-1) * el_shift(el_derive(e), 2);
}

}  // namespace glambert
