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

#include <gmpxx.h>

#include <cmath>
#include <string>

namespace glambert {

/// Exact rational number; GMP keeps it canonical (den > 0, gcd 1).
using Rat = mpq_class;

/// Exact conversion of a finite double into a rational.
inline Rat rat_from_double(double x) { return Rat(x); }

inline Rat make_rat(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline double to_double(const Rat& r) { return r.get_d(); }
inline double to_double(double x) { return x; }

/// ln|r| without overflowing for huge numerators/denominators.
inline double log_abs(const Rat& r) {
  long num_exp = 0;
  long den_exp = 0;
  double num = mpz_get_d_2exp(&num_exp, r.get_num_mpz_t());
  double den = mpz_get_d_2exp(&den_exp, r.get_den_mpz_t());
  return std::log(std::fabs(num / den)) + static_cast<double>(num_exp - den_exp) * std::log(2.0);
}

inline double log_abs(double x) { return std::log(std::fabs(x)); }

inline int sign_of(const Rat& r) { return sgn(r); }
inline int sign_of(double x) { return (x > 0) - (x < 0); }

inline std::string to_string(const Rat& r) { return r.get_str(); }

}  // namespace glambert
