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

// Hand-rolled generators for the property tests. Every generator takes the
// engine explicitly so each test case owns a fixed seed.

#include <cmath>
#include <random>
#include <vector>

#include "glambert/exp_laurent.hpp"
#include "glambert/rat.hpp"
#include "glambert/trunc_series.hpp"

namespace glambert::testing {

using Rng = std::mt19937_64;

inline int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

/// p/q with |p| <= max_num, 1 <= q <= max_den.
inline Rat random_rat(Rng& rng, long max_num = 12, long max_den = 7) {
  const long p = std::uniform_int_distribution<long>(-max_num, max_num)(rng);
  const long q = std::uniform_int_distribution<long>(1, max_den)(rng);
  return make_rat(p, q);
}

inline Rat random_nonzero_rat(Rng& rng, long max_num = 12, long max_den = 7) {
  Rat r = random_rat(rng, max_num, max_den);
  while (r == 0) r = random_rat(rng, max_num, max_den);
  return r;
}

inline TruncSeries<Rat> random_series(Rng& rng, const Rat& base, int order) {
  std::vector<Rat> c(order + 1);
  for (auto& x : c) x = random_rat(rng);
  return TruncSeries<Rat>(base, c);
}

/// Powers in [-4, 4], expRate drawn from `rates`.
inline ExpLaurent random_laurent(Rng& rng, std::vector<int> rates = {-2, 0, 1}, int max_terms = 4) {
  ExpLaurent::Terms t;
  const int m = uniform_int(rng, 1, max_terms);
  for (int i = 0; i < m; ++i) t[uniform_int(rng, -4, 4)] = random_nonzero_rat(rng);
  return ExpLaurent(rates[uniform_int(rng, 0, static_cast<int>(rates.size()) - 1)], t);
}

inline TruncSeries<double> to_double_series(const TruncSeries<Rat>& s) {
  std::vector<double> c;
  for (const auto& x : s.coeffs()) c.push_back(to_double(x));
  return TruncSeries<double>(to_double(s.base()), c, to_double(s.scale_exponent()));
}

inline double rel_diff(double got, double want) {
  if (want == 0.0) return std::fabs(got);
  return std::fabs(got - want) / std::fabs(want);
}

}  // namespace glambert::testing
