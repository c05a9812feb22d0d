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

#include <cmath>

#include "doctest.h"
#include "glambert/compare.hpp"
#include "glambert/lagrange.hpp"
#include "glambert/numeric.hpp"
#include "glambert/solvers.hpp"
#include "support.hpp"

using namespace glambert;
using glambert::testing::Rng;

namespace {

double newton_root(const Equation& eq) { return oracle_root(eq, eq.base()); }

void check_residual_sound(const SolveReport& r) {
  if (r.converged) {
    double l = 0.0;
    for (const auto& [k, v] : r.params) {
      if (k == "l") l = v;
    }
    CHECK(r.residual <= 1e-8 * std::max(1.0, std::fabs(l)));
  }
}

}  // namespace

TEST_CASE("quadexp_term") {
  const double a = 0.4, b = -1.3, l = 0.07;
  CHECK(quadexp_term(1, {a, b, l}) == doctest::Approx(l * std::exp(a) / (a - b)).epsilon(1e-15));
  const double d = a - b;
  CHECK(quadexp_term(2, {a, b, l}) ==
        doctest::Approx(l * l * std::exp(2 * a) / (d * d) * (1 - 1 / d)).epsilon(1e-14));
  CHECK(quadexp_term(1, {0.0, -3.0, 0.1}) == doctest::Approx(0.1 / 3).epsilon(1e-15));
  CHECK_THROWS_AS(quadexp_term(1, {1.0, 1.0, 0.1}), DegenerateParams);
  CHECK_THROWS_AS(quadexp_term(0, {0.0, 1.0, 0.1}), ContractViolation);
}

TEST_CASE("quadexp_solve") {
  const SolveReport zero = quadexp_solve({0.3, -2.0, 0.0});
  CHECK(zero.root == 0.3);
  CHECK(zero.residual == 0.0);
  CHECK(zero.termsUsed == 0);
  CHECK(zero.branch == Branch::BaseA);

  const SolveReport r = quadexp_solve({0.0, -3.0, 0.1});
  CHECK(r.converged);
  CHECK(std::fabs(r.root - newton_root(Equation::quadexp({0.0, -3.0, 0.1}))) <= 1e-9);

  CHECK_THROWS_AS(quadexp_solve({1.0, 1.0, 0.1}), DegenerateParams);
}

TEST_CASE("quadexp divergent on both branches reports non-convergence") {
  const SolveReport r = quadexp_solve({0.0, -3.0, 20.0});
  CHECK_FALSE(r.converged);
  CHECK_FALSE(r.warnings.empty());
}

TEST_CASE("ratioexp_solve") {
  CHECK(ratioexp_solve({0.2, 1.0, 0.0}).root == 0.2);
  const RatioExpParams p{0.0, 1.0, 0.05};
  const auto sol = lagrange_coefficients(Descriptor{Family::ExpTimesLinear, p.t}, p.s, 3);
  CHECK(ratioexp_term(1, {p.s, p.t, 1.0}) == doctest::Approx(std::exp(p.s) * (p.s - p.t)).epsilon(1e-15));
  CHECK(sol.coeff(1) == doctest::Approx(std::exp(p.s) * (p.s - p.t)).epsilon(1e-15));
  const SolveReport r = ratioexp_solve(p);
  CHECK(r.converged);
  CHECK(std::fabs(r.root - newton_root(Equation::ratioexp(p))) <= 1e-9);
  CHECK_THROWS_AS(ratioexp_solve({1.0, 1.0, 0.1}), DegenerateParams);
}

TEST_CASE("gauss_solve") {
  CHECK(gauss_solve({0.7, 0.0}).root == 0.7);
  const auto engine = lagrange_coefficients_exact(ExactDescriptor{Family::Gauss, Rat(0)}, Rat(0), 8);
  CHECK(engine.scaled_coeff(1) == 1);
  CHECK(engine.scaled_coeff(2) == 0);
  CHECK(engine.scaled_coeff(3) == make_rat(-1, 2));
  for (int n = 1; n <= 8; ++n) CHECK(gauss_term(n, {0.0, 1.0}) == doctest::Approx(engine.numeric_coeff(n)));
  const SolveReport r = gauss_solve({0.0, 0.2});
  CHECK(r.converged);
  CHECK(std::fabs(r.root - newton_root(Equation::shift(EquationKind::Gauss, {0.0, 0.2}))) <= 1e-10);
}

TEST_CASE("doubleexp_solve") {
  CHECK(doubleexp_solve({-0.4, 0.0}).root == -0.4);
  for (double a : {-0.5, 0.0, 0.6}) CHECK(doubleexp_term(1, {a, 1.0}) == doctest::Approx(std::exp(std::exp(a))));
  const SolveReport r = doubleexp_solve({0.0, 0.05});
  CHECK(r.converged);
  CHECK(std::fabs(r.root - newton_root(Equation::shift(EquationKind::DoubleExp, {0.0, 0.05}))) <= 1e-10);
}

TEST_CASE("besselrecip_solve") {
  CHECK(besselrecip_solve({1.5, 0.0}).root == 1.5);
  const auto sol = lagrange_coefficients(Descriptor{Family::SqExpRecip, 0.0}, 1.0, 2);
  CHECK(sol.coeff(1) == doctest::Approx(std::exp(-2.0)).epsilon(1e-15));
  const SolveReport r = besselrecip_solve({1.0, 0.1});
  CHECK(r.converged);
  CHECK(std::fabs(r.root - newton_root(Equation::shift(EquationKind::BesselRecip, {1.0, 0.1}))) <= 1e-9);
  CHECK_THROWS_AS(besselrecip_solve({0.0, 0.1}), PoleAtBase);
}

TEST_CASE("besselrecip maps onto quadexp under x -> -2/X") {
  // x = a + l x^2 e^{-2/x} with X = -2/x becomes (X - 0)(X + 2/a) = (-4l/a) e^X around X = -2/a.
  for (double a : {0.8, 1.0, 2.0}) {
    for (double l : {0.02, 0.05, -0.03}) {
      CAPTURE(a);
      CAPTURE(l);
      const SolveReport direct = besselrecip_solve({a, l});
      SolveOptions opts;
      opts.branch = Branch::BaseB;
      const SolveReport mapped = quadexp_solve({0.0, -2.0 / a, -4.0 * l / a}, opts);
      REQUIRE(direct.converged);
      REQUIRE(mapped.converged);
      CHECK(std::fabs(direct.root - (-2.0 / mapped.root)) <= 1e-10 * std::fabs(direct.root));
    }
  }
}

TEST_CASE("plainexp_solve") {
  CHECK(plainexp_solve({-1.0, 0.0}).root == -1.0);
  const SolveReport r = plainexp_solve({0.0, 0.1});
  CHECK(std::fabs(r.root + lambert_w_principal(-0.1)) <= 1e-12);
  CHECK_FALSE(plainexp_solve({0.0, 0.5}).converged);
}

TEST_CASE("closed forms equal the engine term by term") {
  Rng rng(41);
  for (int draw = 0; draw < 100; ++draw) {
    const double a = testing::uniform(rng, -1.5, 1.5);
    const double b = a + (testing::uniform_int(rng, 0, 1) ? 1 : -1) * testing::uniform(rng, 0.3, 3.0);
    const double s = testing::uniform(rng, -1.5, 1.5);
    const double t = s + (testing::uniform_int(rng, 0, 1) ? 1 : -1) * testing::uniform(rng, 0.2, 2.0);
    const double l = testing::uniform(rng, -0.3, 0.3);

    const auto quad = lagrange_coefficients_exact(ExactDescriptor{Family::ExpOverLinear, rat_from_double(b)},
                                                  rat_from_double(a), 15);
    const auto ratio = lagrange_coefficients_exact(ExactDescriptor{Family::ExpTimesLinear, rat_from_double(t)},
                                                   rat_from_double(s), 15);
    const auto gauss = lagrange_coefficients_exact(ExactDescriptor{Family::Gauss, Rat(0)}, rat_from_double(a), 15);
    const auto plain = lagrange_coefficients_exact(ExactDescriptor{Family::PlainExp, Rat(0)}, rat_from_double(a), 15);
    const auto dexp = lagrange_coefficients(Descriptor{Family::DoubleExp, 0.0}, a, 15);
    for (int n = 1; n <= 15; ++n) {
      const double ln = std::pow(l, n);
      CAPTURE(n);
      CHECK(testing::rel_diff(quadexp_term(n, {a, b, l}), quad.numeric_coeff(n) * ln) <= 1e-10);
      CHECK(testing::rel_diff(ratioexp_term(n, {s, t, l}), ratio.numeric_coeff(n) * ln) <= 1e-10);
      CHECK(testing::rel_diff(gauss_term(n, {a, l}), gauss.numeric_coeff(n) * ln) <= 1e-10);
      CHECK(testing::rel_diff(plainexp_term(n, {a, l}), plain.numeric_coeff(n) * ln) <= 1e-10);
      CHECK(testing::rel_diff(doubleexp_term(n, {a, l}), dexp.coeff(n) * ln) <= 1e-10);
    }
  }
}

TEST_CASE("exact closed-form coefficients equal the exact engine") {
  const Rat a = make_rat(1, 3), b = make_rat(-5, 2);
  const auto quad = lagrange_coefficients_exact(ExactDescriptor{Family::ExpOverLinear, b}, a, 12);
  const auto ratio = lagrange_coefficients_exact(ExactDescriptor{Family::ExpTimesLinear, b}, a, 12);
  const auto gauss = lagrange_coefficients_exact(ExactDescriptor{Family::Gauss, Rat(0)}, a, 12);
  const auto plain = lagrange_coefficients_exact(ExactDescriptor{Family::PlainExp, Rat(0)}, Rat(0), 12);
  for (int n = 1; n <= 12; ++n) {
    CAPTURE(n);
    CHECK(exact::quadexp_coeff(n, a, b) == quad.scaled_coeff(n));
    CHECK(exact::ratioexp_coeff(n, a, b) == ratio.scaled_coeff(n));
    CHECK(exact::gauss_coeff(n, a) == gauss.scaled_coeff(n));
    CHECK(exact::plainexp_coeff(n) == plain.scaled_coeff(n));
  }
}

TEST_CASE("every family returns its base point at l = 0") {
  Rng rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    const double a = testing::uniform(rng, 0.2, 2.0);
    const double b = -a - 1.0;
    CHECK(quadexp_solve({a, b, 0.0}).root == a);
    SolveOptions opts;
    opts.branch = Branch::BaseB;
    CHECK(quadexp_solve({a, b, 0.0}, opts).root == b);
    CHECK(ratioexp_solve({a, b, 0.0}).root == a);
    CHECK(gauss_solve({a, 0.0}).root == a);
    CHECK(doubleexp_solve({a, 0.0}).root == a);
    CHECK(besselrecip_solve({a, 0.0}).root == a);
    CHECK(plainexp_solve({a, 0.0}).root == a);
  }
}

TEST_CASE("converged reports satisfy the residual bound") {
  Rng rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    const double a = testing::uniform(rng, -1.0, 1.0);
    const double b = a + testing::uniform(rng, 0.5, 3.0) * (trial % 2 ? 1 : -1);
    const double l = testing::uniform(rng, -0.5, 0.5);
    check_residual_sound(quadexp_solve({a, b, l}));
    check_residual_sound(ratioexp_solve({a, b, l * 0.3}));
    check_residual_sound(gauss_solve({a, l}));
    check_residual_sound(doubleexp_solve({a, l * 0.1}));
    check_residual_sound(plainexp_solve({a, l}));
    if (std::fabs(a) > 0.3) check_residual_sound(besselrecip_solve({a, l * 0.1}));
  }
}

TEST_CASE("both quadexp branches land on genuine roots") {
  Rng rng(44);
  int both = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const double a = testing::uniform(rng, -1.0, 1.0);
    const double b = a + testing::uniform(rng, 1.0, 4.0) * (trial % 2 ? 1 : -1);
    const double l = testing::uniform(rng, -0.05, 0.05);
    SolveOptions oa, ob;
    oa.branch = Branch::BaseA;
    ob.branch = Branch::BaseB;
    const SolveReport ra = quadexp_solve({a, b, l}, oa);
    const SolveReport rb = quadexp_solve({a, b, l}, ob);
    if (!ra.converged || !rb.converged) continue;
    ++both;
    CHECK(ra.branch == Branch::BaseA);
    CHECK(rb.branch == Branch::BaseB);
    const Equation eq = Equation::quadexp({a, b, l});
    if (std::fabs(ra.root - rb.root) > 1e-8) {
      CHECK(std::fabs(eq.residual(ra.root)) <= 1e-8);
      CHECK(std::fabs(eq.residual(rb.root)) <= 1e-8);
    }
  }
  CHECK(both > 50);
}

TEST_CASE("auto branch falls back to the series around b") {
  // l = 5 lies outside the disc around a = 0 but inside the one around b = -3.
  const SolveReport r = quadexp_solve({0.0, -3.0, 5.0});
  CHECK(r.converged);
  CHECK(r.branch == Branch::BaseB);
  CHECK_FALSE(r.warnings.empty());
}

TEST_CASE("published variants differ from the verified terms at n = 2") {
  const RatioExpParams rp{0.0, 0.5, 1.0};
  CHECK(testing::rel_diff(ratioexp_term_as_printed(2, rp), ratioexp_term(2, rp)) > 1e-3);
  const ScalarShiftParams gp{0.5, 1.0};
  CHECK(testing::rel_diff(gauss_term_as_printed(2, gp), gauss_term(2, gp)) > 1e-3);
  const ScalarShiftParams dp{0.3, 1.0};
  CHECK(testing::rel_diff(doubleexp_term_as_printed(2, dp), doubleexp_term(2, dp)) > 1e-3);
}

TEST_CASE("log-magnitude terms stay finite where direct powers overflow") {
  const LogTerm t = quadexp_log_term(200, {0.0, -3.0, 0.1});
  CHECK(std::isfinite(t.log_abs));
  CHECK(t.sign != 0);
  const LogTerm p = plainexp_log_term(400, {0.0, 0.3});
  CHECK(std::isfinite(p.log_abs));
  CHECK(p.value() < 1e-10);
}

TEST_CASE("acceleration flag") {
  SolveOptions opts;
  opts.accelerate = true;
  const SolveReport r = quadexp_solve({0.0, -3.0, 1.2}, opts);
  CHECK(r.converged);
  CHECK(std::fabs(r.root - newton_root(Equation::quadexp({0.0, -3.0, 1.2}))) <= 1e-9);
}
