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
#include <vector>

#include "glambert/exp_laurent.hpp"
#include "glambert/orthopoly.hpp"

namespace glambert {

// All checks below work in exact rational arithmetic. Expressions in a
// single variable reuse ExpLaurent with u standing for that variable.

/// e^{-x} x^{n+1} (d/dx)^n [e^x / x^{n+1}] as a Laurent polynomial in x.
/// Throws ContractViolation if the exponentials fail to cancel.
ExpLaurent novel_bessel_rep(int n);

/// The same Laurent polynomial from the explicit sum
/// sum_{k=0}^{n} (n+k)! / ((n-k)! k!) (-1/x)^k.
ExpLaurent novel_bessel_sum(int n);

/// B_n(-2/x) expanded as a Laurent polynomial in x.
ExpLaurent bessel_in_reciprocal(int n);

/// novel_bessel_rep(n), novel_bessel_sum(n) and bessel_in_reciprocal(n) agree.
bool novel_rep_matches_bessel(int n);

/// 2^{-n} e^{2/x} (d/dx)^n [e^{-2/x} x^{2n}], computed in u = 1/x with
/// d/dx = -u^2 d/du and mapped back to a polynomial in x.
RatPoly classical_bessel_rodrigues(int n);

/// e^{-1/x} (d/dx)^n [e^{1/x} x^{2n}] as a polynomial in x.
RatPoly unit_rate_bessel_rodrigues(int n);

/// x^2 d/dx
ExpLaurent x2d(const ExpLaurent& e);

/// e^{-x} (x^2 d/dx)^n [e^x / x^{2n}] == e^{-x} x^{n+1} (d/dx)^n [e^x / x^{n+1}]
bool reciprocal_rep_equivalence(int n);

/// (x^2 D)^n g == x^{n+1} D^n (x^{n-1} g)
bool operator_identity_check(int n, const ExpLaurent& g);

/// D x^n - x^n D = n x^{n-1} and D^n x - x D^n = n D^{n-1}, applied to
/// u^k and e^u u^k for -3 <= k <= 3.
bool commutator_check(int n);
/// Both commutator relations applied to g.
bool commutator_check(int n, const ExpLaurent& g);

enum class RodriguesWeight { Bessel, Hermite, Laguerre, Touchard };

std::string weight_name(RodriguesWeight w);

struct RodriguesSpec {
  RodriguesWeight weight = RodriguesWeight::Bessel;
  int n = 0;
  int alpha = 1;  // Laguerre only
};

struct RodriguesResult {
  /// (1/W) (d/dx)^n [W Q^n]
  RatPoly polynomial;
  /// "x", or "y" with y = e^x for the Touchard weight.
  std::string variable;
  /// polynomial == normalization * reference
  Rat normalization;
  RatPoly reference;
  bool matches = false;
};

/**
 * Generalized Rodrigues formula for one of four weights:
 *   Bessel    W = e^{-2/x},       Q = x^2  -> 2^n B_n(x)
 *   Hermite   W = e^{-x^2/2},     Q = 1    -> (-1)^n He_n(x)
 *   Laguerre  W = x^alpha e^{-x}, Q = x    -> n! L_n^{(alpha)}(x)
 *   Touchard  W = e^{e^x},        Q = 1    -> phi_n(e^x)
 */
RodriguesResult generalized_rodrigues_instance(const RodriguesSpec& spec);

/// The six Laurent polynomials 1, 1 - 2/x, ..., for n = 0..5 as commonly
/// tabulated, for regression against novel_bessel_rep.
std::vector<ExpLaurent> tabulated_novel_rep();

struct ErrataEntry {
  std::string claimId;
  std::string paperLocation;
  std::string printedForm;
  std::string verifiedForm;
  std::string status;  // "confirmed", "typographical", or "not-reproduced"
};

/// Re-evaluates every known discrepancy between the published formulas and
/// the verified ones. Status is computed live, not hard-coded.
std::vector<ErrataEntry> errata_report();

struct IdentityCheck {
  std::string name;
  int n = 0;
  bool passed = false;
};

/// Runs every identity family for n up to max_n.
std::vector<IdentityCheck> run_identity_suite(int max_n);

}  // namespace glambert
