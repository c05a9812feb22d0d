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

// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "glambert/cli.hpp"
#include "glambert/compare.hpp"
#include "glambert/identity_lab.hpp"
#include "glambert/lagrange.hpp"
#include "glambert/numeric.hpp"
#include "glambert/report.hpp"
#include "glambert/solvers.hpp"
#include "json.hpp"

using namespace glambert;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

double rel_err(double got, double want) {
  if (want == 0.0) return std::fabs(got);
  return std::fabs(got - want) / std::fabs(want);
}

std::string fmt(const char* f, double x) {
  char buf[96];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

ExpLaurent el_from(int rate, std::initializer_list<std::pair<int, long>> terms) {
  ExpLaurent::Terms t;
  for (auto [k, c] : terms) t[k] = Rat(c);
  return ExpLaurent(rate, t);
}

// The n = 0..5 rows, transcribed term by term in powers of 1/x.
Outcome criterion_1() {
  const auto t0 = Clock::now();
  const std::vector<ExpLaurent> expected = {
      el_from(0, {{0, 1}}),
      el_from(0, {{0, 1}, {-1, -2}}),
      el_from(0, {{0, 1}, {-1, -6}, {-2, 12}}),
      el_from(0, {{0, 1}, {-1, -12}, {-2, 60}, {-3, -120}}),
      el_from(0, {{0, 1}, {-1, -20}, {-2, 180}, {-3, -840}, {-4, 1680}}),
      el_from(0, {{0, 1}, {-1, -30}, {-2, 420}, {-3, -3360}, {-4, 15120}, {-5, -30240}}),
  };
  Outcome o;
  for (int n = 0; n <= 5; ++n) {
    if (!(novel_bessel_rep(n) == expected[n])) {
      o.pass = false;
      o.detail += "row " + std::to_string(n) + " differs: " + novel_bessel_rep(n).to_string() + "; ";
    }
  }
  const double dt = seconds_since(t0);
  if (dt >= 1.0) o.pass = false;
  o.detail += fmt("6 rows exact, %.3fs", dt);
  return o;
}

Outcome criterion_2() {
  const auto t0 = Clock::now();
  Outcome o;
  for (int n = 1; n <= 12; ++n) {
    if (!novel_rep_matches_bessel(n)) {
      o.pass = false;
      o.detail += "n=" + std::to_string(n) + " mismatch; ";
    }
  }
  const double dt = seconds_since(t0);
  if (dt >= 5.0) o.pass = false;
  o.detail += fmt("n=1..12, %.3fs", dt);
  return o;
}

ExpLaurent random_laurent(std::mt19937_64& rng) {
  static constexpr int kRates[] = {-2, 0, 1};
  std::uniform_int_distribution<int> rate_index(0, 2);
  std::uniform_int_distribution<int> count(1, 4);
  std::uniform_int_distribution<int> power(-4, 4);
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 9);
  ExpLaurent::Terms t;
  const int m = count(rng);
  for (int i = 0; i < m; ++i) {
    long p = num(rng);
    if (p == 0) p = 1;
    t[power(rng)] = make_rat(p, den(rng));
  }
  return ExpLaurent(kRates[rate_index(rng)], t);
}

Outcome criterion_3() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(20260303);
  Outcome o;
  int checks = 0;
  for (int i = 0; i < 20; ++i) {
    const ExpLaurent g = random_laurent(rng);
    for (int n = 1; n <= 8; ++n) {
      if (!operator_identity_check(n, g)) {
        o.pass = false;
        o.detail += "operator n=" + std::to_string(n) + " g=" + g.to_string() + "; ";
      }
      if (!commutator_check(n, g)) {
        o.pass = false;
        o.detail += "commutator n=" + std::to_string(n) + " g=" + g.to_string() + "; ";
      }
      checks += 2;
    }
  }
  const double dt = seconds_since(t0);
  if (dt >= 5.0) o.pass = false;
  o.detail += std::to_string(checks) + fmt(" exact checks, %.3fs", dt);
  return o;
}

Outcome criterion_4() {
  std::mt19937_64 rng(404);
  std::uniform_real_distribution<double> ua(-2.0, 2.0);
  std::uniform_real_distribution<double> ub(-3.0, 3.0);
  std::uniform_real_distribution<double> ur(-0.1, 0.1);
  Outcome o;
  double worst = 0.0;
  for (int draw = 0; draw < 100; ++draw) {
    const double a = ua(rng);
    double b = ub(rng);
    if (std::fabs(a - b) < 0.2) b = a + (b >= a ? 0.2 : -0.2);
    const double l = ur(rng) * (a - b) / std::exp(a);
    const auto engine =
        lagrange_coefficients_exact(ExactDescriptor{Family::ExpOverLinear, rat_from_double(b)}, rat_from_double(a), 15);
    for (int n = 1; n <= 15; ++n) {
      const double want = engine.numeric_coeff(n) * std::pow(l, n);
      const double got = quadexp_term(n, QuadExpParams{a, b, l});
      worst = std::max(worst, rel_err(got, want));
    }
  }
  o.pass = worst <= 1e-10;
  o.detail = fmt("100 draws, n<=15, max rel err %.2e", worst);
  return o;
}

Outcome criterion_5() {
  const auto t0 = Clock::now();
  Outcome o;
  double worst = 0.0;
  for (double l : {0.05, 0.1, 0.2}) {
    const Equation eq = Equation::quadexp({0.0, -3.0, l});
    const SolveReport r = quadexp_solve({0.0, -3.0, l});
    const double newton = oracle_root(eq, eq.base());
    const double newton_res = std::fabs(eq.residual(newton));
    const double diff = std::fabs(r.root - newton);
    worst = std::max(worst, diff);
    if (!(diff <= 1e-9) || r.termsUsed > 40 || !(newton_res <= 1e-13)) {
      o.pass = false;
      o.detail += fmt("l=%g ", l) + fmt("diff %.2e ", diff) + "terms " + std::to_string(r.termsUsed) +
                  fmt(" oracle residual %.2e; ", newton_res);
    }
  }
  const double dt = seconds_since(t0);
  if (dt >= 1.0) o.pass = false;
  o.detail += fmt("max |series - newton| %.2e", worst) + fmt(", %.3fs", dt);
  return o;
}

Outcome criterion_6() {
  Outcome o;
  const double plain = plainexp_solve({0.0, 0.1}).root;
  const double w = -lambert_w_principal(-0.1);
  const double d1 = std::fabs(plain - w);
  const double b = -1e6;
  const double l = 0.1 * std::fabs(b);
  const double quad = quadexp_solve({0.0, b, l}).root;
  const double l_eff = l * std::exp(0.0) / (-b);
  const double d2 = std::fabs(quad - plainexp_solve({0.0, l_eff}).root);
  o.pass = d1 <= 1e-12 && d2 <= 1e-4;
  o.detail = fmt("|plainexp + W(-0.1)| %.2e", d1) + fmt(", |quadexp(b=-1e6) - plainexp| %.2e", d2);
  return o;
}

struct FamilyWitness {
  std::string name;
  std::function<double(int)> engine;   // c_n from the Lagrange engine (l = 1)
  std::function<double(int)> closed;   // closed-form term at l = 1
  std::function<double(int)> printed;  // published form at l = 1, empty if none
};

std::vector<FamilyWitness> witnesses() {
  std::vector<FamilyWitness> w;
  for (auto [s, t] : {std::pair{0.0, 0.5}, std::pair{-1.0, 0.5}, std::pair{0.3, -1.2}}) {
    auto eng = std::make_shared<ExactSeriesSolution>(lagrange_coefficients_exact(
        ExactDescriptor{Family::ExpTimesLinear, rat_from_double(t)}, rat_from_double(s), 12));
    const RatioExpParams p{s, t, 1.0};
    w.push_back({"ratioexp(s=" + format_number(s) + ",t=" + format_number(t) + ")",
                 [eng](int n) { return eng->numeric_coeff(n); }, [p](int n) { return ratioexp_term(n, p); },
                 [p](int n) { return ratioexp_term_as_printed(n, p); }});
  }
  for (double a : {0.5, -0.8, 1.25}) {
    auto eng = std::make_shared<ExactSeriesSolution>(
        lagrange_coefficients_exact(ExactDescriptor{Family::Gauss, Rat(0)}, rat_from_double(a), 12));
    const ScalarShiftParams p{a, 1.0};
    w.push_back({"gauss(a=" + format_number(a) + ")", [eng](int n) { return eng->numeric_coeff(n); },
                 [p](int n) { return gauss_term(n, p); }, [p](int n) { return gauss_term_as_printed(n, p); }});
  }
  for (double a : {0.3, 0.0, -0.5}) {
    auto eng = std::make_shared<SeriesSolution>(lagrange_coefficients(Descriptor{Family::DoubleExp, 0.0}, a, 12));
    const ScalarShiftParams p{a, 1.0};
    w.push_back({"doubleexp(a=" + format_number(a) + ")", [eng](int n) { return eng->coeff(n); },
                 [p](int n) { return doubleexp_term(n, p); },
                 [p](int n) { return doubleexp_term_as_printed(n, p); }});
  }
  return w;
}

Outcome criterion_7() {
  Outcome o;
  double worst = 0.0;
  for (const auto& fw : witnesses()) {
    for (int n = 1; n <= 12; ++n) {
      const double e = rel_err(fw.closed(n), fw.engine(n));
      if (e > 1e-12) {
        o.pass = false;
        o.detail += fw.name + " n=" + std::to_string(n) + fmt(" rel %.2e; ", e);
      }
      worst = std::max(worst, e);
    }
  }
  // The first witness of each family is the errata witness.
  const auto all = witnesses();
  double smallest_gap = INFINITY;
  for (std::size_t i : {0u, 3u, 6u}) {
    const double gap = rel_err(all[i].printed(2), all[i].engine(2));
    smallest_gap = std::min(smallest_gap, gap);
    if (!(gap > 1e-3)) {
      o.pass = false;
      o.detail += all[i].name + fmt(" printed form agrees at n=2 (%.2e); ", gap);
    }
  }
  const auto errata = errata_report();
  for (const char* id : {"ratioexp-laguerre-series", "gauss-series", "doubleexp-touchard-series"}) {
    bool found = false;
    for (const auto& e : errata) found = found || (e.claimId == id && e.status == "confirmed");
    if (!found) {
      o.pass = false;
      o.detail += std::string("errata entry ") + id + " missing or not confirmed; ";
    }
  }
  o.detail += fmt("9 witness sets, max rel err %.2e", worst) + fmt(", smallest n=2 printed gap %.2e", smallest_gap);
  return o;
}

Outcome criterion_8() {
  Outcome o;
  const auto plain = lagrange_coefficients(Descriptor{Family::PlainExp, 0.0}, 0.0, kDefaultOrder);
  const RadiusEstimate r = radius_estimate(plain);
  const double e1 = rel_err(r.estimate, std::exp(-1.0));
  std::vector<double> geometric;
  for (int n = 1; n <= kDefaultOrder; ++n) geometric.push_back(std::pow(2.5, n));
  const RadiusEstimate g = radius_estimate(geometric);
  const double e2 = rel_err(g.estimate, 0.4);
  o.pass = e1 <= 0.05 && e2 <= 0.01;
  o.detail = "plainexp " + format_number(r.estimate) + " (" + method_name(r.method) + fmt(", rel %.2e)", e1) +
             ", geometric " + format_number(g.estimate) + fmt(" (rel %.2e)", e2);
  return o;
}

Outcome criterion_9() {
  Outcome o;
  Equation eq = Equation::quadexp({0.0, -3.0, 1.0});
  const double radius = radius_estimate(series_coefficients(eq, kDefaultOrder)).estimate;
  eq.l = 0.8 * radius;
  const auto terms = series_terms(eq, 25);
  std::vector<double> partial;
  double s = eq.base();
  for (double t : terms) {
    s += t;
    partial.push_back(s);
  }
  const double root = oracle_root(eq, eq.base());
  const double raw = std::fabs(s - root);
  const double acc = std::fabs(wynn_epsilon(partial) - root);
  const double digits = acc == 0.0 ? INFINITY : std::log10(raw / acc);
  o.pass = digits >= 2.0;
  o.detail = "quadexp a=0 b=-3 l=" + format_number(eq.l) + fmt(": raw %.2e", raw) + fmt(", wynn %.2e", acc) +
             fmt(", gain %.1f digits", digits);
  return o;
}

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Run r;
  r.code = cli::run_command(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

bool solve_schema(const nlohmann::json& j) {
  static const std::vector<std::string> keys = {"family",    "params",    "root",        "termsUsed", "residual",
                                                "converged", "branch",    "accelerated", "warnings"};
  if (!j.is_object() || j.size() != keys.size()) return false;
  for (const auto& k : keys) {
    if (!j.contains(k)) return false;
  }
  if (!j["family"].is_string() || !j["params"].is_object() || !j["termsUsed"].is_number_integer() ||
      !j["converged"].is_boolean() || !j["branch"].is_string() || !j["accelerated"].is_boolean() ||
      !j["warnings"].is_array()) {
    return false;
  }
  for (const auto& [k, v] : j["params"].items()) {
    if (!v.is_number()) return false;
  }
  for (const auto& w : j["warnings"]) {
    if (!w.is_string()) return false;
  }
  return (j["root"].is_number() || j["root"].is_null()) && (j["residual"].is_number() || j["residual"].is_null());
}

bool verify_schema(const nlohmann::json& j) {
  if (!j.is_object() || !j["identities"].is_array() || !j["errata"].is_array() || !j["passed"].is_boolean()) {
    return false;
  }
  for (const auto& c : j["identities"]) {
    if (!c["check"].is_string() || !c["n"].is_number_integer() || !c["passed"].is_boolean()) return false;
  }
  for (const auto& e : j["errata"]) {
    for (const char* k : {"claimId", "paperLocation", "printedForm", "verifiedForm", "status"}) {
      if (!e.contains(k) || !e[k].is_string()) return false;
    }
  }
  return true;
}

bool round_trip(const std::string& text) {
  const auto j = nlohmann::ordered_json::parse(text);
  return j.dump() + "\n" == text;
}

Outcome criterion_10() {
  Outcome o;
  struct Case {
    std::string label;
    std::vector<std::string> args;
    int expected;
    std::function<bool(const nlohmann::json&)> schema;
  };
  const std::vector<Case> cases = {
      {"valid solve", {"solve", "--family", "quadexp", "--a", "0", "--b", "-3", "--l", "0.1"}, 0, solve_schema},
      {"a=b", {"solve", "--family", "quadexp", "--a", "1", "--b", "1", "--l", "0.1"}, 1, nullptr},
      // Branch points of x(x+3)e^{-x} sit at l ~ 1.52 and l ~ -16.1, so l = 20 is outside both discs.
      {"divergent l", {"solve", "--family", "quadexp", "--a", "0", "--b", "-3", "--l", "20"}, 1, solve_schema},
      {"verify", {"verify", "--suite", "all"}, 0, verify_schema},
  };
  std::string codes;
  for (const auto& c : cases) {
    const Run first = run(c.args);
    const Run second = run(c.args);
    codes += (codes.empty() ? "" : "/") + std::to_string(first.code);
    if (first.code != c.expected) {
      o.pass = false;
      o.detail += c.label + ": exit " + std::to_string(first.code) + "; ";
    }
    if (first.out != second.out) {
      o.pass = false;
      o.detail += c.label + ": output not repeatable; ";
    }
    if (c.schema) {
      try {
        if (!c.schema(nlohmann::json::parse(first.out))) {
          o.pass = false;
          o.detail += c.label + ": schema mismatch; ";
        }
        if (!round_trip(first.out)) {
          o.pass = false;
          o.detail += c.label + ": round trip changed bytes; ";
        }
      } catch (const nlohmann::json::exception& e) {
        o.pass = false;
        o.detail += c.label + ": invalid JSON (" + e.what() + "); ";
      }
    } else if (!first.out.empty() || first.err.find("DegenerateParams") == std::string::npos) {
      o.pass = false;
      o.detail += c.label + ": expected a DegenerateParams diagnostic on stderr only; ";
    }
  }
  o.detail += "exit codes " + codes;
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"tabulated novel Bessel rows", criterion_1},
      {"novel representation equals Bessel polynomial", criterion_2},
      {"operator identity and commutators", criterion_3},
      {"quadexp closed-form terms vs Lagrange engine", criterion_4},
      {"quadexp root vs Newton", criterion_5},
      {"Lambert limit", criterion_6},
      {"corrected closed forms and errata regression", criterion_7},
      {"radius estimation", criterion_8},
      {"Wynn acceleration", criterion_9},
      {"CLI contract", criterion_10},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failures += o.pass ? 0 : 1;
    std::printf("[%s] %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
