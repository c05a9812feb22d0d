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

#include "glambert/cli.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <thread>

#include "CLI11.hpp"
#include "glambert/compare.hpp"
#include "glambert/identity_lab.hpp"
#include "glambert/numeric.hpp"
#include "glambert/report.hpp"
#include "glambert/solvers.hpp"

namespace glambert::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CliConfig {
  std::string command;
  std::string family;
  std::map<std::string, std::optional<double>> params{{"a", {}}, {"b", {}}, {"l", {}}, {"s", {}}, {"t", {}}};
  int terms = kDefaultOrder;
  double tol = 1e-12;
  bool accel = false;
  std::optional<std::string> format;
  bool paperAsPrinted = false;
  std::string branch = "auto";
  // verify
  std::string suite = "all";
  int max_n = 10;
  // radius
  std::string method = "auto";
  // sweep
  std::optional<double> l_from;
  std::optional<double> l_to;
  int points = 11;
  int threads = 1;
  bool sweep_compare = false;
};

const std::vector<std::string> kFamilies = {"quadexp", "ratioexp", "gauss", "doubleexp", "besselrecip", "plainexp"};

std::vector<std::string> family_params(const std::string& family) {
  if (family == "quadexp") return {"a", "b", "l"};
  if (family == "ratioexp") return {"s", "t", "l"};
  return {"a", "l"};
}

std::string flag_list(const std::vector<std::string>& names) {
  std::string s;
  for (const auto& n : names) s += (s.empty() ? "--" : " --") + n;
  return s;
}

void add_family_options(CLI::App* sub, CliConfig& cfg, bool with_l) {
  sub->add_option("--family", cfg.family, "Equation family")
      ->required()
      ->check(CLI::IsMember(kFamilies));
  for (const char* name : {"a", "b", "s", "t"}) {
    sub->add_option(std::string("--") + name, cfg.params[name], std::string("Parameter ") + name);
  }
  if (with_l) sub->add_option("--l", cfg.params["l"], "Coupling l");
  sub->add_option("--terms", cfg.terms, "Maximum number of series terms")->check(CLI::PositiveNumber);
  sub->add_option("--tol", cfg.tol, "Relative stopping tolerance");
  sub->add_option("--branch", cfg.branch, "Series branch (quadexp)")
      ->check(CLI::IsMember({"auto", "baseA", "baseB"}));
  sub->add_flag("--paperAsPrinted", cfg.paperAsPrinted, "Sum the uncorrected published series (diagnostic)");
}

void add_format(CLI::App* sub, CliConfig& cfg, std::vector<std::string> allowed) {
  sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember(allowed));
}

/// Checks the parameter flags against the family and builds the equation.
Equation build_equation(const CliConfig& cfg, bool l_required) {
  auto expected = family_params(cfg.family);
  if (!l_required) expected.erase(std::remove(expected.begin(), expected.end(), "l"), expected.end());
  const std::set<std::string> wanted(expected.begin(), expected.end());
  for (const auto& [name, value] : cfg.params) {
    if (value && !wanted.count(name) && !(name == "l" && !l_required)) {
      throw UsageError("--" + name + " is not a parameter of family " + cfg.family + " (expected " +
                       flag_list(expected) + ")");
    }
  }
  for (const auto& name : expected) {
    if (!cfg.params.at(name)) {
      throw UsageError("missing --" + name + " for family " + cfg.family + " (expected " + flag_list(expected) +
                       ")");
    }
  }
  auto get = [&](const char* n) { return cfg.params.at(n).value_or(0.0); };
  Equation eq;
  eq.kind = kind_from_name(cfg.family);
  eq.a = get("a");
  eq.b = get("b");
  eq.s = get("s");
  eq.t = get("t");
  eq.l = get("l");
  return eq;
}

SolveOptions solve_options(const CliConfig& cfg) {
  if (!(cfg.tol > 0.0)) throw UsageError("--tol must be positive");
  SolveOptions o;
  o.maxTerms = cfg.terms;
  o.tol = cfg.tol;
  o.accelerate = cfg.accel;
  o.paperAsPrinted = cfg.paperAsPrinted;
  o.branch = cfg.branch == "baseA" ? Branch::BaseA : cfg.branch == "baseB" ? Branch::BaseB : Branch::Auto;
  return o;
}

int cmd_solve(const CliConfig& cfg, std::ostream& out) {
  const Equation eq = build_equation(cfg, true);
  const SolveReport r = solve(eq, solve_options(cfg));
  if (cfg.format.value_or("json") == "text") {
    out << to_text(r);
  } else {
    out << dump(to_json(r)) << '\n';
  }
  return r.converged ? 0 : 1;
}

int cmd_terms(const CliConfig& cfg, std::ostream& out) {
  const Equation eq = build_equation(cfg, true);
  const SolveOptions opts = solve_options(cfg);
  if (eq.kind == EquationKind::QuadExp && eq.a == eq.b) {
    throw DegenerateParams("quadexp closed form needs a != b");
  }
  const auto terms = series_terms(eq, cfg.terms, opts);
  const double base = series_base(eq, opts);
  const std::string fmt = cfg.format.value_or("csv");
  if (fmt == "csv") {
    out << terms_csv(eq, base, terms);
  } else if (fmt == "text") {
    out << terms_text(eq, base, terms);
  } else {
    Json j = Json::object();
    j["family"] = cfg.family;
    Json params = Json::object();
    for (const auto& [k, v] : eq.params()) params[k] = v;
    j["params"] = params;
    j["base"] = base;
    Json rows = Json::array();
    double sum = base;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      sum += terms[i];
      Json row = Json::object();
      row["n"] = i + 1;
      row["term"] = std::isfinite(terms[i]) ? Json(terms[i]) : Json(nullptr);
      row["partial_sum"] = std::isfinite(sum) ? Json(sum) : Json(nullptr);
      const double res = std::fabs(eq.residual(sum));
      row["abs_residual"] = std::isfinite(res) ? Json(res) : Json(nullptr);
      rows.push_back(row);
    }
    j["terms"] = rows;
    out << dump(j) << '\n';
  }
  return 0;
}

int cmd_verify(const CliConfig& cfg, std::ostream& out) {
  if (cfg.max_n < 1) throw UsageError("--max-n must be at least 1");
  const bool identities = cfg.suite == "identities" || cfg.suite == "all";
  bool passed = true;
  Json j = Json::object();
  std::vector<IdentityCheck> checks;
  std::vector<ErrataEntry> entries;
  if (identities) {
    checks = run_identity_suite(cfg.max_n);
    Json arr = Json::array();
    for (const auto& c : checks) {
      Json row = Json::object();
      row["check"] = c.name;
      row["n"] = c.n;
      row["passed"] = c.passed;
      arr.push_back(row);
      passed = passed && c.passed;
    }
    j["identities"] = arr;
  }
  // Errata entries document published discrepancies; they never fail the run.
  entries = errata_report();
  j["errata"] = to_json(entries);
  j["passed"] = passed;
  if (cfg.format.value_or("json") == "text") {
    for (const auto& c : checks) out << (c.passed ? "PASS " : "FAIL ") << c.name << " n=" << c.n << '\n';
    for (const auto& e : entries) {
      out << "ERRATUM " << e.claimId << " [" << e.paperLocation << "] " << e.status << '\n'
          << "  printed:  " << e.printedForm << '\n'
          << "  verified: " << e.verifiedForm << '\n';
    }
    out << (passed ? "all identity checks passed" : "identity checks FAILED") << '\n';
  } else {
    out << dump(j) << '\n';
  }
  return passed ? 0 : 1;
}

int cmd_radius(const CliConfig& cfg, std::ostream& out) {
  const Equation eq = build_equation(cfg, false);
  const SolveOptions opts = solve_options(cfg);
  const RadiusMethod method = cfg.method == "ratio"       ? RadiusMethod::Ratio
                              : cfg.method == "dombSykes" ? RadiusMethod::DombSykes
                                                          : RadiusMethod::Auto;
  const RadiusEstimate est = radius_estimate(series_coefficients(eq, cfg.terms, opts), method);
  if (cfg.format.value_or("json") == "text") {
    out << "radius " << format_number(est.estimate) << " method " << method_name(est.method) << " nUsed "
        << est.nUsed << " confidence " << confidence_name(est.confidence) << '\n';
  } else {
    Json j = Json::object();
    j["family"] = cfg.family;
    Json params = Json::object();
    for (const auto& [k, v] : eq.params()) {
      if (k != "l") params[k] = v;
    }
    j["params"] = params;
    j["terms"] = cfg.terms;
    j["radius"] = to_json(est);
    out << dump(j) << '\n';
  }
  return 0;
}

int cmd_compare(const CliConfig& cfg, std::ostream& out) {
  const Equation eq = build_equation(cfg, true);
  const ComparisonRecord rec = compare_report(eq, solve_options(cfg));
  if (cfg.format.value_or("json") == "text") {
    out << to_text(rec);
  } else {
    out << dump(to_json(rec)) << '\n';
  }
  return rec.report.converged && std::isfinite(rec.newtonRoot) ? 0 : 1;
}

int cmd_sweep(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!cfg.l_from || !cfg.l_to) throw UsageError("sweep needs --l-from and --l-to");
  if (cfg.points < 1) throw UsageError("--points must be at least 1");
  if (cfg.threads < 1) throw UsageError("--threads must be at least 1");
  Equation base_eq = build_equation(cfg, false);
  const SolveOptions opts = solve_options(cfg);
  const double step = cfg.points == 1 ? 0.0 : (*cfg.l_to - *cfg.l_from) / (cfg.points - 1);

  auto evaluate = [&](int i) -> std::string {
    Equation eq = base_eq;
    eq.l = (i == cfg.points - 1) ? *cfg.l_to : *cfg.l_from + i * step;
    try {
      return cfg.sweep_compare ? dump(to_json(compare_report(eq, opts))) : dump(to_json(solve(eq, opts)));
    } catch (const Error& e) {
      Json j = Json::object();
      j["family"] = cfg.family;
      j["l"] = eq.l;
      j["error"] = e.what();
      return dump(j);
    }
  };

  // Workers produce whole lines; only this thread writes to `out`.
  std::vector<std::string> lines(cfg.points);
  const int workers = std::min(cfg.threads, cfg.points);
  if (workers == 1) {
    for (int i = 0; i < cfg.points; ++i) out << evaluate(i) << '\n';
    return 0;
  }
  std::vector<std::future<void>> futures;
  for (int w = 0; w < workers; ++w) {
    futures.push_back(std::async(std::launch::async, [&, w] {
      for (int i = w; i < cfg.points; i += workers) lines[i] = evaluate(i);
    }));
  }
  for (auto& f : futures) f.get();
  for (const auto& line : lines) out << line << '\n';
  (void)err;
  return 0;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Series solvers for generalized Lambert-W equations"};
  app.name("glambert");
  app.require_subcommand(1, 1);
  CliConfig cfg;

  auto* solve_cmd = app.add_subcommand("solve", "Solve one equation by its root series");
  add_family_options(solve_cmd, cfg, true);
  solve_cmd->add_flag("--accel", cfg.accel, "Wynn epsilon acceleration of the partial sums");
  add_format(solve_cmd, cfg, {"json", "text"});

  auto* terms_cmd = app.add_subcommand("terms", "Tabulate series terms and partial sums");
  add_family_options(terms_cmd, cfg, true);
  add_format(terms_cmd, cfg, {"csv", "json", "text"});

  auto* verify_cmd = app.add_subcommand("verify", "Run the exact identity checks and the errata report");
  verify_cmd->add_option("--suite", cfg.suite, "identities, errata or all")
      ->check(CLI::IsMember({"identities", "errata", "all"}));
  verify_cmd->add_option("--max-n", cfg.max_n, "Largest n checked");
  add_format(verify_cmd, cfg, {"json", "text"});

  auto* radius_cmd = app.add_subcommand("radius", "Estimate the radius of convergence in l");
  add_family_options(radius_cmd, cfg, true);
  radius_cmd->add_option("--method", cfg.method, "auto, ratio or dombSykes")
      ->check(CLI::IsMember({"auto", "ratio", "dombSykes"}));
  add_format(radius_cmd, cfg, {"json", "text"});

  auto* compare_cmd = app.add_subcommand("compare", "Series root against the Newton oracle");
  add_family_options(compare_cmd, cfg, true);
  compare_cmd->add_flag("--accel", cfg.accel, "Wynn epsilon acceleration of the partial sums");
  add_format(compare_cmd, cfg, {"json", "text"});

  auto* sweep_cmd = app.add_subcommand("sweep", "Solve over a grid of l values, one JSON record per line");
  add_family_options(sweep_cmd, cfg, false);
  sweep_cmd->add_flag("--accel", cfg.accel, "Wynn epsilon acceleration of the partial sums");
  sweep_cmd->add_option("--l-from", cfg.l_from, "First l")->required();
  sweep_cmd->add_option("--l-to", cfg.l_to, "Last l")->required();
  sweep_cmd->add_option("--points", cfg.points, "Number of grid points (endpoints included)");
  sweep_cmd->add_option("--threads", cfg.threads, "Worker threads");
  sweep_cmd->add_flag("--compare", cfg.sweep_compare, "Emit comparison records instead of solve reports");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << "run 'glambert --help' for the expected flags\n";
    return 2;
  }

  try {
    if (solve_cmd->parsed()) return cmd_solve(cfg, out);
    if (terms_cmd->parsed()) return cmd_terms(cfg, out);
    if (verify_cmd->parsed()) return cmd_verify(cfg, out);
    if (radius_cmd->parsed()) return cmd_radius(cfg, out);
    if (compare_cmd->parsed()) return cmd_compare(cfg, out);
    if (sweep_cmd->parsed()) return cmd_sweep(cfg, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const ContractViolation& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const DegenerateParams& e) {
    err << "error: DegenerateParams: " << e.what() << '\n';
    return 1;
  } catch (const PoleAtBase& e) {
    err << "error: PoleAtBase: " << e.what() << '\n';
    return 1;
  } catch (const InsufficientTerms& e) {
    err << "error: InsufficientTerms: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  err << "usage error: no command given\n";
  return 2;
}

}  // namespace glambert::cli
