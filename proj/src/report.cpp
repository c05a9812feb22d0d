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

#include "glambert/report.hpp"

#include <charconv>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace glambert {

namespace {

Json number(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

Json params_json(const std::vector<std::pair<std::string, double>>& params) {
  Json j = Json::object();
  for (const auto& [k, v] : params) j[k] = number(v);
  return j;
}

}  // namespace

Json to_json(const SolveReport& r) {
  Json j = Json::object();
  j["family"] = r.family;
  j["params"] = params_json(r.params);
  j["root"] = number(r.root);
  j["termsUsed"] = r.termsUsed;
  j["residual"] = number(r.residual);
  j["converged"] = r.converged;
  j["branch"] = branch_name(r.branch);
  j["accelerated"] = r.accelerated;
  j["warnings"] = r.warnings;
  return j;
}

Json to_json(const RadiusEstimate& r) {
  Json j = Json::object();
  j["estimate"] = number(r.estimate);
  j["method"] = method_name(r.method);
  j["nUsed"] = r.nUsed;
  j["confidence"] = confidence_name(r.confidence);
  return j;
}

Json to_json(const ComparisonRecord& c) {
  Json j = to_json(c.report);
  j["seriesRoot"] = number(c.seriesRoot);
  j["newtonRoot"] = number(c.newtonRoot);
  j["difference"] = number(c.difference);
  j["acceleratedRoot"] = c.acceleratedRoot ? number(*c.acceleratedRoot) : Json(nullptr);
  j["radius"] = c.radius ? to_json(*c.radius) : Json(nullptr);
  j["paperAsPrintedRoot"] = c.paperAsPrintedRoot ? number(*c.paperAsPrintedRoot) : Json(nullptr);
  return j;
}

Json to_json(const ErrataEntry& e) {
  Json j = Json::object();
  j["claimId"] = e.claimId;
  j["paperLocation"] = e.paperLocation;
  j["printedForm"] = e.printedForm;
  j["verifiedForm"] = e.verifiedForm;
  j["status"] = e.status;
  return j;
}

Json to_json(const std::vector<ErrataEntry>& entries) {
  Json j = Json::array();
  for (const auto& e : entries) j.push_back(to_json(e));
  return j;
}

std::string dump(const Json& j) { return j.dump(); }

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string terms_csv(const Equation& eq, double base, const std::vector<double>& terms) {
  std::ostringstream os;
  os << "n,term,partial_sum,abs_residual\n";
  double sum = base;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    sum += terms[i];
    os << (i + 1) << ',' << format_number(terms[i]) << ',' << format_number(sum) << ','
       << format_number(std::fabs(eq.residual(sum))) << '\n';
  }
  return os.str();
}

std::string terms_text(const Equation& eq, double base, const std::vector<double>& terms) {
  std::ostringstream os;
  os << std::setw(4) << "n" << std::setw(26) << "term" << std::setw(26) << "partial sum" << std::setw(14)
     << "|residual|" << '\n';
  double sum = base;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    sum += terms[i];
    os << std::setw(4) << (i + 1) << std::setw(26) << format_number(terms[i]) << std::setw(26)
       << format_number(sum) << std::setw(14) << std::setprecision(3) << std::scientific
       << std::fabs(eq.residual(sum)) << std::defaultfloat << '\n';
  }
  return os.str();
}

std::string to_text(const SolveReport& r) {
  std::ostringstream os;
  os << "family      " << r.family << '\n';
  os << "params     ";
  for (const auto& [k, v] : r.params) os << ' ' << k << '=' << format_number(v);
  os << '\n';
  os << "root        " << format_number(r.root) << '\n';
  os << "terms used  " << r.termsUsed << '\n';
  os << "residual    " << format_number(r.residual) << '\n';
  os << "converged   " << (r.converged ? "yes" : "no") << '\n';
  os << "branch      " << branch_name(r.branch) << '\n';
  os << "accelerated " << (r.accelerated ? "yes" : "no") << '\n';
  for (const auto& w : r.warnings) os << "warning     " << w << '\n';
  return os.str();
}

std::string to_text(const ComparisonRecord& c) {
  std::ostringstream os;
  os << to_text(c.report);
  os << "series root " << format_number(c.seriesRoot) << '\n';
  os << "newton root " << format_number(c.newtonRoot) << '\n';
  os << "difference  " << format_number(c.difference) << '\n';
  if (c.acceleratedRoot) os << "accelerated root " << format_number(*c.acceleratedRoot) << '\n';
  if (c.radius) {
    os << "radius      " << format_number(c.radius->estimate) << " (" << method_name(c.radius->method) << ", "
       << confidence_name(c.radius->confidence) << ")\n";
  }
  if (c.paperAsPrintedRoot) os << "printed-form root " << format_number(*c.paperAsPrintedRoot) << '\n';
  return os.str();
}

}  // namespace glambert
