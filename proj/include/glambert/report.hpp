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

#include "json.hpp"

#include "glambert/compare.hpp"
#include "glambert/identity_lab.hpp"
#include "glambert/numeric.hpp"
#include "glambert/solvers.hpp"

namespace glambert {

using Json = nlohmann::ordered_json;

/// Field order: family, params, root, termsUsed, residual, converged,
/// branch, accelerated, warnings. Non-finite numbers become null.
Json to_json(const SolveReport& r);
/// SolveReport fields followed by seriesRoot, newtonRoot, difference,
/// acceleratedRoot, radius, paperAsPrintedRoot.
Json to_json(const ComparisonRecord& c);
Json to_json(const RadiusEstimate& r);
Json to_json(const ErrataEntry& e);
Json to_json(const std::vector<ErrataEntry>& entries);

/// Single-line UTF-8 document.
std::string dump(const Json& j);

/// "%.17g"; never locale dependent.
std::string format_number(double x);

/// Header n,term,partial_sum,abs_residual then one row per summand.
std::string terms_csv(const Equation& eq, double base, const std::vector<double>& terms);
std::string terms_text(const Equation& eq, double base, const std::vector<double>& terms);

std::string to_text(const SolveReport& r);
std::string to_text(const ComparisonRecord& c);

}  // namespace glambert
