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

#include <optional>

#include "glambert/equations.hpp"
#include "glambert/numeric.hpp"
#include "glambert/solvers.hpp"

namespace glambert {

/// Series solution side by side with the Newton oracle.
struct ComparisonRecord {
  SolveReport report;
  double seriesRoot = 0.0;
  /// NaN when the oracle found no root near the series root.
  double newtonRoot = 0.0;
  double difference = 0.0;
  std::optional<double> acceleratedRoot;
  std::optional<RadiusEstimate> radius;
  std::optional<double> paperAsPrintedRoot;
};

/// Newton root of eq near x0: grows a window around x0 until the residual
/// changes sign, then runs the safeguarded solver at a tolerance scaled to
/// the residual's rounding level (never below 1e-13).
double oracle_root(const Equation& eq, double x0);

ComparisonRecord compare_report(const Equation& eq, const SolveOptions& opts = {});

}  // namespace glambert
