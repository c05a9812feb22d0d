# Copyright 2026 The glambert Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Series solvers for generalized Lambert-W equations."""

import json

from ._core import (
    ContractViolation,
    DegenerateParams,
    GlambertError,
    InsufficientTerms,
    OutOfBranch,
    PoleAtBase,
    SolveReport,
    bessel_poly,
    identity_suite,
    lambert_w,
    novel_bessel_rep,
    novel_rep_matches_bessel,
    radius_estimate,
    run_command,
    series_coefficients,
    solve,
    wynn_epsilon,
)
from ._core import compare as _compare
from ._core import errata_report as _errata_report

__all__ = [
    "ContractViolation",
    "DegenerateParams",
    "GlambertError",
    "InsufficientTerms",
    "OutOfBranch",
    "PoleAtBase",
    "SolveReport",
    "bessel_poly",
    "compare",
    "errata_report",
    "identity_suite",
    "lambert_w",
    "novel_bessel_rep",
    "novel_rep_matches_bessel",
    "radius_estimate",
    "run_command",
    "series_coefficients",
    "solve",
    "wynn_epsilon",
]


def compare(family, **kwargs):
    """Series root against the Newton oracle as a dict."""
    return json.loads(_compare(family, **kwargs))


def errata_report():
    return json.loads(_errata_report())
