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

import json
import math

import pytest

import glambert


def test_solve_quadexp_matches_lambert_limit_inputs():
    r = glambert.solve("quadexp", a=0.0, b=-3.0, l=0.1)
    assert r.converged
    assert r.branch == "baseA"
    x = r.root
    assert abs(x * (x + 3) - 0.1 * math.exp(x)) < 1e-12


def test_plainexp_against_w():
    r = glambert.solve("plainexp", a=0.0, l=0.1)
    assert abs(r.root + glambert.lambert_w(-0.1)) < 1e-12


def test_report_json_field_order():
    doc = glambert.solve("gauss", a=0.5, l=0.2).to_json()
    assert list(json.loads(doc)) == [
        "family", "params", "root", "termsUsed", "residual",
        "converged", "branch", "accelerated", "warnings",
    ]


def test_degenerate_parameters_raise():
    with pytest.raises(glambert.DegenerateParams):
        glambert.solve("quadexp", a=1.0, b=1.0, l=0.1)


def test_compare_and_radius():
    rec = glambert.compare("ratioexp", s=0.0, t=1.0, l=0.05)
    assert rec["difference"] <= 1e-9
    coeffs = glambert.series_coefficients("plainexp", a=0.0)
    est = glambert.radius_estimate(coeffs)
    assert abs(est["estimate"] - math.exp(-1)) < 0.05 * math.exp(-1)


def test_wynn_on_geometric_sums():
    sums = [sum(0.5 ** k for k in range(n + 1)) for n in range(6)]
    assert abs(glambert.wynn_epsilon(sums) - 2.0) < 1e-10


def test_exact_identities():
    assert glambert.bessel_poly(2) == ["1", "3", "3"]
    assert glambert.novel_bessel_rep(2) == [(-2, "12"), (-1, "-6"), (0, "1")]
    assert all(glambert.novel_rep_matches_bessel(n) for n in range(1, 9))
    assert all(passed for _, _, passed in glambert.identity_suite(6))
    ids = {e["claimId"] for e in glambert.errata_report()}
    assert "gauss-series" in ids


def test_cli_in_process():
    code, out, err = glambert.run_command(["solve", "--family", "plainexp", "--a", "0", "--l", "0.5"])
    assert code == 1
    assert json.loads(out)["converged"] is False
    code, _, err = glambert.run_command(["solve", "--family", "plainexp", "--a", "0"])
    assert code == 2
    assert "--l" in err
