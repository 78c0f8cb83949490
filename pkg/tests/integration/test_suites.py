"""Full verification suites at the default budgets.

Run with ``pytest -m slow``.
"""

import json

import pytest

from src.ricci_signature.search.report import diff_grid, table3_grid
from src.ricci_signature.search.table3 import verify_table3
from src.ricci_signature.verification.conformance import run_identities
from src.ricci_signature.verification.proposition import DEFAULT_GRID, verify_prop1


@pytest.mark.integration
@pytest.mark.slow
class TestRealizabilityGrid:

    @pytest.fixture(scope="class")
    def report(self):
        return verify_table3(budget=2000, seed=0)

    def test_every_row_passes(self, report):
        assert report.passed, [(r.name, r.missing, r.violations) for r in report.rows if not r.passed]

    def test_grid_matches_reference(self, report):
        assert diff_grid(table3_grid(report)) == []

    def test_abelian_row(self, report):
        row = next(r for r in report.rows if r.name == "4A1")
        assert row.witnessed == [11]

    def test_parameterized_rows_use_every_grid_point(self, report):
        row = next(r for r in report.rows if r.name == "A4_6[-2b,b]")
        assert len(row.points) == 5


@pytest.mark.integration
@pytest.mark.slow
class TestBetaRegimes:

    def test_default_grid(self):
        report = verify_prop1(DEFAULT_GRID, budget=5000, seed=1)
        assert report.passed, [r.beta for r in report.results if not r.passed]
        by_beta = {r.beta: r for r in report.results}
        assert by_beta[1.0].witnessed == [1, 2, 3]
        assert by_beta[0.0].witnessed == [1, 2, 3, 4, 5, 6]
        assert by_beta[-0.5].witnessed == [3, 4, 5, 6]


@pytest.mark.integration
@pytest.mark.slow
class TestIdentities:

    def test_default_draws(self):
        report = run_identities(seed=0)
        assert report.passed, report.failures()

    def test_cli(self, invoke):
        result = invoke("verify", "identities", "--seed", "0", "--budget", "1000", "--output", "json",
                        "--no-timestamp")
        assert result.exit_code == 0, result.stderr
        assert json.loads(result.stdout)["passed"] is True
