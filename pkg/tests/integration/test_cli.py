"""End-to-end tests of the ricci-sig command line."""

import json

import pytest

from src.ricci_signature import __version__
from src.ricci_signature.verification.conformance import ConformanceReport, IdentityRecord


@pytest.mark.integration
class TestTopLevel:

    def test_version(self, invoke):
        result = invoke("--version")
        assert result.exit_code == 0
        assert __version__ in result.stdout

    def test_missing_config_file(self, runner):
        from src.ricci_signature.cli.main import cli

        result = runner.invoke(cli, ["--config", "does-not-exist.yaml", "catalog"])
        assert result.exit_code == 2

    def test_errors_go_to_stderr_only(self, invoke):
        result = invoke("ricci", "--algebra", "A9_9", "--output", "json")
        assert result.exit_code == 2
        assert result.stdout == ""
        assert "A9_9" in result.stderr


@pytest.mark.integration
class TestCatalogCommand:

    def test_table(self, invoke):
        result = invoke("catalog")
        assert result.exit_code == 0
        assert "4A1" in result.stdout
        assert "Total: 24 families" in result.stdout

    def test_json(self, invoke):
        result = invoke("catalog", "--output", "json")
        data = json.loads(result.stdout)
        assert data["schema"] == "ricci-sig/1"
        names = {row["name"] for row in data["algebras"]}
        assert {"4A1", "A4_9", "A4_2[-2]"} <= names

    def test_csv_to_file(self, invoke, tmp_path):
        out = tmp_path / "catalog.csv"
        result = invoke("catalog", "--output", "csv", "--out-file", str(out))
        assert result.exit_code == 0
        assert result.stdout == ""
        assert out.read_text().startswith("name,kind,params,constraints")


@pytest.mark.integration
class TestRicciCommand:

    def test_abelian(self, invoke):
        result = invoke("ricci", "--algebra", "4A1", "--output", "json")
        assert result.exit_code == 0
        data = json.loads(result.stdout)
        assert data["signature"] == "(0,0,0,0)"
        assert data["index"] == 11
        assert data["eigenvalues"] == [0.0, 0.0, 0.0, 0.0]

    def test_su2_plus_r(self, invoke):
        data = json.loads(invoke("ricci", "--algebra", "A3_9+A1", "--output", "json").stdout)
        assert data["index"] == 14
        assert data["scalar_curvature"] == pytest.approx(1.5)

    def test_inline_metric(self, invoke):
        gram = "0.5 0 0 0 0 0.5 0 0 0 0 1 0 0 0 0 1"
        result = invoke("ricci", "--algebra", "A3_9+A1", "--metric", gram, "--output", "json")
        assert json.loads(result.stdout)["index"] == 12

    def test_metric_file(self, invoke, tmp_path):
        path = tmp_path / "q.json"
        path.write_text(json.dumps([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]))
        result = invoke("ricci", "--algebra", "A3_1+A1", "--metric", str(path), "--output", "csv")
        assert result.exit_code == 0
        assert "(-,-,0,+)" in result.stdout

    def test_canonical_frame(self, invoke):
        result = invoke("ricci", "--algebra", "A4_9", "--beta", "1", "--a", "1", "--b", "1", "--output", "json")
        data = json.loads(result.stdout)
        assert data["index"] == 1
        assert data["eigenvalues"] == pytest.approx([-7.5, -6.0, -4.5, -4.5])

    def test_table_output(self, invoke):
        result = invoke("ricci", "--algebra", "A3_1+A1")
        assert result.exit_code == 0
        assert "Signature:        (-,-,0,+)" in result.stdout
        assert "Index:            5" in result.stdout

    def test_definition_file(self, invoke, tmp_path):
        path = tmp_path / "heis.json"
        path.write_text(json.dumps({"dim": 3, "brackets": [{"i": 1, "j": 2, "out": {"3": 1.0}}]}))
        result = invoke("ricci", "--definition", str(path), "--output", "json")
        data = json.loads(result.stdout)
        assert data["index"] is None
        assert data["eigenvalues"] == pytest.approx([-0.5, -0.5, 0.5])

    @pytest.mark.parametrize(
        "args",
        [
            ["--algebra", "A9_9"],
            ["--algebra", "A4_5", "--alpha", "2", "--beta", "0.5"],
            ["--algebra", "A3_9+A1", "--metric", "1 2 3"],
            ["--algebra", "A3_9+A1", "--metric", "-1 0 0 0 0 1 0 0 0 0 1 0 0 0 0 1"],
            ["--algebra", "A3_9+A1", "--b", "2"],
            ["--algebra", "A4_9", "--beta", "0.5", "--a", "-1"],
            [],
        ],
    )
    def test_input_errors_exit_2(self, invoke, args):
        result = invoke("ricci", *args)
        assert result.exit_code == 2
        assert result.stderr.startswith("Error:")


@pytest.mark.integration
class TestSearchCommand:

    def test_json(self, invoke):
        result = invoke("search", "--algebra", "A3_1+A1", "--budget", "64", "--seed", "1", "--output", "json")
        assert result.exit_code == 0
        data = json.loads(result.stdout)
        assert data["schema"] == "ricci-sig/1"
        assert list(data["found"]) == ["5"]
        assert data["generated_at"] is not None

    def test_no_timestamp_is_byte_stable(self, invoke):
        args = ("search", "--algebra", "A4_9", "--beta", "0.5", "--budget", "64", "--seed", "4",
                "--output", "json", "--no-timestamp")
        first, second = invoke(*args), invoke(*args)
        assert first.exit_code == 0
        assert first.stdout == second.stdout

    def test_workers_do_not_change_output(self, invoke):
        args = ("search", "--algebra", "A3_9+A1", "--budget", "128", "--seed", "2", "--output", "json",
                "--no-timestamp")
        assert invoke(*args).stdout == invoke(*args, "--workers", "3").stdout

    def test_csv_grid(self, invoke):
        result = invoke("search", "--algebra", "4A1", "--budget", "16", "--seed", "0", "--output", "csv")
        header, row = result.stdout.strip().splitlines()
        assert header.startswith("algebra,1,2,3")
        assert row.split(",")[11] == "witnessed"

    def test_seed_required(self, invoke):
        result = invoke("search", "--algebra", "4A1")
        assert result.exit_code == 2


@pytest.mark.integration
class TestVerifyCommand:

    def _report(self, passed):
        record = IdentityRecord(name="det_identity", citation="c", samples=1, max_residual=0.0,
                                tolerance=1e-9, passed=passed)
        return ConformanceReport(seed=0, draws=1, records=[record], passed=passed)

    def test_passing_suite(self, invoke, mocker):
        mocker.patch("src.ricci_signature.cli.commands.verify.run_identities", return_value=self._report(True))
        result = invoke("verify", "identities", "--seed", "0")
        assert result.exit_code == 0
        assert "det_identity" in result.stdout

    def test_failing_suite_exits_1(self, invoke, mocker):
        mocker.patch("src.ricci_signature.cli.commands.verify.run_identities", return_value=self._report(False))
        result = invoke("verify", "identities", "--seed", "0", "--output", "json")
        assert result.exit_code == 1
        assert json.loads(result.stdout)["passed"] is False
        assert "failed" in result.stderr

    def test_unknown_suite(self, invoke):
        assert invoke("verify", "everything", "--seed", "0").exit_code == 2

    def test_seed_required(self, invoke):
        assert invoke("verify", "prop1").exit_code == 2
