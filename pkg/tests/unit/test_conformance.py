"""Unit tests for the identities conformance suite."""

import pytest

from src.ricci_signature.algebra.catalog import Family
from src.ricci_signature.config.models import SearchConfig
from src.ricci_signature.errors import InvalidParams
from src.ricci_signature.search.realizability import ScalarSurvey
from src.ricci_signature.verification.conformance import (
    CHECKS,
    DEFAULT_SURVEY_BUDGET,
    run_identities,
    scalar_sign_offence,
)

CLOSED_FORM = ["master_oracle", "det_identity", "charpoly", "lemma2", "beta_half", "open_blocks", "beta_one"]


@pytest.fixture(scope="module")
def closed_form_report():
    return run_identities(seed=11, draws=40, only=CLOSED_FORM)


@pytest.mark.unit
class TestClosedFormChecks:

    def test_all_pass(self, closed_form_report):
        assert closed_form_report.passed, closed_form_report.failures()

    def test_record_names(self, closed_form_report):
        names = {r.name for r in closed_form_report.records}
        assert {
            "master_oracle",
            "mean_curvature",
            "det_identity",
            "second_eigenvalue_negative",
            "fourth_diagonal_negative",
            "charpoly_b2",
            "charpoly_b3",
            "charpoly_ab1",
            "lemma2_decomposition",
            "lemma2_h1_nonnegative",
            "lemma2_b_independence",
            "lemma2_h2_closed",
            "lemma2_t0_certificate",
            "beta_half_blocks",
            "open_blocks",
            "open_block_invariants",
            "beta1_submatrix",
            "beta1_rows",
        } <= names

    def test_residuals_within_tolerance(self, closed_form_report):
        for record in closed_form_report.records:
            if record.max_residual is not None and record.name.startswith(("master", "charpoly", "det")):
                assert record.max_residual <= record.tolerance, record.name

    def test_deterministic(self, closed_form_report):
        again = run_identities(seed=11, draws=40, only=CLOSED_FORM)
        assert again.model_dump() == closed_form_report.model_dump()


@pytest.mark.unit
class TestSurveyChecks:

    def test_scalar_and_negative_pair(self):
        report = run_identities(
            seed=2, budget=128, search=SearchConfig(chunk_size=128), only=["scalar_sign", "negative_pair"]
        )
        assert [r.name for r in report.records] == ["scalar_curvature_sign", "negative_pair"]
        assert report.passed, report.failures()
        assert report.records[1].max_residual < 0.0

    def test_default_budget_matches_acceptance_run(self):
        assert DEFAULT_SURVEY_BUDGET == 10_000


def _survey(negative=0, zero=0, positive=0):
    return ScalarSurvey(family="x", samples=negative + zero + positive, minimum=-1.0, maximum=1.0,
                        negative=negative, zero=zero, positive=positive)


@pytest.mark.unit
class TestScalarSignRule:

    def test_zero_sample_is_an_offence_for_strict_families(self):
        assert scalar_sign_offence(Family.A3_1, _survey(negative=99, zero=1)) == "0 positive, 1 zero"

    def test_positive_sample_is_an_offence_for_strict_families(self):
        assert scalar_sign_offence(Family.A4_9, _survey(negative=99, positive=1)) is not None

    def test_all_negative_passes(self):
        assert scalar_sign_offence(Family.A2_2A1, _survey(negative=100)) is None

    def test_abelian_must_be_flat(self):
        assert scalar_sign_offence(Family.A1x4, _survey(zero=100)) is None
        assert scalar_sign_offence(Family.A1x4, _survey(zero=99, negative=1)) is not None

    def test_flat_metrics_allowed_on_euclidean_motions(self):
        assert scalar_sign_offence(Family.A3_6, _survey(negative=99, zero=1)) is None
        assert scalar_sign_offence(Family.A3_6, _survey(negative=99, positive=1)) == "1 positive"

    def test_su2_needs_both_signs(self):
        assert scalar_sign_offence(Family.A3_9, _survey(negative=50, positive=50)) is None
        assert scalar_sign_offence(Family.A3_9, _survey(negative=100)) == "one sign only"


@pytest.mark.unit
class TestRunner:

    def test_check_table(self):
        assert [name for name, _, _ in CHECKS][:2] == ["master_oracle", "det_identity"]
        streams = [stream for _, stream, _ in CHECKS]
        assert len(set(streams)) == len(streams)

    def test_only_filters(self):
        report = run_identities(seed=0, draws=5, only=["beta_half"])
        assert [r.name for r in report.records] == ["beta_half_blocks"]
        assert report.draws == 5

    def test_aborted_check_becomes_failed_record(self, mocker):
        broken = mocker.Mock(side_effect=InvalidParams("bad draw"))
        mocker.patch(
            "src.ricci_signature.verification.conformance.CHECKS",
            (("broken", 1, broken),),
        )
        report = run_identities(seed=0, draws=5)
        assert not report.passed
        assert report.failures() == ["broken"]
        assert report.records[0].detail == "bad draw"

    def test_schema(self):
        report = run_identities(seed=0, draws=5, only=["beta_one"])
        assert report.model_dump(by_alias=True)["schema"] == "ricci-sig/1"
