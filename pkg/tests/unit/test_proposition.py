"""Unit tests for the A4_9 regime check."""

import pytest

from src.ricci_signature.config.models import SearchConfig
from src.ricci_signature.errors import InvalidParams
from src.ricci_signature.verification.proposition import (
    DEFAULT_GRID,
    expected_signatures,
    regime,
    regime_witnesses,
    verify_prop1,
)


@pytest.mark.unit
class TestRegimes:

    @pytest.mark.parametrize(
        "beta, name",
        [(-0.9, "(-1,-1/2)"), (-0.5, "-1/2"), (-0.4999, "(-1/2,1)"), (0.0, "(-1/2,1)"), (1.0, "1")],
    )
    def test_regime(self, beta, name):
        assert regime(beta) == name

    @pytest.mark.parametrize("beta", [-1.0, -1.5, 1.01])
    def test_out_of_range(self, beta):
        with pytest.raises(InvalidParams):
            regime(beta)

    def test_expected_sets(self):
        assert expected_signatures(-0.75) == {3, 5, 6}
        assert expected_signatures(-0.5) == {3, 4, 5, 6}
        assert expected_signatures(0.25) == {1, 2, 3, 4, 5, 6}
        assert expected_signatures(1.0) == {1, 2, 3}

    def test_expected_sets_are_copies(self):
        expected_signatures(1.0).add(7)
        assert expected_signatures(1.0) == {1, 2, 3}

    def test_default_grid_covers_every_regime(self):
        assert {regime(b) for b in DEFAULT_GRID} == {"(-1,-1/2)", "-1/2", "(-1/2,1)", "1"}


@pytest.mark.unit
class TestRegimeWitnesses:

    @pytest.mark.parametrize("beta", DEFAULT_GRID)
    def test_witnesses_match_expected(self, beta):
        found = regime_witnesses(beta)
        assert set(found) == expected_signatures(beta)
        for idx, witness in found.items():
            assert witness.index == idx
            assert witness.a49["beta"] == beta

    def test_sources(self):
        found = regime_witnesses(0.5)
        assert found[4].source == "bisection"
        assert found[1].source == "closed-form"
        assert "t=" in found[4].citation

    def test_beta_one_uses_shipped_witnesses(self):
        found = regime_witnesses(1.0)
        assert found[1].citation.startswith("beta = 1")
        assert found[2].a49["b"] == 4.0


@pytest.mark.unit
class TestVerifyProp1:

    def test_small_grid(self):
        report = verify_prop1([-0.75, 0.5, 1.0], budget=128, seed=3, search=SearchConfig(chunk_size=64))
        assert report.passed
        assert [r.regime for r in report.results] == ["(-1,-1/2)", "(-1/2,1)", "1"]
        for result in report.results:
            assert result.outside == []
            assert set(result.searched) <= set(result.expected)
            assert result.samples_used == 256

    def test_missing_witness_fails(self, mocker):
        mocker.patch("src.ricci_signature.verification.proposition.regime_witnesses", return_value={})
        report = verify_prop1([0.5], budget=64, seed=0, search=SearchConfig(chunk_size=64))
        assert not report.passed
        assert report.results[0].witnessed == []

    def test_schema_alias(self):
        report = verify_prop1([1.0], budget=32, seed=0, search=SearchConfig(chunk_size=32))
        assert report.model_dump(by_alias=True)["schema"] == "ricci-sig/1"
