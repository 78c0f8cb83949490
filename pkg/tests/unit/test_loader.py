"""Unit tests for JSON algebra definitions."""

import json

import numpy as np
import pytest

from src.ricci_signature.algebra.catalog import build_algebra, make_spec
from src.ricci_signature.algebra.loader import dump_algebra, load_algebra, parse_algebra
from src.ricci_signature.errors import IndexOutOfRange, InvalidAlgebraDefinition

HEISENBERG = {"dim": 3, "brackets": [{"i": 1, "j": 2, "out": {"3": 1.0}}]}


@pytest.mark.unit
class TestParseAlgebra:

    def test_heisenberg(self):
        t = parse_algebra(HEISENBERG)
        assert t.dim == 3
        assert t.c[0, 1, 2] == 1.0
        assert t.c[1, 0, 2] == -1.0

    def test_dump_round_trip_on_catalog(self):
        tensor = build_algebra(make_spec("A4_11", alpha=0.3))
        np.testing.assert_array_equal(parse_algebra(dump_algebra(tensor)).c, tensor.c)

    def test_rejects_jacobi_violation(self):
        broken = {
            "dim": 3,
            "brackets": [
                {"i": 1, "j": 2, "out": {"3": 1.0}},
                {"i": 2, "j": 3, "out": {"1": 1.0}},
                {"i": 1, "j": 3, "out": {"1": -1.0}},
            ],
        }
        with pytest.raises(InvalidAlgebraDefinition, match="Jacobi"):
            parse_algebra(broken)

    def test_rejects_unordered_pair(self):
        with pytest.raises(InvalidAlgebraDefinition):
            parse_algebra({"dim": 3, "brackets": [{"i": 2, "j": 1, "out": {"3": 1.0}}]})

    def test_rejects_duplicate_pair(self):
        entry = {"i": 1, "j": 2, "out": {"3": 1.0}}
        with pytest.raises(InvalidAlgebraDefinition):
            parse_algebra({"dim": 3, "brackets": [entry, entry]})

    def test_rejects_missing_dim(self):
        with pytest.raises(InvalidAlgebraDefinition):
            parse_algebra({"brackets": []})

    def test_out_of_range_index(self):
        with pytest.raises(IndexOutOfRange):
            parse_algebra({"dim": 2, "brackets": [{"i": 1, "j": 2, "out": {"3": 1.0}}]})


@pytest.mark.unit
class TestLoadAlgebra:

    def test_load_from_file(self, tmp_path):
        path = tmp_path / "heis.json"
        path.write_text(json.dumps(HEISENBERG))
        assert load_algebra(path).dim == 3

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            load_algebra(tmp_path / "nope.json")

    def test_invalid_json(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        with pytest.raises(InvalidAlgebraDefinition):
            load_algebra(path)
