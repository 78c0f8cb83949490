"""Unit tests for the four-dimensional catalog."""

import numpy as np
import pytest

from src.ricci_signature.algebra.catalog import (
    DIRECT_A1,
    Family,
    build_algebra,
    has_abelian_factor,
    list_catalog,
    list_slices,
    make_spec,
)
from src.ricci_signature.algebra.structure import ad_traces, check_jacobi, is_unimodular
from src.ricci_signature.errors import ParameterOutOfRange, UnknownFamily

UNIMODULAR = ["4A1", "A3_1+A1", "A3_4+A1", "A3_6+A1", "A3_8+A1", "A3_9+A1", "A4_1", "A4_8", "A4_10"]
NON_UNIMODULAR = ["A2+2A1", "2A2", "A3_2+A1", "A3_3+A1", "A4_3", "A4_4", "A4_7", "A4_12"]


def _representative(family: Family):
    name = family.value
    if name in ("A3_5+A1",):
        return make_spec(name, alpha=0.5)
    if name in ("A3_7+A1", "A4_11"):
        return make_spec(name, alpha=0.5)
    if name == "A4_2":
        return make_spec(name, alpha=0.5)
    if name == "A4_5":
        return make_spec(name, alpha=-0.5, beta=0.25)
    if name == "A4_6":
        return make_spec(name, alpha=1.0, beta=0.5)
    if name == "A4_9":
        return make_spec(name, beta=0.3)
    return make_spec(name)


@pytest.mark.unit
class TestCatalogListing:

    def test_twenty_four_families(self):
        rows = list_catalog()
        assert len(rows) == 24
        assert rows[0].family == "4A1"
        assert rows[-1].family == "A4_12"

    def test_parametric_rows_carry_constraints(self):
        rows = {r.family: r for r in list_catalog()}
        assert rows["A4_9"].params == ("beta",)
        assert rows["A4_9"].constraints == ("-1 < beta <= 1",)
        assert rows["A4_5"].params == ("alpha", "beta")
        assert rows["A3_1+A1"].constraints == ()

    def test_slices_listed(self):
        names = {r.family for r in list_slices()}
        assert names == {"A4_2[-2]", "A4_5[a,-1-a]", "A4_5[-1/2,-1/2]", "A4_6[-2b,b]"}


@pytest.mark.unit
class TestBuildAlgebra:

    @pytest.mark.parametrize("family", list(Family))
    def test_every_family_satisfies_jacobi(self, family):
        tensor = build_algebra(_representative(family))
        assert tensor.dim == 4
        assert check_jacobi(tensor)

    @pytest.mark.parametrize("name", UNIMODULAR)
    def test_unimodular_families(self, name):
        assert is_unimodular(build_algebra(make_spec(name)))

    @pytest.mark.parametrize("name", NON_UNIMODULAR)
    def test_non_unimodular_families(self, name):
        assert not is_unimodular(build_algebra(make_spec(name)))

    def test_a3_3_trace(self):
        np.testing.assert_array_equal(ad_traces(build_algebra(make_spec("A3_3+A1"))), [0.0, 0.0, -2.0, 0.0])

    def test_a4_9_brackets(self):
        tensor = build_algebra(make_spec("A4_9", beta=0.5))
        assert tensor.nonzero_brackets() == {
            (1, 4): {1: 1.5},
            (2, 3): {1: 1.0},
            (2, 4): {2: 1.0},
            (3, 4): {3: 0.5},
        }

    @pytest.mark.parametrize(
        "name,kwargs",
        [
            ("A4_2[-2]", {}),
            ("A4_5[a,-1-a]", {"alpha": -0.7}),
            ("A4_5[-1/2,-1/2]", {}),
            ("A4_6[-2b,b]", {"beta": 1.5}),
        ],
    )
    def test_slices_are_unimodular(self, name, kwargs):
        spec = make_spec(name, **kwargs)
        assert spec.slice == name
        assert is_unimodular(build_algebra(spec))

    def test_slice_expands_parameters(self):
        spec = make_spec("A4_5[a,-1-a]", alpha=-0.75)
        assert spec.family == Family.A4_5
        assert spec.params == {"alpha": -0.75, "beta": -0.25}


@pytest.mark.unit
class TestMakeSpecErrors:

    def test_unknown_family(self):
        with pytest.raises(UnknownFamily):
            make_spec("A5_1")

    def test_out_of_range_names_constraint(self):
        with pytest.raises(ParameterOutOfRange) as exc:
            make_spec("A4_9", beta=1.5)
        assert exc.value.constraint == "-1 < beta <= 1"
        assert exc.value.family == "A4_9"

    @pytest.mark.parametrize("beta", [-1.0, 1.0000001])
    def test_a4_9_open_lower_closed_upper(self, beta):
        with pytest.raises(ParameterOutOfRange):
            make_spec("A4_9", beta=beta)

    def test_a4_9_beta_one_allowed(self):
        assert make_spec("A4_9", beta=1.0).params == {"beta": 1.0}

    def test_missing_parameter(self):
        with pytest.raises(ParameterOutOfRange):
            make_spec("A3_5+A1")

    def test_extra_parameter(self):
        with pytest.raises(ParameterOutOfRange):
            make_spec("A3_1+A1", alpha=0.5)

    def test_a4_5_ordering(self):
        with pytest.raises(ParameterOutOfRange):
            make_spec("A4_5", alpha=0.5, beta=0.25)

    def test_slice_constraint(self):
        with pytest.raises(ParameterOutOfRange):
            make_spec("A4_5[a,-1-a]", alpha=-0.25)


@pytest.mark.unit
class TestAbelianFactor:

    def test_direct_sums_flagged(self):
        assert has_abelian_factor(make_spec("A3_9+A1"))
        assert has_abelian_factor(make_spec("A2+2A1"))
        assert not has_abelian_factor(make_spec("A4_1"))
        assert Family.A2x2 not in DIRECT_A1

    @pytest.mark.parametrize("family", sorted(DIRECT_A1, key=lambda f: f.value))
    def test_last_basis_vector_is_central(self, family):
        tensor = build_algebra(_representative(family))
        assert not np.any(tensor.c[3])
        assert not np.any(tensor.c[:, :, 3])
