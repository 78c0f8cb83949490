"""Unit tests for structure tensors."""

import numpy as np
import pytest

from src.ricci_signature.algebra.structure import (
    StructureTensor,
    ad_matrix,
    ad_traces,
    bracket,
    check_jacobi,
    is_unimodular,
)
from src.ricci_signature.errors import DimensionMismatch, IndexOutOfRange, InvalidAlgebraDefinition


@pytest.mark.unit
class TestStructureTensor:
    """Construction and validation."""

    def test_from_brackets_fills_mirror(self):
        t = StructureTensor.from_brackets(3, {(1, 2): {3: 1.0}})
        assert t.c[0, 1, 2] == 1.0
        assert t.c[1, 0, 2] == -1.0
        assert np.count_nonzero(t.c) == 2

    def test_constants_are_read_only(self):
        t = StructureTensor.from_brackets(2, {(1, 2): {2: 1.0}})
        with pytest.raises(ValueError):
            t.c[0, 1, 1] = 5.0

    def test_rejects_non_antisymmetric(self):
        c = np.zeros((2, 2, 2))
        c[0, 1, 1] = 1.0
        with pytest.raises(InvalidAlgebraDefinition):
            StructureTensor(2, c)

    def test_rejects_wrong_shape(self):
        with pytest.raises(DimensionMismatch):
            StructureTensor(3, np.zeros((2, 2, 2)))

    def test_rejects_out_of_range_index(self):
        with pytest.raises(IndexOutOfRange):
            StructureTensor.from_brackets(3, {(1, 4): {1: 1.0}})

    def test_nonzero_brackets_round_trip(self):
        table = {(1, 3): {1: 1.0}, (2, 3): {1: 1.0, 2: 1.0}}
        t = StructureTensor.from_brackets(3, table)
        assert t.nonzero_brackets() == table

    def test_zero_algebra(self):
        t = StructureTensor.zeros(4)
        assert check_jacobi(t)
        assert is_unimodular(t)


@pytest.mark.unit
class TestBrackets:
    """Bracket evaluation, ad matrices and traces."""

    def test_bracket_of_basis_vectors(self):
        t = StructureTensor.from_brackets(3, {(1, 2): {3: 1.0}, (2, 3): {1: 1.0}, (1, 3): {2: -1.0}})
        np.testing.assert_array_equal(bracket(t, [1, 0, 0], [0, 1, 0]), [0.0, 0.0, 1.0])
        np.testing.assert_array_equal(bracket(t, [0, 1, 0], [1, 0, 0]), [0.0, 0.0, -1.0])

    def test_bracket_dimension_mismatch(self):
        t = StructureTensor.zeros(3)
        with pytest.raises(DimensionMismatch):
            bracket(t, [1, 0], [0, 1, 0])

    def test_ad_matrix_columns_are_brackets(self):
        t = StructureTensor.from_brackets(3, {(1, 3): {1: 1.0}, (2, 3): {1: 1.0, 2: 1.0}})
        ad3 = ad_matrix(t, 2)
        for j in range(3):
            e_j = np.eye(3)[j]
            np.testing.assert_array_equal(ad3[:, j], bracket(t, np.eye(3)[2], e_j))

    def test_ad_traces_of_solvable_algebra(self):
        # A3_3: [e1, e3] = e1, [e2, e3] = e2
        t = StructureTensor.from_brackets(3, {(1, 3): {1: 1.0}, (2, 3): {2: 1.0}})
        np.testing.assert_array_equal(ad_traces(t), [0.0, 0.0, -2.0])
        assert not is_unimodular(t)


@pytest.mark.unit
class TestJacobi:

    def test_jacobi_holds_for_so3(self):
        t = StructureTensor.from_brackets(3, {(1, 2): {3: 1.0}, (2, 3): {1: 1.0}, (1, 3): {2: -1.0}})
        assert check_jacobi(t)

    def test_jacobi_fails_for_broken_table(self):
        # [e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e1 is not a Lie algebra
        t = StructureTensor.from_brackets(3, {(1, 2): {3: 1.0}, (2, 3): {1: 1.0}, (1, 3): {1: -1.0}})
        assert not check_jacobi(t)
