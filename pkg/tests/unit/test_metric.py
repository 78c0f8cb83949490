"""Unit tests for inner products, frames and samplers."""

import numpy as np
import pytest

from src.ricci_signature.algebra.catalog import build_algebra, make_spec
from src.ricci_signature.algebra.structure import check_jacobi
from src.ricci_signature.curvature.ricci import mean_curvature_vector
from src.ricci_signature.errors import DimensionMismatch, InvalidParams, NotPositiveDefinite
from src.ricci_signature.metric.core import (
    A49Params,
    InnerProduct,
    canonical_a49,
    canonical_a49_batch,
    metric_algebra,
    orthonormal_frame,
)
from src.ricci_signature.metric.sampling import (
    a49_param_batch,
    chunk_rng,
    product_spd_batch,
    sample_spd,
    spd_batch,
)


@pytest.mark.unit
class TestInnerProduct:

    def test_identity(self):
        q = InnerProduct.identity(4)
        assert q.dim == 4
        np.testing.assert_array_equal(q.q, np.eye(4))

    def test_rejects_asymmetric(self):
        m = np.eye(3)
        m[0, 1] = 0.1
        with pytest.raises(NotPositiveDefinite):
            InnerProduct(m)

    def test_rejects_indefinite(self):
        with pytest.raises(NotPositiveDefinite):
            InnerProduct(np.diag([1.0, -1.0, 1.0]))

    def test_rejects_singular(self):
        with pytest.raises(NotPositiveDefinite):
            InnerProduct(np.diag([1.0, 0.0, 1.0]))

    def test_rejects_nearly_singular_pivot(self):
        with pytest.raises(NotPositiveDefinite):
            InnerProduct(np.diag([1.0, 1e-15, 1.0]))

    def test_rejects_non_square(self):
        with pytest.raises(DimensionMismatch):
            InnerProduct(np.ones((2, 3)))

    def test_from_flat(self):
        q = InnerProduct.from_flat([2, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1])
        assert q.q[0, 0] == 2.0
        assert q.to_flat()[0] == 2.0

    def test_from_flat_wrong_count(self):
        with pytest.raises(DimensionMismatch):
            InnerProduct.from_flat([1.0] * 15)


@pytest.mark.unit
class TestOrthonormalFrame:

    def test_identity_keeps_constants(self, su2_plus_r):
        m = metric_algebra(su2_plus_r)
        np.testing.assert_array_equal(m.frame, np.eye(4))
        np.testing.assert_allclose(m.constants.c, su2_plus_r.c, atol=1e-15)

    def test_gram_condition(self, su2_plus_r, spd_factory):
        q = InnerProduct(spd_factory(4))
        m = orthonormal_frame(su2_plus_r, q)
        np.testing.assert_allclose(m.frame.T @ q.q @ m.frame, np.eye(4), atol=1e-10)

    def test_constants_stay_lie(self, spd_factory):
        tensor = build_algebra(make_spec("A4_7"))
        m = orthonormal_frame(tensor, InnerProduct(spd_factory(4)))
        assert check_jacobi(m.constants)

    def test_scaling_rescales_constants(self, heisenberg_plus_r):
        m = orthonormal_frame(heisenberg_plus_r, InnerProduct(4.0 * np.eye(4)))
        np.testing.assert_allclose(m.constants.c, heisenberg_plus_r.c / 2.0, atol=1e-15)

    def test_dimension_mismatch(self, su2_plus_r):
        with pytest.raises(DimensionMismatch):
            orthonormal_frame(su2_plus_r, InnerProduct.identity(3))

    def test_gram_failure_raises(self, su2_plus_r, spd_factory, mocker):
        mocker.patch("src.ricci_signature.metric.core.GRAM_TOL", -1.0)
        with pytest.raises(NotPositiveDefinite, match="Gram condition"):
            orthonormal_frame(su2_plus_r, InnerProduct(spd_factory(4)))


@pytest.mark.unit
class TestCanonicalA49:

    def test_constants(self, a49_params):
        c = canonical_a49(a49_params).constants.c
        p = a49_params
        assert c[0, 3, 0] == pytest.approx(p.a * (1 + p.beta))
        assert c[1, 2, 0] == p.b
        assert c[1, 3, 0] == p.c
        assert c[1, 3, 1] == p.a
        assert c[2, 3, 0] == p.d
        assert c[2, 3, 1] == pytest.approx(p.f * (1 - p.beta))
        assert c[2, 3, 2] == pytest.approx(p.a * p.beta)
        assert c[3, 0, 0] == -c[0, 3, 0]

    def test_mean_curvature_along_f4(self, a49_params):
        h = mean_curvature_vector(canonical_a49(a49_params))
        np.testing.assert_allclose(h, [0.0, 0.0, 0.0, -a49_params.l], atol=1e-14)
        assert a49_params.l == pytest.approx(2.0 * a49_params.a * (1.0 + a49_params.beta))

    def test_identity_frame_is_noop(self, a49_params):
        m = canonical_a49(a49_params)
        again = orthonormal_frame(m.constants, InnerProduct.identity(4))
        np.testing.assert_allclose(again.constants.c, m.constants.c, atol=1e-15)

    def test_batch_matches_single(self, rng):
        raw = a49_param_batch(rng, 20)
        batch = canonical_a49_batch(raw["a"], raw["b"], raw["c"], raw["d"], raw["f"], raw["beta"])
        for i in range(20):
            p = A49Params(**{k: float(v[i]) for k, v in raw.items()})
            np.testing.assert_array_equal(batch[i], canonical_a49(p).constants.c)

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"a": 0.0, "b": 1.0, "c": 0.0, "d": 0.0, "f": 0.0, "beta": 0.5},
            {"a": 1.0, "b": -1.0, "c": 0.0, "d": 0.0, "f": 0.0, "beta": 0.5},
            {"a": 1.0, "b": 1.0, "c": 0.0, "d": 0.0, "f": 0.0, "beta": -1.0},
            {"a": 1.0, "b": 1.0, "c": 0.0, "d": 0.0, "f": 0.0, "beta": 1.5},
        ],
    )
    def test_invalid_params(self, kwargs):
        with pytest.raises(InvalidParams):
            A49Params(**kwargs)

    def test_replace(self, a49_params):
        assert a49_params.replace(b=7.0).b == 7.0
        assert a49_params.replace(b=7.0).f == a49_params.f


@pytest.mark.unit
class TestSampling:

    def test_chunk_rng_deterministic(self):
        a = chunk_rng(5, 3).uniform(size=4)
        b = chunk_rng(5, 3).uniform(size=4)
        np.testing.assert_array_equal(a, b)

    def test_chunks_and_streams_differ(self):
        base = chunk_rng(5, 3).uniform(size=4)
        assert not np.array_equal(base, chunk_rng(5, 4).uniform(size=4))
        assert not np.array_equal(base, chunk_rng(5, 3, stream=1).uniform(size=4))

    def test_spd_batch_positive_definite(self):
        qs = spd_batch(chunk_rng(1, 0), 64, 4)
        assert qs.shape == (64, 4, 4)
        np.testing.assert_array_equal(qs, np.swapaxes(qs, -1, -2))
        assert np.all(np.linalg.eigvalsh(qs) > 0.0)

    def test_product_batch_block_diagonal(self):
        qs = product_spd_batch(chunk_rng(1, 0), 32, 4)
        assert not np.any(qs[:, 3, :3])
        assert not np.any(qs[:, :3, 3])
        assert np.all((qs[:, 3, 3] >= 0.1) & (qs[:, 3, 3] <= 2.0))

    def test_sample_spd_reproducible(self):
        np.testing.assert_array_equal(sample_spd(4, 11).q, sample_spd(4, 11).q)

    def test_a49_param_ranges(self):
        raw = a49_param_batch(chunk_rng(2, 0), 500, beta_range=(-1.0, -0.5))
        assert np.all(raw["a"] >= 0.1)
        assert np.all(np.abs(raw["f"]) <= 2.0)
        assert np.all((raw["beta"] > -1.0) & (raw["beta"] <= -0.5))
