"""Numeric-core tests: sign semantics, norms, inner products, SparseRow."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from signfree import _core_py, backend
from signfree.vectors import SparseRow, as_vector, inner, norm_l1, norm_linf, sign_vec

finite_vec = st.lists(
    st.floats(min_value=-1e6, max_value=1e6, allow_nan=False, allow_subnormal=False),
    min_size=1,
    max_size=50,
)


class TestSign:
    def test_three_cases(self):
        v = as_vector([3.2, 0.0, -1.5])
        assert sign_vec(v).tolist() == [1.0, 0.0, -1.0]

    def test_all_zero(self):
        assert sign_vec(as_vector([0.0, 0.0, 0.0])).tolist() == [0.0, 0.0, 0.0]

    def test_subnormals_keep_sign(self):
        """Tiny-but-nonzero entries must not be flushed to zero."""
        v = as_vector([1e-300, -1e-300, 5e-324, -5e-324])
        assert sign_vec(v).tolist() == [1.0, -1.0, 1.0, -1.0]

    def test_negative_zero_normalized(self):
        """sign(-0.0) is +0.0: downstream code may rely on bit equality."""
        out = sign_vec(as_vector([-0.0, 0.0]))
        assert not np.signbit(out).any(), f"negative zero leaked: {out!r}"

    def test_idempotent(self):
        rng = np.random.default_rng(42)
        v = as_vector(rng.normal(size=100))
        s = sign_vec(v)
        assert np.array_equal(sign_vec(s), s)

    def test_result_read_only(self):
        s = sign_vec(as_vector([1.0, -1.0]))
        with pytest.raises(ValueError):
            s[0] = 7.0


class TestNorms:
    def test_l1_example(self):
        assert norm_l1(as_vector([1.0, -2.0, 0.5])) == 3.5

    def test_linf_example(self):
        assert norm_linf(as_vector([1.0, -2.0, 0.5])) == 2.0

    def test_zero_vector(self):
        z = as_vector([0.0, 0.0])
        assert norm_l1(z) == 0.0 and norm_linf(z) == 0.0


class TestInner:
    def test_example(self):
        assert inner(as_vector([1.0, 2.0]), as_vector([3.0, -1.0])) == 1.0

    def test_sign_inner_is_l1(self):
        v = as_vector([2.0, -3.0])
        assert inner(v, sign_vec(v)) == 5.0

    def test_length_mismatch_raises(self):
        with pytest.raises(ValueError, match="length"):
            inner(as_vector([1.0]), as_vector([1.0, 2.0]))


class TestInvariants:
    @given(finite_vec)
    @settings(max_examples=200)
    def test_inner_with_own_sign_is_l1_norm(self, data):
        v = as_vector(data)
        assert inner(v, sign_vec(v)) == pytest.approx(norm_l1(v), rel=1e-12, abs=0.0)

    @given(finite_vec)
    def test_l1_dominates_linf(self, data):
        v = as_vector(data)
        assert norm_l1(v) >= norm_linf(v) >= 0.0

    @given(finite_vec, st.floats(min_value=1e-3, max_value=1e3))
    def test_sign_invariant_under_positive_scaling(self, data, alpha):
        v = as_vector(data)
        scaled = as_vector(np.asarray(data) * alpha)
        assert np.array_equal(sign_vec(scaled), sign_vec(v)), (
            f"sign changed under scaling by {alpha}"
        )


class TestAsVector:
    def test_copies_and_freezes(self):
        src = np.array([1.0, 2.0])
        v = as_vector(src)
        src[0] = 99.0
        assert v[0] == 1.0
        with pytest.raises(ValueError):
            v[0] = 0.0

    @pytest.mark.parametrize("bad", [[np.nan], [np.inf, 1.0], [-np.inf]])
    def test_rejects_non_finite(self, bad):
        with pytest.raises(ValueError, match="finite"):
            as_vector(bad)

    def test_rejects_wrong_dim(self):
        with pytest.raises(ValueError):
            as_vector([1.0, 2.0], dim=3)

    def test_rejects_matrix(self):
        with pytest.raises(ValueError):
            as_vector(np.zeros((2, 2)))

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            as_vector([])


class TestSparseRow:
    def test_dot_matches_dense(self):
        rng = np.random.default_rng(7)
        idx = np.array([1, 4, 9], dtype=np.int64)
        row = SparseRow(idx, rng.normal(size=3))
        x = rng.normal(size=12)
        assert row.dot(x) == pytest.approx(row.to_dense(12) @ x, rel=1e-12)

    def test_rejects_non_increasing_indices(self):
        with pytest.raises(ValueError, match="increasing"):
            SparseRow(np.array([3, 3], dtype=np.int64), np.array([1.0, 2.0]))

    def test_rejects_negative_index(self):
        with pytest.raises(ValueError):
            SparseRow(np.array([-1], dtype=np.int64), np.array([1.0]))

    def test_rejects_length_mismatch(self):
        with pytest.raises(ValueError):
            SparseRow(np.array([0, 1], dtype=np.int64), np.array([1.0]))

    def test_dot_out_of_range(self):
        row = SparseRow(np.array([5], dtype=np.int64), np.array([1.0]))
        with pytest.raises(ValueError, match="range"):
            row.dot(np.zeros(3))

    def test_nnz(self):
        assert SparseRow(np.array([0, 2], dtype=np.int64), np.ones(2)).nnz == 2


class TestBackendParity:
    """The compiled and pure-Python kernels must agree on the same inputs.

    Sign results are compared exactly; floating reductions may differ in
    summation order, so those get a tight relative tolerance instead.
    """

    def test_active_backend_reported(self):
        assert backend.active_backend() in ("c", "py")

    def test_kernels_agree(self):
        rng = np.random.default_rng(2024)
        v = rng.normal(size=257)
        u = rng.normal(size=257)
        out_a = np.empty_like(v)
        out_b = np.empty_like(v)
        backend.sign_into(v, out_a)
        _core_py.sign_into(v, out_b)
        assert np.array_equal(out_a, out_b)
        assert backend.norm_l1(v) == pytest.approx(_core_py.norm_l1(v), rel=1e-12)
        assert backend.norm_linf(v) == _core_py.norm_linf(v)
        assert backend.inner(u, v) == pytest.approx(_core_py.inner(u, v), rel=1e-12)
        assert backend.inner_sign(u, v) == pytest.approx(
            _core_py.inner_sign(u, v), rel=1e-12
        )


def test_sign_step_moves_every_nonzero_coordinate():
    rng = np.random.default_rng(0)
    x = rng.normal(size=64)
    g = rng.normal(size=64)
    g[::8] = 0.0
    out = np.empty_like(x)
    moved = backend.sign_step(x, g, 0.25, out)
    assert moved == np.count_nonzero(g)
    np.testing.assert_allclose(out, x - 0.25 * np.sign(g), rtol=0, atol=0)
