"""Dense vector primitives (three-case sign, l1/linf norms, inner product)
and the sparse feature-row type used by dataset parsing.

Everything is float64.  Vectors returned by this module are marked
read-only; operations are pure and safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from signfree import backend


def as_vector(data, dim: int | None = None) -> np.ndarray:
    """Validate and return a read-only, contiguous float64 1-D array.

    Rejects NaN/Inf entries and, when ``dim`` is given, any length
    mismatch.  Always copies, so later mutation of ``data`` cannot leak in.
    """
    v = np.array(data, dtype=np.float64, order="C", copy=True)
    if v.ndim != 1:
        raise ValueError(f"expected a 1-D vector, got shape {v.shape}")
    if v.shape[0] == 0:
        raise ValueError("vector must have at least one entry")
    if not np.all(np.isfinite(v)):
        raise ValueError("vector entries must be finite (no NaN/Inf)")
    if dim is not None and v.shape[0] != dim:
        raise ValueError(f"expected length {dim}, got {v.shape[0]}")
    v.flags.writeable = False
    return v


def sign_vec(v: np.ndarray) -> np.ndarray:
    """Coordinate-wise sign: 1 where v_i > 0, -1 where v_i < 0, else 0.

    Exact zeros (including -0.0) map to +0.0; subnormals keep their strict
    sign.  Output entries are always in {-1.0, 0.0, 1.0}.
    """
    out = np.empty_like(v)
    backend.sign_into(np.ascontiguousarray(v, dtype=np.float64), out)
    out.flags.writeable = False
    return out


def norm_l1(v: np.ndarray) -> float:
    """Sum of absolute values."""
    return backend.norm_l1(np.ascontiguousarray(v, dtype=np.float64))


def norm_linf(v: np.ndarray) -> float:
    """Largest absolute value (0 for the empty or all-zero vector)."""
    return backend.norm_linf(np.ascontiguousarray(v, dtype=np.float64))


def inner(u: np.ndarray, v: np.ndarray) -> float:
    """Euclidean inner product in 64-bit accumulation."""
    if u.shape[0] != v.shape[0]:
        raise ValueError(f"length mismatch: {u.shape[0]} vs {v.shape[0]}")
    return backend.inner(
        np.ascontiguousarray(u, dtype=np.float64),
        np.ascontiguousarray(v, dtype=np.float64),
    )


@dataclass(frozen=True)
class SparseRow:
    """One sparse feature row: strictly increasing 0-based indices with
    matching values."""

    indices: np.ndarray = field()
    values: np.ndarray = field()

    def __post_init__(self):
        idx = np.asarray(self.indices, dtype=np.int64)
        val = np.asarray(self.values, dtype=np.float64)
        if idx.shape[0] != val.shape[0]:
            raise ValueError("indices and values must have equal length")
        if idx.shape[0] and (idx[0] < 0 or np.any(np.diff(idx) <= 0)):
            raise ValueError("indices must be strictly increasing and >= 0")
        idx.flags.writeable = False
        val.flags.writeable = False
        object.__setattr__(self, "indices", idx)
        object.__setattr__(self, "values", val)

    @property
    def nnz(self) -> int:
        return int(self.indices.shape[0])

    def max_index(self) -> int:
        return int(self.indices[-1]) if self.nnz else -1

    def dot(self, x: np.ndarray) -> float:
        """Sparse-dense inner product; x must cover every index."""
        if self.nnz and self.max_index() >= x.shape[0]:
            raise ValueError(
                f"row index {self.max_index()} out of range for dim {x.shape[0]}"
            )
        return float(np.dot(self.values, x[self.indices]))

    def to_dense(self, dim: int) -> np.ndarray:
        out = np.zeros(dim, dtype=np.float64)
        out[self.indices] = self.values
        return out
