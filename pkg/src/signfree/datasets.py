"""Dataset ingestion: LIBSVM-format parsing/serialization, label
normalization, optional max-abs feature scaling, and a synthetic quadratic
factory with a known minimizer for invariant tests.

LIBSVM lines look like ``label idx:val idx:val ...`` with 1-based, strictly
increasing indices; ``#`` starts a comment; blank lines are skipped.  Files
ending in ``.gz`` are decompressed transparently.
"""

from __future__ import annotations

import gzip
import io
import os
from dataclasses import dataclass
from importlib import resources

import numpy as np

from signfree.vectors import SparseRow


class LibsvmFormatError(ValueError):
    """Malformed LIBSVM input; message carries the 1-based line number."""


@dataclass(frozen=True)
class LibsvmDataset:
    rows: tuple[SparseRow, ...]
    labels: np.ndarray
    dim: int

    def __post_init__(self):
        if len(self.rows) == 0 or len(self.rows) != self.labels.shape[0]:
            raise ValueError("need equal, nonzero row and label counts")
        for r in self.rows:
            if r.max_index() >= self.dim:
                raise ValueError(
                    f"row index {r.max_index()} out of range for dim {self.dim}"
                )
        lab = np.asarray(self.labels, dtype=np.float64)
        lab.flags.writeable = False
        object.__setattr__(self, "labels", lab)
        object.__setattr__(self, "rows", tuple(self.rows))

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    def to_dense(self) -> np.ndarray:
        """Dense (n_rows, dim) feature matrix."""
        X = np.zeros((self.n_rows, self.dim), dtype=np.float64)
        for i, r in enumerate(self.rows):
            X[i, r.indices] = r.values
        return X

    def __eq__(self, other):
        if not isinstance(other, LibsvmDataset):
            return NotImplemented
        return (
            self.dim == other.dim
            and np.array_equal(self.labels, other.labels)
            and len(self.rows) == len(other.rows)
            and all(
                np.array_equal(a.indices, b.indices)
                and np.array_equal(a.values, b.values)
                for a, b in zip(self.rows, other.rows)
            )
        )


def _open_source(source):
    """Yield text lines; str/PathLike name a file (gzip if ``.gz``),
    bytes are raw content, anything else is iterated as a line stream."""
    if isinstance(source, (str, os.PathLike)):
        path = os.fspath(source)
        opener = gzip.open if path.endswith(".gz") else open
        with opener(path, "rt", encoding="ascii") as fh:
            yield from fh
    elif isinstance(source, bytes):
        yield from io.StringIO(source.decode("ascii"))
    else:
        for line in source:
            yield line.decode("ascii") if isinstance(line, bytes) else line


def parse_libsvm(source, dim: int | None = None) -> LibsvmDataset:
    """Parse LIBSVM text into sparse rows + float labels.

    1-based file indices become 0-based; ``dim`` defaults to the largest
    observed index (files omit trailing zero features) and may be
    overridden upward.  Malformed tokens, indices < 1 and non-increasing
    indices raise LibsvmFormatError naming the offending line.
    """
    rows: list[SparseRow] = []
    labels: list[float] = []
    max_idx = -1
    for lineno, raw in enumerate(_open_source(source), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        try:
            label = float(tokens[0])
        except ValueError:
            raise LibsvmFormatError(
                f"line {lineno}: label {tokens[0]!r} is not a float"
            ) from None
        idxs: list[int] = []
        vals: list[float] = []
        prev = 0
        for tok in tokens[1:]:
            idx_s, _, val_s = tok.partition(":")
            try:
                idx = int(idx_s)
                val = float(val_s)
            except ValueError:
                raise LibsvmFormatError(
                    f"line {lineno}: malformed feature token {tok!r}"
                ) from None
            if idx < 1:
                raise LibsvmFormatError(
                    f"line {lineno}: index {idx} < 1 (LIBSVM indices are 1-based)"
                )
            if idx <= prev:
                raise LibsvmFormatError(
                    f"line {lineno}: non-increasing index {idx} after {prev}"
                )
            prev = idx
            idxs.append(idx - 1)
            vals.append(val)
        rows.append(SparseRow(np.array(idxs, dtype=np.int64), np.array(vals)))
        labels.append(label)
        if idxs:
            max_idx = max(max_idx, idxs[-1])
    if not rows:
        raise LibsvmFormatError("no data rows found")
    inferred = max_idx + 1
    if dim is None:
        dim = inferred
    elif dim < inferred:
        raise ValueError(f"dim override {dim} below observed feature count {inferred}")
    return LibsvmDataset(tuple(rows), np.array(labels), dim)


def serialize_libsvm(ds: LibsvmDataset) -> str:
    """Round-trip writer: parse_libsvm(serialize_libsvm(ds)) == ds."""
    lines = []
    for label, row in zip(ds.labels, ds.rows):
        parts = [repr(float(label))]
        parts += [
            f"{i + 1}:{float(v)!r}" for i, v in zip(row.indices, row.values)
        ]
        lines.append(" ".join(parts))
    return "\n".join(lines) + "\n"


def normalize_labels(ds: LibsvmDataset, scheme: str) -> LibsvmDataset:
    """Map the two distinct label values onto {-1,1} (``pm_one``) or
    {0,1} (``zero_one``); smaller value maps low, larger maps to 1."""
    if scheme not in ("pm_one", "zero_one"):
        raise ValueError(f"unknown label scheme {scheme!r}")
    distinct = np.unique(ds.labels)
    if distinct.shape[0] != 2:
        raise ValueError(
            f"label normalization needs exactly two distinct values, got {distinct.shape[0]}"
        )
    low = -1.0 if scheme == "pm_one" else 0.0
    mapped = np.where(ds.labels == distinct[0], low, 1.0)
    return LibsvmDataset(ds.rows, mapped, ds.dim)


def scale_features_maxabs(ds: LibsvmDataset) -> LibsvmDataset:
    """Optional per-column max-abs scaling (default pipelines use raw
    features); all-zero columns are left untouched."""
    colmax = np.zeros(ds.dim)
    for r in ds.rows:
        np.maximum.at(colmax, r.indices, np.abs(r.values))
    colmax[colmax == 0.0] = 1.0
    rows = tuple(
        SparseRow(r.indices, r.values / colmax[r.indices]) for r in ds.rows
    )
    return LibsvmDataset(rows, ds.labels, ds.dim)


# name -> (feature dim, native label pair); dims are passed explicitly so a
# fixture whose last columns happen to be all-zero still parses at full width.
_FIXTURES = {
    "a9a": 123,
    "w8a": 300,
    "ijcnn1": 22,
    "skin_nonskin": 3,
}


def list_fixtures() -> tuple[str, ...]:
    return tuple(sorted(_FIXTURES))


def load_fixture(name: str) -> LibsvmDataset:
    """Load one of the bundled small datasets by short name."""
    if name not in _FIXTURES:
        raise ValueError(f"unknown fixture {name!r}; have {list_fixtures()}")
    ref = resources.files("signfree") / "fixtures" / f"{name}.libsvm"
    with resources.as_file(ref) as path:
        return parse_libsvm(path, dim=_FIXTURES[name])


@dataclass(frozen=True)
class SyntheticQuadratic:
    """f(x) = 0.5*(x-x_star)^T A (x-x_star) + f_star with A symmetric PSD.

    ``b = A @ x_star`` is the linear-term vector of the expanded form and
    ``l_inf_bound = sum_ij |A_ij|`` upper-bounds the l1/linf smoothness
    constant (||A z||_1 <= l_inf_bound * ||z||_inf).
    """

    A: np.ndarray
    b: np.ndarray
    x_star: np.ndarray
    f_star: float
    l_inf_bound: float

    def __post_init__(self):
        if not np.allclose(self.A, self.A.T, atol=1e-12, rtol=0.0):
            raise ValueError("A must be symmetric to 1e-12")
        if not np.allclose(self.b, self.A @ self.x_star, atol=1e-10):
            raise ValueError("b inconsistent with A @ x_star")
        for arr in (self.A, self.b, self.x_star):
            arr.flags.writeable = False

    @property
    def dim(self) -> int:
        return self.x_star.shape[0]


def make_quadratic(dim: int, seed: int, condition: float = 10.0) -> SyntheticQuadratic:
    """Deterministic random quadratic with eigenvalues log-spaced in
    [1, condition] and a known minimizer/minimum."""
    if dim < 1:
        raise ValueError("dim must be >= 1")
    if condition < 1.0:
        raise ValueError("condition must be >= 1")
    rng = np.random.default_rng(seed)
    eigs = np.logspace(0.0, np.log10(condition), dim)
    if dim == 1:
        Q = np.ones((1, 1))
    else:
        Q, _ = np.linalg.qr(rng.normal(size=(dim, dim)))
    A = (Q * eigs) @ Q.T
    A = 0.5 * (A + A.T)  # exact numeric symmetry
    x_star = rng.uniform(-1.0, 1.0, size=dim)
    f_star = float(rng.uniform(-1.0, 1.0))
    return SyntheticQuadratic(
        A=A,
        b=A @ x_star,
        x_star=x_star,
        f_star=f_star,
        l_inf_bound=float(np.sum(np.abs(A))),
    )
