#!/usr/bin/env python3
"""Regenerate the committed LIBSVM-format fixtures under src/signfree/fixtures/.

Each fixture is a small deterministic synthetic dataset shaped like a
well-known binary-classification benchmark (feature count, sparsity, value
range, label convention).  Labels come from a noisy logistic teacher so the
objectives have realistic curvature.  Run from the repo root:

    python3 scripts/make_fixtures.py
"""

from __future__ import annotations

import os

import numpy as np

N_ROWS = 200
OUT_DIR = os.path.join(
    os.path.dirname(os.path.dirname(os.path.abspath(__file__))),
    "src", "signfree", "fixtures",
)


def _sigmoid(z):
    return 1.0 / (1.0 + np.exp(-z))


def _teacher_labels(rng, dots, bias, pos, neg):
    p = _sigmoid(dots + bias)
    return np.where(rng.uniform(size=dots.shape[0]) < p, pos, neg)


def _write(name, lines):
    path = os.path.join(OUT_DIR, name)
    with open(path, "w", encoding="ascii") as fh:
        fh.write("\n".join(lines) + "\n")
    print(f"wrote {path} ({len(lines)} rows)")


def _fmt(label, idxs, vals):
    parts = [f"{label:g}"] + [f"{i + 1}:{v:g}" for i, v in zip(idxs, vals)]
    return " ".join(parts)


def make_binary_sparse(name, seed, dim, nnz, bias):
    """Binary (0/1-valued) sparse rows, |label| convention +-1."""
    rng = np.random.default_rng(seed)
    w = rng.normal(size=dim) / np.sqrt(nnz)
    lines = []
    for _ in range(N_ROWS):
        k = max(1, int(rng.poisson(nnz)))
        idxs = np.sort(rng.choice(dim, size=min(k, dim), replace=False))
        vals = np.ones(idxs.shape[0])
        dot = float(np.sum(w[idxs]))
        (label,) = _teacher_labels(rng, np.array([dot]), bias, 1.0, -1.0)
        lines.append(_fmt(label, idxs, vals))
    _write(name, lines)


def make_dense_continuous(name, seed, dim):
    """Dense continuous rows in [-1, 1], labels +-1."""
    rng = np.random.default_rng(seed)
    w = rng.normal(size=dim)
    lines = []
    for _ in range(N_ROWS):
        x = np.round(rng.uniform(-1.0, 1.0, size=dim), 6)
        (label,) = _teacher_labels(rng, np.array([float(w @ x)]), 0.0, 1.0, -1.0)
        lines.append(_fmt(label, np.arange(dim), x))
    _write(name, lines)


def make_dense_int(name, seed, dim):
    """Dense integer rows in [0, 255], labels in {1, 2} (normalize before use)."""
    rng = np.random.default_rng(seed)
    w = rng.normal(size=dim) / 128.0
    lines = []
    for _ in range(N_ROWS):
        x = rng.integers(0, 256, size=dim).astype(float)
        dot = float(w @ (x - 128.0))
        (label,) = _teacher_labels(rng, np.array([dot]), 0.0, 2.0, 1.0)
        lines.append(_fmt(label, np.arange(dim), x))
    _write(name, lines)


def main():
    os.makedirs(OUT_DIR, exist_ok=True)
    make_binary_sparse("a9a.libsvm", seed=9001, dim=123, nnz=14, bias=0.0)
    make_binary_sparse("w8a.libsvm", seed=9002, dim=300, nnz=11, bias=-2.0)
    make_dense_continuous("ijcnn1.libsvm", seed=9003, dim=22)
    make_dense_int("skin_nonskin.libsvm", seed=9004, dim=3)


if __name__ == "__main__":
    main()
