"""Objective oracles: logistic loss, nonlinear least squares, and synthetic
quadratics, each exposing exact, minibatch and additive-noise gradients.

Stochastic queries are driven by ``Realization`` values: a realization is a
frozen (seed, tag, step, node) tuple from which a fresh generator is derived
on every use, so evaluating the same realization at two different points
consumes identical randomness.  That property is what lets two-point
difference quotients cancel additive noise exactly.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field

import numpy as np

from signfree import backend
from signfree.datasets import LibsvmDataset, SyntheticQuadratic
from signfree.vectors import as_vector

# Stream tags keep the per-step, two-point-pair, additive-noise and
# starting-point random streams disjoint under one master seed.
STREAM_TAGS = {"step": 1, "pair": 2, "noise": 3, "start": 4}


@dataclass(frozen=True)
class Realization:
    """One reusable draw of randomness, identified by (seed, tag, t, node).

    ``rng()`` rebuilds the generator from scratch each call; callers may
    evaluate the same realization several times and always see the same
    stream.  ``t`` may be -1 (the pre-optimization probe point).
    """

    master_seed: int
    tag: str
    t: int
    node: int = 0

    def __post_init__(self):
        if self.tag not in STREAM_TAGS:
            raise ValueError(f"unknown tag {self.tag!r}; use one of {sorted(STREAM_TAGS)}")
        if self.master_seed < 0 or self.node < 0 or self.t < -1:
            raise ValueError("need master_seed >= 0, node >= 0, t >= -1")

    def rng(self) -> np.random.Generator:
        seq = np.random.SeedSequence(
            [self.master_seed, STREAM_TAGS[self.tag], self.t + 1, self.node]
        )
        return np.random.default_rng(seq)


def derive_seed(*components: int) -> int:
    """Fold integer components into a fresh master seed (stable across runs)."""
    seq = np.random.SeedSequence([int(c) & 0xFFFFFFFF for c in components])
    return int(seq.generate_state(1, dtype=np.uint64)[0])


class OracleCounter:
    """Thread-safe tally of oracle queries by kind."""

    _KINDS = ("value", "grad", "stoch_grad", "noisy_grad")

    def __init__(self):
        self._lock = threading.Lock()
        self._counts = dict.fromkeys(self._KINDS, 0)

    def bump(self, kind: str, by: int = 1):
        with self._lock:
            self._counts[kind] += by

    def snapshot(self) -> dict[str, int]:
        with self._lock:
            return dict(self._counts)

    def reset(self):
        with self._lock:
            for k in self._KINDS:
                self._counts[k] = 0

    @property
    def total(self) -> int:
        with self._lock:
            return sum(self._counts.values())


def _sigmoid(z: np.ndarray) -> np.ndarray:
    """Overflow-safe logistic function."""
    out = np.empty_like(z)
    pos = z >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-z[pos]))
    ez = np.exp(z[pos == False])  # noqa: E712  (mask reuse, not comparison)
    out[~pos] = ez / (1.0 + ez)
    return out


class Objective:
    """A differentiable objective with exact and stochastic first-order oracles.

    Construct via the classmethods ``logistic``, ``nllsq`` or ``quadratic``.
    All oracles count their calls on ``self.counter``.
    """

    def __init__(self, kind, dim, X=None, labels=None, l2_reg=0.0,
                 quad: SyntheticQuadratic | None = None):
        self.kind = kind
        self.dim = dim
        self._X = X
        self._labels = labels
        self.l2_reg = float(l2_reg)
        self._quad = quad
        self.counter = OracleCounter()

    # -- constructors -------------------------------------------------

    @classmethod
    def logistic(cls, ds: LibsvmDataset, l2_reg: float = 0.0) -> "Objective":
        """Mean log(1+exp(-y*<a,x>)) over rows, labels in {-1,+1},
        plus (l2_reg/2)*||x||^2."""
        labels = np.asarray(ds.labels)
        if not set(np.unique(labels)) <= {-1.0, 1.0}:
            raise ValueError("logistic labels must be in {-1,+1}; normalize first")
        if l2_reg < 0:
            raise ValueError("l2_reg must be >= 0")
        return cls("logistic", ds.dim, X=ds.to_dense(), labels=labels, l2_reg=l2_reg)

    @classmethod
    def nllsq(cls, ds: LibsvmDataset) -> "Objective":
        """Mean (y - sigmoid(<a,x>))^2 over rows, labels in {0,1}."""
        labels = np.asarray(ds.labels)
        if not set(np.unique(labels)) <= {0.0, 1.0}:
            raise ValueError("nllsq labels must be in {0,1}; normalize first")
        return cls("nllsq", ds.dim, X=ds.to_dense(), labels=labels)

    @classmethod
    def quadratic(cls, quad: SyntheticQuadratic) -> "Objective":
        """0.5*(x-x*)^T A (x-x*) + f* with known minimizer and minimum."""
        return cls("quadratic", quad.dim, quad=quad)

    # -- metadata ------------------------------------------------------

    @property
    def n_rows(self) -> int | None:
        return None if self._X is None else self._X.shape[0]

    @property
    def f_star(self) -> float | None:
        return None if self._quad is None else self._quad.f_star

    @property
    def x_star(self) -> np.ndarray | None:
        return None if self._quad is None else self._quad.x_star

    @property
    def smoothness_bound(self) -> float | None:
        """Analytic upper bound on the l1/linf smoothness constant
        (quadratic objectives only)."""
        return None if self._quad is None else self._quad.l_inf_bound

    # -- exact oracles ---------------------------------------------------

    def value(self, x: np.ndarray) -> float:
        self.counter.bump("value")
        return self._value(x)

    def grad(self, x: np.ndarray) -> np.ndarray:
        self.counter.bump("grad")
        if self.kind == "quadratic":
            return self._quad_grad(x)
        return self._batch_grad(x, None)

    def value_and_grad(self, x: np.ndarray) -> tuple[float, np.ndarray]:
        """One query returning both; the quadratic shares its matvec."""
        self.counter.bump("value")
        self.counter.bump("grad")
        if self.kind == "quadratic":
            g, z = self._quad_grad(x, want_z=True)
            return 0.5 * backend.inner(z, g) + self._quad.f_star, g
        return self._value(x), self._batch_grad(x, None)

    # -- stochastic oracles ------------------------------------------------

    def stoch_grad(self, x, realization: Realization, batch_size: int | None = None):
        """Minibatch gradient, rows drawn uniformly with replacement.

        ``batch_size=None`` uses every row once in storage order, which
        reproduces ``grad`` bit-for-bit (same code path, same summation
        order).  Quadratics have no rows, so there the minibatch oracle is
        the exact gradient.
        """
        self.counter.bump("stoch_grad")
        if self.kind == "quadratic":
            return self._quad_grad(x)
        if batch_size is None:
            return self._batch_grad(x, None)
        if batch_size < 1:
            raise ValueError("batch_size must be >= 1")
        idx = realization.rng().integers(0, self._X.shape[0], size=batch_size)
        return self._batch_grad(x, idx)

    def noisy_grad(self, x, sigma, realization: Realization, batch_size: int = 1):
        """Exact gradient plus additive Gaussian noise of scale ``sigma``.

        ``sigma`` may be a scalar or per-coordinate vector.  A batch of b
        draws is simulated by scaling one draw with 1/sqrt(b), which has
        the same distribution as averaging b independent draws.  Reusing a
        realization reuses the identical noise vector.
        """
        self.counter.bump("noisy_grad")
        if batch_size < 1:
            raise ValueError("batch_size must be >= 1")
        g = self._quad_grad(x) if self.kind == "quadratic" else self._batch_grad(x, None)
        sig = np.asarray(sigma, dtype=np.float64)
        if not np.all(sig >= 0.0):
            raise ValueError("sigma must be nonnegative")
        if np.all(sig == 0.0):
            return g
        z = realization.rng().standard_normal(self.dim)
        return g + (sig / np.sqrt(batch_size)) * z

    # -- internals -------------------------------------------------

    def _value(self, x: np.ndarray) -> float:
        x = np.ascontiguousarray(x, dtype=np.float64)
        if self.kind == "quadratic":
            z = x - self._quad.x_star
            return 0.5 * backend.inner(z, self._quad.A @ z) + self._quad.f_star
        m = self._X @ x
        if self.kind == "logistic":
            loss = float(np.mean(np.logaddexp(0.0, -self._labels * m)))
            if self.l2_reg:
                loss += 0.5 * self.l2_reg * float(x @ x)
            return loss
        residual = self._labels - _sigmoid(m)
        return float(np.mean(residual * residual))

    def _batch_grad(self, x: np.ndarray, idx) -> np.ndarray:
        x = np.ascontiguousarray(x, dtype=np.float64)
        X = self._X if idx is None else self._X[idx]
        y = self._labels if idx is None else self._labels[idx]
        m = X @ x
        if self.kind == "logistic":
            w = -y * _sigmoid(-y * m)
            g = (X.T @ w) / X.shape[0]
            if self.l2_reg:
                g += self.l2_reg * x
            return g
        s = _sigmoid(m)
        w = 2.0 * (s - y) * s * (1.0 - s)
        return (X.T @ w) / X.shape[0]

    def _quad_grad(self, x: np.ndarray, want_z: bool = False):
        x = np.ascontiguousarray(x, dtype=np.float64)
        z = x - self._quad.x_star
        g = np.empty_like(z)
        backend.matvec(self._quad.A, z, g)
        return (g, z) if want_z else g
