"""signfree: parameter-free sign-based optimization methods and a
reproducible convex benchmark harness.

The suite covers fixed-step sign descent, a bisection search for a good
constant stepsize (with its launch-statistics fixed point), per-iteration
adaptive stepsizes driven by accumulated local curvature ratios (exact,
stochastic and distributed flavors, plus an Adam-style momentum variant),
steepest descent in the l1/linf geometry, and a majority-vote multi-node
simulator with communication accounting.
"""

from signfree.backend import active_backend
from signfree.vectors import SparseRow, as_vector, inner, norm_l1, norm_linf, sign_vec

__version__ = "0.1.0"

__all__ = [
    "SparseRow",
    "active_backend",
    "as_vector",
    "inner",
    "norm_l1",
    "norm_linf",
    "sign_vec",
    "__version__",
]
