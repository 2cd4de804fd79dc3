"""Pure numpy fallback for the compiled kernels in _core.pyx.

Same call signatures and semantics; used when the extension is not built
or when SIGNFREE_BACKEND=py.  Summation order differs from the sequential
compiled loops (numpy sums pairwise), so the two backends may disagree at
the last few ulps — callers must not compare floats across backends.
"""

import numpy as np


def sign_into(v, out):
    np.sign(v, out=out)
    # np.sign maps -0.0 -> -0.0; flush negative zeros to +0.0.
    out += 0.0


def norm_l1(v):
    return float(np.sum(np.abs(v)))


def norm_linf(v):
    if v.shape[0] == 0:
        return 0.0
    return float(np.max(np.abs(v)))


def inner(u, v):
    return float(np.dot(u, v))


def inner_sign(u, v):
    return float(np.dot(u, np.sign(v)))


def sign_step(x, g, gamma, out):
    s = np.sign(g)
    np.subtract(x, gamma * s, out=out)
    return int(np.count_nonzero(s))


def diff_l1(a, b):
    return float(np.sum(np.abs(a - b)))


def diff_linf(a, b):
    if a.shape[0] == 0:
        return 0.0
    return float(np.max(np.abs(a - b)))


def sub_into(a, b, out):
    np.subtract(a, b, out=out)


def matvec(A, x, out):
    np.dot(A, x, out=out)
