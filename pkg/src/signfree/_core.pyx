# Hot per-iteration kernels: three-case sign, l1/linf norms, fused sign
# steps and difference norms, and a small dense matvec.  Mirrors the pure
# numpy implementations in _core_py; backend.py picks one at import time.

cimport cython

from libc.math cimport fabs


cpdef void sign_into(const double[::1] v, double[::1] out):
    cdef Py_ssize_t i, n = v.shape[0]
    for i in range(n):
        if v[i] > 0.0:
            out[i] = 1.0
        elif v[i] < 0.0:
            out[i] = -1.0
        else:
            out[i] = 0.0


cpdef double norm_l1(const double[::1] v):
    cdef Py_ssize_t i, n = v.shape[0]
    cdef double s = 0.0
    for i in range(n):
        s += fabs(v[i])
    return s


cpdef double norm_linf(const double[::1] v):
    cdef Py_ssize_t i, n = v.shape[0]
    cdef double m = 0.0, a
    for i in range(n):
        a = fabs(v[i])
        if a > m:
            m = a
    return m


cpdef double inner(const double[::1] u, const double[::1] v):
    cdef Py_ssize_t i, n = u.shape[0]
    cdef double s = 0.0
    for i in range(n):
        s += u[i] * v[i]
    return s


cpdef double inner_sign(const double[::1] u, const double[::1] v):
    # <u, sign(v)> without materializing sign(v).
    cdef Py_ssize_t i, n = u.shape[0]
    cdef double s = 0.0
    for i in range(n):
        if v[i] > 0.0:
            s += u[i]
        elif v[i] < 0.0:
            s -= u[i]
    return s


cpdef Py_ssize_t sign_step(const double[::1] x, const double[::1] g,
                           double gamma, double[::1] out):
    # out = x - gamma*sign(g); returns the number of moved coordinates.
    cdef Py_ssize_t i, moved = 0, n = x.shape[0]
    for i in range(n):
        if g[i] > 0.0:
            out[i] = x[i] - gamma
            moved += 1
        elif g[i] < 0.0:
            out[i] = x[i] + gamma
            moved += 1
        else:
            out[i] = x[i]
    return moved


cpdef double diff_l1(const double[::1] a, const double[::1] b):
    cdef Py_ssize_t i, n = a.shape[0]
    cdef double s = 0.0
    for i in range(n):
        s += fabs(a[i] - b[i])
    return s


cpdef double diff_linf(const double[::1] a, const double[::1] b):
    cdef Py_ssize_t i, n = a.shape[0]
    cdef double m = 0.0, d
    for i in range(n):
        d = fabs(a[i] - b[i])
        if d > m:
            m = d
    return m


cpdef void sub_into(const double[::1] a, const double[::1] b, double[::1] out):
    cdef Py_ssize_t i, n = a.shape[0]
    for i in range(n):
        out[i] = a[i] - b[i]


cpdef void matvec(const double[:, ::1] A, const double[::1] x, double[::1] out):
    cdef Py_ssize_t i, j, n = A.shape[0], m = A.shape[1]
    cdef double s
    for i in range(n):
        s = 0.0
        for j in range(m):
            s += A[i, j] * x[j]
        out[i] = s
