# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loops: Sturm counts, bisection, shifted tridiagonal
solves and the lower-triangular Toeplitz product behind Grunwald-Letnikov
sums.  ``_pykernels`` mirrors every function here."""

import numpy as np
from libc.math cimport fabs, fmax

cdef double EPS = 2.220446049250313e-16
cdef double SAFMIN = 2.2250738585072014e-308


cdef Py_ssize_t _count(const double[::1] d, const double[::1] e2, double x,
                       double pivmin) noexcept nogil:
    cdef Py_ssize_t n = d.shape[0]
    cdef Py_ssize_t i, cnt = 0
    cdef double q = d[0] - x
    if fabs(q) <= pivmin:
        q = -pivmin
    if q < 0.0:
        cnt += 1
    for i in range(1, n):
        q = d[i] - x - e2[i - 1] / q
        if fabs(q) <= pivmin:
            q = -pivmin
        if q < 0.0:
            cnt += 1
    return cnt


def pivot_floor(double[::1] e2):
    cdef Py_ssize_t i
    cdef double m = 1.0
    for i in range(e2.shape[0]):
        if e2[i] > m:
            m = e2[i]
    return SAFMIN * m


def sturm_count(double[::1] d, double[::1] e2, double x):
    """Number of eigenvalues strictly below ``x``."""
    return _count(d, e2, x, pivot_floor(e2))


def gershgorin(double[::1] d, double[::1] e):
    cdef Py_ssize_t n = d.shape[0]
    cdef Py_ssize_t i
    cdef double lo = d[0], hi = d[0], r
    for i in range(n):
        r = 0.0
        if i > 0:
            r += fabs(e[i - 1])
        if i < n - 1:
            r += fabs(e[i])
        if d[i] - r < lo:
            lo = d[i] - r
        if d[i] + r > hi:
            hi = d[i] + r
    return lo, hi


def bisect_eigenvalues(double[::1] d, double[::1] e, Py_ssize_t first,
                       Py_ssize_t count, double abstol, int maxiter):
    """Eigenvalues ``first .. first+count-1`` (ascending) by bisection.

    Returns ``(values, worst_iterations)``; ``worst_iterations > maxiter``
    signals a bracket that failed to close.
    """
    cdef Py_ssize_t n = d.shape[0]
    cdef Py_ssize_t k, i
    cdef int it, worst = 0
    cdef double lo, hi, mid, width, tol, glo, ghi, pivmin
    e2_arr = np.empty(max(n - 1, 0), dtype=np.float64)
    cdef double[::1] e2 = e2_arr
    for i in range(n - 1):
        e2[i] = e[i] * e[i]
    pivmin = pivot_floor(e2)
    glo, ghi = gershgorin(d, e)
    width = fmax(fabs(glo), fabs(ghi))
    glo -= 2.0 * EPS * width * n + 2.0 * pivmin
    ghi += 2.0 * EPS * width * n + 2.0 * pivmin
    out = np.empty(count, dtype=np.float64)
    cdef double[::1] res = out
    with nogil:
        for k in range(first, first + count):
            lo = glo
            hi = ghi
            it = 0
            while True:
                tol = fmax(abstol, 2.0 * EPS * fmax(fabs(lo), fabs(hi)))
                if hi - lo <= tol:
                    break
                mid = 0.5 * (lo + hi)
                if mid <= lo or mid >= hi:
                    break
                if _count(d, e2, mid, pivmin) > k:
                    hi = mid
                else:
                    lo = mid
                it += 1
                if it > maxiter:
                    break
            res[k - first] = 0.5 * (lo + hi)
            if it > worst:
                worst = it
    return out, worst


def tridiag_shifted_solve(double[::1] d, double[::1] e, double sigma,
                          double[::1] rhs):
    """Solve ``(T - sigma I) x = rhs`` by LU with partial pivoting.

    Exactly singular pivots are nudged to ``eps * |T|`` so the routine can
    drive inverse iteration at a converged eigenvalue.
    """
    cdef Py_ssize_t n = d.shape[0]
    cdef Py_ssize_t i
    cdef double fact, temp, tiny, scale = 0.0
    diag_a = np.empty(n)
    low_a = np.empty(max(n - 1, 0))
    up_a = np.empty(max(n - 1, 0))
    up2_a = np.zeros(max(n - 2, 0))
    piv_a = np.zeros(max(n - 1, 0), dtype=np.intp)
    x_a = np.array(rhs, dtype=np.float64, copy=True)
    cdef double[::1] D = diag_a
    cdef double[::1] DL = low_a
    cdef double[::1] DU = up_a
    cdef double[::1] DU2 = up2_a
    cdef Py_ssize_t[::1] piv = piv_a
    cdef double[::1] b = x_a
    with nogil:
        for i in range(n):
            D[i] = d[i] - sigma
            scale = fmax(scale, fabs(D[i]))
        for i in range(n - 1):
            DL[i] = e[i]
            DU[i] = e[i]
            scale = fmax(scale, fabs(e[i]))
        tiny = EPS * fmax(scale, SAFMIN)
        for i in range(n - 1):
            piv[i] = i
            if fabs(D[i]) >= fabs(DL[i]):
                if D[i] == 0.0:
                    D[i] = tiny
                fact = DL[i] / D[i]
                DL[i] = fact
                D[i + 1] = D[i + 1] - fact * DU[i]
            else:
                fact = D[i] / DL[i]
                D[i] = DL[i]
                DL[i] = fact
                temp = DU[i]
                DU[i] = D[i + 1]
                D[i + 1] = temp - fact * D[i + 1]
                if i < n - 2:
                    DU2[i] = DU[i + 1]
                    DU[i + 1] = -fact * DU[i + 1]
                piv[i] = i + 1
        for i in range(n):
            if fabs(D[i]) < tiny:
                D[i] = tiny if D[i] >= 0.0 else -tiny
        for i in range(n - 1):
            if piv[i] == i:
                b[i + 1] = b[i + 1] - DL[i] * b[i]
            else:
                temp = b[i] - DL[i] * b[i + 1]
                b[i] = b[i + 1]
                b[i + 1] = temp
        b[n - 1] = b[n - 1] / D[n - 1]
        if n > 1:
            b[n - 2] = (b[n - 2] - DU[n - 2] * b[n - 1]) / D[n - 2]
        for i in range(n - 3, -1, -1):
            b[i] = (b[i] - DU[i] * b[i + 1] - DU2[i] * b[i + 2]) / D[i]
    return x_a


def toeplitz_lower_apply(double[::1] weights, double[::1] values):
    """``out[i] = sum_{k<=i} weights[k] * values[i-k]``."""
    cdef Py_ssize_t n = values.shape[0]
    cdef Py_ssize_t i, k
    cdef double acc
    out = np.empty(n)
    cdef double[::1] res = out
    with nogil:
        for i in range(n):
            acc = 0.0
            for k in range(i + 1):
                acc = acc + weights[k] * values[i - k]
            res[i] = acc
    return out
