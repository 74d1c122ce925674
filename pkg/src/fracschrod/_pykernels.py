"""Pure-Python twins of the compiled kernels in ``_kernels.pyx``.

Selected automatically when the extension is missing, or on demand with
``FRACSCHROD_PURE_PYTHON=1``.  Signatures and return types match.
"""

import numpy as np

EPS = 2.220446049250313e-16
SAFMIN = 2.2250738585072014e-308


def _count(d, e2, x, pivmin):
    q = d[0] - x
    if abs(q) <= pivmin:
        q = -pivmin
    cnt = 1 if q < 0.0 else 0
    for i in range(1, len(d)):
        q = d[i] - x - e2[i - 1] / q
        if abs(q) <= pivmin:
            q = -pivmin
        if q < 0.0:
            cnt += 1
    return cnt


def pivot_floor(e2):
    return SAFMIN * max([1.0, *e2])


def sturm_count(d, e2, x):
    """Number of eigenvalues strictly below ``x``."""
    d = [float(v) for v in d]
    e2 = [float(v) for v in e2]
    return _count(d, e2, float(x), pivot_floor(e2))


def gershgorin(d, e):
    n = len(d)
    lo = hi = float(d[0])
    for i in range(n):
        r = (abs(e[i - 1]) if i > 0 else 0.0) + (abs(e[i]) if i < n - 1 else 0.0)
        lo = min(lo, d[i] - r)
        hi = max(hi, d[i] + r)
    return lo, hi


def bisect_eigenvalues(d, e, first, count, abstol, maxiter):
    """Eigenvalues ``first .. first+count-1`` (ascending) by bisection."""
    n = len(d)
    d = [float(v) for v in d]
    e = [float(v) for v in e]
    e2 = [v * v for v in e]
    pivmin = pivot_floor(e2)
    glo, ghi = gershgorin(d, e)
    width = max(abs(glo), abs(ghi))
    glo -= 2.0 * EPS * width * n + 2.0 * pivmin
    ghi += 2.0 * EPS * width * n + 2.0 * pivmin
    out = np.empty(count)
    worst = 0
    for k in range(first, first + count):
        lo, hi, it = glo, ghi, 0
        while True:
            tol = max(abstol, 2.0 * EPS * max(abs(lo), abs(hi)))
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
        out[k - first] = 0.5 * (lo + hi)
        worst = max(worst, it)
    return out, worst


def tridiag_shifted_solve(d, e, sigma, rhs):
    """Solve ``(T - sigma I) x = rhs`` by LU with partial pivoting."""
    n = len(d)
    D = [float(v) - sigma for v in d]
    DL = [float(v) for v in e]
    DU = list(DL)
    DU2 = [0.0] * max(n - 2, 0)
    piv = list(range(max(n - 1, 0)))
    b = [float(v) for v in rhs]
    scale = max([0.0, *map(abs, D), *map(abs, DL)])
    tiny = EPS * max(scale, SAFMIN)
    for i in range(n - 1):
        if abs(D[i]) >= abs(DL[i]):
            if D[i] == 0.0:
                D[i] = tiny
            fact = DL[i] / D[i]
            DL[i] = fact
            D[i + 1] -= fact * DU[i]
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
        if abs(D[i]) < tiny:
            D[i] = tiny if D[i] >= 0.0 else -tiny
    for i in range(n - 1):
        if piv[i] == i:
            b[i + 1] -= DL[i] * b[i]
        else:
            b[i], b[i + 1] = b[i + 1], b[i] - DL[i] * b[i + 1]
    b[n - 1] /= D[n - 1]
    if n > 1:
        b[n - 2] = (b[n - 2] - DU[n - 2] * b[n - 1]) / D[n - 2]
    for i in range(n - 3, -1, -1):
        b[i] = (b[i] - DU[i] * b[i + 1] - DU2[i] * b[i + 2]) / D[i]
    return np.asarray(b)


def toeplitz_lower_apply(weights, values):
    """``out[i] = sum_{k<=i} weights[k] * values[i-k]``."""
    values = np.asarray(values, dtype=float)
    n = len(values)
    return np.convolve(np.asarray(weights[:n], dtype=float), values)[:n]
