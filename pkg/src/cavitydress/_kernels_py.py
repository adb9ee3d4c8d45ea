"""Pure numpy eigensolver kernels, the fallback when the compiled extension
is unavailable.

Both backends implement the identical arithmetic: cyclic Jacobi rotations
with the threshold schedule of the classic formulation, and Householder
tridiagonalization followed by implicit-shift QL.  Rotations here are
applied with vectorized row/column updates; the compiled kernel uses plain
loops over the same update formulas.
"""

from __future__ import annotations

import numpy as np

BACKEND_NAME = "python"


def jacobi_eigh(a: np.ndarray, want_vectors: bool, max_rotations: int):
    """Cyclic Jacobi on a symmetric matrix (upper triangle is referenced).

    Returns (eigenvalues, eigenvectors or None, rotations, converged).
    ``a`` is destroyed.
    """
    n = a.shape[0]
    v = np.eye(n) if want_vectors else None
    if n == 1:
        return np.diag(a).copy(), v, 0, True
    nrot = 0
    for sweep in range(1, 100):
        off = 0.0
        for p in range(n - 1):
            off += float(np.sum(np.abs(a[p, p + 1 :])))
        if off == 0.0:
            return np.diag(a).copy(), v, nrot, True
        thresh = 0.2 * off / (n * n) if sweep < 4 else 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                g = 100.0 * abs(apq)
                # Past the early sweeps, entries that no longer move the
                # diagonal at working precision are flushed to zero.
                if (
                    sweep > 4
                    and abs(a[p, p]) + g == abs(a[p, p])
                    and abs(a[q, q]) + g == abs(a[q, q])
                ):
                    a[p, q] = 0.0
                elif abs(apq) > thresh:
                    h = a[q, q] - a[p, p]
                    if abs(h) + g == abs(h):
                        t = apq / h
                    else:
                        theta = 0.5 * h / apq
                        t = 1.0 / (abs(theta) + np.sqrt(1.0 + theta * theta))
                        if theta < 0.0:
                            t = -t
                    c = 1.0 / np.sqrt(1.0 + t * t)
                    s = t * c
                    tau = s / (1.0 + c)
                    hh = t * apq
                    a[p, p] -= hh
                    a[q, q] += hh
                    a[p, q] = 0.0
                    if p > 0:
                        ap = a[:p, p].copy()
                        aq = a[:p, q]
                        a[:p, p] = ap - s * (aq + tau * ap)
                        a[:p, q] = aq + s * (ap - tau * aq)
                    if q - p > 1:
                        ap = a[p, p + 1 : q].copy()
                        aq = a[p + 1 : q, q]
                        a[p, p + 1 : q] = ap - s * (aq + tau * ap)
                        a[p + 1 : q, q] = aq + s * (ap - tau * aq)
                    if q < n - 1:
                        ap = a[p, q + 1 :].copy()
                        aq = a[q, q + 1 :]
                        a[p, q + 1 :] = ap - s * (aq + tau * ap)
                        a[q, q + 1 :] = aq + s * (ap - tau * aq)
                    if v is not None:
                        vp = v[:, p].copy()
                        vq = v[:, q]
                        v[:, p] = vp - s * (vq + tau * vp)
                        v[:, q] = vq + s * (vp - tau * vq)
                    nrot += 1
                    if nrot > max_rotations:
                        return np.diag(a).copy(), v, nrot, False
    return np.diag(a).copy(), v, nrot, False


def tridiag_eigh(a: np.ndarray, want_vectors: bool):
    """Householder tridiagonalization + implicit-shift QL.

    Returns (eigenvalues, eigenvectors or None, converged).  ``a`` is
    destroyed.  Used above the Jacobi size limit.
    """
    n = a.shape[0]
    q = np.eye(n)
    d = np.empty(n)
    e = np.zeros(n)
    for k in range(n - 2):
        x = a[k + 1 :, k]
        norm_x = float(np.sqrt(np.dot(x, x)))
        if norm_x == 0.0:
            e[k] = 0.0
            continue
        alpha = -norm_x if x[0] >= 0.0 else norm_x
        vec = x.copy()
        vec[0] -= alpha
        vnorm2 = float(np.dot(vec, vec))
        if vnorm2 == 0.0:
            e[k] = alpha
            continue
        beta = 2.0 / vnorm2
        # two-sided update of the trailing block: A <- A - w v^T - v w^T
        w = beta * (a[k + 1 :, k + 1 :] @ vec)
        kappa = 0.5 * beta * float(np.dot(vec, w))
        w -= kappa * vec
        a[k + 1 :, k + 1 :] -= np.outer(w, vec) + np.outer(vec, w)
        a[k + 1 :, k] = 0.0
        a[k, k + 1 :] = 0.0
        a[k + 1, k] = alpha
        a[k, k + 1] = alpha
        e[k] = alpha
        t = beta * (q[:, k + 1 :] @ vec)
        q[:, k + 1 :] -= np.outer(t, vec)
    if n >= 2:
        e[n - 2] = a[n - 1, n - 2]
    d[:] = np.diag(a)
    sub = np.zeros(n)
    sub[: n - 1] = e[: n - 1]
    z = q if want_vectors else None
    ok = _ql_implicit(d, sub, z)
    return d, z, ok


def _ql_implicit(d: np.ndarray, e: np.ndarray, z) -> bool:
    """QL with implicit shifts on a tridiagonal (d, e); e[i] couples i, i+1.

    Rotations are accumulated into the columns of z when given.  Returns
    False if any eigenvalue fails to converge within the iteration budget.
    """
    n = d.shape[0]
    eps = np.finfo(np.float64).eps
    # Absolute deflation floor at eps * ||T||_inf: a purely relative test
    # stalls inside degenerate near-zero clusters (|d| ~ rounding noise),
    # and dropping an e below this floor is a machine-precision backward
    # perturbation of the matrix.
    anorm = 0.0
    for i in range(n):
        row = abs(d[i]) + abs(e[i])
        if i > 0:
            row += abs(e[i - 1])
        if row > anorm:
            anorm = row
    floor = eps * anorm
    for l in range(n):
        iteration = 0
        while True:
            m = l
            while m < n - 1:
                dd = abs(d[m]) + abs(d[m + 1])
                if abs(e[m]) <= eps * dd or abs(e[m]) <= floor:
                    break
                m += 1
            if m == l:
                break
            iteration += 1
            if iteration > 50:
                return False
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = np.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + (r if g >= 0.0 else -r))
            s = 1.0
            c = 1.0
            p = 0.0
            for i in range(m - 1, l - 1, -1):
                f = s * e[i]
                b = c * e[i]
                r = np.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
                if z is not None:
                    zi1 = z[:, i + 1].copy()
                    z[:, i + 1] = s * z[:, i] + c * zi1
                    z[:, i] = c * z[:, i] - s * zi1
            else:
                d[l] -= p
                e[l] = g
                e[m] = 0.0
    return True
