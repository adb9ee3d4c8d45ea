# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled eigensolver kernels: cyclic Jacobi and Householder + QL.

Mirrors _kernels_py.py operation for operation; only the loop mechanics
differ.  Compiled with -ffp-contract=off so both backends round alike.
"""

import numpy as np

cimport cython
from libc.math cimport fabs, hypot, sqrt

BACKEND_NAME = "compiled"


def jacobi_eigh(double[:, ::1] a, bint want_vectors, long max_rotations):
    """Cyclic Jacobi on a symmetric matrix (upper triangle is referenced).

    Returns (eigenvalues, eigenvectors or None, rotations, converged).
    ``a`` is destroyed.
    """
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t p, q, j
    cdef long nrot = 0
    cdef int sweep
    cdef double off, thresh, apq, g, h, t, theta, c, s, tau, hh, ap, aq
    v_arr = np.eye(n) if want_vectors else None
    cdef double[:, ::1] v = v_arr if want_vectors else None

    if n == 1:
        return np.asarray(a).diagonal().copy(), v_arr, 0, True

    for sweep in range(1, 100):
        off = 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                off += fabs(a[p, q])
        if off == 0.0:
            return np.asarray(a).diagonal().copy(), v_arr, nrot, True
        thresh = 0.2 * off / (n * n) if sweep < 4 else 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                g = 100.0 * fabs(apq)
                if (sweep > 4
                        and fabs(a[p, p]) + g == fabs(a[p, p])
                        and fabs(a[q, q]) + g == fabs(a[q, q])):
                    a[p, q] = 0.0
                elif fabs(apq) > thresh:
                    h = a[q, q] - a[p, p]
                    if fabs(h) + g == fabs(h):
                        t = apq / h
                    else:
                        theta = 0.5 * h / apq
                        t = 1.0 / (fabs(theta) + sqrt(1.0 + theta * theta))
                        if theta < 0.0:
                            t = -t
                    c = 1.0 / sqrt(1.0 + t * t)
                    s = t * c
                    tau = s / (1.0 + c)
                    hh = t * apq
                    a[p, p] -= hh
                    a[q, q] += hh
                    a[p, q] = 0.0
                    for j in range(p):
                        ap = a[j, p]
                        aq = a[j, q]
                        a[j, p] = ap - s * (aq + tau * ap)
                        a[j, q] = aq + s * (ap - tau * aq)
                    for j in range(p + 1, q):
                        ap = a[p, j]
                        aq = a[j, q]
                        a[p, j] = ap - s * (aq + tau * ap)
                        a[j, q] = aq + s * (ap - tau * aq)
                    for j in range(q + 1, n):
                        ap = a[p, j]
                        aq = a[q, j]
                        a[p, j] = ap - s * (aq + tau * ap)
                        a[q, j] = aq + s * (ap - tau * aq)
                    if want_vectors:
                        for j in range(n):
                            ap = v[j, p]
                            aq = v[j, q]
                            v[j, p] = ap - s * (aq + tau * ap)
                            v[j, q] = aq + s * (ap - tau * aq)
                    nrot += 1
                    if nrot > max_rotations:
                        return np.asarray(a).diagonal().copy(), v_arr, nrot, False
    return np.asarray(a).diagonal().copy(), v_arr, nrot, False


def tridiag_eigh(double[:, ::1] a, bint want_vectors):
    """Householder tridiagonalization + implicit-shift QL.

    Returns (eigenvalues, eigenvectors or None, converged).  ``a`` is
    destroyed.  Used above the Jacobi size limit.
    """
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t k, i, j
    cdef double norm_x, alpha, vnorm2, beta, kappa, acc
    q_arr = np.eye(n)
    cdef double[:, ::1] q = q_arr
    d_arr = np.empty(n)
    e_arr = np.zeros(n)
    cdef double[::1] d = d_arr
    cdef double[::1] e = e_arr
    vec_arr = np.empty(n)
    w_arr = np.empty(n)
    t_arr = np.empty(n)
    cdef double[::1] vec = vec_arr
    cdef double[::1] w = w_arr
    cdef double[::1] t = t_arr

    for k in range(n - 2):
        norm_x = 0.0
        for i in range(k + 1, n):
            norm_x += a[i, k] * a[i, k]
        norm_x = sqrt(norm_x)
        if norm_x == 0.0:
            e[k] = 0.0
            continue
        alpha = -norm_x if a[k + 1, k] >= 0.0 else norm_x
        vnorm2 = 0.0
        for i in range(k + 1, n):
            vec[i] = a[i, k]
        vec[k + 1] -= alpha
        for i in range(k + 1, n):
            vnorm2 += vec[i] * vec[i]
        if vnorm2 == 0.0:
            e[k] = alpha
            continue
        beta = 2.0 / vnorm2
        for i in range(k + 1, n):
            acc = 0.0
            for j in range(k + 1, n):
                acc += a[i, j] * vec[j]
            w[i] = beta * acc
        kappa = 0.0
        for i in range(k + 1, n):
            kappa += vec[i] * w[i]
        kappa *= 0.5 * beta
        for i in range(k + 1, n):
            w[i] -= kappa * vec[i]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i, j] -= w[i] * vec[j] + vec[i] * w[j]
        for i in range(k + 1, n):
            a[i, k] = 0.0
            a[k, i] = 0.0
        a[k + 1, k] = alpha
        a[k, k + 1] = alpha
        e[k] = alpha
        for i in range(n):
            acc = 0.0
            for j in range(k + 1, n):
                acc += q[i, j] * vec[j]
            t[i] = beta * acc
        for i in range(n):
            for j in range(k + 1, n):
                q[i, j] -= t[i] * vec[j]
    if n >= 2:
        e[n - 2] = a[n - 1, n - 2]
    for i in range(n):
        d[i] = a[i, i]
    e[n - 1] = 0.0
    ok = _ql_implicit(d, e, q if want_vectors else None)
    return d_arr, (q_arr if want_vectors else None), ok


cdef bint _ql_implicit(double[::1] d, double[::1] e, double[:, ::1] z):
    """QL with implicit shifts on a tridiagonal (d, e); e[i] couples i, i+1."""
    cdef Py_ssize_t n = d.shape[0]
    cdef Py_ssize_t l, m, i, j
    cdef int iteration
    cdef bint interrupted
    cdef double dd, g, r, s, c, p, f, b, zi1, row, anorm, floor
    cdef double eps = np.finfo(np.float64).eps
    # Absolute deflation floor at eps * ||T||_inf: a purely relative test
    # stalls inside degenerate near-zero clusters (|d| ~ rounding noise),
    # and dropping an e below this floor is a machine-precision backward
    # perturbation of the matrix.
    anorm = 0.0
    for i in range(n):
        row = fabs(d[i]) + fabs(e[i])
        if i > 0:
            row += fabs(e[i - 1])
        if row > anorm:
            anorm = row
    floor = eps * anorm
    for l in range(n):
        iteration = 0
        while True:
            m = l
            while m < n - 1:
                dd = fabs(d[m]) + fabs(d[m + 1])
                if fabs(e[m]) <= eps * dd or fabs(e[m]) <= floor:
                    break
                m += 1
            if m == l:
                break
            iteration += 1
            if iteration > 50:
                return False
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + (r if g >= 0.0 else -r))
            s = 1.0
            c = 1.0
            p = 0.0
            interrupted = False
            for i in range(m - 1, l - 1, -1):
                f = s * e[i]
                b = c * e[i]
                r = hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    interrupted = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
                if z is not None:
                    for j in range(z.shape[0]):
                        zi1 = z[j, i + 1]
                        z[j, i + 1] = s * z[j, i] + c * zi1
                        z[j, i] = c * z[j, i] - s * zi1
            if not interrupted:
                d[l] -= p
                e[l] = g
                e[m] = 0.0
    return True
