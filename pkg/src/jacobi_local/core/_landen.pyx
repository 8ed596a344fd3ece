# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled descending-Landen kernel for real-argument Jacobi functions."""

import numpy as np
cimport numpy as cnp
from libc.math cimport sqrt, sin, cos, asin, fabs, tanh, cosh, atan, sinh, nearbyint, M_PI

cnp.import_array()

DEF NMAX = 48


cdef inline void _one(double x, double m, double* sn, double* cn, double* dn,
                      double* am, double* zeta) noexcept nogil:
    cdef double a[NMAX]
    cdef double c[NMAX]
    cdef double b, m1, K, q, x0, phi, s0, c0, zsum, two_n
    cdef int n, N, iq

    if m == 0.0:
        sn[0] = sin(x)
        cn[0] = cos(x)
        dn[0] = 1.0
        am[0] = x
        zeta[0] = 0.0
        return
    if m == 1.0:
        sn[0] = tanh(x)
        cn[0] = 1.0 / cosh(x)
        dn[0] = cn[0]
        am[0] = atan(sinh(x))
        zeta[0] = sn[0]
        return

    m1 = 1.0 - m
    a[0] = 1.0
    b = sqrt(m1)
    c[0] = sqrt(m)
    N = 0
    while N < NMAX - 1:
        a[N + 1] = 0.5 * (a[N] + b)
        c[N + 1] = 0.25 * c[N] * c[N] / a[N + 1]
        b = sqrt(a[N] * b)
        N += 1
        if fabs(c[N]) < 1e-15 * a[N]:
            break
    K = M_PI / (2.0 * a[N])

    q = nearbyint(x / (2.0 * K))
    x0 = x - q * (2.0 * K)
    iq = <int>q

    two_n = 1.0
    for n in range(N):
        two_n *= 2.0
    phi = two_n * a[N] * x0
    zsum = 0.0
    for n in range(N, 0, -1):
        zsum += c[n] * sin(phi)
        phi = 0.5 * (phi + asin(c[n] / a[n] * sin(phi)))

    s0 = sin(phi)
    c0 = cos(phi)
    if iq % 2 != 0:
        sn[0] = -s0
        cn[0] = -c0
    else:
        sn[0] = s0
        cn[0] = c0
    dn[0] = sqrt(c0 * c0 + m1 * s0 * s0)
    am[0] = phi + q * M_PI
    zeta[0] = zsum


def ellipj_landen(x, m):
    """Return (sn, cn, dn, am, Z) arrays for broadcast real arrays ``x`` and ``m``."""
    xb, mb = np.broadcast_arrays(np.asarray(x, dtype=np.float64),
                                 np.asarray(m, dtype=np.float64))
    shape = xb.shape
    cdef double[::1] xs = np.array(xb, dtype=np.float64, order="C").ravel()
    cdef double[::1] ms = np.array(mb, dtype=np.float64, order="C").ravel()
    cdef Py_ssize_t size = xs.shape[0]
    res = np.empty((5, size), dtype=np.float64)
    cdef double[:, ::1] out = res
    cdef Py_ssize_t i
    with nogil:
        for i in range(size):
            _one(xs[i], ms[i], &out[0, i], &out[1, i], &out[2, i], &out[3, i], &out[4, i])
    return (res[0].reshape(shape), res[1].reshape(shape), res[2].reshape(shape),
            res[3].reshape(shape), res[4].reshape(shape))
