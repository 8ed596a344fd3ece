"""Pure NumPy twin of the compiled Landen kernel.

Same algorithm and the same operation order as ``_landen.pyx``; used when the
extension is not built or ``JACOBI_LOCAL_PURE=1`` is set.
"""

import numpy as np

NMAX = 48


def ellipj_landen(x, m):
    """Return (sn, cn, dn, am, Z) arrays for broadcast real arrays ``x`` and ``m``."""
    xb, mb = np.broadcast_arrays(np.asarray(x, dtype=np.float64),
                                 np.asarray(m, dtype=np.float64))
    shape = xb.shape
    x = xb.ravel().copy()
    m = mb.ravel().copy()

    sn = np.empty_like(x)
    cn = np.empty_like(x)
    dn = np.empty_like(x)
    am = np.empty_like(x)
    zeta = np.empty_like(x)

    lo = m == 0.0
    hi = m == 1.0
    mid = ~(lo | hi)

    if lo.any():
        sn[lo] = np.sin(x[lo])
        cn[lo] = np.cos(x[lo])
        dn[lo] = 1.0
        am[lo] = x[lo]
        zeta[lo] = 0.0
    if hi.any():
        xh = x[hi]
        sn[hi] = np.tanh(xh)
        cn[hi] = 1.0 / np.cosh(xh)
        dn[hi] = cn[hi]
        am[hi] = np.arctan(np.sinh(xh))
        zeta[hi] = sn[hi]
    if mid.any():
        out = _landen_mid(x[mid], m[mid])
        for arr, val in zip((sn, cn, dn, am, zeta), out):
            arr[mid] = val

    return tuple(arr.reshape(shape) for arr in (sn, cn, dn, am, zeta))


def _landen_mid(x, m):
    m1 = 1.0 - m
    a = [np.ones_like(m)]
    c = [np.sqrt(m)]
    b = np.sqrt(m1)
    steps = np.zeros(m.shape, dtype=int)
    active = np.ones(m.shape, dtype=bool)
    while active.any() and len(a) < NMAX:
        an = 0.5 * (a[-1] + b)
        cn_ = 0.25 * c[-1] * c[-1] / an
        b = np.sqrt(a[-1] * b)
        # converged lanes freeze: a stays, c is zero
        an = np.where(active, an, a[-1])
        cn_ = np.where(active, cn_, 0.0)
        a.append(an)
        c.append(cn_)
        steps += active
        active = active & ~(np.abs(cn_) < 1e-15 * an)
    N = len(a) - 1
    aN = a[N]
    K = np.pi / (2.0 * aN)

    q = np.rint(x / (2.0 * K))
    x0 = x - q * (2.0 * K)

    phi = (2.0 ** N) * aN * x0
    zsum = np.zeros_like(x)
    for n in range(N, 0, -1):
        zsum += c[n] * np.sin(phi)
        phi = 0.5 * (phi + np.arcsin(c[n] / a[n] * np.sin(phi)))

    s0 = np.sin(phi)
    c0 = np.cos(phi)
    sign = np.where(np.mod(q, 2.0) != 0.0, -1.0, 1.0)
    dn = np.sqrt(c0 * c0 + m1 * s0 * s0)
    return sign * s0, sign * c0, dn, phi + q * np.pi, zsum
