"""Jacobi elliptic functions, elliptic integrals and the Jacobi zeta function.

Real arguments go through the descending Landen kernel (compiled when
available).  Complex arguments use Jacobi's imaginary transformation for the
imaginary part and the addition formulas to recombine.  Incomplete integrals
use Carlson's symmetric forms.

The modulus parameter ``m`` is ``k**2`` throughout.
"""

from dataclasses import dataclass
from functools import lru_cache
import math

import numpy as np

from ._backend import ellipj_landen, BACKEND

__all__ = [
    "BACKEND",
    "DomainError",
    "PoleProximityError",
    "JacobiValues",
    "CompleteIntegrals",
    "ComplexJacobi",
    "complete_integrals",
    "ellipk",
    "ellipe",
    "ellipj",
    "jacobi_all",
    "jacobi_values",
    "jacobi_amplitude",
    "jacobi_zeta",
    "incomplete_integrals",
    "ellipf_inc",
    "ellipe_inc",
    "ellippi_inc",
    "carlson_rf",
    "carlson_rd",
    "carlson_rj",
    "carlson_rc",
    "ellipj_complex",
    "zeta_complex",
    "jacobi_complex",
    "POLE_EXCLUSION",
    "derivative_poly",
    "jacobi_derivative",
]

POLE_EXCLUSION = 1e-6


class DomainError(ValueError):
    """Argument outside the domain where a function is defined or finite."""


class PoleProximityError(DomainError):
    """Complex argument too close to the pole lattice iK' + 2jK + 2ikK'."""

    def __init__(self, z, distance):
        self.z = z
        self.distance = distance
        super().__init__(
            f"z={z!r} lies within {distance:.3e} of a pole "
            f"(exclusion radius {POLE_EXCLUSION:g})"
        )


def _check_m(m, allow_one=True):
    marr = np.asarray(m, dtype=np.float64)
    if np.any(~np.isfinite(marr)) or np.any(marr < 0.0) or np.any(marr > 1.0):
        raise DomainError(f"modulus parameter m must lie in [0, 1], got {m!r}")
    if not allow_one and np.any(marr == 1.0):
        raise DomainError("m = 1 not allowed here (K is infinite)")
    return marr


@dataclass(frozen=True)
class JacobiValues:
    x: float
    m: float
    sn: float
    cn: float
    dn: float

    @property
    def cs(self):
        return self.cn / self.sn

    @property
    def ds(self):
        return self.dn / self.sn

    @property
    def ns(self):
        return 1.0 / self.sn

    @property
    def nc(self):
        return 1.0 / self.cn

    @property
    def dc(self):
        return self.dn / self.cn

    @property
    def sc(self):
        return self.sn / self.cn


@dataclass(frozen=True)
class CompleteIntegrals:
    m: float
    K: float
    Kprime: float
    E: float
    Eprime: float


@dataclass(frozen=True)
class ComplexJacobi:
    z: complex
    m: float
    sn: complex
    cn: complex
    dn: complex
    Z: complex


# --------------------------------------------------------------------------
# complete integrals


def _agm_KE(m):
    """K(m), E(m) by the arithmetic-geometric mean, vectorised over ``m``."""
    m = np.asarray(m, dtype=np.float64)
    K = np.empty_like(m)
    E = np.empty_like(m)
    one = m == 1.0
    K[one] = np.inf
    E[one] = 1.0
    rest = ~one
    if rest.any():
        mm = m[rest]
        a = np.ones_like(mm)
        b = np.sqrt(1.0 - mm)
        c = np.sqrt(mm)
        acc = 0.5 * c * c
        weight = 0.5
        for _ in range(48):
            an = 0.5 * (a + b)
            c = 0.25 * c * c / an
            b = np.sqrt(a * b)
            a = an
            weight *= 2.0
            acc = acc + weight * c * c
            if np.all(np.abs(c) < 1e-15 * a):
                break
        k = np.pi / (2.0 * a)
        K[rest] = k
        E[rest] = k * (1.0 - acc)
    return K, E


def ellipk(m):
    """Complete integral of the first kind; ``inf`` at m = 1."""
    marr = _check_m(m)
    K, _ = _agm_KE(np.atleast_1d(marr))
    return K.reshape(marr.shape)[()]


def ellipe(m):
    """Complete integral of the second kind."""
    marr = _check_m(m)
    _, E = _agm_KE(np.atleast_1d(marr))
    return E.reshape(marr.shape)[()]


@lru_cache(maxsize=4096)
def complete_integrals(m):
    """K, K' = K(1-m), E and E' = E(1-m) for a scalar ``m`` in [0, 1]."""
    m = float(_check_m(m))
    K, E = _agm_KE(np.array([m, 1.0 - m]))
    return CompleteIntegrals(m=m, K=float(K[0]), Kprime=float(K[1]),
                             E=float(E[0]), Eprime=float(E[1]))


# --------------------------------------------------------------------------
# real arguments


def jacobi_all(x, m):
    """(sn, cn, dn, am, Z) for real ``x``; arrays broadcast, scalars stay scalar."""
    _check_m(m)
    out = ellipj_landen(x, m)
    if np.ndim(x) == 0 and np.ndim(m) == 0:
        return tuple(float(v) for v in out)
    return out


def ellipj(x, m):
    """(sn, cn, dn) at real ``x``."""
    sn, cn, dn, _, _ = jacobi_all(x, m)
    return sn, cn, dn


def jacobi_values(x, m):
    """Scalar evaluation bundled with the auxiliary ratios."""
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"x must be finite, got {x!r}")
    sn, cn, dn = ellipj(x, float(m))
    return JacobiValues(x=x, m=float(m), sn=sn, cn=cn, dn=dn)


def jacobi_amplitude(x, m):
    """am(x | m), continuous in x with am(x + 2K) = am(x) + pi."""
    return jacobi_all(x, m)[3]


def jacobi_zeta(x, m):
    """Z(x | m) = E(am x | m) - (E/K) x for real ``x`` and 0 <= m < 1."""
    _check_m(m, allow_one=False)
    return jacobi_all(x, m)[4]


# --------------------------------------------------------------------------
# Carlson symmetric forms (real, non-negative arguments)

_EPS = 2.0 ** -52


def carlson_rc(x, y):
    """R_C(x, y) for x >= 0, y > 0."""
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    out = np.empty(np.broadcast(x, y).shape)
    x, y = np.broadcast_arrays(x, y)
    d = y - x
    with np.errstate(invalid="ignore", divide="ignore"):
        t = np.abs(d) / np.where(x > 0, x, 1.0)
        near = (x > 0) & (t < 1e-4)
        pos = (d > 0) & ~near
        neg = (d < 0) & ~near
        sx = np.sqrt(np.where(x > 0, x, 1.0))
        out[near] = (1.0 - d[near] / x[near] / 3.0
                     + (d[near] / x[near]) ** 2 / 5.0) / sx[near]
        sd = np.sqrt(np.abs(d))
        out[pos] = np.arctan(np.sqrt(d[pos] / np.where(x[pos] > 0, x[pos], 1.0))) / sd[pos]
        out[pos & (x == 0)] = np.pi / (2.0 * np.sqrt(y[pos & (x == 0)]))
        out[neg] = np.arctanh(np.sqrt(-d[neg] / x[neg])) / sd[neg]
    return out[()]


def carlson_rf(x, y, z):
    """R_F(x, y, z); at most one argument may be zero."""
    x, y, z = np.broadcast_arrays(*(np.asarray(v, dtype=np.float64) for v in (x, y, z)))
    x, y, z = x.copy(), y.copy(), z.copy()
    A0 = (x + y + z) / 3.0
    Q = (3.0 * _EPS) ** (-1.0 / 6.0) * np.maximum.reduce(
        [np.abs(A0 - x), np.abs(A0 - y), np.abs(A0 - z)])
    A = A0.copy()
    x0, y0 = x.copy(), y.copy()
    scale = 1.0
    for _ in range(64):
        if np.all(scale * Q < np.abs(A)):
            break
        sx, sy, sz = np.sqrt(x), np.sqrt(y), np.sqrt(z)
        lam = sx * sy + sy * sz + sz * sx
        A = 0.25 * (A + lam)
        x = 0.25 * (x + lam)
        y = 0.25 * (y + lam)
        z = 0.25 * (z + lam)
        scale *= 0.25
    X = scale * (A0 - x0) / A
    Y = scale * (A0 - y0) / A
    Z = -X - Y
    E2 = X * Y - Z * Z
    E3 = X * Y * Z
    return ((1.0 - E2 / 10.0 + E3 / 14.0 + E2 * E2 / 24.0 - 3.0 * E2 * E3 / 44.0)
            / np.sqrt(A))[()]


def carlson_rd(x, y, z):
    """R_D(x, y, z) = R_J(x, y, z, z)."""
    x, y, z = np.broadcast_arrays(*(np.asarray(v, dtype=np.float64) for v in (x, y, z)))
    x, y, z = x.copy(), y.copy(), z.copy()
    A0 = (x + y + 3.0 * z) / 5.0
    Q = (0.25 * _EPS) ** (-1.0 / 6.0) * np.maximum.reduce(
        [np.abs(A0 - x), np.abs(A0 - y), np.abs(A0 - z)])
    A = A0.copy()
    x0, y0 = x.copy(), y.copy()
    total = np.zeros_like(A)
    scale = 1.0
    for _ in range(64):
        if np.all(scale * Q < np.abs(A)):
            break
        sx, sy, sz = np.sqrt(x), np.sqrt(y), np.sqrt(z)
        lam = sx * sy + sy * sz + sz * sx
        total += scale / (sz * (z + lam))
        A = 0.25 * (A + lam)
        x = 0.25 * (x + lam)
        y = 0.25 * (y + lam)
        z = 0.25 * (z + lam)
        scale *= 0.25
    X = scale * (A0 - x0) / A
    Y = scale * (A0 - y0) / A
    Z = -(X + Y) / 3.0
    E2 = X * Y - 6.0 * Z * Z
    E3 = (3.0 * X * Y - 8.0 * Z * Z) * Z
    E4 = 3.0 * (X * Y - Z * Z) * Z * Z
    E5 = X * Y * Z ** 3
    series = (1.0 - 3.0 * E2 / 14.0 + E3 / 6.0 + 9.0 * E2 * E2 / 88.0
              - 3.0 * E4 / 22.0 - 9.0 * E2 * E3 / 52.0 + 3.0 * E5 / 26.0)
    return (scale * series / (A * np.sqrt(A)) + 3.0 * total)[()]


def carlson_rj(x, y, z, p):
    """R_J(x, y, z, p) for x, y, z >= 0 (at most one zero) and p > 0."""
    arrs = np.broadcast_arrays(*(np.asarray(v, dtype=np.float64) for v in (x, y, z, p)))
    x, y, z, p = (v.copy() for v in arrs)
    A0 = (x + y + z + 2.0 * p) / 5.0
    delta = (p - x) * (p - y) * (p - z)
    Q = (0.25 * _EPS) ** (-1.0 / 6.0) * np.maximum.reduce(
        [np.abs(A0 - x), np.abs(A0 - y), np.abs(A0 - z), np.abs(A0 - p)])
    A = A0.copy()
    x0, y0, z0 = x.copy(), y.copy(), z.copy()
    total = np.zeros_like(A)
    scale = 1.0
    for n in range(64):
        if np.all(scale * Q < np.abs(A)):
            break
        sx, sy, sz, sp = np.sqrt(x), np.sqrt(y), np.sqrt(z), np.sqrt(p)
        lam = sx * sy + sy * sz + sz * sx
        d = (sp + sx) * (sp + sy) * (sp + sz)
        e = scale ** 3 * delta / (d * d)
        total += scale * carlson_rc(1.0, 1.0 + e) / d
        A = 0.25 * (A + lam)
        x = 0.25 * (x + lam)
        y = 0.25 * (y + lam)
        z = 0.25 * (z + lam)
        p = 0.25 * (p + lam)
        scale *= 0.25
    X = scale * (A0 - x0) / A
    Y = scale * (A0 - y0) / A
    Z = scale * (A0 - z0) / A
    P = -(X + Y + Z) / 2.0
    E2 = X * Y + X * Z + Y * Z - 3.0 * P * P
    E3 = X * Y * Z + 2.0 * E2 * P + 4.0 * P ** 3
    E4 = (2.0 * X * Y * Z + E2 * P + 3.0 * P ** 3) * P
    E5 = X * Y * Z * P * P
    series = (1.0 - 3.0 * E2 / 14.0 + E3 / 6.0 + 9.0 * E2 * E2 / 88.0
              - 3.0 * E4 / 22.0 - 9.0 * E2 * E3 / 52.0 + 3.0 * E5 / 26.0)
    return (scale * series / (A * np.sqrt(A)) + 6.0 * total)[()]


# --------------------------------------------------------------------------
# incomplete integrals


def _fold_amplitude(phi):
    j = np.rint(np.asarray(phi, dtype=np.float64) / np.pi)
    return j, phi - j * np.pi


def ellipf_inc(phi, m):
    """F(phi | m), continued beyond [-pi/2, pi/2] by quasi-periodicity."""
    _check_m(m, allow_one=False)
    j, p0 = _fold_amplitude(phi)
    s, c = np.sin(p0), np.cos(p0)
    F0 = s * carlson_rf(c * c, 1.0 - m * s * s, 1.0)
    return (F0 + 2.0 * j * ellipk(m))[()]


def ellipe_inc(phi, m):
    """E(phi | m), continued beyond [-pi/2, pi/2] by quasi-periodicity."""
    _check_m(m)
    j, p0 = _fold_amplitude(phi)
    s, c = np.sin(p0), np.cos(p0)
    d2 = 1.0 - m * s * s
    E0 = s * carlson_rf(c * c, d2, 1.0) - m / 3.0 * s ** 3 * carlson_rd(c * c, d2, 1.0)
    return (E0 + 2.0 * j * ellipe(m))[()]


def ellippi_inc(phi, n, m):
    """Pi(phi, n | m) = int_0^phi dt / ((1 - n sin^2 t) sqrt(1 - m sin^2 t))."""
    _check_m(m, allow_one=False)
    j, p0 = _fold_amplitude(phi)
    s, c = np.sin(p0), np.cos(p0)
    if n >= 1.0 and (np.any(j != 0) or np.any(n * s * s >= 1.0)):
        raise DomainError(
            f"characteristic n={n!r} makes the third-kind integrand singular on this range")
    d2 = 1.0 - m * s * s
    P0 = s * carlson_rf(c * c, d2, 1.0) + n / 3.0 * s ** 3 * carlson_rj(
        c * c, d2, 1.0, 1.0 - n * s * s)
    if np.any(j != 0):
        Pc = carlson_rf(0.0, 1.0 - m, 1.0) + n / 3.0 * carlson_rj(0.0, 1.0 - m, 1.0, 1.0 - n)
        P0 = P0 + 2.0 * j * Pc
    return P0[()] if isinstance(P0, np.ndarray) else P0


def incomplete_integrals(phi, n, m):
    """(F, E, Pi) at amplitude ``phi`` with third-kind characteristic ``n``."""
    _check_m(m, allow_one=False)
    return ellipf_inc(phi, m), ellipe_inc(phi, m), ellippi_inc(phi, n, m)


# --------------------------------------------------------------------------
# complex arguments


def _pole_distance(z, m):
    ci = complete_integrals(m)
    if not math.isfinite(ci.Kprime) or not math.isfinite(ci.K):
        return np.full(np.shape(z), np.inf)
    u, v = np.real(z), np.imag(z)
    j = np.rint(u / (2.0 * ci.K))
    k = np.rint((v - ci.Kprime) / (2.0 * ci.Kprime))
    centre = 2.0 * j * ci.K + 1j * (ci.Kprime + 2.0 * k * ci.Kprime)
    return np.abs(z - centre)


def _check_poles(z, m):
    dist = _pole_distance(z, m)
    if np.any(dist < POLE_EXCLUSION):
        idx = np.unravel_index(np.argmin(dist), np.shape(dist)) if np.ndim(dist) else ()
        zz = np.asarray(z)[idx] if np.ndim(z) else z
        raise PoleProximityError(complex(zz), float(np.min(dist)))


def ellipj_complex(z, m, check=True):
    """(sn, cn, dn) at complex ``z`` (arrays allowed)."""
    m = float(_check_m(m))
    z = np.asarray(z, dtype=np.complex128)
    if check:
        _check_poles(z, m)
    u, v = z.real, z.imag
    s, c, d, _, _ = ellipj_landen(u, m)
    s1, c1, d1, _, _ = ellipj_landen(v, 1.0 - m)
    den = c1 * c1 + m * s * s * s1 * s1
    sn = (s * d1 + 1j * c * d * s1 * c1) / den
    cn = (c * c1 - 1j * s * d * s1 * d1) / den
    dn = (d * c1 * d1 - 1j * m * s * c * s1) / den
    return sn[()], cn[()], dn[()]


def _zeta_band(z, m, ci):
    # valid away from Im z = K' (mod 2K'), where sc(v | m') blows up
    u, v = z.real, z.imag
    su, _, _, _, zu = ellipj_landen(u, m)
    s1, c1, d1, _, z1 = ellipj_landen(v, 1.0 - m)
    # Jacobi imaginary transformation: Z(iv|m)
    ziv = 1j * (d1 * s1 / c1 - z1 - np.pi * v / (2.0 * ci.K * ci.Kprime))
    siv = 1j * s1 / c1
    snz, _, _ = ellipj_complex(z, m, check=False)
    return zu + ziv - m * su * siv * snz


def zeta_complex(z, m, check=True):
    """Z(z | m) for complex ``z`` and 0 <= m < 1."""
    m = float(_check_m(m, allow_one=False))
    z = np.asarray(z, dtype=np.complex128)
    if check:
        _check_poles(z, m)
    if m == 0.0:
        return np.zeros(z.shape, dtype=np.complex128)[()]
    ci = complete_integrals(m)
    kp = ci.Kprime
    off = np.abs(np.mod(z.imag, 2.0 * kp) - kp) < 0.5 * kp
    out = np.empty(z.shape, dtype=np.complex128)
    if np.any(~off):
        out[~off] = _zeta_band(z[~off], m, ci)
    if np.any(off):
        # Z(w + iK') = Z(w) + cn(w) ds(w) - i pi / (2K)
        w = z[off] - 1j * kp
        sw, cw, dw = ellipj_complex(w, m, check=False)
        out[off] = _zeta_band(w, m, ci) + cw * dw / sw - 1j * np.pi / (2.0 * ci.K)
    return out[()]


def jacobi_complex(z, m):
    """Scalar complex evaluation of sn, cn, dn and Z."""
    z = complex(z)
    sn, cn, dn = ellipj_complex(z, m)
    Z = zeta_complex(z, m) if m < 1.0 else complex("nan")
    return ComplexJacobi(z=z, m=float(m), sn=complex(sn), cn=complex(cn),
                         dn=complex(dn), Z=complex(Z))


# --------------------------------------------------------------------------
# derivatives as polynomials in (sn, cn, dn) with powers of m

_BASE = {"sn": (1, 0, 0, 0), "cn": (0, 1, 0, 0), "dn": (0, 0, 1, 0), "dn2": (0, 0, 2, 0)}


@lru_cache(maxsize=None)
def derivative_poly(name, order):
    """d^order f / dz^order as {(i, j, k, l): coeff} meaning coeff m^l sn^i cn^j dn^k."""
    if name not in _BASE:
        raise ValueError(f"unknown basis function {name!r}")
    if order < 0:
        raise ValueError("derivative order must be >= 0")
    poly = {_BASE[name]: 1}
    for _ in range(order):
        nxt = {}
        for (i, j, k, l), c in poly.items():
            if i:
                key = (i - 1, j + 1, k + 1, l)
                nxt[key] = nxt.get(key, 0) + c * i
            if j:
                key = (i + 1, j - 1, k + 1, l)
                nxt[key] = nxt.get(key, 0) - c * j
            if k:
                key = (i + 1, j + 1, k - 1, l + 1)
                nxt[key] = nxt.get(key, 0) - c * k
        poly = {key: c for key, c in nxt.items() if c}
    return poly


def jacobi_derivative(name, order, x, m, values=None):
    """Evaluate d^order/dx^order of sn, cn, dn or dn^2 at real or complex ``x``."""
    if values is None:
        if np.iscomplexobj(x):
            values = ellipj_complex(x, m)
        else:
            values = ellipj(x, m)
    s, c, d = values
    total = 0.0
    for (i, j, k, l), coeff in derivative_poly(name, order).items():
        total = total + coeff * m ** l * s ** i * c ** j * d ** k
    return total
