"""Reconstruction of Jacobi products from their poles.

A function built from sn, cn, dn at real shifts is sorted into one of four
symmetry classes by its behaviour under z -> z + 2iK' and z -> z + 2K.
Its principal parts in the cell [0, 2K) x [0, 2K') are read off by contour
integration, and the function is rebuilt as a combination of derivatives
of the class archetype (dn, dn^2 with Z, sn, cn) anchored at the poles.
"""

from dataclasses import dataclass, field
import math
import re

import numpy as np

from .core import (complete_integrals, ellipj, ellipj_complex, jacobi_derivative,
                   jacobi_zeta, zeta_complex)
from .expr import Env, Fn, Lin, Pow, expand, parse, x_free

__all__ = [
    "Factor",
    "ProductSpec",
    "SymmetryClass",
    "Pole",
    "LaurentProfile",
    "MasterTerm",
    "MasterReconstruction",
    "ClassificationError",
    "classify",
    "locate_poles",
    "laurent_coefficients",
    "laurent_profile",
    "reconstruct",
    "typeII_definite_integral",
]

PRIMARY = ("sn", "cn", "dn")
# (P, Q) carried by one power of each function
_PARITY = {"sn": (0, 1), "cn": (1, 1), "dn": (1, 0)}
_TYPES = {(1, 0): "I", (0, 0): "II", (0, 1): "III", (1, 1): "IV"}
MAX_ORDER = 6
SOFTENING = 1e-6
DEFAULT_RADIUS = 0.1  # fraction of min(K, K')
DEFAULT_POINTS = 64


class ClassificationError(ValueError):
    """Probes disagree on the symmetry class."""


@dataclass(frozen=True)
class Factor:
    func: str
    shift: float
    power: int = 1

    def __post_init__(self):
        if self.func not in PRIMARY:
            raise ValueError(f"factor must be sn, cn or dn, got {self.func!r}")
        if int(self.power) != self.power or self.power < 1:
            raise ValueError("factor power must be a positive integer")


@dataclass(frozen=True)
class ProductSpec:
    """Sum of coefficient * product of sn/cn/dn(z + shift)**power."""

    terms: tuple

    @classmethod
    def product(cls, factors, coef=1.0):
        return cls(((float(coef), _merge(tuple(factors))),))

    def __add__(self, other):
        return ProductSpec(self.terms + other.terms)

    def scaled(self, c):
        return ProductSpec(tuple((c * k, f) for k, f in self.terms))

    @classmethod
    def from_expr(cls, expr, shifts, m):
        """Convert an expression in x into a ProductSpec at fixed shift values."""
        env = Env(np.float64(0.0), dict(shifts), float(m))
        terms = []
        for mono in expand(expr):
            coef = 1.0
            facs = []
            for f in mono:
                if x_free(f):
                    coef *= float(np.real(f.evaluate(env)))
                    continue
                base, n = (f.base, f.n) if isinstance(f, Pow) else (f, 1)
                if not isinstance(base, Fn) or base.name not in PRIMARY:
                    raise ValueError(f"{f!r} is not a power of sn, cn or dn")
                if base.lin.coeff("x") != 1:
                    raise ValueError(f"argument {base.lin!r} must be x + const")
                off = base.lin.subs({"x": Lin({})})
                facs.append(Factor(base.name, float(np.real(off.evaluate(env))), n))
            if coef != 0.0:
                terms.append((coef, _merge(tuple(facs))))
        if not terms:
            raise ValueError("expression is identically zero")
        return cls(tuple(terms))

    @classmethod
    def parse(cls, text, m, **shifts):
        """Compact text form, e.g. ``"dn^2 * dn(+a) + dn^2 * dn(-a)"`` with a=0.8."""
        src = text.replace("^", "**")
        src = re.sub(r"\b(sn|cn|dn)\(\s*z?\s*([+-])", r"\1(x \2", src)
        src = re.sub(r"\b(sn|cn|dn)\(\s*z\s*\)", r"\1(x)", src)
        src = re.sub(r"\b(sn|cn|dn)\b(?!\s*\()", r"\1(x)", src)
        syms = {k: Lin(k) for k in shifts}
        return cls.from_expr(parse(src, **syms), shifts, m)

    def shifts(self):
        return sorted({f.shift for _, fs in self.terms for f in fs})

    def static_parity(self):
        """Set of (P, Q) over the terms from factor bookkeeping."""
        out = set()
        for _, fs in self.terms:
            P = sum(_PARITY[f.func][0] * f.power for f in fs) % 2
            Q = sum(_PARITY[f.func][1] * f.power for f in fs) % 2
            out.add((P, Q))
        return out

    def evaluate(self, z, m):
        z = np.asarray(z, dtype=np.complex128)
        cache = {}
        total = np.zeros(z.shape, dtype=np.complex128)
        for coef, fs in self.terms:
            t = np.full(z.shape, coef, dtype=np.complex128)
            for f in fs:
                if f.shift not in cache:
                    cache[f.shift] = ellipj_complex(z + f.shift, m, check=False)
                t = t * cache[f.shift][PRIMARY.index(f.func)] ** f.power
            total = total + t
        return total[()]

    def evaluate_real(self, x, m):
        x = np.asarray(x, dtype=np.float64)
        total = np.zeros(x.shape)
        for coef, fs in self.terms:
            t = np.full(x.shape, coef)
            for f in fs:
                t = t * np.asarray(ellipj(x + f.shift, m)[PRIMARY.index(f.func)]) ** f.power
            total = total + t
        return total[()]

    def describe(self):
        parts = []
        for c, fs in self.terms:
            body = "*".join(f"{f.func}(z{f.shift:+.6g})" + (f"^{f.power}" if f.power > 1 else "")
                            for f in fs)
            parts.append(f"{c:+.6g}*{body}")
        return " ".join(parts)


def _merge(factors):
    acc = {}
    for f in factors:
        key = (f.func, f.shift)
        acc[key] = acc.get(key, 0) + f.power
    return tuple(Factor(fn, sh, p) for (fn, sh), p in sorted(acc.items()))


@dataclass(frozen=True)
class SymmetryClass:
    P: int
    Q: int

    @property
    def type(self):
        return _TYPES[(self.P, self.Q)]

    def __str__(self):
        return f"type {self.type} (P={self.P}, Q={self.Q})"


def _periods(m):
    ci = complete_integrals(m)
    return ci.K, ci.Kprime, ci.E


def classify(f, m, probes=8, tol=1e-8):
    """(P, Q) from f(z + 2iK') = (-1)^P f(z) and f(z + 2K) = (-1)^Q f(z)."""
    K, Kp, _ = _periods(m)
    k = np.arange(probes)
    z = (0.23 + 0.61 * k) * K / 3.0 + 1j * (0.17 + 0.29 * k) * Kp / 3.0
    f0 = f.evaluate(z, m)
    ok = np.abs(f0) > 1e-8
    if not np.any(ok):
        raise ClassificationError("function vanishes at every probe")
    rP = f.evaluate(z + 2j * Kp, m)[ok] / f0[ok]
    rQ = f.evaluate(z + 2 * K, m)[ok] / f0[ok]
    out = []
    for r in (rP, rQ):
        if np.all(np.abs(r - 1) <= tol):
            out.append(0)
        elif np.all(np.abs(r + 1) <= tol):
            out.append(1)
        else:
            raise ClassificationError("probes disagree; function is not in one symmetry class")
    return SymmetryClass(*out)


@dataclass
class Pole:
    center: complex
    anchor: float        # real part of the center; basis argument is z - anchor
    order: int
    expected_order: int
    alphas: tuple = ()   # alpha_1 .. alpha_order
    note: str = None


@dataclass
class LaurentProfile:
    poles: list
    radius: float
    points: int

    @property
    def residue_sum(self):
        return complex(sum(p.alphas[0] for p in self.poles if p.alphas))

    @property
    def gamma2(self):
        return complex(sum(p.alphas[1] for p in self.poles if len(p.alphas) > 1))


def _fold(shift, K):
    """Real part of the pole of g(z + shift), folded into [0, 2K)."""
    re_ = (-shift) % (2 * K)
    note = None
    if min(re_, 2 * K - re_) < 1e-12 * K:
        re_ = 0.0
        note = "pole on the cell edge; folded to Re z = 0"
    return re_, note


def _candidates(f, K):
    out = []
    for sh in f.shifts():
        re_, note = _fold(sh, K)
        for c in out:
            if abs(c[0] - re_) < 1e-9 * K or abs(abs(c[0] - re_) - 2 * K) < 1e-9 * K:
                c[1].append(sh)
                break
        else:
            out.append((re_, [sh], note))
    return out


def _expected_order(f, shifts, K):
    best = 0
    for _, fs in f.terms:
        n = 0
        for fac in fs:
            if any(abs(((fac.shift - s) / (2 * K)) - round((fac.shift - s) / (2 * K))) < 1e-9
                   for s in shifts):
                n += fac.power
        best = max(best, n)
    return best


def laurent_coefficients(f, m, center, order, radius=None, points=DEFAULT_POINTS,
                         others=()):
    """alpha_l = (1/2 pi i) oint f(z) (z - center)^(l-1) dz for l = 1..order.

    Trapezoid rule on a circle; ``others`` lists pole centers that must stay
    at least 2*radius away.
    """
    K, Kp, _ = _periods(m)
    rho = DEFAULT_RADIUS * min(K, Kp) if radius is None else float(radius)
    if rho <= 0:
        raise ValueError("radius must be positive")
    for c in others:
        for j in (-1, 0, 1):
            for k in (-1, 0, 1):
                img = c + 2 * K * j + 2j * Kp * k
                if abs(img - center) > 1e-12 and abs(img - center) < 2 * rho:
                    raise ValueError(f"radius {rho:.3g} infeasible: pole at {img:.6g} is "
                                     f"closer than 2*radius to {center:.6g}")
    if 2 * rho > min(2 * K, 2 * Kp):
        raise ValueError(f"radius {rho:.3g} infeasible for the lattice")
    theta = 2 * np.pi * np.arange(points) / points
    w = rho * np.exp(1j * theta)
    vals = f.evaluate(center + w, m)
    return tuple(complex(np.mean(vals * w ** l)) for l in range(1, order + 1))


def laurent_profile(f, m, radius=None, points=DEFAULT_POINTS):
    """Poles of f in the cell with measured orders and principal parts."""
    K, Kp, _ = _periods(m)
    rho = DEFAULT_RADIUS * min(K, Kp) if radius is None else float(radius)
    cands = _candidates(f, K)
    centers = [re_ + 1j * Kp for re_, _, _ in cands]
    poles = []
    for (re_, shs, note), c in zip(cands, centers):
        L = _expected_order(f, shs, K)
        if L > MAX_ORDER:
            raise ValueError(f"pole of order {L} exceeds the supported {MAX_ORDER}")
        alphas = laurent_coefficients(f, m, c, L, rho, points, others=centers)
        # size of each principal-part term on the contour
        theta = 2 * np.pi * np.arange(points) / points
        scale = float(np.max(np.abs(f.evaluate(c + rho * np.exp(1j * theta), m))))
        size = [abs(a) / rho ** (l + 1) for l, a in enumerate(alphas)]
        order = 0
        for l in range(L, 0, -1):
            if size[l - 1] > SOFTENING * scale:
                order = l
                break
        if order:
            poles.append(Pole(complex(c), re_, order, L, alphas[:order], note))
    return LaurentProfile(poles, rho, points)


def locate_poles(f, m, radius=None, points=DEFAULT_POINTS):
    """[(center, order)] for the poles of f in the cell."""
    return [(p.center, p.order) for p in laurent_profile(f, m, radius, points).poles]


@dataclass
class MasterTerm:
    center: complex
    anchor: float
    derivative: int   # -1 stands for Z in type II
    coef: complex
    basis: str


@dataclass
class MasterReconstruction:
    cls: SymmetryClass
    terms: list
    profile: LaurentProfile
    m: float
    C: complex = 0.0
    gamma2: complex = 0.0
    notes: list = field(default_factory=list)

    @property
    def kind(self):
        return self.cls.type

    @property
    def C_zeta(self):
        """Constant when the basis is Z and its derivatives (Z' = dn^2 - E/K).

        Equals the mean of f over a real period; None outside type II.
        """
        if self.kind != "II":
            return None
        K, _, E = _periods(self.m)
        return self.C - self.gamma2 * E / K

    @property
    def residue_sum(self):
        return self.profile.residue_sum

    def evaluate(self, z):
        z = np.asarray(z)
        real = not np.iscomplexobj(z)
        total = np.full(z.shape, complex(self.C), dtype=np.complex128)
        for t in self.terms:
            w = z - t.anchor
            total = total + t.coef * _basis(t.basis, t.derivative, w, self.m, real)
        return total[()]

    def max_deviation(self, f, x):
        fx = f.evaluate_real(x, self.m)
        return float(np.max(np.abs(fx - self.evaluate(np.asarray(x, dtype=float)))))

    def to_dict(self):
        c = lambda z: [float(np.real(z)), float(np.imag(z))]
        return {
            "class": self.kind,
            "P": self.cls.P,
            "Q": self.cls.Q,
            "poles": [{"center": c(p.center), "order": p.order, "expected_order": p.expected_order,
                       "alphas": [c(a) for a in p.alphas], "note": p.note}
                      for p in self.profile.poles],
            "terms": [{"anchor": t.anchor, "derivative": t.derivative, "basis": t.basis,
                       "coef": c(t.coef)} for t in self.terms],
            "C": c(self.C),
            "gamma2": c(self.gamma2),
            "residue_sum": c(self.residue_sum),
            "notes": list(self.notes),
        }


def _basis(name, order, w, m, real):
    if name == "Z":
        return jacobi_zeta(w, m) if real else zeta_complex(w, m, check=False)
    if real:
        return jacobi_derivative(name, order, w, m)
    return jacobi_derivative(name, order, w, m, ellipj_complex(w, m, check=False))


def reconstruct(f, m, radius=None, points=DEFAULT_POINTS):
    """Rebuild f from its principal parts with the class archetype."""
    cls = classify(f, m)
    prof = laurent_profile(f, m, radius, points)
    sm = math.sqrt(m)
    terms = []
    for p in prof.poles:
        for l, a in enumerate(p.alphas, start=1):
            sgn = (-1) ** (l - 1) / math.factorial(l - 1)
            if cls.type == "I":
                terms.append(MasterTerm(p.center, p.anchor, l - 1, 1j * sgn * a, "dn"))
            elif cls.type == "III":
                terms.append(MasterTerm(p.center, p.anchor, l - 1, sm * sgn * a, "sn"))
            elif cls.type == "IV":
                terms.append(MasterTerm(p.center, p.anchor, l - 1, 1j * sm * sgn * a, "cn"))
            elif l == 1:
                terms.append(MasterTerm(p.center, p.anchor, -1, a, "Z"))
            else:
                terms.append(MasterTerm(p.center, p.anchor, l - 2, sgn * a, "dn2"))
    notes = [p.note for p in prof.poles if p.note]
    rec = MasterReconstruction(cls, terms, prof, float(m), 0.0, prof.gamma2, notes)
    if cls.type == "II":
        rec.C = _type2_constant(f, rec)
    return rec


def _type2_constant(f, rec):
    for z0 in (0.0, 0.1, 0.37, 0.5, 1.0):
        fz = complex(f.evaluate_real(z0, rec.m))
        gz = complex(rec.evaluate(np.float64(z0)))
        if np.isfinite(fz) and np.isfinite(gz):
            return fz - gz
    raise ValueError("no pole-free real point for the constant")


def typeII_definite_integral(f, m, radius=None, points=DEFAULT_POINTS):
    """(1/2K) int_0^{2K} f from the reconstruction: C - gamma2 E/K."""
    rec = reconstruct(f, m, radius, points)
    if rec.kind != "II":
        raise ValueError(f"function is {rec.cls}, not type II")
    return float(np.real(rec.C_zeta))
