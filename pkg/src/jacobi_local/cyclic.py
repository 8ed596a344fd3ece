"""Cyclic identities built from local ones.

A local identity L(x) = R(x) with shift ``a`` is summed over p points of a
period T (2K or 4K) with weights w_j = omega**(j-1), omega = exp(2 i pi / s).
Two point orderings are supported:

``chain``
    x_j = x + (j-1) a, so that x_j + a is the next point.  Phases in the
    closed forms come out as powers of omega.
``grid``
    x_j = x + (j-1) T/p, so that x_j + a is the point r steps ahead.  Phases
    come out as powers of omega**r.

For s = 1 (and for s = 2 with odd r) both orderings give the same sums.
Points are reduced modulo T before evaluation.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd
import cmath
import math
import re
import warnings

import numpy as np

from .appendix_f import F_TABLE, F_ERRATA
from .catalog import get_identity
from .core import ellipj, ellipk
from .expr import (ConstraintViolation, Env, Fn, Lin, Mul, expand, half_period_signs,
                   parse, singular_constraints, x_free)

__all__ = [
    "CyclicSpec",
    "CyclicCheckResult",
    "CyclicWarning",
    "PeriodMismatch",
    "DEFAULT_CYCLIC_TOL",
    "roots_of_unity",
    "weighted_sum",
    "telescope",
    "chain_weighted",
    "appendixF_ids",
    "appendixF_entry",
    "appendixF_spec",
    "verify_appendixF",
    "printed_appendixF",
    "product_cyclic",
    "trig_limits",
    "interchange_check",
    "check_many",
]

DEFAULT_CYCLIC_TOL = 1e-9
SINGULAR_RADIUS = 1e-9  # units of K


class CyclicWarning(UserWarning):
    """Spacing shares a factor with p; points repeat within the period."""


class PeriodMismatch(ValueError):
    """Identity or function pair does not fit the requested period grid."""


@dataclass(frozen=True)
class CyclicSpec:
    p: int
    r: int
    s: int = 1
    period_kind: str = "2K"
    r2: int = None          # second spacing for two-shift summands
    ordering: str = "chain"
    conjugate: bool = False  # use conj(omega) as the weight

    def __post_init__(self):
        for name in ("p", "r", "s"):
            if not isinstance(getattr(self, name), (int, np.integer)):
                raise TypeError(f"{name} must be an integer")
        if self.p < 2:
            raise ValueError("p must be at least 2")
        if not 1 <= self.r < self.p:
            raise ValueError(f"r must satisfy 1 <= r < p, got r={self.r}, p={self.p}")
        if self.s < 1:
            raise ValueError("weight order s must be >= 1")
        if self.p % self.s:
            raise ValueError(f"p must be a multiple of s (p={self.p}, s={self.s})")
        if self.period_kind not in ("2K", "4K"):
            raise ValueError(f"period_kind must be '2K' or '4K', got {self.period_kind!r}")
        if self.r2 is not None and not 1 <= self.r2 < self.p:
            raise ValueError(f"r2 must satisfy 1 <= r2 < p, got {self.r2}")
        if self.ordering not in ("chain", "grid"):
            raise ValueError(f"ordering must be 'chain' or 'grid', got {self.ordering!r}")

    @property
    def periods(self):
        return 2 if self.period_kind == "2K" else 4

    @property
    def step(self):
        """Grid index advanced by one chain step."""
        return self.r if self.ordering == "chain" else 1

    @property
    def phase_index(self):
        """Weight exponent picked up when the argument advances by a."""
        return 1 if self.ordering == "chain" else self.r

    def period(self, m):
        return self.periods * ellipk(m)

    def shift(self, m):
        return self.r * self.period(m) / self.p

    def shift2(self, m):
        return None if self.r2 is None else self.r2 * self.period(m) / self.p

    def indices(self):
        """Grid index of the j-th point, j = 1..p."""
        return (np.arange(self.p) * self.step) % self.p

    def points(self, x, m):
        return x + self.indices() * (self.period(m) / self.p)

    def weights(self):
        w = roots_of_unity(self.s)[np.arange(self.p) % self.s]
        return np.conj(w) if self.conjugate else w

    def omega(self):
        w = roots_of_unity(self.s)[1 % self.s]
        return w.conjugate() if self.conjugate else w

    def phase(self):
        """omega ** phase_index, the factor for one step of a."""
        w = roots_of_unity(self.s)[self.phase_index % self.s]
        return w.conjugate() if self.conjugate else w

    def weight_total(self):
        """Sum of the weights: p when s = 1, else 0."""
        return complex(self.p if self.s == 1 else 0)

    def to_dict(self):
        return {"p": self.p, "r": self.r, "s": self.s, "period_kind": self.period_kind,
                "r2": self.r2, "ordering": self.ordering, "conjugate": self.conjugate}


@lru_cache(maxsize=64)
def roots_of_unity(s):
    """exp(2 i pi k / s) for k < s, exact at quarter turns."""
    out = np.empty(s, dtype=complex)
    for k in range(s):
        q = Fraction(k, s)
        exact = {Fraction(0): 1, Fraction(1, 4): 1j, Fraction(1, 2): -1, Fraction(3, 4): -1j}
        out[k] = exact[q] if q in exact else cmath.exp(2j * math.pi * k / s)
    out.setflags(write=False)
    return out


@dataclass
class CyclicCheckResult:
    spec: CyclicSpec
    identity_id: str
    lhs_sum: complex
    rhs_sum: complex
    residual: float
    x: float = None
    m: float = None
    closed_form: str = None
    tol: float = DEFAULT_CYCLIC_TOL
    warnings: list = field(default_factory=list)

    @property
    def passed(self):
        return bool(np.isfinite(self.residual) and self.residual <= self.tol)

    def to_dict(self):
        def c(z):
            return [float(z.real), float(z.imag)]
        return {
            "id": self.identity_id,
            "spec": self.spec.to_dict() if self.spec is not None else None,
            "x": self.x,
            "m": self.m,
            "lhs_sum": c(self.lhs_sum),
            "rhs_sum": c(self.rhs_sum),
            "residual": float(self.residual),
            "tol": self.tol,
            "pass": self.passed,
            "closed_form": self.closed_form,
            "warnings": list(self.warnings),
        }


def _residual(lhs, rhs):
    return float(abs(lhs - rhs) / max(1.0, abs(lhs), abs(rhs)))


def _csum(values):
    """Compensated sum of a complex or real array."""
    v = np.asarray(values)
    if np.iscomplexobj(v):
        return complex(math.fsum(v.real.tolist()), math.fsum(v.imag.tolist()))
    return complex(math.fsum(v.tolist()), 0.0)


def _check_m(m):
    if not 0.0 < m < 1.0:
        raise ValueError(f"m must lie in (0, 1), got {m}")


def _spec_warnings(spec):
    out = []
    for name in ("r", "r2"):
        v = getattr(spec, name)
        if v is not None and gcd(v, spec.p) > 1:
            msg = f"gcd({name}={v}, p={spec.p}) = {gcd(v, spec.p)}: points repeat within the period"
            warnings.warn(msg, CyclicWarning, stacklevel=3)
            out.append(msg)
    return out


def _env(spec, x, m, shift_names=("a",)):
    xs = spec.points(x, m)
    p = spec.p
    shifts = {shift_names[0]: np.full(p, spec.shift(m))}
    if spec.r2 is not None:
        shifts["a1"] = np.full(p, spec.shift2(m))
    return Env(xs, shifts, np.full(p, float(m)))


def _as_tree(expr):
    return parse(expr) if isinstance(expr, str) else expr


def weighted_sum(expr, spec, x, m, shift="a"):
    """Sum over j of w_j f(x_j) for an expression f in x and the spacing symbol(s)."""
    tree = _as_tree(expr)
    env = _env(spec, x, m, (shift,))
    vals = np.broadcast_to(np.asarray(tree.evaluate(env), dtype=float), (spec.p,))
    return _csum(spec.weights() * vals)


def _check_singular(exprs, spec, x, m, label):
    env = _env(spec, np.float64(x), m)
    for c in singular_constraints(*exprs):
        if c.lin.has_x:
            continue
        d = float(np.min(c.distance(env)))
        if d <= SINGULAR_RADIUS:
            raise ConstraintViolation(f"{label}: {c.describe()} (spacing lands on the lattice)")


# --------------------------------------------------------------------------
# term-wise telescoping

def _offset(factor, shift):
    """Multiple of the shift carried by the x-dependent atoms of ``factor``."""
    fns = [factor] if isinstance(factor, Fn) else list(factor.functions())
    ks = set()
    for f in fns:
        if not f.lin.has_x:
            continue
        mp = f.lin.mapping
        if mp.get("x") != 1 or f.lin.kmul or set(mp) - {"x", shift}:
            raise ValueError(f"argument {f.lin!r} is not x + k*{shift}")
        ks.add(mp.get(shift, 0))
    if len(ks) > 1:
        raise ValueError("mixed offsets inside one factor")
    return ks.pop() if ks else None


def telescope(identity, spec, x, m):
    """Collapse the weighted sum of the RHS term by term.

    Every RHS monomial whose x-dependent atoms sit at a common offset k*a is
    summed as phase**(-k) times the sum of its unshifted version; constant
    monomials contribute weight_total().  Returns (value, description).
    """
    ident = get_identity(identity)
    if ident.arity != 1:
        raise ValueError(f"{ident.id}: telescoping needs exactly one shift")
    shift = ident.shifts[0]
    env1 = Env(np.float64(0.0), {shift: spec.shift(m)}, float(m))
    q = spec.phase()
    total = []
    groups = {}
    for mono in expand(ident.rhs):
        coef = [f for f in mono if x_free(f)]
        xdep = [f for f in mono if not x_free(f)]
        ks = {_offset(f, shift) for f in xdep} - {None}
        if len(ks) > 1:
            raise ValueError(f"{ident.id}: monomial mixes offsets {sorted(ks)}")
        c = 1.0
        for f in coef:
            c *= float(np.real(f.evaluate(env1)))
        if not xdep:
            total.append(c * spec.weight_total())
            continue
        k = ks.pop()
        base = Mul(tuple(xdep)) if len(xdep) > 1 else xdep[0]
        base = base.subs({"x": Lin({"x": 1, shift: -k})}) if k else base
        if spec.periods == 2 and half_period_signs(base) != {1}:
            raise PeriodMismatch(f"{ident.id}: term {base!r} is not 2K-periodic")
        key = repr(base)
        if key not in groups:
            groups[key] = (base, [])
        groups[key][1].append(c * q ** (-k))
    for key in sorted(groups):
        base, coefs = groups[key]
        total.append(_csum(np.array(coefs)) * weighted_sum(base, spec, x, m, shift))
    return _csum(np.array(total, dtype=complex)), f"telescoped over {len(groups)} sums"


def chain_weighted(local_id, spec, x, m, tol=DEFAULT_CYCLIC_TOL):
    """Weighted cyclic sum of a one-shift local identity against its telescoped form.

    ``lhs_sum`` is the weighted sum of the left side at the points;
    ``rhs_sum`` is the closed form obtained by collapsing shifted RHS terms
    (falling back to the direct RHS sum when the RHS cannot be collapsed).
    """
    _check_m(m)
    ident = get_identity(local_id)
    if ident.arity != 1:
        raise ValueError(f"{ident.id}: chain construction needs a one-shift identity, "
                         f"got arity {ident.arity}")
    if ident.period == "4K" and spec.period_kind == "2K":
        raise PeriodMismatch(f"{ident.id} has period 4K; use period_kind='4K'")
    notes = _spec_warnings(spec)
    _check_singular((ident.lhs, ident.rhs), spec, x, m, ident.id)
    shift = ident.shifts[0]
    lhs = weighted_sum(ident.lhs, spec, x, m, shift)
    try:
        rhs, how = telescope(ident, spec, x, m)
    except (ValueError, TypeError) as exc:
        rhs, how = weighted_sum(ident.rhs, spec, x, m, shift), None
        notes.append(f"no telescoped form ({exc}); compared with the direct RHS sum")
    return CyclicCheckResult(spec, ident.id, lhs, rhs, _residual(lhs, rhs), float(x),
                             float(m), how, tol, notes)


# --------------------------------------------------------------------------
# weighted identities with two-sided closed forms

_F_INDEX = {fid: (cls, lhs, rhs) for fid, cls, lhs, rhs in F_TABLE}
_F_CLASS = {
    "F1": ("2K", False), "F2": ("2K", False),
    "F3": ("4K", False), "F4": ("4K", False),
    "F5": ("2K", True), "F6": ("2K", True),
}


def _natural(s):
    return [int(t) if t.isdigit() else t for t in re.split(r"(\d+)", s)]


def appendixF_ids(cls=None):
    ids = [fid for fid, c, _, _ in F_TABLE if cls is None or c == cls]
    return sorted(ids, key=_natural)


def _f_key(fid):
    return fid if fid.startswith("F.") else f"F.{fid}"


def appendixF_entry(fid):
    """(class, lhs summand, rhs summand, uses_second_spacing) for one entry."""
    key = _f_key(fid)
    if key not in _F_INDEX:
        raise KeyError(f"unknown weighted identity {fid!r}")
    cls, lhs, rhs = _F_INDEX[key]
    two = "a1" in (parse(lhs).symbols() | parse(rhs).symbols())
    return cls, lhs, rhs, two


def appendixF_spec(fid, p, r, r2=None):
    """CyclicSpec matching the entry's class (period and weights)."""
    cls = appendixF_entry(fid)[0]
    period, alt = _F_CLASS[cls]
    return CyclicSpec(p=p, r=r, s=2 if alt else 1, period_kind=period, r2=r2,
                      ordering="grid")


def _verify_f(key, lhs, rhs, spec, x, m, tol):
    _check_m(m)
    cls, _, _, two = appendixF_entry(key)
    period, alt = _F_CLASS[cls]
    if spec.period_kind != period:
        raise PeriodMismatch(f"{key} ({cls}) needs period {period}, got {spec.period_kind}")
    if alt:
        if spec.s != 2:
            raise PeriodMismatch(f"{key} ({cls}) carries alternating weights; use s=2")
        if spec.p % 2 or spec.r % 2 == 0:
            raise PeriodMismatch(f"{key} ({cls}) needs even p and odd r")
    elif spec.s != 1:
        raise PeriodMismatch(f"{key} ({cls}) is unweighted; use s=1")
    if two and spec.r2 is None:
        raise ValueError(f"{key} uses a second spacing; set r2")
    notes = _spec_warnings(spec)
    L, R = parse(lhs), parse(rhs)
    _check_singular((L, R), spec, x, m, key)
    lv = weighted_sum(L, spec, x, m)
    rv = weighted_sum(R, spec, x, m)
    return CyclicCheckResult(spec, key, lv, rv, _residual(lv, rv), float(x), float(m),
                             "two-sided", tol, notes)


def verify_appendixF(fid, spec, x, m, tol=DEFAULT_CYCLIC_TOL):
    """Residual of a two-sided weighted identity at (x, m) under ``spec``."""
    key = _f_key(fid)
    _, lhs, rhs, _ = appendixF_entry(key)
    return _verify_f(key, lhs, rhs, spec, x, m, tol)


def printed_appendixF(fid, spec, x, m, tol=DEFAULT_CYCLIC_TOL):
    """Same check with the printed (uncorrected) sides of an erratum entry."""
    key = _f_key(fid)
    if key not in F_ERRATA:
        raise KeyError(f"no erratum recorded for {fid!r}")
    _, lhs, rhs, _ = appendixF_entry(key)
    info = F_ERRATA[key]
    res = _verify_f(key, info.get("printed_lhs", lhs), info.get("printed_rhs", rhs),
                    spec, x, m, tol)
    res.identity_id = f"{key}(printed)"
    res.closed_form = info["note"]
    return res


# --------------------------------------------------------------------------
# products of dn and trigonometric limits

def _product_coefficient(cs, l):
    """Bracket multiplying sum d_j for the l-fold product; cs(k) = cs(k a)."""
    h = (l - 1) // 2
    first = math.prod(cs(k) ** 2 for k in range(1, h + 1))
    terms = [math.prod(cs(n - k) for n in range(1, l + 1) if n != k) for k in range(1, h + 1)]
    return first + 2 * (-1) ** h * math.fsum(terms)


def product_cyclic(p, r, l, x, m, tol=DEFAULT_CYCLIC_TOL):
    """Cyclic sums of l-fold dn products at spacing r (odd p, odd l).

    For l < p the check is sum_j prod_{i<l} d_{j+i r} against
    coefficient * sum_j d_j; for l = p it is prod_j d_j against
    prod_{n <= (p-1)/2} cs^2(2Kn/p) * sum_j d_j.
    """
    if p % 2 == 0:
        raise ValueError(f"p must be odd, got {p}")
    if l % 2 == 0 or not 1 <= l <= p:
        raise ValueError(f"l must be odd with 1 <= l <= p, got {l}")
    if not 1 <= r < p or gcd(r, p) != 1:
        raise ValueError(f"r must be coprime to p with 1 <= r < p, got {r}")
    _check_m(m)
    spec = CyclicSpec(p=p, r=r, s=1, period_kind="2K", ordering="grid")
    K = ellipk(m)
    a = 2 * r * K / p
    grid = x + 2 * K * np.arange(p) / p
    d = np.asarray(ellipj(grid, m)[2])
    total = _csum(d).real

    def cs(u):
        sn, cn, _ = ellipj(u, m)
        return float(cn / sn)

    if l == p:
        lhs = math.prod(d.tolist())
        coef = math.prod(cs(2 * K * n / p) ** 2 for n in range(1, (p - 1) // 2 + 1))
        label = "full product"
    else:
        idx = np.arange(p)
        prods = np.ones(p)
        for i in range(l):
            prods = prods * d[(idx + i * r) % p]
        lhs = math.fsum(prods.tolist())
        coef = _product_coefficient(lambda k: cs(k * a), l)
        label = f"{l}-fold product"
    rhs = coef * total
    return CyclicCheckResult(spec, f"dn-product[l={l}]", complex(lhs), complex(rhs),
                             _residual(lhs, rhs), float(x), float(m), label, tol)


def trig_limits(p, r=1, l=3):
    """m = 0 limits of the dn-product identities as {name: (lhs, rhs)}.

    ``cot-product`` (odd p): 1/p against prod_{n <= (p-1)/2} cot^2(n pi/p).
    ``cot-square-sum``: (p-1)(p-2)/3 against sum_{j<p} cot^2(j pi/p).
    ``cot-bracket`` (needs l < p, odd l): 1 against the product bracket with
    cs replaced by cot(r pi k/p).
    """
    if p < 3:
        raise ValueError("p must be >= 3")

    def cot(t):
        return math.cos(t) / math.sin(t)

    out = {}
    if p % 2:
        out["cot-product"] = (1.0 / p, math.prod(cot(n * math.pi / p) ** 2
                                                 for n in range(1, (p - 1) // 2 + 1)))
    out["cot-square-sum"] = ((p - 1) * (p - 2) / 3.0,
                             math.fsum(cot(j * math.pi / p) ** 2 for j in range(1, p)))
    if l % 2 and 1 <= l < p and gcd(r, p) == 1 and (p % 2 or (r == 1 and 2 * l < p + 2)):
        out["cot-bracket"] = (1.0, _product_coefficient(lambda k: cot(r * k * math.pi / p), l))
    return out


# --------------------------------------------------------------------------
# exchanging the roles of two functions in a shifted sum

_FUNC_RE = re.compile(r"\b(sn|cn|dn|cs|ds|ns|nc|dc|sc|nd|cd|sd|Z)\b(?!\s*\()")


def _function_of_x(text):
    """'dn**2' -> 'dn(x)**2'; full expressions pass through unchanged."""
    return _FUNC_RE.sub(r"\1(x)", text.replace("^", "**"))


def interchange_check(g, h, sign=1, alternating=False, p=5, r=1, x=0.3, m=0.5,
                      tol=DEFAULT_CYCLIC_TOL):
    """Residual of sum w_j g_j (h_{j+r} + sign h_{j-r}) = tau sum w_j h_j (g_{j+r} + sign g_{j-r}).

    tau = sign for plain sums and sign * (-1)**r for alternating weights.
    g and h are expressions in x (bare names such as 'dn**2' are accepted)
    and must share a periodicity class; the grid spans that period.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    _check_m(m)
    G, H = parse(_function_of_x(g)), parse(_function_of_x(h))
    for e in (G, H):
        if e.symbols() - {"x"}:
            raise ValueError("g and h must depend on x only")
    sg, sh = half_period_signs(G), half_period_signs(H)
    if sg is None or sh is None or len(sg) != 1 or sg != sh:
        raise PeriodMismatch(f"g and h differ in periodicity class ({sg} vs {sh})")
    period = "2K" if sg == {1} else "4K"
    if alternating and p % 2:
        raise ValueError("alternating weights need even p")
    spec = CyclicSpec(p=p, r=r, s=2 if alternating else 1, period_kind=period,
                      ordering="grid")
    notes = _spec_warnings(spec)
    xs = x + np.arange(p) * spec.period(m) / p
    env = Env(xs, {}, np.full(p, float(m)))
    gv = np.broadcast_to(G.evaluate(env), (p,))
    hv = np.broadcast_to(H.evaluate(env), (p,))
    w = spec.weights().real
    up, dn_ = np.roll(np.arange(p), -r), np.roll(np.arange(p), r)
    lhs = _csum(w * gv * (hv[up] + sign * hv[dn_]))
    tau = sign * ((-1) ** r if alternating else 1)
    rhs = tau * _csum(w * hv * (gv[up] + sign * gv[dn_]))
    return CyclicCheckResult(spec, f"interchange[{g}|{h}]", lhs, rhs, _residual(lhs, rhs),
                             float(x), float(m), f"tau={tau:+d}", tol, notes)


# --------------------------------------------------------------------------
# batches

def _run(task):
    kind, args = task
    if kind == "chain":
        return chain_weighted(*args)
    if kind == "F":
        return verify_appendixF(*args)
    raise ValueError(kind)


def check_many(tasks, parallelism=1):
    """Run ('chain'|'F', args) tasks; results keep the task order."""
    tasks = list(tasks)
    if parallelism and parallelism > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=parallelism) as pool:
            return list(pool.map(_run, tasks, chunksize=4))
    return [_run(t) for t in tasks]
