"""Exact and naive difference schemes for (2 - m) y - y'' = 2 y**3.

The exact scheme is the two-point dn identity solved for the forward value:
y[n+1] = 2 ds(D) ns(D) y[n] / (cs(D)**2 + y[n]**2) - y[n-1], which carries
y[n] = dn(z0 + n D) exactly.  The naive scheme is the explicit central
difference of the ODE.
"""

from dataclasses import dataclass, field, replace
import math

import numpy as np

from .core import ellipj, ellipk
from .integrals import power_integral

__all__ = [
    "SchemeState",
    "TrajectoryReport",
    "SchemeError",
    "DENOM_FLOOR",
    "coefficients",
    "coefficient_limit",
    "initial_state",
    "step_exact",
    "step_naive",
    "step_back",
    "reference",
    "run",
    "time_reversal_error",
    "naive_order",
    "truncation_residual",
    "continuum_order",
    "chained_sum",
    "end_correction_order",
    "fit_slope",
]

DENOM_FLOOR = 1e-12
_DECIMATE = 100


class SchemeError(ArithmeticError):
    """The exact-scheme denominator cs(D)**2 + y**2 underflowed."""


@dataclass(frozen=True)
class SchemeState:
    y_prev: float
    y_curr: float
    delta: float
    m: float
    n: int = 1

    def __post_init__(self):
        if self.delta == 0.0:
            raise ValueError("step delta must be non-zero")
        K = float(ellipk(self.m))
        u = self.delta / (2.0 * K)
        if abs(u - round(u)) < 1e-12:
            raise ValueError("delta must avoid multiples of 2K (cs, ds, ns are singular there)")


def coefficients(delta, m):
    """(cs^2, 2 ds ns) at the step size."""
    s, c, d = ellipj(float(delta), float(m))
    return (c / s) ** 2, 2.0 * d / (s * s)


def coefficient_limit(a, m):
    """ds(a) ns(a) - cs(a)**2, written as (dn - cn**2)/sn**2; tends to 1 - m/2."""
    s, c, d = ellipj(float(a), float(m))
    return (d - c * c) / (s * s)


def initial_state(m, delta, z0=0.0):
    """(y0, y1) = (dn(z0), dn(z0 + delta)); z0 = 0 gives the data y0 = 1, y1 = dn(delta)."""
    y0 = ellipj(float(z0), m)[2]
    y1 = ellipj(float(z0) + float(delta), m)[2]
    return SchemeState(y0, y1, float(delta), float(m), 1)


def _exact_next(y_prev, y, cs2, two_dsns):
    den = cs2 + y * y
    if den <= DENOM_FLOOR:
        raise SchemeError(f"denominator cs^2 + y^2 = {den:.3g} below {DENOM_FLOOR}")
    return two_dsns * y / den - y_prev


def step_exact(state):
    cs2, two = coefficients(state.delta, state.m)
    nxt = _exact_next(state.y_prev, state.y_curr, cs2, two)
    return replace(state, y_prev=state.y_curr, y_curr=nxt, n=state.n + 1)


def step_naive(state):
    y, h2 = state.y_curr, state.delta ** 2
    nxt = 2.0 * y - state.y_prev + h2 * ((2.0 - state.m) * y - 2.0 * y ** 3)
    return replace(state, y_prev=y, y_curr=nxt, n=state.n + 1)


def step_back(state):
    """Exact scheme run backward: the scheme is symmetric in y[n+1], y[n-1]."""
    cs2, two = coefficients(state.delta, state.m)
    prev = _exact_next(state.y_curr, state.y_prev, cs2, two)
    return replace(state, y_prev=prev, y_curr=state.y_prev, n=state.n - 1)


def reference(n, delta, m, z0=0.0):
    """dn(z0 + n delta) with the argument formed per step count and reduced mod 2K."""
    n = np.asarray(n, dtype=np.float64)
    two_k = 2.0 * float(ellipk(m))
    arg = z0 + n * delta
    arg = arg - two_k * np.rint(arg / two_k)
    return np.asarray(ellipj(arg, np.full_like(arg, m))[2])


@dataclass
class TrajectoryReport:
    scheme: str
    m: float
    delta: float
    z0: float
    steps: int
    max_abs_error: float
    final_abs_error: float
    n: np.ndarray = field(repr=False)
    y: np.ndarray = field(repr=False)
    ref: np.ndarray = field(repr=False)

    @property
    def errors(self):
        return np.abs(self.y - self.ref)

    def decimated(self, every=_DECIMATE):
        idx = np.arange(0, self.n.size, every)
        if idx[-1] != self.n.size - 1:
            idx = np.append(idx, self.n.size - 1)
        return [[int(self.n[i]), float(self.errors[i])] for i in idx]

    def rows(self):
        err = self.errors
        return [(int(k), float(v), float(r), float(e))
                for k, v, r, e in zip(self.n, self.y, self.ref, err)]

    def to_dict(self, every=_DECIMATE):
        return {"scheme": self.scheme, "m": self.m, "delta": self.delta, "z0": self.z0,
                "steps": self.steps, "max_abs_error": self.max_abs_error,
                "final_abs_error": self.final_abs_error,
                "error_series": self.decimated(every)}


def run(scheme, m, delta, steps, z0=0.0):
    """Advance ``steps`` steps from (dn(z0), dn(z0 + delta)) and compare with dn."""
    if scheme not in ("exact", "naive"):
        raise ValueError(f"unknown scheme {scheme!r}")
    if steps < 1:
        raise ValueError("steps must be >= 1")
    st = initial_state(m, delta, z0)
    y = np.empty(steps + 1)
    y[0], y[1] = st.y_prev, st.y_curr
    prev, cur = st.y_prev, st.y_curr
    if scheme == "exact":
        cs2, two = coefficients(delta, m)
        for k in range(2, steps + 1):
            prev, cur = cur, _exact_next(prev, cur, cs2, two)
            y[k] = cur
    else:
        h2 = delta * delta
        for k in range(2, steps + 1):
            prev, cur = cur, 2.0 * cur - prev + h2 * ((2.0 - m) * cur - 2.0 * cur ** 3)
            y[k] = cur
    n = np.arange(steps + 1)
    ref = reference(n, delta, m, z0)
    err = np.abs(y - ref)
    bad = ~np.isfinite(err)
    max_err = math.inf if bad.any() else float(np.max(err))
    return TrajectoryReport(scheme, float(m), float(delta), float(z0), int(steps), max_err,
                            float(err[-1]) if np.isfinite(err[-1]) else math.inf,
                            n, y, ref)


def time_reversal_error(m, delta, steps, z0=0.0):
    """Run the exact scheme forward, then backward to n = 0; max deviation on the way."""
    fwd = run("exact", m, delta, steps, z0)
    st = SchemeState(fwd.y[-2], fwd.y[-1], float(delta), float(m), steps)
    worst = 0.0
    while st.n > 1:
        st = step_back(st)
        worst = max(worst, abs(st.y_prev - fwd.y[st.n - 1]))
    return worst


def fit_slope(xs, ys):
    """Least-squares slope of log(ys) against log(xs)."""
    return float(np.polyfit(np.log(np.asarray(xs, float)), np.log(np.asarray(ys, float)), 1)[0])


def naive_order(m, delta, horizon, z0=0.0):
    """Max-error ratio of the naive scheme at delta and delta/2 over the same horizon."""
    steps = int(round(horizon / delta))
    e1 = run("naive", m, delta, steps, z0).max_abs_error
    e2 = run("naive", m, delta / 2.0, 2 * steps, z0).max_abs_error
    return e1 / e2


def truncation_residual(identity_id, a, m, z=0.37):
    """Gap between the exact scheme and its continuum form on y = dn at z.

    The exact scheme applied to dn vanishes identically; replacing its
    coefficients by the ODE ones (2 - m and 1/a**2) leaves this residual.
    """
    if identity_id != "3.1":
        raise ValueError("continuum order is wired for identity '3.1' only")
    y = ellipj(z, m)[2]
    yp = ellipj(z + a, m)[2]
    ym = ellipj(z - a, m)[2]
    second = yp + ym - 2.0 * y
    cs2 = (ellipj(a, m)[1] / ellipj(a, m)[0]) ** 2
    gap_mass = (2.0 * coefficient_limit(a, m) - (2.0 - m)) * y
    gap_diff = (1.0 / (a * a) - cs2) * second
    return abs(gap_mass - gap_diff)


def continuum_order(identity_id, a_list, m=0.5, z=0.37):
    """Fitted log-log slope of :func:`truncation_residual` over ``a_list``."""
    a_list = [float(a) for a in a_list]
    if not all(1e-3 <= a <= 1e-1 for a in a_list):
        raise ValueError("a_list must lie inside [1e-3, 1e-1]")
    res = [truncation_residual(identity_id, a, m, z) for a in a_list]
    return fit_slope(a_list, res)


def chained_sum(z0, A, p, m):
    """The chained two-point identity over z_i = z0 + (i-1) A/p, scaled by A/p.

    Returns the scaled left side, bulk term, end correction, the identity
    residual, and the continuum values 2 int dn^3, (2-m) int dn and
    m sn cn |_{z0}^{z0+A} that they approach.
    """
    a = A / p
    z = z0 + a * (np.arange(0, p + 2) - 1.0)  # z_0 .. z_{p+1}
    mm = np.full_like(z, m)
    sn, cn, dn = ellipj(z, mm)
    s, c, d = ellipj(a, m)
    cs2, dsns = (c / s) ** 2, d / (s * s)
    inner = slice(1, p + 1)
    lhs = a * math.fsum(dn[inner] ** 2 * (dn[2:p + 2] + dn[0:p]))
    bulk = a * 2.0 * (dsns - cs2) * math.fsum(dn[inner])
    end = -a * cs2 * (dn[p + 1] - dn[1] + dn[0] - dn[p])
    zend = z0 + A
    s0, c0, _ = ellipj(z0, m)
    s1, c1, _ = ellipj(zend, m)
    end_limit = m * (s1 * c1 - s0 * c0)
    int3 = power_integral("dn", 3, zend, m) - power_integral("dn", 3, z0, m)
    int1 = power_integral("dn", 1, zend, m) - power_integral("dn", 1, z0, m)
    end = float(end)
    return {"p": int(p), "a": float(a), "lhs": lhs, "bulk": bulk, "end": end,
            "identity_residual": abs(lhs - bulk - end),
            "lhs_limit": float(2.0 * int3), "bulk_limit": float((2.0 - m) * int1),
            "end_limit": float(end_limit)}


def end_correction_order(z0, A, m, p_list):
    """Slope of |end correction - m sn cn difference| against p (expected -1)."""
    errs = []
    for p in p_list:
        r = chained_sum(z0, A, p, m)
        errs.append(abs(r["end"] - r["end_limit"]))
    return fit_slope(p_list, errs), errs
