"""Randomized verification of catalog identities.

Each identity is checked on a batch of constraint-respecting samples drawn
from a per-identity RNG, so reports do not depend on execution order or on
how many workers were used.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, asdict
import hashlib
import json

import numpy as np

from .catalog import (EXCLUSION_RADIUS, Identity, catalog_ids, get_identity,
                      DEFAULT_FAMILY_N)
from .core import ellipk
from .expr import Env

__all__ = [
    "SampleDomain",
    "VerificationReport",
    "SamplingError",
    "DEFAULT_TOL",
    "DEFAULT_SAMPLES",
    "WAIVER_TOL",
    "WAIVER_MIN_N",
    "MAX_FAILURES",
    "task_rng",
    "sample_assignment",
    "sample_batch",
    "coefficient_bound",
    "verify_identity",
    "verify_all",
    "reports_payload",
    "reports_json",
]

DEFAULT_TOL = 1e-8
DEFAULT_SAMPLES = 200
WAIVER_TOL = 1e-6
WAIVER_MIN_N = 8
MAX_FAILURES = 16
MAX_TRIES = 10_000
_EPS = np.finfo(np.float64).eps
_AUX = {"cs", "ds", "ns", "nc", "dc", "sc", "nd", "cd", "sd"}


class SamplingError(RuntimeError):
    """Rejection sampling found no admissible point."""


@dataclass(frozen=True)
class SampleDomain:
    m_range: tuple = (0.05, 0.95)
    x_range: tuple = (0.0, 4.0)        # multiples of K
    shift_range: tuple = (-2.0, 2.0)   # multiples of K
    shift_strategy: str = "uniform-avoid"
    exclusion_radius: float = EXCLUSION_RADIUS  # multiples of K
    allow_endpoints: bool = False

    def __post_init__(self):
        lo, hi = self.m_range
        if not lo <= hi:
            raise ValueError("m_range must be ordered")
        if self.allow_endpoints:
            ok = 0.0 <= lo and hi <= 1.0
        else:
            ok = 0.0 < lo and hi < 1.0
        if not ok:
            raise ValueError(f"m_range {self.m_range} must lie strictly inside (0, 1)")
        if self.shift_strategy not in ("uniform-avoid", "lattice-fraction"):
            raise ValueError(f"unknown shift strategy {self.shift_strategy!r}")
        if self.exclusion_radius < 0:
            raise ValueError("exclusion radius must be non-negative")

    def to_dict(self):
        return {k: (list(v) if isinstance(v, tuple) else v) for k, v in asdict(self).items()}


@dataclass
class VerificationReport:
    id: str
    samples: int
    tol: float
    seed: int
    max_residual: float
    median_residual: float
    passed: bool
    waiver: str = None
    coef_bound: float = None
    failures: list = field(default_factory=list)
    error: str = None

    def to_dict(self):
        return {
            "id": self.id,
            "samples": self.samples,
            "tol": self.tol,
            "seed": self.seed,
            "max_residual": self.max_residual,
            "median_residual": self.median_residual,
            "pass": self.passed,
            "waiver": self.waiver,
            "coef_bound": self.coef_bound,
            "failures": self.failures,
            "error": self.error,
        }


def task_rng(seed, iid):
    """Per-task generator seeded from (seed, id)."""
    digest = hashlib.sha256(f"{int(seed)}:{iid}".encode()).digest()
    return np.random.default_rng(int.from_bytes(digest[:16], "little"))


def _draw(domain, arity, rng, size):
    m = rng.uniform(*domain.m_range, size=size)
    u = rng.uniform(*domain.x_range, size=size)
    if domain.shift_strategy == "uniform-avoid":
        sh = rng.uniform(*domain.shift_range, size=(arity, size))
    else:
        q = rng.integers(3, 13, size=(arity, size))
        j = rng.integers(1, q)
        sign = rng.choice([-1.0, 1.0], size=(arity, size))
        sh = sign * 2.0 * j / q
    return u, sh, m


def _generic_distance(sh):
    """Distance (units of K) of shifts and pairwise differences from 0 mod 2K."""
    rows = list(sh)
    for i in range(len(sh)):
        for j in range(i + 1, len(sh)):
            rows.append(sh[i] - sh[j])
    if not rows:
        return None
    r = np.stack(rows)
    return np.min(np.abs(r - 2.0 * np.rint(r / 2.0)), axis=0)


def _aux_magnitude(identity, env):
    """Largest |aux(shift)| over x-free coefficient atoms, per sample."""
    atoms = {}
    for e in (identity.lhs, identity.rhs):
        for f in e.functions():
            if f.name in _AUX and not f.lin.has_x:
                atoms.setdefault((f.name, f.lin.key()), f)
    if not atoms:
        return None
    vals = [np.abs(np.broadcast_to(f.evaluate(env), env.m.shape)) for f in atoms.values()]
    return np.max(np.stack(vals), axis=0)


def coefficient_bound(identity, tol):
    """Cap on |aux(shift)| that keeps rounding below tol for rank families.

    Rounding in a family instance behaves like C * eps * max(1, c)**cond_degree
    with c the largest coefficient atom; C stays below 100 on the default
    domain for every family and n <= 16, so 256 leaves a margin.
    """
    deg = identity.cond_degree if isinstance(identity, Identity) else None
    if not deg:
        return None
    return float(max(1.25, (tol / (256.0 * _EPS)) ** (1.0 / deg)))


def sample_batch(domain, arity, rng, n, identity=None, coef_bound=None):
    """Draw ``n`` admissible samples as arrays (x, shifts[arity, n], m)."""
    if arity > 3:
        raise ValueError("arity must be <= 3")
    xs, shs, ms = [], [], []
    got = 0
    tried = 0
    chunk = max(32, 2 * n)
    limit = MAX_TRIES * max(1, n)
    while got < n:
        if tried >= limit or (got == 0 and tried >= MAX_TRIES):
            raise SamplingError(f"no admissible sample after {tried} tries")
        u, sh, m = _draw(domain, arity, rng, chunk)
        tried += chunk
        ok = np.ones(chunk, dtype=bool)
        gd = _generic_distance(sh)
        if gd is not None:
            ok &= gd > domain.exclusion_radius
        K = ellipk(m)
        x = u * K
        shifts = sh * K
        if identity is not None:
            env = identity.env(x, list(shifts), m)
            ok &= identity.constraint_distance(env) > domain.exclusion_radius
            if coef_bound is not None:
                with np.errstate(all="ignore"):
                    mag = _aux_magnitude(identity, env)
                if mag is not None:
                    ok &= mag <= coef_bound
        idx = np.flatnonzero(ok)[: n - got]
        xs.append(x[idx])
        shs.append(shifts[:, idx])
        ms.append(m[idx])
        got += idx.size
    return np.concatenate(xs), np.concatenate(shs, axis=1), np.concatenate(ms)


def sample_assignment(domain, arity, rng):
    """One admissible (x, shifts, m) with generic lattice avoidance."""
    x, sh, m = sample_batch(domain, arity, rng, 1)
    return float(x[0]), [float(s) for s in sh[:, 0]], float(m[0])


def _policy(identity, tol):
    if identity.n is not None and identity.n >= WAIVER_MIN_N and tol < WAIVER_TOL:
        return WAIVER_TOL, (f"rank family at n={identity.n}: conditioning waiver, "
                            f"evaluated at tol {WAIVER_TOL:g}")
    return tol, None


def verify_identity(iid, domain=None, samples=DEFAULT_SAMPLES, tol=DEFAULT_TOL, seed=0,
                    waiver=True):
    """Check one identity on ``samples`` random admissible points."""
    identity = get_identity(iid)
    domain = domain or SampleDomain()
    eff_tol, note = _policy(identity, tol) if waiver else (tol, None)
    bound = coefficient_bound(identity, eff_tol)
    rng = task_rng(seed, identity.id)
    base = dict(id=identity.id, samples=int(samples), tol=float(eff_tol), seed=int(seed),
                waiver=note, coef_bound=bound)
    if samples <= 0:
        return VerificationReport(max_residual=0.0, median_residual=0.0, passed=True, **base)
    try:
        x, sh, m = sample_batch(domain, identity.arity, rng, samples, identity, bound)
    except SamplingError as exc:
        return VerificationReport(max_residual=None, median_residual=None, passed=False,
                                  error=str(exc), **base)
    env = Env(x, dict(zip(identity.shifts, sh)), m)
    with np.errstate(all="ignore"):
        lv, rv = identity.sides(env)
        res = np.abs(lv - rv) / np.maximum(1.0, np.maximum(np.abs(lv), np.abs(rv)))
    bad = ~(res <= eff_tol)
    failures = []
    for i in np.flatnonzero(bad)[:MAX_FAILURES]:
        failures.append({"x": float(x[i]), "shifts": [float(v) for v in sh[:, i]],
                         "m": float(m[i]),
                         "residual": float(res[i]) if np.isfinite(res[i]) else None})
    finite = bool(np.all(np.isfinite(res)))
    return VerificationReport(
        max_residual=float(np.max(res)) if finite else None,
        median_residual=float(np.median(res)) if finite else None,
        passed=bool(finite and not bad.any()),
        failures=failures, **base)


def _task(args):
    iid, domain, samples, tol, seed = args
    return verify_identity(iid, domain, samples, tol, seed)


def verify_all(filter=None, domain=None, samples=DEFAULT_SAMPLES, tol=DEFAULT_TOL, seed=0,
               parallelism=1, family_n=DEFAULT_FAMILY_N, ids=None):
    """Verify every matching identity; reports are sorted by id."""
    ids = list(ids) if ids is not None else catalog_ids(filter, family_n=family_n)
    domain = domain or SampleDomain()
    tasks = [(i, domain, samples, tol, seed) for i in ids]
    if parallelism and parallelism > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=parallelism) as pool:
            reports = list(pool.map(_task, tasks, chunksize=4))
    else:
        reports = [_task(t) for t in tasks]
    order = {iid: k for k, iid in enumerate(ids)}
    return sorted(reports, key=lambda r: order[r.id])


def reports_payload(reports, **config):
    passed = sum(r.passed for r in reports)
    return {
        "schema_version": 1,
        "config": config,
        "summary": {"total": len(reports), "passed": passed, "failed": len(reports) - passed},
        "reports": [r.to_dict() for r in reports],
    }


def reports_json(reports, **config):
    return json.dumps(reports_payload(reports, **config), indent=2, sort_keys=True) + "\n"
