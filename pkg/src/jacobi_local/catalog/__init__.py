"""Catalog of local identities with stable IDs.

Every entry is an :class:`Identity` holding two expression trees.  Fixed
identities come from :data:`tables.LOCAL_TABLE` and :data:`tables.SECTION_TABLE`;
rank-lifting families are realized on demand for 1 <= n <= 16.
"""

from dataclasses import dataclass, field
from functools import lru_cache
import fnmatch
import json
import re

import numpy as np

from ..expr import (Env, ConstraintViolation, parse, perturb, monomial_degrees,
                    half_period_signs, singular_constraints)
from . import tables

__all__ = [
    "Identity",
    "FamilyInstance",
    "UnknownIdentity",
    "ConstraintViolation",
    "EXCLUSION_RADIUS",
    "MAX_FAMILY_N",
    "DEFAULT_FAMILY_N",
    "catalog_ids",
    "local_ids",
    "family_ids",
    "get_identity",
    "instantiate_family",
    "eval_side",
    "residual",
    "manifest",
    "manifest_json",
    "printed_erratum",
]

EXCLUSION_RADIUS = 0.02  # in units of K
MAX_FAMILY_N = 16
DEFAULT_FAMILY_N = (1, 2, 3, 5, 8)
_FAMILY_RE = re.compile(r"^(?P<fid>E\.[\w.]+)\[(?P<n>\d+)\]$")


class UnknownIdentity(KeyError):
    pass


def natural_key(s):
    return [int(t) if t.isdigit() else t for t in re.split(r"(\d+)", s)]


@dataclass(frozen=True, eq=False)
class Identity:
    id: str
    lhs: object
    rhs: object
    shifts: tuple
    rank: int
    source: str
    lhs_text: str = ""
    rhs_text: str = ""
    family: str = None
    n: int = None
    note: str = ""
    constraints: tuple = field(default=(), repr=False)

    @property
    def arity(self):
        return len(self.shifts)

    @property
    def period(self):
        """'2K' when both sides are 2K-periodic in x, else '4K'."""
        signs = half_period_signs(self.lhs)
        return "2K" if signs == {1} else "4K"

    @property
    def cond_degree(self):
        """Power of the coefficient atoms that controls rounding in a family.

        B**n carries 2n powers of cs(a); the closing coefficient adds up to two.
        """
        return 2 * self.n + 2 if self.n is not None else None

    def _shift_map(self, shifts):
        if isinstance(shifts, dict):
            missing = set(self.shifts) - set(shifts)
            if missing:
                raise ValueError(f"{self.id}: missing shift values for {sorted(missing)}")
            return {k: shifts[k] for k in self.shifts}
        shifts = list(shifts) if shifts is not None else []
        if len(shifts) != self.arity:
            raise ValueError(f"{self.id}: expected {self.arity} shift value(s), got {len(shifts)}")
        return dict(zip(self.shifts, shifts))

    def env(self, x, shifts, m):
        return Env(x, self._shift_map(shifts), m)

    def constraint_distance(self, env):
        """Minimum distance (units of K) to any singular lattice, per sample."""
        if not self.constraints:
            return np.full(np.shape(env.values["x"]), np.inf)
        d = [np.broadcast_to(c.distance(env), np.broadcast(env.values["x"], env.m).shape)
             for c in self.constraints]
        return np.min(np.stack(d), axis=0)

    def check_constraints(self, env, radius=EXCLUSION_RADIUS):
        for c in self.constraints:
            dist = np.asarray(c.distance(env))
            if np.any(dist <= radius):
                raise ConstraintViolation(
                    f"{self.id}: {c.describe()} (distance {float(np.min(dist)):.3g}K "
                    f"<= {radius}K)")

    def eval_side(self, side, x, shifts, m, check=True):
        env = self.env(x, shifts, m)
        if check:
            self.check_constraints(env)
        expr = {"lhs": self.lhs, "rhs": self.rhs}[side]
        out = np.broadcast_to(expr.evaluate(env), np.broadcast(env.values["x"], env.m).shape)
        return out[()] if out.ndim == 0 else np.array(out)

    def sides(self, env):
        shape = np.broadcast(env.values["x"], env.m).shape
        return (np.broadcast_to(self.lhs.evaluate(env), shape),
                np.broadcast_to(self.rhs.evaluate(env), shape))

    def residual(self, x, shifts, m, check=True):
        env = self.env(x, shifts, m)
        if check:
            self.check_constraints(env)
        lv, rv = self.sides(env)
        res = np.abs(lv - rv) / np.maximum(1.0, np.maximum(np.abs(lv), np.abs(rv)))
        return res[()] if res.ndim == 0 else res

    def with_rhs(self, rhs, new_id=None, note=""):
        return _make(new_id or self.id, self.lhs, rhs, self.source, self.lhs_text,
                     repr(rhs), family=self.family, n=self.n, note=note)

    def perturbed(self, eps):
        """Copy with the first RHS term scaled by (1 + eps)."""
        return self.with_rhs(perturb(self.rhs, eps), f"{self.id}~{eps:g}", "perturbed")

    def transformed(self, mapping, suffix):
        """Substitute linear forms for symbols, e.g. {'a': -a} or {'x': x - a}."""
        return _make(f"{self.id}{suffix}", self.lhs.subs(mapping), self.rhs.subs(mapping),
                     self.source, family=self.family, n=self.n, note=suffix,
                     check_rank=False)

    def to_manifest(self):
        return {
            "id": self.id,
            "rank": self.rank,
            "arity": self.arity,
            "shifts": list(self.shifts),
            "period": self.period,
            "source": self.source,
            "lhs": self.lhs_text,
            "rhs": self.rhs_text,
            "constraints": [c.describe() for c in self.constraints],
            "family": self.family,
            "n": self.n,
        }


@dataclass(frozen=True)
class FamilyInstance:
    family_id: str
    n: int
    realized: Identity


def _make(iid, lhs, rhs, source, lhs_text="", rhs_text="", family=None, n=None,
          note="", check_rank=True):
    degs = monomial_degrees(lhs)
    if degs is None or len(degs) != 1:
        if check_rank:
            raise ValueError(f"{iid}: left side is not homogeneous (degrees {degs})")
        rank = -1
    else:
        rank = degs.pop()
    syms = (lhs.symbols() | rhs.symbols()) - {"x"}
    shifts = tuple(sorted(syms, key=natural_key))
    cons = tuple(singular_constraints(lhs, rhs))
    return Identity(id=iid, lhs=lhs, rhs=rhs, shifts=shifts, rank=rank, source=source,
                    lhs_text=lhs_text, rhs_text=rhs_text, family=family, n=n, note=note,
                    constraints=cons)


@lru_cache(maxsize=1)
def _coeff_bindings():
    return {k: parse(v) for k, v in tables.COEFFS.items()}


@lru_cache(maxsize=1)
def _local_entries():
    out = {}
    for iid, lhs, rhs, src in tables.LOCAL_TABLE + tables.SECTION_TABLE:
        out[iid] = (lhs, rhs, src)
    return out


@lru_cache(maxsize=1)
def _family_entries():
    return {fid: (lhs, rhs) for fid, lhs, rhs in tables.FAMILY_TABLE}


@lru_cache(maxsize=None)
def _build_local(iid):
    lhs, rhs, src = _local_entries()[iid]
    b = _coeff_bindings()
    return _make(iid, parse(lhs, **b), parse(rhs, **b), src, lhs, rhs)


def _canonical_family(fid):
    return tables.FAMILY_ALIASES.get(fid, fid)


def instantiate_family(family_id, n):
    """Realize family ``family_id`` at rank parameter ``n``."""
    fid = _canonical_family(family_id)
    if fid not in _family_entries():
        raise UnknownIdentity(f"unknown family {family_id!r}")
    if not isinstance(n, (int, np.integer)) or not 1 <= int(n) <= MAX_FAMILY_N:
        raise ValueError(f"family rank parameter n must be an integer in 1..{MAX_FAMILY_N}, got {n!r}")
    return FamilyInstance(fid, int(n), _build_family(fid, int(n)))


@lru_cache(maxsize=None)
def _build_family(fid, n):
    lhs, rhs = _family_entries()[fid]
    b = _coeff_bindings()
    return _make(f"{fid}[{n}]", parse(lhs, n=n, **b), parse(rhs, n=n, **b),
                 "arbitrary-rank family", lhs, rhs, family=fid, n=n)


def local_ids():
    return sorted(_local_entries(), key=natural_key)


def family_ids():
    return sorted(_family_entries(), key=natural_key)


def _all_ids(family_n):
    ids = list(_local_entries())
    ids += [f"{fid}[{n}]" for fid in _family_entries() for n in family_n]
    return sorted(ids, key=natural_key)


def _matches(iid, pattern):
    if any(ch in pattern for ch in "*?"):
        return fnmatch.fnmatchcase(iid, pattern.replace("[", "[[]"))
    return iid.startswith(pattern)


def catalog_ids(filter=None, family_n=DEFAULT_FAMILY_N):
    """Sorted IDs, optionally restricted by a prefix or glob (``*``, ``?``).

    Families appear as instances ``<family>[n]`` for each n in ``family_n``.
    """
    ids = _all_ids(tuple(family_n))
    if not filter:
        return ids
    return [i for i in ids if _matches(i, filter)]


def get_identity(iid):
    """Return the identity for a local ID or a family instance ``E.xxx[n]``."""
    if isinstance(iid, Identity):
        return iid
    if iid in _local_entries():
        return _build_local(iid)
    mt = _FAMILY_RE.match(iid)
    if mt:
        return instantiate_family(mt.group("fid"), int(mt.group("n"))).realized
    raise UnknownIdentity(f"unknown identity {iid!r}")


def eval_side(identity, side, x, shifts, m):
    return get_identity(identity).eval_side(side, x, shifts, m)


def residual(identity, x, shifts, m):
    return get_identity(identity).residual(x, shifts, m)


def printed_erratum(iid, n=None):
    """Identity with the RHS exactly as printed, for entries listed in ERRATA."""
    base_id = _FAMILY_RE.match(iid).group("fid") if _FAMILY_RE.match(iid) else iid
    if base_id not in tables.ERRATA:
        raise UnknownIdentity(f"no erratum recorded for {iid!r}")
    info = tables.ERRATA[base_id]
    b = _coeff_bindings()
    if base_id in _family_entries():
        n = n if n is not None else int(_FAMILY_RE.match(iid).group("n"))
        ident = _build_family(base_id, n)
        rhs = parse(info["printed_rhs"], n=n, **b)
    else:
        ident = _build_local(base_id)
        rhs = parse(info["printed_rhs"], **b)
    return ident.with_rhs(rhs, f"{ident.id}(printed)", info["note"])


def manifest(family_n=DEFAULT_FAMILY_N):
    local = [get_identity(i).to_manifest() for i in local_ids()]
    fams = []
    for fid in family_ids():
        ident = _build_family(fid, 1)
        fams.append({"id": fid, "lhs": ident.lhs_text, "rhs": ident.rhs_text,
                     "rank_at_n1": ident.rank, "arity": ident.arity,
                     "n_range": [1, MAX_FAMILY_N]})
    counts = {}
    for e in local:
        g = e["id"].split(".")[0]
        key = g if g in "ABCD" else "section"
        counts[key] = counts.get(key, 0) + 1
    return {
        "schema_version": 1,
        "counts": dict(sorted(counts.items())),
        "local_total": len(local),
        "family_total": len(fams),
        "default_family_n": list(family_n),
        "catalog_total": len(catalog_ids(family_n=family_n)),
        "identities": local,
        "families": fams,
        "errata": {k: v["note"] for k, v in sorted(tables.ERRATA.items())},
    }


def manifest_json(**kw):
    return json.dumps(manifest(**kw), indent=2, sort_keys=True) + "\n"
