"""Expression trees over Jacobi functions of linear arguments.

Identities are stored as pairs of trees.  Arguments are integer linear forms in
the variable ``x`` and the shift symbols (``a``, ``a1``, ``a2``), optionally
offset by a rational multiple of the quarter period ``K``.  Trees are built by
evaluating compact Python-syntax strings against the constructors below.
"""

from fractions import Fraction
import math

import numpy as np

from .core.elliptic import jacobi_all, ellipk, ellipe

PRIMARY = ("sn", "cn", "dn")
AUX = ("cs", "ds", "ns", "nc", "dc", "sc")
FUNCS = PRIMARY + AUX + ("Z", "am")
# zero of sn (offset 0) or of cn (offset K) modulo 2K
_SINGULAR_AT = {"cs": 0, "ds": 0, "ns": 0, "nc": 1, "dc": 1, "sc": 1}
# sign picked up under arg -> arg + 2K
_HALF_PERIOD_SIGN = {"sn": -1, "cn": -1, "dn": 1, "Z": 1, "cs": 1, "ds": -1,
                     "ns": -1, "nc": -1, "dc": -1, "sc": 1}


class ConstraintViolation(ValueError):
    """A sampled point puts a singular coefficient or atom on a pole."""


class Lin:
    """Integer combination of symbols plus a rational multiple of K."""

    __slots__ = ("coeffs", "kmul")

    def __init__(self, coeffs=None, kmul=0):
        if isinstance(coeffs, str):
            coeffs = {coeffs: 1}
        self.coeffs = tuple(sorted((s, int(c)) for s, c in (coeffs or {}).items() if c))
        self.kmul = Fraction(kmul)

    @property
    def mapping(self):
        return dict(self.coeffs)

    def coeff(self, sym):
        return self.mapping.get(sym, 0)

    @property
    def symbols(self):
        return tuple(s for s, _ in self.coeffs)

    @property
    def has_x(self):
        return self.coeff("x") != 0

    def __add__(self, other):
        if isinstance(other, (int, Fraction)) and other == 0:
            return self
        if not isinstance(other, Lin):
            return NotImplemented
        d = self.mapping
        for s, c in other.coeffs:
            d[s] = d.get(s, 0) + c
        return Lin(d, self.kmul + other.kmul)

    __radd__ = __add__

    def __neg__(self):
        return Lin({s: -c for s, c in self.coeffs}, -self.kmul)

    def __sub__(self, other):
        if not isinstance(other, Lin):
            return NotImplemented
        return self + (-other)

    def __mul__(self, k):
        if isinstance(k, (int, Fraction)):
            return Lin({s: k * c for s, c in self.coeffs}, k * self.kmul)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, Lin) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def key(self):
        return (self.coeffs, self.kmul)

    def subs(self, mapping):
        out = Lin({}, self.kmul)
        for s, c in self.coeffs:
            out = out + c * mapping.get(s, Lin(s))
        return out

    def evaluate(self, env):
        val = 0.0
        for s, c in self.coeffs:
            val = val + c * env.symbol(s)
        if self.kmul:
            val = val + float(self.kmul) * env.K
        return val

    def __repr__(self):
        parts = []
        for s, c in self.coeffs:
            if c == 1:
                parts.append(f"+{s}")
            elif c == -1:
                parts.append(f"-{s}")
            else:
                parts.append(f"{c:+d}*{s}")
        if self.kmul:
            parts.append(f"{'+' if self.kmul > 0 else '-'}{abs(self.kmul)}*K")
        txt = "".join(parts).lstrip("+")
        return txt or "0"


class Env:
    """Sample arrays plus a per-argument cache of Jacobi values."""

    def __init__(self, x, shifts, m):
        m = np.asarray(m, dtype=np.float64)
        self.m = m
        self.values = {"x": np.asarray(x, dtype=np.float64)}
        for k, v in (shifts or {}).items():
            self.values[k] = np.asarray(v, dtype=np.float64)
        self._K = None
        self._E = None
        self._cache = {}

    @property
    def K(self):
        if self._K is None:
            self._K = ellipk(self.m)
        return self._K

    @property
    def E(self):
        if self._E is None:
            self._E = ellipe(self.m)
        return self._E

    def symbol(self, name):
        try:
            return self.values[name]
        except KeyError:
            raise KeyError(f"no value bound for symbol {name!r}") from None

    def jac(self, lin):
        key = lin.key()
        if key not in self._cache:
            arg = lin.evaluate(self)
            arg, mm = np.broadcast_arrays(np.asarray(arg, dtype=np.float64), self.m)
            self._cache[key] = jacobi_all(arg, mm)
        return self._cache[key]


def _as_expr(v):
    if isinstance(v, Expr):
        return v
    if isinstance(v, (int, Fraction)):
        return Const(Fraction(v))
    if isinstance(v, float):
        return Const(v)
    raise TypeError(f"cannot use {v!r} in an expression")


class Expr:
    """Base node; arithmetic operators build new trees."""

    def __add__(self, other):
        return Add((self, _as_expr(other)))

    def __radd__(self, other):
        return Add((_as_expr(other), self))

    def __sub__(self, other):
        return Add((self, -_as_expr(other)))

    def __rsub__(self, other):
        return Add((_as_expr(other), -self))

    def __neg__(self):
        return Mul((Const(Fraction(-1)), self))

    def __pos__(self):
        return self

    def __mul__(self, other):
        return Mul((self, _as_expr(other)))

    def __rmul__(self, other):
        return Mul((_as_expr(other), self))

    def __truediv__(self, other):
        other = _as_expr(other)
        if isinstance(other, Const):
            return Mul((self, Const(1 / other.value)))
        return Div(self, other)

    def __rtruediv__(self, other):
        return Div(_as_expr(other), self)

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer powers are supported")
        return Pow(self, n)

    # tree utilities -----------------------------------------------------
    def children(self):
        return ()

    def walk(self):
        yield self
        for c in self.children():
            yield from c.walk()

    def functions(self):
        return [n for n in self.walk() if isinstance(n, Fn)]

    def symbols(self):
        out = set()
        for f in self.functions():
            out.update(f.lin.symbols)
        return out


class Const(Expr):
    def __init__(self, value):
        self.value = value

    def evaluate(self, env):
        return float(self.value)

    def subs(self, mapping):
        return self

    def __repr__(self):
        return str(self.value)


class Param(Expr):
    """Named scalar depending only on m: m, K, E, Kp, pi."""

    def __init__(self, name):
        if name not in ("m", "K", "E", "Kp", "pi"):
            raise ValueError(f"unknown parameter {name!r}")
        self.name = name

    def evaluate(self, env):
        if self.name == "m":
            return env.m
        if self.name == "K":
            return env.K
        if self.name == "E":
            return env.E
        if self.name == "Kp":
            return ellipk(1.0 - env.m)
        return math.pi

    def subs(self, mapping):
        return self

    def __repr__(self):
        return self.name


class Fn(Expr):
    def __init__(self, name, lin):
        if name not in FUNCS:
            raise ValueError(f"unknown function {name!r}")
        if not isinstance(lin, Lin):
            raise TypeError(f"{name} needs a linear argument, got {lin!r}")
        self.name = name
        self.lin = lin

    def evaluate(self, env):
        sn, cn, dn, am, Z = env.jac(self.lin)
        name = self.name
        if name == "sn":
            return sn
        if name == "cn":
            return cn
        if name == "dn":
            return dn
        if name == "Z":
            return Z
        if name == "am":
            return am
        with np.errstate(divide="ignore", invalid="ignore"):
            if name == "cs":
                return cn / sn
            if name == "ds":
                return dn / sn
            if name == "ns":
                return 1.0 / sn
            if name == "nc":
                return 1.0 / cn
            if name == "dc":
                return dn / cn
            return sn / cn

    def subs(self, mapping):
        return Fn(self.name, self.lin.subs(mapping))

    def __repr__(self):
        return f"{self.name}({self.lin!r})"


class Add(Expr):
    def __init__(self, terms):
        flat = []
        for t in terms:
            flat.extend(t.terms if isinstance(t, Add) else (t,))
        self.terms = tuple(flat)

    def children(self):
        return self.terms

    def evaluate(self, env):
        total = 0.0
        for t in self.terms:
            total = total + t.evaluate(env)
        return total

    def subs(self, mapping):
        return Add(tuple(t.subs(mapping) for t in self.terms))

    def __repr__(self):
        return "(" + " + ".join(map(repr, self.terms)) + ")"


class Mul(Expr):
    def __init__(self, factors):
        flat = []
        for f in factors:
            flat.extend(f.factors if isinstance(f, Mul) else (f,))
        self.factors = tuple(flat)

    def children(self):
        return self.factors

    def evaluate(self, env):
        prod = 1.0
        for f in self.factors:
            prod = prod * f.evaluate(env)
        return prod

    def subs(self, mapping):
        return Mul(tuple(f.subs(mapping) for f in self.factors))

    def __repr__(self):
        return "*".join(map(repr, self.factors))


class Pow(Expr):
    def __init__(self, base, n):
        self.base = base
        self.n = int(n)

    def children(self):
        return (self.base,)

    def evaluate(self, env):
        return self.base.evaluate(env) ** self.n

    def subs(self, mapping):
        return Pow(self.base.subs(mapping), self.n)

    def __repr__(self):
        return f"{self.base!r}**{self.n}"


class Div(Expr):
    def __init__(self, num, den):
        self.num = num
        self.den = den

    def children(self):
        return (self.num, self.den)

    def evaluate(self, env):
        with np.errstate(divide="ignore", invalid="ignore"):
            return self.num.evaluate(env) / self.den.evaluate(env)

    def subs(self, mapping):
        return Div(self.num.subs(mapping), self.den.subs(mapping))

    def __repr__(self):
        return f"({self.num!r})/({self.den!r})"


# --------------------------------------------------------------------------
# static analysis


def x_free(expr):
    return all(not f.lin.has_x for f in expr.functions())


def monomial_degrees(expr):
    """Set of total sn/cn/dn degrees (in x-dependent atoms) over the monomials.

    Returns None when the tree is not polynomial in x-dependent atoms.
    """
    if x_free(expr):
        return {0}
    if isinstance(expr, Fn):
        if expr.name in PRIMARY:
            return {1}
        if expr.name in ("Z", "am"):
            return {0}
        return None
    if isinstance(expr, Add):
        out = set()
        for t in expr.terms:
            d = monomial_degrees(t)
            if d is None:
                return None
            out |= d
        return out
    if isinstance(expr, Mul):
        acc = {0}
        for f in expr.factors:
            d = monomial_degrees(f)
            if d is None:
                return None
            acc = {u + v for u in acc for v in d}
        return acc
    if isinstance(expr, Pow):
        d = monomial_degrees(expr.base)
        if d is None:
            return None
        acc = {0}
        for _ in range(expr.n):
            acc = {u + v for u in acc for v in d}
        return acc
    if isinstance(expr, Div) and x_free(expr.den):
        return monomial_degrees(expr.num)
    return None


def expand(expr):
    """Distribute products over sums; returns a list of factor tuples."""
    if isinstance(expr, Add):
        return [t for term in expr.terms for t in expand(term)]
    if isinstance(expr, Mul):
        out = [()]
        for f in expr.factors:
            out = [a + b for a in out for b in expand(f)]
        return out
    if isinstance(expr, Pow) and isinstance(expr.base, (Add, Mul)):
        out = [()]
        for _ in range(expr.n):
            out = [a + b for a in out for b in expand(expr.base)]
        return out
    if isinstance(expr, Div):
        if not x_free(expr.den):
            raise ValueError("x-dependent denominator")
        return [t + (Div(Const(Fraction(1)), expr.den),) for t in expand(expr.num)]
    return [(expr,)]


def half_period_signs(expr):
    """Signs picked up by each monomial under x -> x + 2K (None if not (anti)periodic)."""
    if isinstance(expr, (Const, Param)):
        return {1}
    if isinstance(expr, Fn):
        c = expr.lin.coeff("x")
        if c == 0:
            return {1}
        if expr.name == "am":
            return None
        return {_HALF_PERIOD_SIGN[expr.name] ** (c % 2)}
    if isinstance(expr, Add):
        out = set()
        for t in expr.terms:
            s = half_period_signs(t)
            if s is None:
                return None
            out |= s
        return out
    if isinstance(expr, (Mul, Div)):
        parts = expr.factors if isinstance(expr, Mul) else (expr.num, expr.den)
        acc = {1}
        for f in parts:
            s = half_period_signs(f)
            if s is None:
                return None
            acc = {u * v for u in acc for v in s}
        return acc
    if isinstance(expr, Pow):
        s = half_period_signs(expr.base)
        if s is None:
            return None
        return {v ** expr.n for v in s} if len(s) == 1 else ({1, -1} if expr.n else {1})
    raise TypeError(type(expr))


class Constraint:
    """Argument ``lin`` must stay away from offset*K modulo 2K."""

    __slots__ = ("lin", "offset", "func")

    def __init__(self, lin, offset, func):
        self.lin = lin
        self.offset = offset
        self.func = func

    def distance(self, env):
        """Distance to the nearest singular point, in units of K."""
        val = np.asarray(self.lin.evaluate(env), dtype=np.float64)
        u = val / env.K - self.offset
        return np.abs(u - 2.0 * np.rint(u / 2.0))

    def describe(self):
        where = "0" if self.offset == 0 else "K"
        return f"{self.func}({self.lin!r}): argument must avoid {where} mod 2K"

    def key(self):
        return (self.lin.key(), self.offset)


def singular_constraints(*exprs):
    seen = {}
    for e in exprs:
        for f in e.functions():
            if f.name in _SINGULAR_AT:
                c = Constraint(f.lin, _SINGULAR_AT[f.name], f.name)
                if not f.lin.coeffs and not f.lin.kmul:
                    continue
                seen.setdefault(c.key(), c)
    return [seen[k] for k in sorted(seen, key=repr)]


# --------------------------------------------------------------------------
# building trees from text

def Sum(body, lo, hi):
    """Sum of ``body(k)`` for k = lo..hi (empty sums give 0)."""
    terms = [_as_expr(body(k)) for k in range(lo, hi + 1)]
    if not terms:
        return Const(Fraction(0))
    return Add(tuple(terms)) if len(terms) > 1 else terms[0]


def _namespace(extra=None):
    ns = {name: (lambda lin, _n=name: Fn(_n, lin)) for name in FUNCS}
    ns.update({s: Lin(s) for s in ("x", "a", "a1", "a2", "t")})
    ns.update({p: Param(p) for p in ("m", "K", "E", "Kp", "pi")})
    ns["Kq"] = Lin({}, 1)  # quarter period as an argument offset
    ns["Sum"] = Sum
    ns["F"] = Fraction
    if extra:
        ns.update(extra)
    return ns


def parse(text, **bindings):
    """Build an expression tree from a Python-syntax string."""
    ns = _namespace(bindings)
    ns["__builtins__"] = {}
    out = eval(compile(text, "<identity>", "eval"), ns)
    return _as_expr(out)


def perturb(expr, eps):
    """Scale the first additive term of ``expr`` by (1 + eps)."""
    if isinstance(expr, Add):
        first, rest = expr.terms[0], expr.terms[1:]
        return Add((Mul((Const(1.0 + eps), first)),) + rest)
    return Mul((Const(1.0 + eps), expr))
