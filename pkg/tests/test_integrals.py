import math

import numpy as np
import pytest
from scipy import integrate

from jacobi_local.catalog import ConstraintViolation
from jacobi_local.core import complete_integrals, ellipj, ellipk, jacobi_amplitude, jacobi_zeta
from jacobi_local.integrals import (DEFINITE_IDS, H_ERRATA, INDEFINITE_IDS, MAX_N, RECURSIVE_IDS,
                                    PiSingularity, definite_check, definite_formula,
                                    definite_value, derivative_check, indefinite_eval,
                                    indefinite_quadrature, power_integral, printed_indefinite)
from jacobi_local.quadrature import QuadratureError, cumulative, quad_oracle

H_POINTS = ((0.3, 1.0, 0.9), (0.7, 0.55, 1.6))  # (m, a, x)


def test_quadrature_examples():
    m = 0.5
    ci = complete_integrals(m)
    dn2 = quad_oracle(lambda x: ellipj(x, np.full_like(x, m))[2] ** 2, 0, 2 * ci.K)
    assert abs(dn2.value - 2 * ci.E) <= 1e-12
    for mm in (0.1, 0.5, 0.9):
        K = ellipk(mm)
        r = quad_oracle(lambda x: ellipj(x, np.full_like(x, mm))[2], 0, 2 * K)
        assert abs(r.value - math.pi) <= 1e-12
    assert quad_oracle(np.exp, 1.0, 1.0).value == 0.0


def test_quadrature_against_scipy_and_endpoints():
    r = quad_oracle(lambda x: 1 / np.sqrt(x), 0.0, 1.0)
    assert abs(r.value - 2.0) <= 1e-10
    r = quad_oracle(np.log, 0.0, 1.0)
    assert abs(r.value + 1.0) <= 1e-10
    f = lambda x: np.exp(-x) * np.cos(3 * x)
    ref = integrate.quad(f, 0.2, 2.5, epsabs=1e-14)[0]
    assert abs(quad_oracle(f, 0.2, 2.5).value - ref) <= 1e-13
    assert abs(quad_oracle(f, 2.5, 0.2).value + ref) <= 1e-13


def test_quadrature_cumulative():
    xs = np.array([0.5, 1.0, 2.0])
    vals = cumulative(np.cos, xs)
    assert np.max(np.abs(vals - np.sin(xs))) <= 1e-13


def test_quadrature_nonconvergence():
    with pytest.raises(QuadratureError):
        quad_oracle(lambda x: np.sin(1 / (x + 1e-300)) / (x + 1e-300), 0.0, 1.0, tol=1e-15)


def _draw_shifts(fid, rng):
    form = definite_formula(fid)
    while True:
        m = rng.uniform(0.05, 0.95)
        K = ellipk(m)
        sh = list(rng.uniform(-2, 2, form.arity) * K)
        try:
            form.check_constraints(m, sh)
        except ConstraintViolation:
            continue
        return m, sh


@pytest.mark.parametrize("fid", DEFINITE_IDS)
def test_definite_matches_quadrature(fid):
    rng = np.random.default_rng(DEFINITE_IDS.index(fid))
    for _ in range(20):
        m, sh = _draw_shifts(fid, rng)
        rep = definite_check(fid, m, sh, tol=1e-9)
        assert rep["pass"], (fid, m, sh, rep["abs_diff"])
        assert rep["abs_diff"] <= max(1e-9, 10 * rep["error_estimate"])


def test_5_2_example():
    m, a = 0.5, 0.9
    ci = complete_integrals(m)
    s, c, d = ellipj(a, m)
    cs, ds, ns = c / s, d / s, 1 / s
    closed = -4 * ci.E * cs ** 2 + 2 * ci.K * (cs ** 2 + ds ** 2 - 2 * cs * ds * ns * jacobi_zeta(a, m))
    assert abs(definite_value("5.2", m, [a]) - closed) <= 1e-14
    q = quad_oracle(lambda x: ellipj(x, np.full_like(x, m))[2] ** 2
                    * ellipj(x + a, np.full_like(x, m))[2] ** 2, 0, 2 * ci.K).value
    assert abs(closed - q) <= 1e-10


def test_g7_example():
    rep = definite_check("G.g7", 0.4, [0.7, 1.5, 2.2])
    assert rep["abs_diff"] <= 1e-9


def test_g1_trig_degeneration():
    rep = definite_check("G.g1", 1e-6, [0.8])
    assert rep["abs_diff"] <= 1e-10
    # both sides tend to pi with slope -3 pi / 4 in m
    for m in (1e-6, 1e-9):
        assert abs(definite_value("G.g1", m, [0.8]) - math.pi * (1 - 0.75 * m)) <= 10 * m * m + 1e-14
    assert abs(definite_value("G.g1", 1e-12, [0.8]) - math.pi) <= 1e-10


def test_5_6_cyclic_reduction():
    m, p = 0.45, 7
    K = ellipk(m)
    r, s, t = 1, 3, 4
    val = definite_value("5.6", m, [2 * r * K / p, 2 * s * K / p, 2 * t * K / p])
    for x in (0.1, 0.77):
        d = ellipj(x + 2 * K * np.arange(p) / p, np.full(p, m))[2]
        j = np.arange(p)
        direct = np.mean(d * d[(j + r) % p] * d[(j + s) % p] * d[(j + t) % p])
        assert abs(val - direct) <= 1e-9


def test_g7_shift_symmetry():
    m, a, a1, a2 = 0.6, 0.5, 1.3, 2.9
    v = definite_value("G.g7", m, [a, a1, a2])
    # x -> x - a maps the shift set {0, a, a1, a2} to {-a, 0, a1 - a, a2 - a}
    assert abs(definite_value("G.g7", m, [-a, a1 - a, a2 - a]) - v) <= 1e-10
    assert abs(definite_value("G.g7", m, [a1, a, a2]) - v) <= 1e-10


def test_definite_constraint_error():
    with pytest.raises(ConstraintViolation):
        definite_value("G.g7", 0.5, [0.7, 0.7, 1.2])
    with pytest.raises(ConstraintViolation):
        definite_value("5.2", 0.5, [0.0])


@pytest.mark.parametrize("kind", ["dn", "sn", "cn"])
def test_power_integrals(kind):
    m = 0.6
    for k in (0, 1, 2, 3, 6, 11):
        for x in (0.4, 2.3):
            f = lambda t: ellipj(t, np.full_like(t, m))[("sn", "cn", "dn").index(kind)] ** k
            ref = quad_oracle(f, 0, x).value
            assert abs(power_integral(kind, k, x, m) - ref) <= 1e-11


@pytest.mark.parametrize("fid", [i for i in INDEFINITE_IDS if i not in RECURSIVE_IDS])
def test_closed_indefinite(fid):
    for m, a, x in H_POINTS:
        assert abs(indefinite_eval(fid, None, m, a, x)
                   - indefinite_quadrature(fid, None, m, a, x).value) <= 1e-9
        assert derivative_check(fid, None, m, a, x) <= 1e-6


def test_indefinite_examples():
    m, a, x = 0.5, 0.8, 1.2
    s, c, d = ellipj(a, m)
    cs, ds, ns = c / s, d / s, 1 / s
    am = lambda u: jacobi_amplitude(u, m)
    closed = lambda u: -cs ** 2 * am(u + a) + ds * ns * am(u) + cs * ellipj(u, m)[2]
    ref = closed(x) - closed(0.0)
    assert abs(indefinite_eval("5.10", None, m, a, x) - ref) <= 1e-12
    assert abs(ref - indefinite_quadrature("5.10", None, m, a, x).value) <= 1e-9
    q = quad_oracle(lambda t: ellipj(t, np.full_like(t, 0.3))[2] ** 5
                    * ellipj(t + 1.0, np.full_like(t, 0.3))[2], 0, 0.9).value
    assert abs(indefinite_eval("H.h7", 2, 0.3, 1.0, 0.9) - q) <= 1e-8
    assert derivative_check("5.11", None, 0.6, 0.7, 0.5) <= 1e-6
    assert derivative_check("H.h10", 1, 0.4, 1.1, 1.4) <= 1e-6


def test_5_16_log_form():
    m, a, x, h = 0.5, 0.9, 0.8, 1e-5
    s, c, _ = ellipj(a, m)
    g = lambda u: (c / s) * math.log(1 - m * s ** 2 * ellipj(u, m)[0] ** 2)
    deriv = (g(x + h) - g(x - h)) / (2 * h)
    d = lambda u: ellipj(u, m)[2]
    assert abs(deriv - d(x) * (d(x + a) - d(x - a))) <= 1e-7
    assert derivative_check("5.16", None, m, a, x) <= 1e-7


@pytest.mark.parametrize("fid", INDEFINITE_IDS)
def test_zero_at_origin(fid):
    n = 2 if fid in RECURSIVE_IDS else None
    assert indefinite_eval(fid, n, 0.4, 0.7, 0.0) == 0.0


@pytest.mark.parametrize("fid", RECURSIVE_IDS)
@pytest.mark.parametrize("n", range(1, 7))
def test_recursions(fid, n):
    for m, a, x in H_POINTS:
        val = indefinite_eval(fid, n, m, a, x)
        assert abs(val - indefinite_quadrature(fid, n, m, a, x).value) <= 1e-8
        assert derivative_check(fid, n, m, a, x) <= 1e-6


@pytest.mark.parametrize("fid", RECURSIVE_IDS)
def test_recursion_high_n(fid):
    m, a, x = 0.5, 0.8, 0.7
    val = indefinite_eval(fid, MAX_N, m, a, x)
    ref = indefinite_quadrature(fid, MAX_N, m, a, x).value
    assert abs(val - ref) <= 1e-8 * max(1, abs(ref))


def test_recursion_vectorized():
    xs = np.array([0.3, 0.9, 1.7])
    vals = indefinite_eval("H.h1", 3, 0.4, 0.7, xs)
    for x, v in zip(xs, vals):
        assert v == pytest.approx(indefinite_eval("H.h1", 3, 0.4, 0.7, float(x)), abs=1e-14)


def test_indefinite_argument_errors():
    with pytest.raises(ValueError):
        indefinite_eval("H.h1", 0, 0.4, 0.7, 1.0)
    with pytest.raises(ValueError):
        indefinite_eval("H.h1", MAX_N + 1, 0.4, 0.7, 1.0)
    with pytest.raises(KeyError):
        indefinite_eval("H.h99", 1, 0.4, 0.7, 1.0)
    with pytest.raises(ConstraintViolation):
        indefinite_eval("5.10", None, 0.4, 0.0, 1.0)


def test_pi_singularity_reported():
    # near m = 1, 1 - m sn^2(a) sn^2(x) at x = K is dn^2(a), which underflows
    m = 1 - 1e-14
    K = ellipk(m)
    for fid, n in (("5.17", None), ("H.h10", 1)):
        with pytest.raises(PiSingularity):
            indefinite_eval(fid, n, m, 0.9 * K, K)


@pytest.mark.parametrize("fid", sorted(H_ERRATA))
def test_h_errata_fail_as_printed(fid):
    m, a, x, n = 0.3, 1.0, 0.9, 2
    ref = indefinite_quadrature(fid, n, m, a, x).value
    if fid == "H.h7":
        ref = m * ref
    assert abs(printed_indefinite(fid, n, m, a, x) - ref) > 1e-3
    assert abs(indefinite_eval(fid, n, m, a, x) - indefinite_quadrature(fid, n, m, a, x).value) <= 1e-8
