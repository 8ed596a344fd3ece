import math

import numpy as np
import pytest

from jacobi_local.catalog import catalog_ids, get_identity
from jacobi_local.core import complete_integrals, ellipj, ellipk
from jacobi_local.integrals import definite_value
from jacobi_local.master import (ClassificationError, Factor, ProductSpec, classify,
                                 laurent_coefficients, laurent_profile, locate_poles,
                                 reconstruct, typeII_definite_integral)
from jacobi_local.quadrature import quad_oracle

M, A = 0.5, 0.8


def _aux(a, m):
    s, c, d = ellipj(a, m)
    return c / s, d / s, 1 / s


@pytest.fixture(scope="module")
def f31():
    return ProductSpec.parse("dn^2 * dn(+a) + dn^2 * dn(-a)", M, a=A)


def _xs():
    return np.linspace(0.05, 4.0, 50)


@pytest.mark.parametrize("text,pq", [("dn", (1, 0)), ("dn^2", (0, 0)), ("sn", (0, 1)),
                                     ("cn", (1, 1))])
def test_archetype_classes(text, pq):
    c = classify(ProductSpec.parse(text, M), M)
    assert (c.P, c.Q) == pq


def test_shifted_products_classes(f31):
    # the sum in 3.1 is type I; the four-dn product is type II
    assert (classify(f31, M).P, classify(f31, M).Q) == (1, 0)
    prod = ProductSpec.parse("dn^2 * dn(+a) * dn(-a)", M, a=A)
    assert (classify(prod, M).P, classify(prod, M).Q) == (0, 0)
    assert prod.static_parity() == {(0, 0)}


def test_mixed_classes_rejected():
    with pytest.raises(ClassificationError):
        classify(ProductSpec.parse("dn + sn", M), M)


def test_factor_validation():
    with pytest.raises(ValueError):
        Factor("cs", 0.0)
    with pytest.raises(ValueError):
        Factor("dn", 0.0, 0)


def test_poles_of_3_1(f31):
    K, Kp = ellipk(M), complete_integrals(M).Kprime
    poles = locate_poles(f31, M)
    centers = sorted(round(c.real, 9) for c, _ in poles)
    assert centers == sorted(round(v, 9) for v in (0.0, A, 2 * K - A))
    assert all(abs(c.imag - Kp) <= 1e-12 and o == 1 for c, o in poles)


def test_alphas_of_3_1(f31):
    cs, ds, ns = _aux(A, M)
    prof = laurent_profile(f31, M)
    by_anchor = {round(p.anchor, 9): p.alphas[0] for p in prof.poles}
    K = ellipk(M)
    assert abs(by_anchor[0.0] - (-2j * ds * ns)) <= 1e-8
    assert abs(by_anchor[round(2 * K - A, 9)] - 1j * cs ** 2) <= 1e-8
    assert abs(by_anchor[round(A, 9)] - 1j * cs ** 2) <= 1e-8


def test_archetype_poles():
    Kp = complete_integrals(M).Kprime
    assert locate_poles(ProductSpec.parse("dn", M), M) == [(1j * Kp, 1)]
    prof = laurent_profile(ProductSpec.parse("dn^2", M), M)
    (p,) = prof.poles
    assert p.order == 2 and abs(p.alphas[0]) <= 1e-12 and abs(p.alphas[1] + 1) <= 1e-12
    sn = laurent_coefficients(ProductSpec.parse("sn", M), M, 1j * Kp, 1)
    assert abs(sn[0] - 1 / math.sqrt(M)) <= 1e-12


def test_contour_invariance(f31):
    K, Kp = ellipk(M), complete_integrals(M).Kprime
    ref = [p.alphas for p in laurent_profile(f31, M).poles]
    for rad in (0.05, 0.1, 0.15):
        for n in (64, 128):
            got = [p.alphas for p in laurent_profile(f31, M, rad * min(K, Kp), n).poles]
            assert np.max(np.abs(np.array(got) - np.array(ref))) <= 1e-9


def test_infeasible_radius(f31):
    with pytest.raises(ValueError):
        laurent_profile(f31, M, radius=0.6)


def test_reconstruction_reproduces_3_1(f31):
    cs, ds, ns = _aux(A, M)
    rec = reconstruct(f31, M)
    xs = _xs()
    d = lambda u: ellipj(u, M)[2]
    closed = 2 * ds * ns * d(xs) - cs ** 2 * (d(xs + A) + d(xs - A))
    assert np.max(np.abs(rec.evaluate(xs) - closed)) <= 1e-8
    assert rec.max_deviation(f31, xs) <= 1e-7
    assert rec.kind == "I" and rec.C == 0.0


def test_half_local_identity():
    cs, ds, ns = _aux(A, M)
    f = ProductSpec.parse("dn^2*dn(-a)", M, a=A)
    rec = reconstruct(f, M)
    xs = _xs()
    s, c, d = ellipj(xs, M)
    closed = ds * ns * d + M * cs * c * s - cs ** 2 * ellipj(xs - A, M)[2]
    assert np.max(np.abs(rec.evaluate(xs) - closed)) <= 1e-8


@pytest.mark.parametrize("text", ["dn", "sn", "cn", "dn^2*dn(-a)", "sn^2*cn(+a)",
                                  "cn^2*sn(+a)*dn(-a)", "dn^3*sn(+a)*cn(+a)"])
def test_liouville_no_constant(text):
    f = ProductSpec.parse(text, M, a=A)
    rec = reconstruct(f, M)
    if rec.kind != "II":
        assert rec.C == 0.0
    assert rec.max_deviation(f, _xs()) <= 1e-7


@pytest.mark.parametrize("text", ["dn^2", "dn^2*dn(+a)^2", "dn^2*dn(+a)*dn(-a)",
                                  "m*sn*cn*sn(+a)*cn(+a)", "sn^2*cn(+a)^2"])
def test_type2_residue_sum_vanishes(text):
    f = ProductSpec.parse(text, M, a=A)
    rec = reconstruct(f, M)
    assert rec.kind == "II"
    assert abs(rec.residue_sum) <= 1e-8
    assert rec.max_deviation(f, _xs()) <= 1e-7


def test_dn2_constants():
    ci = complete_integrals(M)
    rec = reconstruct(ProductSpec.parse("dn^2", M), M)
    assert abs(rec.C) <= 1e-12
    assert abs(rec.C_zeta - ci.E / ci.K) <= 1e-12


def test_type2_integral_against_5_2_and_quadrature():
    m, a = 0.5, 0.9
    K = ellipk(m)
    f = ProductSpec.parse("dn^2*dn(+a)^2", m, a=a)
    mean = typeII_definite_integral(f, m)
    assert abs(2 * K * mean - definite_value("5.2", m, [a])) <= 1e-8
    q = quad_oracle(lambda x: f.evaluate_real(x, m), 0.0, 2 * K).value
    assert abs(2 * K * mean - q) <= 1e-8


def test_type2_integral_examples():
    ci = complete_integrals(0.3)
    assert abs(typeII_definite_integral(ProductSpec.parse("dn^2", 0.3), 0.3) - ci.E / ci.K) <= 1e-12
    g = ProductSpec.parse("m*sn*cn*sn(+a)*cn(+a)", 0.3, a=1.1)
    q = quad_oracle(lambda x: g.evaluate_real(x, 0.3), 0.0, 2 * ci.K).value / (2 * ci.K)
    assert abs(typeII_definite_integral(g, 0.3) - q) <= 1e-8
    with pytest.raises(ValueError):
        typeII_definite_integral(ProductSpec.parse("dn", 0.3), 0.3)


@pytest.mark.parametrize("iid", catalog_ids("B."))
def test_agreement_with_b_entries(iid):
    ident = get_identity(iid)
    shifts = {k: v for k, v in (("a", 0.7), ("a1", 1.9)) if k in ident.shifts}
    m = 0.45
    f = ProductSpec.from_expr(ident.lhs, shifts, m)
    rec = reconstruct(f, m)
    xs = _xs()
    rhs = ident.eval_side("rhs", xs, list(shifts.values()), m)
    assert np.max(np.abs(rec.evaluate(xs) - rhs)) <= 1e-7


def test_to_dict_roundtrip(f31):
    d = reconstruct(f31, M).to_dict()
    assert d["class"] == "I" and len(d["poles"]) == 3 and len(d["terms"]) == 3
