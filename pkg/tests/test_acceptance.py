"""Acceptance criteria: one PASS/FAIL line per criterion, tolerances pinned below."""

import cmath
import math
import time

import numpy as np

from jacobi_local.catalog import ConstraintViolation, catalog_ids
from jacobi_local.cli import main
from jacobi_local.core import complete_integrals, ellipj, ellipk, jacobi_zeta
from jacobi_local.cyclic import (CyclicSpec, appendixF_entry, appendixF_ids, appendixF_spec,
                                 chain_weighted, trig_limits, verify_appendixF, weighted_sum)
from jacobi_local.discretizer import continuum_order, run
from jacobi_local.integrals import (DEFINITE_IDS, RECURSIVE_IDS, definite_check,
                                    definite_formula, definite_value, derivative_check,
                                    indefinite_eval, indefinite_quadrature)
from jacobi_local.master import ProductSpec, laurent_profile, reconstruct, typeII_definite_integral
from jacobi_local.quadrature import quad_oracle
from jacobi_local.verifier import verify_all

# pinned tolerances
TOL_INVARIANT = 1e-12
TOL_ADDITION = 1e-11
TIME_CORE = 5.0
TOL_VERIFY = 1e-8
TOL_WAIVER = 1e-6
TIME_VERIFY = 60.0
TOL_WEIGHTED = 1e-9
TOL_F = 1e-9
TOL_F_ZERO = 1e-10
TOL_ALPHA = 1e-8
TOL_RECON = 1e-7
TOL_RESIDUE = 1e-8
TOL_TYPE2_INT = 1e-8
TOL_DEFINITE = 1e-9
TOL_DERIV = 1e-6
TOL_CUMULATIVE = 1e-8
TIME_INTEGRALS = 120.0
TOL_CHAIN = 1e-9
TOL_SCHEME = 1e-8
NAIVE_RATIO = 1e3
SLOPE, SLOPE_TOL = 2.0, 0.1
TOL_TRIG = 1e-13

F_ZERO_RHS = {f"F.e{k}" for k in (5, 34, 35, 36, 37, 38, 52, 53, 54, 55, 56)}


def _aux(a, m):
    s, c, d = ellipj(a, m)
    return dict(dn=d, cs=c / s, ds=d / s, ns=1 / s, Z=jacobi_zeta(a, m))


def test_c01_core_invariants(acceptance_line):
    t0 = time.perf_counter()
    rng = np.random.default_rng(1)
    n = 10_000
    x = rng.uniform(-50, 50, n)
    m = rng.uniform(0, 1, n)
    s, c, d = ellipj(x, m)
    inv = max(np.max(np.abs(s * s + c * c - 1)), np.max(np.abs(d * d + m * s * s - 1)))
    u, v = rng.uniform(-5, 5, n), rng.uniform(-5, 5, n)
    su, cu, du = ellipj(u, m)
    sv, cv, dv = ellipj(v, m)
    sw, cw, dw = ellipj(u + v, m)
    den = 1 - m * su ** 2 * sv ** 2
    add = max(
        np.max(np.abs(sw - (su * cv * dv + sv * cu * du) / den)),
        np.max(np.abs(cw - (cu * cv - su * sv * du * dv) / den)),
        np.max(np.abs(dw - (du * dv - m * su * sv * cu * cv) / den)),
        np.max(np.abs(jacobi_zeta(u + v, m) - jacobi_zeta(u, m) - jacobi_zeta(v, m)
                      + m * su * sv * sw)),
    )
    dt = time.perf_counter() - t0
    ok = inv <= TOL_INVARIANT and add <= TOL_ADDITION and dt < TIME_CORE
    assert acceptance_line(1, "core invariants", ok,
                           f"invariants {inv:.1e} <= {TOL_INVARIANT:g}, addition {add:.1e} <= "
                           f"{TOL_ADDITION:g}, {dt:.2f} s < {TIME_CORE:g} s")


def test_c02_full_catalog(acceptance_line):
    t0 = time.perf_counter()
    reps = verify_all(samples=200, tol=TOL_VERIFY, seed=0, family_n=(1, 2, 3, 5, 8))
    dt = time.perf_counter() - t0
    ids = {r.id for r in reps}
    expected = set(catalog_ids(family_n=(1, 2, 3, 5, 8)))
    failed = [r.id for r in reps if not r.passed]
    waived = {r.id for r in reps if r.waiver}
    bad_waiver = [r.id for r in reps if r.waiver and (not r.id.endswith("[8]") or r.tol > TOL_WAIVER)]
    unwaived_tol = [r.id for r in reps if not r.waiver and r.tol != TOL_VERIFY]
    ok = (ids == expected and len(ids) == 219 and not failed and not bad_waiver
          and not unwaived_tol and dt < TIME_VERIFY)
    assert acceptance_line(2, "catalog verification", ok,
                           f"{len(reps) - len(failed)}/{len(reps)} pass at {TOL_VERIFY:g} "
                           f"({len(waived)} n=8 waivers at {TOL_WAIVER:g}), {dt:.2f} s < "
                           f"{TIME_VERIFY:g} s"), failed


def test_c03_weighted_cyclic(acceptance_line):
    p, r, x, m = 12, 5, 0.4, 0.5
    worst = 0.0
    for s in (1, 2, 3, 4, 6):
        sp = CyclicSpec(p, r, s)
        c = _aux(sp.shift(m), m)
        w = cmath.exp(2j * math.pi / s)
        delta = 1.0 if s == 1 else 0.0
        lhs = weighted_sum("dn(x)*dn(x + a)", sp, x, m)
        rhs = p * (c["dn"] - c["cs"] * c["Z"]) * delta - (1 - 1 / w) * c["cs"] * weighted_sum(
            "Z(x)", sp, x, m)
        worst = max(worst, abs(lhs - rhs), chain_weighted("A.dd", sp, x, m).residual)
    sp = CyclicSpec(p, r, 1)
    c = _aux(sp.shift(m), m)
    unweighted = p * (c["dn"] - c["cs"] * c["Z"])
    s1 = abs(weighted_sum("dn(x)*dn(x + a)", sp, x, m) - unweighted)
    ok = worst <= TOL_WEIGHTED and s1 <= TOL_WEIGHTED
    assert acceptance_line(3, "weighted cyclic p=12 r=5", ok,
                           f"max |lhs - rhs| {worst:.1e}, s=1 vs unweighted {s1:.1e} <= "
                           f"{TOL_WEIGHTED:g}")


def _f_spec(fid):
    cls, _, _, two = appendixF_entry(fid)
    p, r, r2 = (8, 3, 5) if cls in ("F5", "F6") else (9, 2, 7)
    return appendixF_spec(fid, p, r, r2=r2 if two else None)


def test_c04_f_entries(acceptance_line):
    worst, worst_zero, failed = 0.0, 0.0, []
    for fid in appendixF_ids():
        for x, m in ((0.3, 0.6), (1.1, 0.25)):
            res = verify_appendixF(fid, _f_spec(fid), x, m, tol=TOL_F)
            worst = max(worst, res.residual)
            if not res.passed:
                failed.append(fid)
            if fid in F_ZERO_RHS:
                worst_zero = max(worst_zero, abs(res.lhs_sum))
    ok = not failed and worst <= TOL_F and worst_zero <= TOL_F_ZERO
    assert acceptance_line(4, "F entries", ok,
                           f"{len(appendixF_ids())} entries, max residual {worst:.1e} <= "
                           f"{TOL_F:g}, zero-rhs |sum| {worst_zero:.1e} <= {TOL_F_ZERO:g}"), failed


def test_c05_master_engine(acceptance_line):
    m, a = 0.5, 0.8
    K = ellipk(m)
    c = _aux(a, m)
    f = ProductSpec.parse("dn^2 * dn(+a) + dn^2 * dn(-a)", m, a=a)
    alphas = {round(p.anchor, 9): p.alphas[0] for p in laurent_profile(f, m).poles}
    want = {0.0: -2j * c["ds"] * c["ns"], round(a, 9): 1j * c["cs"] ** 2,
            round(2 * K - a, 9): 1j * c["cs"] ** 2}
    alpha_err = max(abs(alphas[k] - v) for k, v in want.items())
    xs = np.linspace(0.05, 4.0, 200)
    d = lambda u: ellipj(u, m)[2]
    closed = 2 * c["ds"] * c["ns"] * d(xs) - c["cs"] ** 2 * (d(xs + a) + d(xs - a))
    recon_err = float(np.max(np.abs(reconstruct(f, m).evaluate(xs) - closed)))
    residues = 0.0
    for text in ("dn^2", "dn^2*dn(+a)^2", "dn^2*dn(+a)*dn(-a)", "m*sn*cn*sn(+a)*cn(+a)",
                 "sn^2*cn(+a)^2"):
        residues = max(residues, abs(reconstruct(ProductSpec.parse(text, m, a=a), m).residue_sum))
    g = ProductSpec.parse("dn^2*dn(+a)^2", m, a=a)
    integral = 2 * K * typeII_definite_integral(g, m)
    quad = quad_oracle(lambda x: g.evaluate_real(x, m), 0.0, 2 * K).value
    int_err = max(abs(integral - definite_value("5.2", m, [a])), abs(integral - quad))
    ok = (alpha_err <= TOL_ALPHA and recon_err <= TOL_RECON and residues <= TOL_RESIDUE
          and int_err <= TOL_TYPE2_INT)
    assert acceptance_line(5, "master engine", ok,
                           f"alpha {alpha_err:.1e} <= {TOL_ALPHA:g}, reconstruction {recon_err:.1e}"
                           f" <= {TOL_RECON:g}, residue sums {residues:.1e} <= {TOL_RESIDUE:g}, "
                           f"integral {int_err:.1e} <= {TOL_TYPE2_INT:g}")


def _draw(fid, rng):
    form = definite_formula(fid)
    while True:
        m = rng.uniform(0.05, 0.95)
        sh = list(rng.uniform(-2, 2, form.arity) * ellipk(m))
        try:
            form.check_constraints(m, sh)
        except ConstraintViolation:
            continue
        return m, sh


def test_c06_integral_suite(acceptance_line):
    t0 = time.perf_counter()
    rng = np.random.default_rng(6)
    worst_def, failed = 0.0, []
    for fid in DEFINITE_IDS:
        for _ in range(20):
            m, sh = _draw(fid, rng)
            rep = definite_check(fid, m, sh, tol=TOL_DEFINITE)
            worst_def = max(worst_def, rep["abs_diff"])
            if rep["abs_diff"] > TOL_DEFINITE:
                failed.append(fid)
    worst_deriv = worst_cum = 0.0
    for fid in RECURSIVE_IDS:
        for n in range(1, 7):
            for m, a, x in ((0.3, 1.0, 0.9), (0.7, 0.55, 1.6)):
                worst_deriv = max(worst_deriv, derivative_check(fid, n, m, a, x))
                worst_cum = max(worst_cum, abs(indefinite_eval(fid, n, m, a, x)
                                               - indefinite_quadrature(fid, n, m, a, x).value))
    dt = time.perf_counter() - t0
    n_g = sum(1 for f in DEFINITE_IDS if f.startswith("G."))
    ok = (n_g == 12 and not failed and worst_deriv <= TOL_DERIV and worst_cum <= TOL_CUMULATIVE
          and dt < TIME_INTEGRALS)
    assert acceptance_line(6, "integral suite", ok,
                           f"{len(DEFINITE_IDS)} definite x 20 draws max {worst_def:.1e} <= "
                           f"{TOL_DEFINITE:g}; {len(RECURSIVE_IDS)} recursions n=1..6 derivative "
                           f"{worst_deriv:.1e} <= {TOL_DERIV:g}, cumulative {worst_cum:.1e} <= "
                           f"{TOL_CUMULATIVE:g}; {dt:.1f} s < {TIME_INTEGRALS:g} s"), sorted(set(failed))


def test_c07_cyclic_integral_consistency(acceptance_line):
    p, r = 9, 2
    worst = 0.0
    for x, m in ((0.4, 0.5), (1.3, 0.85)):
        sp = CyclicSpec(p, r, 1)
        c = _aux(sp.shift(m), m)
        lhs = weighted_sum("dn(x)**2*dn(x + a)**2", sp, x, m)
        closed = (-2 * c["cs"] ** 2 * weighted_sum("dn(x)**2", sp, x, m)
                  + p * (c["cs"] ** 2 + c["ds"] ** 2 - 2 * c["cs"] * c["ds"] * c["ns"] * c["Z"]))
        # the same constant read from the definite integral of dn^2 dn^2(+a)
        ci = complete_integrals(m)
        via_int = (-2 * c["cs"] ** 2 * weighted_sum("dn(x)**2", sp, x, m)
                   + p / (2 * ci.K) * (definite_value("5.2", m, [sp.shift(m)])
                                       + 4 * ci.E * c["cs"] ** 2))
        worst = max(worst, abs(lhs - closed), abs(lhs - via_int),
                    chain_weighted("C.c15", sp, x, m).residual)
    ok = worst <= TOL_CHAIN
    assert acceptance_line(7, "cyclic-integral consistency p=9 r=2", ok,
                           f"max |direct - closed| {worst:.1e} <= {TOL_CHAIN:g}")


def test_c08_discretizer(acceptance_line):
    exact = run("exact", 0.8, 0.1, 10_000)
    naive = run("naive", 0.8, 0.1, 10_000)
    slope = continuum_order("3.1", np.geomspace(2e-3, 5e-2, 8))
    ratio = naive.max_abs_error / max(exact.max_abs_error, 1e-300)
    ok = (exact.max_abs_error <= TOL_SCHEME and ratio >= NAIVE_RATIO
          and abs(slope - SLOPE) <= SLOPE_TOL)
    assert acceptance_line(8, "discretizer", ok,
                           f"exact {exact.max_abs_error:.1e} <= {TOL_SCHEME:g}, naive/exact "
                           f"{ratio:.1e} >= {NAIVE_RATIO:g}, slope {slope:.3f} = {SLOPE:g} +- "
                           f"{SLOPE_TOL:g}")


def test_c09_trig_limits(acceptance_line):
    worst = 0.0
    for p in (3, 5, 7, 9):
        lhs, rhs = trig_limits(p)["cot-product"]
        worst = max(worst, abs(lhs - rhs))
    for p in range(3, 13):
        lhs, rhs = trig_limits(p)["cot-square-sum"]
        worst = max(worst, abs(lhs - rhs))
    p3 = trig_limits(3)["cot-product"][0] == 1 / 3
    p4 = trig_limits(4)["cot-square-sum"][0] == 2.0
    for p, r, l in ((5, 1, 3), (7, 2, 3)):
        lhs, rhs = trig_limits(p, r, l)["cot-bracket"]
        worst = max(worst, abs(lhs - rhs))
    ok = worst <= TOL_TRIG and p3 and p4
    assert acceptance_line(9, "trigonometric limits", ok,
                           f"max |lhs - rhs| {worst:.1e} <= {TOL_TRIG:g}, p=3 value 1/3 {p3}, "
                           f"p=4 value 2 {p4}")


def _suite_outputs(tmp):
    runs = [
        ["verify", "--seed", "42"],
        ["cyclic", "--identity", "A.dd", "--p", "12", "--r", "5", "--s", "3"],
        ["master", "--preset", "eq3.1", "--a", "0.8", "--m", "0.5"],
        ["integrate", "--id", "G.g7", "--m", "0.4", "--a", "0.7", "--a2", "1.5", "--a3", "2.2"],
        ["simulate", "--steps", "2000"],
    ]
    out = []
    for k, argv in enumerate(runs):
        path = tmp / f"{k}.json"
        assert main(argv + ["--out", str(path)]) == 0, argv
        out.append(path.read_bytes())
    return out


def test_c10_reproducibility(acceptance_line, tmp_path, capsys):
    (tmp_path / "a").mkdir()
    (tmp_path / "b").mkdir()
    first = _suite_outputs(tmp_path / "a")
    second = _suite_outputs(tmp_path / "b")
    capsys.readouterr()
    same = sum(x == y for x, y in zip(first, second))
    ok = same == len(first)
    assert acceptance_line(10, "reproducibility seed 42", ok,
                           f"{same}/{len(first)} JSON reports byte-identical across two runs")
