import numpy as np
import pytest

from jacobi_local.core import ellipj, ellipk
from jacobi_local.discretizer import (SchemeError, SchemeState, chained_sum, coefficient_limit,
                                      continuum_order, end_correction_order, initial_state,
                                      naive_order, reference, run, step_back, step_exact,
                                      step_naive, time_reversal_error, truncation_residual)


def test_state_validation():
    with pytest.raises(ValueError):
        SchemeState(1.0, 1.0, 0.0, 0.5)
    with pytest.raises(ValueError):
        SchemeState(1.0, 1.0, 2 * float(ellipk(0.5)), 0.5)


def test_exact_steps_follow_dn():
    st = initial_state(0.8, 0.1)
    assert st.y_prev == 1.0 and st.y_curr == ellipj(0.1, 0.8)[2]
    for _ in range(50):
        st = step_exact(st)
    assert st.n == 51 and abs(st.y_curr - ellipj(5.1, 0.8)[2]) <= 1e-12


def test_exact_m0_fixed_point():
    st = initial_state(0.0, 0.3)
    for _ in range(100):
        st = step_exact(st)
        assert abs(st.y_curr - 1.0) <= 1e-13


def test_exact_from_offset_start():
    rep = run("exact", 0.6, 0.17, 2000, z0=0.7)
    assert rep.max_abs_error <= 1e-9


@pytest.mark.parametrize("m", [0.2, 0.5, 0.8, 0.95])
@pytest.mark.parametrize("delta", [0.05, 0.1, 0.3])
def test_exactness_grid(m, delta):
    assert run("exact", m, delta, 10_000).max_abs_error <= 1e-8


def test_naive_scheme_error():
    exact = run("exact", 0.8, 0.1, 10_000)
    naive = run("naive", 0.8, 0.1, 10_000)
    assert naive.max_abs_error >= 1e-3
    assert naive.max_abs_error >= 1e3 * exact.max_abs_error


def test_naive_second_order():
    assert abs(naive_order(0.8, 0.1, 20.0) - 4.0) <= 0.3


def test_naive_m0_stays_near_one():
    rep = run("naive", 0.0, 0.1, 1000)
    assert rep.max_abs_error <= 0.1 ** 2


def test_naive_step_formula():
    st = SchemeState(0.9, 0.95, 0.1, 0.4)
    nxt = step_naive(st)
    y = 0.95
    assert nxt.y_curr == 2 * y - 0.9 + 0.01 * ((2 - 0.4) * y - 2 * y ** 3)


def test_time_reversal():
    assert time_reversal_error(0.8, 0.1, 2000) <= 1e-8
    st = step_exact(step_exact(initial_state(0.5, 0.2)))
    back = step_back(step_back(st))
    assert abs(back.y_curr - ellipj(0.2, 0.5)[2]) <= 1e-14 and back.n == 1


def test_denominator_guard():
    st = SchemeState(0.0, 0.0, float(ellipk(0.5)), 0.5)  # cs(K) = 0 and y = 0
    with pytest.raises(SchemeError):
        step_exact(st)


def test_reference_reduces_argument():
    n = np.array([0, 10, 10_000])
    ref = reference(n, 0.1, 0.8)
    assert np.max(np.abs(ref - ellipj(n * 0.1, np.full(3, 0.8))[2])) <= 1e-11


def test_continuum_order():
    a_list = np.geomspace(2e-3, 5e-2, 8)
    assert abs(continuum_order("3.1", a_list) - 2.0) <= 0.1
    with pytest.raises(ValueError):
        continuum_order("3.1", [0.5])
    with pytest.raises(ValueError):
        truncation_residual("2.11", 0.01, 0.5)


def test_coefficient_limit():
    m = 0.5
    assert abs(coefficient_limit(1e-3, m) - (1 - m / 2)) <= 1e-6


def test_chained_sum_identity_and_limits():
    r = chained_sum(0.3, 1.7, 256, 0.6)
    assert r["identity_residual"] <= 1e-11
    for key in ("lhs", "bulk", "end"):
        assert abs(r[key] - r[f"{key}_limit"]) <= 20 / 256
    # continuum identity: 2 int dn^3 = (2 - m) int dn + m sn cn |
    assert abs(r["lhs_limit"] - r["bulk_limit"] - r["end_limit"]) <= 1e-10


def test_end_correction_order():
    slope, errs = end_correction_order(0.3, 1.7, 0.6, [16, 32, 64, 128, 256, 512])
    assert abs(slope + 1.0) <= 0.15
    assert errs[-1] < errs[0]


def test_report_serialization():
    rep = run("exact", 0.8, 0.1, 250)
    d = rep.to_dict()
    assert d["steps"] == 250 and d["error_series"][-1][0] == 250
    assert len(rep.rows()) == 251
