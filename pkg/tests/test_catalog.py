import json
from collections import Counter

import numpy as np
import pytest

from jacobi_local.catalog import (ConstraintViolation, UnknownIdentity, catalog_ids, eval_side,
                                  get_identity, instantiate_family, local_ids,
                                  manifest, manifest_json, printed_erratum, residual)
from jacobi_local.core import ellipj, ellipk, jacobi_zeta
from jacobi_local.expr import Lin, monomial_degrees
from jacobi_local.verifier import SampleDomain, coefficient_bound, sample_batch, task_rng


def test_counts_per_group():
    counts = Counter(i.split(".")[0] for i in local_ids())
    assert counts["A"] == 6 and counts["B"] == 22 and counts["D"] == 4
    assert counts["C"] == 61
    arity = Counter(get_identity(i).arity for i in catalog_ids("B."))
    assert arity == {2: 10, 1: 12}
    arity = Counter(get_identity(i).arity for i in catalog_ids("C."))
    assert arity == {3: 15, 2: 24, 1: 22}
    sections = [i for i in local_ids() if i[0].isdigit()]
    assert sections == ["2.5", "2.8", "2.9", "2.11", "2.99", "3.1", "3.7", "5.9", "5.14",
                        "6.8", "6.9"]


def test_filters():
    assert len(catalog_ids("A.")) == 6
    assert catalog_ids("G.") == []
    assert catalog_ids("nothing-matches") == []
    assert catalog_ids("E.d26*") == [f"E.d26[{n}]" for n in (1, 2, 3, 5, 8)]


def test_total_matches_manifest():
    man = manifest()
    assert len(catalog_ids()) == man["catalog_total"] == 219
    assert man["local_total"] == 104 and man["family_total"] == 23
    assert json.loads(manifest_json()) == json.loads(manifest_json())


def test_listing_is_sorted_and_deterministic():
    ids = catalog_ids()
    assert ids == catalog_ids()
    assert len(set(ids)) == len(ids)


def test_unknown_ids():
    with pytest.raises(UnknownIdentity):
        get_identity("Z.zz")
    with pytest.raises(UnknownIdentity):
        instantiate_family("E.nope", 2)
    for bad in (0, 17):
        with pytest.raises(ValueError):
            instantiate_family("E.3.3", bad)


def test_family_n1_equals_3_1():
    fam = instantiate_family("E.3.3", 1).realized
    base = get_identity("3.1")
    rng = np.random.default_rng(1)
    for _ in range(20):
        m = rng.uniform(0.05, 0.95)
        x, a = rng.uniform(0, 4) * ellipk(m), rng.uniform(0.1, 1.9) * ellipk(m)
        for side in ("lhs", "rhs"):
            assert abs(fam.eval_side(side, x, [a], m) - base.eval_side(side, x, [a], m)) <= 1e-13


def test_family_matches_repeated_multiplication():
    base = get_identity("3.1")
    x, a, m = 0.7, 0.9, 0.45
    d2 = ellipj(x, m)[2] ** 2
    rhs1 = base.eval_side("rhs", x, [a], m)
    for n in range(1, 6):
        fam = get_identity(f"E.3.3[{n}]")
        # dn^(2n) (dn(x+a)+dn(x-a)) = dn^(2n-2) * rhs of 3.1
        ref = d2 ** (n - 1) * rhs1
        assert abs(fam.eval_side("rhs", x, [a], m) - ref) / max(1, abs(ref)) <= 1e-9


def test_family_aliases_and_examples():
    assert residual("E.d26[3]", 0.4, [0.9], 0.6) <= 1e-9
    assert residual("E.d15[2]", 1.1, [0.5], 0.3) <= 1e-9
    assert instantiate_family("E.e12", 3).family_id == "E.d26"


def test_eval_side_direct_product():
    x, a, m = 0.37, 1.11, 0.62
    ref = ellipj(x, m)[2] * ellipj(x + a, m)[2]
    assert abs(eval_side("A.dd", "lhs", x, [a], m) - ref) <= 1e-15


def test_trig_limit_of_dd():
    for x, a in ((0.3, 0.9), (2.0, -1.1)):
        assert eval_side("A.dd", "lhs", x, [a], 0.0) == pytest.approx(1.0, abs=1e-15)
        assert eval_side("A.dd", "rhs", x, [a], 0.0) == pytest.approx(1.0, abs=1e-15)


def test_spot_residuals():
    assert residual("C.c15", 0.8, [1.3], 0.45) <= 1e-10
    assert residual("B.dsc", 0.2, [0.7, 1.9], 0.5) <= 1e-10
    # generalized addition theorem, written with b = x, a -> b - a
    assert residual("6.8", 0.4, [0.9 - 0.4], 0.7) <= 1e-11


def test_zeta_appears_as_declared():
    x, a, m = 0.5, 0.8, 0.3
    rhs = eval_side("A.dd", "rhs", x, [a], m)
    cs = ellipj(a, m)[1] / ellipj(a, m)[0]
    ref = ellipj(a, m)[2] + cs * (jacobi_zeta(x + a, m) - jacobi_zeta(x, m) - jacobi_zeta(a, m))
    assert abs(rhs - ref) <= 1e-14


def test_zero_shift_is_rejected():
    for iid in ("A.dd", "3.1", "C.c15", "B.dsc", "E.3.3[2]"):
        ident = get_identity(iid)
        with pytest.raises(ConstraintViolation, match="K"):
            ident.residual(0.3, [0.0] * ident.arity, 0.5)


def test_coincident_shifts_rejected():
    with pytest.raises(ConstraintViolation):
        residual("B.dsc", 0.2, [0.7, 0.7], 0.5)


def test_wrong_shift_count():
    with pytest.raises(ValueError):
        residual("A.dd", 0.3, [0.4, 0.5], 0.5)


def test_homogeneity_of_every_lhs():
    for iid in catalog_ids():
        ident = get_identity(iid)
        degs = monomial_degrees(ident.lhs)
        assert degs == {ident.rank}, iid


def test_period_tags():
    assert get_identity("A.dd").period == "2K"
    assert get_identity("E.d26[3]").period == "4K"


def _draw(ident, n=40, seed=0):
    rng = task_rng(seed, ident.id)
    return sample_batch(SampleDomain(), ident.arity, rng, n, ident, coefficient_bound(ident, 1e-8))


@pytest.mark.parametrize("iid", local_ids())
def test_symmetry_closure_negated_shifts(iid):
    ident = get_identity(iid)
    x, sh, m = _draw(ident)
    res = ident.residual(x, list(-sh), m, check=False)
    assert np.max(res) <= 1e-8


@pytest.mark.parametrize("iid", [i for i in local_ids()
                                 if get_identity(i).arity == 1])
def test_relabeling_x_minus_a_then_negate(iid):
    ident = get_identity(iid)
    a = Lin("a")
    moved = ident.transformed({"x": Lin("x") - a}, "~shift").transformed({"a": -a}, "~neg")
    x, sh, m = _draw(ident, seed=1)
    res = moved.residual(x, list(sh), m, check=False)
    assert np.max(res) <= 1e-8


@pytest.mark.parametrize("iid", ["6.9", "D.dscdd", "E.e04[2]", "E.e06[3]"])
def test_errata_fail_as_printed(iid):
    printed = printed_erratum(iid)
    fixed = get_identity(iid)
    x, sh, m = _draw(fixed, n=50)
    assert np.max(fixed.residual(x, list(sh), m, check=False)) <= 1e-8
    assert np.max(printed.residual(x, list(sh), m, check=False)) > 1e-3
