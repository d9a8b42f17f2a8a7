"""Identity checks, the suite runner, fault injection, negative controls."""

import random

import pytest

from awlab import (
    FAULT_TARGETS,
    HorizonError,
    check_alpha_beta,
    check_bridge_identity,
    check_E_eigen,
    check_factorization,
    check_hecke_ladder,
    check_hecke_relations,
    check_intertwiner,
    check_leading_coefficient,
    check_lowering_via_d,
    check_projection,
    check_q_difference,
    check_raising_via_d,
    check_recurrence,
    check_symmetrization,
    run_suite,
    suite_plan,
)
from awlab.verify import (
    random_asymmetric_laurent,
    random_laurent,
    random_symmetric_laurent,
)

EXPECTED_FAULT_SETS = {
    "lambda": {"q-difference-eigen", "raising-via-d", "lowering-via-d"},
    "alpha": {"three-term-recurrence", "raising-via-d", "lowering-via-d",
              "alpha-beta"},
    "beta": {"raising-via-hecke", "lowering-via-hecke",
             "lowering-via-hecke-n1"},
    "kappa": {"intertwiner"},
}


def test_report_json_schema(p8):
    rep = check_q_difference(3, p8)
    assert rep.passed and rep.residual_witness is None
    assert rep.elapsed >= 0
    doc = rep.as_json_dict(seed=42)
    assert doc == {
        "identity": "q-difference-eigen",
        "n": 3,
        "passed": True,
        "residual": None,
        "params": p8.as_json_dict(),
        "seed": 42,
    }
    assert "elapsed" not in doc


def test_individual_checks_pass(p8):
    assert check_q_difference(0, p8).passed
    assert check_E_eigen(-5, p8).passed
    assert check_recurrence(4, p8).passed
    assert check_raising_via_d(3, p8).passed
    assert check_lowering_via_d(3, p8).passed
    assert check_hecke_ladder(0, p8, "raise").passed
    assert check_hecke_ladder(5, p8, "raise").passed
    assert check_hecke_ladder(4, p8, "lower").passed
    assert check_hecke_ladder(1, p8, "lower").passed
    assert check_leading_coefficient(2, p8).passed
    assert check_alpha_beta(1, p8).passed
    assert check_alpha_beta(8, p8).passed
    assert check_symmetrization(-2, p8).passed
    assert check_projection(0, p8).passed
    assert check_projection(4, p8).passed
    assert check_intertwiner(-2, p8).passed
    assert check_intertwiner(0, p8).passed
    assert check_intertwiner(3, p8).passed


def test_check_argument_validation(p8):
    with pytest.raises(ValueError):
        check_hecke_ladder(-1, p8, "raise")
    with pytest.raises(ValueError):
        check_hecke_ladder(0, p8, "lower")
    with pytest.raises(ValueError):
        check_hecke_ladder(2, p8, "sideways")
    with pytest.raises(ValueError):
        check_alpha_beta(0, p8)
    with pytest.raises(ValueError):
        check_symmetrization(0, p8)
    with pytest.raises(ValueError):
        check_projection(-1, p8)


def test_trial_based_checks_pass(p8):
    assert check_hecke_relations(p8, trials=10).passed
    assert check_factorization(p8, trials=10).passed
    assert check_bridge_identity(p8, trials=10).passed


def test_random_laurent_generators():
    rng = random.Random(0)
    for _ in range(40):
        f = random_laurent(rng, degree_window=4, max_height=5)
        assert not f.is_zero()
        assert -4 <= f.min_deg and f.max_deg <= 4
        g = random_symmetric_laurent(rng, degree_window=4)
        assert g.is_symmetric() and not g.is_zero()
        h = random_asymmetric_laurent(rng, degree_window=4)
        assert not h.is_symmetric()
    with pytest.raises(ValueError):
        random_asymmetric_laurent(rng, degree_window=0)


def test_suite_plan_full_horizon():
    plan = dict(suite_plan(8))
    assert plan["q-difference-eigen"] == tuple(range(9))
    assert plan["y-eigen"] == tuple(range(-7, 8))
    assert plan["three-term-recurrence"] == tuple(range(2, 8))
    assert plan["raising-via-hecke"] == tuple(range(8))
    assert plan["lowering-via-hecke-n1"] == (1,)
    assert plan["alpha-beta"] == tuple(range(1, 9))
    assert plan["symmetrization"] == tuple(n for n in range(-7, 8) if n)
    assert plan["intertwiner"] == tuple(range(-7, 8))
    assert plan["hecke-relations"] is None
    assert plan["factorization"] is None
    assert plan["bridge-symmetric"] is None
    assert plan["control-lambda-q-difference"] == (2,)
    assert plan["control-beta-raising-via-hecke"] == (1,)


def test_suite_plan_small_horizons():
    plan1 = dict(suite_plan(1))
    assert plan1["q-difference-eigen"] == (0, 1)
    assert plan1["three-term-recurrence"] == ()
    assert plan1["lowering-via-hecke-n1"] == (1,)
    assert plan1["control-lambda-q-difference"] == ()
    plan0 = dict(suite_plan(0))
    assert plan0["y-eigen"] == (0,)
    assert plan0["intertwiner"] == ()
    assert plan0["lowering-via-hecke-n1"] == ()
    no_controls = dict(suite_plan(8, negative_controls=False))
    assert not any(k.startswith("control-") for k in no_controls)


def test_run_suite_clean(p8):
    reports = run_suite(p8, trials=5)
    assert all(r.passed for r in reports)
    ids = [r.identity_id for r in reports]
    # one report per planned (identity, n) pair, in plan order
    expected = []
    for identity_id, ns in suite_plan(8):
        expected.extend([identity_id] * (1 if ns is None else len(ns)))
    assert ids == expected
    control_ids = {i for i in ids if i.startswith("control-")}
    assert len(control_ids) == 5


def test_run_suite_deterministic(p8):
    a = [r.as_json_dict(9) for r in run_suite(p8, n_max=4, trials=6, seed=9)]
    b = [r.as_json_dict(9) for r in run_suite(p8, n_max=4, trials=6, seed=9)]
    assert a == b


def test_run_suite_horizon_guard(p8):
    with pytest.raises(HorizonError):
        run_suite(p8, n_max=9)


def test_run_suite_rejects_unknown_fault(p8):
    with pytest.raises(ValueError):
        run_suite(p8, n_max=2, trials=2, fault="gamma")


def test_run_suite_without_controls(p8):
    reports = run_suite(p8, n_max=3, trials=3, negative_controls=False)
    assert all(not r.identity_id.startswith("control-") for r in reports)
    assert all(r.passed for r in reports)


@pytest.mark.parametrize("fault", FAULT_TARGETS)
def test_fault_injection_flips_exactly_dependent_checks(fault, p8):
    reports = run_suite(p8, trials=5, fault=fault)
    failed = {r.identity_id for r in reports if not r.passed}
    assert failed == EXPECTED_FAULT_SETS[fault]
    for r in reports:
        if not r.passed:
            assert r.residual_witness is not None
            assert not r.residual_witness.is_zero()
        if r.identity_id.startswith("control-"):
            assert r.passed
