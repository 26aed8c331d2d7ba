"""Acceptance gate: every mechanized identity at its contracted scale.

All arithmetic is exact-rational, so every check is a zero-tolerance
equality; scales and runtime budgets are pinned here.  Each test prints one
criterion line so a -s run reads as a checklist.
"""

import json
import time

from fnlab.forms import vector_field_form
from fnlab.rationals import Q
from fnlab.verify import (Sampler, SuiteConfig, run_bracket_antisymmetry,
                          run_bracket_alternating_multilinear, run_bracket_closure,
                          run_bracket_graded_antisymmetry, run_bracket_graded_jacobi,
                          run_bracket_jacobi, run_bracket_multilinear_identities,
                          run_conv_associative, run_conv_shuffle,
                          run_general_jacobi_flows, run_general_jacobi_random,
                          run_prod_associative, run_prod_low_order_agreement,
                          run_pullback_roundtrip, run_strong_diff_antisymmetry,
                          run_verification, run_weil_dimensions, strip_timings)
from fnlab.forms import bracket_l1
from fnlab.verify import flow_commutator


def _sampler(name, seed=0):
    return Sampler(f"{seed}/{name}")


def _execute(runner, name, cfg, budget_s=None):
    started = time.perf_counter()
    run = runner(_sampler(name), cfg)
    elapsed = time.perf_counter() - started
    assert run.failed == 0, f"{name}: {run.witnesses[:1]}"
    if budget_s is not None:
        assert elapsed < budget_s, f"{name} took {elapsed:.2f}s (budget {budget_s}s)"
    return run.cases, elapsed


def _report(num, text, cases, elapsed):
    print(f"criterion {num:>2}: PASS  {text}  [{cases} cases, {elapsed:.2f}s]")


def test_c01_strong_difference_antisymmetry():
    cfg = SuiteConfig(cases_per_property=200, m_max=3)
    cases, dt = _execute(run_strong_diff_antisymmetry,
                         "strong_diff_antisymmetry", cfg, budget_s=1.0)
    _report(1, "difference pairs cancel exactly", cases, dt)


def test_c02_general_jacobi():
    t0 = time.perf_counter()
    cfg_flows = SuiteConfig(cases_per_property=50, m_max=2, deg_max=2)
    cases_a, _ = _execute(run_general_jacobi_flows, "general_jacobi_flows", cfg_flows)
    cfg_rand = SuiteConfig(cases_per_property=100, m_max=2)
    cases_b, _ = _execute(run_general_jacobi_random, "general_jacobi_random", cfg_rand)
    dt = time.perf_counter() - t0
    assert dt < 5.0, f"general jacobi took {dt:.2f}s (budget 5s)"
    _report(2, "threefold-difference defect is exactly zero", cases_a + cases_b, dt)


def test_c03_pullback_faithfulness_uniqueness():
    cfg = SuiteConfig(cases_per_property=100, m_max=2)
    cases, dt = _execute(run_pullback_roundtrip, "pullback_roundtrip", cfg)
    assert cases == 400  # 100 per gluing configuration
    _report(3, "gluing round trips and solve-order independence", cases, dt)


def test_c04_conv_shuffle():
    cfg = SuiteConfig(cases_per_property=25, m_max=2, deg_max=2)
    cases, dt = _execute(run_conv_shuffle, "conv_shuffle", cfg, budget_s=10.0)
    assert cases == 225  # 25 per arity pair in {0,1,2}^2
    _report(4, "shuffled under-convolution equals swapped over-convolution", cases, dt)


def test_c05_conv_and_prod_associativity():
    cfg = SuiteConfig(cases_per_property=25, m_max=2)
    cases_a, dt_a = _execute(run_conv_associative, "conv_associative", cfg)
    cases_b, dt_b = _execute(run_prod_associative, "prod_associative", cfg)
    _report(5, "convolutions and expanded products associate",
            cases_a + cases_b, dt_a + dt_b)


def test_c06_prod_low_order_agreement():
    cfg = SuiteConfig(cases_per_property=25, m_max=2)
    cases, dt = _execute(run_prod_low_order_agreement, "prod_low_order_agreement", cfg)
    assert cases == 100  # 25 per arity pair at or below (1,1)
    _report(6, "expanded products agree on every slot below the corner", cases, dt)


def test_c07_bracket_antisymmetry_and_jacobi():
    t0 = time.perf_counter()
    cfg = SuiteConfig(cases_per_property=25, m_max=2, deg_max=2)
    cases_a, _ = _execute(run_bracket_antisymmetry, "bracket_antisymmetry", cfg)
    cases_b, _ = _execute(run_bracket_jacobi, "bracket_jacobi", cfg)
    dt = time.perf_counter() - t0
    assert dt < 30.0, f"bracket identities took {dt:.2f}s (budget 30s)"
    _report(7, "bracket antisymmetry and jacobi identity", cases_a + cases_b, dt)


def test_c08_graded_antisymmetry_and_jacobi():
    cfg = SuiteConfig(cases_per_property=25, m_max=2, deg_max=2)
    cases_a, dt_a = _execute(run_bracket_graded_antisymmetry,
                             "bracket_graded_antisymmetry", cfg)
    cases_b, dt_b = _execute(run_bracket_graded_jacobi, "bracket_graded_jacobi", cfg)
    _report(8, "graded antisymmetry and graded jacobi on alternating forms",
            cases_a + cases_b, dt_a + dt_b)


def test_c09_closure_and_restricted_identities():
    cfg = SuiteConfig(cases_per_property=25, m_max=2)
    cases_a, dt_a = _execute(run_bracket_multilinear_identities,
                             "bracket_multilinear_identities", cfg)
    cases_b, dt_b = _execute(run_bracket_alternating_multilinear,
                             "bracket_alternating_multilinear", cfg)
    cases_c, dt_c = _execute(run_bracket_closure, "bracket_closure", cfg)
    _report(9, "restricted brackets close and satisfy their identities",
            cases_a + cases_b + cases_c, dt_a + dt_b + dt_c)


def test_c10_classical_cross_check():
    sampler = _sampler("classical_cross_check")
    t0 = time.perf_counter()
    signs = set()
    for _ in range(25):
        m = sampler.rng.randint(1, 2)
        x = sampler.vector_field(m, 2)
        y = sampler.vector_field(m, 2)
        got = bracket_l1(vector_field_form(x), vector_field_form(y)).principal().body
        oracle = flow_commutator(x, y)
        if got == oracle.scale(Q(-1)):
            signs.add(-1)
        elif got == oracle:
            signs.add(1)
        else:
            raise AssertionError("bracket differs from the commutator oracle "
                                 "by more than a sign")
    assert signs == {-1}, f"global sign not constant: {signs}"
    _report(10, "vector-field bracket = -(flow commutator), one global sign",
            25, time.perf_counter() - t0)


def test_c11_weil_dimensions():
    cfg = SuiteConfig()
    cases, dt = _execute(run_weil_dimensions, "weil_dimensions", cfg)
    _report(11, "algebra dimensions match the enumeration oracle", cases, dt)


def test_c12_verification_is_deterministic():
    cfg = SuiteConfig(seed=42, cases_per_property=4)
    t0 = time.perf_counter()
    first = run_verification(cfg)
    second = run_verification(cfg)
    assert first["passed"] and second["passed"]
    assert json.dumps(strip_timings(first), sort_keys=True) == \
        json.dumps(strip_timings(second), sort_keys=True)
    _report(12, "repeated verification reports are identical",
            len(first["properties"]) * 2, time.perf_counter() - t0)
