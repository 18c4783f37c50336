"""
Acceptance gate: thirteen property sweeps with exact polynomial equality.

Each criterion records a one-line PASS/FAIL verdict that is printed in the
terminal summary. Criterion 13 is exploratory: its outcome is reported and
logged but never fails the run.
"""
from __future__ import annotations

import logging
import time
from contextlib import contextmanager

import pytest

from sl2char.charlat import NoFlag, demazure_flag_decompose, irr_char
from sl2char.suites import run_cases, suite_cases

log = logging.getLogger("sl2char.acceptance")


@contextmanager
def criterion(log_book, num: int, title: str, budget_s: float):
    start = time.perf_counter()
    try:
        yield
    except BaseException as exc:
        elapsed = time.perf_counter() - start
        log_book[num] = f"criterion {num:2d} FAIL  {title} ({elapsed:.1f}s): {type(exc).__name__}"
        raise
    elapsed = time.perf_counter() - start
    note = "" if elapsed <= budget_s else f", over {budget_s:g}s budget"
    log_book[num] = f"criterion {num:2d} PASS  {title} ({elapsed:.1f}s{note})"


def sweep(suite: str, checks: set[str], bounds: dict | None = None):
    """Run the named checks of a suite; return (case count, failures)."""
    cases = [c for c in suite_cases(suite, bounds) if c[0] in checks]
    assert cases, f"no {sorted(checks)} cases in {suite}"
    results = run_cases(cases)
    failures = [(c, r) for c, r in zip(cases, results) if r is not None]
    return len(cases), failures


def assert_clean(n_cases, failures, at_least):
    assert n_cases >= at_least
    assert not failures, failures[:3]


def test_c01_q_identities(acceptance_log):
    with criterion(acceptance_log, 1, "q-identity suite", 5):
        checks = {"pascal_a", "pascal_b", "hockey", "alternating", "qbinomial_theorem", "at_one"}
        n, bad = sweep("qidentities", checks, {"max": 30})
        assert_clean(n, bad, 2000)


def test_c02_cv_oracle(acceptance_log):
    with criterion(acceptance_log, 2, "CV recursion equals basis enumeration", 60):
        n, bad = sweep("cv-oracle", {"oracle"}, {"size": 12, "max_part": 5})
        assert_clean(n, bad, 197)


def test_c03_weyl_closed_form(acceptance_log):
    with criterion(acceptance_log, 3, "local Weyl closed form, dim 2^m", 5):
        n, bad = sweep("cv-oracle", {"weyl"}, {"size": 12, "max_part": 5})
        assert_clean(n, bad, 13)


def test_c04_hooks(acceptance_log):
    with criterion(acceptance_log, 4, "hook closed forms, size <= 14", 30):
        n, bad = sweep("hooks", {"hook"}, {"size": 14})
        assert_clean(n, bad, 105)


def test_c05_hook_recursions(acceptance_log):
    with criterion(acceptance_log, 5, "both hook recursions, k+r <= 12", 10):
        n, bad = sweep("kus", {"arm_recursion", "leg_recursion"}, {"max": 12})
        assert_clean(n, bad, 156)


def test_c06_filtration_sums(acceptance_log):
    with criterion(acceptance_log, 6, "W(m) x V(n) quotient sums and dimension totals", 30):
        n, bad = sweep("graded-mul", {"quotient_sum", "dim_sum"}, {"max": 10})
        assert_clean(n, bad, 200)


def test_c07_graded_multiplicities(acceptance_log):
    with criterion(acceptance_log, 7, "graded multiplicities of V(k) in W(m) x V(n)", 30):
        cases = [c for c in suite_cases("graded-mul", {"max": 10}) if c[0] == "multiplicities"]
        # both branches and the small differences m - n in {1, 2, 3}
        assert {c[1] - c[2] for c in cases} >= {-9, 0, 1, 2, 3, 9}
        n, bad = sweep("graded-mul", {"multiplicities"}, {"max": 10})
        assert_clean(n, bad, 100)


def test_c08_three_routes(acceptance_log):
    with criterion(acceptance_log, 8, "W(n) x W(m): direct, Pieri, truncated, quotient routes", 60):
        n, bad = sweep("tensor-routes", {"routes"}, {"max": 10})
        assert_clean(n, bad, 66)


def test_c09_level_two(acceptance_log):
    with criterion(acceptance_log, 9, "V(2^a,1^b) forms and level-2 multiplicities", 60):
        n, bad = sweep("level2", {"2a1b", "level2_closed"}, {"max": 10, "size": 14})
        assert_clean(n, bad, 66 + 64)


def test_c10_flag_existence(acceptance_log):
    with criterion(acceptance_log, 10, "level-l flags for l >= n1; V(3) has no level-2 flag", 30):
        n, bad = sweep("cv-oracle", {"flag_monotone"}, {"size": 12, "max_part": 5})
        assert_clean(n, bad, 100)
        with pytest.raises(NoFlag):
            demazure_flag_decompose(irr_char(3), 2)


def test_c11_matrices(acceptance_log):
    with criterion(acceptance_log, 11, "A(r,i) and B(r,i) invertible up to 12", 5):
        n, bad = sweep("matrices", {"matrix"}, {"max": 12})
        assert_clean(n, bad, 144)


def test_c12_pieri_tensor(acceptance_log):
    with criterion(acceptance_log, 12, "Pieri routes, Weyl bridge, tensor formula from Pieri", 60):
        n, bad = sweep("pieri", {"pieri_routes", "bridge", "pieri_tensor", "gm"}, {"max": 12})
        assert_clean(n, bad, 42 + 11 + 45)


def test_c13_level_three_exploratory(acceptance_log):
    # reported, never fatal
    start = time.perf_counter()
    n, bad = sweep("flags-level3", {"level3"}, {"weight": 8, "m": 4})
    elapsed = time.perf_counter() - start
    if bad:
        for case, payload in bad:
            log.warning("level-3 flag not found for D(2,%d) x W(%d): %s", case[1], case[2], payload)
        verdict = f"FAIL (logged, non-blocking): {len(bad)}/{n} cases without a level-3 flag"
    else:
        verdict = f"PASS  all {n} cases have a level-3 flag"
    acceptance_log[13] = f"criterion 13 {verdict} [exploratory] ({elapsed:.1f}s)"
    log.info(acceptance_log[13])
