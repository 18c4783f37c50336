"""
Named verification sweeps.

A suite expands its bounds into a list of cases ``(check, *args)``; each case
runs independently and returns ``None`` on success or an expected/actual
payload on failure. Results are aggregated in case order, so a report is
identical whatever the worker count.
"""
from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .charlat import (
    NoFlag,
    character_sum,
    decompose_irreducible,
    demazure_flag_decompose,
    dimension,
    irr_char,
    tensor,
)
from .closedforms import (
    char_2a1b_demazure_form,
    char_2a1b_weyl_form,
    classify_hook,
    dim_sum_check,
    hook_char_closed,
    is_invertible,
    arm_hook_recursion,
    leg_hook_recursion,
    matrix_A,
    matrix_B,
    quotient_character,
    tensor_weyl_weyl_pieri_form,
    tensor_weyl_weyl_truncated_form,
    weyl_tensor_irr_multiplicities,
    weyl_tensor_irr_quotients,
    weyl_tensor_level2_multiplicities,
    weyl_tensor_weyl_quotients,
)
from .cvmod import (
    Partition,
    basis_char,
    cv_char,
    cv_dimension,
    demazure_char,
    enumerate_basis,
    partitions,
    ses_transforms,
    weyl_char,
)
from .macdonald import (
    SymPoly2,
    gm,
    gm_series,
    macdonald_p,
    pieri_arm_leg,
    pieri_linear_solve,
    sympoly_to_character,
)
from .qalg import (
    ONE,
    QPoly,
    QRat,
    ZERO,
    binomial,
    falling_q_product,
    qbinom,
    qbinom_by_division,
    qpochhammer,
)

__all__ = ["SUITES", "SweepReport", "UnknownSuite", "suite_cases", "run_cases", "run_suite"]


class UnknownSuite(KeyError):
    pass


@dataclass
class SweepReport:
    suite: str
    params: dict
    passed: int = 0
    failed: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "params": dict(self.params),
            "passed": self.passed,
            "failed": self.failed,
            "failures": list(self.failures),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=2)


def _js(value):
    if hasattr(value, "to_json"):
        return value.to_json()
    if isinstance(value, dict):
        return {str(k): _js(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_js(v) for v in value]
    return value


def _cmp(expected, actual):
    if expected == actual:
        return None
    return {"expected": _js(expected), "actual": _js(actual)}


# --- individual checks -------------------------------------------------------
# Each takes plain ints/tuples so cases pickle cleanly across processes.


def _pascal_a(n, r):
    return _cmp(qbinom(n, r), qbinom(n - 1, r).shift(r) + qbinom(n - 1, r - 1))


def _pascal_b(n, r):
    return _cmp(qbinom(n + 1, r), qbinom(n, r) + qbinom(n, r - 1).shift(n - r + 1))


def _hockey(m, n):
    lhs = ZERO
    for i in range(n + 1):
        lhs = lhs + qbinom(m + i, i).shift(i)
    return _cmp(qbinom(n + m + 1, n), lhs)


def _alternating(n, i):
    lhs = ZERO
    for k in range(i + 1):
        term = qbinom(i, k).shift(k * (n - i + k) - k * (k - 1) // 2)
        lhs = lhs + (term if k % 2 == 0 else -term)
    return _cmp(qbinom(n, i) * falling_q_product(i), lhs)


def _qbinomial_theorem(i, n):
    x = QPoly.monomial(n)
    lhs = ZERO
    for k in range(i + 1):
        term = qbinom(i, k).shift(binomial(i - k, 2)) * x**k
        lhs = lhs + (term if (i - k) % 2 == 0 else -term)
    rhs = ONE
    for j in range(i):
        rhs = rhs * (x - QPoly.monomial(j))
    return _cmp(rhs, lhs)


def _at_one(n, r):
    return _cmp(binomial(n, r), qbinom(n, r)(1))


def _division(n, r):
    return _cmp(qbinom_by_division(n, r), qbinom(n, r))


def _alias(i):
    return _cmp(qpochhammer(i), falling_q_product(i))


def _oracle(xi):
    xi = Partition(xi)
    ch = cv_char(xi)
    bad = _cmp(basis_char(xi), ch)
    if bad:
        return bad
    dims = (cv_dimension(xi), len(enumerate_basis(xi)), dimension(ch))
    if len(set(dims)) != 1:
        return {"expected": cv_dimension(xi), "actual": list(dims)}
    return _cmp(ch, decompose_irreducible(ch).recompose())


def _ses(xi):
    xi = Partition(xi)
    plus, minus, _ = ses_transforms(xi)
    sizes = (plus.size, minus.size + 2 * xi[-1], cv_dimension(plus) + cv_dimension(minus))
    return _cmp((xi.size, xi.size, cv_dimension(xi)), sizes)


def _weyl(m):
    ch = weyl_char(m)
    return _cmp(cv_char(Partition((1,) * m)), ch) or _cmp(2**m, dimension(ch))


def _demazure_level1(n):
    return _cmp(weyl_char(n), demazure_char(1, n))


def _flag_monotone(xi, level):
    ch = cv_char(Partition(xi))
    try:
        flag = demazure_flag_decompose(ch, level)
    except NoFlag as exc:
        return {"expected": "flag", "actual": exc.to_json()}
    return _cmp(ch, flag.recompose())


def _hook(xi):
    family, k, r = classify_hook(Partition(xi))
    return _cmp(cv_char(Partition(xi)), hook_char_closed(family, k, r))


def _arm_recursion(k, r):
    return _cmp(cv_char(Partition((k + r,) + (1,) * k)), arm_hook_recursion(k, r))


def _leg_recursion(k, r):
    return _cmp(cv_char(Partition((k,) + (1,) * (k + r))), leg_hook_recursion(k, r))


def _multiplicities(m, n):
    brute = decompose_irreducible(tensor(weyl_char(m), irr_char(n)))
    return _cmp(brute, weyl_tensor_irr_multiplicities(m, n))


def _quotient_sum(m, n):
    total = character_sum(cv_char(xi) for xi in weyl_tensor_irr_quotients(m, n))
    return _cmp(tensor(weyl_char(m), irr_char(n)), total)


def _dim_sum(m, n):
    return _cmp(True, dim_sum_check(m, n))


def _routes(n, m):
    direct = tensor(weyl_char(n), weyl_char(m))
    bad = _cmp(direct, tensor_weyl_weyl_pieri_form(n, m)) or _cmp(direct, tensor_weyl_weyl_truncated_form(n, m))
    if bad or m == 0:
        return bad
    quotients = weyl_tensor_weyl_quotients(n, m)
    bad = _cmp(direct, quotient_character(quotients))
    if bad:
        return bad
    # layer r has partition of size m+n-2r; its grades must lie in [0, r(m-r)]
    for fq in quotients:
        r = (m + n - fq.partition.size) // 2
        if not 0 <= fq.shift <= r * (m - r):
            return {"expected": f"0 <= g <= {r * (m - r)}", "actual": fq.to_json()}
    return None


def _level2_closed(n, m):
    return _cmp(demazure_flag_decompose(tensor(weyl_char(n), weyl_char(m)), 2), weyl_tensor_level2_multiplicities(n, m))


def _two_a_one_b(a, b):
    ch = cv_char(Partition((2,) * a + (1,) * b))
    form = char_2a1b_demazure_form(a, b)
    return (
        _cmp(ch, char_2a1b_weyl_form(a, b))
        or _cmp(ch, form.recompose())
        or _cmp(demazure_flag_decompose(ch, 2), form)
    )


def _matrix(kind, r, i):
    M = (matrix_A if kind == "A" else matrix_B)(r, i)
    return _cmp(True, is_invertible(M))


def _gm(m):
    return _cmp(gm(m), gm_series(m))


def _pieri_routes(n, m):
    a, b = pieri_arm_leg(n, m), pieri_linear_solve(n, m)
    a = {k: v for k, v in a.items() if not v.is_zero()}
    return _cmp(b, a)


def _bridge(m):
    return _cmp(weyl_char(m), sympoly_to_character(macdonald_p((m, 0))))


def _pieri_tensor(n, m):
    # (q;q)_m P_(n) g_m = sum_lam (q;q)_m phi_lam P_lam, read off as characters term by term
    poch = QRat(qpochhammer(m))
    expansion = SymPoly2()
    for lam, phi in pieri_linear_solve(n, m).items():
        expansion = expansion + macdonald_p(lam).scale(phi * poch)
    bad = _cmp(macdonald_p((n, 0)) * gm(m).scale(poch), expansion)
    if bad:
        return bad
    # P_(n+m-i, i) carries (x1 x2)^i, which is weight-neutral, so it maps to weyl_char(n+m-2i)
    terms = {}
    for lam, phi in pieri_linear_solve(n, m).items():
        c = phi * poch
        if not c.is_polynomial():
            return {"expected": "polynomial coefficient", "actual": c.to_json()}
        terms[lam[1]] = c.as_qpoly()
    expected = {i: qbinom(n, i) * qbinom(m, i) * falling_q_product(i) for i in range(m + 1)}
    return _cmp(expected, terms) or _cmp(tensor_weyl_weyl_pieri_form(n, m), sympoly_to_character(expansion))


def _mixed_dim(m, xi):
    xi = Partition(xi)
    return _cmp(2**m * cv_dimension(xi), dimension(tensor(weyl_char(m), cv_char(xi))))


def _irr_dim(k):
    return _cmp(k + 1, dimension(irr_char(k)))


def _level3(w, m):
    ch = tensor(demazure_char(2, w), weyl_char(m))
    try:
        flag = demazure_flag_decompose(ch, 3)
    except NoFlag as exc:
        return {"expected": "level-3 flag", "actual": exc.to_json()}
    return _cmp(ch, flag.recompose())


CHECKS = {
    "pascal_a": _pascal_a,
    "pascal_b": _pascal_b,
    "hockey": _hockey,
    "alternating": _alternating,
    "qbinomial_theorem": _qbinomial_theorem,
    "at_one": _at_one,
    "division": _division,
    "alias": _alias,
    "oracle": _oracle,
    "ses": _ses,
    "weyl": _weyl,
    "demazure_level1": _demazure_level1,
    "flag_monotone": _flag_monotone,
    "hook": _hook,
    "arm_recursion": _arm_recursion,
    "leg_recursion": _leg_recursion,
    "multiplicities": _multiplicities,
    "quotient_sum": _quotient_sum,
    "dim_sum": _dim_sum,
    "routes": _routes,
    "level2_closed": _level2_closed,
    "2a1b": _two_a_one_b,
    "matrix": _matrix,
    "gm": _gm,
    "pieri_routes": _pieri_routes,
    "bridge": _bridge,
    "pieri_tensor": _pieri_tensor,
    "mixed_dim": _mixed_dim,
    "irr_dim": _irr_dim,
    "level3": _level3,
}


# --- case generators ---------------------------------------------------------


def _qidentities(max):
    cases = [("pascal_a", n, r) for n in range(1, max + 1) for r in range(n + 1)]
    cases += [("pascal_b", n, r) for n in range(1, max + 1) for r in range(n + 2)]
    cap = min(max, 20)
    cases += [("hockey", m, n) for m in range(1, cap + 1) for n in range(cap + 1)]
    cases += [("alternating", n, i) for n in range(cap + 1) for i in range(n + 1)]
    cases += [("qbinomial_theorem", i, n) for i in range(min(max, 12) + 1) for n in range(min(max, 12) + 1)]
    cases += [("at_one", n, r) for n in range(cap + 1) for r in range(n + 1)]
    cases += [("division", n, r) for n in range(cap + 1) for r in range(n + 1)]
    cases += [("alias", i) for i in range(cap + 1)]
    return cases


def _all_partitions(size, max_part):
    return [tuple(xi) for s in range(size + 1) for xi in partitions(s, max_part)]


def _cv_oracle(size, max_part):
    parts = _all_partitions(size, max_part)
    cases = [("oracle", xi) for xi in parts]
    cases += [("ses", xi) for xi in parts if len(xi) >= 2]
    cases += [("weyl", m) for m in range(size + 1)]
    cases += [("demazure_level1", n) for n in range(min(size, 10) + 1)]
    # beyond level |xi| every D(l, s) met by the solver is irreducible, so the answer stabilizes
    for xi in _all_partitions(min(size, 10), min(max_part, 3)):
        if xi:
            cases += [("flag_monotone", xi, lv) for lv in range(xi[0], max(xi[0], sum(xi)) + 2)]
    return cases


def _hooks(size):
    cases = []
    for s in range(1, size + 1):
        for a in range(1, s + 1):
            cases.append(("hook", (a,) + (1,) * (s - a)))
    return cases


def _hook_recursions(max):
    cases = []
    for k in range(1, max + 1):
        for r in range(max - k + 1):
            cases += [("arm_recursion", k, r), ("leg_recursion", k, r)]
    return cases


def _graded_mul(max):
    rng = range(1, max + 1)
    cases = [("multiplicities", m, n) for m in rng for n in rng]
    cases += [("quotient_sum", m, n) for m in rng for n in rng]
    cases += [("dim_sum", m, n) for m in rng for n in rng]
    return cases


def _tensor_routes(max):
    return [("routes", n, m) for n in range(max + 1) for m in range(n + 1)]


def _level2(max, size):
    cases = [("level2_closed", n, m) for n in range(max + 1) for m in range(n + 1)]
    cases += [("2a1b", a, b) for a in range(size // 2 + 1) for b in range(size - 2 * a + 1)]
    return cases


def _matrices(max):
    cases = [("matrix", "A", r, i) for r in range(1, max + 1) for i in range(1, r + 1)]
    cases += [("matrix", "B", r, i) for i in range(2, max + 1) for r in range(1, i)]
    return cases


def _pieri(max):
    cases = [("pieri_routes", n, m) for n in range(max + 1) for m in range(n + 1) if n + m <= max]
    cases += [("gm", m) for m in range(min(max, 10) + 1)]
    cases += [("bridge", m) for m in range(min(max, 10) + 1)]
    cap = min(max, 8)
    cases += [("pieri_tensor", n, m) for n in range(cap + 1) for m in range(n + 1)]
    return cases


def _dims(max, size):
    cases = [("weyl", m) for m in range(max + 1)]
    cases += [("irr_dim", k) for k in range(max + 1)]
    cases += [("dim_sum", m, n) for m in range(1, max + 1) for n in range(1, max + 1)]
    cases += [("mixed_dim", m, xi) for m in range(min(max, 5) + 1) for xi in _all_partitions(size, size)]
    return cases


def _flags_level3(weight, m):
    return [("level3", w, k) for w in range(weight + 1) for k in range(m + 1)]


#: suite name -> (case generator, default bounds)
SUITES = {
    "qidentities": (_qidentities, {"max": 30}),
    "cv-oracle": (_cv_oracle, {"size": 12, "max_part": 5}),
    "hooks": (_hooks, {"size": 14}),
    "graded-mul": (_graded_mul, {"max": 10}),
    "tensor-routes": (_tensor_routes, {"max": 10}),
    "level2": (_level2, {"max": 10, "size": 14}),
    "matrices": (_matrices, {"max": 12}),
    "pieri": (_pieri, {"max": 12}),
    "kus": (_hook_recursions, {"max": 12}),
    "dims": (_dims, {"max": 10, "size": 6}),
    "flags-level3": (_flags_level3, {"weight": 8, "m": 4}),
}


def resolve_bounds(name: str, overrides: dict | None = None) -> dict:
    """Merge overrides into a suite's default bounds; unknown keys raise ValueError."""
    if name not in SUITES:
        raise UnknownSuite(name)
    _, defaults = SUITES[name]
    bounds = dict(defaults)
    for key, value in (overrides or {}).items():
        if value is None:
            continue
        if key not in defaults:
            raise ValueError(f"suite {name!r} takes bounds {sorted(defaults)}, not {key!r}")
        if value < 0:
            raise ValueError(f"bound {key} must be nonnegative, got {value}")
        bounds[key] = value
    return bounds


def suite_cases(name: str, bounds: dict | None = None) -> list[tuple]:
    bounds = resolve_bounds(name, bounds)
    return SUITES[name][0](**bounds)


def run_case(case: tuple):
    check, *args = case
    try:
        return CHECKS[check](*args)
    except Exception as exc:  # a crash is a failure of that case, not of the sweep
        return {"error": f"{type(exc).__name__}: {exc}"}


def run_cases(cases: list[tuple], jobs: int = 1) -> list:
    if jobs <= 1:
        return [run_case(c) for c in cases]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(run_case, cases, chunksize=max(1, len(cases) // (4 * jobs))))


def _report(name: str, params: dict, cases: list[tuple], results: list) -> SweepReport:
    report = SweepReport(name, params)
    for case, res in zip(cases, results):
        if res is None:
            report.passed += 1
        else:
            report.failed += 1
            report.failures.append({"case": _js(list(case)), **res})
    return report


def run_suite(name: str, bounds: dict | None = None, jobs: int = 1) -> SweepReport:
    """Run one named suite, or every suite for ``name == "all"`` (bounds then must be empty)."""
    if name == "all":
        if any(v is not None for v in (bounds or {}).values()):
            raise ValueError("suite 'all' runs every suite at its default bounds")
        names = list(SUITES)
        cases = [(n, c) for n in names for c in suite_cases(n)]
        results = run_cases([c for _, c in cases], jobs)
        report = SweepReport("all", {n: SUITES[n][1] for n in names})
        for (n, case), res in zip(cases, results):
            if res is None:
                report.passed += 1
            else:
                report.failed += 1
                report.failures.append({"suite": n, "case": _js(list(case)), **res})
        return report
    params = resolve_bounds(name, bounds)
    cases = suite_cases(name, params)
    return _report(name, params, cases, run_cases(cases, jobs))
