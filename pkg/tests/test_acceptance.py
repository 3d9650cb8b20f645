"""Acceptance gate: every required value and property, exact, with time bounds.

Each test prints exactly one "criterion N ...: PASS/FAIL" line (visible with
pytest -s or in failure output) and asserts exactness plus the stated runtime
budget.
"""

import itertools
import time
from fractions import Fraction

from zeuthen import (
    CharProblem,
    HurwitzProblem,
    Marking,
    characteristic_number,
    closed_hurwitz,
    count_fd,
    kontsevich_gw,
    marked_multiplicity,
    monodromy_hurwitz,
    open_hurwitz,
    validate_marking,
)
from zeuthen.counting import enumerate_diagrams
from zeuthen.verify import run_suite


def _report(number: int, description: str, ok: bool, elapsed: float, budget: float):
    in_time = elapsed <= budget
    verdict = "PASS" if (ok and in_time) else "FAIL"
    print(f"criterion {number} ({description}): {verdict} [{elapsed:.2f}s/{budget:.0f}s]")
    assert ok, f"criterion {number}: values diverged"
    assert in_time, f"criterion {number}: {elapsed:.2f}s over {budget:.0f}s budget"


def test_criterion_1_hurwitz_agreement():
    t0 = time.perf_counter()
    expected = [Fraction(1), Fraction(1, 2), Fraction(4), Fraction(120), Fraction(8400)]
    ok = [closed_hurwitz(d) for d in range(1, 6)] == expected
    ok = ok and all(
        open_hurwitz(HurwitzProblem((d,), (2 * d - 2,))) == expected[d - 1]
        for d in range(1, 6)
    )
    ok = ok and all(monodromy_hurwitz(d) == expected[d - 1] for d in range(1, 5))
    _report(1, "hurwitz closed/open/monodromy", ok, time.perf_counter() - t0, 30)


def test_criterion_2_open_worked_values():
    t0 = time.perf_counter()
    ok = open_hurwitz(HurwitzProblem((2, 0), (1, 0))) == Fraction(1, 2)
    ok = ok and open_hurwitz(HurwitzProblem((1, 2, 0), (0, 1, 0))) == 1
    ok = ok and open_hurwitz(HurwitzProblem((3, 0), (2, 0))) == 1
    ok = ok and all(
        open_hurwitz(HurwitzProblem((0, d, 0), (0, 0, 0))) == Fraction(1, d)
        for d in range(1, 7)
    )
    _report(2, "open hurwitz worked values", ok, time.perf_counter() - t0, 1)


def test_criterion_3_conic_ladder():
    t0 = time.perf_counter()
    expected = [1, 2, 4, 4, 2, 1]
    ok = all(
        count_fd(2, subset) == expected[c]
        for c in range(6)
        for subset in itertools.combinations(range(1, 6), c)
    )
    _report(3, "conic ladder, every subset", ok, time.perf_counter() - t0, 5)


def test_criterion_4_cubic_table():
    t0 = time.perf_counter()
    expected = [400, 600, 756, 712, 480, 240, 100, 36, 12]
    ok = all(count_fd(3, range(k + 1, 9)) == expected[k] for k in range(9))
    ok = ok and count_fd(3, range(2, 9)) == 600
    ok = ok and count_fd(3, (1, 2, 3, 4, 6)) == 712
    _report(4, "cubic table with alternate labels", ok, time.perf_counter() - t0, 60)


def test_criterion_5_tangent_conics():
    t0 = time.perf_counter()
    expected = {4: 6, 3: 36, 2: 184, 1: 816, 0: 3264}
    ok = all(
        characteristic_number(CharProblem(2, k, (2,) * (5 - k))) == value
        for k, value in expected.items()
    )
    _report(5, "conic tangency recursion", ok, time.perf_counter() - t0, 5)


def test_criterion_6_point_counts():
    t0 = time.perf_counter()
    expected = [1, 1, 12, 620]
    ok = all(count_fd(d, ()) == expected[d - 1] for d in range(1, 5))
    ok = ok and all(kontsevich_gw(d) == expected[d - 1] for d in range(1, 5))
    _report(6, "point-only counts d<=4", ok, time.perf_counter() - t0, 600)


def test_criterion_7_property_suites():
    t0 = time.perf_counter()
    failures = [
        result
        for suite in ("paper", "oracles", "invariance")
        for result in run_suite(suite)
        if not result.passed
    ]
    if failures:
        print("first divergence:", failures[0].name, failures[0].detail)
    _report(7, "verify property suites", not failures, time.perf_counter() - t0, 600)


def test_criterion_8_degenerate_cases():
    t0 = time.perf_counter()
    ok = characteristic_number(CharProblem(1, 2)) == 1
    ok = ok and characteristic_number(CharProblem(1, 1, (1,))) == 0

    # the zero arises by marking invalidity and by zero multiplicity,
    # whichever lcomb placement is chosen
    (diagram,) = enumerate_diagrams(1)
    ok = ok and count_fd(1, (1,)) == 0 and count_fd(1, (2,)) == 0
    ok = ok and validate_marking(diagram, (0, 1), (1,)) is not None
    ok = ok and validate_marking(diagram, (1, 0), (1,)) is None
    ok = ok and marked_multiplicity(diagram, Marking((1, 0), frozenset((1,)))) == 0
    ok = ok and validate_marking(diagram, (0, 1), (2,)) is None
    ok = ok and marked_multiplicity(diagram, Marking((0, 1), frozenset((2,)))) == 0
    ok = ok and marked_multiplicity(diagram, Marking((1, 0), frozenset((2,)))) == 0
    _report(8, "degree-1 tangency base cases", ok, time.perf_counter() - t0, 30)
