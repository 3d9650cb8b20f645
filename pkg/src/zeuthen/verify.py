"""Built-in verification suites.

Three suites: "paper" replays the published golden values end to end,
"oracles" compares independent recomputations against the main engine, and
"invariance" exercises structural properties (label-subset independence,
canonical keys, split order, mirror symmetry).  Each check returns a result
record; the CLI renders one line per check.
"""

from __future__ import annotations

import itertools
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from .characteristic import CharProblem, characteristic_number, expand_step
from .counting import (
    black_profile,
    count_fd,
    enumerate_diagrams,
    enumerate_markings,
    marked_multiplicity,
)
from .diagram import canonical_key
from .hurwitz import HurwitzProblem, closed_hurwitz, enumerate_tropical_covers, open_hurwitz
from .oracles import invariance_audit, kontsevich_gw, monodromy_hurwitz


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _check(name: str, expected, computed) -> CheckResult:
    if expected == computed:
        return CheckResult(name, True)
    return CheckResult(name, False, f"expected {expected}, computed {computed}")


def _check_true(name: str, condition: bool, detail: str = "") -> CheckResult:
    return CheckResult(name, bool(condition), "" if condition else detail)


def suite_paper() -> list[Callable[[], CheckResult]]:
    checks: list[Callable[[], CheckResult]] = []

    def closed_values() -> CheckResult:
        got = [closed_hurwitz(d) for d in range(1, 6)]
        return _check("closed hurwitz 1..5", [1, Fraction(1, 2), 4, 120, 8400], got)

    checks.append(closed_values)

    worked = [
        ((2, 0), (1, 0), Fraction(1, 2)),
        ((1, 2, 0), (0, 1, 0), Fraction(1)),
        ((3, 0), (2, 0), Fraction(1)),
    ]
    for delta, branch, expected in worked:
        checks.append(
            lambda delta=delta, branch=branch, expected=expected: _check(
                f"open hurwitz {delta} {branch}",
                expected,
                open_hurwitz(HurwitzProblem(delta, branch)),
            )
        )

    def annulus_family() -> CheckResult:
        got = [open_hurwitz(HurwitzProblem((0, d, 0), (0, 0, 0))) for d in range(1, 7)]
        return _check("open hurwitz (0,d,0) family", [Fraction(1, d) for d in range(1, 7)], got)

    checks.append(annulus_family)

    def conic_ladder() -> CheckResult:
        expected = [1, 2, 4, 4, 2, 1]
        for c in range(6):
            for subset in itertools.combinations(range(1, 6), c):
                value = count_fd(2, subset)
                if value != expected[c]:
                    return CheckResult(
                        "conic ladder, every subset",
                        False,
                        f"count_fd(2, {subset}) = {value}, expected {expected[c]}",
                    )
        return CheckResult("conic ladder, every subset", True)

    checks.append(conic_ladder)

    def cubic_table() -> CheckResult:
        expected = [400, 600, 756, 712, 480, 240, 100, 36, 12]
        for k in range(9):
            value = count_fd(3, range(k + 1, 9))
            if value != expected[k]:
                return CheckResult(
                    "cubic table k=0..8", False, f"k={k}: {value}, expected {expected[k]}"
                )
        return CheckResult("cubic table k=0..8", True)

    checks.append(cubic_table)
    checks.append(lambda: _check("cubic alternate lcomb {2..8}", 600, count_fd(3, range(2, 9))))
    checks.append(
        lambda: _check("cubic alternate lcomb {1,2,3,4,6}", 712, count_fd(3, (1, 2, 3, 4, 6)))
    )

    def tangent_conics() -> CheckResult:
        expected = {4: 6, 3: 36, 2: 184, 1: 816, 0: 3264}
        for k, want in expected.items():
            got = characteristic_number(CharProblem(2, k, (2,) * (5 - k)))
            if got != want:
                return CheckResult(
                    "tangent conic ladder", False, f"k={k}: {got}, expected {want}"
                )
        return CheckResult("tangent conic ladder", True)

    checks.append(tangent_conics)
    checks.append(lambda: _check("lines through two points", 1, characteristic_number(CharProblem(1, 2))))
    checks.append(
        lambda: _check("no line tangent to a line", 0, characteristic_number(CharProblem(1, 1, (1,))))
    )
    checks.append(lambda: _check("degree-2 diagram census", 5, len(enumerate_diagrams(2))))

    def gw_values() -> CheckResult:
        got = [count_fd(d, ()) for d in range(1, 5)]
        return _check("point-only counts d=1..4", [1, 1, 12, 620], got)

    checks.append(gw_values)
    return checks


def suite_oracles() -> list[Callable[[], CheckResult]]:
    checks: list[Callable[[], CheckResult]] = []

    def monodromy() -> CheckResult:
        for d in range(1, 5):
            a, b = monodromy_hurwitz(d), closed_hurwitz(d)
            if a != b:
                return CheckResult("monodromy vs closed formula", False, f"d={d}: {a} != {b}")
        return CheckResult("monodromy vs closed formula", True)

    checks.append(monodromy)

    def sweep_vs_closed() -> CheckResult:
        for d in range(1, 6):
            a = open_hurwitz(HurwitzProblem((d,), (2 * d - 2,)))
            b = closed_hurwitz(d)
            if a != b:
                return CheckResult("cover sweep vs closed formula", False, f"d={d}: {a} != {b}")
        return CheckResult("cover sweep vs closed formula", True)

    checks.append(sweep_vs_closed)

    def kontsevich_match() -> CheckResult:
        for d in range(1, 5):
            a, b = Fraction(kontsevich_gw(d)), count_fd(d, ())
            if a != b:
                return CheckResult("kontsevich vs diagram sum", False, f"d={d}: {a} != {b}")
        return CheckResult("kontsevich vs diagram sum", True)

    checks.append(kontsevich_match)
    return checks


def _conic_split_checks() -> CheckResult:
    """Every decomposition of every tangency degree, and every choice of
    constraint to expand, gives the same conic characteristic numbers."""
    rng_problems = [
        CharProblem(2, 4, (2,)),
        CharProblem(2, 3, (2, 2)),
        CharProblem(2, 2, (3, 1, 1)),
        CharProblem(2, 1, (4, 2, 1, 1)),
        CharProblem(2, 0, (5, 2, 1, 1, 1)),
    ]
    for problem in rng_problems:
        reference = characteristic_number(problem)
        splittable = sorted({t for t in problem.tangencies if t > 1})
        big = max(splittable)
        for da in range(1, big // 2 + 1):
            total = sum(
                coeff * characteristic_number(sub)
                for coeff, sub in expand_step(problem, (da, big - da))
            )
            if total != reference:
                return CheckResult(
                    "conic split invariance",
                    False,
                    f"{problem} split ({da},{big - da}): {total} != {reference}",
                )
        # expanding any constraint, not just the largest
        for idx, degree in enumerate(problem.tangencies):
            if degree == 1:
                continue
            rest = problem.tangencies[:idx] + problem.tangencies[idx + 1 :]
            for da in range(1, degree // 2 + 1):
                db = degree - da
                total = (
                    2 * da * db * characteristic_number(CharProblem(2, problem.k + 1, rest))
                    + characteristic_number(CharProblem(2, problem.k, rest + (da,)))
                    + characteristic_number(CharProblem(2, problem.k, rest + (db,)))
                )
                if total != reference:
                    return CheckResult(
                        "conic split invariance",
                        False,
                        f"{problem} constraint #{idx} split ({da},{db}): {total} != {reference}",
                    )
    return CheckResult("conic split invariance", True)


def suite_invariance() -> list[Callable[[], CheckResult]]:
    checks: list[Callable[[], CheckResult]] = []

    def subset_sweep() -> CheckResult:
        for d in (1, 2, 3):
            for cardinality in range(3 * d):
                report = invariance_audit(d, cardinality)
                if not report.passed:
                    return CheckResult(
                        "label-subset invariance d<=3",
                        False,
                        f"d={d} |S|={cardinality}: {report.counterexample}",
                    )
        return CheckResult("label-subset invariance d<=3", True)

    checks.append(subset_sweep)

    def key_invariance() -> CheckResult:
        rng = random.Random(20260815)
        for d in (1, 2, 3):
            for diagram in enumerate_diagrams(d):
                reference = canonical_key(diagram)
                n = diagram.n_vertices
                for _ in range(100):
                    perm = list(range(n))
                    rng.shuffle(perm)
                    if canonical_key(diagram.permuted(tuple(perm))) != reference:
                        return CheckResult(
                            "canonical key relabeling invariance",
                            False,
                            f"degree {diagram.degree}, permutation {perm}",
                        )
        return CheckResult("canonical key relabeling invariance", True)

    checks.append(key_invariance)

    def marking_dedup() -> CheckResult:
        five_vertex = [D for D in enumerate_diagrams(2) if D.n_vertices == 5]
        if len(five_vertex) != 1:
            return CheckResult("marking dedup on the 5-vertex diagram", False, "census changed")
        diagram = five_vertex[0]
        total = Fraction(0)
        for marking in enumerate_markings(diagram, ()):
            total += marked_multiplicity(diagram, marking)
        return _check("marking dedup on the 5-vertex diagram", Fraction(1), total)

    checks.append(marking_dedup)
    checks.append(_conic_split_checks)

    def mirror_and_zero() -> CheckResult:
        for delta in itertools.product(range(4), repeat=3):
            budget = delta[0] + delta[-1]
            if budget < 0:
                continue
            for branch in itertools.product(range(budget + 1), repeat=3):
                if sum(branch) != budget:
                    continue
                forward = open_hurwitz(HurwitzProblem(delta, branch))
                mirrored = open_hurwitz(HurwitzProblem(delta[::-1], branch[::-1]))
                if forward != mirrored:
                    return CheckResult(
                        "open hurwitz mirror symmetry",
                        False,
                        f"delta={delta} branch={branch}: {forward} != {mirrored}",
                    )
        zero_cases = [
            ((2, 2), (1, 1)),
            ((1, 0), (3, 0)),
            ((2, 0), (1, -1)),
            ((1, -1), (0, 0)),
        ]
        for delta, branch in zero_cases:
            if open_hurwitz(HurwitzProblem(delta, branch)) != 0:
                return CheckResult(
                    "open hurwitz mirror symmetry",
                    False,
                    f"infeasible {delta} {branch} gave a nonzero value",
                )
        return CheckResult("open hurwitz mirror symmetry", True)

    checks.append(mirror_and_zero)

    def nonnegativity_and_profiles() -> CheckResult:
        for d in (1, 2):
            labels = range(1, 3 * d)
            for c in range(3 * d):
                for subset in itertools.combinations(labels, c):
                    for diagram in enumerate_diagrams(d):
                        for marking in enumerate_markings(diagram, subset):
                            if marked_multiplicity(diagram, marking) < 0:
                                return CheckResult(
                                    "non-negative multiplicities, closed profiles",
                                    False,
                                    f"d={d} lcomb={subset}",
                                )
                            for v in diagram.blacks():
                                profile = black_profile(diagram, marking, v)
                                if profile.delta[-1] != 0:
                                    return CheckResult(
                                        "non-negative multiplicities, closed profiles",
                                        False,
                                        f"delta(s) != 0 at vertex {v}",
                                    )
        # degree 3 spot checks through the slow reference path; the fast path
        # asserts factor non-negativity across the full subset sweep above
        for subset in ((), (1, 2, 3, 4, 5, 6, 7, 8)):
            for diagram in enumerate_diagrams(3):
                for marking in enumerate_markings(diagram, subset):
                    if marked_multiplicity(diagram, marking) < 0:
                        return CheckResult(
                            "non-negative multiplicities, closed profiles",
                            False,
                            f"d=3 lcomb={subset}",
                        )
        return CheckResult("non-negative multiplicities, closed profiles", True)

    checks.append(nonnegativity_and_profiles)

    def cover_schedule() -> CheckResult:
        problems = [
            HurwitzProblem((3,), (4,)),
            HurwitzProblem((2, 3, 1), (1, 2, 0)),
            HurwitzProblem((1, 2, 0), (0, 1, 0)),
        ]
        for problem in problems:
            forward = sorted(c.key for c in enumerate_tropical_covers(problem))
            reverse = sorted(
                c.key for c in enumerate_tropical_covers(problem, _reverse_choices=True)
            )
            if forward != reverse:
                return CheckResult(
                    "cover enumeration schedule independence", False, str(problem)
                )
        return CheckResult("cover enumeration schedule independence", True)

    checks.append(cover_schedule)
    return checks


SUITES: dict[str, Callable[[], list[Callable[[], CheckResult]]]] = {
    "paper": suite_paper,
    "oracles": suite_oracles,
    "invariance": suite_invariance,
}


def run_suite(name: str, jobs: int = 1) -> list[CheckResult]:
    """Run one suite, optionally with a parallel worker budget."""
    checks = SUITES[name]()
    if jobs <= 1:
        return [check() for check in checks]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(lambda c: c(), checks))
