"""Characteristic numbers with arbitrary tangency degrees.

A tangency constraint of degree D = d' + d'' degenerates into three easier
problems: the tangent point becomes a marked point (coefficient 2d'd''), or
the constraint drops to degree d' or d''.  Repeatedly splitting off 1 reduces
everything to tangency-to-line problems, which the floor diagram sum counts
directly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .counting import count_fd
from .errors import (
    ConstraintCountMismatch,
    IntegralityFailure,
    InvalidDegree,
    NoSplittableConstraint,
    UnsupportedGenus,
)


@dataclass(frozen=True)
class CharProblem:
    """Count degree-d genus-0 curves through k points, tangent to curves of the
    given degrees."""

    d: int
    k: int
    tangencies: tuple[int, ...] = ()
    genus: int = 0

    def __post_init__(self):
        object.__setattr__(
            self, "tangencies", tuple(sorted(self.tangencies, reverse=True))
        )


def _validate(problem: CharProblem) -> None:
    if problem.genus != 0:
        raise UnsupportedGenus(f"only genus 0 is supported, got {problem.genus}")
    if not isinstance(problem.d, int) or problem.d <= 0:
        raise InvalidDegree(f"degree must be a positive integer, got {problem.d!r}")
    if any(not isinstance(t, int) or t < 1 for t in problem.tangencies):
        raise ValueError(f"tangency degrees must be positive integers: {problem.tangencies}")
    expected = 3 * problem.d - 1
    got = problem.k + len(problem.tangencies)
    if problem.k < 0 or got != expected:
        raise ConstraintCountMismatch(
            f"need k + #tangencies = {expected} for degree {problem.d}, "
            f"got {problem.k} + {len(problem.tangencies)} = {got}"
        )


@lru_cache(maxsize=None)
def _evaluate(d: int, k: int, tangencies: tuple[int, ...]) -> Fraction:
    if all(t == 1 for t in tangencies):
        lcomb = frozenset(range(k + 1, 3 * d))
        return count_fd(d, lcomb)
    big = max(tangencies)
    rest = list(tangencies)
    rest.remove(big)
    rest = tuple(sorted(rest, reverse=True))
    da, db = big - 1, 1
    value = 2 * da * db * _evaluate(d, k + 1, rest)
    value += _evaluate(d, k, tuple(sorted(rest + (da,), reverse=True)))
    value += _evaluate(d, k, tuple(sorted(rest + (db,), reverse=True)))
    return value


def characteristic_number(problem: CharProblem) -> int:
    """N_{d,0}(k; d_1,...,d_m): curves through k points, tangent to m curves."""
    _validate(problem)
    value = _evaluate(problem.d, problem.k, problem.tangencies)
    if value.denominator != 1 or value < 0:
        raise IntegralityFailure(
            f"characteristic number came out as {value} for {problem}"
        )
    return int(value)


def expand_step(
    problem: CharProblem, split: tuple[int, int]
) -> list[tuple[int, CharProblem]]:
    """One degeneration of the largest tangency degree D into split = (d', d'').

    Returns [(2d'd'', through an extra point), (1, tangent to degree d'),
    (1, tangent to degree d'')]; the total value is the weighted sum.
    """
    _validate(problem)
    splittable = [t for t in problem.tangencies if t > 1]
    if not splittable:
        raise NoSplittableConstraint(f"all tangency degrees are 1 in {problem}")
    big = max(splittable)
    da, db = split
    if da < 1 or db < 1 or da + db != big:
        raise ValueError(f"split {split} does not decompose the degree {big} constraint")
    rest = list(problem.tangencies)
    rest.remove(big)
    rest = tuple(rest)
    return [
        (2 * da * db, CharProblem(problem.d, problem.k + 1, rest, problem.genus)),
        (1, CharProblem(problem.d, problem.k, rest + (da,), problem.genus)),
        (1, CharProblem(problem.d, problem.k, rest + (db,), problem.genus)),
    ]
