"""Independent oracles validating the main engine.

monodromy_hurwitz recounts closed Hurwitz numbers from transposition tuples,
kontsevich_gw recounts the no-tangency numbers from the classical recursion,
and invariance_audit sweeps label subsets to confirm the count depends only
on how many tangency labels there are, not which ones.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .counting import count_fd
from .errors import DegreeTooLarge, InvalidDegree


def monodromy_hurwitz(d: int) -> Fraction:
    """Closed Hurwitz number as (1/d!) times the number of (2d-2)-tuples of
    transpositions in S_d with identity product generating a transitive group.

    Exhaustive enumeration; d = 5 already walks ~10^8 candidate tuples (a few
    minutes), larger degrees are rejected.
    """
    if not isinstance(d, int) or isinstance(d, bool) or d < 1:
        raise InvalidDegree(f"degree must be a positive integer, got {d!r}")
    if d > 5:
        raise DegreeTooLarge(f"monodromy oracle supports d <= 5, got {d}")

    identity = tuple(range(d))
    transpositions = []
    for i, j in itertools.combinations(range(d), 2):
        p = list(identity)
        p[i], p[j] = p[j], p[i]
        transpositions.append((tuple(p), (i, j)))

    def cycles(p: tuple[int, ...]) -> int:
        seen = [False] * d
        count = 0
        for start in range(d):
            if not seen[start]:
                count += 1
                v = start
                while not seen[v]:
                    seen[v] = True
                    v = p[v]
        return count

    total = 0
    tuple_len = 2 * d - 2

    def extend(current: tuple[int, ...], remaining: int, joined: list[int]) -> None:
        nonlocal total
        if remaining == 0:
            if current == identity and len(set(_find(joined, v) for v in range(d))) == 1:
                total += 1
            return
        # a product of r transpositions is the identity only if the current
        # permutation needs at most r transpositions, with matching parity
        distance = d - cycles(current)
        if distance > remaining or (distance - remaining) % 2 != 0:
            return
        for perm, (i, j) in transpositions:
            nxt = tuple(current[perm[v]] for v in range(d))
            merged = joined.copy()
            _union(merged, i, j)
            extend(nxt, remaining - 1, merged)

    def _find(parent: list[int], v: int) -> int:
        while parent[v] != v:
            v = parent[v]
        return v

    def _union(parent: list[int], a: int, b: int) -> None:
        ra, rb = _find(parent, a), _find(parent, b)
        if ra != rb:
            parent[ra] = rb

    extend(identity, tuple_len, list(range(d)))
    return Fraction(total, math.factorial(d))


def kontsevich_gw(d: int) -> int:
    """Count of degree-d rational curves through 3d-1 points, by the classical
    recursion N_d = sum over dA+dB=d of
    N_dA N_dB dA^2 dB (dB C(3d-4, 3dA-2) - dA C(3d-4, 3dA-1))."""
    if not isinstance(d, int) or isinstance(d, bool) or d < 1:
        raise InvalidDegree(f"degree must be a positive integer, got {d!r}")
    return _kontsevich(d)


def _kontsevich(d: int) -> int:
    values = {1: 1}
    for n in range(2, d + 1):
        total = 0
        for da in range(1, n):
            db = n - da
            total += (
                values[da]
                * values[db]
                * da ** 2
                * db
                * (db * math.comb(3 * n - 4, 3 * da - 2) - da * math.comb(3 * n - 4, 3 * da - 1))
            )
        values[n] = total
    return values[d]


@dataclass(frozen=True)
class InvarianceReport:
    """Outcome of sweeping count_fd over label subsets of one cardinality."""

    degree: int
    cardinality: int
    exhaustive: bool
    subsets_checked: int
    value: Optional[Fraction]
    passed: bool
    counterexample: Optional[tuple[tuple[int, ...], Fraction]] = None


def invariance_audit(
    d: int, cardinality: int, trials: int = 50, seed: int = 0
) -> InvarianceReport:
    """Check that count_fd(d, S) is the same for every size-`cardinality` S.

    Exhaustive when there are at most 200 subsets, otherwise samples
    `trials` random ones.
    """
    if not isinstance(d, int) or isinstance(d, bool) or d < 1:
        raise InvalidDegree(f"degree must be a positive integer, got {d!r}")
    labels = range(1, 3 * d)
    if not 0 <= cardinality <= 3 * d - 1:
        raise ValueError(f"cardinality must be within 0..{3 * d - 1}")

    n_subsets = math.comb(3 * d - 1, cardinality)
    if n_subsets <= 200:
        subsets = [tuple(s) for s in itertools.combinations(labels, cardinality)]
        exhaustive = True
    else:
        rng = random.Random(seed)
        subsets = [tuple(sorted(rng.sample(list(labels), cardinality))) for _ in range(trials)]
        exhaustive = False

    reference: Optional[Fraction] = None
    for subset in subsets:
        value = count_fd(d, subset)
        if reference is None:
            reference = value
        elif value != reference:
            return InvarianceReport(
                degree=d,
                cardinality=cardinality,
                exhaustive=exhaustive,
                subsets_checked=len(subsets),
                value=reference,
                passed=False,
                counterexample=(subset, value),
            )
    return InvarianceReport(
        degree=d,
        cardinality=cardinality,
        exhaustive=exhaustive,
        subsets_checked=len(subsets),
        value=reference,
        passed=True,
    )
