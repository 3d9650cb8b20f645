"""Open and closed Hurwitz numbers.

Closed numbers come from the classical formula.  Open numbers are computed by
exhaustively enumerating tropical covers of the real line: sweep the branch
points and boundary circles left to right, tracking the multiset of active
edge weights, and weight each cover by its edge-weight product (normalized at
boundary leaves) over its automorphism order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

from .errors import InfeasibleProblem, InvalidDegree

NEG_INF = "-inf"
POS_INF = "+inf"

EdgeEnd = Union[int, str]  # event position, or one of the infinity markers


@dataclass(frozen=True)
class HurwitzProblem:
    """Boundary/branch data: chamber degrees delta(0..s) and branch counts n(0..s)."""

    delta: tuple[int, ...]
    branch: tuple[int, ...]

    def __post_init__(self):
        if len(self.delta) != len(self.branch) or not self.delta:
            raise ValueError("delta and branch must be non-empty arrays of equal length")

    @property
    def s(self) -> int:
        return len(self.delta) - 1

    @property
    def feasible(self) -> bool:
        """Degrees and branch counts admissible for at least the counting conventions.

        Requires non-negative data, adjacent chamber degrees distinct, and the
        branch-point total fixed by the Riemann-Hurwitz count
        delta(0) + delta(s) + s - 2.
        """
        d, n = self.delta, self.branch
        if any(x < 0 for x in d) or any(x < 0 for x in n):
            return False
        if any(d[i] == d[i - 1] for i in range(1, len(d))):
            return False
        return sum(n) == d[0] + d[-1] + self.s - 2


@dataclass(frozen=True)
class TropicalCover:
    """One enumerated cover: its event history, edge list, and weighting data.

    Events are tuples carrying edge ids:
      ("merge", pos, a, b, child), ("split", pos, parent, c1, c2),
      ("open", pos, edge), ("close", pos, edge).
    Edges are (weight, birth, death) with event positions or infinity markers.
    """

    events: tuple[tuple, ...]
    edges: tuple[tuple[int, EdgeEnd, EdgeEnd], ...]
    mu: Fraction
    aut_order: int

    @property
    def key(self) -> bytes:
        return repr(self.events).encode()


def closed_hurwitz(d: int) -> Fraction:
    """Genus-0 degree-d Hurwitz number of the sphere: d^(d-3) (2d-2)! / d!."""
    if d <= 0:
        raise InvalidDegree(f"degree must be positive, got {d}")
    return Fraction(d) ** (d - 3) * Fraction(math.factorial(2 * d - 2), math.factorial(d))


def _find(parent: dict, t: int) -> int:
    while parent[t] != t:
        t = parent[t]
    return t


def enumerate_tropical_covers(
    problem: HurwitzProblem, *, _reverse_choices: bool = False
) -> list[TropicalCover]:
    """All isomorphism classes of tropical covers of the line for a feasible problem.

    The sweep starts with delta(0) weight-1 ends.  Each branch point applies
    one split (unordered composition of the weight) or one merge of two active
    edges from different connected components (same-component merges would
    create a cycle).  Each boundary circle either opens a new edge of weight
    delta(i) - delta(i-1) or closes an active edge of the opposite weight at a
    boundary leaf.  At the end every active edge must have weight 1, and the
    cover must be connected.

    Isomorphic outcomes are avoided at choice time: active edges born at the
    same event with the same weight are interchangeable, so choices are made
    per (birth, weight) bucket, never per individual edge.
    """
    if not problem.feasible:
        raise InfeasibleProblem(f"no covers: {problem}")
    delta, branch, s = problem.delta, problem.branch, problem.s

    slots: list[tuple[str, int]] = []
    for i in range(s + 1):
        if i > 0:
            slots.append(("boundary", i))
        slots.extend(("branch", i) for _ in range(branch[i]))

    covers: list[TropicalCover] = []

    # Edge state lives in parallel dicts keyed by edge id; component tokens in
    # a union-find forest.  Each recursion level works on copies (small state).
    weights0 = {i: 1 for i in range(delta[0])}
    births0 = {i: NEG_INF for i in range(delta[0])}
    token0 = {i: i for i in range(delta[0])}
    parent0 = {i: i for i in range(delta[0])}

    def finish(weights, births, deaths, active, parent, events):
        if any(weights[e] != 1 for e in active):
            return
        roots = {_find(parent, t) for t in parent}
        if len(roots) != 1:
            return
        deaths = dict(deaths)
        for e in active:
            deaths[e] = POS_INF

        mu = Fraction(1)
        for e, w in weights.items():
            mu *= w
        aut_exp = 0
        for ev in events:
            kind = ev[0]
            if kind in ("open", "close"):
                mu /= weights[ev[2]]
            elif kind == "merge":
                _, _, a, b, _ = ev
                if births[a] == NEG_INF and births[b] == NEG_INF:
                    assert weights[a] == weights[b] == 1
                    aut_exp += 1
            elif kind == "split":
                _, _, _, c1, c2 = ev
                if deaths[c1] == POS_INF and deaths[c2] == POS_INF:
                    assert weights[c1] == weights[c2] == 1
                    aut_exp += 1
        edge_list = tuple(
            (weights[e], births[e], deaths[e]) for e in sorted(weights)
        )
        covers.append(
            TropicalCover(events=tuple(events), edges=edge_list, mu=mu, aut_order=2 ** aut_exp)
        )

    def rec(idx, weights, births, deaths, active, token, parent, n_tokens, events):
        if idx == len(slots):
            finish(weights, births, deaths, active, parent, events)
            return
        kind, i = slots[idx]
        pos = idx
        next_id = len(weights)

        if kind == "boundary":
            change = delta[i] - delta[i - 1]
            if change > 0:
                w2 = dict(weights)
                b2 = dict(births)
                t2 = dict(token)
                p2 = dict(parent)
                w2[next_id] = change
                b2[next_id] = ("x", pos)
                t2[next_id] = n_tokens
                p2[n_tokens] = n_tokens
                rec(
                    idx + 1, w2, b2, deaths, active + (next_id,), t2, p2,
                    n_tokens + 1, events + (("open", pos, next_id),),
                )
            else:
                # One representative per (birth, weight) bucket of the exact weight.
                seen_buckets = set()
                candidates = []
                for e in active:
                    if weights[e] == -change:
                        bucket = births[e]
                        if bucket not in seen_buckets:
                            seen_buckets.add(bucket)
                            candidates.append(e)
                if _reverse_choices:
                    candidates.reverse()
                for e in candidates:
                    d2 = dict(deaths)
                    d2[e] = ("x", pos)
                    rec(
                        idx + 1, weights, births, d2,
                        tuple(x for x in active if x != e), token, parent,
                        n_tokens, events + (("close", pos, e),),
                    )
            return

        # Branch point: group active edges by (birth, weight) bucket.
        buckets: dict = {}
        for e in active:
            buckets.setdefault((births[e], weights[e]), []).append(e)
        bucket_keys = sorted(buckets, key=lambda k: buckets[k][0])

        choices = []
        for ai, ka in enumerate(bucket_keys):
            for kb in bucket_keys[ai:]:
                if ka == kb:
                    members = buckets[ka]
                    if len(members) >= 2 and _find(parent, token[members[0]]) != _find(
                        parent, token[members[1]]
                    ):
                        choices.append(("merge", members[0], members[1]))
                else:
                    a, b = buckets[ka][0], buckets[kb][0]
                    if _find(parent, token[a]) != _find(parent, token[b]):
                        choices.append(("merge", a, b))
        for ka in bucket_keys:
            e = buckets[ka][0]
            w = weights[e]
            for part in range(1, w // 2 + 1):
                choices.append(("split", e, part))
        if _reverse_choices:
            choices.reverse()

        for choice in choices:
            if choice[0] == "merge":
                _, a, b = choice
                w2 = dict(weights)
                b2 = dict(births)
                d2 = dict(deaths)
                t2 = dict(token)
                p2 = dict(parent)
                w2[next_id] = weights[a] + weights[b]
                b2[next_id] = ("q", pos)
                d2[a] = ("q", pos)
                d2[b] = ("q", pos)
                ra, rb = _find(p2, token[a]), _find(p2, token[b])
                p2[ra] = rb
                t2[next_id] = rb
                rec(
                    idx + 1, w2, b2, d2,
                    tuple(x for x in active if x != a and x != b) + (next_id,),
                    t2, p2, n_tokens, events + (("merge", pos, a, b, next_id),),
                )
            else:
                _, e, part = choice
                w2 = dict(weights)
                b2 = dict(births)
                d2 = dict(deaths)
                t2 = dict(token)
                w2[next_id] = part
                w2[next_id + 1] = weights[e] - part
                b2[next_id] = b2[next_id + 1] = ("q", pos)
                d2[e] = ("q", pos)
                t2[next_id] = t2[next_id + 1] = token[e]
                rec(
                    idx + 1, w2, b2, d2,
                    tuple(x for x in active if x != e) + (next_id, next_id + 1),
                    t2, dict(parent), n_tokens,
                    events + (("split", pos, e, next_id, next_id + 1),),
                )

    if delta[0] == 0 and s == 0:
        return []  # only the empty cover candidate, which is not connected
    rec(0, weights0, births0, {}, tuple(range(delta[0])), token0, parent0, delta[0], ())

    seen_keys = set()
    for c in covers:
        assert c.key not in seen_keys, "duplicate cover produced by the sweep"
        seen_keys.add(c.key)
    return covers


@lru_cache(maxsize=None)
def _open_hurwitz_cached(delta: tuple[int, ...], branch: tuple[int, ...]) -> Fraction:
    problem = HurwitzProblem(delta, branch)
    if not problem.feasible:
        return Fraction(0)
    total = Fraction(0)
    for cover in enumerate_tropical_covers(problem):
        total += cover.mu / cover.aut_order
    return total


def open_hurwitz(problem: HurwitzProblem) -> Fraction:
    """Open Hurwitz number H(delta, n); 0 for infeasible data."""
    return _open_hurwitz_cached(problem.delta, problem.branch)
