"""Floor diagram census, marking enumeration, and the multiplicity sum.

The count of degree-d rational curves through points (labels outside lcomb)
and tangent to lines (labels in lcomb) is the sum of multiplicities of all
marked floor diagrams of degree d.  Multiplicities factor over vertices:
white factors are closed Hurwitz numbers scaled by divergence powers, black
factors are open Hurwitz numbers weighted by the local label pattern.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Optional

import networkx as nx

from .diagram import (
    BLACK,
    WHITE,
    FloorDiagram,
    Marking,
    automorphisms,
    canonical_key,
    induced_weights,
)
from .errors import InvalidDegree, ZeroFlowEdge
from .hurwitz import HurwitzProblem, closed_hurwitz, open_hurwitz


def _compositions(total: int, minimums: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """All tuples t with t[i] >= minimums[i] and sum(t) == total."""
    if not minimums:
        if total == 0:
            yield ()
        return
    head_min = minimums[0]
    rest = minimums[1:]
    rest_min = sum(rest)
    for head in range(head_min, total - rest_min + 1):
        for tail in _compositions(total - head, rest):
            yield (head,) + tail


@lru_cache(maxsize=None)
def _diagram_census(d: int) -> tuple[FloorDiagram, ...]:
    """All isomorphism classes of degree-d floor diagrams, sorted by canonical key.

    Search space: bipartite trees with 1..d white vertices (div >= 1 summing
    to d) and 1..2d-1 black vertices (div <= 0 summing to -d, leaves strictly
    negative), filtered by flow feasibility and deduplicated by canonical key.
    """
    found: dict[bytes, FloorDiagram] = {}
    for n in range(2, 3 * d):
        for shape in nx.nonisomorphic_trees(n):
            tree_edges = list(shape.edges())
            neighbors = [list(shape.neighbors(v)) for v in range(n)]
            depth = [-1] * n
            depth[0] = 0
            queue = [0]
            for v in queue:
                for u in neighbors[v]:
                    if depth[u] < 0:
                        depth[u] = depth[v] + 1
                        queue.append(u)
            even = [v for v in range(n) if depth[v] % 2 == 0]
            odd = [v for v in range(n) if depth[v] % 2 == 1]

            for whites, blacks in ((even, odd), (odd, even)):
                nw, nb = len(whites), len(blacks)
                if not (1 <= nw <= d and 1 <= nb <= 2 * d - 1):
                    continue
                white_set = set(whites)
                colors = tuple(WHITE if v in white_set else BLACK for v in range(n))
                oriented = [
                    (u, v) if u in white_set else (v, u) for u, v in tree_edges
                ]
                # A black leaf's single edge carries weight |div|, so its
                # divergence must be strictly negative.
                black_min = tuple(1 if len(neighbors[b]) == 1 else 0 for b in blacks)
                if sum(black_min) > d:
                    continue
                for wcomp in _compositions(d, (1,) * nw):
                    base = [0] * n
                    for v, dv in zip(whites, wcomp):
                        base[v] = dv
                    for bcomp in _compositions(d, black_min):
                        div = list(base)
                        for v, dv in zip(blacks, bcomp):
                            div[v] = -dv
                        try:
                            induced_weights(colors, div, oriented)
                        except ZeroFlowEdge:
                            continue
                        diagram = FloorDiagram(colors, div, oriented)
                        found.setdefault(canonical_key(diagram), diagram)
    return tuple(found[k] for k in sorted(found))


def enumerate_diagrams(d: int) -> list[FloorDiagram]:
    """All isomorphism classes of degree-d floor diagrams, each exactly once."""
    if not isinstance(d, int) or isinstance(d, bool) or d <= 0:
        raise InvalidDegree(f"degree must be a positive integer, got {d!r}")
    return list(_diagram_census(d))


_aut_orders: dict[bytes, int] = {}


def _aut_order(diagram: FloorDiagram) -> int:
    key = canonical_key(diagram)
    if key not in _aut_orders:
        _aut_orders[key] = len(automorphisms(diagram))
    return _aut_orders[key]


@dataclass(frozen=True)
class BlackLocalProfile:
    """Local data of a black vertex in a marked diagram.

    Neighbors are ordered by the minimum of their label preimages; eps[i] is
    +1 when edge i points toward the black vertex.  delta is the running
    chamber degree (delta[0] = -div, delta[s] = 0), ntilde counts the vertex
    labels falling in each gap between consecutive neighbor minima, and ncum
    is its running sum.
    """

    s: int
    ordered_whites: tuple[int, ...]
    eps: tuple[int, ...]
    delta: tuple[int, ...]
    ntilde: tuple[int, ...]
    ncum: tuple[int, ...]
    case: str  # "point" | "top" | "generic"
    point_label: Optional[int] = None


def _labels_of(diagram: FloorDiagram, marking: Marking) -> list[list[int]]:
    return marking.preimages(diagram.n_vertices)


def _resolved_lcomb(marking: Marking, lcomb: Optional[Iterable[int]]) -> frozenset[int]:
    if lcomb is None:
        return marking.lcomb
    return frozenset(lcomb)


def white_multiplicity(
    diagram: FloorDiagram,
    marking: Marking,
    v: int,
    lcomb: Optional[Iterable[int]] = None,
) -> Fraction:
    """Multiplicity of a white vertex: div^(val+1)H(div) in the point case,
    (div-2+val)div^val H(div) otherwise."""
    lset = _resolved_lcomb(marking, lcomb)
    labels = _labels_of(diagram, marking)[v]
    dv = diagram.div[v]
    val = diagram.valence(v)
    if min(labels) not in lset:
        return Fraction(dv) ** (val + 1) * closed_hurwitz(dv)
    return (dv - 2 + val) * Fraction(dv) ** val * closed_hurwitz(dv)


def _black_edge_data(diagram: FloorDiagram, v: int) -> dict[int, tuple[int, int]]:
    """Map white neighbor -> (eps, weight) for a black vertex v."""
    data: dict[int, tuple[int, int]] = {}
    for (wv, bv), weight, toward_white in zip(
        diagram.edges, diagram.weights, diagram.toward_white
    ):
        if bv == v:
            data[wv] = (-1 if toward_white else 1, weight)
    return data


def black_profile(
    diagram: FloorDiagram,
    marking: Marking,
    v: int,
    lcomb: Optional[Iterable[int]] = None,
) -> BlackLocalProfile:
    """Chamber degrees and label-gap counts around a black vertex."""
    lset = _resolved_lcomb(marking, lcomb)
    pre = _labels_of(diagram, marking)
    labels = sorted(pre[v])
    edge_data = _black_edge_data(diagram, v)
    ordered = sorted(diagram.adj[v], key=lambda u: min(pre[u]))
    minima = [min(pre[u]) for u in ordered]
    eps = tuple(edge_data[u][0] for u in ordered)
    weights = tuple(edge_data[u][1] for u in ordered)

    delta = [-diagram.div[v]]
    for e, w in zip(eps, weights):
        delta.append(delta[-1] + e * w)
    assert delta[-1] == 0, "chamber degrees must close at zero"

    s = len(ordered)
    ntilde = [0] * (s + 1)
    for j in labels:
        ntilde[bisect_left(minima, j)] += 1
    assert sum(ntilde) == diagram.valence(v) - diagram.div[v] - 1

    ncum = []
    running = 0
    for x in ntilde:
        running += x
        ncum.append(running)

    points = [j for j in labels if j not in lset]
    assert len(points) <= 1, "marking validity guarantees at most one point"
    bar = max(minima)
    if points:
        case, point_label = "point", points[0]
    elif any(j > bar for j in labels):
        case, point_label = "top", None
    else:
        case, point_label = "generic", None

    return BlackLocalProfile(
        s=s,
        ordered_whites=tuple(ordered),
        eps=eps,
        delta=tuple(delta),
        ntilde=tuple(ntilde),
        ncum=tuple(ncum),
        case=case,
        point_label=point_label,
    )


@lru_cache(maxsize=None)
def _black_factor(
    delta: tuple[int, ...], ntilde: tuple[int, ...], case: str, gap: int
) -> Fraction:
    """Evaluate a black vertex multiplicity from its numeric profile.

    gap is the chamber index of the point label in the point case and is
    ignored otherwise.
    """
    s = len(delta) - 1
    div_v = -delta[0]

    def hurwitz_minus(i0: int) -> Fraction:
        branch = tuple(x - 1 if i == i0 else x for i, x in enumerate(ntilde))
        return open_hurwitz(HurwitzProblem(delta, branch))

    if case == "point":
        value = delta[gap] * hurwitz_minus(gap)
    elif case == "top":
        value = (2 * s - 2) * hurwitz_minus(s)
    else:
        total = Fraction(0)
        ncum = 0
        for i in range(s + 1):
            prev = ncum
            ncum += ntilde[i]
            if ntilde[i] == 0:
                continue
            bracket = 2 * delta[i] + 2 * i + ncum + prev - 1 + 2 * div_v
            total += ntilde[i] * bracket * hurwitz_minus(i)
        value = total / 2
    assert value >= 0, f"negative black multiplicity from {delta}, {ntilde}, {case}"
    return value


def black_multiplicity(
    diagram: FloorDiagram,
    marking: Marking,
    v: int,
    lcomb: Optional[Iterable[int]] = None,
) -> Fraction:
    """Multiplicity of a black vertex per its local profile case."""
    prof = black_profile(diagram, marking, v, lcomb)
    if prof.case == "point":
        pre = _labels_of(diagram, marking)
        minima = sorted(min(pre[u]) for u in diagram.adj[v])
        gap = bisect_left(minima, prof.point_label)
    else:
        gap = -1
    return _black_factor(prof.delta, prof.ntilde, prof.case, gap)


def marked_multiplicity(
    diagram: FloorDiagram,
    marking: Marking,
    lcomb: Optional[Iterable[int]] = None,
) -> Fraction:
    """Product of edge weights and all vertex multiplicities; may be zero."""
    value = Fraction(1)
    for w in diagram.weights:
        value *= w
    for v in range(diagram.n_vertices):
        if diagram.is_white(v):
            value *= white_multiplicity(diagram, marking, v, lcomb)
        else:
            value *= black_multiplicity(diagram, marking, v, lcomb)
        if value == 0:
            return value
    return value


def _valid_assignments(diagram: FloorDiagram, lset: frozenset[int]) -> Iterator[tuple[int, ...]]:
    """All label assignments satisfying the marking rules, in lexicographic order.

    Labels are placed in increasing order, so a label on a black vertex is
    "large" exactly when every neighbor already carries a label, and a point
    on a white vertex is the preimage minimum exactly when it arrives first.
    """
    n = diagram.n_vertices
    nlabels = 3 * diagram.degree - 1
    caps = [diagram.label_capacity(v) for v in range(n)]
    is_white = [diagram.is_white(v) for v in range(n)]
    val = [diagram.valence(v) for v in range(n)]
    adj = diagram.adj

    counts = [0] * n
    nfilled = [0] * n  # black vertices: neighbors already labeled
    haspoint = [False] * n
    haslarge = [False] * n
    assignment = [0] * nlabels

    def place(j: int) -> Iterator[tuple[int, ...]]:
        if j > nlabels:
            yield tuple(assignment)
            return
        is_point = j not in lset
        for v in range(n):
            if counts[v] == caps[v]:
                continue
            if is_white[v]:
                if is_point and counts[v] > 0:
                    continue
            else:
                large = nfilled[v] == val[v]
                if is_point and (haspoint[v] or haslarge[v]):
                    continue
                if large and (is_point or haspoint[v] or haslarge[v]):
                    continue

            counts[v] += 1
            first = counts[v] == 1
            was_point, was_large = haspoint[v], haslarge[v]
            if is_point:
                haspoint[v] = True
            if not is_white[v] and nfilled[v] == val[v]:
                haslarge[v] = True
            touched = []
            if first:
                for u in adj[v]:
                    if not is_white[u]:
                        nfilled[u] += 1
                        touched.append(u)
            assignment[j - 1] = v

            yield from place(j + 1)

            for u in touched:
                nfilled[u] -= 1
            haspoint[v], haslarge[v] = was_point, was_large
            counts[v] -= 1

    yield from place(1)


def enumerate_markings(
    diagram: FloorDiagram, lcomb: Iterable[int]
) -> list[Marking]:
    """All valid markings up to diagram automorphisms, one per class."""
    lset = frozenset(lcomb)
    seen: set[bytes] = set()
    out: list[Marking] = []
    for assignment in _valid_assignments(diagram, lset):
        marking = Marking(assignment=assignment, lcomb=lset)
        key = canonical_key(diagram, marking)
        if key not in seen:
            seen.add(key)
            out.append(marking)
    return out


def _marking_sum(diagram: FloorDiagram, lset: frozenset[int]) -> Fraction:
    """Sum of vertex-factor products over all valid label assignments.

    Counts raw assignments, not isomorphism classes, and leaves out the
    edge-weight product; the caller divides by |Aut| and multiplies the
    weights back in.  Branches whose partial factor is
    already zero are pruned: a white factor is fixed by its first label, and
    a black factor is fixed once the vertex is full and all neighbors are
    labeled (its chamber degrees grow one entry per newly labeled neighbor,
    so a negative entry kills the branch early).
    """
    n = diagram.n_vertices
    nlabels = 3 * diagram.degree - 1
    caps = [diagram.label_capacity(v) for v in range(n)]
    is_white = [diagram.is_white(v) for v in range(n)]
    val = [diagram.valence(v) for v in range(n)]
    div = diagram.div
    adj = diagram.adj

    white_factors = {}
    for v in range(n):
        if is_white[v]:
            h = closed_hurwitz(div[v])
            point = Fraction(div[v]) ** (val[v] + 1) * h
            line = (div[v] - 2 + val[v]) * Fraction(div[v]) ** val[v] * h
            white_factors[v] = (point, line)

    edge_data = [None] * n
    for v in range(n):
        if not is_white[v]:
            edge_data[v] = _black_edge_data(diagram, v)

    counts = [0] * n
    nfilled = [0] * n
    haspoint = [False] * n
    haslarge = [False] * n
    pointgap = [0] * n
    labels_on: list[list[int]] = [[] for _ in range(n)]
    minima: list[list[int]] = [[] for _ in range(n)]  # neighbor minima, ascending
    deltas: list[list[int]] = [
        [-div[v]] if not is_white[v] else [] for v in range(n)
    ]
    total = Fraction(0)

    def finish_black(v: int) -> Fraction:
        delta = tuple(deltas[v])
        gaps = minima[v]
        ntilde = [0] * (val[v] + 1)
        for j in labels_on[v]:
            ntilde[bisect_left(gaps, j)] += 1
        if haspoint[v]:
            case, gap = "point", pointgap[v]
        elif haslarge[v]:
            case, gap = "top", -1
        else:
            case, gap = "generic", -1
        return _black_factor(delta, tuple(ntilde), case, gap)

    def place(j: int, acc: Fraction) -> None:
        nonlocal total
        if j > nlabels:
            total += acc
            return
        is_point = j not in lset
        for v in range(n):
            if counts[v] == caps[v]:
                continue
            factor = acc
            if is_white[v]:
                if counts[v] == 0:
                    wf = white_factors[v][0 if is_point else 1]
                    if wf == 0:
                        continue
                    factor = acc * wf
                elif is_point:
                    continue
            else:
                large = nfilled[v] == val[v]
                if is_point:
                    if haspoint[v] or haslarge[v] or large:
                        continue
                    if deltas[v][nfilled[v]] == 0:
                        continue  # point factor delta(i_j) vanishes
                elif large:
                    if haspoint[v] or haslarge[v]:
                        continue
                    if val[v] == 1 or counts[v] + 1 < caps[v]:
                        # a lone neighbor makes the top factor 0; unfilled
                        # capacity would force a second large label later
                        continue

            counts[v] += 1
            first = counts[v] == 1
            was_point, was_large = haspoint[v], haslarge[v]
            if not is_white[v]:
                labels_on[v].append(j)
                if is_point:
                    haspoint[v] = True
                    pointgap[v] = nfilled[v]
                elif nfilled[v] == val[v]:
                    haslarge[v] = True

            dead = False
            touched = []
            determined = []
            if first:
                for u in adj[v]:
                    if is_white[u]:
                        continue
                    eps, w = edge_data[u][v]
                    nd = deltas[u][-1] + eps * w
                    if nd < 0:
                        dead = True
                        break
                    deltas[u].append(nd)
                    minima[u].append(j)
                    nfilled[u] += 1
                    touched.append(u)
                    if counts[u] == caps[u] and nfilled[u] == val[u]:
                        determined.append(u)
                    elif nfilled[u] == val[u]:
                        # every later label on u will be large
                        remaining = caps[u] - counts[u]
                        if remaining >= 2 or haspoint[u] or val[u] == 1:
                            dead = True
                            break
            if not dead and not is_white[v] and counts[v] == caps[v] and nfilled[v] == val[v]:
                determined.append(v)

            if not dead:
                for u in determined:
                    bf = finish_black(u)
                    if bf == 0:
                        dead = True
                        break
                    factor *= bf

            if not dead:
                place(j + 1, factor)

            for u in touched:
                deltas[u].pop()
                minima[u].pop()
                nfilled[u] -= 1
            if not is_white[v]:
                labels_on[v].pop()
                haspoint[v], haslarge[v] = was_point, was_large
            counts[v] -= 1

    place(1, Fraction(1))
    return total


def count_fd(d: int, lcomb: Iterable[int]) -> Fraction:
    """Characteristic number with unit tangencies: sum of marked multiplicities.

    Labels in lcomb are tangency-to-line constraints, the rest are point
    constraints; the result depends only on |lcomb| (tested, not assumed).
    """
    if not isinstance(d, int) or isinstance(d, bool) or d <= 0:
        raise InvalidDegree(f"degree must be a positive integer, got {d!r}")
    lset = frozenset(int(x) for x in lcomb)
    if any(not (1 <= x <= 3 * d - 1) for x in lset):
        raise ValueError(f"lcomb must be a subset of 1..{3 * d - 1}")

    total = Fraction(0)
    for diagram in _diagram_census(d):
        vertex_sum = _marking_sum(diagram, lset)
        if vertex_sum == 0:
            continue
        wprod = 1
        for w in diagram.weights:
            wprod *= w
        total += vertex_sum * wprod / _aut_order(diagram)
    return total
