"""Floor diagrams and their markings.

A floor diagram is an oriented bipartite weighted tree: white vertices carry
positive divergence, black vertices non-positive divergence, and edge weights
with orientations are reconstructed from the divergences by the unique flow on
the tree.  Markings attach the constraint labels 1..3d-1 to vertices subject
to local size and ordering rules.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import ZeroFlowEdge

WHITE = "white"
BLACK = "black"


def induced_weights(
    colors: Sequence[str],
    div: Sequence[int],
    edges: Sequence[tuple[int, int]],
) -> list[tuple[int, bool]]:
    """Reconstruct per-edge (weight, oriented_toward_white) from divergences.

    Cutting any edge of a tree splits it in two; the edge weight is the
    absolute net divergence of either side and the edge points toward the
    side with positive net divergence.  Raises ZeroFlowEdge if some cut
    sums to zero (the candidate is not a floor diagram).
    """
    n = len(colors)
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for idx, (w, b) in enumerate(edges):
        adj[w].append((b, idx))
        adj[b].append((w, idx))

    subtree = list(div)
    order: list[tuple[int, int, int]] = []  # (vertex, parent, parent edge)
    stack = [(0, -1, -1)]
    while stack:
        v, parent, pedge = stack.pop()
        order.append((v, parent, pedge))
        for u, idx in adj[v]:
            if u != parent:
                stack.append((u, v, idx))
    for v, parent, _ in reversed(order):
        if parent >= 0:
            subtree[parent] += subtree[v]
    child_of_edge = {pedge: v for v, _, pedge in order if pedge >= 0}

    result: list[tuple[int, bool]] = []
    for idx, (w, b) in enumerate(edges):
        child = child_of_edge[idx]
        s = subtree[child]
        if s == 0:
            raise ZeroFlowEdge(idx)
        toward_white = (s > 0) == (child == w)
        result.append((abs(s), toward_white))
    return result


def validate_diagram(
    colors: Sequence[str],
    div: Sequence[int],
    edges: Sequence[tuple[int, int]],
) -> list[str]:
    """Check floor diagram invariants on raw data; return all violation codes."""
    violations: list[str] = []
    n = len(colors)
    if len(div) != n:
        return ["DegreeMismatch"]

    for w, b in edges:
        if not (0 <= w < n and 0 <= b < n) or colors[w] != WHITE or colors[b] != BLACK:
            violations.append("NotBipartite")
            break

    if len(edges) != n - 1 or len(set(edges)) != len(edges):
        violations.append("NotTree")
    else:
        adj: list[list[int]] = [[] for _ in range(n)]
        for w, b in edges:
            if 0 <= w < n and 0 <= b < n:
                adj[w].append(b)
                adj[b].append(w)
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for u in adj[v]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        if len(seen) != n:
            violations.append("NotTree")

    for v in range(n):
        if colors[v] == WHITE and div[v] <= 0:
            violations.append("WhiteDivNonPositive")
            break
    for v in range(n):
        if colors[v] == BLACK and div[v] > 0:
            violations.append("BlackDivPositive")
            break

    if sum(div) != 0:
        violations.append("DegreeMismatch")

    if not violations:
        try:
            induced_weights(colors, div, edges)
        except ZeroFlowEdge:
            violations.append("ZeroFlowEdge")
    return violations


class FloorDiagram:
    """Immutable floor diagram over vertices 0..n-1.

    Edges are stored as (white end, black end); weights and orientations are
    derived at construction from the divergences.
    """

    __slots__ = ("colors", "div", "edges", "weights", "toward_white", "degree", "adj", "_key")

    def __init__(
        self,
        colors: Sequence[str],
        div: Sequence[int],
        edges: Sequence[tuple[int, int]],
    ):
        violations = validate_diagram(colors, div, edges)
        if violations:
            raise ValueError(f"not a floor diagram: {violations}")
        self.colors = tuple(colors)
        self.div = tuple(int(x) for x in div)
        self.edges = tuple((int(w), int(b)) for w, b in edges)
        derived = induced_weights(self.colors, self.div, self.edges)
        self.weights = tuple(w for w, _ in derived)
        self.toward_white = tuple(t for _, t in derived)
        self.degree = sum(d for c, d in zip(self.colors, self.div) if c == WHITE)
        adj: list[list[int]] = [[] for _ in range(len(self.colors))]
        for w, b in self.edges:
            adj[w].append(b)
            adj[b].append(w)
        self.adj = tuple(tuple(sorted(a)) for a in adj)
        self._key: Optional[bytes] = None

    @property
    def n_vertices(self) -> int:
        return len(self.colors)

    def valence(self, v: int) -> int:
        return len(self.adj[v])

    def is_white(self, v: int) -> bool:
        return self.colors[v] == WHITE

    def whites(self) -> list[int]:
        return [v for v in range(self.n_vertices) if self.colors[v] == WHITE]

    def blacks(self) -> list[int]:
        return [v for v in range(self.n_vertices) if self.colors[v] == BLACK]

    def label_capacity(self, v: int) -> int:
        """Prescribed marking preimage size: 2div-1 for white, val-div-1 for black."""
        if self.colors[v] == WHITE:
            return 2 * self.div[v] - 1
        return self.valence(v) - self.div[v] - 1

    def permuted(self, perm: Sequence[int]) -> "FloorDiagram":
        """Relabel vertices by perm[old] = new."""
        n = self.n_vertices
        colors = [""] * n
        div = [0] * n
        for old in range(n):
            colors[perm[old]] = self.colors[old]
            div[perm[old]] = self.div[old]
        edges = [(perm[w], perm[b]) for w, b in self.edges]
        return FloorDiagram(colors, div, edges)

    def __repr__(self) -> str:
        parts = ",".join(
            f"{'W' if c == WHITE else 'B'}{d:+d}" for c, d in zip(self.colors, self.div)
        )
        return f"FloorDiagram(deg={self.degree}, [{parts}], edges={list(self.edges)})"


def diagram_degree(diagram: FloorDiagram) -> int:
    """Sum of divergences over white vertices."""
    return diagram.degree


@dataclass(frozen=True)
class Marking:
    """Assignment of labels 1..3d-1 to vertices; assignment[j-1] is label j's vertex."""

    assignment: tuple[int, ...]
    lcomb: frozenset[int]

    def preimages(self, n_vertices: int) -> list[list[int]]:
        pre: list[list[int]] = [[] for _ in range(n_vertices)]
        for j, v in enumerate(self.assignment, start=1):
            pre[v].append(j)
        return pre


@dataclass(frozen=True)
class MarkedDiagram:
    diagram: FloorDiagram
    marking: Marking
    multiplicity: Fraction


def validate_marking(
    diagram: FloorDiagram,
    assignment: Sequence[int],
    lcomb: Iterable[int],
) -> Optional[str]:
    """Return None if the assignment is a valid marking, else the first violation code."""
    lset = frozenset(lcomb)
    n = diagram.n_vertices
    pre: list[list[int]] = [[] for _ in range(n)]
    for j, v in enumerate(assignment, start=1):
        pre[v].append(j)

    for v in range(n):
        if not pre[v]:
            return f"NotSurjective({v})"
    for v in range(n):
        if len(pre[v]) != diagram.label_capacity(v):
            return f"SizeMismatch({v})"

    minima = [min(pre[v]) for v in range(n)]
    for v in range(n):
        points = [j for j in pre[v] if j not in lset]
        if len(points) > 1:
            return f"TwoPoints({v})"
        if diagram.is_white(v):
            if points and points[0] != minima[v]:
                return f"PointNotMin({v})"
        else:
            bar = max(minima[u] for u in diagram.adj[v])
            large = [j for j in pre[v] if j > bar]
            if len(large) > 1:
                return f"TwoLargeElements({v})"
            if large and points:
                return f"LargeElementIsPoint({v})"
    return None


def _centroids(adj: Sequence[Sequence[int]]) -> list[int]:
    n = len(adj)
    if n == 1:
        return [0]
    deg = [len(a) for a in adj]
    layer = [v for v in range(n) if deg[v] <= 1]
    removed = len(layer)
    while removed < n:
        nxt = []
        for v in layer:
            deg[v] = 0
            for u in adj[v]:
                if deg[u] > 0:
                    deg[u] -= 1
                    if deg[u] == 1:
                        nxt.append(u)
        removed += len(nxt)
        layer = nxt
    return sorted(layer)


def _ahu_encode(diagram: FloorDiagram, payload, root: int) -> tuple:
    # Iterative post-order to avoid recursion limits on path-like trees.
    enc: dict[int, tuple] = {}
    stack: list[tuple[int, int, bool]] = [(root, -1, False)]
    while stack:
        v, parent, expanded = stack.pop()
        if expanded:
            children = sorted(enc[u] for u in diagram.adj[v] if u != parent)
            enc[v] = (payload(v), tuple(children))
        else:
            stack.append((v, parent, True))
            for u in diagram.adj[v]:
                if u != parent:
                    stack.append((u, v, False))
    return enc[root]


def canonical_key(diagram: FloorDiagram, marking: Optional[Marking] = None) -> bytes:
    """Canonical byte string: equal iff the (marked) diagrams are isomorphic.

    AHU-style rooted encoding minimized over the tree centroids; the vertex
    payload is (color, divergence) plus the sorted assigned labels when a
    marking is supplied.
    """
    if marking is None and diagram._key is not None:
        return diagram._key
    if marking is None:
        payload = lambda v: (diagram.colors[v], diagram.div[v])
    else:
        pre = marking.preimages(diagram.n_vertices)
        payload = lambda v: (diagram.colors[v], diagram.div[v], tuple(pre[v]))
    best = min(_ahu_encode(diagram, payload, c) for c in _centroids(diagram.adj))
    key = repr(best).encode()
    if marking is None:
        diagram._key = key
    return key


def automorphisms(diagram: FloorDiagram) -> list[tuple[int, ...]]:
    """All color-, divergence-, and adjacency-preserving vertex permutations."""
    n = diagram.n_vertices
    payload = [(diagram.colors[v], diagram.div[v], diagram.valence(v)) for v in range(n)]
    edge_set = {frozenset(e) for e in diagram.edges}
    result: list[tuple[int, ...]] = []
    image: list[int] = [-1] * n

    def extend(v: int, used: set[int]) -> None:
        if v == n:
            result.append(tuple(image))
            return
        for w in range(n):
            if w in used or payload[w] != payload[v]:
                continue
            ok = True
            for u in diagram.adj[v]:
                if u < v and frozenset((image[u], w)) not in edge_set:
                    ok = False
                    break
            if ok:
                image[v] = w
                used.add(w)
                extend(v + 1, used)
                used.remove(w)
        image[v] = -1

    extend(0, set())
    return result
