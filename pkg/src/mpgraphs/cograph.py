"""Induced-P4 search and twin detection on crossing graphs.

Twins here use the adjacency-closed reading N(x)\\{y} = N(y)\\{x}, which
covers both non-adjacent (false) and adjacent (true) twins; with the
open-neighbourhood reading alone, complete graphs would have no twins at
all and the P4-free dichotomy below would fail on them.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .crossing import CrossingGraph
from .errors import InternalInvariantViolated, TooFewVertices


@dataclass(frozen=True)
class InducedPath4:
    """Induced path x-y-z-w: edges exactly xy, yz, zw."""

    x: int
    y: int
    z: int
    w: int

    def vertices(self) -> tuple[int, int, int, int]:
        return (self.x, self.y, self.z, self.w)


class TwinKind(Enum):
    FALSE_TWINS = "false_twins"  # non-adjacent
    TRUE_TWINS = "true_twins"  # adjacent


@dataclass(frozen=True)
class TwinPair:
    x: int
    y: int
    kind: TwinKind


def _path_order(H: CrossingGraph, quad: tuple[int, ...]) -> InducedPath4 | None:
    """If the 4 vertices induce a path, return it oriented from its
    smaller endpoint; otherwise None."""
    pairs = [(u, v) for i, u in enumerate(quad) for v in quad[i + 1 :]]
    edges = [(u, v) for u, v in pairs if H.has_edge(u, v)]
    if len(edges) != 3:
        return None
    deg = {v: 0 for v in quad}
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    ends = sorted(v for v in quad if deg[v] == 1)
    if len(ends) != 2 or sorted(deg.values()) != [1, 1, 2, 2]:
        return None  # 3 edges but wrong degrees: triangle plus isolated vertex
    x, w = ends
    y = next(v for v in quad if v not in (x, w) and H.has_edge(x, v))
    z = next(v for v in quad if v not in (x, y, w))
    if not (H.has_edge(y, z) and H.has_edge(z, w)):
        return None
    return InducedPath4(x, y, z, w)


def find_induced_p4(H: CrossingGraph) -> InducedPath4 | None:
    """Lexicographically smallest induced P4 (by sorted vertex set, then
    oriented from the smaller endpoint), or None if H is P4-free.
    Brute force over 4-subsets."""
    verts = H.vertices
    n = len(verts)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                for l in range(k + 1, n):
                    p = _path_order(H, (verts[i], verts[j], verts[k], verts[l]))
                    if p is not None:
                        return p
    return None


def is_twin_pair(H: CrossingGraph, x: int, y: int) -> bool:
    nx = set(H.neighbors(x)) - {y}
    ny = set(H.neighbors(y)) - {x}
    return nx == ny


def find_twins(H: CrossingGraph) -> TwinPair | None:
    """Lexicographically smallest twin pair, tagged true/false by
    adjacency; None if twin-free."""
    verts = H.vertices
    if len(verts) < 2:
        raise TooFewVertices(f"{len(verts)} vertex", vertices=list(verts))
    for i, x in enumerate(verts):
        for y in verts[i + 1 :]:
            if is_twin_pair(H, x, y):
                kind = TwinKind.TRUE_TWINS if H.has_edge(x, y) else TwinKind.FALSE_TWINS
                return TwinPair(x, y, kind)
    return None


def _p4_free_by_twin_elimination(H: CrossingGraph) -> bool:
    """Repeatedly delete one vertex of a twin pair; P4-free iff the graph
    reduces to a single vertex (an induced P4 never contains twins, so a
    deletion preserves the verdict)."""
    active = list(H.vertices)
    while len(active) > 1:
        found = None
        for i, x in enumerate(active):
            for y in active[i + 1 :]:
                nx = {v for v in active if v != x and v != y and H.has_edge(x, v)}
                ny = {v for v in active if v != x and v != y and H.has_edge(y, v)}
                if nx == ny:
                    found = x
                    break
            if found is not None:
                break
        if found is None:
            return False
        active.remove(found)
    return True


def is_p4_free(H: CrossingGraph) -> bool:
    """True iff no induced P4.  Always cross-checked against the
    twin-elimination procedure; disagreement would falsify the twin
    characterisation and aborts loudly."""
    brute = find_induced_p4(H) is None
    if len(H.vertices) >= 2:
        eliminated = _p4_free_by_twin_elimination(H)
        if brute != eliminated:
            raise InternalInvariantViolated(
                "P4 search and twin elimination disagree",
                anchor=H.anchor,
                edges=H.edges(),
                brute=brute,
                twin_elimination=eliminated,
            )
    return brute
