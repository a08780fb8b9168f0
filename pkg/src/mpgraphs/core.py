"""Marked permutation graphs: encoding, validation, elementary structure.

An instance is the pair ``(m, sigma)``: two chordless m-cycles
(A-side ``0-1-...-(m-1)-0`` and A'-side likewise) joined by the perfect
matching ``i -- sigma[i]``.  Everything downstream (crossing graphs,
witness extraction, censuses) works on this encoding.
"""

from __future__ import annotations

import itertools
from collections import Counter, deque
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, NamedTuple, Sequence

from .errors import (
    IndexOutOfRange,
    InstanceTextError,
    LengthMismatch,
    NoCycle,
    NotAPermutation,
    TooFewEdges,
    TooSmall,
)


class Side(Enum):
    A = "A"
    A_PRIME = "A'"

    def other(self) -> "Side":
        return Side.A_PRIME if self is Side.A else Side.A


@dataclass(frozen=True)
class VertexRef:
    """One endpoint of a matching edge: a side plus an index mod m."""

    side: Side
    index: int


@dataclass(frozen=True)
class Arc:
    """A traversal along one cycle in its fixed orientation, endpoints
    inclusive.  ``start == end`` denotes the single vertex."""

    side: Side
    start: int
    end: int

    def vertices(self, m: int) -> tuple[int, ...]:
        span = (self.end - self.start) % m
        return tuple((self.start + t) % m for t in range(span + 1))

    def to_json_dict(self) -> dict:
        return {"side": self.side.value, "start": self.start, "end": self.end}


class FourCycle(NamedTuple):
    """A matched 4-cycle, keyed by its A-side index pair.

    Invariant: ``j == (i + 1) % m`` and ``sigma[j] == sigma[i] +- 1 (mod m)``;
    the A'-side pair is derived from sigma, never stored.
    """

    i: int
    j: int

    def contains_edge(self, e: int) -> bool:
        return e == self.i or e == self.j


@dataclass(frozen=True)
class MarkedPermutationGraph:
    """Immutable instance; construct through :func:`validate`."""

    m: int
    sigma: tuple[int, ...]

    @property
    def n(self) -> int:
        return 2 * self.m

    def inverse(self) -> tuple[int, ...]:
        inv = [0] * self.m
        for i, v in enumerate(self.sigma):
            inv[v] = i
        return tuple(inv)

    def to_text(self) -> str:
        return f"{self.m} " + " ".join(str(v) for v in self.sigma)

    def __repr__(self) -> str:  # compact; sigma can be long
        return f"MarkedPermutationGraph({self.m}, {list(self.sigma)})"


def validate(m: int, sigma: Sequence[int]) -> MarkedPermutationGraph:
    """Check the (m, sigma) invariants and return the immutable instance.

    Raises TooSmall, LengthMismatch or NotAPermutation with the offending
    datum in the certificate.
    """
    if m < 3:
        raise TooSmall(f"half-order m={m} below minimum 3", m=m)
    sigma = tuple(int(v) for v in sigma)
    if len(sigma) != m:
        raise LengthMismatch(
            f"sigma has {len(sigma)} entries, expected {m}",
            m=m,
            length=len(sigma),
        )
    seen = set()
    for i, v in enumerate(sigma):
        if not 0 <= v < m:
            raise NotAPermutation(f"sigma[{i}]={v} out of range", index=i, value=v)
        if v in seen:
            raise NotAPermutation(f"duplicate value {v} at index {i}", index=i, value=v)
        seen.add(v)
    return MarkedPermutationGraph(m, sigma)


# ---------------------------------------------------------------------------
# Text instance format: integer tokens, first is m, then m sigma entries.
# Lines starting with '#' are comments; a file may hold several instances.
# ---------------------------------------------------------------------------

def parse_instances(text: str) -> list[MarkedPermutationGraph]:
    tokens: list[int] = []
    for line in text.splitlines():
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        for tok in stripped.split():
            try:
                tokens.append(int(tok))
            except ValueError:
                raise InstanceTextError(f"non-integer token {tok!r}", token=tok) from None
    instances = []
    pos = 0
    while pos < len(tokens):
        m = tokens[pos]
        if m < 0 or pos + 1 + m > len(tokens):
            raise InstanceTextError(
                f"truncated instance: declared m={m} with {len(tokens) - pos - 1} entries left",
                m=m,
            )
        instances.append(validate(m, tokens[pos + 1 : pos + 1 + m]))
        pos += 1 + m
    if not instances:
        raise InstanceTextError("no instance found in input", token=None)
    return instances


def parse_instance(text: str) -> MarkedPermutationGraph:
    return parse_instances(text)[0]


PRISM = validate(3, [0, 1, 2])
PETERSEN = validate(5, [0, 2, 4, 1, 3])


def _check_index(G: MarkedPermutationGraph, i: int, what: str = "A-index") -> None:
    if not 0 <= i < G.m:
        raise IndexOutOfRange(f"{what} {i} outside 0..{G.m - 1}", index=i, m=G.m)


def friend(G: MarkedPermutationGraph, v: VertexRef) -> VertexRef:
    """The matching neighbour; an involution that crosses sides."""
    _check_index(G, v.index, f"{v.side.value}-index")
    if v.side is Side.A:
        return VertexRef(Side.A_PRIME, G.sigma[v.index])
    return VertexRef(Side.A, G.inverse()[v.index])


def enumerate_m_c4(G: MarkedPermutationGraph) -> list[FourCycle]:
    """All matched 4-cycles, one per qualifying A-side pair, sorted by i.

    The +-1 test is taken mod m so m = 3 and m = 4 degenerate uniformly
    (at m = 3 any two distinct residues are cyclically adjacent).
    """
    m, sigma = G.m, G.sigma
    out = []
    for i in range(m):
        j = (i + 1) % m
        d = (sigma[j] - sigma[i]) % m
        if d == 1 or d == m - 1:
            out.append(FourCycle(i, j))
    return out


# ---------------------------------------------------------------------------
# Match-subgraph suppression
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SuppressedGraph:
    """Cubic multigraph left after suppressing degree-2 vertices of a
    match-subgraph.  Loops are forbidden by construction (|X| >= 2);
    parallel edges are meaningful and must be preserved."""

    n: int
    edges: tuple[tuple[int, int], ...]
    labels: tuple[str, ...] = ()

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg


def suppress_match(G: MarkedPermutationGraph, X: Iterable[int]) -> SuppressedGraph:
    """Two m-cycles plus the matching edges indexed by X, with every
    degree-2 vertex suppressed.

    Each cycle collapses to a cyclic sequence of arcs through its retained
    vertices; for |X| = 2 the two arcs on a side become a parallel pair.
    """
    xs = sorted(set(X))
    for x in xs:
        _check_index(G, x)
    if len(xs) < 2:
        raise TooFewEdges(f"need at least 2 matching edges, got {len(xs)}", X=xs)
    k = len(xs)
    svals = sorted(G.sigma[x] for x in xs)
    # Vertex ids: 0..k-1 the retained A-vertices (ascending), k..2k-1 the
    # retained A'-vertices (ascending sigma values).
    a_id = {x: i for i, x in enumerate(xs)}
    ap_id = {v: k + i for i, v in enumerate(svals)}
    edges: list[tuple[int, int]] = []
    for ids in (tuple(a_id[x] for x in xs), tuple(ap_id[v] for v in svals)):
        if k == 2:
            edges.append((ids[0], ids[1]))
            edges.append((ids[0], ids[1]))
        else:
            for t in range(k):
                u, v = ids[t], ids[(t + 1) % k]
                edges.append((min(u, v), max(u, v)))
    for x in xs:
        edges.append((a_id[x], ap_id[G.sigma[x]]))
    labels = tuple(f"A{x}" for x in xs) + tuple(f"A'{v}" for v in svals)
    return SuppressedGraph(2 * k, tuple(sorted(edges)), labels)


def girth(S: SuppressedGraph) -> int:
    """Exact girth of a loop-free multigraph.

    A parallel pair is a 2-cycle.  Longer cycles are found by, for each
    distinct endpoint pair, a BFS between the endpoints that avoids one
    edge of that pair: every cycle uses some edge, so the minimum over
    pairs of 1 + that detour distance is exact.
    """
    if not S.edges:
        raise NoCycle("no edges", n=S.n)
    mult = Counter((min(u, v), max(u, v)) for u, v in S.edges)
    if any(c >= 2 for c in mult.values()):
        return 2
    adj: list[list[int]] = [[] for _ in range(S.n)]
    for u, v in mult:
        adj[u].append(v)
        adj[v].append(u)
    best = None
    for u, v in mult:
        # shortest u-v path avoiding the edge uv itself
        dist = [-1] * S.n
        dist[u] = 0
        q = deque([u])
        while q:
            w = q.popleft()
            if best is not None and dist[w] + 1 >= best:
                continue
            for z in adj[w]:
                if w == u and z == v:
                    continue
                if z == u and w == v:
                    continue
                if dist[z] == -1:
                    dist[z] = dist[w] + 1
                    if z == v:
                        q.clear()
                        break
                    q.append(z)
        if dist[v] != -1:
            cand = dist[v] + 1
            if best is None or cand < best:
                best = cand
                if best == 3:
                    return 3
    if best is None:
        raise NoCycle("multigraph is acyclic", n=S.n, edge_count=len(S.edges))
    return best


def is_petersen(S: SuppressedGraph) -> bool:
    """Recognition through the unique (3,5)-cage: 10 vertices, 3-regular,
    loop-free, girth exactly 5.  Connectivity is implied (a second
    component would itself need 10 vertices)."""
    if S.n != 10 or len(S.edges) != 15:
        return False
    if any(u == v for u, v in S.edges):
        return False
    if any(d != 3 for d in S.degrees()):
        return False
    return girth(S) == 5


# ---------------------------------------------------------------------------
# Symmetry operations. Census counts are invariant under all four.
# ---------------------------------------------------------------------------

def rotate_a(G: MarkedPermutationGraph, k: int) -> MarkedPermutationGraph:
    """Shift the A-side basepoint: old vertex k becomes new vertex 0."""
    m = G.m
    return validate(m, [G.sigma[(i + k) % m] for i in range(m)])


def rotate_a_prime(G: MarkedPermutationGraph, k: int) -> MarkedPermutationGraph:
    """Shift the A'-side basepoint: old vertex k' becomes new vertex 0'."""
    m = G.m
    return validate(m, [(G.sigma[i] - k) % m for i in range(m)])


def reflect(G: MarkedPermutationGraph) -> MarkedPermutationGraph:
    """Reverse both cycle orientations, keeping both basepoints."""
    m = G.m
    return validate(m, [(-G.sigma[(-i) % m]) % m for i in range(m)])


def swap_sides(G: MarkedPermutationGraph) -> MarkedPermutationGraph:
    """Exchange the roles of A and A'; sigma becomes its inverse."""
    return validate(G.m, G.inverse())


SYMMETRY_OPS = ("rotate_a", "rotate_a_prime", "reflect", "swap_sides")


def apply_symmetry(G: MarkedPermutationGraph, op: str, k: int = 0) -> MarkedPermutationGraph:
    if op == "rotate_a":
        return rotate_a(G, k)
    if op == "rotate_a_prime":
        return rotate_a_prime(G, k)
    if op == "reflect":
        return reflect(G)
    if op == "swap_sides":
        return swap_sides(G)
    raise ValueError(f"unknown symmetry op {op!r}")


symmetry = apply_symmetry


def relabel_witness(G: MarkedPermutationGraph, X: Iterable[int], op: str, k: int = 0) -> tuple[int, ...]:
    """Map a set of matching-edge indices through a symmetry op, so that
    witnesses of G correspond to witnesses of apply_symmetry(G, op, k)."""
    m = G.m
    if op == "rotate_a":
        return tuple(sorted((x - k) % m for x in X))
    if op == "rotate_a_prime":
        return tuple(sorted(X))
    if op == "reflect":
        return tuple(sorted((-x) % m for x in X))
    if op == "swap_sides":
        return tuple(sorted(G.sigma[x] for x in X))
    raise ValueError(f"unknown symmetry op {op!r}")


# ---------------------------------------------------------------------------
# Cyclic edge-connectivity
# ---------------------------------------------------------------------------

GraphEdge = tuple[str, int]  # ("A", i) | ("A'", i) cycle edges, ("M", i) matching


def graph_edges(G: MarkedPermutationGraph) -> list[GraphEdge]:
    m = G.m
    return (
        [("A", i) for i in range(m)]
        + [("A'", i) for i in range(m)]
        + [("M", i) for i in range(m)]
    )


def _edge_endpoints(G: MarkedPermutationGraph, e: GraphEdge) -> tuple[int, int]:
    # vertices 0..m-1 are the A-cycle, m..2m-1 the A'-cycle
    kind, i = e
    m = G.m
    if kind == "A":
        return i, (i + 1) % m
    if kind == "A'":
        return m + i, m + (i + 1) % m
    return i, m + G.sigma[i]


def find_cyclic_cut(G: MarkedPermutationGraph, max_size: int = 4) -> tuple[GraphEdge, ...] | None:
    """Smallest edge set of size <= max_size whose removal leaves at least
    two components that each contain a cycle, or None.  Exhaustive over all
    C(3m, <=4) subsets; sizes ascend, so the first hit is minimum."""
    all_edges = graph_edges(G)
    endpoints = [_edge_endpoints(G, e) for e in all_edges]
    nv = 2 * G.m
    idx = range(len(all_edges))
    for size in range(1, max_size + 1):
        for cut in itertools.combinations(idx, size):
            cutset = set(cut)
            parent = list(range(nv))

            def root(x: int) -> int:
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            for eidx, (u, v) in enumerate(endpoints):
                if eidx in cutset:
                    continue
                ru, rv = root(u), root(v)
                if ru != rv:
                    parent[ru] = rv
            vcount: Counter = Counter(root(v) for v in range(nv))
            ecount: Counter = Counter()
            for eidx, (u, v) in enumerate(endpoints):
                if eidx not in cutset:
                    ecount[root(u)] += 1
            cyclic = sum(1 for r, vc in vcount.items() if ecount[r] >= vc)
            if cyclic >= 2:
                return tuple(all_edges[i] for i in cut)
    return None


def is_cyclically_5_edge_connected(G: MarkedPermutationGraph) -> bool:
    return find_cyclic_cut(G) is None
