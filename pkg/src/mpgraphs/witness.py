"""Constructive extraction of a Petersen subdivision through a matching edge.

Given an edge contained in every matched 4-cycle, the engine alternates
two shrinking moves until a direct certificate appears:

* a matched 4-cycle through the edge is removed and its degree-2 ends
  suppressed (``c4_reduce``);
* otherwise, if the crossing graph has an induced P4, the anchor plus the
  path vertices are the witness (``p10_from_p4``);
* otherwise the crossing graph is a cograph, so it has a twin pair, and
  the instance contracts onto the twin-bounded arcs (``twin_contract``).

Every step records an index map, so the witness found downstream lifts to
the original instance, where it is re-verified before being returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Union

from .cograph import (
    InducedPath4,
    TwinKind,
    TwinPair,
    find_induced_p4,
    find_twins,
    is_twin_pair,
)
from .core import (
    Arc,
    MarkedPermutationGraph,
    Side,
    _check_index,
    enumerate_m_c4,
    is_petersen,
    suppress_match,
    validate,
)
from .crossing import build_crossing_graph
from .errors import (
    DegenerateArc,
    InternalInvariantViolated,
    NotAC4ThroughE,
    NotAnInducedP4,
    NotTwins,
    PreconditionViolated,
    TooSmall,
)

PetersenWitness = tuple[int, int, int, int, int]


@dataclass(frozen=True)
class C4ReduceStep:
    z: int

    def to_json_dict(self) -> dict:
        return {"step": "C4Reduce", "z": self.z}


@dataclass(frozen=True)
class TwinContractStep:
    a: int
    x: int
    y: int
    q_prime: Arc

    def to_json_dict(self) -> dict:
        return {
            "step": "TwinContract",
            "a": self.a,
            "x": self.x,
            "y": self.y,
            "q_prime": self.q_prime.to_json_dict(),
        }


@dataclass(frozen=True)
class P4FoundStep:
    a: int
    path: InducedPath4

    def to_json_dict(self) -> dict:
        return {"step": "P4Found", "a": self.a, "path": list(self.path.vertices())}


TraceStep = Union[C4ReduceStep, TwinContractStep, P4FoundStep]


@dataclass(frozen=True)
class ReductionTrace:
    """The proof steps behind a witness.  Each step's indices refer to the
    instance current at that point of a replay; the last step is P4Found."""

    steps: tuple[TraceStep, ...]

    def to_json_dict(self) -> list[dict]:
        return [s.to_json_dict() for s in self.steps]


def witness_report_dict(witness: PetersenWitness, trace: ReductionTrace) -> dict:
    return {"edges": list(witness), "trace": trace.to_json_dict()}


def p10_from_p4(G: MarkedPermutationGraph, a: int, p: InducedPath4) -> PetersenWitness:
    """Anchor plus the four path vertices certify a Petersen subdivision.

    The path must be an induced P4 of the crossing graph at ``a`` (checked;
    NotAnInducedP4 otherwise).  The two geometric cases behind this fact
    need not be distinguished: the result is verified by the suppression
    oracle and a failure would abort loudly.
    """
    _check_index(G, a, "anchor")
    H = build_crossing_graph(G, a)
    quad = p.vertices()
    if len(set(quad)) != 4 or any(v not in H.vertices for v in quad):
        raise NotAnInducedP4("path vertices must be 4 distinct non-anchor indices", path=list(quad), anchor=a)
    required = [(p.x, p.y), (p.y, p.z), (p.z, p.w)]
    forbidden = [(p.x, p.z), (p.x, p.w), (p.y, p.w)]
    for u, v in required:
        if not H.has_edge(u, v):
            raise NotAnInducedP4(f"missing edge {u}-{v}", path=list(quad), anchor=a, missing=[u, v])
    for u, v in forbidden:
        if H.has_edge(u, v):
            raise NotAnInducedP4(f"chord {u}-{v}", path=list(quad), anchor=a, chord=[u, v])
    X = tuple(sorted((a,) + quad))
    if not is_petersen(suppress_match(G, X)):
        raise InternalInvariantViolated(
            "induced P4 did not yield a Petersen subdivision",
            instance=G.to_text(),
            anchor=a,
            path=list(quad),
        )
    return X  # type: ignore[return-value]


class C4Reduction(NamedTuple):
    graph: MarkedPermutationGraph
    index_map: tuple[int, ...]  # new A-index -> old A-index


def c4_reduce(G: MarkedPermutationGraph, a: int, z: int) -> C4Reduction:
    """Remove matching edge z of the 4-cycle a,z,z',a' and suppress the two
    degree-2 ends.  Surviving A-indices keep their cyclic order, so
    witnesses lift through the returned index map unchanged."""
    _check_index(G, a, "edge")
    _check_index(G, z, "edge")
    if G.m == 3:
        raise TooSmall("cannot reduce below the 6-vertex instance", m=3)
    m, sigma = G.m, G.sigma
    if z not in ((a + 1) % m, (a - 1) % m) or (sigma[z] - sigma[a]) % m not in (1, m - 1):
        raise NotAC4ThroughE(f"edges {a} and {z} do not span a matched 4-cycle", a=a, z=z)
    survivors = [i for i in range(m) if i != z]
    sz = sigma[z]
    new_sigma = [sigma[i] - (1 if sigma[i] > sz else 0) for i in survivors]
    return C4Reduction(validate(m - 1, new_sigma), tuple(survivors))


class TwinContraction(NamedTuple):
    graph: MarkedPermutationGraph
    index_map: tuple[int, ...]  # new A-index -> old A-index
    x: int  # normalized: x on the arc from the anchor to y
    y: int
    q_prime: Arc


def twin_contract(G: MarkedPermutationGraph, a: int, pair: TwinPair) -> TwinContraction:
    """Contract onto {a} + arc x..y and its matched A'-path Q'.

    Q' runs x' to y' for non-adjacent twins and y' to x' for adjacent ones;
    either way the matching restricted to the kept arc lands exactly in Q'
    (asserted).  New cycle edges a-x, a-y, a'-(Q' ends) appear implicitly
    through the re-encoding.  The twin orientation is normalized here by
    rotated distance from the anchor.
    """
    _check_index(G, a, "anchor")
    m, sigma = G.m, G.sigma
    x, y = pair.x, pair.y
    for v in (x, y):
        _check_index(G, v, "twin vertex")
    if x == y or a in (x, y):
        raise NotTwins("twin vertices must be two distinct non-anchor indices", a=a, x=x, y=y)
    H = build_crossing_graph(G, a)
    if not is_twin_pair(H, x, y):
        raise NotTwins(f"{x} and {y} are not twins in the crossing graph at {a}", a=a, x=x, y=y)
    if (x - a) % m > (y - a) % m:
        x, y = y, x
    if (x - a) % m == 1 and (y - a) % m == m - 1:
        raise DegenerateArc(
            "arc from y back to x has no internal vertex besides the anchor",
            a=a,
            x=x,
            y=y,
        )
    adjacent = H.has_edge(x, y)
    a_part = [a] + list(Arc(Side.A, x, y).vertices(m))
    if adjacent:
        q_prime = Arc(Side.A_PRIME, sigma[y], sigma[x])
    else:
        q_prime = Arc(Side.A_PRIME, sigma[x], sigma[y])
    ap_part = [sigma[a]] + list(q_prime.vertices(m))
    if len(a_part) != len(ap_part) or set(sigma[v] for v in a_part) != set(ap_part):
        raise InternalInvariantViolated(
            "matching does not pair the kept arc with Q'",
            instance=G.to_text(),
            a=a,
            x=x,
            y=y,
            q_prime=q_prime.to_json_dict(),
        )
    ap_label = {v: i for i, v in enumerate(ap_part)}
    new_sigma = [ap_label[sigma[v]] for v in a_part]
    return TwinContraction(
        validate(len(a_part), new_sigma), tuple(a_part), x, y, q_prime
    )


def find_p10_through(
    G: MarkedPermutationGraph, e: int
) -> tuple[PetersenWitness, ReductionTrace]:
    """Certified Petersen subdivision through matching edge ``e``.

    Requires e to lie in every matched 4-cycle; otherwise
    PreconditionViolated carries a counterexample cycle.  The returned
    witness is re-verified in the original instance, and the trace replays
    to the same witness.  Running out of moves is impossible for valid
    inputs and raises InternalInvariantViolated.
    """
    _check_index(G, e, "edge")
    for c4 in enumerate_m_c4(G):
        if not c4.contains_edge(e):
            raise PreconditionViolated(
                f"matched 4-cycle ({c4.i},{c4.j}) avoids edge {e}",
                c4=[c4.i, c4.j],
                edge=e,
            )
    steps: list[TraceStep] = []
    cur = G
    a = e
    to_orig = tuple(range(G.m))  # current A-index -> original A-index
    while True:
        c4s = enumerate_m_c4(cur)
        for c4 in c4s:
            if not c4.contains_edge(a):
                raise InternalInvariantViolated(
                    "a reduction step broke the every-C4-through-e invariant",
                    instance=cur.to_text(),
                    edge=a,
                    c4=[c4.i, c4.j],
                    trace=[s.to_json_dict() for s in steps],
                )
        if cur.m == 3:
            raise InternalInvariantViolated(
                "reached the 6-vertex base case with the precondition intact",
                instance=cur.to_text(),
                edge=a,
            )
        if c4s:
            # deterministic choice: reduce the partner with smallest index
            z = min(c4.i if c4.j == a else c4.j for c4 in c4s)
            red = c4_reduce(cur, a, z)
            steps.append(C4ReduceStep(z))
            to_orig = tuple(to_orig[old] for old in red.index_map)
            a = red.index_map.index(a)
            cur = red.graph
            continue
        H = build_crossing_graph(cur, a)
        p4 = find_induced_p4(H)
        if p4 is not None:
            steps.append(P4FoundStep(a, p4))
            local = p10_from_p4(cur, a, p4)
            witness = tuple(sorted(to_orig[v] for v in local))
            if e not in witness or not is_petersen(suppress_match(G, witness)):
                raise InternalInvariantViolated(
                    "lifted witness failed re-verification in the original instance",
                    instance=G.to_text(),
                    edge=e,
                    witness=list(witness),
                    trace=[s.to_json_dict() for s in steps],
                )
            return witness, ReductionTrace(tuple(steps))  # type: ignore[return-value]
        twins = find_twins(H)
        if twins is None:
            raise InternalInvariantViolated(
                "crossing graph is P4-free yet has no twins",
                instance=cur.to_text(),
                anchor=a,
            )
        try:
            tc = twin_contract(cur, a, twins)
        except DegenerateArc as exc:
            raise InternalInvariantViolated(
                "degenerate twin arc in a C4-free instance",
                instance=cur.to_text(),
                anchor=a,
                certificate=exc.certificate,
            ) from exc
        steps.append(TwinContractStep(a, tc.x, tc.y, tc.q_prime))
        to_orig = tuple(to_orig[old] for old in tc.index_map)
        a = tc.index_map.index(a)
        cur = tc.graph


def replay_trace(
    G: MarkedPermutationGraph, e: int, trace: ReductionTrace
) -> PetersenWitness:
    """Re-apply the recorded steps from the original instance; the result
    must equal the witness the engine returned."""
    cur = G
    a = e
    to_orig = tuple(range(G.m))
    for step in trace.steps:
        if isinstance(step, C4ReduceStep):
            red = c4_reduce(cur, a, step.z)
            to_orig = tuple(to_orig[old] for old in red.index_map)
            a = red.index_map.index(a)
            cur = red.graph
        elif isinstance(step, TwinContractStep):
            if step.a != a:
                raise InternalInvariantViolated("trace anchor mismatch", expected=a, recorded=step.a)
            H = build_crossing_graph(cur, a)
            kind = TwinKind.TRUE_TWINS if H.has_edge(step.x, step.y) else TwinKind.FALSE_TWINS
            tc = twin_contract(cur, a, TwinPair(step.x, step.y, kind))
            to_orig = tuple(to_orig[old] for old in tc.index_map)
            a = tc.index_map.index(a)
            cur = tc.graph
        else:
            if step.a != a:
                raise InternalInvariantViolated("trace anchor mismatch", expected=a, recorded=step.a)
            local = p10_from_p4(cur, a, step.path)
            return tuple(sorted(to_orig[v] for v in local))  # type: ignore[return-value]
    raise InternalInvariantViolated("trace ended without P4Found", steps=len(trace.steps))
