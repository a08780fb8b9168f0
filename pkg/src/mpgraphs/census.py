"""Ground-truth enumeration and executable theorem checkers.

The Petersen census is pure brute force over all 5-subsets of matching
edges; no crossing-graph shortcut is used anywhere (whether every witness
through an anchor arises from an induced P4 there is an open converse, so
such a shortcut could silently under-count).
"""

from __future__ import annotations

import csv
import io
import itertools
import multiprocessing
from dataclasses import dataclass
from math import comb, factorial
from typing import Sequence

import numpy as np

from .core import (
    FourCycle,
    MarkedPermutationGraph,
    _check_index,
    enumerate_m_c4,
    is_petersen,
    suppress_match,
    validate,
)
from .crossing import build_crossing_graph
from .errors import ExhaustedAttempts, OutOfScanRange
from .witness import PetersenWitness, find_p10_through

# Verdict of is_petersen(suppress_match(G, X)) for |X| = 5, memoized on the
# subset's relative-order profile: the suppressed multigraph is two
# 5-cycles (the subset in A-cyclic order, its image in A'-cyclic order)
# joined by the matching, so up to isomorphism it depends only on how the
# sigma-images rank against the sorted subset.  Every cached verdict is
# first computed by the real suppress-and-check pipeline.
_TAU_VERDICT: dict[tuple[int, ...], bool] = {}


def _subset_is_petersen(G: MarkedPermutationGraph, X: tuple[int, ...]) -> bool:
    svals = [G.sigma[x] for x in X]
    order = sorted(range(5), key=svals.__getitem__)
    tau = [0] * 5
    for rank, pos in enumerate(order):
        tau[pos] = rank
    key = tuple(tau)
    verdict = _TAU_VERDICT.get(key)
    if verdict is None:
        verdict = is_petersen(suppress_match(G, X))
        _TAU_VERDICT[key] = verdict
    return verdict


def _p10_range_worker(args: tuple[int, tuple[int, ...], int, int]) -> list[tuple[int, ...]]:
    m, sigma, start, stop = args
    G = MarkedPermutationGraph(m, sigma)
    subsets = itertools.islice(itertools.combinations(range(m), 5), start, stop)
    return [X for X in subsets if _subset_is_petersen(G, X)]


def enumerate_m_p10(G: MarkedPermutationGraph, jobs: int = 1) -> list[PetersenWitness]:
    """All 5-subsets whose match-subgraph suppresses to the Petersen graph,
    in lexicographic order.  Empty when m < 5.

    With jobs > 1 the subset stream is split into contiguous ranges worked
    in parallel; concatenating the ranges preserves the serial order, so
    output is identical for any job count.
    """
    m = G.m
    if m < 5:
        return []
    total = comb(m, 5)
    if jobs <= 1 or total < 5000:
        return [
            X
            for X in itertools.combinations(range(m), 5)
            if _subset_is_petersen(G, X)
        ]
    bounds = [total * i // jobs for i in range(jobs + 1)]
    tasks = [(m, G.sigma, bounds[i], bounds[i + 1]) for i in range(jobs)]
    with multiprocessing.Pool(jobs) as pool:
        chunks = pool.map(_p10_range_worker, tasks)
    return [X for chunk in chunks for X in chunk]


def count_per_edge(G: MarkedPermutationGraph, witnesses: Sequence[PetersenWitness] | None = None) -> list[int]:
    """witnesses-containing count per A-index; sums to 5x the census size."""
    if witnesses is None:
        witnesses = enumerate_m_p10(G)
    counts = [0] * G.m
    for X in witnesses:
        for x in X:
            counts[x] += 1
    return counts


# ---------------------------------------------------------------------------
# Checkers
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ZhangVerdict:
    ok: bool
    c4_count: int
    p10_count: int

    def to_json_dict(self) -> dict:
        return {"lemma": "zhang", "ok": self.ok, "c4_count": self.c4_count, "p10_count": self.p10_count}


def check_zhang(
    G: MarkedPermutationGraph,
    witnesses: Sequence[PetersenWitness] | None = None,
) -> ZhangVerdict:
    """Every instance has two matched 4-cycles or a Petersen subdivision."""
    c4 = len(enumerate_m_c4(G))
    p10 = len(enumerate_m_p10(G) if witnesses is None else witnesses)
    return ZhangVerdict(ok=(c4 >= 2 or p10 >= 1), c4_count=c4, p10_count=p10)


@dataclass(frozen=True)
class LowerBoundVerdict:
    applicable: bool
    ok: bool
    p10_count: int
    required: int

    def to_json_dict(self) -> dict:
        return {
            "lemma": "lower",
            "applicable": self.applicable,
            "ok": self.ok,
            "p10_count": self.p10_count,
            "required": self.required,
        }


def check_lower_bound(
    G: MarkedPermutationGraph,
    witnesses: Sequence[PetersenWitness] | None = None,
) -> LowerBoundVerdict:
    """On 4-cycle-free instances with at least 40 vertices, the census must
    reach n/2 - 4 = m - 4."""
    applicable = G.n >= 40 and not enumerate_m_c4(G)
    p10 = len(enumerate_m_p10(G) if witnesses is None else witnesses)
    required = G.m - 4
    return LowerBoundVerdict(
        applicable=applicable,
        ok=(not applicable) or p10 >= required,
        p10_count=p10,
        required=required,
    )


@dataclass(frozen=True)
class ReplaceVerdict:
    ok: bool
    branch: str | None  # "shared_witness" | "swap_equivalent"
    counterexample: tuple[int, ...] | None

    def to_json_dict(self) -> dict:
        return {
            "lemma": "replace",
            "ok": self.ok,
            "branch": self.branch,
            "counterexample": list(self.counterexample) if self.counterexample else None,
        }


def check_replace(
    G: MarkedPermutationGraph,
    a: int,
    b: int,
    witnesses: Sequence[PetersenWitness] | None = None,
) -> ReplaceVerdict:
    """Either some witness holds both edges, or the two edges are freely
    interchangeable inside witnesses: for every 4-set F avoiding both,
    F+{a} certifies iff F+{b} does."""
    _check_index(G, a)
    _check_index(G, b)
    if a == b:
        raise ValueError("edges must be distinct")
    if witnesses is None:
        witnesses = enumerate_m_p10(G)
    if any(a in X and b in X for X in witnesses):
        return ReplaceVerdict(ok=True, branch="shared_witness", counterexample=None)
    rest = [v for v in range(G.m) if v != a and v != b]
    for F in itertools.combinations(rest, 4):
        with_a = _subset_is_petersen(G, tuple(sorted(F + (a,))))
        with_b = _subset_is_petersen(G, tuple(sorted(F + (b,))))
        if with_a != with_b:
            return ReplaceVerdict(ok=False, branch=None, counterexample=F)
    return ReplaceVerdict(ok=True, branch="swap_equivalent", counterexample=None)


@dataclass(frozen=True)
class RedrawingVerdict:
    ok: bool
    failing_clause: int | None
    counterexample: tuple[int, ...] | None

    def to_json_dict(self) -> dict:
        return {
            "lemma": "redrawing",
            "ok": self.ok,
            "failing_clause": self.failing_clause,
            "counterexample": list(self.counterexample) if self.counterexample else None,
        }


def check_redrawing(G: MarkedPermutationGraph, a: int, b: int) -> RedrawingVerdict:
    """Re-anchoring rule: (i) a~x in H_b iff b~x in H_a; (ii) x~y in H_b
    iff an odd number of bx, by, xy are edges of H_a."""
    _check_index(G, a)
    _check_index(G, b)
    if a == b:
        raise ValueError("anchors must be distinct")
    Ha = build_crossing_graph(G, a)
    Hb = build_crossing_graph(G, b)
    others = [v for v in range(G.m) if v not in (a, b)]
    for x in others:
        if Hb.has_edge(a, x) != Ha.has_edge(b, x):
            return RedrawingVerdict(ok=False, failing_clause=1, counterexample=(x,))
    for x, y in itertools.combinations(others, 2):
        odd = (
            int(Ha.has_edge(b, x)) + int(Ha.has_edge(b, y)) + int(Ha.has_edge(x, y))
        ) % 2 == 1
        if Hb.has_edge(x, y) != odd:
            return RedrawingVerdict(ok=False, failing_clause=2, counterexample=(x, y))
    return RedrawingVerdict(ok=True, failing_clause=None, counterexample=None)


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CensusReport:
    instance_id: str
    m: int
    four_cycles: tuple[FourCycle, ...]
    witnesses: tuple[PetersenWitness, ...]
    per_edge: tuple[int, ...]
    zhang_ok: bool
    lower_bound_applicable: bool
    lower_bound_ok: bool

    @property
    def c4_count(self) -> int:
        return len(self.four_cycles)

    @property
    def p10_count(self) -> int:
        return len(self.witnesses)

    def to_json_dict(self) -> dict:
        return {
            "instance": self.instance_id,
            "m": self.m,
            "c4_count": self.c4_count,
            "p10_count": self.p10_count,
            "c4_list": [[c.i, c.j] for c in self.four_cycles],
            "p10_list": [list(X) for X in self.witnesses],
            "per_edge_counts": list(self.per_edge),
            "zhang_ok": self.zhang_ok,
            "lower_bound_applicable": self.lower_bound_applicable,
            "lower_bound_ok": self.lower_bound_ok,
        }


def census(G: MarkedPermutationGraph, jobs: int = 1) -> CensusReport:
    """Full ground-truth report: all matched 4-cycles, all witnesses,
    per-edge counts, and the standing theorem flags."""
    c4s = tuple(enumerate_m_c4(G))
    wits = tuple(enumerate_m_p10(G, jobs=jobs))
    per_edge = tuple(count_per_edge(G, wits))
    zh = check_zhang(G, wits)
    lb = check_lower_bound(G, wits)
    return CensusReport(
        instance_id=G.to_text(),
        m=G.m,
        four_cycles=c4s,
        witnesses=wits,
        per_edge=per_edge,
        zhang_ok=zh.ok,
        lower_bound_applicable=lb.applicable,
        lower_bound_ok=lb.ok,
    )


@dataclass(frozen=True)
class ScanRow:
    instance_index: int
    sigma: tuple[int, ...]
    c4_count: int
    p10_count: int
    violations: int


@dataclass(frozen=True)
class ScanReport:
    m: int
    instance_count: int
    rows: tuple[ScanRow, ...]
    violations: tuple[dict, ...]
    witness_runs: int

    @property
    def violation_count(self) -> int:
        return len(self.violations)

    def to_json_dict(self) -> dict:
        return {
            "m": self.m,
            "instance_count": self.instance_count,
            "witness_runs": self.witness_runs,
            "violation_count": self.violation_count,
            "violations": list(self.violations),
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["m", "instance_index", "c4_count", "p10_count", "violations"])
        for row in self.rows:
            writer.writerow([self.m, row.instance_index, row.c4_count, row.p10_count, row.violations])
        return buf.getvalue()


def _qualifying_edges(G: MarkedPermutationGraph, c4s: Sequence[FourCycle]) -> list[int]:
    """Edges contained in every matched 4-cycle (all edges when there are
    none): the hypothesis of the main extraction theorem."""
    edges = set(range(G.m))
    for c4 in c4s:
        edges &= {c4.i, c4.j}
        if not edges:
            break
    return sorted(edges)


def _scan_instance(
    index: int, G: MarkedPermutationGraph
) -> tuple[ScanRow, list[dict], int]:
    c4s = enumerate_m_c4(G)
    wits = enumerate_m_p10(G)
    wit_set = set(wits)
    violations: list[dict] = []
    if not (len(c4s) >= 2 or len(wits) >= 1):
        violations.append(
            {"instance_index": index, "sigma": list(G.sigma), "kind": "zhang_fail"}
        )
    runs = 0
    for e in _qualifying_edges(G, c4s):
        runs += 1
        try:
            X, _trace = find_p10_through(G, e)
        except Exception as exc:  # noqa: BLE001 - scans must record, not crash
            violations.append(
                {
                    "instance_index": index,
                    "sigma": list(G.sigma),
                    "kind": "witness_error",
                    "edge": e,
                    "detail": repr(exc),
                }
            )
            continue
        if e not in X or X not in wit_set:
            violations.append(
                {
                    "instance_index": index,
                    "sigma": list(G.sigma),
                    "kind": "witness_unsound",
                    "edge": e,
                    "witness": list(X),
                }
            )
    row = ScanRow(index, G.sigma, len(c4s), len(wits), len(violations))
    return row, violations, runs


def _scan_range_worker(args: tuple[int, int, int]) -> tuple[list[ScanRow], list[dict], int]:
    m, start, stop = args
    rows: list[ScanRow] = []
    violations: list[dict] = []
    runs = 0
    perms = itertools.islice(itertools.permutations(range(m)), start, stop)
    for offset, sigma in enumerate(perms):
        row, viol, r = _scan_instance(start + offset, MarkedPermutationGraph(m, sigma))
        rows.append(row)
        violations.extend(viol)
        runs += r
    return rows, violations, runs


def exhaustive_scan(m: int, jobs: int = 1) -> ScanReport:
    """Run every m! instance through the zhang check and, for every edge
    satisfying the extraction precondition, the witness engine.  Symmetry
    deduplication is deliberately not applied: correctness over speed."""
    if not 3 <= m <= 8:
        raise OutOfScanRange(f"scan supports 3 <= m <= 8, got {m}", m=m)
    total = factorial(m)
    if jobs <= 1 or total < 1000:
        rows, violations, runs = _scan_range_worker((m, 0, total))
    else:
        bounds = [total * i // jobs for i in range(jobs + 1)]
        tasks = [(m, bounds[i], bounds[i + 1]) for i in range(jobs)]
        with multiprocessing.Pool(jobs) as pool:
            parts = pool.map(_scan_range_worker, tasks)
        rows = [row for part in parts for row in part[0]]
        violations = [v for part in parts for v in part[1]]
        runs = sum(part[2] for part in parts)
    return ScanReport(
        m=m,
        instance_count=total,
        rows=tuple(rows),
        violations=tuple(violations),
        witness_runs=runs,
    )


def random_instance(
    m: int,
    seed: int,
    require_c4_free: bool = False,
    max_attempts: int = 1000,
) -> MarkedPermutationGraph:
    """Uniform random sigma from a counter-based Philox stream, optionally
    rejection-sampled until no matched 4-cycle remains."""
    rng = np.random.Generator(np.random.Philox(key=seed))
    for _ in range(max_attempts):
        G = validate(m, [int(v) for v in rng.permutation(m)])
        if not require_c4_free or not enumerate_m_c4(G):
            return G
    raise ExhaustedAttempts(
        f"no 4-cycle-free instance with m={m} in {max_attempts} attempts",
        m=m,
        seed=seed,
        attempts=max_attempts,
    )
