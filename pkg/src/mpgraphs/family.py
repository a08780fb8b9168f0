"""The extremal family G_k: 4-cycle-free instances whose Petersen census
stays linear (6k+6 on 6k+14 vertices).

The matching splits into 2k vertical edges, k-1 skew edges and eight
special edges; the special edges form two groups of four, and every
witness is one full group plus one outside edge.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .census import enumerate_m_p10
from .core import MarkedPermutationGraph, enumerate_m_c4, validate
from .errors import IndexOutOfRange, InvalidK
from .witness import PetersenWitness


class EdgeClass(Enum):
    VERTICAL = "vertical"
    SKEW = "skew"
    SPECIAL = "special"


@dataclass(frozen=True)
class EdgeClassification:
    kind: EdgeClass
    group: int | None = None  # 1 or 2 for special edges

    def to_json_dict(self) -> dict:
        out: dict = {"class": self.kind.value}
        if self.group is not None:
            out["group"] = self.group
        return out


@dataclass(frozen=True)
class GkInstance:
    k: int
    graph: MarkedPermutationGraph
    classification: tuple[EdgeClassification, ...]

    @property
    def m(self) -> int:
        return self.graph.m

    def special_group(self, group: int) -> tuple[int, ...]:
        return tuple(
            i for i, c in enumerate(self.classification)
            if c.kind is EdgeClass.SPECIAL and c.group == group
        )

    def classification_json(self) -> dict:
        return {
            "k": self.k,
            "m": self.m,
            "vertical": [i for i, c in enumerate(self.classification) if c.kind is EdgeClass.VERTICAL],
            "skew": [i for i, c in enumerate(self.classification) if c.kind is EdgeClass.SKEW],
            "special_group_1": list(self.special_group(1)),
            "special_group_2": list(self.special_group(2)),
        }


def generate_gk(k: int) -> GkInstance:
    """Build (G_k, M_k) with m = 3k+7.

    0-based transcription of the 1-based construction tables:
      vertical  sigma[2i-2]    = i-1        for 1 <= i <= k
                sigma[2k+i+2]  = k+2i+2     for 1 <= i <= k
      skew      sigma[2i-1]    = 3k+3-2i    for 1 <= i <= k-1
      special   group 1 at indices 2k-1..2k+2   -> k+1, k+3, k, k+2
                group 2 at indices 3k+3..3k+6   -> 3k+4, 3k+6, 3k+3, 3k+5
    """
    if k < 1:
        raise InvalidK(f"family parameter must be >= 1, got {k}", k=k)
    m = 3 * k + 7
    sigma: list[int | None] = [None] * m
    cls: list[EdgeClassification | None] = [None] * m
    for i in range(1, k + 1):
        sigma[2 * i - 2] = i - 1
        cls[2 * i - 2] = EdgeClassification(EdgeClass.VERTICAL)
        sigma[2 * k + i + 2] = k + 2 * i + 2
        cls[2 * k + i + 2] = EdgeClassification(EdgeClass.VERTICAL)
    for i in range(1, k):
        sigma[2 * i - 1] = 3 * k + 3 - 2 * i
        cls[2 * i - 1] = EdgeClassification(EdgeClass.SKEW)
    group1 = {2 * k - 1: k + 1, 2 * k: k + 3, 2 * k + 1: k, 2 * k + 2: k + 2}
    group2 = {
        3 * k + 3: 3 * k + 4,
        3 * k + 4: 3 * k + 6,
        3 * k + 5: 3 * k + 3,
        3 * k + 6: 3 * k + 5,
    }
    for idx, val in group1.items():
        sigma[idx] = val
        cls[idx] = EdgeClassification(EdgeClass.SPECIAL, group=1)
    for idx, val in group2.items():
        sigma[idx] = val
        cls[idx] = EdgeClassification(EdgeClass.SPECIAL, group=2)
    assert None not in sigma and None not in cls
    return GkInstance(k=k, graph=validate(m, sigma), classification=tuple(cls))


def classify_edge(inst: GkInstance, i: int) -> EdgeClassification:
    if not 0 <= i < inst.m:
        raise IndexOutOfRange(f"edge index {i} outside 0..{inst.m - 1}", index=i, m=inst.m)
    return inst.classification[i]


@dataclass(frozen=True)
class GkVerdict:
    ok: bool
    k: int
    c4_count: int
    p10_count: int
    expected_p10: int
    bad_witnesses: tuple[PetersenWitness, ...]

    def to_json_dict(self) -> dict:
        return {
            "ok": self.ok,
            "k": self.k,
            "c4_count": self.c4_count,
            "p10_count": self.p10_count,
            "expected_p10": self.expected_p10,
            "bad_witnesses": [list(X) for X in self.bad_witnesses],
        }


def verify_gk(inst: GkInstance, jobs: int = 1) -> GkVerdict:
    """Census-verify the family claims: no matched 4-cycle, exactly 6k+6
    witnesses, and every witness is one full special group plus one edge
    outside that group.  Asserting the structure, not just the count,
    catches off-by-one transcription slips."""
    G = inst.graph
    c4 = len(enumerate_m_c4(G))
    wits = enumerate_m_p10(G, jobs=jobs)
    g1 = set(inst.special_group(1))
    g2 = set(inst.special_group(2))
    bad = tuple(
        X
        for X in wits
        if not (g1 <= set(X) or g2 <= set(X))
    )
    expected = 6 * inst.k + 6
    ok = c4 == 0 and len(wits) == expected and not bad
    return GkVerdict(
        ok=ok,
        k=inst.k,
        c4_count=c4,
        p10_count=len(wits),
        expected_p10=expected,
        bad_witnesses=bad,
    )
