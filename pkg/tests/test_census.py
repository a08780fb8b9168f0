import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mpgraphs import (
    PETERSEN,
    PRISM,
    apply_symmetry,
    census,
    check_lower_bound,
    check_redrawing,
    check_replace,
    check_zhang,
    count_per_edge,
    enumerate_m_c4,
    enumerate_m_p10,
    exhaustive_scan,
    generate_gk,
    is_petersen,
    random_instance,
    relabel_witness,
    suppress_match,
    validate,
)
from mpgraphs.census import _subset_is_petersen
from mpgraphs.errors import ExhaustedAttempts, OutOfScanRange

from .conftest import all_instances, instances


class TestEnumerateMP10:
    def test_petersen_single_witness(self):
        assert enumerate_m_p10(PETERSEN) == [(0, 1, 2, 3, 4)]

    def test_prism_empty(self):
        assert enumerate_m_p10(PRISM) == []

    def test_gk1_count(self, gk1):
        assert len(enumerate_m_p10(gk1.graph)) == 12

    def test_jobs_do_not_change_output(self, gk1):
        serial = enumerate_m_p10(gk1.graph, jobs=1)
        assert enumerate_m_p10(gk1.graph, jobs=2) == serial
        # C(19,5) = 11628 sits above the serial cutoff, so workers really run
        g = generate_gk(4).graph
        assert enumerate_m_p10(g, jobs=4) == enumerate_m_p10(g, jobs=1)

    def test_memoized_verdict_agrees_with_direct_exhaustively(self):
        for m in (5, 6):
            for G in all_instances(m):
                for X in itertools.combinations(range(m), 5):
                    assert _subset_is_petersen(G, X) == is_petersen(suppress_match(G, X))

    @given(instances(5, 12), st.data())
    @settings(max_examples=100, deadline=None)
    def test_memoized_verdict_agrees_with_direct_random(self, G, data):
        X = tuple(sorted(data.draw(st.permutations(list(range(G.m))).map(lambda p: p[:5]))))
        assert _subset_is_petersen(G, X) == is_petersen(suppress_match(G, X))


class TestCountPerEdge:
    def test_petersen_all_ones(self):
        assert count_per_edge(PETERSEN) == [1, 1, 1, 1, 1]

    def test_prism_all_zero(self):
        assert count_per_edge(PRISM) == [0, 0, 0]

    def test_gk1_counts(self, gk1):
        # verticals sit in one witness per group; each special edge sits in
        # all six witnesses of its own group plus one cross-group witness
        assert count_per_edge(gk1.graph) == [2, 7, 7, 7, 7, 2, 7, 7, 7, 7]

    @given(instances(3, 8))
    @settings(max_examples=60, deadline=None)
    def test_sums_to_five_per_witness(self, G):
        wits = enumerate_m_p10(G)
        assert sum(count_per_edge(G, wits)) == 5 * len(wits)


class TestCheckZhang:
    def test_prism_via_c4(self):
        v = check_zhang(PRISM)
        assert v.ok and v.c4_count == 3 and v.p10_count == 0

    def test_petersen_via_p10(self):
        v = check_zhang(PETERSEN)
        assert v.ok and v.c4_count == 0 and v.p10_count == 1

    def test_exhaustive_m5(self):
        assert all(check_zhang(G).ok for G in all_instances(5))


class TestCheckLowerBound:
    def test_gk5_applicable_and_ok(self):
        v = check_lower_bound(generate_gk(5).graph)
        assert v.applicable and v.ok
        assert v.p10_count == 36 and v.required == 18

    def test_petersen_too_small(self):
        assert not check_lower_bound(PETERSEN).applicable

    def test_c4_blocks_applicability(self):
        big = validate(20, list(range(20)))  # aligned: full of 4-cycles
        assert not check_lower_bound(big).applicable


class TestCheckReplace:
    def test_petersen_shared_witness(self):
        v = check_replace(PETERSEN, 0, 1)
        assert v.ok and v.branch == "shared_witness"

    def test_gk1_verticals_swap_equivalent(self, gk1):
        # no witness holds two vertical edges, so the swap branch must carry
        v = check_replace(gk1.graph, 0, 5)
        assert v.ok and v.branch == "swap_equivalent"

    def test_exhaustive_m5(self):
        for G in all_instances(5):
            wits = enumerate_m_p10(G)
            for a, b in itertools.permutations(range(5), 2):
                assert check_replace(G, a, b, witnesses=wits).ok


class TestCheckRedrawing:
    def test_petersen(self):
        assert check_redrawing(PETERSEN, 0, 1).ok

    def test_prism(self):
        assert check_redrawing(PRISM, 0, 1).ok

    @given(instances(3, 12), st.data())
    @settings(max_examples=150, deadline=None)
    def test_random(self, G, data):
        a = data.draw(st.integers(0, G.m - 1))
        b = data.draw(st.integers(0, G.m - 1).filter(lambda v: v != a))
        assert check_redrawing(G, a, b).ok


class TestExhaustiveScan:
    def test_m3(self):
        r = exhaustive_scan(3)
        assert r.instance_count == 6
        assert r.violation_count == 0
        # the prism never has a qualifying edge
        assert r.witness_runs == 0
        assert all(row.c4_count == 3 for row in r.rows)

    def test_m5(self):
        r = exhaustive_scan(5)
        assert r.instance_count == 120
        assert r.violation_count == 0

    def test_out_of_range(self):
        with pytest.raises(OutOfScanRange):
            exhaustive_scan(9)
        with pytest.raises(OutOfScanRange):
            exhaustive_scan(2)

    def test_jobs_deterministic(self):
        assert exhaustive_scan(5, jobs=3).rows == exhaustive_scan(5).rows

    def test_csv_shape(self):
        r = exhaustive_scan(3)
        lines = r.to_csv().strip().split("\n")
        assert lines[0] == "m,instance_index,c4_count,p10_count,violations"
        assert len(lines) == 7


class TestRandomInstance:
    def test_deterministic(self):
        assert random_instance(8, seed=7) == random_instance(8, seed=7)

    def test_any_permutation_validates(self):
        G = random_instance(5, seed=1)
        assert G.m == 5

    def test_m3_never_c4_free(self):
        with pytest.raises(ExhaustedAttempts) as exc:
            random_instance(3, seed=0, require_c4_free=True, max_attempts=100)
        assert exc.value.certificate["attempts"] == 100

    def test_c4_free_m10_reachable(self):
        G = random_instance(10, seed=7, require_c4_free=True, max_attempts=100000)
        assert enumerate_m_c4(G) == []


class TestCensusReport:
    def test_petersen_report(self):
        r = census(PETERSEN)
        assert r.c4_count == 0 and r.p10_count == 1
        assert r.zhang_ok and not r.lower_bound_applicable
        d = r.to_json_dict()
        assert d["p10_list"] == [[0, 1, 2, 3, 4]]
        assert sum(d["per_edge_counts"]) == 5 * r.p10_count

    def test_prism_report(self):
        r = census(PRISM)
        assert r.c4_count == 3 and r.p10_count == 0 and r.zhang_ok

    @given(instances(3, 8), st.data())
    @settings(max_examples=60, deadline=None)
    def test_counts_invariant_under_symmetry(self, G, data):
        op = data.draw(st.sampled_from(["rotate_a", "rotate_a_prime", "reflect", "swap_sides"]))
        k = data.draw(st.integers(0, G.m - 1))
        H = apply_symmetry(G, op, k)
        wits_g = enumerate_m_p10(G)
        wits_h = enumerate_m_p10(H)
        assert len(wits_g) == len(wits_h)
        assert len(enumerate_m_c4(G)) == len(enumerate_m_c4(H))
        # witnesses map pointwise through the relabeling
        assert sorted(relabel_witness(G, X, op, k) for X in wits_g) == wits_h
