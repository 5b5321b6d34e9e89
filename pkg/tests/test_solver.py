import itertools

import pytest

from cyclord.axioms import is_transitive_pair_rule
from cyclord.core import (
    BACKWARD,
    FORWARD,
    OrientedThreeHypergraph,
    UnorientedThreeHypergraph,
    are_isomorphic,
    build_tt,
    complement_unoriented,
)
from cyclord.errors import CapExceeded, SupportIncomplete, SupportOverlap
from cyclord.perms import (
    CyclicPermutation,
    all_cyclic_permutations,
    hypergraph_of_cyclic_perm,
    hypertournament_of_cyclic_perm,
)
from cyclord.solver import (
    enumerate_transitive_orientations,
    find_transitive_orientation,
    is_cyclic_permutation_hypergraph,
    union_check_tt,
)

from conftest import all_unoriented, oriented, unoriented


def brute_force_orientations(h):
    """Oracle: check all 2**|E| assignments against the pair rule."""
    supports = sorted(h.edges)
    out = []
    for bits in itertools.product((FORWARD, BACKWARD), repeat=len(supports)):
        cand = OrientedThreeHypergraph(h.n, dict(zip(supports, bits)))
        if is_transitive_pair_rule(cand)[0]:
            out.append(cand)
    return out


class TestFindOrientation:
    def test_simple_pair(self):
        h = unoriented(4, (1, 2, 3), (2, 3, 4))
        o, stats = find_transitive_orientation(h)
        assert o == oriented(4, forward=[(1, 2, 3), (2, 3, 4)])
        assert stats.decisions >= 1

    def test_unorientable_triangle_cluster(self):
        h = unoriented(4, (1, 2, 3), (1, 2, 4), (1, 3, 4))
        o, stats = find_transitive_orientation(h)
        assert o is None
        assert stats.conflicts > 0

    def test_empty(self):
        o, _ = find_transitive_orientation(UnorientedThreeHypergraph(4))
        assert o == OrientedThreeHypergraph(4)

    def test_deterministic(self):
        h = unoriented(5, (1, 2, 3), (2, 3, 4), (3, 4, 5), (1, 2, 5))
        a = find_transitive_orientation(h)
        b = find_transitive_orientation(h)
        assert a[0] == b[0]
        assert a[1] == b[1]

    def test_cap_exceeded(self):
        h = unoriented(4, (1, 2, 3), (2, 3, 4))
        with pytest.raises(CapExceeded):
            find_transitive_orientation(h, decision_cap=0)

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_agrees_with_brute_force(self, n):
        for h in all_unoriented(n):
            sols = brute_force_orientations(h)
            found, _ = find_transitive_orientation(h)
            assert (found is not None) == bool(sols)
            if found is not None:
                assert is_transitive_pair_rule(found)[0]
                assert found in sols


class TestEnumerate:
    def test_single_edge_both_ways(self):
        sols, truncated = enumerate_transitive_orientations(unoriented(3, (1, 2, 3)))
        assert len(sols) == 2 and not truncated

    def test_complete_n4_gives_six(self):
        h = unoriented(4, *itertools.combinations(range(1, 5), 3))
        sols, truncated = enumerate_transitive_orientations(h)
        assert len(sols) == 6 and not truncated
        expected = {
            hypertournament_of_cyclic_perm(CyclicPermutation((1,) + p))
            for p in itertools.permutations((2, 3, 4))
        }
        assert set(sols) == expected

    def test_unorientable_gives_empty(self):
        sols, truncated = enumerate_transitive_orientations(
            unoriented(4, (1, 2, 3), (1, 2, 4), (1, 3, 4))
        )
        assert sols == [] and not truncated

    def test_truncation_flag(self):
        sols, truncated = enumerate_transitive_orientations(unoriented(3, (1, 2, 3)), cap=1)
        assert len(sols) == 1 and truncated

    @pytest.mark.parametrize("n", [3, 4])
    def test_matches_brute_force_lists(self, n):
        for h in all_unoriented(n):
            sols, truncated = enumerate_transitive_orientations(h)
            assert not truncated
            assert sols == brute_force_orientations(h)


class TestUnionCheck:
    def test_example_pair(self):
        a = oriented(4, forward=[(1, 2, 4), (1, 3, 4)])
        b = oriented(4, backward=[(1, 2, 3), (2, 3, 4)])
        union, ok = union_check_tt(a, b)
        assert ok
        assert union == hypertournament_of_cyclic_perm(CyclicPermutation((1, 3, 2, 4)))
        assert are_isomorphic(union, build_tt(4))[0]

    def test_tt_plus_empty(self):
        union, ok = union_check_tt(build_tt(4), OrientedThreeHypergraph(4))
        assert ok and union == build_tt(4)

    def test_verdict_matches_pair_rule(self):
        a = oriented(4, forward=[(1, 2, 3), (1, 2, 4)])
        b = oriented(4, forward=[(1, 3, 4)], backward=[(2, 3, 4)])
        union, ok = union_check_tt(a, b)
        assert ok == is_transitive_pair_rule(union)[0]

    def test_errors(self):
        with pytest.raises(SupportOverlap):
            union_check_tt(build_tt(4), build_tt(4))
        with pytest.raises(SupportIncomplete):
            union_check_tt(
                oriented(4, forward=[(1, 2, 3)]), oriented(4, forward=[(1, 2, 4)])
            )

    @pytest.mark.parametrize("n", [4, 5])
    def test_union_property_exhaustive(self, n):
        # every pair of transitive orientations of complementary edge sets
        # merges into a transitive hypertournament; zero exceptions
        for h in all_unoriented(n):
            a_list, _ = enumerate_transitive_orientations(h)
            if not a_list:
                continue
            b_list, _ = enumerate_transitive_orientations(complement_unoriented(h))
            for a in a_list:
                for b in b_list:
                    union, ok = union_check_tt(a, b)
                    assert ok, f"union property failed at {a} + {b}"

    def test_four_vertex_edge_splits(self):
        # comparability pairs on 4 vertices split the four 3-sets 0+4, 2+2
        # or 4+0; a 3-edge side is never orientable
        splits = set()
        for h in all_unoriented(4):
            both = (
                find_transitive_orientation(h)[0] is not None
                and find_transitive_orientation(complement_unoriented(h))[0] is not None
            )
            if both:
                splits.add(h.edge_count)
            if h.edge_count == 3:
                assert find_transitive_orientation(h)[0] is None
        assert splits == {0, 2, 4}


def relabel_oracle_is_permutation_hypergraph(h):
    """Oracle: search all vertex bijections against every induced hypergraph."""
    n = h.n
    for phi in all_cyclic_permutations(n):
        target = hypergraph_of_cyclic_perm(phi).underlying()
        for perm in itertools.permutations(range(1, n + 1)):
            mapping = dict(zip(range(1, n + 1), perm))
            if h.relabel(mapping) == target:
                return True
    return False


class TestCyclicPermutationHypergraph:
    def test_example_positive(self):
        ok, phi = is_cyclic_permutation_hypergraph(unoriented(4, (1, 2, 4), (1, 3, 4)))
        assert ok and phi == CyclicPermutation((1, 3, 2, 4))

    def test_example_negative(self):
        ok, phi = is_cyclic_permutation_hypergraph(
            unoriented(4, (1, 2, 3), (1, 2, 4), (1, 3, 4))
        )
        assert not ok and phi is None

    def test_complete_hypergraph(self):
        h = unoriented(4, *itertools.combinations(range(1, 5), 3))
        ok, phi = is_cyclic_permutation_hypergraph(h)
        assert ok and phi is not None

    def test_witness_is_verified(self):
        for h in all_unoriented(4):
            ok, phi = is_cyclic_permutation_hypergraph(h)
            if ok:
                target = hypergraph_of_cyclic_perm(phi).underlying()
                assert any(
                    h.relabel(dict(zip(range(1, 5), perm))) == target
                    for perm in itertools.permutations(range(1, 5))
                )

    @pytest.mark.parametrize("n", [3, 4])
    def test_agrees_with_relabel_oracle(self, n):
        for h in all_unoriented(n):
            ok, _ = is_cyclic_permutation_hypergraph(h)
            assert ok == relabel_oracle_is_permutation_hypergraph(h)
