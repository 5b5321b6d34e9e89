import itertools

import pytest
from hypothesis import given, strategies as st

from cyclord.core import (
    BACKWARD,
    FORWARD,
    OrientedThreeHypergraph,
    are_isomorphic,
    build_tt,
    canonical_oriented_triple,
    complement_in_tt,
    complement_unoriented,
    induced_sub,
)
from cyclord.errors import (
    CapExceeded,
    Degenerate,
    InvalidSize,
    NotTTEmbedded,
    SizeMismatch,
)

from conftest import all_tt_subsets, oriented, unoriented


def rotation_classes(a, b, c):
    """Independent oracle: partition the 6 orderings of {a,b,c} by rotation."""
    orderings = set(itertools.permutations((a, b, c)))
    classes = []
    while orderings:
        x = orderings.pop()
        cls = {x, (x[1], x[2], x[0]), (x[2], x[0], x[1])}
        orderings -= cls
        classes.append(cls)
    return classes


class TestCanonicalOrientedTriple:
    def test_ascending_is_forward(self):
        t = canonical_oriented_triple(1, 2, 3)
        assert t.support == (1, 2, 3) and t.orientation is FORWARD

    def test_rotation_and_reversal(self):
        assert canonical_oriented_triple(2, 4, 1) == canonical_oriented_triple(1, 2, 4)
        assert canonical_oriented_triple(2, 4, 1).orientation is FORWARD
        assert canonical_oriented_triple(4, 2, 1).support == (1, 2, 4)
        assert canonical_oriented_triple(4, 2, 1).orientation is BACKWARD

    def test_against_rotation_class_oracle(self):
        # one class must collapse to FORWARD, the other to BACKWARD
        for cls in rotation_classes(2, 3, 4):
            values = {canonical_oriented_triple(*o) for o in cls}
            assert len(values) == 1
        t = canonical_oriented_triple(3, 2, 4)
        assert t.support == (2, 3, 4) and t.orientation is BACKWARD

    def test_degenerate(self):
        with pytest.raises(Degenerate):
            canonical_oriented_triple(1, 1, 2)

    @given(st.lists(st.integers(1, 50), min_size=3, max_size=3, unique=True))
    def test_rotations_collapse_reversal_flips(self, verts):
        a, b, c = verts
        t = canonical_oriented_triple(a, b, c)
        assert canonical_oriented_triple(b, c, a) == t
        assert canonical_oriented_triple(c, a, b) == t
        r = canonical_oriented_triple(c, b, a)
        assert r.support == t.support
        assert r.orientation is t.orientation.flipped()


class TestBuildTT:
    @pytest.mark.parametrize("n,count", [(3, 1), (4, 4), (5, 10)])
    def test_edge_counts(self, n, count):
        tt = build_tt(n)
        assert tt.edge_count == count
        assert all(o is FORWARD for o in tt.edges.values())

    def test_too_small(self):
        with pytest.raises(InvalidSize):
            build_tt(2)


class TestComplementInTT:
    def test_example(self):
        h = oriented(4, forward=[(1, 2, 4), (1, 3, 4)])
        assert complement_in_tt(h) == oriented(4, forward=[(1, 2, 3), (2, 3, 4)])

    def test_full_tt_complements_to_empty(self):
        assert complement_in_tt(build_tt(4)) == OrientedThreeHypergraph(4)

    def test_backward_edge_rejected(self):
        with pytest.raises(NotTTEmbedded):
            complement_in_tt(oriented(3, backward=[(1, 2, 3)]))

    def test_involution_and_count_n5(self):
        total = 10
        for h in all_tt_subsets(5):
            c = complement_in_tt(h)
            assert h.edge_count + c.edge_count == total
            assert complement_in_tt(c) == h


class TestComplementUnoriented:
    def test_examples(self):
        h = unoriented(4, (1, 2, 3), (2, 3, 4))
        assert complement_unoriented(h) == unoriented(4, (1, 2, 4), (1, 3, 4))
        empty = unoriented(4)
        assert complement_unoriented(empty).edge_count == 4

    def test_involution(self):
        h = unoriented(5, (1, 2, 3), (1, 4, 5), (2, 3, 5))
        assert complement_unoriented(complement_unoriented(h)) == h


class TestInducedSub:
    def test_tt5_on_three_vertices(self):
        sub = induced_sub(build_tt(5), {1, 3, 5})
        assert sub == oriented(3, forward=[(1, 2, 3)])

    def test_relabelling(self):
        h = oriented(4, forward=[(1, 2, 4), (1, 3, 4), (1, 2, 3)])
        sub = induced_sub(h, {1, 2, 4})
        assert sub == oriented(3, forward=[(1, 2, 3)])

    def test_small_sets_give_empty(self):
        assert induced_sub(build_tt(5), {2, 4}).edge_count == 0

    def test_commutes_with_complement(self):
        for h in all_tt_subsets(4):
            for k in (3, 4):
                for sub in itertools.combinations(range(1, 5), k):
                    a = complement_in_tt(induced_sub(h, sub))
                    b = induced_sub(complement_in_tt(h), sub)
                    assert a == b


class TestIsomorphism:
    def test_tt4_vs_reordered_hypertournament(self):
        other = oriented(
            4, forward=[(1, 2, 3), (1, 2, 4)], backward=[(1, 3, 4), (2, 3, 4)]
        )
        ok, mapping = are_isomorphic(build_tt(4), other)
        assert ok
        assert build_tt(4).relabel(mapping) == other

    def test_reversed_single_edge_isomorphic_by_transposition(self):
        # the identity cannot work (reversal is not a rotation), but the
        # swap 1<->2 carries the ascending class onto the descending one;
        # both complete instances on [3] are copies of the ascending
        # hypertournament, as uniqueness demands
        h1 = oriented(3, forward=[(1, 2, 3)])
        h2 = oriented(3, backward=[(1, 2, 3)])
        ok, mapping = are_isomorphic(h1, h2)
        assert ok
        assert mapping != {1: 1, 2: 2, 3: 3}
        assert h1.relabel(mapping) == h2

    def test_identity(self):
        h = oriented(4, forward=[(1, 2, 4)], backward=[(2, 3, 4)])
        ok, mapping = are_isomorphic(h, h)
        assert ok and mapping == {1: 1, 2: 2, 3: 3, 4: 4}

    def test_size_mismatch_and_cap(self):
        with pytest.raises(SizeMismatch):
            are_isomorphic(build_tt(3), build_tt(4))
        with pytest.raises(CapExceeded):
            are_isomorphic(build_tt(9), build_tt(9))

    def test_equivalence_relation_spot_check(self):
        # symmetry and transitivity over a few n=4 instances
        hs = [
            build_tt(4),
            oriented(4, forward=[(1, 2, 3), (1, 2, 4)], backward=[(1, 3, 4), (2, 3, 4)]),
            oriented(4, forward=[(1, 2, 4), (1, 3, 4)]),
            oriented(4, forward=[(1, 2, 3), (2, 3, 4)]),
            oriented(4, forward=[(1, 2, 3)]),
        ]
        for h1, h2 in itertools.product(hs, repeat=2):
            ok12, _ = are_isomorphic(h1, h2)
            ok21, _ = are_isomorphic(h2, h1)
            assert ok12 == ok21
        for h1, h2, h3 in itertools.product(hs, repeat=3):
            if are_isomorphic(h1, h2)[0] and are_isomorphic(h2, h3)[0]:
                assert are_isomorphic(h1, h3)[0]

    def test_relabel_preserves_orientation_class(self):
        h = oriented(4, forward=[(1, 2, 4)], backward=[(1, 2, 3)])
        mapping = {1: 4, 2: 1, 3: 3, 4: 2}
        ok, _ = are_isomorphic(h, h.relabel(mapping))
        assert ok


class TestHypergraphInvariants:
    def test_asymmetry_is_structural(self):
        from cyclord.errors import AsymmetryViolation

        with pytest.raises(AsymmetryViolation):
            OrientedThreeHypergraph(3, [
                canonical_oriented_triple(1, 2, 3),
                canonical_oriented_triple(3, 2, 1),
            ])

    def test_contains_checks_class_membership(self):
        h = oriented(4, forward=[(1, 2, 4)])
        assert h.contains(1, 2, 4) and h.contains(2, 4, 1) and h.contains(4, 1, 2)
        assert not h.contains(4, 2, 1)
        assert not h.contains(1, 2, 3)

    def test_support_outside_range_rejected(self):
        with pytest.raises(InvalidSize):
            OrientedThreeHypergraph(3, {(1, 2, 4): FORWARD})
