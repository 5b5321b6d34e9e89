import itertools

import pytest

from cyclord.core import (
    BACKWARD,
    FORWARD,
    OrientedThreeHypergraph,
    UnorientedThreeHypergraph,
)


def oriented(n, forward=(), backward=()):
    """Shorthand builder: oriented(4, forward=[(1,2,4),(1,3,4)])."""
    edges = {tuple(sorted(s)): FORWARD for s in forward}
    edges.update({tuple(sorted(s)): BACKWARD for s in backward})
    return OrientedThreeHypergraph(n, edges)


def unoriented(n, *supports):
    return UnorientedThreeHypergraph(n, [tuple(sorted(s)) for s in supports])


def all_tt_subsets(n):
    """Every spanning subhypergraph of the ascending hypertournament."""
    supports = list(itertools.combinations(range(1, n + 1), 3))
    for bits in itertools.product((0, 1), repeat=len(supports)):
        yield OrientedThreeHypergraph(
            n, {s: FORWARD for s, b in zip(supports, bits) if b}
        )


def all_oriented(n):
    """Every oriented 3-hypergraph on [n] (3**C(n,3) instances)."""
    supports = list(itertools.combinations(range(1, n + 1), 3))
    for trits in itertools.product((0, 1, 2), repeat=len(supports)):
        yield OrientedThreeHypergraph(
            n, {s: (FORWARD if t == 1 else BACKWARD) for s, t in zip(supports, trits) if t}
        )


def all_unoriented(n):
    supports = list(itertools.combinations(range(1, n + 1), 3))
    for bits in itertools.product((0, 1), repeat=len(supports)):
        yield UnorientedThreeHypergraph(n, [s for s, b in zip(supports, bits) if b])


@pytest.fixture
def tt_subsets_5():
    return list(all_tt_subsets(5))
