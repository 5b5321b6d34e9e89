"""Total extendability of partial cyclic orders.

A transitive oriented 3-hypergraph is *totally extendable* when some cyclic
ordering of the whole vertex set induces every one of its edges.  Deciding
this is hard in general; we provide a sufficient test (orient the missing
3-sets transitively, merge, read the ordering off the resulting
hypertournament) that never claims a negative, and an exact exponential
decider scanning all ``(n-1)!`` cyclic orderings at desk scale.
"""

from __future__ import annotations

from typing import List, Optional

from .axioms import is_transitive_pair_rule
from .core import (
    OrientedThreeHypergraph,
    UnorientedThreeHypergraph,
    all_supports,
)
from .errors import (
    CapExceeded,
    InternalContradiction,
    NotHypertournament,
    NotTransitive,
)
from .links import link_of
from .perms import CyclicPermutation, all_cyclic_permutations, induces_edge
from .solver import DEFAULT_DECISION_CAP, find_transitive_orientation

DEFAULT_EXACT_N_CAP = 10


def hypertournament_to_cyclic_ordering(h: OrientedThreeHypergraph) -> CyclicPermutation:
    """The unique cyclic permutation inducing a transitive hypertournament.

    The link of vertex 1 is a transitive tournament on the remaining
    vertices; its topological order, prefixed with 1, is the ordering.
    Verified against every edge before returning.
    """
    if h.n < 3:
        raise NotHypertournament(f"need n >= 3, got {h.n}")
    if not h.is_complete():
        raise NotHypertournament(f"{h.edge_count} of the required 3-sets oriented")
    ok, violation = is_transitive_pair_rule(h)
    if not ok:
        raise NotTransitive(str(violation))
    link = link_of(h, 1)
    # transitive tournament: out-degree ranks vertices from first to last
    outdeg = {v: 0 for v in range(1, link.m + 1)}
    for u, _ in link.arcs:
        outdeg[u] += 1
    by_rank = sorted(outdeg, key=lambda v: (-outdeg[v], v))
    phi = CyclicPermutation((1,) + tuple(v + 1 for v in by_rank))
    for triple in h.triples():
        if not induces_edge(phi, triple.support, triple.orientation):
            raise InternalContradiction(
                f"extracted ordering {phi} does not induce edge {triple}"
            )
    return phi


def _require_partial_cyclic_order(t: OrientedThreeHypergraph) -> None:
    ok, violation = is_transitive_pair_rule(t)
    if not ok:
        raise NotTransitive(str(violation))


def extend_sufficient(
    t: OrientedThreeHypergraph, decision_cap: int = DEFAULT_DECISION_CAP
) -> Optional[CyclicPermutation]:
    """Witness ordering via the complement route, or ``None`` (inconclusive).

    When the unoriented complement of the edge supports admits a transitive
    orientation, the union with it is necessarily a transitive
    hypertournament and its ordering extends the input.  ``None`` only
    means this route did not apply -- never that no extension exists.
    A non-transitive union would disprove the underlying theory, so it is
    raised as :class:`InternalContradiction` instead of being swallowed.
    """
    _require_partial_cyclic_order(t)
    missing = UnorientedThreeHypergraph(
        t.n, (s for s in all_supports(t.n) if s not in t.edges)
    )
    oriented, _ = find_transitive_orientation(missing, decision_cap)
    if oriented is None:
        return None
    merged = dict(t.edges)
    merged.update(oriented.edges)
    union = OrientedThreeHypergraph(t.n, merged)
    ok, violation = is_transitive_pair_rule(union)
    if not ok:
        raise InternalContradiction(
            f"union with a transitive orientation of the complement is not transitive: {violation}"
        )
    phi = hypertournament_to_cyclic_ordering(union)
    for triple in t.triples():
        if not induces_edge(phi, triple.support, triple.orientation):
            raise InternalContradiction(f"witness {phi} does not induce input edge {triple}")
    return phi


def extend_exact(
    t: OrientedThreeHypergraph, n_cap: int = DEFAULT_EXACT_N_CAP
) -> Optional[CyclicPermutation]:
    """Exhaustive extendability decision.

    Scans all cyclic orderings (1 fixed first, the rest lexicographic) and
    returns the first that induces every edge, or ``None`` when no total
    cyclic order extends the input.
    """
    _require_partial_cyclic_order(t)
    if t.n > n_cap:
        raise CapExceeded(f"exact search capped at n <= {n_cap}")
    for phi in all_cyclic_permutations(t.n):
        if all(induces_edge(phi, s, o) for s, o in t.edges.items()):
            return phi
    return None


def enumerate_cyclic_extensions(
    t: OrientedThreeHypergraph, n_cap: int = DEFAULT_EXACT_N_CAP
) -> List[CyclicPermutation]:
    """All extending cyclic orderings, in the exact decider's scan order."""
    _require_partial_cyclic_order(t)
    if t.n > n_cap:
        raise CapExceeded(f"exact search capped at n <= {n_cap}")
    return [
        phi
        for phi in all_cyclic_permutations(t.n)
        if all(induces_edge(phi, s, o) for s, o in t.edges.items())
    ]
