"""Oriented-graph substrate: vertex links and linear-permutation graphs.

The link of a vertex ``v`` collects, as arcs, the ordered pairs ``(u, w)``
for which some rotation of an edge reads ``(v u w)``.  A linear permutation
``psi`` of ``[m]`` induces the graph of its non-inversions: arcs ``(i, j)``
with ``i < j`` appearing in that order in ``psi``.  Self-transitive graphs
(in the label order) are exactly the graphs arising this way, and the
permutation can be read back off the arc set.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Optional, Tuple

from .core import OrientedThreeHypergraph
from .errors import InvalidSize, NotSelfTransitive

LinearPermutation = Tuple[int, ...]


@dataclass(frozen=True)
class OrientedGraph:
    """Oriented graph on ``[m]``: at most one of ``(u, w)``, ``(w, u)`` present."""

    m: int
    arcs: FrozenSet[Tuple[int, int]]

    def __post_init__(self):
        object.__setattr__(self, "arcs", frozenset(tuple(a) for a in self.arcs))
        for u, w in self.arcs:
            if u == w or not (1 <= u <= self.m and 1 <= w <= self.m):
                raise InvalidSize(f"arc ({u}, {w}) invalid on [{self.m}]")
            if (w, u) in self.arcs:
                raise InvalidSize(f"both ({u}, {w}) and ({w}, {u}) present")

    def sorted_arcs(self):
        return sorted(self.arcs)


def link_of(h: OrientedThreeHypergraph, v: int) -> OrientedGraph:
    """Link of ``v``: arcs from edge rotations starting at ``v``.

    The remaining vertices ``[n] \\ {v}`` are relabelled order-preservingly
    to ``[n-1]``.
    """
    if not 1 <= v <= h.n:
        raise InvalidSize(f"vertex {v} not in [1, {h.n}]")
    rank = {}
    for x in range(1, h.n + 1):
        if x != v:
            rank[x] = x if x < v else x - 1
    arcs = set()
    for triple in h.triples():
        if v not in triple.support:
            continue
        a, b, c = triple.ordered()
        # rotate the representative to start at v
        if b == v:
            a, b, c = b, c, a
        elif c == v:
            a, b, c = c, a, b
        arcs.add((rank[b], rank[c]))
    return OrientedGraph(h.n - 1, frozenset(arcs))


def graph_is_transitive(g: OrientedGraph) -> Tuple[bool, Optional[Tuple[int, int, int]]]:
    """True iff arcs ``(a, b)`` and ``(b, c)`` always imply ``(a, c)``.

    A violation is returned as the lexicographically first ``(a, b, c)``.
    """
    arcs = g.arcs
    for a, b in sorted(arcs):
        for b2, c in sorted(arcs):
            if b2 == b and a != c and (a, c) not in arcs:
                return False, (a, b, c)
    return True, None


def _label_complement(g: OrientedGraph) -> OrientedGraph:
    missing = frozenset(
        (u, w) for u in range(1, g.m + 1) for w in range(u + 1, g.m + 1) if (u, w) not in g.arcs
    )
    return OrientedGraph(g.m, missing)


def graph_is_self_transitive(g: OrientedGraph) -> bool:
    """Self-transitivity within the label-order tournament.

    Requires every arc ascending (``u < w``), the graph transitive, and the
    complement ``{(u, w): u < w, (u, w) absent}`` transitive as well.
    """
    if any(u > w for u, w in g.arcs):
        return False
    if not graph_is_transitive(g)[0]:
        return False
    return graph_is_transitive(_label_complement(g))[0]


def graph_of_linear_perm(psi: LinearPermutation) -> OrientedGraph:
    """Graph of the non-inversions of ``psi``: arcs ``(i, j)``, ``i < j``,
    with ``i`` appearing before ``j`` in the sequence."""
    m = len(psi)
    if sorted(psi) != list(range(1, m + 1)):
        raise InvalidSize(f"{psi} is not a permutation of [1, {m}]")
    pos = {x: p for p, x in enumerate(psi)}
    arcs = frozenset(
        (i, j) for i in range(1, m + 1) for j in range(i + 1, m + 1) if pos[i] < pos[j]
    )
    return OrientedGraph(m, arcs)


def linear_perm_from_graph(g: OrientedGraph) -> LinearPermutation:
    """Read the inducing linear permutation back off a self-transitive graph.

    Orders ``i`` before ``j`` iff ``(i < j and (i, j) present)`` or
    ``(i > j and (j, i) absent)``, then verifies the sequence reproduces
    ``g``; raises :class:`NotSelfTransitive` otherwise.
    """
    m = g.m

    def before(i: int, j: int) -> bool:
        if i < j:
            return (i, j) in g.arcs
        return (j, i) not in g.arcs

    # in a transitive tournament the predecessor count ranks the vertices
    rank = {i: sum(1 for j in range(1, m + 1) if j != i and before(j, i)) for i in range(1, m + 1)}
    psi = tuple(sorted(range(1, m + 1), key=lambda i: (rank[i], i)))
    if graph_of_linear_perm(psi) != g:
        raise NotSelfTransitive(f"arc set of {g} is not induced by any linear permutation")
    return psi
