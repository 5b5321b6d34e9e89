"""Transitive-orientation solving for unoriented 3-hypergraphs.

Transitivity is a condition on 4-vertex subsets, so the constraints on an
edge set can be compiled upfront: every ordered pattern instance
``(u v z), (z v w) => (u v w)`` over present supports becomes a clause over
binary orientation variables (the conclusion clause degenerates to a
2-literal conflict clause when the concluded 3-set is absent).  Search is
chronological backtracking with unit propagation, edges branched in
lexicographic support order, ascending tried first, which makes outputs
and statistics deterministic.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple

from .core import (
    FORWARD,
    BACKWARD,
    Orientation,
    OrientedThreeHypergraph,
    UnorientedThreeHypergraph,
    all_supports,
    complement_unoriented,
)
from .errors import (
    CapExceeded,
    InternalContradiction,
    SizeMismatch,
    SupportIncomplete,
    SupportOverlap,
)
from .axioms import is_transitive_pair_rule
from .kernels.tables import tables_for
from .perms import CyclicPermutation

DEFAULT_DECISION_CAP = 10**6
DEFAULT_ENUM_CAP = 10**4

_UNSET = 0


@dataclass
class SolverStats:
    """Search-cost counters; deterministic for a fixed input and config."""

    decisions: int = 0
    propagations: int = 0
    conflicts: int = 0


def _build_clauses(h: UnorientedThreeHypergraph):
    """Compile the transitivity constraints of the present edge set.

    Returns ``(edges, clauses, occur)`` where each clause is a tuple of
    literals ``(edge_index, satisfying_orientation)`` and ``occur[e]`` lists
    the clauses mentioning edge ``e``.  Duplicate literal sets are dropped,
    first occurrence kept.
    """
    edges = sorted(h.edges)
    pos = {s: i for i, s in enumerate(edges)}
    t = tables_for(h.n)
    clauses: List[Tuple[Tuple[int, int], ...]] = []
    seen = set()
    for i, oi, j, oj, k, ok in t.constraints.tolist():
        si, sj, sk = t.triples[i], t.triples[j], t.triples[k]
        if si not in pos or sj not in pos:
            continue
        lits = [(pos[si], 3 - oi), (pos[sj], 3 - oj)]
        if sk in pos:
            lits.append((pos[sk], ok))
        key = frozenset(lits)
        if key in seen:
            continue
        seen.add(key)
        clauses.append(tuple(lits))
    occur: List[List[int]] = [[] for _ in edges]
    for ci, clause in enumerate(clauses):
        for e, _ in clause:
            occur[e].append(ci)
    return edges, clauses, occur


def _propagate(assign, clauses, occur, roots, trail, stats) -> bool:
    """Unit propagation from newly assigned edges; False on conflict."""
    queue = deque(roots)
    while queue:
        e = queue.popleft()
        for ci in occur[e]:
            satisfied = False
            unit = None
            unknown = 0
            for le, lo in clauses[ci]:
                v = assign[le]
                if v == lo:
                    satisfied = True
                    break
                if v == _UNSET:
                    unknown += 1
                    unit = (le, lo)
            if satisfied:
                continue
            if unknown == 0:
                stats.conflicts += 1
                return False
            if unknown == 1:
                le, lo = unit
                assign[le] = lo
                trail.append(le)
                stats.propagations += 1
                queue.append(le)
    return True


def _solutions(
    h: UnorientedThreeHypergraph, stats: SolverStats, decision_cap: int
) -> Iterator[OrientedThreeHypergraph]:
    """All transitive orientations, lexicographic in the edge trit vector."""
    edges, clauses, occur = _build_clauses(h)
    assign = [_UNSET] * len(edges)

    def dfs(start: int) -> Iterator[None]:
        e = start
        while e < len(assign) and assign[e] != _UNSET:
            e += 1
        if e == len(assign):
            yield None
            return
        for value in (int(FORWARD), int(BACKWARD)):
            stats.decisions += 1
            if stats.decisions > decision_cap:
                raise CapExceeded(f"decision budget {decision_cap} exhausted")
            assign[e] = value
            trail = [e]
            if _propagate(assign, clauses, occur, [e], trail, stats):
                yield from dfs(e + 1)
            for x in trail:
                assign[x] = _UNSET

    for _ in dfs(0):
        oriented = OrientedThreeHypergraph(
            h.n, {s: Orientation(assign[i]) for i, s in enumerate(edges)}
        )
        ok, violation = is_transitive_pair_rule(oriented)
        if not ok:
            raise InternalContradiction(f"solver emitted a non-transitive orientation: {violation}")
        yield oriented


def find_transitive_orientation(
    h: UnorientedThreeHypergraph, decision_cap: int = DEFAULT_DECISION_CAP
) -> Tuple[Optional[OrientedThreeHypergraph], SolverStats]:
    """First transitive orientation in deterministic order, or ``None``.

    Every returned orientation is re-checked against the pair rule before
    being handed out.
    """
    stats = SolverStats()
    return next(_solutions(h, stats, decision_cap), None), stats


def enumerate_transitive_orientations(
    h: UnorientedThreeHypergraph,
    cap: int = DEFAULT_ENUM_CAP,
    decision_cap: int = DEFAULT_DECISION_CAP,
) -> Tuple[List[OrientedThreeHypergraph], bool]:
    """All transitive orientations in deterministic order.

    Returns ``(orientations, truncated)``; ``truncated`` is set when the
    enumeration was cut off at ``cap`` results.
    """
    out: List[OrientedThreeHypergraph] = []
    stats = SolverStats()
    gen = _solutions(h, stats, decision_cap)
    for oriented in gen:
        if len(out) == cap:
            return out, True
        out.append(oriented)
    return out, False


def union_check_tt(
    a: OrientedThreeHypergraph, b: OrientedThreeHypergraph
) -> Tuple[OrientedThreeHypergraph, bool]:
    """Merge two orientations with complementary supports; test transitivity.

    The operands must orient disjoint 3-set families that together cover
    all of ``[n] choose 3``.  For the complete merged hypergraph,
    transitivity is equivalent to being a copy of the ascending
    hypertournament (the transitive hypertournament is unique up to
    relabelling).
    """
    if a.n != b.n:
        raise SizeMismatch(f"vertex counts differ: {a.n} vs {b.n}")
    overlap = set(a.edges) & set(b.edges)
    if overlap:
        raise SupportOverlap(f"common supports: {sorted(overlap)}")
    merged = dict(a.edges)
    merged.update(b.edges)
    missing = [s for s in all_supports(a.n) if s not in merged]
    if missing:
        raise SupportIncomplete(f"unoriented supports: {missing}")
    union = OrientedThreeHypergraph(a.n, merged)
    return union, is_transitive_pair_rule(union)[0]


def is_cyclic_permutation_hypergraph(
    h: UnorientedThreeHypergraph, decision_cap: int = DEFAULT_DECISION_CAP
) -> Tuple[bool, Optional[CyclicPermutation]]:
    """Decide whether some orientation of ``h`` is induced by a cyclic
    permutation, returning a witness permutation when so.

    Both ``h`` and its complement must admit transitive orientations; the
    union of any such pair is a transitive hypertournament, whose cyclic
    ordering relabels the chosen orientation of ``h`` into one induced by
    an explicit permutation.  The witness satisfies: relabelling ``h``
    along the extracted ordering gives exactly the edge set of the witness'
    induced hypergraph, hence ``h`` is isomorphic to it.
    """
    from .extend import hypertournament_to_cyclic_ordering
    from .perms import hypergraph_of_cyclic_perm, recover_cyclic_perm

    oriented, _ = find_transitive_orientation(h, decision_cap)
    if oriented is None:
        return False, None
    co, _ = find_transitive_orientation(complement_unoriented(h), decision_cap)
    if co is None:
        return False, None
    union, transitive = union_check_tt(oriented, co)
    if not transitive:
        raise InternalContradiction(
            "union of transitive orientations of complementary hypergraphs is not transitive"
        )
    ordering = hypertournament_to_cyclic_ordering(union)
    relabel = {x: i + 1 for i, x in enumerate(ordering.order)}
    witness = recover_cyclic_perm(oriented.relabel(relabel))
    if h.relabel(relabel).edges != hypergraph_of_cyclic_perm(witness).underlying().edges:
        raise InternalContradiction("witness permutation does not reproduce the relabelled input")
    return True, witness
