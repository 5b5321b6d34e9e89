"""Axioms of partial cyclic orders on the hypergraph representation.

A ternary relation is *cyclic* (closed under rotation), *asymmetric* (never
contains a triple and its reversal) and *transitive* (closed under the
composition rule below).  Rotation classes of input triples collapse to
oriented edges, so cyclicity is structural after normalization; asymmetry
and transitivity are the checkable content.

The transitivity rule: whenever ordered representations ``(u v z)`` and
``(z v w)`` of edges are present, the edge ``(u v w)`` must be present with
that orientation.  Instantiating the rule over all rotations of each edge
also yields the companion consequence ``(u w z)`` automatically.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from .core import (
    Orientation,
    OrientedThreeHypergraph,
    Support,
    all_supports,
    canonical_oriented_triple,
    complement_in_tt,
    induced_sub,
)
from .errors import AsymmetryViolation, Degenerate


@dataclass
class TernaryRelationInput:
    """Raw ordered triples as supplied by a user; may be inconsistent."""

    n: int
    triples: List[Tuple[int, int, int]]


@dataclass(frozen=True)
class TransitivityViolation:
    """Witness of a failed composition: edges ``(u v z)`` and ``(z v w)``
    are present but the consequence on ``{u, v, w}`` is missing or reversed."""

    u: int
    v: int
    z: int
    w: int
    consequence: Support
    required: Orientation
    actual: Optional[Orientation]

    def __str__(self) -> str:
        have = "absent" if self.actual is None else "reversed"
        return (
            f"({self.u} {self.v} {self.z}) and ({self.z} {self.v} {self.w}) "
            f"force ({self.u} {self.v} {self.w}), but {{{self.consequence[0]},"
            f"{self.consequence[1]},{self.consequence[2]}}} is {have}"
        )


def normalize_relation(rel: TernaryRelationInput) -> OrientedThreeHypergraph:
    """Collapse rotation classes of the listed triples to oriented edges.

    Rotations of an already-listed triple merge silently; a repeated vertex
    raises :class:`Degenerate`; listing both orientations of one 3-set
    raises :class:`AsymmetryViolation`.
    """
    edges = {}
    for x, y, z in rel.triples:
        t = canonical_oriented_triple(x, y, z)
        prev = edges.get(t.support)
        if prev is not None and prev is not t.orientation:
            raise AsymmetryViolation(t.support)
        edges[t.support] = t.orientation
    return OrientedThreeHypergraph(rel.n, edges)


def is_transitive_pair_rule(
    h: OrientedThreeHypergraph,
) -> Tuple[bool, Optional[TransitivityViolation]]:
    """Check the composition rule over every ordered pattern instance.

    Scans ordered 4-tuples ``(u, v, z, w)`` of distinct vertices in
    lexicographic order, so the reported first violation is deterministic.
    """
    contains = h.contains
    for u, v, z, w in itertools.permutations(range(1, h.n + 1), 4):
        if contains(u, v, z) and contains(z, v, w) and not contains(u, v, w):
            concl = canonical_oriented_triple(u, v, w)
            return False, TransitivityViolation(
                u, v, z, w, concl.support, concl.orientation, h.orientation_of(concl.support)
            )
    return True, None


def is_transitive_quadruple_local(h: OrientedThreeHypergraph) -> bool:
    """Transitivity via its locality: every induced 4-vertex piece must pass.

    Gives the identical verdict to :func:`is_transitive_pair_rule` on every
    input (the rule never involves more than four vertices).
    """
    if h.n < 4:
        return is_transitive_pair_rule(h)[0]
    for quad in itertools.combinations(range(1, h.n + 1), 4):
        if not is_transitive_pair_rule(induced_sub(h, quad))[0]:
            return False
    return True


def evenness_violations(h: OrientedThreeHypergraph) -> List[Tuple[int, int, int, int]]:
    """4-subsets of ``[n]`` inducing an odd number of edges.

    An empty result is a necessary condition for self-transitivity.
    """
    bad = []
    for quad in itertools.combinations(range(1, h.n + 1), 4):
        count = sum(1 for s in itertools.combinations(quad, 3) if s in h.edges)
        if count % 2:
            bad.append(quad)
    return bad


def is_self_transitive(h: OrientedThreeHypergraph) -> bool:
    """Spanning-subhypergraph self-transitivity.

    Requires every edge ascending, the hypergraph transitive, and its
    complement within the ascending hypertournament transitive.  A
    descending edge yields a plain ``False`` (the notion is only defined
    for ascending-embedded hypergraphs), keeping census filters total.
    """
    if not h.is_tt_embedded():
        return False
    if not is_transitive_pair_rule(h)[0]:
        return False
    return is_transitive_pair_rule(complement_in_tt(h))[0]


@dataclass
class AxiomReport:
    """Outcome of validating a raw ternary relation.

    ``is_cyclic_consistent`` records that every listed triple has three
    distinct vertices, i.e. the input can be read as a set of rotation
    classes at all.  ``violations`` holds one dict per finding, keyed by
    ``kind`` (``degenerate`` / ``asymmetry`` / ``transitivity`` /
    ``totality``).
    """

    n: int
    is_cyclic_consistent: bool
    is_asymmetric: bool
    is_transitive: bool
    is_total: bool
    violations: List[dict] = field(default_factory=list)
    hypergraph: Optional[OrientedThreeHypergraph] = None

    @property
    def is_partial_cyclic_order(self) -> bool:
        return self.is_cyclic_consistent and self.is_asymmetric and self.is_transitive

    @property
    def is_complete_cyclic_order(self) -> bool:
        return self.is_partial_cyclic_order and self.is_total


def axiom_report(rel: TernaryRelationInput) -> AxiomReport:
    """Validate a raw relation, reporting all axiom failures instead of raising.

    Degenerate triples and double-oriented 3-sets become report entries;
    transitivity and totality are then evaluated on the remaining cleanly
    oriented 3-sets.
    """
    violations: List[dict] = []
    edges = {}
    conflicted = set()
    for x, y, z in rel.triples:
        try:
            t = canonical_oriented_triple(x, y, z)
        except Degenerate:
            violations.append({"kind": "degenerate", "triple": [x, y, z]})
            continue
        prev = edges.get(t.support)
        if prev is not None and prev is not t.orientation and t.support not in conflicted:
            conflicted.add(t.support)
            violations.append({"kind": "asymmetry", "support": list(t.support)})
            continue
        edges.setdefault(t.support, t.orientation)
    for s in conflicted:
        del edges[s]
    is_cyclic = not any(v["kind"] == "degenerate" for v in violations)
    is_asym = not conflicted
    h = OrientedThreeHypergraph(rel.n, edges)
    ok, witness = is_transitive_pair_rule(h)
    if not ok:
        violations.append(
            {
                "kind": "transitivity",
                "witness": [witness.u, witness.v, witness.z, witness.w],
                "consequence": list(witness.consequence),
                "required": witness.required.name,
                "actual": None if witness.actual is None else witness.actual.name,
            }
        )
    missing = [s for s in all_supports(rel.n) if s not in edges]
    for s in missing:
        violations.append({"kind": "totality", "support": list(s)})
    return AxiomReport(
        n=rel.n,
        is_cyclic_consistent=is_cyclic,
        is_asymmetric=is_asym,
        is_transitive=ok,
        is_total=not missing,
        violations=violations,
        hypergraph=h,
    )
