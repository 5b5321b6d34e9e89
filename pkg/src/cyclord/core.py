"""Core model: oriented triples, oriented/unoriented 3-hypergraphs.

Vertices are the integers ``1..n``.  A 3-set ``{a, b, c}`` has exactly two
cyclic orientations; we store them relative to the ascending rotation:

* ``FORWARD``  -- the rotation class of ``(a b c)`` with ``a < b < c``,
* ``BACKWARD`` -- the rotation class of ``(a c b)``.

An ordered triple belongs to the FORWARD class exactly when it is an even
rearrangement of its sorted form (rotations are 3-cycles), which makes
orientation arithmetic under relabelling a parity computation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import IntEnum
from typing import Dict, Iterable, Iterator, Mapping, Optional, Tuple

from .errors import (
    AsymmetryViolation,
    CapExceeded,
    Degenerate,
    InvalidSize,
    NotTTEmbedded,
    SizeMismatch,
)

Support = Tuple[int, int, int]


class Orientation(IntEnum):
    FORWARD = 1
    BACKWARD = 2

    def flipped(self) -> "Orientation":
        return BACKWARD if self is FORWARD else FORWARD


FORWARD = Orientation.FORWARD
BACKWARD = Orientation.BACKWARD

# Index patterns of the even (rotation-class) rearrangements of a sorted triple.
_EVEN_ARRANGEMENTS = {(0, 1, 2), (1, 2, 0), (2, 0, 1)}


def arrangement_parity_even(ordered: Tuple[int, int, int]) -> bool:
    """True when ``ordered`` is an even rearrangement of its sorted form."""
    s = sorted(ordered)
    return (s.index(ordered[0]), s.index(ordered[1]), s.index(ordered[2])) in _EVEN_ARRANGEMENTS


@dataclass(frozen=True)
class OrientedTriple:
    """A 3-set together with one of its two cyclic orientations."""

    support: Support
    orientation: Orientation

    def ordered(self) -> Tuple[int, int, int]:
        """The class representative starting at the smallest vertex."""
        a, b, c = self.support
        return (a, b, c) if self.orientation is FORWARD else (a, c, b)

    def reversed(self) -> "OrientedTriple":
        return OrientedTriple(self.support, self.orientation.flipped())

    def __str__(self) -> str:
        return "(%d %d %d)" % self.ordered()


def canonical_oriented_triple(a: int, b: int, c: int) -> OrientedTriple:
    """Canonical form of the cyclic class of the ordered triple ``(a, b, c)``.

    All three rotations of ``(a, b, c)`` map to the same value; reversing
    the arguments flips the orientation.  Raises :class:`Degenerate` when
    two arguments coincide.
    """
    if a == b or b == c or a == c:
        raise Degenerate(f"triple ({a}, {b}, {c}) repeats a vertex")
    support = tuple(sorted((a, b, c)))
    orientation = FORWARD if arrangement_parity_even((a, b, c)) else BACKWARD
    return OrientedTriple(support, orientation)


def _check_support(support, n: int) -> Support:
    s = tuple(support)
    if len(s) != 3 or len(set(s)) != 3:
        raise Degenerate(f"support {s} is not a 3-set")
    s = tuple(sorted(s))
    if s[0] < 1 or s[2] > n:
        raise InvalidSize(f"support {s} not within [1, {n}]")
    return s


class OrientedThreeHypergraph:
    """Oriented 3-hypergraph on vertex set ``[n]``.

    Each present 3-set carries exactly one orientation, so a triple and its
    reversal can never both be present (asymmetry is structural).  Instances
    are immutable after construction and safe to share between threads.
    """

    __slots__ = ("n", "_edges", "_hash")

    def __init__(self, n: int, edges: Mapping[Iterable[int], Orientation] | Iterable[OrientedTriple] = ()):
        if n < 0:
            raise InvalidSize("vertex count must be nonnegative")
        self.n = n
        edge_map: Dict[Support, Orientation] = {}
        items = edges.items() if isinstance(edges, Mapping) else ((t.support, t.orientation) for t in edges)
        for support, orientation in items:
            s = _check_support(support, n)
            o = Orientation(orientation)
            if s in edge_map and edge_map[s] is not o:
                raise AsymmetryViolation(s)
            edge_map[s] = o
        self._edges = edge_map
        self._hash = None

    @property
    def edges(self) -> Dict[Support, Orientation]:
        """Edge map, support -> orientation.  Treat as read-only."""
        return self._edges

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    def supports(self) -> Iterator[Support]:
        return iter(sorted(self._edges))

    def triples(self) -> Iterator[OrientedTriple]:
        for s in sorted(self._edges):
            yield OrientedTriple(s, self._edges[s])

    def orientation_of(self, support) -> Optional[Orientation]:
        return self._edges.get(tuple(sorted(support)))

    def contains(self, a: int, b: int, c: int) -> bool:
        """Whether the cyclic class of the ordered triple ``(a, b, c)`` is an edge."""
        t = canonical_oriented_triple(a, b, c)
        return self._edges.get(t.support) is t.orientation

    def is_tt_embedded(self) -> bool:
        """Every present edge carries the ascending (FORWARD) orientation."""
        return all(o is FORWARD for o in self._edges.values())

    def is_complete(self) -> bool:
        return len(self._edges) == _choose3(self.n)

    def underlying(self) -> "UnorientedThreeHypergraph":
        return UnorientedThreeHypergraph(self.n, self._edges.keys())

    def relabel(self, mapping: Mapping[int, int]) -> "OrientedThreeHypergraph":
        """Apply a vertex bijection; orientations flip with odd rearrangements."""
        edges: Dict[Support, Orientation] = {}
        for (a, b, c), o in self._edges.items():
            image = (mapping[a], mapping[b], mapping[c])
            s = tuple(sorted(image))
            edges[s] = o if arrangement_parity_even(image) else o.flipped()
        return OrientedThreeHypergraph(self.n, edges)

    def degree(self, v: int) -> int:
        return sum(1 for s in self._edges if v in s)

    def __eq__(self, other) -> bool:
        if not isinstance(other, OrientedThreeHypergraph):
            return NotImplemented
        return self.n == other.n and self._edges == other._edges

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self._edges.items())))
        return self._hash

    def __repr__(self) -> str:
        body = ", ".join(str(t) for t in self.triples())
        return f"OrientedThreeHypergraph(n={self.n}, [{body}])"


class UnorientedThreeHypergraph:
    """Plain 3-uniform hypergraph on ``[n]``."""

    __slots__ = ("n", "edges")

    def __init__(self, n: int, edges: Iterable[Iterable[int]] = ()):
        if n < 0:
            raise InvalidSize("vertex count must be nonnegative")
        self.n = n
        self.edges = frozenset(_check_support(e, n) for e in edges)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def supports(self) -> Iterator[Support]:
        return iter(sorted(self.edges))

    def relabel(self, mapping: Mapping[int, int]) -> "UnorientedThreeHypergraph":
        return UnorientedThreeHypergraph(
            self.n, (tuple(sorted((mapping[a], mapping[b], mapping[c]))) for a, b, c in self.edges)
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, UnorientedThreeHypergraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        body = ", ".join("{%d,%d,%d}" % s for s in self.supports())
        return f"UnorientedThreeHypergraph(n={self.n}, [{body}])"


def _choose3(n: int) -> int:
    return n * (n - 1) * (n - 2) // 6 if n >= 3 else 0


def all_supports(n: int) -> Iterator[Support]:
    """All 3-subsets of ``[n]`` in lexicographic order."""
    return itertools.combinations(range(1, n + 1), 3)


def build_tt(n: int) -> OrientedThreeHypergraph:
    """The transitive 3-hypertournament on ``[n]``: every 3-set, ascending.

    This is the complete oriented 3-hypergraph whose edge orientations are
    induced by the cyclic ordering ``(1 2 ... n)``.
    """
    if n < 3:
        raise InvalidSize(f"need n >= 3, got {n}")
    return OrientedThreeHypergraph(n, {s: FORWARD for s in all_supports(n)})


def complement_in_tt(h: OrientedThreeHypergraph) -> OrientedThreeHypergraph:
    """Complement of a spanning subhypergraph of the ascending hypertournament.

    Defined only when every present edge is FORWARD; the result contains
    exactly the absent 3-sets, again all FORWARD.
    """
    if not h.is_tt_embedded():
        raise NotTTEmbedded("complement requires all edges FORWARD")
    return OrientedThreeHypergraph(h.n, {s: FORWARD for s in all_supports(h.n) if s not in h.edges})


def complement_unoriented(h: UnorientedThreeHypergraph) -> UnorientedThreeHypergraph:
    """Edge complement within all 3-subsets of ``[n]``."""
    return UnorientedThreeHypergraph(h.n, (s for s in all_supports(h.n) if s not in h.edges))


def induced_sub(h: OrientedThreeHypergraph, vertices: Iterable[int]) -> OrientedThreeHypergraph:
    """Subhypergraph induced on ``vertices``, relabelled order-preservingly to ``[k]``.

    The relabelling is monotone, so orientations are preserved.
    """
    vs = sorted(set(vertices))
    if vs and (vs[0] < 1 or vs[-1] > h.n):
        raise InvalidSize(f"vertices {vs} not within [1, {h.n}]")
    rank = {v: i + 1 for i, v in enumerate(vs)}
    keep = {
        tuple(rank[x] for x in s): o for s, o in h.edges.items() if all(x in rank for x in s)
    }
    return OrientedThreeHypergraph(len(vs), keep)


DEFAULT_ISO_CAP = 8


def are_isomorphic(
    h1: OrientedThreeHypergraph,
    h2: OrientedThreeHypergraph,
    cap: int = DEFAULT_ISO_CAP,
) -> Tuple[bool, Optional[Dict[int, int]]]:
    """Brute-force oriented isomorphism test with a witness bijection.

    Searches all vertex bijections compatible with the degree sequences
    (factorial worst case, hence the size cap).  Returns ``(True, mapping)``
    for the first witness in lexicographic order, else ``(False, None)``.
    """
    if h1.n != h2.n:
        raise SizeMismatch(f"vertex counts differ: {h1.n} vs {h2.n}")
    n = h1.n
    if n > cap:
        raise CapExceeded(f"isomorphism search capped at n <= {cap}")
    if h1.edge_count != h2.edge_count:
        return False, None
    deg1 = [h1.degree(v) for v in range(1, n + 1)]
    deg2 = [h2.degree(v) for v in range(1, n + 1)]
    if sorted(deg1) != sorted(deg2):
        return False, None
    for perm in itertools.permutations(range(1, n + 1)):
        if any(deg1[v - 1] != deg2[perm[v - 1] - 1] for v in range(1, n + 1)):
            continue
        mapping = {v: perm[v - 1] for v in range(1, n + 1)}
        if h1.relabel(mapping) == h2:
            return True, mapping
    return False, None
