"""Cyclic permutations, their induced hypergraphs, and recovery.

A cyclic permutation is an equivalence class of bijections ``[n] -> [n]``
under rotation; we canonicalize by rotating the sequence to start at 1.
A 3-set ``{i < j < k}`` is *clockwise* when ``j`` and ``k`` follow ``i`` in
that order around the cycle.  The induced hypergraph keeps exactly the
clockwise 3-sets, all with the ascending orientation, and is recoverable
from its edges alone via the link of the largest vertex.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Tuple

from .axioms import is_self_transitive
from .core import FORWARD, BACKWARD, Orientation, OrientedThreeHypergraph, Support, all_supports
from .errors import Degenerate, InvalidSize, NotSelfTransitive
from .links import linear_perm_from_graph, link_of


@dataclass(frozen=True)
class CyclicPermutation:
    """Rotation class of a bijection of ``[n]``, stored starting at 1."""

    order: Tuple[int, ...]

    def __post_init__(self):
        seq = tuple(self.order)
        n = len(seq)
        if sorted(seq) != list(range(1, n + 1)):
            raise InvalidSize(f"{seq} is not a permutation of [1, {n}]")
        if seq and seq[0] != 1:
            raise InvalidSize("canonical rotation must start at 1; use from_sequence")
        object.__setattr__(self, "order", seq)

    @classmethod
    def from_sequence(cls, seq) -> "CyclicPermutation":
        seq = tuple(seq)
        if 1 not in seq:
            raise InvalidSize(f"{seq} does not contain 1")
        i = seq.index(1)
        return cls(seq[i:] + seq[:i])

    @property
    def n(self) -> int:
        return len(self.order)

    def positions(self) -> dict:
        return {x: p for p, x in enumerate(self.order)}

    def __str__(self) -> str:
        return "(" + " ".join(str(x) for x in self.order) + ")"


def is_clockwise(phi: CyclicPermutation, i: int, j: int, k: int) -> bool:
    """Whether ``i < j < k`` appear in this order around the cycle.

    Uses circular distances from ``i``; the value is invariant under the
    choice of rotation representative.
    """
    if not i < j < k:
        raise Degenerate(f"need i < j < k, got ({i}, {j}, {k})")
    n = phi.n
    pos = phi.positions()
    return (pos[j] - pos[i]) % n < (pos[k] - pos[i]) % n


def hypergraph_of_cyclic_perm(phi: CyclicPermutation) -> OrientedThreeHypergraph:
    """Edges are the clockwise 3-sets, all ascending; the result is a
    spanning subhypergraph of the ascending hypertournament."""
    if phi.n < 3:
        raise InvalidSize(f"need n >= 3, got {phi.n}")
    n = phi.n
    pos = phi.positions()
    edges = {}
    for i, j, k in all_supports(n):
        if (pos[j] - pos[i]) % n < (pos[k] - pos[i]) % n:
            edges[(i, j, k)] = FORWARD
    return OrientedThreeHypergraph(n, edges)


def hypertournament_of_cyclic_perm(phi: CyclicPermutation) -> OrientedThreeHypergraph:
    """The complete orientation induced by ``phi``: every 3-set oriented,
    ascending iff clockwise."""
    if phi.n < 3:
        raise InvalidSize(f"need n >= 3, got {phi.n}")
    n = phi.n
    pos = phi.positions()
    edges = {}
    for i, j, k in all_supports(n):
        clockwise = (pos[j] - pos[i]) % n < (pos[k] - pos[i]) % n
        edges[(i, j, k)] = FORWARD if clockwise else BACKWARD
    return OrientedThreeHypergraph(n, edges)


def induces_edge(phi: CyclicPermutation, support: Support, orientation: Orientation) -> bool:
    """Whether ``phi`` orients ``support`` as ``orientation``."""
    i, j, k = sorted(support)
    want_forward = is_clockwise(phi, i, j, k)
    return (orientation is FORWARD) == want_forward


def reverse_cyclic_perm(phi: CyclicPermutation) -> CyclicPermutation:
    """Class of the reversed sequence; an involution."""
    return CyclicPermutation.from_sequence(tuple(reversed(phi.order)))


def all_cyclic_permutations(n: int) -> Iterator[CyclicPermutation]:
    """All ``(n-1)!`` classes, with 1 fixed first and the rest in
    lexicographic order."""
    for rest in itertools.permutations(range(2, n + 1)):
        yield CyclicPermutation((1,) + rest)


def recover_cyclic_perm(h: OrientedThreeHypergraph) -> CyclicPermutation:
    """Recover the unique cyclic permutation inducing a self-transitive
    hypergraph, by way of the link of the largest vertex.

    The link of ``n`` is a self-transitive oriented graph; reading its
    linear permutation ``psi`` and appending ``n`` yields the class.  The
    result is verified edge-for-edge before returning, so a verification
    failure (impossible for valid input) surfaces as
    :class:`NotSelfTransitive` rather than a wrong answer.
    """
    n = h.n
    if n < 3:
        raise InvalidSize(f"need n >= 3, got {n}")
    if not is_self_transitive(h):
        raise NotSelfTransitive("input is not a self-transitive spanning subhypergraph")
    psi = linear_perm_from_graph(link_of(h, n))
    phi = CyclicPermutation.from_sequence(psi + (n,))
    if hypergraph_of_cyclic_perm(phi) != h:
        raise NotSelfTransitive("recovered permutation does not reproduce the input")
    return phi
