"""Precomputed lookup tables driving the enumeration kernels.

Instances are encoded as trit strings over the lexicographically sorted
3-subsets of ``[n]``: byte ``0`` = absent, ``1`` = ascending orientation,
``2`` = descending.  The transitivity rule is compiled once per ``n`` into
a flat list of implications

    code[i] == oi  and  code[j] == oj   ==>   code[k] == ok

one per ordered 4-tuple ``(u, v, z, w)`` of distinct vertices, scanned in
lexicographic order (edge ``{u,v,z}`` read as ``(u v z)``, edge ``{z,v,w}``
as ``(z v w)``, conclusion ``(u v w)``).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Tuple

import numpy as np

from ..core import FORWARD, arrangement_parity_even, canonical_oriented_triple

Support = Tuple[int, int, int]


@dataclass(frozen=True)
class KernelTables:
    n: int
    m: int
    triples: Tuple[Support, ...]
    index: Dict[Support, int]
    # (i, oi, j, oj, k, ok) rows, int32, C-contiguous
    constraints: np.ndarray
    # subset of rows with both premises FORWARD, reduced to (i, j, k)
    ff_constraints: np.ndarray
    # 4-tuple (u, v, z, w) behind each constraint row, for witness reporting
    witnesses: Tuple[Tuple[int, int, int, int], ...]


@lru_cache(maxsize=None)
def tables_for(n: int) -> KernelTables:
    triples = tuple(itertools.combinations(range(1, n + 1), 3))
    index = {t: i for i, t in enumerate(triples)}
    rows: List[Tuple[int, int, int, int, int, int]] = []
    witnesses: List[Tuple[int, int, int, int]] = []
    for u, v, z, w in itertools.permutations(range(1, n + 1), 4):
        p1 = canonical_oriented_triple(u, v, z)
        p2 = canonical_oriented_triple(z, v, w)
        concl = canonical_oriented_triple(u, v, w)
        rows.append(
            (
                index[p1.support],
                int(p1.orientation),
                index[p2.support],
                int(p2.orientation),
                index[concl.support],
                int(concl.orientation),
            )
        )
        witnesses.append((u, v, z, w))
    constraints = np.asarray(rows, dtype=np.int32).reshape(len(rows), 6)
    ff = [(r[0], r[2], r[4]) for r in rows if r[1] == int(FORWARD) and r[3] == int(FORWARD)]
    # With both premises ascending the conclusion is ascending too (the
    # ascending hypertournament is transitive); the bit-level kernel relies
    # on this, so keep it checked.
    assert all(r[5] == int(FORWARD) for r in rows if r[1] == int(FORWARD) and r[3] == int(FORWARD))
    ff_constraints = np.asarray(ff, dtype=np.int32).reshape(len(ff), 3)
    return KernelTables(n, len(triples), triples, index, constraints, ff_constraints, tuple(witnesses))


@lru_cache(maxsize=8)
def perm_tables_for(n: int):
    """Relabelling tables over all ``n!`` vertex bijections.

    Returns ``(perms, src, flip)`` where for permutation ``p`` the relabelled
    code is ``out[j] = code[src[p, j]]``, orientation swapped when
    ``flip[p, j]`` is set.  Memory is factorial in ``n``; callers cap ``n``.
    """
    t = tables_for(n)
    perms = tuple(itertools.permutations(range(1, n + 1)))
    src = np.empty((len(perms), t.m), dtype=np.uint16)
    flip = np.empty((len(perms), t.m), dtype=np.uint8)
    for p, perm in enumerate(perms):
        for i, (a, b, c) in enumerate(t.triples):
            image = (perm[a - 1], perm[b - 1], perm[c - 1])
            j = t.index[tuple(sorted(image))]
            src[p, j] = i
            flip[p, j] = 0 if arrangement_parity_even(image) else 1
    return perms, src, flip


ZERO_FLIPS_CACHE: Dict[int, np.ndarray] = {}


def zero_flips_for(n: int) -> np.ndarray:
    """All-zero flip table: canonicalize ignoring orientations (bit codes)."""
    if n not in ZERO_FLIPS_CACHE:
        _, src, _ = perm_tables_for(n)
        ZERO_FLIPS_CACHE[n] = np.zeros_like(src, dtype=np.uint8)
    return ZERO_FLIPS_CACHE[n]
