"""Pure-Python kernel backend.

Same contract as the compiled backend in ``_fast.pyx``; used when the
extension is unavailable (or forced via ``CYCLORD_KERNELS=python``).
The bulk subset scan is vectorized with numpy, the per-code operations
are plain loops with early exits.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .tables import perm_tables_for, tables_for, zero_flips_for


@lru_cache(maxsize=None)
def _constraint_rows(n: int):
    return [tuple(row) for row in tables_for(n).constraints.tolist()]


def first_violation(n: int, code) -> int:
    """Index of the first violated transitivity implication, or -1."""
    for t, (i, oi, j, oj, k, ok) in enumerate(_constraint_rows(n)):
        if code[i] == oi and code[j] == oj and code[k] != ok:
            return t
    return -1


@lru_cache(maxsize=8)
def _perm_rows(n: int):
    _, src, flip = perm_tables_for(n)
    return list(zip(src.tolist(), flip.tolist()))


def _canonical(code, rows) -> bytes:
    flip_map = bytes((0, 2, 1))
    best = None
    for src, flip in rows:
        cand = bytes(
            flip_map[code[s]] if f else code[s] for s, f in zip(src, flip)
        )
        if best is None or cand < best:
            best = cand
    return best


def canonical_oriented_code(n: int, code) -> bytes:
    """Lexicographically minimal trit code over all vertex bijections."""
    return _canonical(bytes(code), _perm_rows(n))


@lru_cache(maxsize=8)
def _perm_rows_unoriented(n: int):
    _, src, _ = perm_tables_for(n)
    zeros = zero_flips_for(n)
    return list(zip(src.tolist(), zeros.tolist()))


def canonical_unoriented_code(n: int, code) -> bytes:
    """Minimal bit code over all vertex bijections (orientations ignored)."""
    return _canonical(bytes(code), _perm_rows_unoriented(n))


def transitive_tt_mask(n: int) -> bytearray:
    """Byte mask over all ``2**C(n,3)`` ascending-oriented edge subsets.

    ``mask[s] == 1`` iff the spanning subhypergraph of the ascending
    hypertournament with edge-bitmask ``s`` is transitive.
    """
    t = tables_for(n)
    codes = np.arange(1 << t.m, dtype=np.uint64)
    ok = np.ones(codes.size, dtype=bool)
    for i, j, k in t.ff_constraints.tolist():
        bad = ((codes >> np.uint64(i)) & (codes >> np.uint64(j)) & ~(codes >> np.uint64(k))) & np.uint64(1)
        ok &= bad == 0
    return bytearray(ok.astype(np.uint8).tobytes())
