# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel backend: tight loops over trit/bit instance codes."""

from functools import lru_cache

from .tables import perm_tables_for, tables_for


def first_violation(int n, code) -> int:
    """Index of the first violated transitivity implication, or -1."""
    t = tables_for(n)
    cdef const unsigned char[::1] c = code
    cdef const int[:, ::1] cons = t.constraints
    cdef Py_ssize_t r, k = cons.shape[0]
    for r in range(k):
        if (
            c[cons[r, 0]] == <unsigned char> cons[r, 1]
            and c[cons[r, 2]] == <unsigned char> cons[r, 3]
            and c[cons[r, 4]] != <unsigned char> cons[r, 5]
        ):
            return r
    return -1


cdef bytes _canonical(const unsigned char[::1] code,
                      const unsigned short[:, ::1] src,
                      const unsigned char[:, ::1] flip):
    cdef Py_ssize_t nperm = src.shape[0]
    cdef Py_ssize_t m = src.shape[1]
    cdef bytearray best_ba = bytearray(m)
    cdef unsigned char[::1] best = best_ba
    cdef Py_ssize_t p, j
    cdef unsigned char v
    cdef bint filling
    # seed with the identity relabelling (row 0 of lexicographic S_n)
    for j in range(m):
        best[j] = code[src[0, j]] if not flip[0, j] else (3 - code[src[0, j]]) % 3
    for p in range(1, nperm):
        filling = False
        for j in range(m):
            v = code[src[p, j]]
            if flip[p, j] and v != 0:
                v = 3 - v
            if filling:
                best[j] = v
            elif v < best[j]:
                filling = True
                best[j] = v
            elif v > best[j]:
                break
    return bytes(best_ba)


def canonical_oriented_code(int n, code) -> bytes:
    """Lexicographically minimal trit code over all vertex bijections."""
    perms, src, flip = perm_tables_for(n)
    return _canonical(code, src, flip)


@lru_cache(maxsize=8)
def _zero_flip(int n):
    import numpy as np
    _, src, _ = perm_tables_for(n)
    return np.zeros_like(src, dtype=np.uint8)


def canonical_unoriented_code(int n, code) -> bytes:
    """Minimal bit code over all vertex bijections (orientations ignored)."""
    perms, src, _ = perm_tables_for(n)
    return _canonical(code, src, _zero_flip(n))


def transitive_tt_mask(int n):
    """Byte mask over all 2**C(n,3) ascending-oriented edge subsets."""
    t = tables_for(n)
    cdef const int[:, ::1] ff = t.ff_constraints
    cdef Py_ssize_t m = t.m
    cdef Py_ssize_t nff = ff.shape[0]
    cdef unsigned long long total = 1ULL << m
    out = bytearray(total)
    cdef unsigned char[::1] mask = out
    cdef unsigned long long c
    cdef Py_ssize_t r
    cdef bint ok
    with nogil:
        for c in range(total):
            ok = True
            for r in range(nff):
                if (c >> ff[r, 0]) & (c >> ff[r, 1]) & (~(c >> ff[r, 2])) & 1ULL:
                    ok = False
                    break
            mask[c] = 1 if ok else 0
    return out
