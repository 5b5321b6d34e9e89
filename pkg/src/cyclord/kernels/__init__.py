"""Hot enumeration kernels with a compiled core and a pure-Python fallback.

The compiled backend (``_fast``, Cython) is preferred when importable;
otherwise the pure-Python backend (``_slow``) is used.  Both implement the
same contract and are cross-checked in the test suite.  Set
``CYCLORD_KERNELS=python`` to force the fallback, ``=cython`` to require
the extension.
"""

from __future__ import annotations

import os

from ..errors import CapExceeded
from . import _slow
from .tables import KernelTables, perm_tables_for, tables_for

_requested = os.environ.get("CYCLORD_KERNELS", "").strip().lower()

if _requested == "python":
    _impl = _slow
    BACKEND = "python"
else:
    try:
        from . import _fast as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        if _requested == "cython":
            raise
        _impl = _slow
        BACKEND = "python"

# Largest n whose full relabelling tables we are willing to materialize.
CANONICAL_N_CAP = 8
# Largest n for the full 2**C(n,3) subset scan (C(6,3)=20 -> 1 MiB mask).
TT_MASK_N_CAP = 6


def _check_length(n: int, code) -> None:
    m = tables_for(n).m
    if len(code) != m:
        raise ValueError(f"code length {len(code)} != C({n},3) = {m}")


def first_violation(n: int, code) -> int:
    """First violated transitivity implication of a trit code, or -1."""
    _check_length(n, code)
    return _impl.first_violation(n, code)


def is_transitive_code(n: int, code) -> bool:
    _check_length(n, code)
    return _impl.first_violation(n, code) == -1


def canonical_oriented_code(n: int, code) -> bytes:
    if n > CANONICAL_N_CAP:
        raise CapExceeded(f"canonical form capped at n <= {CANONICAL_N_CAP}")
    _check_length(n, code)
    return _impl.canonical_oriented_code(n, code)


def canonical_unoriented_code(n: int, code) -> bytes:
    if n > CANONICAL_N_CAP:
        raise CapExceeded(f"canonical form capped at n <= {CANONICAL_N_CAP}")
    _check_length(n, code)
    return _impl.canonical_unoriented_code(n, code)


def transitive_tt_mask(n: int) -> bytearray:
    if n > TT_MASK_N_CAP:
        raise CapExceeded(f"full subset scan capped at n <= {TT_MASK_N_CAP}")
    return _impl.transitive_tt_mask(n)
