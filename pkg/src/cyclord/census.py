"""Exhaustive enumeration and classification of small instances.

Instances are identified with integer-indexed codes over the
lexicographically sorted 3-subsets of ``[n]``: trit ``code[i]`` is 0
(absent), 1 (ascending) or 2 (descending).  Enumeration order is by
increasing integer value with triple ``i`` at place ``3**i`` (``2**i`` for
bit codes), which lines the subset indices up with the kernel bitmasks.

``run_census`` sweeps every oriented instance and every unoriented edge
set, classifies them, validates the structural theorems (hypertournament
uniqueness counts, evenness, the union property, the sufficient
extendability condition) by brute force, and emits one JSONL record per
instance plus a deterministic summary document.
"""

from __future__ import annotations

import json
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Tuple

from . import kernels
from .axioms import evenness_violations, is_self_transitive, is_transitive_pair_rule
from .core import (
    Orientation,
    OrientedThreeHypergraph,
    UnorientedThreeHypergraph,
    all_supports,
)
from .errors import CapExceeded, InternalContradiction
from .extend import extend_exact
from .kernels.tables import tables_for
from .perms import (
    all_cyclic_permutations,
    hypertournament_of_cyclic_perm,
    recover_cyclic_perm,
)
from .solver import find_transitive_orientation, is_cyclic_permutation_hypergraph

ORIENTED_N_CAP = 6
SUBSET_N_CAP = 7
CENSUS_N_CAP = 5
MINIMAL_CODES_STORED = 100

# ---------------------------------------------------------------------------
# code conversions
# ---------------------------------------------------------------------------


def code_of_oriented(h: OrientedThreeHypergraph) -> bytes:
    t = tables_for(h.n)
    code = bytearray(t.m)
    for s, o in h.edges.items():
        code[t.index[s]] = int(o)
    return bytes(code)


def oriented_of_code(n: int, code) -> OrientedThreeHypergraph:
    t = tables_for(n)
    return OrientedThreeHypergraph(
        n, {t.triples[i]: Orientation(v) for i, v in enumerate(code) if v}
    )


def code_of_unoriented(h: UnorientedThreeHypergraph) -> bytes:
    t = tables_for(h.n)
    code = bytearray(t.m)
    for s in h.edges:
        code[t.index[s]] = 1
    return bytes(code)


def unoriented_of_code(n: int, code) -> UnorientedThreeHypergraph:
    t = tables_for(n)
    return UnorientedThreeHypergraph(n, (t.triples[i] for i, v in enumerate(code) if v))


def code_str(code) -> str:
    return "".join("012"[v] for v in code)


def code_from_str(s: str) -> bytes:
    return bytes("012".index(ch) for ch in s)


def _trit_code(value: int, m: int) -> bytes:
    code = bytearray(m)
    for i in range(m):
        value, code[i] = divmod(value, 3)
    return bytes(code)


def _bit_code(value: int, m: int) -> bytes:
    return bytes((value >> i) & 1 for i in range(m))


# ---------------------------------------------------------------------------
# instance streams
# ---------------------------------------------------------------------------


def enumerate_instances(n: int, mode: str, up_to_iso: bool = False) -> Iterator:
    """Stream every instance of the given mode in deterministic order.

    ``oriented`` walks all ``3**C(n,3)`` oriented hypergraphs,
    ``unoriented`` all ``2**C(n,3)`` edge sets, ``tt_subsets`` all spanning
    subhypergraphs of the ascending hypertournament.  With ``up_to_iso``
    only instances equal to their canonical relabelling (the
    lexicographically minimal code over all vertex bijections) are yielded,
    one per isomorphism class.
    """
    t = tables_for(n)
    if mode == "oriented":
        if n > ORIENTED_N_CAP:
            raise CapExceeded(f"oriented enumeration capped at n <= {ORIENTED_N_CAP}")
        for v in range(3**t.m):
            code = _trit_code(v, t.m)
            if up_to_iso and kernels.canonical_oriented_code(n, code) != code:
                continue
            yield oriented_of_code(n, code)
    elif mode == "tt_subsets":
        if n > SUBSET_N_CAP:
            raise CapExceeded(f"subset enumeration capped at n <= {SUBSET_N_CAP}")
        for v in range(1 << t.m):
            code = _bit_code(v, t.m)
            if up_to_iso and kernels.canonical_oriented_code(n, code) != code:
                continue
            yield oriented_of_code(n, code)
    elif mode == "unoriented":
        if n > SUBSET_N_CAP:
            raise CapExceeded(f"subset enumeration capped at n <= {SUBSET_N_CAP}")
        for v in range(1 << t.m):
            code = _bit_code(v, t.m)
            if up_to_iso and kernels.canonical_unoriented_code(n, code) != code:
                continue
            yield unoriented_of_code(n, code)
    else:
        raise ValueError(f"unknown mode {mode!r}")


# ---------------------------------------------------------------------------
# records
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CensusRecord:
    """One classified instance; flags are mutually consistent by construction."""

    n: int
    mode: str
    code: str
    flags: dict
    witness: dict

    def to_json(self) -> str:
        return json.dumps(
            {
                "code": self.code,
                "flags": self.flags,
                "mode": self.mode,
                "n": self.n,
                "witness": self.witness,
            },
            sort_keys=True,
            separators=(",", ":"),
        )

    @classmethod
    def from_json(cls, line: str) -> "CensusRecord":
        d = json.loads(line)
        return cls(d["n"], d["mode"], d["code"], d["flags"], d["witness"])


def compute_oriented_flags(h: OrientedThreeHypergraph) -> Tuple[dict, dict]:
    """Classify one oriented instance through the object-level operations.

    Slow reference path; the census itself classifies through the kernels,
    and the two are cross-checked in the tests.
    """
    flags = {}
    witness = {}
    flags["transitive"] = is_transitive_pair_rule(h)[0]
    flags["tt_embedded"] = h.is_tt_embedded()
    flags["self_transitive"] = is_self_transitive(h)
    missing = UnorientedThreeHypergraph(
        h.n, (s for s in all_supports(h.n) if s not in h.edges)
    )
    flags["complement_orientable"] = find_transitive_orientation(missing)[0] is not None
    if flags["transitive"]:
        ext = extend_exact(h)
        flags["extendable"] = ext is not None
        if ext is not None:
            witness["extension"] = str(ext)
    else:
        flags["extendable"] = False
    if flags["self_transitive"]:
        witness["permutation"] = str(recover_cyclic_perm(h))
    return flags, witness


def compute_unoriented_flags(h: UnorientedThreeHypergraph) -> Tuple[dict, dict]:
    """Classify one unoriented instance through the object-level operations."""
    from .core import complement_unoriented

    flags = {}
    witness = {}
    flags["comparability"] = find_transitive_orientation(h)[0] is not None
    flags["complement_comparability"] = (
        find_transitive_orientation(complement_unoriented(h))[0] is not None
    )
    if flags["comparability"] and flags["complement_comparability"]:
        ok, phi = is_cyclic_permutation_hypergraph(h)
        flags["permutation_hypergraph"] = ok
        if phi is not None:
            witness["permutation"] = str(phi)
    else:
        flags["permutation_hypergraph"] = False
    return flags, witness


# ---------------------------------------------------------------------------
# the census proper
# ---------------------------------------------------------------------------


def _chunks(total: int, parts: int) -> List[range]:
    parts = max(1, min(parts, total))
    size = (total + parts - 1) // parts
    return [range(lo, min(lo + size, total)) for lo in range(0, total, size)]


def _map_ordered(fn, chunks, workers: int):
    if workers <= 1 or len(chunks) <= 1:
        return [fn(c) for c in chunks]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, chunks))


class _CensusContext:
    def __init__(self, n: int):
        self.n = n
        self.t = tables_for(n)
        self.m = self.t.m
        self.full_mask = (1 << self.m) - 1
        # complete orientations induced by each cyclic ordering, scan order
        self.complete = [
            (str(phi), code_of_oriented(hypertournament_of_cyclic_perm(phi)))
            for phi in all_cyclic_permutations(n)
        ]
        # filled by the first oriented pass: support mask -> transitive codes
        self.by_mask: Dict[int, List[bytes]] = {}

    def support_mask(self, code: bytes) -> int:
        mask = 0
        for i, v in enumerate(code):
            if v:
                mask |= 1 << i
        return mask

    def first_extension(self, code: bytes) -> Optional[str]:
        for phi_str, complete in self.complete:
            if all(c == 0 or c == f for c, f in zip(code, complete)):
                return phi_str
        return None


def _pass_transitive(ctx: _CensusContext, codes: range) -> Dict[int, List[bytes]]:
    local: Dict[int, List[bytes]] = {}
    n, m = ctx.n, ctx.m
    for v in codes:
        code = _trit_code(v, m)
        if kernels.is_transitive_code(n, code):
            local.setdefault(ctx.support_mask(code), []).append(code)
    return local


def _pass_records(ctx: _CensusContext, codes: range):
    lines: List[str] = []
    tally = {
        "transitive": 0,
        "hypertournaments": 0,
        "transitive_hypertournaments": 0,
        "tt_embedded": 0,
        "self_transitive": 0,
        "evenness_violations": 0,
        "extendable": 0,
        "not_extendable": 0,
        "theorem4_applicable": 0,
    }
    theorem4_violations: List[str] = []
    not_extendable: List[Tuple[int, str]] = []
    contradictions: List[str] = []
    n, m = ctx.n, ctx.m
    for v in codes:
        code = _trit_code(v, m)
        mask = ctx.support_mask(code)
        transitive = code in ctx.by_mask.get(mask, ())
        tt_embedded = 2 not in code
        complete = mask == ctx.full_mask
        flags = {"transitive": transitive, "tt_embedded": tt_embedded}
        witness = {}
        if complete:
            tally["hypertournaments"] += 1
            if transitive:
                tally["transitive_hypertournaments"] += 1
        if tt_embedded:
            tally["tt_embedded"] += 1
            comp_code = bytes(0 if c else 1 for c in code)
            flags["self_transitive"] = transitive and kernels.is_transitive_code(n, comp_code)
        else:
            flags["self_transitive"] = False
        if flags["self_transitive"]:
            tally["self_transitive"] += 1
            h = oriented_of_code(n, code)
            tally["evenness_violations"] += len(evenness_violations(h))
            try:
                witness["permutation"] = str(recover_cyclic_perm(h))
            except Exception as exc:  # impossible for valid data; keep artifact
                contradictions.append(f"recover failed on {code_str(code)}: {exc}")
        absent_mask = ctx.full_mask ^ mask
        complement_orientable = absent_mask in ctx.by_mask
        flags["complement_orientable"] = complement_orientable
        if transitive:
            tally["transitive"] += 1
            extension = ctx.first_extension(code)
            flags["extendable"] = extension is not None
            if extension is not None:
                tally["extendable"] += 1
                witness["extension"] = extension
            else:
                tally["not_extendable"] += 1
                not_extendable.append((bin(mask).count("1"), code_str(code)))
            if complement_orientable:
                tally["theorem4_applicable"] += 1
                if extension is None:
                    theorem4_violations.append(code_str(code))
        else:
            flags["extendable"] = False
        rec = CensusRecord(n, "oriented", code_str(code), flags, witness)
        lines.append(rec.to_json())
    return lines, tally, theorem4_violations, not_extendable, contradictions


def _pass_unoriented(ctx: _CensusContext, masks: range):
    lines: List[str] = []
    tally = {"comparability": 0, "permutation_hypergraph": 0}
    contradictions: List[str] = []
    n = ctx.n
    for mask in masks:
        code = _bit_code(mask, ctx.m)
        comparability = mask in ctx.by_mask
        complement_comparability = (ctx.full_mask ^ mask) in ctx.by_mask
        flags = {
            "comparability": comparability,
            "complement_comparability": complement_comparability,
        }
        witness = {}
        if comparability:
            tally["comparability"] += 1
        if comparability and complement_comparability:
            try:
                ok, phi = is_cyclic_permutation_hypergraph(unoriented_of_code(n, code))
            except InternalContradiction as exc:
                ok, phi = False, None
                contradictions.append(f"{code_str(code)}: {exc}")
            flags["permutation_hypergraph"] = ok
            if phi is not None:
                witness["permutation"] = str(phi)
            if ok:
                tally["permutation_hypergraph"] += 1
        else:
            flags["permutation_hypergraph"] = False
        lines.append(CensusRecord(n, "unoriented", code_str(code), flags, witness).to_json())
    return lines, tally, contradictions


def _pass_union(ctx: _CensusContext, masks: range):
    pairs = 0
    violations: List[str] = []
    n = ctx.n
    for mask in masks:
        comp = ctx.full_mask ^ mask
        if mask not in ctx.by_mask or comp not in ctx.by_mask:
            continue
        for a in ctx.by_mask[mask]:
            for b in ctx.by_mask[comp]:
                union_code = bytes(x or y for x, y in zip(a, b))
                pairs += 1
                if not kernels.is_transitive_code(n, union_code):
                    violations.append(
                        f"{code_str(a)}+{code_str(b)}={code_str(union_code)}"
                    )
    return pairs, violations


def run_census(n: int, out_dir: str, workers: int = 1) -> dict:
    """Full sweep at size ``n``: records to ``records-n{n}.jsonl``, summary
    to ``summary-n{n}.json`` (returned as a dict).

    Output is deterministic: byte-identical across runs and across worker
    counts.  The enumeration space is partitioned into contiguous code
    blocks; workers classify blocks independently and the results are
    merged in block order.
    """
    if n < 3:
        raise CapExceeded("census needs n >= 3")
    if n > CENSUS_N_CAP:
        raise CapExceeded(f"census sweeps 3**C(n,3) states; capped at n <= {CENSUS_N_CAP}")
    ctx = _CensusContext(n)
    parts = max(workers, 1) * 4

    for local in _map_ordered(lambda c: _pass_transitive(ctx, c), _chunks(3**ctx.m, parts), workers):
        for mask, codes in local.items():
            ctx.by_mask.setdefault(mask, []).extend(codes)

    record_chunks = _map_ordered(
        lambda c: _pass_records(ctx, c), _chunks(3**ctx.m, parts), workers
    )
    unoriented_chunks = _map_ordered(
        lambda c: _pass_unoriented(ctx, c), _chunks(1 << ctx.m, parts), workers
    )
    union_chunks = _map_ordered(
        lambda c: _pass_union(ctx, c), _chunks(1 << ctx.m, parts), workers
    )

    tally: Dict[str, int] = {}
    theorem4_violations: List[str] = []
    not_extendable: List[Tuple[int, str]] = []
    contradictions: List[str] = []
    lines: List[str] = []
    for chunk_lines, chunk_tally, chunk_t4, chunk_ne, chunk_bad in record_chunks:
        lines.extend(chunk_lines)
        for k, v in chunk_tally.items():
            tally[k] = tally.get(k, 0) + v
        theorem4_violations.extend(chunk_t4)
        not_extendable.extend(chunk_ne)
        contradictions.extend(chunk_bad)
    for chunk_lines, chunk_tally, chunk_bad in unoriented_chunks:
        lines.extend(chunk_lines)
        for k, v in chunk_tally.items():
            tally[k] = tally.get(k, 0) + v
        contradictions.extend(chunk_bad)
    union_pairs = 0
    union_violations: List[str] = []
    for pairs, violations in union_chunks:
        union_pairs += pairs
        union_violations.extend(violations)

    minimal = None
    if not_extendable:
        min_edges = min(e for e, _ in not_extendable)
        codes = [c for e, c in not_extendable if e == min_edges]
        minimal = {
            "edge_count": min_edges,
            "count": len(codes),
            "codes": codes[:MINIMAL_CODES_STORED],
        }

    summary = {
        "n": n,
        "oriented_instances": 3**ctx.m,
        "unoriented_instances": 1 << ctx.m,
        "transitive_oriented": tally.get("transitive", 0),
        "hypertournaments": tally.get("hypertournaments", 0),
        "transitive_hypertournaments": tally.get("transitive_hypertournaments", 0),
        "expected_transitive_hypertournaments": math.factorial(n - 1),
        "tt_subsets": tally.get("tt_embedded", 0),
        "self_transitive": tally.get("self_transitive", 0),
        "expected_self_transitive": math.factorial(n - 1),
        "evenness_violations_among_self_transitive": tally.get("evenness_violations", 0),
        "comparability": tally.get("comparability", 0),
        "permutation_hypergraphs": tally.get("permutation_hypergraph", 0),
        "extendable": tally.get("extendable", 0),
        "not_extendable": tally.get("not_extendable", 0),
        "minimal_not_extendable": minimal,
        "theorem4_applicable": tally.get("theorem4_applicable", 0),
        "theorem4_violations": theorem4_violations,
        "union_lemma_pairs": union_pairs,
        "union_lemma_violations": union_violations,
        "internal_contradictions": contradictions,
    }

    os.makedirs(out_dir, exist_ok=True)
    records_path = os.path.join(out_dir, f"records-n{n}.jsonl")
    summary_path = os.path.join(out_dir, f"summary-n{n}.json")
    try:
        with open(records_path, "w") as fh:
            fh.write("\n".join(lines) + "\n")
        with open(summary_path, "w") as fh:
            fh.write(json.dumps(summary, sort_keys=True, indent=2) + "\n")
    except OSError as exc:
        raise OSError(f"census output to {out_dir!r} failed: {exc}") from exc
    return summary
