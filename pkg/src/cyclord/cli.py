"""Command-line front end and the ``.c3h`` instance text format.

Format::

    # comment, blank lines ignored
    mode oriented            (or: mode unoriented)
    n 4
    e 1 2 4                  oriented mode: one ordered triple per line
    e 1 3 4
    u 1 2 3                  unoriented mode: one 3-set per line

Ordered triples are normalized (rotations merge; both orientations of one
3-set is an error), so cyclic-order relations can be pasted in directly.
Rendering is canonical -- sorted records, single spaces, trailing newline
-- and ``parse(render(h)) == h`` byte-for-byte on canonical files.

Exit codes: 0 success / positive decision, 1 negative decision (UNSAT,
NOT_EXTENDABLE, INCONCLUSIVE, failed axioms or preconditions), 2 usage or
parse error, 3 search cap exceeded.  ``CYCLORD_CAP`` overrides the solver's
backtracking decision budget.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import List, Optional, Tuple, Union

from .axioms import TernaryRelationInput, axiom_report
from .core import (
    OrientedThreeHypergraph,
    UnorientedThreeHypergraph,
    complement_in_tt,
    complement_unoriented,
    canonical_oriented_triple,
)
from .census import run_census
from .errors import (
    AsymmetryViolation,
    CapExceeded,
    CyclordError,
    Degenerate,
    InternalContradiction,
    ParseError,
)
from .extend import extend_exact, extend_sufficient
from .links import link_of
from .perms import recover_cyclic_perm
from .solver import DEFAULT_DECISION_CAP, find_transitive_orientation

Instance = Union[OrientedThreeHypergraph, UnorientedThreeHypergraph]


def _split_records(text: str) -> Tuple[str, int, List[Tuple[int, str, Tuple[int, int, int]]]]:
    """Header fields plus ``(line_no, kind, triple)`` body records."""
    mode = None
    n = None
    records = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        key = parts[0]
        if key == "mode":
            if len(parts) != 2 or parts[1] not in ("oriented", "unoriented"):
                raise ParseError("mode must be 'oriented' or 'unoriented'", line_no)
            mode = parts[1]
        elif key == "n":
            if len(parts) != 2 or not parts[1].isdigit():
                raise ParseError("n must be a nonnegative integer", line_no)
            n = int(parts[1])
        elif key in ("e", "u"):
            if mode is None or n is None:
                raise ParseError("record before 'mode'/'n' header", line_no)
            if (key == "e") != (mode == "oriented"):
                raise ParseError(f"record '{key}' not valid in {mode} mode", line_no)
            if len(parts) != 4:
                raise ParseError(f"expected '{key} a b c'", line_no)
            try:
                triple = tuple(int(x) for x in parts[1:])
            except ValueError:
                raise ParseError("vertices must be integers", line_no) from None
            if any(x < 1 or x > n for x in triple):
                raise ParseError(f"vertex outside [1, {n}]", line_no)
            records.append((line_no, key, triple))
        else:
            raise ParseError(f"unknown record {key!r}", line_no)
    if mode is None or n is None:
        raise ParseError("missing 'mode' or 'n' header")
    return mode, n, records


def parse_instance(text: str) -> Instance:
    """Parse instance text into a hypergraph; errors carry line numbers."""
    mode, n, records = _split_records(text)
    if mode == "unoriented":
        edges = set()
        for line_no, _, triple in records:
            if len(set(triple)) != 3:
                raise Degenerate(f"line {line_no}: 3-set {triple} repeats a vertex")
            edges.add(tuple(sorted(triple)))
        return UnorientedThreeHypergraph(n, edges)
    edges = {}
    for line_no, _, (a, b, c) in records:
        try:
            t = canonical_oriented_triple(a, b, c)
        except Degenerate as exc:
            raise Degenerate(f"line {line_no}: {exc}") from None
        prev = edges.get(t.support)
        if prev is not None and prev is not t.orientation:
            raise AsymmetryViolation(
                t.support, f"line {line_no}: both orientations given for {t.support}"
            )
        edges[t.support] = t.orientation
    return OrientedThreeHypergraph(n, edges)


def render_instance(h: Instance) -> str:
    """Canonical text: header, then sorted records, single spaces, final newline."""
    if isinstance(h, OrientedThreeHypergraph):
        lines = ["mode oriented", f"n {h.n}"]
        for t in h.triples():
            lines.append("e %d %d %d" % t.ordered())
    else:
        lines = ["mode unoriented", f"n {h.n}"]
        for s in h.supports():
            lines.append("u %d %d %d" % s)
    return "\n".join(lines) + "\n"


def _relation_of(text: str) -> TernaryRelationInput:
    mode, n, records = _split_records(text)
    if mode != "oriented":
        raise ParseError("validate needs an oriented (relation) instance")
    return TernaryRelationInput(n, [triple for _, _, triple in records])


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path!r}: {exc.strerror}") from None


def _emit_json(payload: dict) -> None:
    print(json.dumps(payload, sort_keys=True))


def _require_oriented(inst: Instance, command: str) -> OrientedThreeHypergraph:
    if not isinstance(inst, OrientedThreeHypergraph):
        raise ParseError(f"{command} needs an oriented instance")
    return inst


def _require_unoriented(inst: Instance, command: str) -> UnorientedThreeHypergraph:
    if not isinstance(inst, UnorientedThreeHypergraph):
        raise ParseError(f"{command} needs an unoriented instance")
    return inst


def _cmd_validate(args, cap: int) -> int:
    report = axiom_report(_relation_of(_read(args.file)))
    if args.json:
        _emit_json(
            {
                "command": "validate",
                "n": report.n,
                "is_cyclic_consistent": report.is_cyclic_consistent,
                "is_asymmetric": report.is_asymmetric,
                "is_transitive": report.is_transitive,
                "is_total": report.is_total,
                "is_partial_cyclic_order": report.is_partial_cyclic_order,
                "is_complete_cyclic_order": report.is_complete_cyclic_order,
                "violations": report.violations,
            }
        )
    else:
        for name, value in (
            ("cyclic-consistent", report.is_cyclic_consistent),
            ("asymmetric", report.is_asymmetric),
            ("transitive", report.is_transitive),
            ("total", report.is_total),
            ("partial-cyclic-order", report.is_partial_cyclic_order),
            ("complete-cyclic-order", report.is_complete_cyclic_order),
        ):
            print(f"{name}: {'yes' if value else 'no'}")
        for v in report.violations:
            if v["kind"] != "totality":
                print(f"violation[{v['kind']}]: {json.dumps(v, sort_keys=True)}")
    return 0 if report.is_partial_cyclic_order else 1


def _cmd_orient(args, cap: int) -> int:
    h = _require_unoriented(parse_instance(_read(args.file)), "orient")
    oriented, stats = find_transitive_orientation(h, decision_cap=cap)
    if args.json:
        _emit_json(
            {
                "command": "orient",
                "satisfiable": oriented is not None,
                "instance": None if oriented is None else render_instance(oriented),
                "stats": {
                    "decisions": stats.decisions,
                    "propagations": stats.propagations,
                    "conflicts": stats.conflicts,
                },
            }
        )
    elif oriented is None:
        print("UNSAT")
    else:
        sys.stdout.write(render_instance(oriented))
    return 0 if oriented is not None else 1


def _cmd_recover(args, cap: int) -> int:
    h = _require_oriented(parse_instance(_read(args.file)), "recover")
    phi = recover_cyclic_perm(h)
    if args.json:
        _emit_json({"command": "recover", "permutation": str(phi)})
    else:
        print(str(phi))
    return 0


def _cmd_complement(args, cap: int) -> int:
    inst = parse_instance(_read(args.file))
    if isinstance(inst, OrientedThreeHypergraph):
        result: Instance = complement_in_tt(inst)
    else:
        result = complement_unoriented(inst)
    if args.json:
        _emit_json({"command": "complement", "instance": render_instance(result)})
    else:
        sys.stdout.write(render_instance(result))
    return 0


def _cmd_link(args, cap: int) -> int:
    h = _require_oriented(parse_instance(_read(args.file)), "link")
    g = link_of(h, args.vertex)
    if args.json:
        _emit_json({"command": "link", "m": g.m, "arcs": [list(a) for a in g.sorted_arcs()]})
    else:
        print(f"m {g.m}")
        for u, w in g.sorted_arcs():
            print(f"{u} {w}")
    return 0


def _cmd_extend(args, cap: int) -> int:
    h = _require_oriented(parse_instance(_read(args.file)), "extend")
    if args.sufficient:
        phi = extend_sufficient(h, decision_cap=cap)
        outcome = "witness" if phi is not None else "inconclusive"
        negative_text = "INCONCLUSIVE"
    else:
        phi = extend_exact(h)
        outcome = "witness" if phi is not None else "not_extendable"
        negative_text = "NOT_EXTENDABLE"
    if args.json:
        _emit_json(
            {
                "command": "extend",
                "mode": "sufficient" if args.sufficient else "exact",
                "result": outcome,
                "witness": None if phi is None else str(phi),
            }
        )
    elif phi is None:
        print(negative_text)
    else:
        print(str(phi))
    return 0 if phi is not None else 1


def _cmd_census(args, cap: int) -> int:
    summary = run_census(args.n, args.out, workers=args.threads)
    if args.json:
        _emit_json({"command": "census", "summary": summary})
    else:
        print(json.dumps(summary, sort_keys=True, indent=2))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclord",
        description="Partial cyclic orders as oriented 3-hypergraphs.",
    )
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check the cyclic-order axioms of a relation")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_validate)

    p = sub.add_parser("orient", help="find a transitive orientation")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_orient)

    p = sub.add_parser("recover", help="recover the cyclic permutation of a self-transitive instance")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_recover)

    p = sub.add_parser("complement", help="complement an instance")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_complement)

    p = sub.add_parser("link", help="link of a vertex, relabelled to [n-1]")
    p.add_argument("file")
    p.add_argument("--vertex", type=int, required=True)
    p.set_defaults(fn=_cmd_link)

    p = sub.add_parser("extend", help="total extendability")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--sufficient", action="store_true", help="complement-orientation route")
    group.add_argument("--exact", action="store_true", help="exhaustive ordering scan (default)")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_extend)

    p = sub.add_parser("census", help="exhaustive sweep at a given size")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(fn=_cmd_census)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    cap = DEFAULT_DECISION_CAP
    env_cap = os.environ.get("CYCLORD_CAP")
    if env_cap:
        try:
            cap = int(env_cap)
        except ValueError:
            print(f"cyclord: CYCLORD_CAP must be an integer, got {env_cap!r}", file=sys.stderr)
            return 2
    try:
        return args.fn(args, cap)
    except ParseError as exc:
        print(f"cyclord: {exc}", file=sys.stderr)
        return 2
    except CapExceeded as exc:
        print(f"cyclord: {exc}", file=sys.stderr)
        return 3
    except InternalContradiction:
        raise
    except CyclordError as exc:
        print(f"cyclord: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
