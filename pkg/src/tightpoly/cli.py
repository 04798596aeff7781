"""Command-line surface: classify, verify, inspect.

Exit codes: 0 success, 2 usage error, 3 empty classification (no tight
polyhedron of the requested type; distinct from errors), 4 resource bound
exceeded.  ``verify`` exits 1 when any type mismatches or was skipped
without --allow-skips.  Machine (--json) and human output are rendered from
the same dictionaries so the two can never drift.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import maps
from .analysis import sggi_report
from .enumeration import enumerate_cosets
from .errors import (
    BoundExceededError,
    InvalidPresentationError,
    InvalidTypeError,
    TightpolyError,
)
from .families import NonOrientableParams, OrientableParams, classify_all
from .oracle import DEFAULT_BUDGET, verify_range
from .presentations import (
    coxeter_presentation,
    delta_presentation,
    lambda_presentation,
    parse_presentation,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_EMPTY = 3
EXIT_BOUND = 4

_FAMILY_ARITY = {"coxeter": 2, "lambda": 4, "delta": 6}


def _params_dict(params) -> dict:
    if isinstance(params, OrientableParams):
        return {"i": params.i, "j": params.j, "k": params.k}
    if isinstance(params, NonOrientableParams):
        return {"i": params.i, "j": params.j, "a": params.a, "b": params.b}
    return dict(params or {})


def _record_dict(record) -> dict:
    inv = record.invariants
    return {
        "family": record.family,
        "label": record.label(),
        "type": [record.params.p, record.params.q],
        "parameters": _params_dict(record.params),
        "dual_form": record.is_dual_form,
        "order": record.report.order,
        "tight": record.report.is_tight,
        "string_c_group": record.report.is_string_c_group,
        "orientable": record.report.orientable,
        "euler": inv.euler_characteristic,
        "vertices": inv.vertex_count,
        "edges": inv.edge_count,
        "faces": inv.face_count,
        "edge_multiplicity": inv.edge_multiplicity,
        "dual_partner": record.dual_partner,
    }


def _emit_json(payload) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def _emit_table(rows, columns) -> None:
    if not rows:
        return
    widths = [
        max(len(col), max(len(str(row.get(col, ""))) for row in rows))
        for col in columns
    ]
    header = "  ".join(col.ljust(w) for col, w in zip(columns, widths))
    print(header)
    print("-" * len(header))
    for row in rows:
        print("  ".join(str(row.get(col, "")).ljust(w) for col, w in zip(columns, widths)))


def cmd_classify(args) -> int:
    try:
        records = classify_all(args.p, args.q, args.max_cosets)
    except InvalidTypeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BoundExceededError as exc:
        print(f"error: {exc}; raise --max-cosets", file=sys.stderr)
        return EXIT_BOUND
    rows = [_record_dict(r) for r in records]
    if args.json:
        _emit_json({"type": [args.p, args.q], "count": len(rows), "records": rows})
    else:
        if rows:
            _emit_table(rows, ["label", "order", "orientable", "euler",
                               "edge_multiplicity", "dual_partner"])
        print(f"{len(rows)} tight regular polyhedra of type {{{args.p},{args.q}}}")
    return EXIT_OK if rows else EXIT_EMPTY


def cmd_verify(args) -> int:
    try:
        reports = verify_range(args.max_p, args.max_q, args.budget)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    rows = [
        {
            "p": r.type.p,
            "q": r.type.q,
            "orientable": len(r.found_orientable),
            "nonorientable": len(r.found_nonorientable),
            "enumerations": r.enumerations_run,
            "skipped": r.skipped,
            "mismatches": "; ".join(r.mismatches),
        }
        for r in reports
    ]
    n_mismatch = sum(1 for r in reports if r.mismatches)
    n_skipped = sum(1 for r in reports if r.skipped)
    summary = {
        "types": len(reports),
        "types_with_mismatches": n_mismatch,
        "types_skipped": n_skipped,
        "enumerations": sum(r.enumerations_run for r in reports),
    }
    if args.json:
        _emit_json({"summary": summary, "reports": rows})
    else:
        shown = [row for row in rows
                 if row["mismatches"] or row["skipped"] or args.verbose]
        _emit_table(shown, ["p", "q", "orientable", "nonorientable",
                            "enumerations", "skipped", "mismatches"])
        print(
            f"{summary['types']} types checked, "
            f"{summary['types_with_mismatches']} with mismatches, "
            f"{summary['types_skipped']} skipped "
            f"({summary['enumerations']} enumerations)"
        )
    if n_mismatch or (n_skipped and not args.allow_skips):
        return 1
    return EXIT_OK


def _build_presentation(args):
    if args.family == "custom":
        if args.params is None:
            raise InvalidPresentationError("custom needs a relator file path (or -)")
        if args.params == "-":
            text = sys.stdin.read()
        else:
            with open(args.params) as handle:
                text = handle.read()
        return parse_presentation(text), {}
    try:
        values = [int(tok) for tok in args.params.split(",")]
    except (AttributeError, ValueError):
        raise InvalidTypeError(
            f"{args.family} parameters must be comma-separated integers"
        ) from None
    if len(values) != _FAMILY_ARITY[args.family]:
        raise InvalidTypeError(
            f"{args.family} takes {_FAMILY_ARITY[args.family]} parameters, "
            f"got {len(values)}"
        )
    builder = {
        "coxeter": coxeter_presentation,
        "lambda": lambda_presentation,
        "delta": delta_presentation,
    }[args.family]
    pres = builder(*values)
    named = dict(zip("pqijab", values))
    return pres, named


def cmd_inspect(args) -> int:
    try:
        pres, named = _build_presentation(args)
    except (InvalidTypeError, InvalidPresentationError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        rep = enumerate_cosets(pres, args.max_cosets)
    except BoundExceededError as exc:
        print(
            f"error: {exc}; the group may be infinite or the bound too small, "
            "raise --max-cosets", file=sys.stderr,
        )
        return EXIT_BOUND
    report = sggi_report(rep)
    structure = maps.build_map(rep)
    inv = maps.map_invariants(structure, rep)
    doc = {
        "family": pres.family,
        "presentation": pres.describe(),
        "parameters": named,
        "order": report.order,
        "type": [report.type.p, report.type.q],
        "sggi": report.is_sggi,
        "string_c_group": report.is_string_c_group,
        "tight": report.is_tight,
        "orientable": report.orientable,
        "polyhedron_axioms": maps.validate_polyhedron(structure),
        "flags": rep.order,
        "euler": inv.euler_characteristic,
        "vertices": inv.vertex_count,
        "edges": inv.edge_count,
        "faces": inv.face_count,
        "edge_multiplicity": inv.edge_multiplicity,
    }
    if args.export:
        fmt, path = args.export
        try:
            payload = maps.export_map(
                structure, inv, fmt, family=pres.family, parameters=named
            )
        except TightpolyError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_USAGE
        with open(path, "wb") as handle:
            handle.write(payload)
    if args.json:
        _emit_json(doc)
    else:
        for key, value in doc.items():
            print(f"{key:>18}: {value}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tightpoly",
        description="Classify, verify and inspect tight regular polyhedra of type {p,q}.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_cls = sub.add_parser("classify", help="closed-form classification of one type")
    p_cls.add_argument("p", type=int)
    p_cls.add_argument("q", type=int)
    p_cls.add_argument("--json", action="store_true")
    p_cls.add_argument("--max-cosets", type=int, default=None)
    p_cls.set_defaults(func=cmd_classify)

    p_ver = sub.add_parser("verify", help="brute-force sweep vs closed form")
    p_ver.add_argument("--max-p", type=int, required=True)
    p_ver.add_argument("--max-q", type=int, required=True)
    p_ver.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                       help="max Delta-grid enumerations per type")
    p_ver.add_argument("--allow-skips", action="store_true")
    p_ver.add_argument("--json", action="store_true")
    p_ver.add_argument("--verbose", action="store_true",
                       help="show all types, not only problems")
    p_ver.set_defaults(func=cmd_verify)

    p_ins = sub.add_parser("inspect", help="enumerate and analyse one group")
    p_ins.add_argument("family", choices=["coxeter", "lambda", "delta", "custom"])
    p_ins.add_argument("params", nargs="?",
                       help="comma-separated integers, or a relator file for custom")
    p_ins.add_argument("--json", action="store_true")
    p_ins.add_argument("--max-cosets", type=int, default=None)
    p_ins.add_argument("--export", nargs=2, metavar=("FMT", "PATH"),
                       help="write the map (json or dot) to PATH")
    p_ins.set_defaults(func=cmd_inspect)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
