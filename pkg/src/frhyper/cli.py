"""Command-line driver.

Exit codes: 0 success (and every applicable bound satisfied), 1 validation
failure or bound violation, 2 parse error, 3 enumeration guard exceeded.
``--force`` (or FRC_GUARD_OVERRIDE=1) lifts the guards.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import analysis, bounds, construct
from .errors import FrcError, GuardExceededError, ParseError
from .frcformat import FrcDocument, emit_filesize_csv, parse_frc, serialize_frc
from .model import (
    FRCode,
    Hypergraph,
    classify,
    dual,
    fr_to_hypergraph,
    hypergraph_to_fr,
    is_universally_good,
)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_PARSE = 2
EXIT_GUARD = 3


def _read_document(path: str) -> FrcDocument:
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    return parse_frc(text)


def _as_code(doc: FrcDocument) -> FRCode:
    if isinstance(doc.body, FRCode):
        return doc.body
    return hypergraph_to_fr(doc.body)


def _as_hypergraph(doc: FrcDocument) -> Hypergraph:
    if isinstance(doc.body, Hypergraph):
        return doc.body
    return fr_to_hypergraph(doc.body)


def _fmt(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    return str(value)


def _parse_int_list(text: str) -> frozenset[int]:
    text = text.strip()
    if not text:
        return frozenset()
    return frozenset(int(x) for x in text.split(","))


def _cmd_validate(args) -> int:
    doc = _read_document(args.file)
    body = doc.body
    if isinstance(body, FRCode):
        print(f"valid fr code: n={body.n} theta={body.theta}")
        print(f"alpha = {list(body.alpha_vec)} (max {body.alpha})")
        print(f"rho   = {list(body.rho_vec)} (max {body.rho})")
    else:
        print(f"valid hypergraph: {body.num_vertices} vertices, {body.num_edges} edges")
        if not body.is_fr_equivalent():
            print("note: not FR-equivalent (empty edge or isolated vertex)")
    return EXIT_OK


def _cmd_analyze(args) -> int:
    code = _as_code(_read_document(args.file))
    report = analysis.analyze(code, k=args.k, file_size=args.file_size, force=args.force)
    print("k,M_k")
    for k, mk in report.file_size_table.items():
        print(f"{k},{mk}")
    print(f"file size M = {report.file_size}")
    print(f"reconstruction degree k = {report.reconstruction_degree}")
    print(f"repair degrees d_i = {list(report.repair_degrees)}")
    print(f"max repair degree d = {report.max_repair_degree}")
    print(f"min distance d_min = {report.min_distance}")
    return EXIT_OK


def _cmd_classify(args) -> int:
    doc = _read_document(args.file)
    h = _as_hypergraph(doc)
    flags = classify(h)
    print(f"uniform      = {flags.uniform}" + (f" (edge size {flags.edge_size})" if flags.uniform else ""))
    print(f"regular      = {flags.regular}" + (f" (degree {flags.degree})" if flags.regular else ""))
    print(f"linear       = {flags.linear}")
    print(f"intersecting = {flags.intersecting}")
    print(f"connected    = {flags.connected}")
    if doc.kind == "fr":
        print(f"universally good = {is_universally_good(doc.body)}")
    return EXIT_OK


def _cmd_dual(args) -> int:
    doc = _read_document(args.file)
    dual_h, _ = dual(_as_hypergraph(doc))
    if doc.kind == "fr":
        out = FrcDocument(body=hypergraph_to_fr(dual_h))
    else:
        out = FrcDocument(body=dual_h)
    sys.stdout.write(serialize_frc(out))
    return EXIT_OK


def _cmd_convert(args) -> int:
    doc = _read_document(args.file)
    if args.to == "fr":
        out = FrcDocument(body=_as_code(doc))
    else:
        out = FrcDocument(body=_as_hypergraph(doc))
    sys.stdout.write(serialize_frc(out))
    return EXIT_OK


def _cmd_bounds(args) -> int:
    code = _as_code(_read_document(args.file))
    report = bounds.check_bounds(code, k=args.k, force=args.force)
    rows = [(e.bound, e.applicable, e.reason, e.lhs, e.rhs, e.satisfied, e.tight)
            for e in report.entries]
    violated = bool(report.violations())

    if args.k is not None:
        db = bounds.distance_bounds(code, args.k, force=args.force)
        rows.append(("singleton-distance", True, None, db.observed,
                     db.singleton_like, db.within_singleton,
                     db.observed == db.singleton_like))
        gfr = bounds.gfr_bound_check(code, args.k, force=args.force)
        if gfr.applicable:
            rows.append(("repair-degree-file-size", True, None, gfr.rhs, gfr.lhs,
                         gfr.satisfied, gfr.tight))
        else:
            rows.append(("repair-degree-file-size", False, gfr.reason,
                         None, None, None, None))

    if args.pairing:
        pairs = tuple(
            (int(a), int(b))
            for a, b in (item.split(":") for item in args.pairing.split(","))
        )
        result = bounds.check_pairing_bound(code, bounds.PacketPairing(pairs=pairs))
        if result.hypothesis_holds:
            rows.append(("packet-pairing", True, None, result.total,
                         Fraction(1), result.satisfied, result.total == 1))
            violated = violated or not result.satisfied
        else:
            rows.append(("packet-pairing", False, "disjointness hypothesis fails",
                         None, None, None, None))

    print(f"{'bound':<26} {'applicable':<11} {'lhs':>8} {'rhs':>8} {'ok':<5} tight")
    for name, applicable, reason, lhs, rhs, ok, tight in rows:
        if applicable:
            print(f"{name:<26} {'yes':<11} {_fmt(lhs):>8} {_fmt(rhs):>8} "
                  f"{str(bool(ok)).lower():<5} {str(bool(tight)).lower()}")
        else:
            print(f"{name:<26} {'no':<11} {'-':>8} {'-':>8} {'-':<5} -  ({reason})")
        if applicable and not ok:
            violated = True
    return EXIT_INVALID if violated else EXIT_OK


def _cmd_construct(args) -> int:
    strategy = construct.RANDOM if args.seed is not None else construct.GREEDY
    state = construct.algorithm1(
        args.n,
        args.rho_min,
        strategy=strategy,
        seed=args.seed,
        theta=args.theta,
    )
    if args.trace:
        sys.stdout.write(construct.format_trace(state))
    sys.stdout.write(serialize_frc(FrcDocument(body=state.code)))
    if any(row.floor_relaxed for row in state.history):
        print("warning: rho_min floor was relaxed on some steps", file=sys.stderr)
    return EXIT_OK


def _cmd_adapt(args) -> int:
    code = _as_code(_read_document(args.file))
    spec = analysis.AdaptationSpec(
        removed_nodes=_parse_int_list(args.remove_nodes),
        removed_packets=_parse_int_list(args.remove_packets),
    )
    adapted = analysis.adapt(code, spec)
    sys.stdout.write(serialize_frc(FrcDocument(body=adapted)))
    return EXIT_OK


def _cmd_csv(args) -> int:
    code = _as_code(_read_document(args.file))
    ks = None
    if args.k_range:
        lo, _, hi = args.k_range.partition("..")
        if not hi:
            hi = lo
        ks = range(int(lo), int(hi) + 1)
    sys.stdout.write(emit_filesize_csv(code, ks, force=args.force))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="frc",
        description="Fractional repetition codes and hypergraphs: metrics, bounds, construction.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(handler=handler)
        return p

    p = add("validate", _cmd_validate, help="parse and validate a document")
    p.add_argument("file", nargs="?", default="-")

    p = add("analyze", _cmd_analyze, help="file-size table, degrees, min distance")
    p.add_argument("file", nargs="?", default="-")
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--file-size", type=int, default=None)
    p.add_argument("--force", action="store_true")

    p = add("classify", _cmd_classify, help="structural flags of the hypergraph view")
    p.add_argument("file", nargs="?", default="-")

    p = add("dual", _cmd_dual, help="incidence transpose")
    p.add_argument("file", nargs="?", default="-")

    p = add("convert", _cmd_convert, help="switch between fr and hypergraph views")
    p.add_argument("file", nargs="?", default="-")
    p.add_argument("--to", choices=("fr", "hypergraph"), required=True)

    p = add("bounds", _cmd_bounds, help="evaluate the bound suite")
    p.add_argument("file", nargs="?", default="-")
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--pairing", default=None, help="packet pairing as j:j',...")
    p.add_argument("--force", action="store_true")

    p = add("construct", _cmd_construct, help="grow a universally good code")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--rho-min", type=int, default=2)
    p.add_argument("--theta", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--trace", action="store_true")

    p = add("adapt", _cmd_adapt, help="drop nodes and packets, renumber densely")
    p.add_argument("file", nargs="?", default="-")
    p.add_argument("--remove-nodes", default="")
    p.add_argument("--remove-packets", default="")

    p = add("csv", _cmd_csv, help="file-size table with bounds as CSV")
    p.add_argument("file", nargs="?", default="-")
    p.add_argument("--k-range", default=None, help="inclusive range A..B")
    p.add_argument("--force", action="store_true")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except GuardExceededError as exc:
        print(f"guard: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except FrcError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
