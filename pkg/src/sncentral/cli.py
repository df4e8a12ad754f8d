"""Command-line interface.

Usage:
    sncentral partitions 4
    sncentral char --shape 3,1 --class 2,1,1
    sncentral decompose 3 --format json
    sncentral verify --max-n 7
    sncentral table 4 --format csv

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from .centralizer import decompose_phi
from .characters import MemoCache, character_table, mn_value
from .checks import run_invariant_checks
from .closed_forms import verify_closed_forms
from .errors import ContractViolation
from .partitions import Partition, enumerate_partitions, parse_partition

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

FORMATS = ("table", "json", "csv")


def dump_json(obj: object) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


def _csv(header: Sequence[str], rows: Sequence[Sequence[object]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _partition_arg(text: str) -> Partition:
    try:
        return parse_partition(text)
    except ContractViolation as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value


def _positive_int(text: str) -> int:
    value = _nonneg_int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def cmd_partitions(args: argparse.Namespace) -> int:
    parts = enumerate_partitions(args.n)
    if args.format == "json":
        print(dump_json([list(p.parts) for p in parts]))
    elif args.format == "csv":
        print(_csv(["partition"], [[p.to_string()] for p in parts]))
    else:
        for p in parts:
            print(p)
        print(f"p({args.n}) = {len(parts)}")
    return EXIT_OK


def cmd_char(args: argparse.Namespace) -> int:
    shape, cls = args.shape, args.class_type
    if shape.weight != cls.weight:
        args.parser.error(
            f"shape {shape} has weight {shape.weight} but class {cls} has weight {cls.weight}"
        )
    value = mn_value(shape, cls, MemoCache())
    if args.format == "json":
        print(dump_json({"shape": list(shape.parts), "class": list(cls.parts), "value": str(value)}))
    elif args.format == "csv":
        print(_csv(["shape", "class", "value"], [[shape.to_string(), cls.to_string(), value]]))
    else:
        print(value)
    return EXIT_OK


def cmd_decompose(args: argparse.Namespace) -> int:
    dec = decompose_phi(args.n, MemoCache())
    if args.format == "json":
        print(dump_json(dec.to_json(show_zeros=True)))
    elif args.format == "csv":
        print(_csv(["mu", "mult"], [[mu.to_string(), m] for mu, m in dec.terms()]))
    else:
        terms = dec.terms(show_zeros=args.show_zeros)
        print(f"n = {dec.n}   index [S_{2 * dec.n} : C] = {dec.index}")
        width = max((len(str(mu)) for mu, _ in terms), default=2)
        for mu, m in terms:
            print(f"{str(mu):<{width}s}  {m}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    if args.max_n < 2:
        args.parser.error(f"--max-n must be at least 2, got {args.max_n}")
    cache = MemoCache()
    report = verify_closed_forms(args.max_n, cache)
    checks = run_invariant_checks(args.max_n, cache)
    ok = report.ok and all(c.passed for c in checks)
    if args.format == "json":
        print(dump_json({
            "max_n": args.max_n,
            "pass": ok,
            "closed_forms": [r.to_json() for r in report.rows],
            "invariants": [c.to_json() for c in checks],
        }))
    elif args.format == "csv":
        rows = [[r.n, r.family, r.k, r.expected, r.engine, r.passed] for r in report.rows]
        print(_csv(["n", "family", "k", "expected", "engine", "pass"], rows))
    else:
        for line in report.lines():
            print(line)
        for c in checks:
            print(c.line())
        failed = sum(not r.passed for r in report.rows) + sum(not c.passed for c in checks)
        print(f"{'OK' if ok else 'FAILED'}: {len(report.rows) + len(checks)} checks, {failed} failed")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_table(args: argparse.Namespace) -> int:
    table = character_table(args.m, MemoCache())
    classes = enumerate_partitions(args.m)
    if args.format == "json":
        print(dump_json({
            "m": args.m,
            "characters": [{"shape": list(s.parts), "values": chi.to_json()} for s, chi in table.items()],
        }))
    elif args.format == "csv":
        header = ["shape"] + [c.to_string() for c in classes]
        print(_csv(header, [[s.to_string()] + [chi[c] for c in classes] for s, chi in table.items()]))
    else:
        cells = [["shape \\ class"] + [str(c) for c in classes]]
        cells += [[str(s)] + [str(chi[c]) for c in classes] for s, chi in table.items()]
        widths = [max(len(row[j]) for row in cells) for j in range(len(cells[0]))]
        for row in cells:
            print("  ".join(cell.rjust(w) for cell, w in zip(row, widths)))
    return EXIT_OK


def _add_common(p: argparse.ArgumentParser, suppress: bool) -> None:
    default = argparse.SUPPRESS if suppress else None
    p.add_argument("--format", choices=FORMATS, default=default if suppress else "table")
    p.add_argument("--show-zeros", action="store_true", default=default if suppress else False,
                   help="list zero multiplicities in the table view")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sncentral",
        description="Symmetric group characters and the decomposition of the permutation "
                    "character on cosets of the centralizer of an n-cycle in S_2n.",
    )
    _add_common(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("partitions", help="list the partitions of n")
    p.add_argument("n", type=_nonneg_int)
    p.set_defaults(func=cmd_partitions)

    p = sub.add_parser("char", help="evaluate an irreducible character on a class")
    p.add_argument("--shape", type=_partition_arg, required=True)
    p.add_argument("--class", dest="class_type", type=_partition_arg, required=True)
    p.set_defaults(func=cmd_char)

    p = sub.add_parser("decompose", help="decompose Ind_C^{S_2n} 1")
    p.add_argument("n", type=_positive_int)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", help="check closed forms and invariants up to --max-n")
    p.add_argument("--max-n", type=int, default=7)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="print the character table of S_m")
    p.add_argument("m", type=_positive_int)
    p.set_defaults(func=cmd_table)

    for name, subparser in sub.choices.items():
        _add_common(subparser, suppress=True)
        subparser.set_defaults(parser=subparser)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except SystemExit as exc:
        return int(exc.code or 0)


if __name__ == "__main__":
    sys.exit(main())
