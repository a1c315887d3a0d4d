"""Command-line entry point: ``pluribasket <command> ...``.

Exit codes: 0 success, 1 verification mismatch, 2 usage or environment error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from .basket import BasketError, delta_n_basket, format_basket, parse_basket, sigma, sigma_prime
from .enumerator import FILTERS, ClassRecord, enumerate_classes
from .formal import FormalBasket, NonIntegerChi, chi_sequence, k_cubed
from .golden import GoldenMissing, attach_refs, verify
from .io import (
    descendants_to_csv,
    descendants_to_json,
    format_fraction,
    records_to_csv,
    records_to_json,
)
from .levels import unpack_to_level
from .minimize import Descendant, global_minimum, minimal_positive_descendants

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _int_range(text: str) -> range:
    lo, sep, hi = text.partition("-")
    try:
        return range(int(lo), int(hi if sep else lo) + 1)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or N-M, got {text!r}") from None


def _row_ref(text: str) -> Tuple[str, int]:
    case, sep, n = text.partition(":")
    if not sep or case not in ("i", "ii") or not n.isdigit():
        raise argparse.ArgumentTypeError(f"expected CASE:N with CASE in i, ii, got {text!r}")
    return case, int(n)


def _read_basket(path: str):
    text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    return parse_basket(text, kind="generalized")


def _write(text: str, output: Optional[str]) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8", newline="\n")
    else:
        sys.stdout.write(text)


# -- commands -----------------------------------------------------------------


def cmd_invariants(args) -> int:
    B = _read_basket(args.basket)
    F = FormalBasket(B, args.chi, args.chi2)
    out = [
        f"basket  {B}",
        f"sigma   {sigma(B)}",
        f"sigma'  {format_fraction(sigma_prime(B))}",
        f"K^3     {format_fraction(k_cubed(F))}",
    ]
    for n in args.delta:
        out.append(f"Delta^{n:<3} {delta_n_basket(B, n)}")
    chis = chi_sequence(F, max(args.m.stop - 1, 2))
    for m in args.m:
        if m >= 2:
            out.append(f"chi_{m:<3}  {chis[m]}")
    print("\n".join(out))
    return EXIT_OK


def cmd_unpack(args) -> int:
    B = _read_basket(args.basket)
    print(format_basket(unpack_to_level(B, args.level)))
    return EXIT_OK


def _classes(case: str, disabled=(), jobs: int = 1) -> List[ClassRecord]:
    records = enumerate_classes(case, disabled=disabled, jobs=jobs)
    try:
        attach_refs(records, case)
    except GoldenMissing:
        pass
    return records


def cmd_enumerate(args) -> int:
    records = _classes(args.case, args.no_filter, args.jobs)
    text = records_to_json(records) if args.format == "json" else records_to_csv(records, args.case)
    _write(text, args.output)
    print(f"{len(records)} classes (case {args.case})", file=sys.stderr)
    return EXIT_OK


def _selected(args) -> List[ClassRecord]:
    if args.row:
        case, ref = args.row
        records = _classes(case, jobs=args.jobs)
        chosen = [r for r in records if r.ref == ref]
        if not chosen:
            raise UsageError(f"no class with reference row {case}:{ref}")
        return chosen
    cases = ("i", "ii") if args.all else (args.case,)
    return [r for c in cases for r in _classes(c, jobs=args.jobs)]


def cmd_minimize(args) -> int:
    records = _selected(args)
    results: List[Tuple[ClassRecord, List[Descendant]]] = [
        (rec, minimal_positive_descendants(rec.formal)) for rec in records
    ]
    if args.format == "csv":
        _write(descendants_to_csv(results), args.output)
    elif args.format == "json":
        _write(descendants_to_json(results), args.output)
    else:
        lines = []
        for rec, ds in results:
            lines.append(f"case-{rec.case} row {rec.ref or '#' + str(rec.row)}  K^3 = {format_fraction(rec.k3)}  {rec.basket}")
            for d in ds:
                lines.append(f"    {format_fraction(d.k3):>12}  {d.trace or '(class itself)'}")
        _write("\n".join(lines) + "\n", args.output)
    best, witnesses = global_minimum(results)
    if best is None:
        print("no positive descendants")
        return EXIT_OK
    for rec, d in witnesses:
        print(f"min K^3 = {format_fraction(best)} at case-{rec.case} row {rec.ref or '#' + str(rec.row)}")
        print(f"  basket {d.basket}")
        print(f"  trace  {d.trace or '(class itself)'}")
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        report = verify(args.golden, jobs=args.jobs, descendants=not args.tables_only)
    except GoldenMissing as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    for line in report.lines():
        if args.quiet and line.startswith(("accepted", "descendants")):
            continue
        print(line)
    code = report.exit_code(strict=args.strict)
    print("PASS" if code == EXIT_OK else "FAIL")
    return code


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pluribasket", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="sigma, sigma', Delta^n, K^3 and chi_m of a basket file")
    p.add_argument("basket", help="basket file ('-' for stdin)")
    p.add_argument("--chi", type=int, required=True)
    p.add_argument("--chi2", type=int, default=0)
    p.add_argument("--m", type=_int_range, default=range(2, 14), help="chi_m range, e.g. 2-13")
    p.add_argument("--delta", type=_int_range, default=range(2, 13), help="Delta^n range")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("unpack", help="canonical unpacking to a level")
    p.add_argument("basket")
    p.add_argument("--level", type=int, required=True)
    p.set_defaults(func=cmd_unpack)

    p = sub.add_parser("enumerate", help="level-12 classes for delta = 12")
    p.add_argument("--case", choices=("i", "ii"), default="i")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--no-filter", action="append", default=[], choices=FILTERS, metavar="NAME",
                   help=f"disable a filter ({', '.join(FILTERS)}); repeatable")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("minimize", help="minimal positive descendants and the minimum volume")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--case", choices=("i", "ii"), default="i")
    g.add_argument("--all", action="store_true")
    g.add_argument("--row", type=_row_ref, metavar="CASE:N", help="one class by reference row number")
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_minimize)

    p = sub.add_parser("verify", help="compare with the golden tables")
    p.add_argument("--golden", type=Path, default=None, help="golden directory (default: bundled)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--strict", action="store_true", help="also fail on descendant-set differences")
    p.add_argument("--tables-only", action="store_true", help="skip descendant sets")
    p.add_argument("--quiet", "-q", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (BasketError, NonIntegerChi, UsageError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
