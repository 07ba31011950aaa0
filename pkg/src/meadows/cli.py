"""Command-line front end.

Subcommands build structures (``gf``, ``zmod``, ``product``), inspect files
(``check``, ``decompose``, ``census``, ``table``), and enumerate isomorphism
classes (``enum``).  Builders write a structure file to stdout (or ``-o``);
inspectors read a file (``-`` for stdin) and print a report.

Exit codes: 0 on success, 1 when a check fails or a ring is not totalizable
(the report is still printed), 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import IO

from meadows.census import enumerate_signatures, take_census
from meadows.construct import (
    AmbiguousInverseError,
    NoInverseError,
    direct_product,
    make_gf,
    make_zmod_ring,
    totalize_inverse,
)
from meadows.decompose import decompose
from meadows.io import StructureFileError, parse_structure_file, serialize_structure
from meadows.structures import (
    AXIOM_NAMES,
    AXIOM_VARIABLES,
    FiniteStructure,
    MeadowError,
    check_axioms,
)

__all__ = ["run_command", "main"]


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse that reports usage problems instead of calling sys.exit."""

    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}\n{self.format_usage()}")


def _build_parser() -> _Parser:
    parser = _Parser(prog="meadows", description=__doc__.splitlines()[0])
    parser.add_argument(
        "--quiet",
        action="store_true",
        help="suppress reports; exit codes only (structure output still printed)",
    )
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")

    p = sub.add_parser("gf", help="emit the Galois field GF(p^k)")
    p.add_argument("p", type=int)
    p.add_argument("k", type=int, nargs="?", default=1)
    p.add_argument("-o", "--output", metavar="FILE")

    p = sub.add_parser("zmod", help="emit Z/nZ with totalized inverse")
    p.add_argument("n", type=int)
    p.add_argument("-o", "--output", metavar="FILE")

    p = sub.add_parser("product", help="emit the direct product of structure files")
    p.add_argument("files", metavar="FILE", nargs="+")
    p.add_argument("-o", "--output", metavar="FILE")

    p = sub.add_parser("check", help="check the ten meadow axioms")
    p.add_argument("file", metavar="FILE")

    p = sub.add_parser("decompose", help="decompose into Galois fields")
    p.add_argument("file", metavar="FILE")

    p = sub.add_parser("census", help="count self-inverse and invertible elements")
    p.add_argument("file", metavar="FILE")

    p = sub.add_parser("enum", help="list meadow signatures of a given order")
    p.add_argument("n", type=int)

    p = sub.add_parser("table", help="print labelled operation tables")
    p.add_argument("file", metavar="FILE")

    return parser


def _read_structure(source: str) -> FiniteStructure:
    if source == "-":
        return parse_structure_file(sys.stdin.read())
    return parse_structure_file(Path(source).read_text(encoding="utf-8"))


def _emit(s: FiniteStructure, output: str | None, out: IO[str]) -> int:
    text = serialize_structure(s)
    if output is None:
        out.write(text)
    else:
        Path(output).write_text(text, encoding="utf-8")
    return 0


def _format_witness(axiom: str, witness: tuple[int, ...]) -> str:
    names = AXIOM_VARIABLES[axiom]
    return ", ".join(f"{v}={x}" for v, x in zip(names, witness))


def _cmd_check(s: FiniteStructure, out: IO[str], quiet: bool) -> int:
    report = check_axioms(s)
    if not quiet:
        out.write(f"order {s.order}\n")
        for name in AXIOM_NAMES:
            if report.results[name]:
                out.write(f"{name:<14} pass\n")
            else:
                witness = _format_witness(name, report.witnesses[name])
                out.write(f"{name:<14} fail  ({witness})\n")
        passed = sum(report.results.values())
        out.write(f"{passed} of {len(AXIOM_NAMES)} axioms pass\n")
    return 0 if report.all_pass else 1


def _cmd_decompose(s: FiniteStructure, out: IO[str], quiet: bool) -> int:
    dec = decompose(s)
    if not quiet:
        out.write(f"order {s.order}\n")
        minimal = " ".join(str(e) for e in dec.minimal)
        out.write(f"minimal idempotents: {minimal}\n")
        orders = " ".join(str(f.order) for f in dec.factors)
        out.write(f"factor orders: {orders}\n")
        out.write(f"signature: {dec.signature}\n")
    return 0


def _cmd_census(s: FiniteStructure, out: IO[str], quiet: bool) -> int:
    report = take_census(s)
    if not quiet:
        out.write(f"order {report.order}\n")
        self_elems = " ".join(str(x) for x in report.self_inverse_elements)
        out.write(
            f"self-inverses: {report.self_inverse_count}"
            f" (predicted {report.predicted_self_inverse}): {self_elems}\n"
        )
        inv_elems = " ".join(str(x) for x in report.invertible_elements)
        out.write(
            f"invertibles: {report.invertible_count}"
            f" (predicted {report.predicted_invertible}): {inv_elems}\n"
        )
    return 0 if report.counts_match else 1


def _cmd_enum(n: int, out: IO[str], quiet: bool) -> int:
    signatures = enumerate_signatures(n)
    if not quiet:
        for sig in signatures:
            out.write(f"{sig}\n")
    return 0


def _cmd_table(s: FiniteStructure, out: IO[str], quiet: bool) -> int:
    if quiet:
        return 0
    labels = [s.label(x) for x in range(s.order)]
    width = max(len(lab) for lab in labels)

    def fmt(x: int) -> str:
        return labels[x].rjust(width)

    out.write(f"order {s.order}  zero {labels[s.zero]}  one {labels[s.one]}\n")
    for name in ("add", "mul"):
        table = getattr(s, name)
        out.write(f"{name}:\n")
        header = " ".join(fmt(x) for x in range(s.order))
        out.write(f"  {' ' * width} | {header}\n")
        for x in range(s.order):
            row = " ".join(fmt(int(v)) for v in table[x])
            out.write(f"  {fmt(x)} | {row}\n")
    for name in ("neg", "inv"):
        row = " ".join(fmt(int(v)) for v in getattr(s, name))
        out.write(f"{name}: {row}\n")
    return 0


def run_command(
    argv: Sequence[str] | None = None,
    stdout: IO[str] | None = None,
    stderr: IO[str] | None = None,
) -> int:
    """Run one CLI invocation; returns the exit code instead of exiting."""
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        err.write(f"{exc}\n")
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    if args.command is None:
        err.write(parser.format_usage())
        return 2

    try:
        if args.command == "gf":
            return _emit(make_gf(args.p, args.k), args.output, out)
        if args.command == "zmod":
            if args.n < 1:
                raise ValueError(f"n must be positive, got {args.n}")
            return _emit(totalize_inverse(make_zmod_ring(args.n)), args.output, out)
        if args.command == "product":
            factors = [_read_structure(f) for f in args.files]
            return _emit(direct_product(factors), args.output, out)
        if args.command == "check":
            return _cmd_check(_read_structure(args.file), out, args.quiet)
        if args.command == "decompose":
            return _cmd_decompose(_read_structure(args.file), out, args.quiet)
        if args.command == "census":
            return _cmd_census(_read_structure(args.file), out, args.quiet)
        if args.command == "enum":
            if args.n < 1:
                raise ValueError(f"n must be positive, got {args.n}")
            return _cmd_enum(args.n, out, args.quiet)
        if args.command == "table":
            return _cmd_table(_read_structure(args.file), out, args.quiet)
        raise AssertionError(f"unhandled command {args.command}")
    except (NoInverseError, AmbiguousInverseError) as exc:
        err.write(f"error: {exc}\n")
        return 1
    except StructureFileError as exc:
        err.write(f"error: {exc}\n")
        return 2
    except OSError as exc:
        err.write(f"error: {exc}\n")
        return 2
    except (MeadowError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run_command())


if __name__ == "__main__":
    main()
