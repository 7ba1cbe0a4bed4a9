"""Command-line front end.

Exit codes: 0 success or property holds, 1 property check failed,
2 invalid input or parity error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import io
from .fixtures import NAMES, fixture_text
from .patterns import PatternError, expand_boundary
from .shifts import NotUnipotentError, jordan_factorization, shift_down, shift_left
from .special import (
    Kind,
    ParityError,
    ParityMode,
    SpecialBuildRequest,
    build_idempotent,
    odd_count,
    solve_involutory,
)
from .triangle import (
    BoundaryError,
    BoundarySpec,
    generate_triangle,
    row_sum_closed,
    row_sum_step,
    row_sums,
    total_sum_closed,
)
from .verify import (
    Property,
    check_idempotent,
    check_involutory,
    check_jordan_product,
    check_nilpotent_index2,
    check_unipotent_index2,
    full_report,
)

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _add_format(p, choices=io.FORMATS):
    p.add_argument("--format", choices=choices, default="pretty")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="zerosum", description="Zero-sum integer triangles and their special matrices.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gen", help="generate a triangle from two boundary patterns")
    p.add_argument("--rows", type=_positive, required=True)
    p.add_argument("--left", required=True, help="left-edge pattern, e.g. const:1")
    p.add_argument("--right", required=True, help="right-edge pattern")
    _add_format(p)

    p = sub.add_parser("idem", help="build an idempotent triangle")
    p.add_argument("--rows", type=_positive, required=True)
    p.add_argument("--a0", type=int, choices=(0, 1), required=True)
    p.add_argument("--odd", required=True, help="pattern for a_1, a_3, a_5, ...")
    _add_format(p)

    p = sub.add_parser("invol", help="build an involutory triangle")
    p.add_argument("--rows", type=_positive, required=True)
    p.add_argument("--a0", type=int, choices=(1, -1), required=True)
    p.add_argument("--odd", required=True, help="pattern for a_1, a_3, a_5, ...")
    p.add_argument("--parity-fix", action="store_true", help="bump odd entries by 1 where parity forbids them")
    _add_format(p)

    p = sub.add_parser("shift", help="shift a triangle matrix into a nilpotent matrix")
    p.add_argument("--kind", choices=("down", "left"), required=True)
    p.add_argument("--input", required=True, help="document file, or - for stdin")
    _add_format(p)

    p = sub.add_parser("jordan", help="factor I + B_L into two index-2 unipotent matrices")
    p.add_argument("--rows", type=_positive, required=True)
    p.add_argument("--a0", type=int, choices=(0, 1), required=True)
    p.add_argument("--odd", required=True)
    _add_format(p, choices=("pretty", "json"))

    p = sub.add_parser("verify", help="check a matrix property")
    p.add_argument("--property", choices=("idempotent", "involutory", "nilpotent2", "unipotent2"), required=True)
    p.add_argument("--input", required=True, help="document file, or - for stdin")

    p = sub.add_parser("sums", help="row sums and total sum, closed form against direct")
    p.add_argument("--rows", type=_positive, required=True)
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)

    p = sub.add_parser("fixtures", help="print a shipped golden triangle")
    p.add_argument("--name", choices=NAMES, required=True)
    p.add_argument("--format", choices=io.FORMATS, default="json")
    return parser


def _read_input(path: str) -> io.TriangleDocument:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None
    return io.parse(text)


def _odd_entries(pattern: str, n: int, allow_short: bool = False) -> list[int]:
    need = odd_count(n)
    return expand_boundary(pattern, need, allow_short) if need else []


def _spec(args) -> BoundarySpec:
    return BoundarySpec(expand_boundary(args.left, args.rows), expand_boundary(args.right, args.rows))


def cmd_gen(args, out) -> int:
    t = generate_triangle(_spec(args))
    out.write(io.serialize(io.TriangleDocument.from_triangle(t, {"kind": "zero-sum"}), args.format))
    return EXIT_OK


def cmd_idem(args, out) -> int:
    odds = _odd_entries(args.odd, args.rows)
    t = build_idempotent(SpecialBuildRequest(Kind.IDEMPOTENT, args.a0, odds, args.rows))
    report = full_report(t, t.spec(), Property.IDEMPOTENT)
    meta = {"kind": "idempotent", "a0": args.a0, "odd": odds}
    out.write(io.serialize(io.TriangleDocument.from_triangle(t, meta), args.format))
    print(report.summary(), file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_invol(args, out) -> int:
    mode = ParityMode.AUTOFIX if args.parity_fix else ParityMode.STRICT
    odds = _odd_entries(args.odd, args.rows, allow_short=args.parity_fix)
    result = solve_involutory(SpecialBuildRequest(Kind.INVOLUTORY, args.a0, odds, args.rows, mode))
    t = result.triangle
    for adj in result.adjustments:
        print(f"parity fix: a_{adj.index} {adj.old} -> {adj.new}", file=sys.stderr)
    report = full_report(t, t.spec(), Property.INVOLUTORY)
    meta = {"kind": "involutory", "a0": args.a0, "odd": list(result.odd_entries), "parityMode": mode.value}
    out.write(io.serialize(io.TriangleDocument.from_triangle(t, meta), args.format))
    print(report.summary(), file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_shift(args, out) -> int:
    M = _read_input(args.input).matrix()
    N = shift_down(M) if args.kind == "down" else shift_left(M)
    out.write(io.serialize(io.TriangleDocument.from_matrix(N, {"shift": args.kind}), args.format))
    return EXIT_OK


def cmd_jordan(args, out) -> int:
    pair = jordan_factorization(args.a0, _odd_entries(args.odd, args.rows), args.rows)
    product = pair.product()
    report = check_jordan_product(pair.SD, pair.SL)
    blocks = (("S_D", pair.SD), ("S_L", pair.SL), ("S_D*S_L", product))
    if args.format == "json":
        obj = {name: [[io.to_decimal(x) for x in r] for r in M.dense()] for name, M in blocks}
        obj["identity_plus_shift"] = report.passed
        out.write(json.dumps(obj, indent=2) + "\n")
    else:
        for name, M in blocks:
            out.write(f"# {name}\n")
            out.write(io.serialize(M, "pretty"))
        out.write(f"# S_D*S_L == I + B_L: {'PASS' if report.passed else 'FAIL'}\n")
    print(report.summary(), file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_verify(args, out) -> int:
    doc = _read_input(args.input)
    M = doc.matrix()
    prop = Property(args.property)
    if prop in (Property.IDEMPOTENT, Property.INVOLUTORY):
        t = doc.triangle()
        if doc.kind != "matrix" and t.is_zero_sum():
            report = full_report(t, t.spec(), prop)
        else:
            report = (check_idempotent if prop is Property.IDEMPOTENT else check_involutory)(M)
    elif prop is Property.NILPOTENT_INDEX2:
        report = check_nilpotent_index2(M)
    else:
        report = check_unipotent_index2(M)
    out.write(report.summary() + "\n")
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_sums(args, out) -> int:
    spec = _spec(args)
    direct = row_sums(generate_triangle(spec))
    out.write("i,closed,step,direct\n")
    ok = True
    step = None
    for i in range(spec.n):
        closed = row_sum_closed(spec, i)
        if i < 2:
            step = direct.per_row[i]
        else:
            step = row_sum_step(step, spec.a[i], spec.b[i], spec.a[i - 1], spec.b[i - 1])
        ok &= closed == step == direct.per_row[i]
        out.write(f"{i},{closed},{step},{direct.per_row[i]}\n")
    total = total_sum_closed(spec)
    ok &= total == direct.total
    out.write(f"total,{total},,{direct.total}\n")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_fixtures(args, out) -> int:
    text = fixture_text(args.name)
    out.write(text if args.format == "json" else io.serialize(io.parse(text), args.format))
    return EXIT_OK


COMMANDS = {
    "gen": cmd_gen,
    "idem": cmd_idem,
    "invol": cmd_invol,
    "shift": cmd_shift,
    "jordan": cmd_jordan,
    "verify": cmd_verify,
    "sums": cmd_sums,
    "fixtures": cmd_fixtures,
}


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except ParityError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except (UsageError, PatternError, BoundaryError, io.FormatError, NotUnipotentError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
