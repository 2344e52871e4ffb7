"""
Command-line front end. A thin client: every subcommand builds the same
request model the HTTP API accepts, calls the shared handler, and formats
the response. Exit codes: 0 success, 1 user error, 2 internal defect.
"""

from __future__ import annotations

import argparse
import sys
from typing import IO, Sequence

from .conjecture import NonIntegerCoefficientError
from .laurent import DivisorZeroError, LaurentPoly, NotDivisibleError
from .service import handlers
from .service.schemas import (
    AlexanderRequest,
    CheckRequest,
    CoeffsRequest,
    PolyModel,
    ScanRequest,
    SignatureRequest,
)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # exit 1 on bad usage, not argparse's 2
        raise _UsageError(message)


def _poly_text(model: PolyModel, var: str) -> str:
    return LaurentPoly(model.offset, model.coeffs).text(var)


def _flag(value: bool | None) -> str:
    if value is None:
        return "-"
    return "true" if value else "false"


def _cmd_alexander(args: argparse.Namespace, out: IO[str]) -> None:
    resp = handlers.compute_alexander(
        AlexanderRequest(word=args.word, strands=args.n)
    )
    if args.json:
        out.write(resp.model_dump_json(indent=2) + "\n")
        return
    if resp.is_zero:
        out.write("Delta = 0 (split closure)\n")
        return
    out.write(f"Delta(t): {_poly_text(resp.poly_t, 't')}\n")
    out.write(f"Delta(s): {_poly_text(resp.poly_s, 's')}\n")
    out.write(f"degree: {resp.degree}\n")
    out.write(f"alternating(t): {_flag(resp.alternating_in_t)}\n")


def _cmd_signature(args: argparse.Namespace, out: IO[str]) -> None:
    resp = handlers.compute_signature(
        SignatureRequest(
            strands=args.n, blocks=args.blocks, sign=args.sign, oracle=args.oracle
        )
    )
    if args.json:
        out.write(resp.model_dump_json(indent=2) + "\n")
    else:
        out.write(f"{resp.value}\n")


def _cmd_check(args: argparse.Namespace, out: IO[str]) -> None:
    resp = handlers.run_check(
        CheckRequest(strands=args.n, blocks=args.blocks, sign=args.sign)
    )
    if args.json:
        out.write(resp.model_dump_json(indent=2) + "\n")
        return
    out.write(f"components: {resp.components}" + (" (knot)\n" if resp.is_knot else " (link)\n"))
    out.write(f"sigma: {resp.sigma}\n")
    if resp.is_zero:
        out.write("Delta = 0 (split closure); no shape verdict\n")
        return
    out.write(f"Delta(s): {_poly_text(resp.poly_s, 's')}\n")
    out.write(f"degree: {resp.degree}\n")
    out.write(f"symmetric: {_flag(resp.is_symmetric)}\n")
    out.write(f"trapezoidal: {_flag(resp.is_trapezoidal)}\n")
    out.write(f"center: {resp.center}\n")
    out.write(f"log_concave: {_flag(resp.is_log_concave)}\n")
    stable = "-" if resp.stable_length is None else str(resp.stable_length)
    out.write(f"stable_length: {stable}\n")
    if resp.bound_holds is None:
        out.write("bound_holds: -\n")
    else:
        out.write(
            f"bound_holds: {_flag(resp.bound_holds)} "
            f"(l={resp.stable_length} vs |sigma|={abs(resp.sigma)})\n"
        )


def _cmd_coeffs(args: argparse.Namespace, out: IO[str]) -> None:
    resp = handlers.compute_coeffs(
        CoeffsRequest(strands=args.n, blocks=args.m, min_entry=args.min_entry)
    )
    if args.json:
        out.write(resp.model_dump_json(indent=2) + "\n")
        return
    for name, value in (("a0", resp.a0), ("a1", resp.a1), ("a2", resp.a2), ("a3", resp.a3)):
        if value is None:
            out.write(f"{name} = (threshold not met)\n")
        else:
            out.write(f"{name} = {value}\n")


def _parse_block_range(text: str) -> tuple[int, int]:
    if ".." in text:
        lo_text, hi_text = text.split("..", 1)
        lo, hi = int(lo_text), int(hi_text)
    else:
        lo = hi = int(text)
    if lo < 1 or hi < lo:
        raise ValueError(f"bad block-count range {text!r}")
    return lo, hi


def _cmd_scan(args: argparse.Namespace, out: IO[str]) -> None:
    try:
        m_min, m_max = _parse_block_range(args.m)
    except ValueError:
        raise _UsageError(f"bad --m value {args.m!r}: expected like '1' or '1..2'")
    req = ScanRequest(
        strands=args.n, m_min=m_min, m_max=m_max, max_entry=args.max, sign=args.sign
    )
    if args.out == "-":
        for line in handlers.iter_scan_csv(req):
            out.write(line)
    else:
        with open(args.out, "w") as handle:
            for line in handlers.iter_scan_csv(req):
                handle.write(line)


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="braidpoly",
        description="Alexander polynomials, signatures and shape checks of closed braids",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("alexander", help="Alexander polynomial of a braid-word closure")
    p.add_argument("--word", required=True, help="braid word, e.g. 's1^3 s2^-2 s3^5'")
    p.add_argument("--n", type=int, required=True, help="strand count")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_alexander)

    p = sub.add_parser("signature", help="signature of a block-braid closure")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--blocks", required=True, help="e.g. '3,2,5' or '3,2,5;1,1,2'")
    p.add_argument("--sign", choices=("+", "-"), default="+")
    p.add_argument("--oracle", action="store_true", help="Seifert-matrix oracle (one block only)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_signature)

    p = sub.add_parser("check", help="trapezoid and signature-bound verdicts")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--blocks", required=True)
    p.add_argument("--sign", choices=("+", "-"), default="+")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("coeffs", help="leading Alexander coefficients from (n, m)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True, help="block count")
    p.add_argument("--min-entry", type=int, default=None, dest="min_entry")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_coeffs)

    p = sub.add_parser("scan", help="grid scan emitting one CSV row per parameter point")
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--m", default="1", help="block counts, e.g. '1' or '1..2'")
    p.add_argument("--max", type=int, required=True, help="largest block entry")
    p.add_argument("--sign", choices=("+", "-"), default="+")
    p.add_argument("--out", default="-", help="output path, or '-' for stdout")
    p.set_defaults(func=_cmd_scan)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        args.func(args, sys.stdout)
    except (NotDivisibleError, NonIntegerCoefficientError, DivisorZeroError) as exc:
        print(f"internal defect: {exc}", file=sys.stderr)
        return 2
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, IndexError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
