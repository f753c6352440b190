"""Command-line front end: ``ndlrs <command> --seq job.json [...]``.

Exit codes: 0 success, 1 usage error, 2 domain error (a precondition failed,
e.g. an invalid witness), 3 parse error.  Results go to stdout, diagnostics
to stderr.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import List, Optional, Sequence

from . import jsonio
from .annihilator import ann_basis, gamma_1d, gamma_axis_gcd, gamma_axis_lcm
from .border import beta0, beta0_direct, decompose, default_depth
from .errors import DomainError, ParseError
from .field import FieldCtx
from .poly import Poly, degree_vector
from .regions import Region
from .sequences import gamma_window

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_PARSE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _read_json(arg: str):
    """Inline JSON (starting with '{' or '[') or a path to a JSON file."""
    text = arg.strip()
    if not text.startswith(("{", "[")):
        try:
            with open(os.path.expanduser(arg), encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise ParseError(f"cannot read {arg!r}: {exc.strerror}") from None
    return jsonio.loads(text)


def _read_poly(arg: str, ctx: FieldCtx, n: int) -> Poly:
    """A polynomial given inline as JSON, as plain text, or as a file path."""
    text = arg.strip()
    if text.startswith("{"):
        obj = jsonio.loads(text)
    elif os.path.isfile(os.path.expanduser(text)):
        obj = _read_json(text)
    else:
        obj = text
    f = jsonio.poly_from_json(obj, ctx, n)
    if f.n != n:
        raise ParseError(f"polynomial has {f.n} variables, sequence has {n}")
    return f


def _vector(text: str, n: int, what: str) -> tuple:
    try:
        out = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"{what} must be comma-separated integers, got {text!r}") from None
    if len(out) != n:
        raise UsageError(f"{what} needs {n} components, got {len(out)}")
    return out


def _load(args):
    ctx = jsonio.field_from_json(args.field) if args.field else None
    obj = _read_json(args.seq)
    seq, witness = jsonio.sequence_from_json(obj, ctx)
    if getattr(args, "witness", None):
        witness = jsonio.witness_from_json(_read_json(args.witness), seq.ctx, seq.n)
    return seq, witness


def _need_witness(witness):
    if witness is None:
        raise DomainError("this sequence has no axis polynomials; pass --witness")
    return witness


def _emit_poly(f: Poly, args) -> str:
    return str(f) if args.text else jsonio.dumps(jsonio.poly_to_json(f))


def cmd_eval(args) -> str:
    seq, _ = _load(args)
    return seq.ctx.format(seq.eval(_vector(args.at, seq.n, "--at")))


def cmd_gamma_window(args) -> str:
    seq, _ = _load(args)
    lo = _vector(args.lo, seq.n, "--lo")
    hi = _vector(args.hi, seq.n, "--hi") if args.hi else (0,) * seq.n
    return jsonio.dumps(jsonio.series_to_json(gamma_window(seq, Region.box(lo, hi))))


def cmd_beta0(args) -> str:
    seq, _ = _load(args)
    f = _read_poly(args.f, seq.ctx, seq.n)
    return _emit_poly((beta0_direct if args.direct else beta0)(f, seq), args)


def cmd_decompose(args) -> List[str]:
    seq, _ = _load(args)
    f = _read_poly(args.f, seq.ctx, seq.n)
    depth = _vector(args.depth, seq.n, "--depth") if args.depth else default_depth(f)
    parts = decompose(f, seq, depth)
    return [jsonio.dumps(line) for line in jsonio.decompose_lines(parts, degree_vector(f))]


def cmd_gamma1d(args) -> str:
    seq, witness = _load(args)
    if seq.n != 1:
        raise DomainError("gamma1d needs a 1-D sequence; use 'gamma --axis'")
    f = _read_poly(args.f, seq.ctx, 1) if args.f else _need_witness(witness).axis_polys[0]
    return _emit_poly(gamma_1d(f, seq), args)


def cmd_gamma(args) -> str:
    seq, witness = _load(args)
    witness = _need_witness(witness)
    if not 1 <= args.axis <= seq.n:
        raise UsageError(f"--axis must be between 1 and {seq.n}")
    route = gamma_axis_gcd if args.method == "gcd" else gamma_axis_lcm
    return _emit_poly(route(args.axis - 1, witness, seq), args)


def _basis(args):
    seq, witness = _load(args)
    return seq, ann_basis(seq, _need_witness(witness), cross_check=not args.no_cross_check)


def cmd_ann_basis(args) -> str:
    _, result = _basis(args)
    return jsonio.dumps(jsonio.ann_basis_to_json(result))


def cmd_member(args) -> str:
    seq, result = _basis(args)
    g = _read_poly(args.g, seq.ctx, seq.n)
    return "true" if result.is_member(g) else "false"


def cmd_cofinite_dim(args) -> str:
    _, result = _basis(args)
    return str(result.cofinite_dim())


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ndlrs", description="n-D linear recurring sequences: border "
                     "decomposition, axis generators and Ann(s) bases.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def command(name, fn, help_text, witness=False):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--seq", required=True, help="sequence JSON (file path or inline)")
        p.add_argument("--field", help="override the field: a prime p or Q")
        if witness:
            p.add_argument("--witness", help="axis polynomials JSON (required for window sequences)")
        p.set_defaults(func=fn)
        return p

    p = command("eval", cmd_eval, "evaluate s at an index <= 0")
    p.add_argument("--at", required=True, help="comma-separated index, e.g. --at=-1,-2")

    p = command("gamma-window", cmd_gamma_window, "generating function on a box")
    p.add_argument("--lo", required=True, help="lower corner, e.g. --lo=-4,-4")
    p.add_argument("--hi")

    p = command("beta0", cmd_beta0, "border polynomial beta_0(f, s)")
    p.add_argument("--f", required=True, help="polynomial: JSON, text or file")
    p.add_argument("--direct", action="store_true", help="use the truncated-product route")
    p.add_argument("--text", action="store_true")

    p = command("decompose", cmd_decompose, "all border summands of f*Gamma(s)")
    p.add_argument("--f", required=True)
    p.add_argument("--depth", help="truncation depth per axis (default 2*deg f + 2)")

    p = command("gamma1d", cmd_gamma1d, "generator of Ann(t) for 1-D t", witness=True)
    p.add_argument("--f", help="annihilating polynomial (default: the witness)")
    p.add_argument("--text", action="store_true")

    p = command("gamma", cmd_gamma, "monic generator of Ann(s) ∩ F[X_i]", witness=True)
    p.add_argument("--axis", type=int, required=True, help="1-based axis")
    p.add_argument("--method", choices=("gcd", "lcm"), default="gcd")
    p.add_argument("--text", action="store_true")

    for name, fn, help_text in (
        ("ann-basis", cmd_ann_basis, "basis of Ann(s)"),
        ("member", cmd_member, "exact membership test g in Ann(s)"),
        ("cofinite-dim", cmd_cofinite_dim, "prod deg gamma_i"),
    ):
        p = command(name, fn, help_text, witness=True)
        p.add_argument("--no-cross-check", action="store_true",
                       help="skip the lcm-route check of the gamma_i")
        if name == "member":
            p.add_argument("--g", required=True)
    return parser


def main(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        out = args.func(args)
    except UsageError as exc:
        print(f"ndlrs: usage error: {exc}", file=stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"ndlrs: parse error: {exc}", file=stderr)
        return EXIT_PARSE
    except DomainError as exc:
        print(f"ndlrs: domain error: {exc}", file=stderr)
        return EXIT_DOMAIN
    for line in ([out] if isinstance(out, str) else out):
        print(line, file=stdout)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
