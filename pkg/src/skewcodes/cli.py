"""Command line front end.

Exit status: 0 on success, 1 on a domain error (one line
``error: <CODE>: <message>`` on stderr), 2 on a usage error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from . import codes as cd
from . import constacyclic as cc
from ._text import format_polynomial
from .checks import ring_summary, verify_paper
from .errors import DomainError, SkewCodesError
from .gf import field_of_order, make_field
from .ring import make_ring
from .skew_poly import (
    SkewPolynomial,
    gcrd,
    lclm,
    left_divmod,
    left_monic_reciprocal,
    ring_skew_decompose,
    right_divmod,
    skew_reciprocal,
)


def _header(out, name: str, **params):
    shown = " ".join(f"{k}={v}" for k, v in params.items() if v is not None)
    out.write(f"# skewcodes {__version__} {name}" + (f" {shown}" if shown else "") + "\n")


def _base(args):
    F = field_of_order(args.field)
    return make_ring(F.p, F.r) if getattr(args, "ring", False) else F


def _poly(base, s, text) -> SkewPolynomial:
    return SkewPolynomial.parse(base, s, text)


# -- subcommands ------------------------------------------------------------------

def cmd_field_info(args, out):
    F = make_field(args.p, args.r)
    _header(out, "field-info", p=args.p, r=args.r)
    mod = format_polynomial([(i, str(c)) for i, c in enumerate(F.modulus) if c], "x")
    out.write(f"q: {F.q}\n")
    out.write(f"modulus: {mod}\n")
    out.write(f"beta: {F.format(F.beta.index)} (integer encoding {F.int_value(F.beta.index)})\n")
    out.write("elements: " + ", ".join(F.format(i) for i in range(F.q)) + "\n")
    out.write(f"automorphisms: {F.r}\n")


def cmd_ring_info(args, out):
    info = ring_summary(args.p, args.r)
    _header(out, "ring-info", p=args.p, r=args.r)
    out.write(f"q: {info['q']}\n")
    out.write(f"units: {info['units']}\n")
    if info["units_enumerated"] is not None and info["units_enumerated"] != info["units"]:
        raise DomainError("unit enumeration disagrees with (q-1)^q")  # pragma: no cover
    out.write(f"ideals: {info['ideals']}\n")
    out.write(f"automorphisms: {info['automorphisms']}\n")
    for i, e in enumerate(info["idempotents"]):
        out.write(f"eta_{i}: {e}\n")


def cmd_skew(args, out):
    base = _base(args)
    s = args.theta
    polys = [_poly(base, s, t) for t in args.polys]
    want = {"mul": 2, "divmod": 2, "lclm": 2, "gcrd": 2, "reciprocal": 1}[args.op]
    if len(polys) != want:
        raise DomainError(f"'skew {args.op}' takes {want} polynomial(s), got {len(polys)}")
    _header(out, f"skew {args.op}", base=str(base), theta=s)
    if args.op == "mul":
        out.write(f"{polys[0] * polys[1]}\n")
    elif args.op == "divmod":
        div = left_divmod if args.left else right_divmod
        quo, rem = div(polys[0], polys[1])
        out.write(f"quotient: {quo}\nremainder: {rem}\n")
    elif args.op == "lclm":
        out.write(f"{lclm(polys[0], polys[1])}\n")
    elif args.op == "gcrd":
        out.write(f"{gcrd(polys[0], polys[1])}\n")
    else:
        g = polys[0]
        out.write(f"reciprocal: {skew_reciprocal(g)}\n")
        out.write(f"left monic reciprocal: {left_monic_reciprocal(g)}\n")


def _read_code(path: str):
    return cd.parse_code_descriptor(Path(path).read_text())


def cmd_code(args, out):
    C = _read_code(args.file)
    _header(out, f"code {args.op}", file=Path(args.file).name)
    if args.op == "build":
        out.write(cd.format_code_descriptor(C))
        if isinstance(C, cd.LinearCode):
            out.write(f"# dimension {C.k}\n")
        else:
            ks = ",".join(str(c.k) for c in C.components)
            out.write(f"# rank {C.rank}, component dimensions {ks}, size q^{C.dimension_sum}\n")
    elif args.op == "dual":
        D = C.dual()
        out.write(cd.format_code_descriptor(D))
        out.write(f"# self-dual: {'yes' if C.is_self_dual() else 'no'}\n")
    elif args.op == "distance":
        if isinstance(C, cd.LinearCode):
            n, k, d = C.parameters
            out.write(f"[{n}, {k}, {d}]\n")
        else:
            n, k, d = C.gray_parameters()
            out.write(f"Gray image [{n}, {k}, {d}]\n")
    else:
        if not isinstance(C, cd.RingLinearCode):
            raise DomainError("the Gray map needs a code over R_q")
        out.write(cd.format_code_descriptor(C.gray_image()))
        n, k, d = C.gray_parameters()
        out.write(f"# parameters [{n}, {k}, {d}]\n")
        out.write(f"# Phi(C^perp) = Phi(C)^perp: {'yes' if cd.gray_dual_commutes(C) else 'no'}\n")


def _constacyclic(args):
    F = field_of_order(args.field)
    s = args.theta
    if args.ring:
        R = make_ring(F.p, F.r)
        lam = R.parse(args.lam)
        if len(args.gens) == 1:
            gens = ring_skew_decompose(_poly(R, s, args.gens[0]))
        elif len(args.gens) == R.q:
            gens = [_poly(F, s, t) for t in args.gens]
        else:
            raise DomainError(f"give one generator over R_q or {R.q} component generators")
        return cc.code_from_components_ring(R, gens, args.n, lam)
    if len(args.gens) != 1:
        raise DomainError("a code over F_q takes one generator")
    lam = F.element(F.parse(args.lam))
    return cc.code_from_generator_field(_poly(F, s, args.gens[0]), args.n, lam)


def _lam_text(C) -> str:
    if isinstance(C, cc.SkewConstacyclicCodeR):
        return C.lam.crt_str()
    return C.field.format(C.lam)


def _generator_text(C) -> str:
    if isinstance(C, cc.SkewConstacyclicCodeR):
        return str(C.principal_generator())
    return str(C.g)


def cmd_constacyclic(args, out):
    C = _constacyclic(args)
    _header(out, f"constacyclic {args.op}", q=args.field, theta=args.theta, n=args.n, ring=args.ring or None)
    if args.op == "build":
        out.write(f"generator: {_generator_text(C)}\n")
        out.write(f"lambda: {_lam_text(C)}\n")
        if isinstance(C, cc.SkewConstacyclicCodeR):
            out.write(f"rank: {C.rank}\n")
            out.write("generator matrix:\n" + cd.format_ring_matrix(C.ring, C.generator_matrix()) + "\n")
        else:
            out.write(f"dimension: {C.k}\n")
            out.write("generator matrix:\n" + cd.format_matrix(C.field, C.generator_matrix()) + "\n")
        if C.code.k and C.code.size <= cd.MAX_CODEWORDS:
            n, k, d = C.code.parameters
            out.write(f"parameters: [{n}, {k}, {d}]\n")
        out.write(f"shift-closed: {'yes' if C.is_closed() else 'no'}\n")
    elif args.op == "dual":
        D = cc.dual_ring(C) if isinstance(C, cc.SkewConstacyclicCodeR) else cc.dual_field(C)
        out.write(f"dual generator: {_generator_text(D)}\n")
        out.write(f"dual lambda: {_lam_text(D)}\n")
        same = D.code == C.code.dual()
        out.write(f"matches null-space dual: {'yes' if same else 'no'}\n")
    else:
        out.write(f"{cc.self_dual_constacyclic_classifier(C)}\n")


def cmd_search_selfdual(args, out):
    F = field_of_order(args.field)
    s = args.theta
    if args.target is not None:
        f = _poly(F, s, args.target)
        _header(out, "search-selfdual", q=F.q, theta=s, target=str(f))
        sols = cc.solve_reciprocal_equation(f)
    else:
        if args.n is None:
            raise DomainError("give --n (and optionally --lambda) or --target")
        lam = F.element(F.parse(args.lam))
        _header(out, "search-selfdual", q=F.q, theta=s, n=args.n, **{"lambda": F.format(lam.index)})
        sols = cc.self_dual_generators(F, s, args.n, lam)
    for g in sols:
        out.write(f"{g}\n")
    out.write(f"# {len(sols)} solution(s)\n")


def cmd_verify_paper(args, out):
    _header(out, "verify-paper")
    results = verify_paper()
    for r in results:
        out.write(r.line() + "\n")
    failed = sum(not r.passed for r in results)
    out.write(f"# {len(results) - failed}/{len(results)} passed\n")
    return 0 if failed == 0 else 1


# -- parser -----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="skewcodes", description="Skew constacyclic codes over F_q and R_q.")
    ap.add_argument("--version", action="version", version=f"skewcodes {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    for name, fn, helptext in (
        ("field-info", cmd_field_info, "canonical construction of F_{p^r}"),
        ("ring-info", cmd_ring_info, "units, ideals, automorphisms and idempotents of R_q"),
    ):
        sp = sub.add_parser(name, help=helptext)
        sp.add_argument("--p", type=int, required=True, help="characteristic")
        sp.add_argument("--r", type=int, default=1, help="extension degree (default 1)")
        sp.set_defaults(func=fn)

    sp = sub.add_parser("skew", help="skew polynomial arithmetic")
    sp.add_argument("op", choices=["mul", "divmod", "lclm", "gcrd", "reciprocal"])
    sp.add_argument("polys", nargs="+", help="polynomials such as 'x^3 + a*x^2 + 1'")
    sp.add_argument("--field", type=int, required=True, help="field size q")
    sp.add_argument("--theta", type=int, default=1, help="Frobenius exponent s (theta(a) = a^(p^s))")
    sp.add_argument("--ring", action="store_true", help="coefficients in R_q instead of F_q")
    sp.add_argument("--left", action="store_true", help="divmod: divide on the left (f = g*quo + rem)")
    sp.set_defaults(func=cmd_skew)

    sp = sub.add_parser("code", help="linear codes read from a descriptor file")
    sp.add_argument("op", choices=["build", "dual", "distance", "gray"])
    sp.add_argument("file", help="descriptor: 'field p r' or 'ring q', 'length n', then rows")
    sp.set_defaults(func=cmd_code)

    sp = sub.add_parser("constacyclic", help="skew constacyclic codes from generators")
    sp.add_argument("op", choices=["build", "dual", "classify"])
    sp.add_argument("gens", nargs="+", help="generator (or q component generators with --ring)")
    sp.add_argument("--field", type=int, required=True, help="field size q")
    sp.add_argument("--theta", type=int, default=1, help="Frobenius exponent s")
    sp.add_argument("--n", type=int, required=True, help="code length")
    sp.add_argument("--lambda", dest="lam", default="1", help="constant (field or ring element syntax)")
    sp.add_argument("--ring", action="store_true", help="code over R_q")
    sp.set_defaults(func=cmd_constacyclic)

    sp = sub.add_parser("search-selfdual", help="self-dual generators or solutions of g^natural g = f")
    sp.add_argument("--field", type=int, required=True, help="field size q")
    sp.add_argument("--theta", type=int, default=1, help="Frobenius exponent s")
    sp.add_argument("--n", type=int, help="code length")
    sp.add_argument("--lambda", dest="lam", default="1", help="constant")
    sp.add_argument("--target", help="solve g^natural * g = TARGET instead")
    sp.set_defaults(func=cmd_search_selfdual)

    sp = sub.add_parser("verify-paper", help="replay the worked examples")
    sp.set_defaults(func=cmd_verify_paper)
    return ap


def run(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        code = args.func(args, out)
    except SkewCodesError as e:
        msg = str(e).splitlines()[0] if str(e) else type(e).__name__
        err.write(f"error: {e.code}: {msg}\n")
        return 1
    except OSError as e:
        err.write(f"error: E_IO: {e}\n")
        return 1
    return 0 if code is None else code


def main():  # pragma: no cover
    sys.exit(run())
