"""Command line interface: cuspidal-lab <subcommand> ..."""

import argparse
import json
import sys

from .alexander import alexander_degree
from .fields import FieldError, parse_field
from .groebner import GroebnerError, IdealBasis
from .mordell import QtrError, QtrTriple, check_qtr
from .poly import PolyError, parse, parse_many
from .resolution import betti_table, hilbert_function, quotient_dim, scheme_length
from .singular import SingularError, assert_only_cusps, singular_locus


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _poly_arg(text, F):
    """A polynomial given inline or as @file."""
    if text.startswith("@"):
        text = _read(text[1:])
    return parse(" ".join(l.split("#")[0] for l in text.splitlines()).strip(), F)


def _curve(args, F):
    polys = parse_many(_read(args.curve), F)
    if len(polys) != 1:
        raise PolyError("curve file must contain exactly one polynomial")
    return polys[0]


def _ideal(args, F):
    return IdealBasis(parse_many(_read(args.infile), F), args.order if hasattr(args, "order") else "grevlex", F)


def _emit(obj, args):
    text = json.dumps(obj, indent=2, default=str)
    out = getattr(args, "json", None)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def cmd_gb(args):
    F = parse_field(args.field)
    I = _ideal(args, F)
    G = I.gb()
    text = "\n".join(g.format() for g in G) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_resolve(args):
    F = parse_field(args.field)
    I = _ideal(args, F)
    B = betti_table(I)
    _emit({"gen_degrees": B.gen_degrees, "syz_degrees": B.syz_degrees,
           "checks": {"sum_equal": B.sum_equal(), "square_identity_value": B.square_identity_value()}}, args)
    return 0


def cmd_hilbert(args):
    F = parse_field(args.field)
    I = _ideal(args, F)
    out = {}
    if args.degree is not None:
        out["degree"] = args.degree
        out["dim_I"] = hilbert_function(I, args.degree)
        out["dim_quotient"] = quotient_dim(I, args.degree)
    top = args.max_degree if args.max_degree is not None else (args.degree or 0)
    out["quotient_values"] = [quotient_dim(I, d) for d in range(top + 1)]
    if I.krull_dim() <= 1:
        out["length"] = scheme_length(I)
    _emit(out, args)
    return 0


def cmd_singular(args):
    F = parse_field(args.field)
    f = _curve(args, F)
    locus = singular_locus(f, args.seed)
    out = {"count": locus.count, "tjurina_total": locus.tjurina_total}
    try:
        assert_only_cusps(f, args.ext_bound, args.seed, locus=locus)
        out["only_cusps"] = True
    except SingularError as e:
        out["only_cusps"] = False
        out["message"] = str(e)
    out["points"] = [r.as_dict() for r in locus.reports]
    out["unresolved_degree"] = locus.unresolved_degree
    _emit(out, args)
    return 0 if out["only_cusps"] else 1


def cmd_alexander(args):
    F = parse_field(args.field)
    f = _curve(args, F)
    locus = assert_only_cusps(f, args.ext_bound, args.seed)
    res = alexander_degree(locus, f.degree())
    _emit(res.as_dict(), args)
    return 0


def cmd_qtr(args):
    F = parse_field(args.field)
    f = _curve(args, F)
    t = QtrTriple(_poly_arg(args.h1, F), _poly_arg(args.h2, F), _poly_arg(args.h3, F), f, args.convention)
    c = check_qtr(t)
    _emit(c.as_dict(), args)
    return 0 if c.valid else 1


def cmd_replay(args):
    from .replay import exit_code, replay_all, report_json

    only = [s.strip() for s in args.only.split(",")] if args.only else None
    log = (lambda s: print(s, file=sys.stderr)) if not args.quiet else None
    reports = replay_all(args.char, args.seed, only, corrupt_c120bar=args.corrupt_c120bar, log=log)
    text = report_json(reports)
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return exit_code(reports)


def build_parser():
    p = argparse.ArgumentParser(prog="cuspidal-lab", description="Exact computations on cuspidal plane curves.")
    sub = p.add_subparsers(dest="command", required=True)

    def field_arg(sp):
        sp.add_argument("--field", default="F457", help='"Q", "F<p>" or "F<p>[t]/<modulus>"')

    sp = sub.add_parser("gb", help="reduced Groebner basis of an ideal file")
    field_arg(sp)
    sp.add_argument("--in", dest="infile", required=True)
    sp.add_argument("--out")
    sp.add_argument("--order", default="grevlex", choices=["grevlex", "lex"])
    sp.set_defaults(func=cmd_gb)

    sp = sub.add_parser("resolve", help="Betti table of a zero-dimensional ideal")
    field_arg(sp)
    sp.add_argument("--in", dest="infile", required=True)
    sp.add_argument("--json")
    sp.set_defaults(func=cmd_resolve)

    sp = sub.add_parser("hilbert", help="Hilbert function values and length")
    field_arg(sp)
    sp.add_argument("--in", dest="infile", required=True)
    sp.add_argument("--degree", type=int)
    sp.add_argument("--max-degree", type=int)
    sp.add_argument("--json")
    sp.set_defaults(func=cmd_hilbert)

    for name, fn, helptext in (("singular", cmd_singular, "singular points and their types"),
                               ("alexander", cmd_alexander, "degree of the Alexander polynomial")):
        sp = sub.add_parser(name, help=helptext)
        field_arg(sp)
        sp.add_argument("--curve", required=True)
        sp.add_argument("--ext-bound", type=int, default=8)
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--json")
        sp.set_defaults(func=fn)

    sp = sub.add_parser("qtr", help="check a quasi-toric relation")
    field_arg(sp)
    sp.add_argument("--curve", required=True)
    sp.add_argument("--h1", required=True, help="polynomial text or @file")
    sp.add_argument("--h2", required=True)
    sp.add_argument("--h3", default="1")
    sp.add_argument("--convention", default="torus", choices=["torus", "torus-sign", "zero-sum"])
    sp.add_argument("--json")
    sp.set_defaults(func=cmd_qtr)

    sp = sub.add_parser("replay", help="replay every claim and write a JSON report")
    sp.add_argument("--char", type=int, default=457)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--only", help="comma-separated claim ids or tags")
    sp.add_argument("--json")
    sp.add_argument("--quiet", action="store_true")
    sp.add_argument("--corrupt-c120bar", action="store_true", help=argparse.SUPPRESS)
    sp.set_defaults(func=cmd_replay)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (FieldError, PolyError, GroebnerError, SingularError, QtrError, SyntaxError, OSError) as e:
        print("error: %s" % e, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
