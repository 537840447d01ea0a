"""Command-line entry point.

Output is line-oriented ``key: value`` text. Exit status is 0 on success,
1 when the input is well-formed but mathematically rejected, 2 on bad usage.
"""

import argparse
import re
import sys

from . import classical, finite, permutations, quadext, solvers
from .errors import AlgebraError
from .exact import format_complex, parse_complex, parse_rational

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}\n{self.format_usage()}")


def _b(v):
    return "true" if v else "false"


def _names(seq):
    return " ".join(seq) if seq else "-"


def _read(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc.strerror}") from None


# -- subcommand handlers -----------------------------------------------------

def _structure_lines(t):
    rep = finite.classify_magma(t)
    out = [
        f"elements: {t.n}",
        f"groupoid: {_b(rep.is_groupoid)}",
        f"semigroup: {_b(rep.is_semigroup)}",
        f"monoid: {_b(rep.is_monoid)}",
        f"group: {_b(rep.is_group)}, abelian: {_b(rep.is_abelian)}",
        f"commutative: {_b(rep.is_commutative)}",
        f"neutral: {rep.neutral if rep.neutral is not None else '-'}",
    ]
    if rep.non_associative_witness:
        out.append("non-associative: " + " ".join(rep.non_associative_witness))
    if rep.non_commutative_witness:
        out.append("non-commutative: " + " ".join(rep.non_commutative_witness))
    if rep.is_monoid:
        out.append("non-invertible: " + _names(rep.non_invertible))
    if rep.inverses:
        out.append("inverses: " + " ".join(f"{x}->{y}" for x, y in rep.inverses.items()))
    return out


def _ring_lines(rep):
    dz = " ".join(f"({x},{y})" for x, y in rep.zero_divisors) or "-"
    out = [
        f"additive group: {_b(rep.additive_group)}",
        f"distributive: {_b(rep.distributive)}",
    ]
    if rep.distributive_witness:
        out.append("non-distributive: " + " ".join(rep.distributive_witness))
    out += [
        f"associative mul: {_b(rep.associative_mul)}",
        f"commutative mul: {_b(rep.commutative_mul)}",
        f"zero: {rep.zero if rep.zero is not None else '-'}",
        f"unity: {rep.unity if rep.unity is not None else '-'}",
        f"ring: {_b(rep.is_ring)}",
        f"integral: {_b(rep.is_integral)}",
        f"field: {_b(rep.is_field)}",
        f"zero divisors: {dz}",
        "units: " + _names(rep.units),
        f"characteristic: {rep.characteristic if rep.characteristic is not None else '-'}",
    ]
    return out


def cmd_table(args):
    t = finite.parse_table(_read(args.file))
    out = _structure_lines(t)
    if args.subgroups:
        for h in finite.subgroups(t):
            out.append("subgroup: " + " ".join(h))
    return out


def cmd_ring(args):
    add, mul = finite.parse_ring(_read(args.file))
    return _ring_lines(finite.ring_classify(add, mul))


def cmd_zmod(args):
    add, mul = finite.residue_ring(args.m)
    if args.char:
        return [f"characteristic: {finite.characteristic(add, '1')}"]
    if args.order:
        chain = finite.find_total_order(add, mul)
        return ["order: " + ("none" if chain is None else " < ".join(chain))]
    if args.classify:
        return _ring_lines(finite.ring_classify(add, mul))
    return finite.format_ring(add, mul).splitlines()


def cmd_perm(args):
    if args.action == "compose":
        a, b = (permutations.parse_perm(s) for s in args.perms)
        return [permutations.format_perm(a * b)]
    if args.action == "inverse":
        return [permutations.format_perm(permutations.parse_perm(args.perm).inverse())]
    if args.action == "table":
        return finite.format_table(permutations.symmetric_group_table(args.n)).splitlines()
    if args.action == "stabilizer":
        perms = permutations.stabilizer(args.n, args.points)
        return [f"order: {len(perms)}"] + [permutations.format_perm(p) for p in perms]
    # triangle
    table, corr = permutations.triangle_group()
    out = ["# " + " ".join(f"{a}->{b}" for a, b in corr.items())]
    return out + finite.format_table(table).splitlines()


def cmd_ext(args):
    F = quadext.ExtensionField(parse_rational(args.d))
    if args.action == "sqrt":
        return ["solutions: " + ", ".join(quadext.qe_format(F, s) for s in quadext.qe_solve_sqrt(F))]
    elems = [quadext.qe_parse(F, e) for e in args.elems]
    arity = {"add": 2, "sub": 2, "mul": 2, "inv": 1, "conj": 1}[args.action]
    if len(elems) != arity:
        raise _UsageError(f"ext {args.action} takes {arity} element(s), got {len(elems)}")
    if arity == 2:
        res = quadext.qe_arith(F, args.action, *elems)
    elif args.action == "inv":
        res = quadext.qe_inverse(F, elems[0])
    else:
        res = quadext.qe_conjugate(F, elems[0])
    return [quadext.qe_format(F, res)]


def _complexes(tokens):
    try:
        return [parse_complex(t) for t in tokens]
    except AlgebraError as exc:
        raise _UsageError(str(exc)) from None


def cmd_solve(args):
    coeffs = _complexes(args.coeffs)
    if len(coeffs) != args.degree + 1:
        raise _UsageError(f"degree {args.degree} needs {args.degree + 1} coefficients, got {len(coeffs)}")
    return [format_complex(r) for r in solvers.solve(coeffs)]


def cmd_roots(args):
    (c,) = _complexes([args.c])
    return [format_complex(r) for r in solvers.solve_binomial(c, args.n)]


def _fmt_pair(p):
    if p.exact:
        return [f"x: {p.rational[0]}", f"y: {p.rational[1]}", "exact: true"]
    return [f"x: {format_complex(p.x)}", f"y: {format_complex(p.y)}", "exact: false"]


def cmd_classical(args):
    if args.action == "false-position":
        r = classical.false_position(parse_rational(args.coeff), parse_rational(args.b))
        return [f"trial: {r.trial}", f"trial value: {r.trial_value}",
                f"ratio: {r.ratio}", f"answer: {r.scaled}"]
    if args.action == "babylonian":
        a, b = parse_rational(args.a), parse_rational(args.b)
        if args.kind == "sum-product":
            p = classical.babylonian_sum_product(a, b)
        elif args.kind == "diff-product":
            p = classical.babylonian_diff_product(a, b)
        else:
            p = classical.babylonian_sum_of_squares(args.kind.split("-")[0], a, b)
        return _fmt_pair(p)
    system = classical.parse_system(_read(args.file))
    out = []
    if args.columns:
        out += classical.format_columns(system).splitlines()
    res = classical.eliminate(system)
    out += [f"kind: {res.kind}", f"rank: {res.rank}"]
    if res.solution is not None:
        out.append("solution: " + " ".join(str(v) for v in res.solution))
    return out


def cmd_map(args):
    fmap, _, _ = finite.parse_map(_read(args.file))
    c = finite.classify_map(fmap)
    return [f"{k}: {_b(v)}" for k, v in c.items()]


# -- parser ------------------------------------------------------------------

def build_parser():
    p = _Parser(prog="algebra-workbench", description="Exact algebra workbench.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    t = sub.add_parser("table", help="analyze a Cayley table file")
    t.add_argument("action", choices=["analyze"])
    t.add_argument("file")
    t.add_argument("--subgroups", action="store_true", help="also list all subgroups")
    t.set_defaults(func=cmd_table)

    r = sub.add_parser("ring", help="analyze a two-table ring file")
    r.add_argument("action", choices=["analyze"])
    r.add_argument("file")
    r.set_defaults(func=cmd_ring)

    z = sub.add_parser("zmod", help="residue ring Z_m")
    z.add_argument("m", type=int)
    g = z.add_mutually_exclusive_group()
    g.add_argument("--classify", action="store_true")
    g.add_argument("--char", action="store_true")
    g.add_argument("--order", action="store_true")
    z.set_defaults(func=cmd_zmod)

    pm = sub.add_parser("perm", help="permutations in two-row form")
    ps = pm.add_subparsers(dest="action", required=True, parser_class=_Parser)
    c = ps.add_parser("compose", help="product a*b (a applied first)")
    c.add_argument("perms", nargs=2)
    i = ps.add_parser("inverse")
    i.add_argument("perm")
    tb = ps.add_parser("table", help="Cayley table of S_n")
    tb.add_argument("n", type=int)
    st = ps.add_parser("stabilizer")
    st.add_argument("n", type=int)
    st.add_argument("points", type=int, nargs="*")
    ps.add_parser("triangle", help="table of the motions of a triangle")
    pm.set_defaults(func=cmd_perm)

    e = sub.add_parser("ext", help="arithmetic in Q(sqrt d)")
    e.add_argument("--d", required=True)
    e.add_argument("action", choices=["add", "sub", "mul", "inv", "conj", "sqrt"])
    e.add_argument("elems", nargs="*")
    e.set_defaults(func=cmd_ext)

    s = sub.add_parser("solve", help="roots of a polynomial, coefficients highest degree first")
    s.add_argument("--degree", type=int, choices=[1, 2, 3, 4], required=True)
    s.add_argument("coeffs", nargs="+")
    s.set_defaults(func=cmd_solve)

    rt = sub.add_parser("roots", help="all solutions of z^n = c")
    rt.add_argument("n", type=int)
    rt.add_argument("c")
    rt.set_defaults(func=cmd_roots)

    cl = sub.add_parser("classical", help="historical recipes")
    cs = cl.add_subparsers(dest="action", required=True, parser_class=_Parser)
    fp = cs.add_parser("false-position", help="solve x + coeff*x = b")
    fp.add_argument("coeff")
    fp.add_argument("b")
    bb = cs.add_parser("babylonian")
    bb.add_argument("kind", choices=["sum-product", "diff-product", "plus-squares", "minus-squares"])
    bb.add_argument("a")
    bb.add_argument("b")
    el = cs.add_parser("eliminate", help="solve a linear system file")
    el.add_argument("file")
    el.add_argument("--columns", action="store_true", help="also print the column layout")
    cl.set_defaults(func=cmd_classical)

    mp = sub.add_parser("map", help="classify a finite mapping")
    mp.add_argument("action", choices=["classify"])
    mp.add_argument("file")
    mp.set_defaults(func=cmd_map)
    return p


_NEG_NUMBER = re.compile(r"^-[\d.ij]")


def _protect(argv):
    # argparse would read "-10" or "-2+i" as an option
    return [" " + a if _NEG_NUMBER.match(a) else a for a in argv]


def run(argv=None, out=None, err=None):
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(_protect(argv))
        args = _unprotect(args)
        lines = args.func(args)
    except _UsageError as exc:
        err.write(str(exc).rstrip("\n") + "\n")
        return EXIT_USAGE
    except AlgebraError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_DOMAIN
    except SystemExit as exc:
        # --help
        return exc.code or EXIT_OK
    for line in lines:
        out.write(line + "\n")
    return EXIT_OK


def _unprotect(args):
    for key, val in vars(args).items():
        if isinstance(val, str):
            setattr(args, key, val.strip())
        elif isinstance(val, list):
            setattr(args, key, [v.strip() if isinstance(v, str) else v for v in val])
    return args


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
