"""Command-line front end.

Every subcommand prints deterministically (deg-lex ordering throughout)
and supports ``--format json``.  Exit codes: 0 success / verified,
1 mathematical failure (rule set not closed, dimension mismatch),
2 usage error (bad flags, files, or expressions).
"""

from __future__ import annotations

import argparse
import json
import sys

from .expr import parse_expr
from .gsb import complete, is_gsb
from .lie import bracket, coeff_str
from .quotient import (
    CommGraph,
    assoc_hilbert_series,
    clique_series_dims,
    generate_relations,
    irr_basis,
    pc_normal_form,
)
from .rules import Rule
from .words import Alphabet, enumerate_alsw, is_alsw, lyndon_factorize


def _poly_json(p):
    return [
        {"word": str(w), "coeff": coeff_str(c)} for w, c in p.items_deglex()
    ]


def _load_graph(path):
    with open(path, encoding="utf-8") as fh:
        return CommGraph.parse(fh.read())


def _load_rules(path):
    """Rules file: first significant line an alphabet declaration, then one
    expression per line; each is normalized to a monic rule."""
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    alphabet = None
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if alphabet is None:
            alphabet = Alphabet.from_decl(line)
            continue
        poly = parse_expr(line, alphabet).to_lie_poly()
        if poly.is_zero():
            raise ValueError(f"line {lineno}: rule is zero")
        out.append(Rule.monic(poly))
    if alphabet is None:
        raise ValueError("rules file has no alphabet declaration")
    if not out:
        raise ValueError("rules file has no rules")
    return alphabet, out


def _emit(args, text_lines, record):
    if args.format == "json":
        print(json.dumps(record, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def cmd_alsw(args):
    alphabet = Alphabet.from_decl(args.alphabet)
    words = enumerate_alsw(alphabet, args.max_deg)
    dims = [0] * args.max_deg
    for w in words:
        dims[len(w) - 1] += 1
    _emit(
        args,
        [str(w) for w in words],
        {
            "alphabet": alphabet.decl(),
            "max_deg": args.max_deg,
            "words": [str(w) for w in words],
            "dimensions": dims,
        },
    )
    return 0


def cmd_factorize(args):
    alphabet = Alphabet.from_decl(args.alphabet)
    word = alphabet.word(args.word)
    factors = lyndon_factorize(word)
    _emit(
        args,
        [" ".join(str(f) for f in factors)],
        {"word": str(word), "factors": [str(f) for f in factors]},
    )
    return 0


def cmd_bracket(args):
    alphabet = Alphabet.from_decl(args.alphabet)
    word = alphabet.word(args.word)
    if not is_alsw(word):
        raise ValueError(f"{word} is not a Lyndon-Shirshov word")
    tree = bracket(word)
    _emit(args, [str(tree)], {"word": str(word), "tree": str(tree)})
    return 0


def cmd_nf(args):
    graph = _load_graph(args.theta)
    poly = parse_expr(args.expr, graph.alphabet).to_lie_poly()
    nf = pc_normal_form(poly, graph)
    _emit(
        args,
        [str(nf)],
        {
            "expr": args.expr,
            "normal_form": _poly_json(nf),
            "normal_form_text": str(nf),
        },
    )
    return 0


def cmd_verify(args):
    graph = _load_graph(args.theta)
    rules = generate_relations(graph, args.max_deg)
    report = is_gsb(rules, args.max_deg)
    lines = ["ok" if report.ok else "fail"]
    fail_records = []
    for amb, rem in report.failures:
        lines.append(
            f"{amb.kind} w={amb.w} f={amb.f.body} g={amb.g.body} remainder={rem}"
        )
        fail_records.append(
            {
                "kind": amb.kind,
                "w": str(amb.w),
                "f": str(amb.f.body),
                "g": str(amb.g.body),
                "remainder": _poly_json(rem),
            }
        )
    _emit(
        args,
        lines,
        {
            "ok": report.ok,
            "max_deg": args.max_deg,
            "rules": len(rules),
            "ambiguities": report.ambiguities_checked,
            "failures": fail_records,
        },
    )
    return 0 if report.ok else 1


def cmd_basis(args):
    graph = _load_graph(args.theta)
    basis = irr_basis(graph, args.max_deg)
    dims = basis.dimensions()
    dims_line = " ".join(f"{d+1}:{n}" for d, n in enumerate(dims))
    lines = []
    if args.dims_only:
        lines.append(dims_line)
    else:
        for degree in range(1, args.max_deg + 1):
            for tree in basis.trees(degree):
                lines.append(f"{degree}\t{tree.word}\t{tree}")
        lines.append(dims_line)
    record = {
        "max_deg": args.max_deg,
        "dimensions": dims,
    }
    if not args.dims_only:
        record["elements"] = [
            {"degree": len(t.word), "word": str(t.word), "tree": str(t)}
            for level in basis.by_degree
            for t in level
        ]
    exit_code = 0
    if args.cross_check:
        oracle = clique_series_dims(graph, args.max_deg)
        record["cross_check"] = {
            "ok": oracle == dims,
            "series_dims": oracle,
            "assoc_series": assoc_hilbert_series(graph, args.max_deg),
        }
        if oracle == dims:
            lines.append("cross-check: ok")
        else:
            lines.append(f"cross-check: MISMATCH series={oracle} basis={dims}")
            exit_code = 1
    _emit(args, lines, record)
    return exit_code


def cmd_complete(args):
    _, rules = _load_rules(args.rules)
    closed = complete(rules, args.max_deg)
    _emit(
        args,
        [str(r.body) for r in closed],
        {
            "max_deg": args.max_deg,
            "input_rules": len(rules),
            "rules": [
                {"leading": str(r.leading), "body": _poly_json(r.body)}
                for r in closed
            ],
        },
    )
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="pclie",
        description=(
            "Lyndon-Shirshov word calculus, Groebner-Shirshov rewriting, and "
            "graded bases of free partially commutative Lie algebras."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("alsw", help="list Lyndon-Shirshov words up to a degree")
    p.add_argument("--alphabet", required=True, help='declaration, e.g. "x > y"')
    p.add_argument("--max-deg", type=int, required=True)
    add_format(p)
    p.set_defaults(func=cmd_alsw)

    p = sub.add_parser("factorize", help="non-decreasing Lyndon-Shirshov factorization")
    p.add_argument("--alphabet", required=True)
    p.add_argument("word")
    add_format(p)
    p.set_defaults(func=cmd_factorize)

    p = sub.add_parser("bracket", help="canonical bracketing of a Lyndon-Shirshov word")
    p.add_argument("--alphabet", required=True)
    p.add_argument("word")
    add_format(p)
    p.set_defaults(func=cmd_bracket)

    p = sub.add_parser(
        "nf",
        help="normal form modulo a commutation graph",
        description=(
            "Rewrite an expression to its normal form. Reduction always "
            "targets the deg-lex greatest reducible basis word and the "
            "leftmost occurrence of the chosen rule pattern inside it."
        ),
    )
    p.add_argument("--theta", required=True, help="commutation graph file")
    p.add_argument("--expr", required=True, help="expression over the graph's alphabet")
    add_format(p)
    p.set_defaults(func=cmd_nf)

    p = sub.add_parser(
        "verify",
        help="check the commutation rule set is closed under composition up to a degree",
    )
    p.add_argument("--theta", required=True)
    p.add_argument("--max-deg", type=int, required=True)
    add_format(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("basis", help="graded basis of the quotient up to a degree")
    p.add_argument("--theta", required=True)
    p.add_argument("--max-deg", type=int, required=True)
    p.add_argument("--dims-only", action="store_true")
    p.add_argument(
        "--cross-check",
        action="store_true",
        help="compare dimensions against the clique-series oracle",
    )
    add_format(p)
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("complete", help="bounded completion of a rule set")
    p.add_argument("--rules", required=True, help="rules file")
    p.add_argument("--max-deg", type=int, required=True)
    add_format(p)
    p.set_defaults(func=cmd_complete)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (OSError, ValueError) as exc:  # ParseError is a ValueError
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
