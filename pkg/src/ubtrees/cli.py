"""Command-line surface: invariants, maximizer tables, relaxation checks.

Exit codes: 0 success, 1 argument/validation error, 2 invariant violation.
"""

from __future__ import annotations

import argparse
import csv
import os
import sys

from . import relaxation, search, stars, trees

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_VIOLATION = 2


def _real(v: float) -> str:
    return f"{v:.12g}"


def cmd_ub(args) -> int:
    if args.star:
        sig = stars.parse_signature(args.star)
        breakdown = stars.ub_closed_form(sig)
        tree = stars.build_tree(sig)
        print(f"signature: {sig}")
        print(f"order: {sig.order}")
        print(
            "uB breakdown: "
            f"ub1={breakdown.ub1} ub2={breakdown.ub2} ub3={breakdown.ub3} ub4={breakdown.ub4}"
        )
        print(f"uB: {breakdown.total}")
        print(f"mostar: {trees.mostar_index(tree)}")
    else:
        tree = trees.read_tree(args.tree_file)
        print(f"order: {tree.order}")
        print(f"uB: {trees.ub_oracle(tree)}")
        print(f"mostar: {trees.mostar_index(tree)}")
    return EXIT_OK


def _witness_field(record: search.MaximizerRecord) -> str:
    return ";".join(str(w) for w in record.witnesses)


def cmd_search(args) -> int:
    if not 4 <= args.start <= args.stop:
        raise ValueError("need 4 <= --from <= --to")
    if args.all_trees and args.stop > 15:
        raise ValueError("--all-trees requires --to <= 15")
    records = search.search_orders(args.start, args.stop, workers=args.threads)
    dominance = {}
    if args.all_trees:
        for rec in records:
            dominance[rec.order] = search.verify_dominance(rec.order)
    if args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        header = ["n", "max_ub", "witnesses"]
        if args.all_trees:
            header.append("dominance")
        writer.writerow(header)
        for rec in records:
            row = [rec.order, rec.max_ub, _witness_field(rec)]
            if args.all_trees:
                row.append(str(dominance[rec.order]).lower())
            writer.writerow(row)
    else:
        for rec in records:
            cells = [str(rec.order), str(rec.max_ub),
                     " ".join("(" + str(w) + ")" for w in rec.witnesses)]
            if args.all_trees:
                cells.append(str(dominance[rec.order]).lower())
            print("| " + " | ".join(cells) + " |")
    return EXIT_OK


def cmd_relax_eval(args) -> int:
    x = relaxation.BranchFractions(
        sorted((float(f) for f in args.x.split(",")), reverse=True)
    )
    closed = relaxation.f_closed(x)
    quadrature = relaxation.f_quadrature(x)
    print(f"f_closed: {_real(closed)}")
    print(f"f_quadrature: {_real(quadrature)}")
    print(f"difference: {_real(closed - quadrature)}")
    return EXIT_OK


def cmd_relax_max(args) -> int:
    xstar, value = relaxation.maximize_f(args.k)
    uniform = relaxation.f_uniform(args.k)
    print("x*: " + ",".join(_real(v) for v in xstar))
    print(f"value: {_real(value)}")
    print(f"f_uniform: {_real(uniform)}")
    print(f"gap: {_real(uniform - value)}")
    return EXIT_OK


def cmd_relax_bound_check(args) -> int:
    worst = 0.0
    for n in range(4, args.stop + 1):
        ratio = search.max_gap_ratio(n)
        worst = max(worst, ratio)
        print(f"n={n} ratio={_real(ratio)}")
    print(f"max ratio: {_real(worst)}")
    if worst > 1.0:
        print("bound violated", file=sys.stderr)
        return EXIT_VIOLATION
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ubtrees",
        description="Distance-unbalancedness of trees: invariants, maximizer search, relaxation",
    )
    default_threads = int(os.environ.get("UBTREES_THREADS", "1"))
    sub = parser.add_subparsers(dest="command", required=True)

    p_ub = sub.add_parser("ub", help="uB and Mostar index of a tree file or star signature")
    p_ub.add_argument("tree_file", nargs="?", help="tree file: first line n, then n-1 lines 'u v'")
    p_ub.add_argument("--star", help="signature such as 2,1,1 instead of a tree file")
    p_ub.set_defaults(func=cmd_ub)

    p_search = sub.add_parser("search", help="maximizers over subdivided stars per order")
    p_search.add_argument("--from", dest="start", type=int, required=True)
    p_search.add_argument("--to", dest="stop", type=int, required=True)
    p_search.add_argument("--all-trees", action="store_true", dest="all_trees",
                          help="also search all trees (n <= 15) and report dominance")
    p_search.add_argument("--format", choices=("csv", "md"), default="csv")
    p_search.add_argument("--threads", type=int, default=default_threads)
    p_search.set_defaults(func=cmd_search)

    p_relax = sub.add_parser("relax", help="continuous-relaxation checks")
    relax_sub = p_relax.add_subparsers(dest="relax_command", required=True)

    p_eval = relax_sub.add_parser("eval", help="evaluate f by closed form and quadrature")
    p_eval.add_argument("x", help="comma-separated fractions, e.g. 0.5,0.5")
    p_eval.set_defaults(func=cmd_relax_eval)

    p_max = relax_sub.add_parser("max", help="maximize f over the sorted sub-simplex")
    p_max.add_argument("k", type=int)
    p_max.set_defaults(func=cmd_relax_max)

    p_bound = relax_sub.add_parser("bound-check", help="approximation-gap bound sweep")
    p_bound.add_argument("--to", dest="stop", type=int, required=True)
    p_bound.set_defaults(func=cmd_relax_bound_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "ub" and bool(args.tree_file) == bool(args.star):
        parser.error("ub needs exactly one of a tree file or --star")
    try:
        return args.func(args)
    except (ValueError, OSError, trees.TreeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (relaxation.QuadratureError, relaxation.ConvergenceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VIOLATION


if __name__ == "__main__":
    sys.exit(main())
