"""Command-line interface.

Exit codes: 0 success (all verifications passed), 1 a verification found a
mismatch, 2 usage or parse error.  Wherever a tree or permutation operand
is expected, "-" reads standard input instead and processes every
nonempty line, so ``enum`` output pipes straight into ``classify``,
``bij`` or ``stirling``.  All stdout is deterministic for a fixed argv
(and seed); timing goes to stderr.
"""

from __future__ import annotations

import argparse
import math
import sys
import time

from .families import (
    MAX_INCREASING_EDGES,
    MAX_LABELED_EDGES,
    catalan,
    increasing_trees,
    labeled_trees,
    odd_double_factorial,
    root_one_trees,
    sample_increasing_trees,
    sample_labeled_trees,
)
from .involution import flip_edge, from_increasing, to_increasing
from .polynomials import verify_closed_forms, verify_egf_identities
from .stirling import (
    blocks,
    format_permutation,
    parse_permutation,
    stirling_permutations,
    stirling_to_tree,
    tree_to_stirling,
)
from .tree import classify_edge, edge_id, edge_list, parse_tree, render_tree, tree_stats


def _operand_lines(operand: str) -> list[str]:
    if operand == "-":
        return [line for line in sys.stdin.read().splitlines() if line.strip()]
    return [operand]


def _parse_edge_arg(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"edge must be 'parent,child', got {text!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise ValueError(f"edge labels must be integers, got {text!r}") from None


def _check_bound(n: int, bound: int, force: bool) -> None:
    if n < 0:
        raise ValueError("n must be >= 0")
    if n > bound and not force:
        raise ValueError(f"n={n} exceeds the default bound {bound}; "
                         f"pass --force to run anyway")


def _cmd_classify(args) -> int:
    for line in _operand_lines(args.tree):
        tree = parse_tree(line)
        for eid, parent, child in edge_list(tree):
            print(f"({parent},{child}): {classify_edge(tree, eid).value}")
        st = tree_stats(tree)
        print(f"impr={st.improper} prop={st.proper}")
    return 0


def _cmd_phi(args) -> int:
    parent, child = _parse_edge_arg(args.edge)
    for line in _operand_lines(args.tree):
        tree = parse_tree(line)
        print(render_tree(flip_edge(tree, edge_id(tree, parent, child))))
    return 0


def _cmd_bij(args) -> int:
    for line in _operand_lines(args.tree):
        tree = parse_tree(line)
        if args.direction == "forward":
            out = to_increasing(tree, rooted=args.rooted)
        else:
            out = from_increasing(tree)
        print(render_tree(out))
    return 0


def _cmd_stirling(args) -> int:
    for line in _operand_lines(args.input):
        if args.direction == "to":
            print(format_permutation(tree_to_stirling(parse_tree(line))))
        elif args.direction == "from":
            print(render_tree(stirling_to_tree(parse_permutation(line))))
        else:  # blocks
            seq = parse_permutation(line)
            pieces = [format_permutation(seq[a:b]) for a, b in blocks(seq)]
            print("".join(f"[{piece}]" for piece in pieces))
    return 0


def _verify_thm1(ns, jobs: int, force: bool, show_polys: bool) -> int:
    failures = 0
    for n in ns:
        report = verify_closed_forms(n, force=force, jobs=jobs)
        if show_polys:
            print(f"P_{n} = {report.labeled}")
            print(f"O_{n} = {report.rooted}")
        print(f"thm1 n={n} {'PASS' if report.passed else 'FAIL'}")
        failures += 0 if report.passed else 1
    return failures


def _verify_thm2(order: int, force: bool) -> int:
    report = verify_egf_identities(order, force=force)
    for name, ok in (("P", report.labeled_ok), ("O", report.rooted_ok),
                     ("S", report.degree_ok)):
        print(f"thm2 {name} order={order} {'PASS' if ok else 'FAIL'}")
    return 0 if report.passed else 1


def _verify_counts(ns_labeled, ns_increasing, force: bool) -> int:
    failures = 0
    for n in ns_labeled:
        _check_bound(n, MAX_LABELED_EDGES, force)
        seen = sum(1 for _ in labeled_trees(n))
        lhs = math.factorial(n + 1) * catalan(n)
        rhs = 2 ** n * odd_double_factorial(n)
        ok = seen == lhs == rhs
        print(f"counts P n={n} {'PASS' if ok else 'FAIL'} "
              f"{seen} = {lhs} = {rhs}")
        failures += 0 if ok else 1
    for n in ns_increasing:
        _check_bound(n, MAX_INCREASING_EDGES, force)
        seen = sum(1 for _ in increasing_trees(n))
        expect = odd_double_factorial(n)
        ok = seen == expect
        print(f"counts I n={n} {'PASS' if ok else 'FAIL'} {seen} = {expect}")
        failures += 0 if ok else 1
    return failures


def _cmd_verify(args) -> int:
    failures = 0
    started = time.perf_counter()
    if args.target in ("counts", "all"):
        if args.n is None:
            ns_labeled = range(MAX_LABELED_EDGES + 1)
            ns_increasing = range(MAX_INCREASING_EDGES + 1)
        else:
            ns_labeled = ns_increasing = [args.n]
        failures += _verify_counts(ns_labeled, ns_increasing, args.force)
    if args.target in ("thm1", "all"):
        ns = range(MAX_LABELED_EDGES + 1) if args.n is None else [args.n]
        failures += _verify_thm1(ns, args.jobs, args.force,
                                 show_polys=args.n is not None)
    if args.target in ("thm2", "all"):
        failures += _verify_thm2(args.order, args.force)
    elapsed = time.perf_counter() - started
    print(f"elapsed {elapsed:.2f}s", file=sys.stderr)
    return 0 if failures == 0 else 1


def _cmd_enum(args) -> int:
    if args.family in ("P", "O"):
        _check_bound(args.n, MAX_LABELED_EDGES, args.force)
        items = (labeled_trees if args.family == "P" else root_one_trees)(args.n)
        text = render_tree
    elif args.family == "I":
        _check_bound(args.n, MAX_INCREASING_EDGES, args.force)
        items = increasing_trees(args.n)
        text = render_tree
    else:
        _check_bound(args.n, MAX_INCREASING_EDGES, args.force)
        items = stirling_permutations(args.n)
        text = format_permutation
    if args.count_only:
        print(sum(1 for _ in items))
    else:
        for item in items:
            print(text(item))
    return 0


def _cmd_sample(args) -> int:
    if args.n < 0:
        raise ValueError("n must be >= 0")
    if args.count < 1:
        raise ValueError("count must be >= 1")
    maker = sample_labeled_trees if args.family == "P" else sample_increasing_trees
    for tree in maker(args.n, args.seed, args.count):
        print(render_tree(tree))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="planetrees",
        description="Labeled plane trees, increasing plane trees and "
                    "Stirling permutations: bijections and exact identity "
                    "checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify each edge as proper or improper")
    p.add_argument("tree", help="tree text, or - for stdin")
    p.set_defaults(handler=_cmd_classify)

    p = sub.add_parser("phi", help="apply the edge involution once")
    p.add_argument("tree", help="tree text, or - for stdin")
    p.add_argument("edge", help="edge as parent,child")
    p.set_defaults(handler=_cmd_phi)

    p = sub.add_parser("bij", help="bijection with increasing plane trees")
    p.add_argument("direction", choices=["forward", "inverse"])
    p.add_argument("tree", help="tree text, or - for stdin")
    p.add_argument("--rooted", action="store_true",
                   help="root-1 mode: mark edges at vertex 1 with t")
    p.set_defaults(handler=_cmd_bij)

    p = sub.add_parser("stirling", help="bijection with Stirling permutations")
    p.add_argument("direction", choices=["to", "from", "blocks"])
    p.add_argument("input", help="tree text (to) or permutation (from, blocks); - for stdin")
    p.set_defaults(handler=_cmd_stirling)

    p = sub.add_parser("verify", help="run the identity checks")
    p.add_argument("target", choices=["thm1", "thm2", "counts", "all"])
    p.add_argument("--n", type=int, default=None,
                   help="single n instead of the default sweep")
    p.add_argument("--order", type=int, default=10,
                   help="series truncation order for thm2")
    p.add_argument("--jobs", type=int, default=1,
                   help="worker processes for the enumeration")
    p.add_argument("--force", action="store_true",
                   help="ignore the feasibility bounds")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("enum", help="stream a whole family, one per line")
    p.add_argument("family", choices=["P", "O", "I", "stirling"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--force", action="store_true")
    p.set_defaults(handler=_cmd_enum)

    p = sub.add_parser("sample", help="draw uniform random trees")
    p.add_argument("family", choices=["P", "I"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1)
    p.set_defaults(handler=_cmd_sample)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except BrokenPipeError:
        try:
            sys.stderr.close()
        except OSError:
            pass
        return 0
    except ValueError as exc:  # includes TreeParseError
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
