"""Command-line front end: counting, polynomials, intervals, lattices.

All commands are deterministic; ``--json`` switches any of them to a stable
machine-readable schema (one JSON object on stdout).  Exit codes: 0 on
success and full agreement, 1 when a computation reports a failure
(count mismatch, incomparable trees, failed verification), 2 for bad input
or an exceeded capacity cap.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import intervalposet, mtamari, order, poly, trees
from .compose import enumerate_interval_posets

TREE_LATTICE_CAP = 8
PATH_LATTICE_CAP = 5
ENUMERATION_CAP = 8
SERIES_CAP = 30


class CommandError(Exception):
    def __init__(self, message: str, code: int = 2):
        super().__init__(message)
        self.code = code


def _emit(args, lines: list[str], payload: dict) -> None:
    if args.json:
        payload["command"] = args.command
        print(json.dumps(payload, sort_keys=True))
    else:
        print("\n".join(lines))


def _effective_cap(args, default: int) -> int:
    if args.max_n is not None and args.max_n > default:
        print(f"warning: raising capacity cap to {args.max_n}; "
              "brute-force routes are exponential", file=sys.stderr)
        return args.max_n
    return default


def _count_one(method: str, n: int, args) -> int:
    if method == "formula":
        return poly.chapoton_count(n)
    if method == "enumerate":
        if n > _effective_cap(args, ENUMERATION_CAP):
            raise CommandError(f"enumerate is capped at n={ENUMERATION_CAP} "
                               "(override with --max-n)")
        return len(enumerate_interval_posets(n))
    if method == "bruteforce":
        cap = _effective_cap(args, order.TREE_ORACLE_CAP)
        if n > cap:
            raise CommandError(f"bruteforce is capped at n={order.TREE_ORACLE_CAP} "
                               "(override with --max-n)")
        return order.count_intervals_bruteforce(n, max_n=cap)
    if method == "series":
        if n > _effective_cap(args, SERIES_CAP):
            raise CommandError(f"series is capped at n={SERIES_CAP} "
                               "(override with --max-n)")
        return poly.phi_series(n).y_coefficient(n).subs(x=1).constant()
    raise CommandError(f"unknown method {method}")


def cmd_count(args) -> int:
    n = args.n
    if args.all_methods:
        counts = {method: _count_one(method, n, args)
                  for method in ("formula", "enumerate", "bruteforce", "series")}
        agree = len(set(counts.values())) == 1
        lines = [f"{method}: {value}" for method, value in sorted(counts.items())]
        lines.append("MATCH" if agree else "MISMATCH")
        _emit(args, lines, {"n": n, "counts": counts, "match": agree})
        return 0 if agree else 1
    value = _count_one(args.method, n, args)
    _emit(args, [str(value)], {"n": n, "method": args.method, "count": value})
    return 0


def cmd_poly(args) -> int:
    tree = trees.parse_tree(args.tree)
    if args.mirror:
        variant, p = "mirror", poly.tamari_poly_mirror(tree)
    elif args.bivar:
        variant, p = "bivar", poly.tamari_poly_bivar(tree)
    else:
        variant, p = "standard", poly.tamari_poly(tree)
    payload = {"tree": trees.format_tree(tree), "variant": variant,
               "polynomial": str(p)}
    if args.at_one:
        value = p.subs(x=1, b=1).constant()
        payload["at_one"] = value
        _emit(args, [str(value)], payload)
    else:
        _emit(args, [str(p)], payload)
    return 0


def cmd_interval(args) -> int:
    lower = trees.parse_tree(args.lower)
    upper = trees.parse_tree(args.upper)
    if lower.size != upper.size:
        raise CommandError("trees must have the same size")
    poset = intervalposet.make_interval(lower, upper)
    if poset is None:
        raise CommandError("not a Tamari interval", code=1)
    show_trees = args.trees
    show_extensions = args.extensions
    show_poset = args.poset or not (show_trees or show_extensions)

    lines: list[str] = []
    payload: dict = {"lower": trees.format_tree(lower),
                     "upper": trees.format_tree(upper), "n": poset.n}
    if show_poset:
        lines.extend(poset.to_text().splitlines())
        payload["poset"] = poset.to_text()
    if show_trees:
        inside = intervalposet.trees_in_interval(
            poset, max_n=_effective_cap(args, order.TREE_ORACLE_CAP))
        literals = [trees.format_tree(t) for t in inside]
        lines.extend(literals)
        payload["trees"] = literals
    if show_extensions:
        cap = _effective_cap(args, order.PERM_CAP)
        if poset.n > cap:
            raise CommandError(f"extensions are capped at n={order.PERM_CAP} "
                               "(override with --max-n)")
        extensions = sorted(intervalposet.linear_extensions(poset, max_n=cap))
        low = min(extensions, key=lambda p: (len(order.coinv(p)), p))
        high = max(extensions, key=lambda p: (len(order.coinv(p)), p))
        for perm in extensions:
            tag = " (min)" if perm == low else " (max)" if perm == high else ""
            lines.append(order.format_permutation(perm) + tag)
        payload["extensions"] = [order.format_permutation(p) for p in extensions]
        payload["min"] = order.format_permutation(low)
        payload["max"] = order.format_permutation(high)
    _emit(args, lines, payload)
    return 0


def _dot(name: str, labels: list[str], edges: list[tuple[int, int]]) -> list[str]:
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for i, label in enumerate(labels):
        lines.append(f'  v{i} [label="{label}"];')
    for a, b in edges:
        lines.append(f"  v{a} -> v{b};")
    lines.append("}")
    return lines


def cmd_lattice(args) -> int:
    n = args.n
    if args.mtamari is not None:
        m = args.mtamari
        if n > _effective_cap(args, PATH_LATTICE_CAP):
            raise CommandError(f"ballot path lattices are capped at n={PATH_LATTICE_CAP} "
                               "(override with --max-n)")
        paths = mtamari.enumerate_ballot_paths(m, n)
        index = {p: i for i, p in enumerate(paths)}
        labels = [p.steps for p in paths]
        edges = sorted((index[p], index[q]) for p in paths
                       for q in mtamari.path_rotation_covers(p))
        name = f"mtamari_{m}_{n}"
        payload = {"kind": "ballot", "m": m, "n": n}
    else:
        if n > _effective_cap(args, TREE_LATTICE_CAP):
            raise CommandError(f"tree lattices are capped at n={TREE_LATTICE_CAP} "
                               "(override with --max-n)")
        all_trees = trees.enumerate_trees(n)
        index = {t: i for i, t in enumerate(all_trees)}
        labels = [trees.format_tree(t) for t in all_trees]
        edges = sorted((index[t], index[u]) for t in all_trees
                       for u in trees.tamari_covers_up(t))
        name = f"tamari_{n}"
        payload = {"kind": "trees", "n": n}
    payload.update({"vertices": labels, "edges": [list(e) for e in edges]})
    _emit(args, _dot(name, labels, edges), payload)
    return 0


def cmd_phi(args) -> int:
    if args.n > _effective_cap(args, SERIES_CAP):
        raise CommandError(f"series is capped at n={SERIES_CAP} "
                           "(override with --max-n)")
    if args.m is None:
        series = poly.phi_series(args.n)
    else:
        series = mtamari.phi_m_series(args.m, args.n)
    _emit(args, [str(series)],
          {"n": args.n, "m": args.m, "series": str(series)})
    return 0


def cmd_mtamari_verify(args) -> int:
    m, n = args.m, args.n
    if n > _effective_cap(args, PATH_LATTICE_CAP):
        raise CommandError(f"verification is capped at n={PATH_LATTICE_CAP} "
                           "(override with --max-n)")
    paths = mtamari.enumerate_ballot_paths(m, n)
    below: dict[mtamari.BallotPath, set] = {}

    def reach(p):
        if p not in below:
            closure = {p}
            for q in mtamari.path_rotation_covers(p):
                closure |= reach(q)
            below[p] = closure
        return below[p]

    for p in paths:
        reach(p)
    lines = []
    results = []
    all_ok = True
    for p in paths:
        tree = mtamari.path_to_mary_prefix(p)
        counted = mtamari.mary_tamari_poly(tree).subs(x=1, y=1).constant()
        expected = sum(1 for q in paths if p in below[q])
        ok = counted == expected
        all_ok &= ok
        verdict = "PASS" if ok else "FAIL"
        lines.append(f"{verdict} {p.to_text()} polynomial={counted} paths={expected}")
        results.append({"path": p.to_text(), "polynomial_count": counted,
                        "path_count": expected, "ok": ok})
    lines.append(f"{'OK' if all_ok else 'FAILED'} {len(paths)} paths checked")
    _emit(args, lines, {"m": m, "n": n, "paths": results, "ok": all_ok})
    return 0 if all_ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tamari",
        description="Exact Tamari-lattice interval combinatorics")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true",
                       help="emit one JSON object instead of plain text")
        p.add_argument("--max-n", type=int, default=None,
                       help="raise the capacity cap (brute force is exponential)")

    p = sub.add_parser("count", help="count Tamari intervals of size n")
    p.add_argument("n", type=int)
    p.add_argument("--method", default="formula",
                   choices=("formula", "enumerate", "bruteforce", "series"))
    p.add_argument("--all-methods", action="store_true",
                   help="run every method and report MATCH/MISMATCH")
    common(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("poly", help="Tamari polynomial of a tree")
    p.add_argument("tree", help="tree literal such as [[_,_],_] or a Dyck word")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--mirror", action="store_true",
                       help="count trees above instead of below")
    group.add_argument("--bivar", action="store_true",
                       help="refine by the right-subtree statistic b")
    p.add_argument("--at-one", action="store_true",
                   help="print the evaluation at x=1 (and b=1)")
    common(p)
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("interval", help="inspect the interval between two trees")
    p.add_argument("lower")
    p.add_argument("upper")
    p.add_argument("--poset", action="store_true",
                   help="print the interval-poset (default section)")
    p.add_argument("--trees", action="store_true",
                   help="list the trees inside the interval")
    p.add_argument("--extensions", action="store_true",
                   help="list the linear extensions with min/max marked")
    common(p)
    p.set_defaults(func=cmd_interval)

    p = sub.add_parser("lattice", help="cover graph in DOT format")
    p.add_argument("n", type=int)
    p.add_argument("--dot", action="store_true",
                   help="DOT output (the default; kept for explicitness)")
    p.add_argument("--mtamari", type=int, metavar="M", default=None,
                   help="use the m-Tamari lattice on ballot paths")
    common(p)
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("phi", help="interval generating function through y^N")
    p.add_argument("n", type=int)
    p.add_argument("--m", type=int, default=None,
                   help="m-Tamari series instead of the plain one")
    common(p)
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("mtamari-verify",
                       help="check the prefix-tree polynomial count per path")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_mtamari_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CommandError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (ValueError, order.CapacityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
