"""Command-line interface tying the library together.

Subcommands: construct, invariants, extremal, formula, enumerate,
search-max, verify.  ``--json`` switches any subcommand to a single
machine-readable document with no timestamps, so reports are stable
across re-runs; exit status 0 means every assertion made by the
subcommand held.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import families, formulas, search, sparse6
from .errors import TitreesError
from .extremal import extremal
from .tree import Tree, transmission_profile


def _parse_orders(text: str) -> list[int]:
    orders: list[int] = []
    for atom in text.split(","):
        atom = atom.strip()
        if ".." in atom:
            lo, hi = atom.split("..", 1)
            orders.extend(range(int(lo), int(hi) + 1))
        elif atom:
            orders.append(int(atom))
    if not orders:
        raise ValueError(f"no orders in {text!r}")
    return orders


def _load_tree(text: str) -> Tree:
    text = text.strip()
    if text.startswith(":") or text.startswith(">>"):
        return sparse6.decode_line(text)
    return families.build_tree(families.parse_spec(text))


def _emit_tree(tree: Tree, emit: str) -> str:
    if emit == "sparse6":
        return sparse6.encode_sparse6(tree)
    return " ".join(f"{u}-{v}" for u, v in tree.edges)


def _print_json(payload) -> None:
    print(json.dumps(payload, indent=2))


def _cmd_construct(args) -> int:
    spec = families.parse_spec(args.spec)
    built = families.build(spec)
    if args.json:
        _print_json(
            {
                "spec": families.format_spec(spec),
                "order": built.tree.n,
                "edges": [list(e) for e in built.tree.edges],
                "sparse6": sparse6.encode_sparse6(built.tree),
                "labels": built.labels,
            }
        )
    else:
        print(f"{families.format_spec(spec)} order={built.tree.n}")
        if args.emit != "spec":
            print(_emit_tree(built.tree, args.emit))
    return 0


def _cmd_invariants(args) -> int:
    tree = _load_tree(args.tree)
    prof = transmission_profile(tree)
    if args.json:
        _print_json(
            {
                "order": tree.n,
                "transmissions": list(prof.tr),
                "wiener": prof.wiener,
                "ti": prof.is_ti,
                "min_vertex": prof.min_vertex,
                "min_vertex_degree": tree.degree(prof.min_vertex),
            }
        )
    else:
        print(f"order={tree.n} W={prof.wiener} TI={'yes' if prof.is_ti else 'no'}")
        print(f"min vertex {prof.min_vertex} (degree {tree.degree(prof.min_vertex)}, "
              f"transmission {prof.tr[prof.min_vertex]})")
        print("tr =", " ".join(map(str, prof.tr)))
    return 0


def _cmd_extremal(args) -> int:
    out = extremal(args.order)
    if args.json:
        _print_json(out.to_json_dict())
        return 0
    if out.verdict == "solved":
        line = (
            f"{out.case_label} {families.format_spec(out.spec)} "
            f"W={out.direct_wiener} TI={'yes' if out.is_ti else 'no'}"
        )
        print(line)
        if args.emit == "spec":
            print(families.format_spec(out.spec))
        elif args.emit:
            print(_emit_tree(families.build_tree(out.spec), args.emit))
    else:
        print(f"{out.verdict} ({out.reason})")
    return 0


def _cmd_formula(args) -> int:
    name, n = args.name, args.n
    cf = formulas.CLOSED_FORMS.get(name)
    sg = formulas.SPECTRA.get(name)
    if cf is None and sg is None:
        known = sorted(set(formulas.CLOSED_FORMS) | set(formulas.SPECTRA))
        print(f"error: unknown formula {name!r}; known: {', '.join(known)}", file=sys.stderr)
        return 2
    payload: dict = {"name": name, "n": n}
    lines = []
    if cf is not None:
        value = cf.wiener(n)
        payload["wiener"] = value
        payload["spec"] = families.format_spec(cf.family(n))
        lines.append(f"W = {value}  [{payload['spec']}]")
        if cf.params is not None:
            payload["derived"] = cf.params(n)
            lines.append("derived: " + " ".join(f"{k}={v}" for k, v in payload["derived"].items()))
    if sg is not None:
        off = sg.offsets(n)
        payload["offsets"] = list(off.offsets)
        payload["distinct"] = off.is_distinct
        if off.params:
            payload["params"] = off.params
        lines.append(f"offsets ({'distinct' if off.is_distinct else 'repeat found'}): "
                     + " ".join(map(str, off.offsets)))
    if args.json:
        _print_json(payload)
    else:
        for line in lines:
            print(line)
    return 0


def _cmd_enumerate(args) -> int:
    sink = open(args.out, "w") if args.out else sys.stdout
    try:
        if args.ti_only:
            for tree in search.ti_trees(args.order, shards=args.shards):
                sink.write(sparse6.encode_sparse6(tree) + "\n")
        else:
            for tree in search.enumerate_trees(args.order):
                sink.write(sparse6.encode_sparse6(tree) + "\n")
    finally:
        if args.out:
            sink.close()
    return 0


def _cmd_search_max(args) -> int:
    report = search.search_max_ti(args.order, shards=args.shards)
    if args.json:
        _print_json(report.to_json_dict())
    else:
        print(
            f"order={report.order} total={report.total_trees} ti={report.ti_trees} "
            f"maxW={report.max_wiener} maximizers={len(report.maximizers)} "
            f"({report.elapsed:.2f}s)"
        )
        for m in report.maximizers:
            print(m.sparse6)
    return 0


def _cmd_verify(args) -> int:
    orders = _parse_orders(args.orders)
    rows = search.verify_orders(orders, shards=args.shards, raise_on_failure=False)
    ok = all(r.ok for r in rows)
    if args.json or args.report:
        payload = {"orders": orders, "ok": ok, "rows": [r.to_json_dict() for r in rows]}
        if args.report:
            with open(args.report, "w") as fh:
                json.dump(payload, fh, indent=2)
                fh.write("\n")
        if args.json:
            _print_json(payload)
    if not args.json:
        for r in rows:
            status = "ok" if r.ok else "FAIL"
            print(
                f"n={r.order:3d} total={r.total_trees:9d} ti={r.ti_trees:6d} "
                f"maxW={str(r.max_wiener):>6} maximizers={r.maximizer_count} "
                f"expected={r.expected:11s} {status} {r.detail}"
            )
        print("verify:", "PASS" if ok else "FAIL")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="titrees",
        description="Transmission-irregular trees: invariants, extremal constructions, search.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a family spec and print the tree")
    p.add_argument("spec", help="family spec text, e.g. 'S(3,2,1)' or 'CV(9; 3:1,5:1,5:3)'")
    p.add_argument("--emit", choices=["spec", "edges", "sparse6"], default="edges")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("invariants", help="transmissions / Wiener / TI of a tree")
    p.add_argument("tree", help="family spec text or a sparse6/graph6 line")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_invariants)

    p = sub.add_parser("extremal", help="maximum-Wiener TI tree of a given order")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--emit", choices=["edges", "sparse6", "spec"])
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_extremal)

    p = sub.add_parser("formula", help="closed-form value / spectrum offsets at an order")
    p.add_argument("--name", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_formula)

    p = sub.add_parser("enumerate", help="stream all (or all TI) trees as sparse6 lines")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--ti-only", action="store_true")
    p.add_argument("--shards", type=int, default=1)
    p.add_argument("--out", help="output file (default stdout)")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("search-max", help="max-Wiener search over the TI trees of an order")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--shards", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_search_max)

    p = sub.add_parser("verify", help="exhaustively confirm dispatcher claims over a range")
    p.add_argument("--orders", required=True, help="e.g. '2..24' or '7,11,14'")
    p.add_argument("--shards", type=int, default=1)
    p.add_argument("--report", help="write a JSON report to this file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except TitreesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
