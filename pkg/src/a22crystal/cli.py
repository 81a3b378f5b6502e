"""Command line interface: ``a22crystal crystal|walls|act|verify``.

Exit codes: 0 success, 1 verification failure (or a wall condition error in
``act``), 2 usage error, 3 node cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .adjoint import AdjointCrystal, LambdaSpec, minimal_vector
from .crystal import DEFAULT_NODE_CAP, ResourceLimitError, component
from .verify import SUITES, run_suite, wall_graph
from .youngwall import Wall, WallConditionError, all_walls, ground_wall, render_ascii, wall_e, wall_f

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _lambda(text: str) -> LambdaSpec:
    try:
        return LambdaSpec.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return v


def table_lines(g) -> list[str]:
    """Per-weight node counts, highest weight first."""
    counts = g.multiplicities()
    rows = sorted(counts.items(), key=lambda kv: (-kv[0].cd, -kv[0].c0, -kv[0].c1))
    width = max((len(str(w)) for w, _ in rows), default=6)
    out = [f"{'weight'.ljust(width)}  count"]
    out += [f"{str(w).ljust(width)}  {n}" for w, n in rows]
    out.append(f"total nodes {len(g.nodes)}, edges {len(g.edges)}")
    return out


# -- commands ----------------------------------------------------------------


def cmd_crystal(args) -> int:
    B = AdjointCrystal(args.level)
    g = component(B, B.elem(0, 0), None, "both", args.cap)
    minimal = [str(minimal_vector(args.level, a)) for a in range(args.level // 2 + 1)]
    if args.format == "dot":
        sys.stdout.write(g.to_dot(f"B_ad_{args.level}"))
    elif args.format == "json":
        data = g.to_json()
        data["level"] = args.level
        data["minimal_vectors"] = minimal
        print(json.dumps(data, indent=2))
    else:
        print(f"level {args.level}: {len(g.nodes)} elements, {len(g.edges)} arrows")
        for k in sorted(g.nodes):
            b = g.nodes[k]
            print(f"{k:>8}  wt={B.wt(b)}  eps=({B.eps(0, b)},{B.eps(1, b)})  phi=({B.phi(0, b)},{B.phi(1, b)})")
        for s, i, d in sorted(g.edges):
            print(f"{s} -{i}-> {d}")
        print("minimal vectors: " + " ".join(minimal))
    return EXIT_OK


def cmd_walls(args) -> int:
    lam = args.lam
    if args.reduced_only:
        g = wall_graph(lam, args.depth, args.method, args.cap, args.jobs)
    else:
        g = all_walls(lam, args.depth, args.cap)
    if args.format == "dot":
        sys.stdout.write(g.to_dot("walls"))
    elif args.format == "json":
        data = g.to_json()
        data["lambda"] = lam.to_json()
        data["walls"] = {k: g.nodes[k].to_json()["columns"] for k in g.ordered_keys()}
        print(json.dumps(data, indent=2))
    elif args.format == "ascii":
        for k in g.ordered_keys():
            sys.stdout.write(render_ascii(g.nodes[k]))
            print()
    else:
        print("\n".join(table_lines(g)))
    return EXIT_OK


def parse_ops(text: str) -> list[tuple[str, int]]:
    ops = []
    for tok in text.replace(",", " ").split():
        t = tok.upper()
        if len(t) != 2 or t[0] not in "EF" or t[1] not in "01":
            raise UsageError(f"bad operator {tok!r}; use E0, E1, F0 or F1")
        ops.append((t[0], int(t[1])))
    return ops


def cmd_act(args) -> int:
    ops_text = " ".join(args.ops)
    if args.lam is not None:
        # no wall file with --lambda; a first positional is an operator
        if args.wall:
            ops_text = f"{args.wall} {ops_text}"
        y = ground_wall(args.lam)
    elif args.wall:
        with open(args.wall, encoding="utf-8") as fh:
            y = Wall.from_json(json.load(fh))
    else:
        raise UsageError("give a wall file or --lambda for the ground-state wall")
    ops = parse_ops(ops_text)
    # operators are applied in the order written
    for step, (kind, i) in enumerate(ops, 1):
        op = wall_f if kind == "F" else wall_e
        try:
            nxt = op(i, y, args.method)
        except WallConditionError as exc:
            print(f"error at step {step} ({kind}{i}): {exc}", file=sys.stderr)
            return EXIT_FAIL
        if nxt is None:
            if args.format == "json":
                print(json.dumps({"result": None, "step": step, "operator": f"{kind}{i}", "input": y.to_json()}))
            else:
                print(f"null: {kind}{i} annihilates the wall at step {step}")
            return EXIT_OK
        y = nxt
    if args.format == "json":
        print(json.dumps({"result": y.to_json()}))
    else:
        sys.stdout.write(render_ascii(y))
    return EXIT_OK


def cmd_verify(args) -> int:
    start = time.perf_counter()
    reports = run_suite(args.suite, args.level, args.lam, args.depth, args.cap, args.jobs)
    ok = all(r.ok for r in reports)
    if args.json:
        out = {
            "suite": args.suite,
            "pass": ok,
            "seconds": round(time.perf_counter() - start, 3),
            "reports": [r.to_json() for r in reports],
        }
        print(json.dumps(out, indent=2, default=str))
    else:
        for r in reports:
            print(r)
            for v in r.violations[:10]:
                print(f"    {v}")
            for k, v in r.info.items():
                print(f"    {k}: {v}")
        print(f"{args.suite}: {'PASS' if ok else 'FAIL'}")
    return EXIT_OK if ok else EXIT_FAIL


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="a22crystal", description="Adjoint crystals and Young walls of type A_2^(2).")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--cap", type=_positive, default=DEFAULT_NODE_CAP, help="node cap for graph traversals")
        sp.add_argument("--jobs", type=_positive, default=1, help="worker processes for BFS expansion")

    sp = sub.add_parser("crystal", help="the level-l adjoint crystal graph")
    sp.add_argument("--level", type=_positive, required=True)
    sp.add_argument("--format", choices=("dot", "json", "table"), default="dot")
    common(sp)
    sp.set_defaults(func=cmd_crystal)

    sp = sub.add_parser("walls", help="Young walls on lambda up to a depth")
    sp.add_argument("--lambda", dest="lam", type=_lambda, required=True, help="'l,a' or 'inf'")
    sp.add_argument("--depth", type=_nonneg, default=3)
    sp.add_argument("--reduced-only", action="store_true", help="only the component of the ground wall")
    sp.add_argument("--format", choices=("dot", "json", "ascii", "table"), default="table")
    sp.add_argument("--method", choices=("oracle", "tensor"), default="oracle")
    common(sp)
    sp.set_defaults(func=cmd_walls)

    sp = sub.add_parser("act", help="apply E_i/F_i to a wall")
    sp.add_argument("wall", nargs="?", help="wall JSON file")
    sp.add_argument("ops", nargs="+", help="operators, e.g. F0 F1 E0, applied left to right")
    sp.add_argument("--lambda", dest="lam", type=_lambda, help="start from the ground wall on lambda")
    sp.add_argument("--format", choices=("ascii", "json"), default="ascii")
    sp.add_argument("--method", choices=("oracle", "tensor"), default="tensor")
    sp.set_defaults(func=cmd_act)

    sp = sub.add_parser("verify", help="run a verification suite")
    sp.add_argument("suite", choices=SUITES)
    sp.add_argument("--level", type=_positive)
    sp.add_argument("--lambda", dest="lam", type=_lambda)
    sp.add_argument("--depth", type=_nonneg)
    sp.add_argument("--json", action="store_true", help="machine-readable report")
    common(sp)
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (OSError, json.JSONDecodeError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
