"""``fga`` command line.

Exit codes: 0 success or predicate true, 1 predicate false, 2 error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from pathlib import Path

from . import algebra as alg
from .config import Budget, default_budget
from .core import are_isomorphic, classify
from .decomposition import canonical_decomposition, split_at, st_core
from .errors import FlowGraphError
from .explorer.enumerate import UniverseSpec, enumerate_flow_graphs
from .explorer.harness import run_catalog
from .fgio import read_fg, save_fg, to_dot, write_fg
from .order import strong_leq, weak_leq

OK, FALSE, ERROR = 0, 1, 2


def _positive(raw: str) -> int:
    value = int(raw)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {raw}")
    return value


def _say(args, text: str, data: dict) -> None:
    if args.format == "json":
        print(json.dumps(data, sort_keys=True))
    else:
        print(text)


def _budget(args) -> Budget:
    b = default_budget()
    if args.nodes is not None:
        b = b.with_nodes(args.nodes)
    if args.max_vertices is not None:
        b = replace(b, max_vertices=args.max_vertices)
    if args.max_order_edges is not None:
        b = replace(b, max_edges=args.max_order_edges)
    return b


def _emit_graph(g, args) -> int:
    if args.output:
        save_fg(g, args.output)
    elif args.format == "json":
        _say(args, "", {"graph": write_fg(g)})
    else:
        sys.stdout.write(write_fg(g))
    return OK


def cmd_nat(args):
    return _emit_graph(alg.nat(args.n), args)


def cmd_add(args):
    return _emit_graph(alg.plus(read_fg(args.a), read_fg(args.b)), args)


def cmd_mul(args):
    return _emit_graph(alg.times(read_fg(args.a), read_fg(args.b)), args)


def cmd_smul(args):
    return _emit_graph(alg.scalar_multiple(args.k, read_fg(args.a)), args)


def cmd_pow(args):
    return _emit_graph(alg.scalar_power(read_fg(args.a), args.k), args)


def cmd_iso(args):
    m = are_isomorphic(read_fg(args.a), read_fg(args.b), _budget(args))
    data: dict = {"isomorphic": m is not None}
    text = "isomorphic" if m is not None else "not isomorphic"
    if m is not None and args.witness:
        text += "\n" + m.as_text()
        data["vertex_map"] = [[a, b] for a, b in sorted(m.vertex.items())]
        data["edge_map"] = [[a, b] for a, b in sorted(m.edge.items())]
    _say(args, text, data)
    return OK if m is not None else FALSE


def cmd_classify(args):
    kind = classify(read_fg(args.a)).value
    _say(args, kind, {"kind": kind})
    return OK


def cmd_core(args):
    return _emit_graph(st_core(read_fg(args.a), _budget(args)), args)


def cmd_decompose(args):
    d = canonical_decomposition(read_fg(args.a))
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    paths = []
    for i, comp in enumerate(d):
        path = out / f"A_{i:03d}.fg"
        save_fg(comp, path)
        paths.append(str(path))
    _say(args, "\n".join(paths), {"components": paths})
    return OK


def cmd_split(args):
    left, right = split_at(read_fg(args.a), args.vertex)
    if args.format == "json":
        _say(args, "", {"s_side": write_fg(left), "t_side": write_fg(right)})
    else:
        sys.stdout.write("# s-side\n" + write_fg(left) + "# t-side\n" + write_fg(right))
    return OK


def cmd_order(args):
    a, b = read_fg(args.a), read_fg(args.b)
    w = strong_leq(a, b, _budget(args)) if args.strong else weak_leq(a, b, _budget(args))
    text = "true" if w is not None else "false"
    data: dict = {"holds": w is not None}
    if w is not None and args.witness:
        text += "\n" + w.as_text()
        data["witness"] = w.as_text()
    _say(args, text, data)
    return OK if w is not None else FALSE


def cmd_div(args):
    a, b = read_fg(args.a), read_fg(args.b)
    q = alg.left_divide(a, b, _budget(args)) if args.left else alg.right_divide(a, b, _budget(args))
    if q is None:
        _say(args, "# no quotient", {"graph": None})
        return FALSE
    return _emit_graph(q, args)


def cmd_prime(args):
    p = alg.is_prime(read_fg(args.a), _budget(args))
    _say(args, "prime" if p else "not prime", {"prime": p})
    return OK if p else FALSE


def cmd_enumerate(args):
    spec = UniverseSpec(max_edges=args.edges, max_vertices=args.max_vertices, st_only=args.st_only)
    chunks = [write_fg(g) for g in enumerate_flow_graphs(spec)]
    if args.format == "json":
        text = "".join(json.dumps({"index": i, "graph": c}) + "\n" for i, c in enumerate(chunks))
    else:
        text = "\n".join(chunks)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    print(f"# {len(chunks)} flow graphs", file=sys.stderr)
    return OK


def cmd_laws(args):
    spec = None if args.max_edges is None else UniverseSpec(max_edges=args.max_edges)
    reports = run_catalog(args.law or None, spec, jobs=args.jobs)
    lines = "".join(r.to_json(args.timing) + "\n" for r in reports)
    if args.format == "json":
        sys.stdout.write(lines)
    else:
        for r in reports:
            print(r.to_text(args.timing))
    if args.output:
        Path(args.output).write_text(lines)
    bad = [r for r in reports if not r.as_expected]
    return OK if not bad else FALSE


def cmd_export_dot(args):
    text = to_dot(read_fg(args.a))
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fga", description="Arithmetic on flow graphs.")
    p.add_argument("--nodes", type=_positive, help="search node budget (default: FGA_BUDGET_NODES or 1e6)")
    p.add_argument("--max-vertices", type=_positive, help="vertex bound for order decisions")
    p.add_argument("--max-order-edges", type=_positive, help="edge bound for order decisions")
    p.add_argument("--jobs", type=_positive, default=1, help="worker processes for laws")
    p.add_argument("--format", choices=("text", "json"), default="text", help="output format")
    sub = p.add_subparsers(dest="cmd", required=True)

    def add(name, fn, *graphs, output=True):
        sp = sub.add_parser(name)
        for g in graphs:
            sp.add_argument(g)
        if output:
            sp.add_argument("-o", "--output")
        sp.set_defaults(fn=fn)
        return sp

    add("nat", cmd_nat).add_argument("n", type=int)
    add("add", cmd_add, "a", "b")
    add("mul", cmd_mul, "a", "b")
    sp = sub.add_parser("smul")
    sp.add_argument("k", type=int)
    sp.add_argument("a")
    sp.add_argument("-o", "--output")
    sp.set_defaults(fn=cmd_smul)
    add("pow", cmd_pow, "a").add_argument("k", type=int)
    add("iso", cmd_iso, "a", "b", output=False).add_argument("--witness", action="store_true")
    add("classify", cmd_classify, "a", output=False)
    add("core", cmd_core, "a")
    add("decompose", cmd_decompose, "a", output=False).add_argument("--out-dir", required=True)
    add("split", cmd_split, "a", output=False).add_argument("--vertex", type=int, required=True)
    sp = sub.add_parser("order")
    mode = sp.add_mutually_exclusive_group(required=True)
    mode.add_argument("--weak", action="store_true")
    mode.add_argument("--strong", action="store_true")
    sp.add_argument("a")
    sp.add_argument("b")
    sp.add_argument("--witness", action="store_true")
    sp.set_defaults(fn=cmd_order)
    add("div", cmd_div, "a", "b").add_argument("--left", action="store_true")
    add("prime", cmd_prime, "a", output=False)
    sp = add("enumerate", cmd_enumerate)
    sp.add_argument("--edges", type=int, required=True)
    sp.add_argument("--st-only", action="store_true")
    sp = add("laws", cmd_laws)
    sp.add_argument("--law", action="append", help="law id (repeatable); default: whole catalog")
    sp.add_argument("--max-edges", type=int, help="override every law's universe")
    sp.add_argument("--timing", action="store_true", help="include elapsed seconds (output is then not reproducible)")
    add("export-dot", cmd_export_dot, "a")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return ERROR if exc.code else OK
    try:
        return args.fn(args)
    except (FlowGraphError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ERROR


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
