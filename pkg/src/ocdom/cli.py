"""Command-line interface: ``ocdom {compute,predict,product,verify,corpus,reproduce}``."""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import graph_core as gc
from .checks import CHECKS
from .harness import (
    CorpusSpec,
    Task,
    default_output_dir,
    reproduce_scenario,
    run_suite,
    run_tasks,
)
from .products import direct_power_complete, product
from .solvers import SOLVERS, BudgetExhausted, DominationCertificate, NoSolution, node_budget, solve_bnb
from .witnesses import PREDICTORS, Refused, direct_diagonal_prediction

log = logging.getLogger("ocdom")

KIND_CHOICES = ("gamma", "gamma-t", "gamma-oc")


def _read_graph(text: str) -> gc.Graph:
    """Inline graph6/JSON, or ``file:PATH`` for the first graph in a file.

    (``@`` is K1 in graph6, so it cannot serve as a file marker.)
    """
    if text.startswith("file:"):
        content = Path(text[5:]).read_text().strip()
        text = content if content.startswith("{") else content.splitlines()[0]
    return gc.load_graph(text)


def _orders(text: str) -> tuple[int, ...]:
    return tuple(int(x) for x in text.split(","))


def _emit(obj, fmt: str, out=None) -> None:
    out = out or sys.stdout
    if fmt == "jsonl":
        out.write(json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n")
    else:
        out.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")


def cmd_compute(args) -> int:
    G = _read_graph(args.graph)
    cert: DominationCertificate = SOLVERS[args.solver](G, args.kind, budget=args.budget)
    _emit(cert.to_json(), args.format)
    return 0


def cmd_predict(args) -> int:
    if args.theorem == "direct-diagonal":
        pred = direct_diagonal_prediction(_orders(args.orders))
    else:
        pred = PREDICTORS[args.theorem](_read_graph(args.G), _read_graph(args.H))
    out = pred.to_json()
    if args.exact:
        with node_budget(args.budget):
            out["exact"] = solve_bnb(pred.instance.product, "gamma-oc", budget=args.budget).to_json()
    _emit(out, args.format)
    return 0


def cmd_product(args) -> int:
    if args.kind == "direct" and args.orders:
        inst = direct_power_complete(_orders(args.orders))
    else:
        inst = product(args.kind, _read_graph(args.G), _read_graph(args.H))
    P = inst.product
    if args.index_map:
        Path(args.index_map).write_text(json.dumps(inst.index_map(), indent=1))
    if args.format == "graph6":
        sys.stdout.write(gc.g6(P) + "\n")
    elif args.format == "dot":
        sys.stdout.write(gc.to_dot(P, name=inst.kind.replace("-", "_")))
    else:
        _emit({"kind": inst.kind, "graph": gc.to_json_obj(P), "index_map": inst.index_map()}, args.format)
    return 0


def cmd_verify(args) -> int:
    checks = list(CHECKS) if "all" in args.check else args.check
    out_path = Path(args.out) if args.out else None
    direct_orders = [_orders(o) for o in args.orders]
    if args.instance:
        tasks = []
        for cid in checks:
            arity = CHECKS[cid][0]
            if arity == 0:
                tasks += [Task(cid, (o,)) for o in direct_orders]
                continue
            for inst in args.instance:
                parts = inst.split(",")
                if len(parts) == arity:
                    tasks.append(Task(cid, tuple(gc.g6(_read_graph(p)) for p in parts)))
        report, lines = run_tasks(tasks, {"inline": sorted(t.key for t in tasks), "budget": args.budget},
                                  out_path, args.jobs, args.budget)
    else:
        if args.file:
            corpus = CorpusSpec(mode="file", path=args.file, seed=args.seed)
        elif args.random:
            n, count, p = args.random
            corpus = CorpusSpec(mode="random", n=int(n), count=int(count), edge_prob=float(p), seed=args.seed)
        else:
            corpus = CorpusSpec(mode="exhaustive", max_n=args.exhaustive, seed=args.seed)
        report, lines = run_suite(corpus, checks, args.budget, out_path, args.jobs, args.cap,
                                  args.sample_above_cap, direct_orders)
    if out_path is None:
        for line in lines:
            sys.stdout.write(line + "\n")
    for line in report.summary_lines():
        log.info(line)
    return 0


def cmd_corpus(args) -> int:
    if args.random:
        n, count, p = args.random
        graphs = CorpusSpec(mode="random", n=int(n), count=int(count), edge_prob=float(p), seed=args.seed).graphs()
    else:
        graphs = CorpusSpec(mode="exhaustive", max_n=args.exhaustive).graphs()
    for G in graphs:
        if args.format == "graph6":
            sys.stdout.write(gc.g6(G) + "\n")
        else:
            _emit(gc.to_json_obj(G), "jsonl")
    return 0


def cmd_reproduce(args) -> int:
    out_dir = Path(args.out_dir) if args.out_dir else default_output_dir()
    report, _ = reproduce_scenario(out_dir, jobs=args.jobs, budget=args.budget)
    for line in report.summary_lines():
        print(line)
    print(f"records: {out_dir / 'reproduce.jsonl'}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    # default resolved per command (graph6 for corpus, json elsewhere); the action is shared
    common.add_argument("--format", choices=("json", "jsonl", "dot", "graph6"), default=None)
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--budget", type=int, default=None, help="node budget per exact solve")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="ocdom", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", parents=[common], help="exact gamma / gamma_t / outer-connected value")
    p.add_argument("--kind", choices=KIND_CHOICES, required=True)
    p.add_argument("--solver", choices=tuple(SOLVERS), default="bnb")
    p.add_argument("--graph", required=True, help="graph6, JSON object, or file:PATH")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("predict", parents=[common], help="constructed witness for a product")
    p.add_argument("--theorem", choices=(*PREDICTORS, "direct-diagonal"), required=True)
    p.add_argument("--G")
    p.add_argument("--H")
    p.add_argument("--orders", help="comma-separated complete-graph orders for direct-diagonal")
    p.add_argument("--exact", action="store_true", help="also solve the product exactly")
    p.set_defaults(func=cmd_predict)

    p = sub.add_parser("product", parents=[common], help="build a product graph")
    p.add_argument("--kind", choices=("cartesian", "lex", "corona", "direct"), required=True)
    p.add_argument("--G")
    p.add_argument("--H")
    p.add_argument("--orders", help="direct power of complete graphs, e.g. 4,4,4")
    p.add_argument("--index-map", help="write the id -> coordinates map as JSON here")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("verify", parents=[common], help="run checks, one JSONL record per instance")
    p.add_argument("--check", action="append", required=True, choices=(*CHECKS, "all"))
    p.add_argument("--instance", action="append", default=[],
                   help="comma-separated graph6 factors, e.g. 'Bw,A_'")
    p.add_argument("--orders", action="append", default=[], help="orders for direct checks, e.g. 4,4,4")
    p.add_argument("--exhaustive", type=int, default=3, help="labeled connected corpus up to this order")
    p.add_argument("--file", help="graph6 corpus file")
    p.add_argument("--random", nargs=3, metavar=("N", "COUNT", "P"))
    p.add_argument("--cap", type=int, default=20, help="product-order cap for sweeps")
    p.add_argument("--sample-above-cap", type=int, default=0)
    p.add_argument("--out", help="JSONL output path (resumable); stdout if omitted")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("corpus", parents=[common], help="emit a graph corpus")
    p.add_argument("--exhaustive", type=int, default=4)
    p.add_argument("--random", nargs=3, metavar=("N", "COUNT", "P"))
    p.set_defaults(func=cmd_corpus, default_format="graph6")

    p = sub.add_parser("reproduce", parents=[common], help="run the bundled verification scenario")
    p.add_argument("--out-dir", help="defaults to $OCDOM_OUTPUT_DIR or ./runs")
    p.set_defaults(func=cmd_reproduce)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.format is None:
        args.format = getattr(args, "default_format", "json")
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except (gc.GraphError, Refused, NoSolution, BudgetExhausted, ValueError) as exc:
        print(f"ocdom: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"ocdom: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
