"""Corpus generation, suite orchestration and JSONL persistence."""
from __future__ import annotations

import hashlib
import itertools
import json
import logging
import os
import random
import time
from collections import Counter, defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, Sequence

from .checks import CHECKS, DISCREPANCY, VERDICTS, VerificationRecord, instance_key, run_check
from .graph_core import Graph, from_adjacency_rows, g6, is_connected_mask, parse_graph6
from .products import complete, cycle, path

log = logging.getLogger(__name__)

OUTPUT_DIR_ENV = "OCDOM_OUTPUT_DIR"
DEFAULT_CAP = 20


def default_output_dir() -> Path:
    return Path(os.environ.get(OUTPUT_DIR_ENV, "runs"))


# --- corpora ---------------------------------------------------------------------


def enumerate_labeled(n: int, connected_only: bool = False) -> Iterator[Graph]:
    """All labeled graphs on {0..n-1} in ascending edge-mask order.

    Bit i of the edge mask is the i-th pair of ``itertools.combinations(range(n), 2)``.
    """
    pairs = list(itertools.combinations(range(n), 2))
    full = (1 << n) - 1
    for mask in range(1 << len(pairs)):
        rows = [0] * n
        for i, (u, v) in enumerate(pairs):
            if mask >> i & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        if connected_only and n > 0 and not is_connected_mask(rows, full):
            continue
        yield from_adjacency_rows(rows)


def enumerate_labeled_connected(max_n: int, min_n: int = 1) -> Iterator[Graph]:
    if not 1 <= max_n <= 6:
        raise ValueError(f"max_n must lie in 1..6, got {max_n}")
    for n in range(min_n, max_n + 1):
        yield from enumerate_labeled(n, connected_only=True)


@dataclass(frozen=True)
class CorpusSpec:
    mode: str = "exhaustive"  # exhaustive | random | file
    max_n: int = 4
    min_n: int = 1
    n: int = 6
    count: int = 0
    edge_prob: float = 0.5
    seed: int = 0
    path: str | None = None
    connected_only: bool = True

    def graphs(self) -> list[Graph]:
        if self.mode == "exhaustive":
            return list(enumerate_labeled_connected(self.max_n, self.min_n))
        if self.mode == "random":
            from .products import random_connected

            return [random_connected(self.n, self.edge_prob, self.seed + i) for i in range(self.count)]
        if self.mode == "file":
            out = []
            for line in Path(self.path).read_text().splitlines():
                line = line.strip()
                if line and not line.startswith("#"):
                    G = parse_graph6(line)
                    if not self.connected_only or is_connected_mask(G.adj, G.full_mask):
                        out.append(G)
            return out
        raise ValueError(f"unknown corpus mode {self.mode!r}")


# --- tasks and persistence ----------------------------------------------------------


@dataclass(frozen=True)
class Task:
    check_id: str
    args: tuple  # graph6 strings, or a single tuple of orders for direct checks

    @property
    def instance(self) -> dict:
        arity = CHECKS[self.check_id][0]
        if arity == 0:
            return {"orders": list(self.args[0])}
        return dict(zip(("G", "H", "K"), self.args))

    @property
    def key(self) -> str:
        return instance_key(self.check_id, self.instance)


def _execute(payload) -> tuple[str, str, float]:
    task, budget, inner_jobs = payload
    t0 = time.perf_counter()
    if CHECKS[task.check_id][0] == 0:
        rec = run_check(task.check_id, tuple(task.args[0]), budget=budget, jobs=inner_jobs)
    else:
        rec = run_check(task.check_id, *(parse_graph6(a) for a in task.args), budget=budget)
    return rec.key, rec.dumps(), time.perf_counter() - t0


@dataclass
class RunReport:
    config_digest: str
    counts: dict = field(default_factory=dict)
    instances: dict = field(default_factory=dict)
    discrepancies: list = field(default_factory=list)
    critical: list = field(default_factory=list)
    wall_time: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return asdict(self)

    def summary_lines(self) -> list[str]:
        lines = []
        for cid in sorted(self.counts):
            c = self.counts[cid]
            parts = ", ".join(f"{v}={c.get(v, 0)}" for v in VERDICTS)
            lines.append(f"{cid:18s} n={self.instances[cid]:6d}  {parts}")
        lines.append(f"critical: {len(self.critical)}")
        return lines


def config_digest(config: dict) -> str:
    return hashlib.sha256(json.dumps(config, sort_keys=True).encode()).hexdigest()[:16]


def load_records(path: Path) -> dict[str, str]:
    """Map instance key -> JSONL line for every complete line in ``path``."""
    out: dict[str, str] = {}
    if not path.exists():
        return out
    for line in path.read_text().splitlines():
        try:
            obj = json.loads(line)
        except json.JSONDecodeError:
            continue  # truncated tail of an interrupted run
        out[obj["key"]] = line
    return out


def run_tasks(tasks: Sequence[Task], config: dict, out_path: Path | None = None, jobs: int = 1,
              budget: int | None = None) -> tuple[RunReport, list[str]]:
    """Execute tasks, persisting one JSONL record per task ordered by instance key.

    Records already present in ``out_path`` are reused (resume). The file is
    rewritten sorted by key at the end so its bytes do not depend on ``jobs``
    or on completion order.
    """
    unique = {t.key: t for t in tasks}
    done = load_records(out_path) if out_path else {}
    done = {k: v for k, v in done.items() if k in unique}
    pending = [unique[k] for k in sorted(unique) if k not in done]
    timings: dict[str, float] = defaultdict(float)
    fh = None
    if out_path:
        out_path.parent.mkdir(parents=True, exist_ok=True)
        # drop a partial trailing line before appending
        if out_path.exists():
            out_path.write_text("".join(line + "\n" for line in done.values()))
        fh = out_path.open("a")
    try:
        # direct scans parallelize internally; everything else parallelizes across tasks
        heavy = [t for t in pending if CHECKS[t.check_id][0] == 0]
        light = [t for t in pending if CHECKS[t.check_id][0] != 0]
        pool = ProcessPoolExecutor(max_workers=jobs) if jobs > 1 and light else None
        try:
            results = itertools.chain(
                (_execute((t, budget, jobs)) for t in heavy),
                pool.map(_execute, [(t, budget, 1) for t in light],
                         chunksize=max(1, len(light) // (jobs * 16))) if pool
                else (_execute((t, budget, 1)) for t in light),
            )
            for key, line, dt in results:
                done[key] = line
                timings[json.loads(key)[0]] += dt
                if fh:
                    fh.write(line + "\n")
                    fh.flush()
        finally:
            if pool:
                pool.shutdown()
    finally:
        if fh:
            fh.close()
    lines = [done[k] for k in sorted(done)]
    if out_path:
        tmp = out_path.with_suffix(".tmp")
        tmp.write_text("".join(line + "\n" for line in lines))
        tmp.replace(out_path)
    return build_report(lines, config, timings), lines


def build_report(lines: Iterable[str], config: dict, timings: dict | None = None) -> RunReport:
    report = RunReport(config_digest(config))
    counts: dict[str, Counter] = defaultdict(Counter)
    for line in lines:
        rec = VerificationRecord.from_json(json.loads(line))
        counts[rec.check_id][rec.verdict] += 1
        if rec.verdict == DISCREPANCY:
            report.discrepancies.append({"key": rec.key, "classification": rec.classification,
                                         "critical": rec.critical, "values": rec.values})
        if rec.critical:
            report.critical.append(rec.to_json())
    report.counts = {cid: {v: c.get(v, 0) for v in VERDICTS} for cid, c in sorted(counts.items())}
    report.instances = {cid: sum(c.values()) for cid, c in report.counts.items()}
    report.wall_time = {k: round(v, 4) for k, v in sorted((timings or {}).items())}
    return report


# --- suites -----------------------------------------------------------------------------


def _product_order(check_id: str, *graphs: Graph) -> int:
    if check_id in ("thm6-corona", "cor-corona-size"):
        return graphs[0].n * (1 + graphs[1].n)
    if check_id == "vizing-equivalent":
        return graphs[0].n * graphs[1].n * graphs[2].n
    out = 1
    for G in graphs:
        out *= G.n
    return out


def suite_tasks(graphs: Sequence[Graph], checks: Sequence[str], cap: int = DEFAULT_CAP,
                sample_above_cap: int = 0, seed: int = 0,
                direct_orders: Sequence[Sequence[int]] = ()) -> list[Task]:
    """Instances for each check: every graph, every ordered pair, or every triple.

    Tuples whose product order exceeds ``cap`` are dropped except for a seeded
    sample of ``sample_above_cap`` of them per check.
    """
    tasks: list[Task] = []
    names = {G: g6(G) for G in graphs}
    for cid in checks:
        arity = CHECKS[cid][0]
        if arity == 0:
            tasks += [Task(cid, (tuple(o),)) for o in direct_orders]
            continue
        within, above = [], []
        for combo in itertools.product(graphs, repeat=arity):
            (within if _product_order(cid, *combo) <= cap else above).append(combo)
        if sample_above_cap and above:
            rng = random.Random(f"{seed}:{cid}")
            within += rng.sample(above, min(sample_above_cap, len(above)))
        tasks += [Task(cid, tuple(names[G] for G in combo)) for combo in within]
    return tasks


def run_suite(corpus: CorpusSpec, checks: Sequence[str], budget: int | None = None,
              out_path: Path | None = None, jobs: int = 1, cap: int = DEFAULT_CAP,
              sample_above_cap: int = 0, direct_orders: Sequence[Sequence[int]] = ()):
    if "all" in checks:
        checks = list(CHECKS)
    unknown = [c for c in checks if c not in CHECKS]
    if unknown:
        raise ValueError(f"unknown checks {unknown}")
    graphs = corpus.graphs()
    config = {"corpus": asdict(corpus), "checks": sorted(checks), "budget": budget, "cap": cap,
              "sample_above_cap": sample_above_cap, "direct_orders": [list(o) for o in direct_orders]}
    tasks = suite_tasks(graphs, checks, cap, sample_above_cap, corpus.seed, direct_orders)
    return run_tasks(tasks, config, out_path, jobs, budget)


# --- the bundled reproduction scenario ------------------------------------------------------

REPRO_SEED = 20140317


def reproduction_tasks(sample_n5: int = 40) -> list[Task]:
    """Fixed task list covering every checked statement.

    - The n - min-degree bound on all labeled connected graphs with n <= 6.
    - Lexicographic checks on ordered connected pairs with n <= 4, plus a
      seeded sample of pairs with a 5-vertex factor.
    - K1-factor identities with every connected graph with n <= 5 on either side.
    - Corona checks for connected G with |V(G)| <= 4 and every H with |V(H)| <= 3,
      plus K3 and K1 each with P4.
    - Cartesian checks on ordered connected pairs with n <= 4.
    - Direct-power checks for (2,2,2), (4,4,4), (5,4,4).
    - Vizing-equivalent triples from {P4, C4, C5}^2 x {K1, K2, K3}.
    """
    conn4 = list(enumerate_labeled_connected(4))
    conn5 = list(enumerate_labeled_connected(5, min_n=5))
    names4 = [g6(G) for G in conn4]
    tasks = [Task("thm1-bound", (g6(G),)) for G in enumerate_labeled_connected(6)]

    lex_checks = ("thm5", "lem1-bound", "lem-th2", "lem-th4")
    pairs = list(itertools.product(names4, repeat=2))
    rng = random.Random(REPRO_SEED)
    n5 = [g6(G) for G in conn5]
    extra = sorted({(rng.choice(n5), rng.choice(names4 + n5)) for _ in range(sample_n5)})
    extra += [(b, a) for a, b in extra]
    for cid in lex_checks:
        tasks += [Task(cid, p) for p in pairs + extra]

    k1 = g6(complete(1))
    for G in itertools.chain(conn4, conn5):
        tasks += [Task("lem-k1", (g6(G), k1)), Task("lem-k1", (k1, g6(G)))]

    small_h = [g6(H) for n in (1, 2, 3) for H in enumerate_labeled(n)]
    for G in names4:
        for H in small_h:
            tasks += [Task("thm6-corona", (G, H)), Task("cor-corona-size", (G, H))]

    # named corona instances with a 4-vertex H: the printed-form mismatch and the order-1 G case
    for G, H in ((complete(3), path(4)), (complete(1), path(4))):
        tasks += [Task("thm6-corona", (g6(G), g6(H))), Task("cor-corona-size", (g6(G), g6(H)))]

    for p in pairs:
        tasks += [Task("thm-cart-bound", p), Task("claim1-validity", p)]

    for orders in ((2, 2, 2), (4, 4, 4), (5, 4, 4)):
        tasks += [Task("cor-direct-lb", (orders,)), Task("thm-direct-sharp", (orders,))]

    base = [g6(path(4)), g6(cycle(4)), g6(cycle(5))]
    ks = [g6(complete(k)) for k in (1, 2, 3)]
    tasks += [Task("vizing-equivalent", (a, b, k)) for a in base for b in base for k in ks]
    return list({t.key: t for t in tasks}.values())


def reproduce_scenario(out_dir: Path | None = None, jobs: int = 1, budget: int | None = None):
    tasks = reproduction_tasks()
    config = {"scenario": "reproduce", "seed": REPRO_SEED, "budget": budget, "tasks": len(tasks)}
    out_path = None if out_dir is None else Path(out_dir) / "reproduce.jsonl"
    report, lines = run_tasks(tasks, config, out_path, jobs, budget)
    if out_dir is not None:
        (Path(out_dir) / "reproduce_report.json").write_text(json.dumps(report.to_json(), indent=2, sort_keys=True))
    return report, lines
