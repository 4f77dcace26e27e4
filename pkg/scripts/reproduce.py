"""Run the bundled verification scenario and print the per-check summary.

    python scripts/reproduce.py --out-dir runs/repro --jobs 4
"""
from __future__ import annotations

import argparse
import json
import time
from dataclasses import asdict, dataclass
from pathlib import Path

from ocdom.harness import default_output_dir, reproduce_scenario


@dataclass
class ReproConfig:
    out_dir: str
    jobs: int = 1
    budget: int | None = None


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--out-dir", default=str(default_output_dir()))
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--budget", type=int, default=None)
    cfg = ReproConfig(**vars(ap.parse_args(argv)))

    t0 = time.perf_counter()
    report, _ = reproduce_scenario(Path(cfg.out_dir), jobs=cfg.jobs, budget=cfg.budget)
    print(json.dumps(asdict(cfg)))
    for line in report.summary_lines():
        print(line)
    by_class: dict = {}
    for d in report.discrepancies:
        k = (d["key"].split('"')[1], d["classification"])
        by_class[k] = by_class.get(k, 0) + 1
    for (cid, cls), n in sorted(by_class.items(), key=lambda kv: (kv[0][0], str(kv[0][1]))):
        print(f"discrepancy {cid:18s} {cls or 'unclassified':24s} {n}")
    print(f"wall {time.perf_counter() - t0:.1f}s -> {cfg.out_dir}/reproduce.jsonl")
    return 1 if report.critical else 0


if __name__ == "__main__":
    raise SystemExit(main())
