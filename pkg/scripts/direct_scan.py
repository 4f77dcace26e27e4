"""Exhaustive small-set scan on a direct power of complete graphs.

Proves the lower bound (no outer-connected dominating set of size <= t) and
checks the diagonal set when n_i >= t + 1.

    python scripts/direct_scan.py 4 4 4 --jobs 8
"""
from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from ocdom.products import direct_power_complete
from ocdom.solvers import OUTER_CONNECTED, is_outer_connected_dominating, scan_up_to
from ocdom.witnesses import diagonal_preconditions, direct_diagonal_prediction


@dataclass
class ScanConfig:
    orders: tuple[int, ...]
    jobs: int = 1
    max_size: int | None = None  # defaults to t


def run(cfg: ScanConfig) -> dict:
    t = len(cfg.orders)
    G = direct_power_complete(cfg.orders).product
    t0 = time.perf_counter()
    hit, checked = scan_up_to(G, OUTER_CONNECTED, cfg.max_size or t, jobs=cfg.jobs)
    out = {"orders": list(cfg.orders), "vertices": G.n, "degree": G.degree(0), "checked": checked,
           "smallest_hit": None if hit is None else hit.ids(), "scan_seconds": round(time.perf_counter() - t0, 2)}
    if all(diagonal_preconditions(cfg.orders).values()):
        pred = direct_diagonal_prediction(cfg.orders)
        out["diagonal"] = pred.witness.ids()
        out["diagonal_valid"] = is_outer_connected_dominating(G, pred.witness)
    return out


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("orders", type=int, nargs="+")
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--max-size", type=int, default=None)
    a = ap.parse_args(argv)
    res = run(ScanConfig(tuple(a.orders), a.jobs, a.max_size))
    for k, v in res.items():
        print(f"{k:14s} {v}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
