"""Validity oracles and exact solvers for domination, total domination and
outer-connected domination.

Two solvers return the same certificate: :func:`solve_exact` scans subsets by
cardinality in lexicographic order, :func:`solve_bnb` finds the optimum with a
branch-and-bound over closed neighborhoods and then re-searches at that size
in lexicographic order. The witness is always the lexicographically least
minimum valid set (ascending-id tuples).
"""
from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from contextlib import contextmanager
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable

from .graph_core import (
    Graph,
    GraphError,
    VertexSet,
    component_of,
    components_mask,
    is_connected_mask,
    iter_bits,
)

DOMINATION = "domination"
TOTAL = "total-domination"
OUTER_CONNECTED = "outer-connected-domination"
KINDS = (DOMINATION, TOTAL, OUTER_CONNECTED)

_ALIASES = {
    "gamma": DOMINATION,
    "gamma-t": TOTAL,
    "gamma-oc": OUTER_CONNECTED,
    "dom": DOMINATION,
    "total": TOTAL,
    "ocd": OUTER_CONNECTED,
}


class BudgetExhausted(RuntimeError):
    def __init__(self, nodes: int):
        super().__init__(f"node budget exhausted after {nodes} nodes")
        self.nodes = nodes


class NoSolution(GraphError):
    """Raised when the requested set cannot exist (total domination with an isolated vertex)."""


def canonical_kind(kind: str) -> str:
    kind = _ALIASES.get(kind, kind)
    if kind not in KINDS:
        raise ValueError(f"unknown domination kind {kind!r}")
    return kind


@dataclass(frozen=True)
class DominationCertificate:
    kind: str
    value: int
    witness: VertexSet
    solver: str
    nodes_expanded: int = 0

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "value": self.value,
            "witness": self.witness.ids(),
            "solver": self.solver,
            "nodes_expanded": self.nodes_expanded,
        }


# --- oracles -----------------------------------------------------------------


def _bits(S: VertexSet | int | Iterable[int]) -> int:
    if isinstance(S, VertexSet):
        return S.bits
    if isinstance(S, int):
        return S
    m = 0
    for v in S:
        m |= 1 << v
    return m


def _closed_cover(G: Graph, s: int) -> int:
    cov = s
    for v in iter_bits(s):
        cov |= G.adj[v]
    return cov


def _open_cover(G: Graph, s: int) -> int:
    cov = 0
    for v in iter_bits(s):
        cov |= G.adj[v]
    return cov


def is_dominating(G: Graph, S) -> bool:
    full = G.full_mask
    return _closed_cover(G, _bits(S)) & full == full


def is_total_dominating(G: Graph, S) -> bool:
    full = G.full_mask
    return _open_cover(G, _bits(S)) & full == full


def is_outer_connected_dominating(G: Graph, S) -> bool:
    s = _bits(S)
    return is_dominating(G, s) and is_connected_mask(G.adj, G.full_mask & ~s)


def is_valid(G: Graph, S, kind: str) -> bool:
    kind = canonical_kind(kind)
    if kind == DOMINATION:
        return is_dominating(G, S)
    if kind == TOTAL:
        return is_total_dominating(G, S)
    return is_outer_connected_dominating(G, S)


def _check_pre(G: Graph, kind: str) -> None:
    if kind == TOTAL and any(a == 0 for a in G.adj):
        raise NoSolution("total domination is undefined on a graph with an isolated vertex")


# --- baseline -----------------------------------------------------------------


def solve_exact(G: Graph, kind: str, budget: int | None = None) -> DominationCertificate:
    """Scan k = 0, 1, ... and, within k, ascending-id tuples; the first valid set wins."""
    kind = canonical_kind(kind)
    _check_pre(G, kind)
    nodes = 0
    for k in range(G.n + 1):
        for combo in itertools.combinations(range(G.n), k):
            nodes += 1
            if budget is not None and nodes > budget:
                raise BudgetExhausted(nodes)
            if is_valid(G, combo, kind):
                return DominationCertificate(kind, k, VertexSet.from_ids(combo, G.n), "baseline", nodes)
    raise AssertionError("unreachable: V(G) is always valid")  # pragma: no cover


# --- branch and bound -----------------------------------------------------------


class _Search:
    def __init__(self, G: Graph, kind: str, budget: int | None):
        self.G = G
        self.kind = kind
        self.n = G.n
        self.full = G.full_mask
        self.adj = G.adj
        # cover[u]: vertices that u dominates; symmetric, so also the coverers of u
        if kind == TOTAL:
            self.cover = tuple(G.adj)
        else:
            self.cover = G.closed_rows()
        self.ocd = kind == OUTER_CONNECTED
        self.max_cover = max((c.bit_count() for c in self.cover), default=1) or 1
        self.budget = budget
        self.nodes = 0
        # highest-id coverer of each vertex
        self.top_coverer = tuple(c.bit_length() - 1 for c in self.cover)
        suffix = [0] * (self.n + 1)
        for u in range(self.n - 1, -1, -1):
            suffix[u] = max(suffix[u + 1], self.cover[u].bit_count())
        self.suffix_max_cover = suffix

    def _tick(self) -> None:
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise BudgetExhausted(self.nodes)

    def _forbidden_split(self, D: int, F: int) -> bool:
        """True if the vertices in F cannot all end up in one complement component."""
        if F & (F - 1) == 0:
            return False
        comp = component_of(self.adj, self.full & ~D, (F & -F).bit_length() - 1)
        return bool(F & ~comp)

    # phase 1: optimum value

    def optimum(self) -> int:
        self.best = self.n + 1
        self._branch(0, 0, 0, 0)
        return self.best

    def _leaf_cost(self, D: int, size: int, F: int) -> int:
        if not self.ocd:
            return size
        comps = components_mask(self.adj, self.full & ~D)
        if len(comps) <= 1:
            return size
        # the complement of any OCD extending D lies inside one component holding all of F
        keep = max((c.bit_count() for c in comps if F & ~c == 0), default=0)
        return self.n - keep

    def _branch(self, D: int, size: int, covered: int, F: int) -> None:
        self._tick()
        unc = self.full & ~covered
        if not unc:
            cost = self._leaf_cost(D, size, F)
            if cost < self.best:
                self.best = cost
            return
        if size + -(-unc.bit_count() // self.max_cover) >= self.best:
            return
        if self.ocd and self._forbidden_split(D, F):
            return
        pick, pick_opts, fewest = -1, 0, self.n + 1
        for v in iter_bits(unc):
            opts = self.cover[v] & ~F
            c = opts.bit_count()
            if c < fewest:
                pick, pick_opts, fewest = v, opts, c
                if c <= 1:
                    break
        if not pick_opts:
            return
        for u in iter_bits(pick_opts):
            self._branch(D | 1 << u, size + 1, covered | self.cover[u], F)
            F |= 1 << u

    # phase 2: lexicographically least set of a given size

    def lex_least(self, k: int) -> int | None:
        return self._lex(k, 0, 0, 0)

    def _lex(self, remaining: int, start: int, D: int, covered: int) -> int | None:
        self._tick()
        unc = self.full & ~covered
        if remaining == 0:
            if unc:
                return None
            if self.ocd and not is_connected_mask(self.adj, self.full & ~D):
                return None
            return D
        limit = self.n - remaining
        if unc:
            if unc.bit_count() > remaining * self.suffix_max_cover[start]:
                return None
            for v in iter_bits(unc):
                t = self.top_coverer[v]
                if t < limit:
                    limit = t
        if self.ocd:
            excluded = ((1 << start) - 1) & ~D
            if self._forbidden_split(D, excluded):
                return None
        for c in range(start, limit + 1):
            found = self._lex(remaining - 1, c + 1, D | 1 << c, covered | self.cover[c])
            if found is not None:
                return found
        return None


def solve_bnb(G: Graph, kind: str, budget: int | None = None) -> DominationCertificate:
    kind = canonical_kind(kind)
    _check_pre(G, kind)
    s = _Search(G, kind, budget)
    k = s.optimum()
    D = s.lex_least(k)
    if D is None:  # pragma: no cover - guarded by phase 1
        raise AssertionError(f"no {kind} set of optimum size {k}")
    return DominationCertificate(kind, k, VertexSet(D, G.n), "branch-and-bound", s.nodes)


def lex_least_of_size(G: Graph, kind: str, k: int, budget: int | None = None) -> tuple[VertexSet | None, int]:
    """Lexicographically least valid set of exactly ``k`` vertices, or None."""
    kind = canonical_kind(kind)
    s = _Search(G, kind, budget)
    D = s.lex_least(k)
    return (None if D is None else VertexSet(D, G.n)), s.nodes


SOLVERS = {"baseline": solve_exact, "bnb": solve_bnb}


_budget: int | None = None


@contextmanager
def node_budget(budget: int | None):
    """Apply a per-solve node budget to :func:`certificate` within the block."""
    global _budget
    prev, _budget = _budget, budget
    try:
        yield
    finally:
        _budget = prev


def certificate(G: Graph, kind: str) -> DominationCertificate:
    """Memoized branch-and-bound certificate."""
    return _cached_certificate(G, canonical_kind(kind))


@lru_cache(maxsize=200_000)
def _cached_certificate(G: Graph, kind: str) -> DominationCertificate:
    return solve_bnb(G, kind, budget=_budget)


def gamma(G: Graph) -> int:
    return certificate(G, DOMINATION).value


def gamma_t(G: Graph) -> int:
    return certificate(G, TOTAL).value


def gamma_oc(G: Graph) -> int:
    return certificate(G, OUTER_CONNECTED).value


# --- exhaustive small-size scan ---------------------------------------------------


def _scan_chunk(args) -> tuple[tuple[int, ...] | None, int]:
    rows, kind, size, leads = args
    G = Graph(len(rows), tuple(rows), 0)
    n = G.n
    checked = 0
    for lead in leads:
        for rest in itertools.combinations(range(lead + 1, n), size - 1):
            combo = (lead,) + rest
            checked += 1
            if is_valid(G, combo, kind):
                return combo, checked
    return None, checked


def scan_up_to(G: Graph, kind: str, max_size: int, jobs: int = 1) -> tuple[VertexSet | None, int]:
    """Check every subset of size <= max_size in lexicographic order.

    Returns the first valid subset (smallest size, then lex-least) and the
    number of subsets examined. Each size is split into contiguous ranges of
    leading vertex; with ``jobs > 1`` the ranges run in worker processes and
    the least hit across ranges is kept, so the result does not depend on
    ``jobs``. When a hit occurs the count covers the whole size class.
    """
    kind = canonical_kind(kind)
    if is_valid(G, 0, kind):
        return VertexSet(0, G.n), 1
    total = 1
    for size in range(1, max_size + 1):
        leads = list(range(G.n - size + 1))
        if not leads:
            break
        chunks = _contiguous(leads, jobs * 4) if jobs > 1 else [leads]
        tasks = [(G.adj, kind, size, c) for c in chunks]
        if jobs > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                results = list(pool.map(_scan_chunk, tasks))
        else:
            results = [_scan_chunk(t) for t in tasks]
        hits = [r[0] for r in results if r[0] is not None]
        if hits:
            return VertexSet.from_ids(min(hits), G.n), total + comb(G.n, size)
        total += sum(r[1] for r in results)
    return None, total


def _contiguous(items: list, parts: int) -> list[list]:
    q, r = divmod(len(items), parts)
    out, i = [], 0
    for p in range(parts):
        step = q + (1 if p < r else 0)
        out.append(items[i:i + step])
        i += step
    return [c for c in out if c]
