"""Graph products with explicit coordinate <-> id maps, and graph families.

All binary products use G-major (row-major) ids ``u * |V(H)| + v``. The
corona keeps G's vertices at ``0..|V(G)|-1`` and places the copy of H
attached to G-vertex ``x`` at ``|V(G)| + x * |V(H)| + v``.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from math import prod
from typing import Sequence

from .graph_core import Graph, GraphError, build_graph, components_mask, from_adjacency_rows, is_connected

KINDS = ("cartesian", "lexicographic", "corona", "direct")


def pair_index(u: int, v: int, h_order: int, g_order: int | None = None) -> int:
    if not 0 <= v < h_order or u < 0 or (g_order is not None and u >= g_order):
        raise GraphError(f"coordinate ({u}, {v}) out of range")
    return u * h_order + v


def unpair(idx: int, h_order: int) -> tuple[int, int]:
    if idx < 0 or h_order <= 0:
        raise GraphError(f"id {idx} out of range")
    return divmod(idx, h_order)


@dataclass(frozen=True)
class ProductInstance:
    kind: str
    factors: tuple
    product: Graph

    @property
    def g_order(self) -> int:
        return self.factors[0].n if self.kind != "direct-power" else 0

    @property
    def h_order(self) -> int:
        return self.factors[1].n if self.kind != "direct-power" else 0

    def vertex_id(self, *coords: int) -> int:
        """Product id of a coordinate tuple.

        For the corona, ``vertex_id(x)`` is G-vertex x and ``vertex_id(x, v)``
        is vertex v of the copy attached to x.
        """
        if self.kind == "direct-power":
            return mixed_radix_id(coords, self.factors)
        if self.kind == "corona":
            g, h = self.g_order, self.h_order
            if len(coords) == 1:
                if not 0 <= coords[0] < g:
                    raise GraphError(f"G-vertex {coords[0]} out of range")
                return coords[0]
            return g + pair_index(coords[0], coords[1], h, g)
        return pair_index(coords[0], coords[1], self.h_order, self.g_order)

    def coords(self, idx: int) -> tuple:
        if self.kind == "direct-power":
            return mixed_radix_coords(idx, self.factors)
        if self.kind == "corona":
            g = self.g_order
            if idx < g:
                return (idx,)
            return unpair(idx - g, self.h_order)
        return unpair(idx, self.h_order)

    def index_map(self) -> dict[int, list[int]]:
        return {i: list(self.coords(i)) for i in range(self.product.n)}


def _binary(kind: str, G: Graph, H: Graph, rule) -> ProductInstance:
    if G.n < 1 or H.n < 1:
        raise GraphError(f"{kind} product needs nonempty factors")
    h = H.n
    rows = [0] * (G.n * h)
    for u1, u2 in itertools.product(range(G.n), range(h)):
        a = u1 * h + u2
        row = 0
        for v1, v2 in itertools.product(range(G.n), range(h)):
            if rule(u1, u2, v1, v2):
                row |= 1 << (v1 * h + v2)
        rows[a] = row
    return ProductInstance(kind, (G, H), from_adjacency_rows(rows))


def lexicographic(G: Graph, H: Graph) -> ProductInstance:
    return _binary(
        "lexicographic", G, H,
        lambda u1, u2, v1, v2: G.has_edge(u1, v1) or (u1 == v1 and H.has_edge(u2, v2)),
    )


def cartesian(G: Graph, H: Graph) -> ProductInstance:
    return _binary(
        "cartesian", G, H,
        lambda u1, u2, v1, v2: (G.has_edge(u1, v1) and u2 == v2) or (u1 == v1 and H.has_edge(u2, v2)),
    )


def direct(G: Graph, H: Graph) -> ProductInstance:
    return _binary("direct", G, H, lambda u1, u2, v1, v2: G.has_edge(u1, v1) and H.has_edge(u2, v2))


def corona(G: Graph, H: Graph) -> ProductInstance:
    if G.n < 1 or H.n < 1:
        raise GraphError("corona product needs nonempty factors")
    g, h = G.n, H.n
    edges = list(G.edges())
    for x in range(g):
        base = g + x * h
        edges += [(base + a, base + b) for a, b in H.edges()]
        edges += [(x, base + v) for v in range(h)]
    return ProductInstance("corona", (G, H), build_graph(g * (1 + h), edges))


def mixed_radix_id(coords: Sequence[int], orders: Sequence[int]) -> int:
    if len(coords) != len(orders):
        raise GraphError("coordinate length mismatch")
    idx = 0
    for c, r in zip(coords, orders):
        if not 0 <= c < r:
            raise GraphError(f"coordinate {c} out of range for K_{r}")
        idx = idx * r + c
    return idx


def mixed_radix_coords(idx: int, orders: Sequence[int]) -> tuple[int, ...]:
    out = []
    for r in reversed(orders):
        idx, c = divmod(idx, r)
        out.append(c)
    if idx:
        raise GraphError("id out of range")
    return tuple(reversed(out))


def direct_power_complete(orders: Sequence[int]) -> ProductInstance:
    """Direct product of complete graphs K_{n_1} x ... x K_{n_t}.

    Built over coordinate tuples: two tuples are adjacent iff they differ in
    every coordinate.
    """
    orders = tuple(int(r) for r in orders)
    if not orders or min(orders) < 1:
        raise GraphError("direct power needs t >= 1 and every n_i >= 1")
    tuples = list(itertools.product(*(range(r) for r in orders)))
    rows = []
    for a in tuples:
        row = 0
        for j, b in enumerate(tuples):
            if all(x != y for x, y in zip(a, b)):
                row |= 1 << j
        rows.append(row)
    return ProductInstance("direct-power", orders, from_adjacency_rows(rows))


def product(kind: str, G: Graph, H: Graph) -> ProductInstance:
    kind = {"lex": "lexicographic"}.get(kind, kind)
    try:
        return {"cartesian": cartesian, "lexicographic": lexicographic, "corona": corona, "direct": direct}[kind](G, H)
    except KeyError:
        raise GraphError(f"unknown product kind {kind!r}") from None


# --- families ----------------------------------------------------------------


def complete(n: int) -> Graph:
    return build_graph(n, itertools.combinations(range(n), 2))


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Graph:
    """K_{1,n-1} on n vertices with center 0."""
    if n < 1:
        raise GraphError("star needs n >= 1")
    return build_graph(n, [(0, i) for i in range(1, n)])


def empty(n: int) -> Graph:
    return build_graph(n, [])


def random_connected(n: int, edge_prob: float, seed: int, max_draws: int = 10_000) -> Graph:
    if n < 1:
        raise GraphError("random_connected needs n >= 1")
    if not 0.0 <= edge_prob <= 1.0:
        raise GraphError("edge_prob must lie in [0, 1]")
    rng = random.Random(seed)
    pairs = list(itertools.combinations(range(n), 2))
    for _ in range(max_draws):
        G = build_graph(n, [p for p in pairs if rng.random() < edge_prob])
        if is_connected(G):
            return G
    raise GraphError(f"no connected draw after {max_draws} attempts (n={n}, p={edge_prob})")


def degree_product(orders: Sequence[int]) -> int:
    return prod(r - 1 for r in orders)


def lex_min_degree_claimed(G: Graph, H: Graph) -> int:
    """The additive form min_deg(G) + min_deg(H) used in the lem1 argument."""
    return min(G.degrees()) + min(H.degrees())


def lex_min_degree_actual(G: Graph, H: Graph) -> int:
    return min(G.degrees()) * H.n + min(H.degrees())


def is_cut_vertex(G: Graph, v: int) -> bool:
    before = len(components_mask(G.adj, G.full_mask))
    after = len(components_mask(G.adj, G.full_mask & ~(1 << v)))
    return after > before

