"""Independent reference implementations used to derive expected values.

Everything here works on networkx graphs and Python sets, sharing no code
with the package's bit-mask paths.
"""
from __future__ import annotations

import itertools

import networkx as nx


def nx_graph(G) -> nx.Graph:
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges())
    return H


def dominates(H: nx.Graph, S) -> bool:
    S = set(S)
    return all(v in S or any(u in S for u in H[v]) for v in H)


def total_dominates(H: nx.Graph, S) -> bool:
    S = set(S)
    return all(any(u in S for u in H[v]) for v in H)


def outer_connected(H: nx.Graph, S) -> bool:
    rest = [v for v in H if v not in set(S)]
    if len(rest) <= 1:
        return dominates(H, S)
    return dominates(H, S) and nx.is_connected(H.subgraph(rest))


PREDICATES = {
    "domination": dominates,
    "total-domination": total_dominates,
    "outer-connected-domination": outer_connected,
}


def brute_min(H: nx.Graph, kind: str):
    """(value, lexicographically least minimum set) by plain enumeration."""
    pred = PREDICATES[kind]
    nodes = sorted(H)
    for k in range(len(nodes) + 1):
        for S in itertools.combinations(nodes, k):
            if pred(H, S):
                return k, list(S)
    raise AssertionError("no valid set")


def relabel_rowmajor(P: nx.Graph, h_order: int) -> nx.Graph:
    """Map networkx product nodes (u, v) to u * h_order + v."""
    return nx.relabel_nodes(P, {(u, v): u * h_order + v for u, v in P})


def nx_lex(G, H) -> nx.Graph:
    return relabel_rowmajor(nx.lexicographic_product(nx_graph(G), nx_graph(H)), H.n)


def nx_cart(G, H) -> nx.Graph:
    return relabel_rowmajor(nx.cartesian_product(nx_graph(G), nx_graph(H)), H.n)


def nx_direct(G, H) -> nx.Graph:
    return relabel_rowmajor(nx.tensor_product(nx_graph(G), nx_graph(H)), H.n)


def nx_corona(G, H) -> nx.Graph:
    """Corona by hand: G on 0..g-1, copy for x at g + x*h .. g + x*h + h - 1."""
    g, h = G.n, H.n
    P = nx.Graph()
    P.add_nodes_from(range(g * (1 + h)))
    P.add_edges_from(G.edges())
    for x in range(g):
        base = g + x * h
        P.add_edges_from((base + a, base + b) for a, b in H.edges())
        P.add_edges_from((x, base + v) for v in range(h))
    return P


def count_connected_labeled(n: int) -> int:
    pairs = list(itertools.combinations(range(n), 2))
    total = 0
    for r in range(len(pairs) + 1):
        for es in itertools.combinations(pairs, r):
            H = nx.Graph()
            H.add_nodes_from(range(n))
            H.add_edges_from(es)
            total += nx.is_connected(H)
    return total


def decode_graph6_by_hand(s: str) -> set[tuple[int, int]]:
    """Edge set from graph6 following the published format, n <= 62."""
    data = [ord(c) - 63 for c in s]
    n = data[0]
    bits = []
    for x in data[1:]:
        bits += [(x >> (5 - i)) & 1 for i in range(6)]
    edges = set()
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.add((i, j))
            k += 1
    return edges
