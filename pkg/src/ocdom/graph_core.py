"""Simple undirected labeled graphs over bit-mask adjacency rows.

Vertex ids are ``0..n-1``; ``adj[v]`` is an int whose bit ``u`` is set iff
``{u, v}`` is an edge. Sets of vertices are plain ints in the hot paths and
:class:`VertexSet` at API boundaries.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

MAX_ORDER = 128
MAX_GRAPH6_ORDER = 62


class GraphError(ValueError):
    pass


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(ids: Iterable[int]) -> int:
    m = 0
    for v in ids:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]
    m: int = field(compare=False)

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match order")

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adj]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def closed_rows(self) -> tuple[int, ...]:
        return tuple(a | (1 << v) for v, a in enumerate(self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}, g6={emit_graph6(self).decode() if self.n <= MAX_GRAPH6_ORDER else '...'})"


@dataclass(frozen=True)
class VertexSet:
    """Subset of a graph's vertices; iteration is in ascending id order."""

    bits: int
    order: int

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.order:
            raise GraphError(f"vertex set {self.bits:b} exceeds order {self.order}")

    @classmethod
    def from_ids(cls, ids: Iterable[int], order: int) -> "VertexSet":
        return cls(mask_of(ids), order)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.bits)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, v: int) -> bool:
        return bool(self.bits >> v & 1)

    def ids(self) -> list[int]:
        return list(iter_bits(self.bits))

    def complement(self) -> "VertexSet":
        return VertexSet(((1 << self.order) - 1) & ~self.bits, self.order)

    def __repr__(self) -> str:
        return f"VertexSet({self.ids()})"


def _from_rows(rows: Sequence[int]) -> Graph:
    m = sum(r.bit_count() for r in rows) // 2
    return Graph(len(rows), tuple(rows), m)


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    if n < 0 or n > MAX_ORDER:
        raise GraphError(f"order {n} outside 0..{MAX_ORDER}")
    rows = [0] * n
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"self-loop at {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return _from_rows(rows)


def from_adjacency_rows(rows: Sequence[int]) -> Graph:
    """Build from prevalidated rows (symmetric, loop-free)."""
    return _from_rows(rows)


def _check_vertex(G: Graph, v: int) -> None:
    if not 0 <= v < G.n:
        raise GraphError(f"vertex {v} out of range for n={G.n}")


def open_neighborhood(G: Graph, v: int) -> VertexSet:
    _check_vertex(G, v)
    return VertexSet(G.adj[v], G.n)


def closed_neighborhood(G: Graph, v: int) -> VertexSet:
    _check_vertex(G, v)
    return VertexSet(G.adj[v] | (1 << v), G.n)


def min_degree(G: Graph) -> int:
    if G.n == 0:
        raise GraphError("minimum degree of the empty graph")
    return min(G.degrees())


def component_of(adj: Sequence[int], allowed: int, start: int) -> int:
    """Mask of the component containing ``start`` within ``allowed``."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= adj[v]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def is_connected_mask(adj: Sequence[int], allowed: int) -> bool:
    """True iff the subgraph induced by ``allowed`` is connected (<=1 vertex counts)."""
    if allowed & (allowed - 1) == 0:
        return True
    start = (allowed & -allowed).bit_length() - 1
    return component_of(adj, allowed, start) == allowed


def components_mask(adj: Sequence[int], allowed: int) -> list[int]:
    comps = []
    rest = allowed
    while rest:
        start = (rest & -rest).bit_length() - 1
        c = component_of(adj, rest, start)
        comps.append(c)
        rest &= ~c
    return comps


def is_connected(G: Graph) -> bool:
    return is_connected_mask(G.adj, G.full_mask)


def induced_subgraph(G: Graph, S: VertexSet | int) -> tuple[Graph, list[int]]:
    """Return ``(H, ids)`` where H has vertex ``i`` standing for original ``ids[i]``."""
    bits = S.bits if isinstance(S, VertexSet) else S
    ids = list(iter_bits(bits & G.full_mask))
    pos = {v: i for i, v in enumerate(ids)}
    rows = []
    for v in ids:
        rows.append(mask_of(pos[u] for u in iter_bits(G.adj[v] & bits)))
    return _from_rows(rows), ids


# --- graph6 -----------------------------------------------------------------


def emit_graph6(G: Graph) -> bytes:
    n = G.n
    if n > MAX_GRAPH6_ORDER:
        raise GraphError(f"graph6 emission supports n <= {MAX_GRAPH6_ORDER}")
    out = bytearray([63 + n])
    # column-major upper triangle: (0,1),(0,2),(1,2),(0,3),...
    bits = [G.adj[j] >> i & 1 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    for k in range(0, len(bits), 6):
        chunk = 0
        for b in bits[k:k + 6]:
            chunk = chunk << 1 | b
        out.append(63 + chunk)
    return bytes(out)


def parse_graph6(text: bytes | str) -> Graph:
    if isinstance(text, str):
        text = text.encode("ascii")
    text = text.strip()
    if text.startswith(b">>graph6<<"):
        text = text[10:]
    if not text:
        raise GraphError("empty graph6 string")
    if any(c < 63 or c > 126 for c in text):
        raise GraphError("graph6 byte outside 63..126")
    if text[0] == 126:
        raise GraphError(f"multi-byte order field unsupported (n > {MAX_GRAPH6_ORDER})")
    n = text[0] - 63
    need = n * (n - 1) // 2
    payload = text[1:]
    if len(payload) != (need + 5) // 6:
        raise GraphError(f"graph6 payload has {len(payload)} bytes, expected {(need + 5) // 6}")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if payload[k // 6] - 63 >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return _from_rows(rows)


def g6(G: Graph) -> str:
    return emit_graph6(G).decode("ascii")


# --- JSON / DOT -------------------------------------------------------------


def to_json_obj(G: Graph) -> dict:
    return {"n": G.n, "edges": [list(e) for e in G.edges()]}


def from_json_obj(obj: dict) -> Graph:
    return build_graph(int(obj["n"]), obj.get("edges", []))


def to_dot(G: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines += [f"  {v};" for v in range(G.n)]
    lines += [f"  {u} -- {v};" for u, v in G.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def load_graph(text: str) -> Graph:
    """Accept either a graph6 token or a JSON object."""
    s = text.strip()
    if s.startswith("{"):
        return from_json_obj(json.loads(s))
    return parse_graph6(s)
