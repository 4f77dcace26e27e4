"""Constructive outer-connected dominating sets for product graphs.

Each builder returns a :class:`Prediction` whose witness lives in the product's
vertex ids. Free choices in the constructions are resolved to the least id.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .graph_core import Graph, GraphError, VertexSet, is_connected
from .products import ProductInstance, cartesian, corona, direct_power_complete, lexicographic
from .solvers import DOMINATION, OUTER_CONNECTED, TOTAL, certificate


class Refused(GraphError):
    """The construction's hypotheses do not hold for this input."""


@dataclass(frozen=True)
class Prediction:
    source: str
    value: int
    witness: VertexSet
    instance: ProductInstance
    bound_only: bool = False
    preconditions: dict = field(default_factory=dict)

    def __post_init__(self):
        if len(self.witness) != self.value:
            raise ValueError(f"{self.source}: witness size {len(self.witness)} != value {self.value}")

    @property
    def preconditions_met(self) -> bool:
        return all(self.preconditions.values())

    def to_json(self) -> dict:
        return {
            "source": self.source,
            "value": self.value,
            "witness": self.witness.ids(),
            "bound_only": self.bound_only,
            "preconditions": dict(sorted(self.preconditions.items())),
        }


def _require_connected(**graphs: Graph) -> None:
    for name, g in graphs.items():
        if not is_connected(g):
            raise GraphError(f"factor {name} is disconnected")


def _witness(inst: ProductInstance, coords) -> VertexSet:
    return VertexSet.from_ids((inst.vertex_id(*c) for c in coords), inst.product.n)


def lex_case(G: Graph, H: Graph) -> int:
    """Which of the four domination-number cases (1..4) the pair falls into."""
    g1 = certificate(G, DOMINATION).value == 1
    h1 = certificate(H, DOMINATION).value == 1
    return {(True, True): 1, (True, False): 2, (False, True): 3, (False, False): 4}[(g1, h1)]


def lex_prediction(G: Graph, H: Graph) -> Prediction:
    _require_connected(G=G, H=H)
    inst = lexicographic(G, H)
    case = lex_case(G, H)
    pre = {"G_connected": True, "H_connected": True, "G_order_ge_2": G.n >= 2, "H_order_ge_2": H.n >= 2}
    if case == 1:
        x = certificate(G, DOMINATION).witness.ids()[0]
        y = certificate(H, DOMINATION).witness.ids()[0]
        coords, value = [(x, y)], 1
    elif case == 2:
        x = certificate(G, DOMINATION).witness.ids()[0]
        nbrs = [u for u in range(G.n) if G.has_edge(x, u)]
        # K1 has no second G-vertex; fall back to a second vertex in x's fibre
        coords = [(x, 0), (nbrs[0], 0)] if nbrs else [(x, 0), (x, 1)]
        value = 2
    elif case == 3:
        y = certificate(H, DOMINATION).witness.ids()[0]
        xs = certificate(G, DOMINATION).witness.ids()
        coords, value = [(x, y) for x in xs], len(xs)
    else:
        xs = certificate(G, TOTAL).witness.ids()
        coords, value = [(x, 0) for x in xs], len(xs)
    return Prediction(f"lex-case-{case}", value, _witness(inst, coords), inst, preconditions=pre)


def _is_k1(G: Graph) -> bool:
    return G.n == 1


def lex_k1_prediction(G: Graph, H: Graph) -> Prediction:
    """Transport the exact certificate of the non-trivial factor into G o H."""
    if not (_is_k1(G) or _is_k1(H)):
        raise Refused("neither factor is K1")
    inst = lexicographic(G, H)
    if _is_k1(H):
        cert = certificate(G, OUTER_CONNECTED)
        coords = [(u, 0) for u in cert.witness]
    else:
        cert = certificate(H, OUTER_CONNECTED)
        coords = [(0, v) for v in cert.witness]
    return Prediction("lex-k1", cert.value, _witness(inst, coords), inst,
                      preconditions={"one_factor_K1": True})


def corona_prediction(G: Graph, H: Graph) -> Prediction:
    _require_connected(G=G)
    inst = corona(G, H)
    dom = certificate(H, DOMINATION).witness.ids()
    coords = [(x, v) for x in range(G.n) for v in dom]
    return Prediction("corona-union", G.n * len(dom), _witness(inst, coords), inst,
                      preconditions={"G_connected": True, "G_order_ge_2": G.n >= 2})


def cartesian_prediction(G: Graph, H: Graph) -> Prediction:
    _require_connected(G=G, H=H)
    inst = cartesian(G, H)
    base = certificate(G, OUTER_CONNECTED).witness.ids()
    coords = [(u, v) for u in base for v in range(H.n)]
    return Prediction("cartesian-cross", len(base) * H.n, _witness(inst, coords), inst, bound_only=True,
                      preconditions={"G_connected": True, "H_connected": True})


def diagonal_preconditions(orders) -> dict:
    t = len(orders)
    return {"t_ge_3": t >= 3, "orders_ge_t_plus_1": all(r >= t + 1 for r in orders)}


def direct_diagonal_prediction(orders) -> Prediction:
    orders = tuple(int(r) for r in orders)
    pre = diagonal_preconditions(orders)
    if not all(pre.values()):
        raise Refused(f"diagonal construction needs t >= 3 and n_i >= t + 1, got {orders}")
    inst = direct_power_complete(orders)
    t = len(orders)
    coords = [(j,) * t for j in range(t + 1)]
    return Prediction("direct-diagonal", t + 1, _witness(inst, coords), inst, preconditions=pre)


PREDICTORS = {
    "lex": lex_prediction,
    "lex-k1": lex_k1_prediction,
    "corona": corona_prediction,
    "cartesian": cartesian_prediction,
}
