import itertools

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import nx_cart, nx_corona, nx_direct, nx_lex
from ocdom import graph_core as gc
from ocdom import products as pr
from ocdom.harness import enumerate_labeled

SMALL = [G for n in range(1, 4) for G in enumerate_labeled(n)]


def _edges(P: nx.Graph) -> set:
    return {tuple(sorted(e)) for e in P.edges()}


@pytest.mark.parametrize("u, v, h, idx", [(0, 0, 2, 0), (2, 1, 2, 5)])
def test_pair_index(u, v, h, idx):
    assert pr.pair_index(u, v, h) == idx
    assert pr.unpair(idx, h) == (u, v)


def test_pair_index_range():
    with pytest.raises(gc.GraphError):
        pr.pair_index(0, 2, 2)
    with pytest.raises(gc.GraphError):
        pr.pair_index(3, 0, 2, g_order=3)


def test_lex_examples():
    K2 = pr.complete(2)
    assert pr.lexicographic(K2, K2).product == pr.complete(4)
    P = pr.lexicographic(pr.complete(1), K2).product
    assert P.edges() == [(0, 1)]


def test_cartesian_prism():
    inst = pr.cartesian(pr.complete(3), pr.complete(2))
    assert inst.product.n == 6 and inst.product.m == 9
    assert pr.cartesian(pr.complete(2), pr.complete(2)).product.degrees() == [2] * 4


def test_cartesian_k1_identity():
    H = pr.path(4)
    assert pr.cartesian(pr.complete(1), H).product == H
    assert pr.lexicographic(pr.complete(1), H).product == H


def test_corona_examples():
    assert pr.corona(pr.complete(1), pr.complete(1)).product == pr.complete(2)
    P = pr.corona(pr.path(2), pr.path(3)).product
    assert P.n == 8 and P.m == 11
    assert pr.corona(pr.complete(2), pr.complete(1)).product.edges() == [(0, 1), (0, 2), (1, 3)]


def test_corona_index_map():
    inst = pr.corona(pr.path(2), pr.path(3))
    assert inst.vertex_id(1) == 1
    assert inst.vertex_id(1, 2) == 2 + 3 + 2
    assert inst.coords(7) == (1, 2)
    assert inst.coords(0) == (0,)


def test_direct_k2_k2():
    P = pr.direct(pr.complete(2), pr.complete(2)).product
    assert P.edges() == [(0, 3), (1, 2)]


def test_direct_power_222():
    P = pr.direct_power_complete((2, 2, 2)).product
    assert P.n == 8 and P.m == 4 and P.degrees() == [1] * 8


def test_direct_power_444():
    inst = pr.direct_power_complete((4, 4, 4))
    P = inst.product
    assert P.n == 64 and set(P.degrees()) == {27}
    # spot check one vertex by enumerating coordinate triples
    x = (1, 2, 3)
    nbrs = [c for c in itertools.product(range(4), repeat=3) if all(a != b for a, b in zip(c, x))]
    assert gc.open_neighborhood(P, inst.vertex_id(*x)).ids() == sorted(inst.vertex_id(*c) for c in nbrs)


@pytest.mark.parametrize("orders", [(2, 3), (3, 2, 2), (4, 4, 4), (5, 4, 4)])
def test_mixed_radix_round_trip(orders):
    for i, c in enumerate(itertools.product(*(range(r) for r in orders))):
        assert pr.mixed_radix_id(c, orders) == i
        assert pr.mixed_radix_coords(i, orders) == c


def test_diagonal_ids_444():
    inst = pr.direct_power_complete((4, 4, 4))
    assert [inst.vertex_id(j, j, j) for j in range(4)] == [0, 21, 42, 63]


@pytest.mark.parametrize(
    "build, oracle",
    [(pr.lexicographic, nx_lex), (pr.cartesian, nx_cart), (pr.direct, nx_direct), (pr.corona, nx_corona)],
)
def test_products_match_reference(build, oracle):
    for G, H in itertools.product(SMALL, repeat=2):
        P = build(G, H).product
        ref = oracle(G, H)
        assert P.n == ref.number_of_nodes()
        assert set(P.edges()) == _edges(ref), (gc.g6(G), gc.g6(H))


@st.composite
def small_graph(draw, max_n=5):
    n = draw(st.integers(1, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return gc.build_graph(n, edges)


@given(small_graph(), small_graph())
@settings(max_examples=80, deadline=None)
def test_order_and_degree_laws(G, H):
    h = H.n
    lex, cart, dirp = pr.lexicographic(G, H), pr.cartesian(G, H), pr.direct(G, H)
    cor = pr.corona(G, H)
    for inst in (lex, cart, dirp):
        assert inst.product.n == G.n * h
    assert cor.product.n == G.n * (1 + h)
    for u, v in itertools.product(range(G.n), range(h)):
        i = pr.pair_index(u, v, h)
        assert cart.product.degree(i) == G.degree(u) + H.degree(v)
        assert lex.product.degree(i) == h * G.degree(u) + H.degree(v)
        assert dirp.product.degree(i) == G.degree(u) * H.degree(v)
    for i in range(lex.product.n):
        assert lex.vertex_id(*lex.coords(i)) == i
    for i in range(cor.product.n):
        assert cor.vertex_id(*cor.coords(i)) == i


@given(small_graph(), small_graph())
@settings(max_examples=60, deadline=None)
def test_lex_min_degree_forms(G, H):
    actual = gc.min_degree(pr.lexicographic(G, H).product)
    assert actual == pr.lex_min_degree_actual(G, H)
    claimed = pr.lex_min_degree_claimed(G, H)
    if gc.min_degree(G) >= 1 and H.n >= 2:
        assert claimed != actual
    else:
        assert claimed == actual


@pytest.mark.parametrize("g", [2, 3, 4])
def test_corona_g_vertices_are_cut_vertices(g):
    for G in enumerate_labeled(g, connected_only=True):
        for H in SMALL:
            P = pr.corona(G, H).product
            assert all(pr.is_cut_vertex(P, x) for x in range(g))


def test_generators():
    assert pr.path(4).edges() == [(0, 1), (1, 2), (2, 3)]
    assert pr.star(4).edges() == [(0, 1), (0, 2), (0, 3)]
    assert pr.cycle(4).m == 4
    with pytest.raises(gc.GraphError):
        pr.cycle(2)


def test_random_connected_deterministic():
    a = pr.random_connected(5, 0.5, seed=7)
    b = pr.random_connected(5, 0.5, seed=7)
    assert a == b and gc.is_connected(a)


def test_random_connected_gives_up():
    with pytest.raises(gc.GraphError):
        pr.random_connected(4, 0.0, seed=1, max_draws=5)


def test_product_dispatch():
    assert pr.product("lex", pr.complete(2), pr.complete(2)).kind == "lexicographic"
    with pytest.raises(ValueError):
        pr.product("strong", pr.complete(2), pr.complete(2))
