import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import PREDICATES, brute_min, nx_graph
from ocdom import graph_core as gc
from ocdom import products as pr
from ocdom import solvers as sv
from ocdom.harness import enumerate_labeled

KINDS = sv.KINDS
DOM, TOT, OCD = sv.DOMINATION, sv.TOTAL, sv.OUTER_CONNECTED


@pytest.mark.parametrize(
    "S, expected", [([1, 2], True), ([0], False), ([0, 1, 2, 3], True)],
)
def test_is_dominating_p4(S, expected):
    assert sv.is_dominating(pr.path(4), S) is expected


@pytest.mark.parametrize(
    "G, S, expected",
    [(pr.path(4), [1, 2], True), (pr.complete(3), [0], False), (pr.star(4), [0, 1], True)],
)
def test_is_total_dominating(G, S, expected):
    assert sv.is_total_dominating(G, S) is expected


@pytest.mark.parametrize(
    "G, S, expected",
    [(pr.cycle(4), [0, 1], True), (pr.path(4), [1, 2], False), (pr.path(4), [0, 1, 2, 3], True)],
)
def test_is_outer_connected(G, S, expected):
    assert sv.is_outer_connected_dominating(G, S) is expected


# value and canonical witness, frozen from the brute-force reference in tests/oracles.py
FROZEN = [
    ("P4", DOM, 2, [0, 2]),
    ("P4", TOT, 2, [1, 2]),
    ("P4", OCD, 2, [0, 3]),
    ("K13", DOM, 1, [0]),
    ("K13", TOT, 2, [0, 1]),
    ("K13", OCD, 3, [0, 1, 2]),
    ("C6", DOM, 2, [0, 3]),
    ("C6", TOT, 4, [0, 1, 2, 3]),
    ("C6", OCD, 4, [0, 1, 2, 3]),
    ("C4", OCD, 2, [0, 1]),
    ("C5", TOT, 3, [0, 1, 2]),
    ("C5", OCD, 3, [0, 1, 2]),
]


@pytest.mark.parametrize("name, kind, value, witness", FROZEN)
@pytest.mark.parametrize("solver", [sv.solve_exact, sv.solve_bnb])
def test_frozen_values(families, name, kind, value, witness, solver):
    cert = solver(families[name], kind)
    assert (cert.value, cert.witness.ids()) == (value, witness)


def test_frozen_values_match_reference(families):
    for name, kind, value, witness in FROZEN:
        assert brute_min(nx_graph(families[name]), kind) == (value, witness)


@pytest.mark.parametrize("n", range(1, 7))
def test_complete_graph_ocd_is_one(n):
    cert = sv.solve_bnb(pr.complete(n), OCD)
    assert cert.value == 1 and cert.witness.ids() == [0]


def test_empty_graph_value_zero():
    G = gc.build_graph(0, [])
    for kind in (DOM, OCD):
        assert sv.solve_exact(G, kind).value == 0
        assert sv.solve_bnb(G, kind).value == 0


def test_direct_power_values():
    assert sv.solve_bnb(pr.direct_power_complete((2, 2, 2)).product, DOM).witness.ids() == [0, 1, 2, 3]
    assert sv.solve_bnb(pr.direct_power_complete((2, 2, 2)).product, OCD).value == 7


@pytest.mark.parametrize("kind", ["gamma-t", TOT])
def test_total_needs_no_isolated_vertex(kind):
    for solver in (sv.solve_exact, sv.solve_bnb):
        with pytest.raises(sv.NoSolution):
            solver(pr.complete(1), kind)


def test_unknown_kind():
    with pytest.raises(ValueError):
        sv.solve_bnb(pr.path(3), "roman")


def test_budget_exhausted():
    G = pr.cycle(12)
    with pytest.raises(sv.BudgetExhausted) as exc:
        sv.solve_exact(G, OCD, budget=10)
    assert exc.value.nodes == 11
    with pytest.raises(sv.BudgetExhausted):
        sv.solve_bnb(G, OCD, budget=3)


@pytest.mark.parametrize("n", range(1, 6))
def test_bnb_matches_reference_exhaustive(n):
    for G in enumerate_labeled(n):
        H = nx_graph(G)
        for kind in KINDS:
            if kind == TOT and any(a == 0 for a in G.adj):
                continue
            cert = sv.solve_bnb(G, kind)
            assert (cert.value, cert.witness.ids()) == brute_min(H, kind), (gc.g6(G), kind)


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return gc.build_graph(n, edges)


@given(graphs())
@settings(max_examples=150, deadline=None)
def test_bnb_equals_baseline(G):
    for kind in KINDS:
        if kind == TOT and any(a == 0 for a in G.adj):
            continue
        a, b = sv.solve_exact(G, kind), sv.solve_bnb(G, kind)
        assert (a.value, a.witness) == (b.value, b.witness)
        assert sv.is_valid(G, b.witness, kind)
        assert PREDICATES[kind](nx_graph(G), b.witness.ids())


@given(graphs(), st.data())
@settings(max_examples=100, deadline=None)
def test_superset_of_dominating_set_dominates(G, data):
    D = sv.solve_bnb(G, DOM).witness.bits
    extra = data.draw(st.integers(0, G.full_mask))
    assert sv.is_dominating(G, D | extra)


@given(graphs())
@settings(max_examples=100, deadline=None)
def test_number_orderings(G):
    g = sv.solve_bnb(G, DOM).value
    assert g <= sv.solve_bnb(G, OCD).value
    if all(G.adj):
        assert g <= sv.solve_bnb(G, TOT).value


@given(graphs())
@settings(max_examples=100, deadline=None)
def test_thm1_bound_property(G):
    if gc.is_connected(G):
        assert sv.solve_bnb(G, OCD).value <= G.n - gc.min_degree(G)


def test_lex_least_of_size():
    S, _ = sv.lex_least_of_size(pr.path(4), OCD, 3)
    assert S.ids() == [0, 1, 2]
    S, _ = sv.lex_least_of_size(pr.path(4), OCD, 1)
    assert S is None


def test_scan_up_to_finds_least():
    hit, count = sv.scan_up_to(pr.path(4), OCD, 3)
    assert hit.ids() == [0, 3]
    assert count == 1 + 4 + 6


def test_scan_up_to_none_and_jobs_agree():
    G = pr.direct_power_complete((3, 3, 3)).product
    a = sv.scan_up_to(G, OCD, 2, jobs=1)
    b = sv.scan_up_to(G, OCD, 2, jobs=2)
    assert a == b
    assert a[0] is None and a[1] == 1 + 27 + 351


def test_certificate_cache_and_aliases():
    G = pr.cycle(5)
    assert sv.certificate(G, "gamma-oc") is sv.certificate(G, OCD)
    assert (sv.gamma(G), sv.gamma_t(G), sv.gamma_oc(G)) == (2, 3, 3)


def test_certificate_json():
    cert = sv.solve_exact(pr.path(4), "gamma")
    assert cert.to_json() == {"kind": DOM, "value": 2, "witness": [0, 2], "solver": "baseline",
                              "nodes_expanded": cert.nodes_expanded}
