import pytest

from mbdom.constructions import FAMILIES, ParameterError, construct
from mbdom.domination import is_dominating_set, total_domination_number
from mbdom.graph import from_edge_list, is_connected
from mbdom.solver import solve

C4_EDGES = [(0, 1), (0, 2), (1, 3), (2, 3)]


@pytest.mark.parametrize("family,params,order,edges", [
    ("Gl", {"l": 1}, 4, 4),
    ("Gl", {"l": 2}, 8, 9),
    ("Gl", {"l": 3}, 12, 14),
    ("GlPrime", {"l": 1}, 6, 7),
    ("GlPrime", {"l": 2}, 10, 12),
    ("GlDoublePrime", {"l": 1}, 7, 11),
    ("GlDoublePrime", {"l": 2}, 11, 16),
    ("Gkn", {"k": 2, "n": 4}, 9, None),
    ("Gkn", {"k": 3, "n": 4}, 13, None),
    ("Hkn", {"k": 2, "n": 4}, 10, None),
    ("Hkn", {"k": 3, "n": 4}, 14, None),
    ("G2l", {"l": 3}, 8, None),
    ("G2l", {"l": 4}, 11, None),
    ("Gkl", {"k": 3, "l": 3}, 14, None),
    ("Gkl", {"k": 3, "l": 4}, 17, None),
    ("H2l", {"l": 3}, 9, None),
    ("H2l", {"l": 4}, 12, None),
    ("Hkl", {"k": 3, "l": 3}, 15, None),
    ("Fkl", {"k": 2, "l": 2}, 8, None),
    ("Fkl", {"k": 2, "l": 3}, 11, None),
    ("Fkl", {"k": 3, "l": 3}, 14, None),
    ("Complete", {"n": 4}, 4, 6),
])
def test_orders(family, params, order, edges):
    g = construct(family, **params).graph
    assert g.n == order
    assert is_connected(g)
    if edges is not None:
        assert g.num_edges() == edges


def test_gl1_is_c4():
    assert construct("Gl", l=1).graph.edges() == C4_EDGES
    assert construct("Cycle", n=4).graph.edges() == [(0, 1), (0, 3), (1, 2), (2, 3)]


def test_complete_minus_edge():
    g = construct("CompleteMinusEdge", n=4).graph
    assert not g.has_edge(0, 1)
    assert g.num_edges() == 5


def test_special_vertices_last():
    for family, params in (("Gkn", {"k": 3, "n": 4}), ("Hkn", {"k": 2, "n": 4}), ("H2l", {"l": 3}),
                           ("Hkl", {"k": 3, "l": 3}), ("Fkl", {"k": 2, "l": 3})):
        c = construct(family, **params)
        hubs = [c[x] for x in "uvw" if x in c.labels]
        assert sorted(hubs) == list(range(c.graph.n - len(hubs), c.graph.n))


def test_hub_edges():
    assert construct("G2l", l=3).graph.has_edge(*[construct("G2l", l=3)[x] for x in "uv"])
    for family, params, present in (("Gkl", {"k": 3, "l": 3}, False), ("Hkl", {"k": 3, "l": 3}, True),
                                    ("Fkl", {"k": 2, "l": 2}, False), ("Hkn", {"k": 2, "n": 4}, False)):
        c = construct(family, **params)
        assert c.graph.has_edge(c["u"], c["v"]) is present


def test_strategy_anchor_sets():
    c = construct("G2l", l=3)
    assert is_dominating_set(c.graph, {c["u"], c["v_1_1"]})
    assert is_dominating_set(c.graph, {c["u"], c["v_1_2"]})
    c = construct("Gkl", k=3, l=3)
    assert is_dominating_set(c.graph, {c["u"], c["v"]})


def test_h2l_v_degree():
    c = construct("H2l", l=3)
    assert c.graph.degree(c["v"]) == c.graph.n - 2
    assert not c.graph.has_edge(c["v"], c["w"])


def test_total_domination_of_gl_families():
    assert total_domination_number(construct("Gl", l=3).graph) == 6
    assert total_domination_number(construct("GlPrime", l=2).graph) == 5


def test_small_game_values():
    assert solve(construct("Gkn", k=2, n=4).graph, "mbtd") == 2
    assert solve(construct("Hkn", k=2, n=4).graph, "mbtd", "dominator", "staller") == 2
    assert solve(construct("GlDoublePrime", l=2).graph, "mbtd", "dominator", "staller") == 5


@pytest.mark.parametrize("family,params", [
    ("Gl", {"l": 0}),
    ("Gkl", {"k": 2, "l": 3}),
    ("Gkl", {"k": 4, "l": 3}),
    ("Fkl", {"k": 1, "l": 3}),
    ("G2l", {"l": 2}),
    ("Gkn", {"k": 1, "n": 4}),
    ("Gkn", {"k": 2, "n": 3}),
    ("Cycle", {"n": 2}),
    ("Gkl", {"k": 3}),
    ("Nope", {"n": 3}),
])
def test_invalid_params(family, params):
    with pytest.raises(ParameterError):
        construct(family, **params)


@pytest.mark.parametrize("family", sorted(FAMILIES))
def test_edge_list_round_trip_and_determinism(family):
    names = FAMILIES[family][1]
    params = {"k": 3, "l": 3, "n": 4} if family not in ("Fkl", "Gkn", "Hkn") else {"k": 2, "l": 3, "n": 4}
    params = {p: params[p] for p in names}
    a, b = construct(family, **params), construct(family, **params)
    text = a.edge_list()
    assert text == b.edge_list()
    assert text.startswith(f"# family: {family}\n")
    assert from_edge_list(text) == a.graph
