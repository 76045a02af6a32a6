import pytest
from hypothesis import given, strategies as st

from mbdom.constructions import construct
from mbdom.graph import (
    EdgeListParseError,
    Graph,
    GraphError,
    VertexSet,
    closed_neighborhood,
    from_edge_list,
    is_connected,
    open_neighborhood,
    to_edge_list,
)

C4_TEXT = "4\n0 1\n1 2\n2 3\n3 0\n"


def c4():
    return from_edge_list(C4_TEXT)


def k2():
    return from_edge_list("2\n0 1\n")


def test_parse_c4():
    g = c4()
    assert g.n == 4
    assert g.edges() == [(0, 1), (0, 3), (1, 2), (2, 3)]
    assert all(g.degree(v) == 2 for v in g.vertices)


def test_parse_k2():
    g = k2()
    assert g.n == 2 and g.edges() == [(0, 1)]


def test_parse_out_of_range():
    with pytest.raises(EdgeListParseError) as exc:
        from_edge_list("3\n0 1\n0 3\n")
    assert exc.value.lineno == 3
    assert "out of range" in str(exc.value)


@pytest.mark.parametrize("text", [
    "",
    "# only a comment\n",
    "x\n",
    "-1\n",
    "3\n0 1 2\n",
    "3\n0  1\n",
    "3\n0 0\n",
    "3\n0 1\n1 0\n",
    "3\n0 a\n",
    "3\n١ 2\n",
    "99\n",
])
def test_parse_rejects(text):
    with pytest.raises(GraphError):
        from_edge_list(text)


def test_parse_comments_and_missing_trailing_newline():
    g = from_edge_list("# hello\n3\n# mid\n0 1\n1 2")
    assert g.edges() == [(0, 1), (1, 2)]


def test_neighborhoods():
    g = c4()
    assert open_neighborhood(g, 0) == {1, 3}
    assert closed_neighborhood(g, 0) == {0, 1, 3}
    assert open_neighborhood(k2(), 0) == {1}
    assert closed_neighborhood(k2(), 1) == {0, 1}
    single = Graph.from_edges(1, [])
    assert open_neighborhood(single, 0) == set()
    assert closed_neighborhood(single, 0) == {0}


def test_neighborhood_bad_vertex():
    with pytest.raises(GraphError):
        open_neighborhood(c4(), 4)


def test_connected():
    assert is_connected(c4())
    assert not is_connected(Graph.from_edges(4, [(0, 1), (2, 3)]))
    assert is_connected(construct("Gl", l=2).graph)


def test_graph_is_immutable():
    g = c4()
    with pytest.raises(AttributeError):
        g.n = 5
    h = g.add_edge(0, 2)
    assert h.has_edge(0, 2) and not g.has_edge(0, 2)


def test_vertex_set_ops():
    a, b = VertexSet([0, 2, 5]), VertexSet([2, 3])
    assert list(a) == [0, 2, 5]
    assert a | b == {0, 2, 3, 5}
    assert a & b == {2}
    assert a - b == {0, 5}
    assert b.complement(5) == {0, 1, 4}
    assert VertexSet.from_mask(0b101).bits == 0b101
    assert len(a) == 3 and 5 in a and 1 not in a
    with pytest.raises(GraphError):
        VertexSet([-1])


edges_strategy = st.integers(1, 10).flatmap(lambda n: st.tuples(
    st.just(n),
    st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda e: e[0] < e[1])),
))


@given(edges_strategy)
def test_edge_list_round_trip(data):
    n, edges = data
    g = Graph.from_edges(n, sorted(edges))
    text = to_edge_list(g, ["a comment"])
    assert text.startswith("# a comment\n")
    assert from_edge_list(text) == g
    assert g.num_edges() == len(edges)
    for u, v in edges:
        assert g.has_edge(v, u)
        assert u in open_neighborhood(g, v)
