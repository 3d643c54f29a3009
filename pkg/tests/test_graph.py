import io
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kobcs import (
    DomainError,
    Graph,
    ParseError,
    ValidationError,
    complete_graph,
    dumps_graph,
    gen_gnp,
    induced_subgraph,
    load_graph,
    loads_graph,
    metrics,
    path_graph,
    random_weights,
    read_graph,
    star_graph,
    write_graph,
)
from kobcs.graph import format_vertex_list, parse_vertex_list

from conftest import one


def test_load_dimacs_path():
    g = loads_graph("p edge 3 2\ne 1 2\ne 2 3\n")
    assert g == path_graph(3)
    assert g.adj == ((1,), (0, 2), (1,))


def test_load_edgeless():
    g = loads_graph("p edge 2 0\n")
    assert (g.n, g.m) == (2, 0)


def test_self_loop_reports_line():
    with pytest.raises(ValidationError) as exc:
        loads_graph("p edge 3 2\ne 1 1\ne 2 3\n")
    assert exc.value.line == 2
    assert "self-loop" in str(exc.value)


@pytest.mark.parametrize(
    "text, line",
    [
        ("p edge 3 2\ne 1 2\ne 2 1\n", 3),
        ("p edge 3 1\ne 1 x\n", 2),
        ("c hello\np edge 3 1\ne 1 4\n", 3),
        ("e 1 2\n", 1),
        ("p edge 2 0\nn 1 0\n", 2),
        ("p edge 2 0\nn 1 -3.5\n", 2),
        ("p edge 2 1\nq 1 2\n", 2),
    ],
)
def test_malformed_dimacs(text, line):
    with pytest.raises(ParseError) as exc:
        loads_graph(text)
    assert exc.value.line == line


def test_edge_count_mismatch():
    with pytest.raises(ParseError):
        loads_graph("p edge 3 2\ne 1 2\n")


def test_weights_and_comments():
    text = "c weighted triangle\np edge 3 3\ne 1 2\ne 1 3\ne 2 3\nn 1 3\nn 2 2.5\nn 3 1\n"
    g = loads_graph(text)
    assert g.weights == (3.0, 2.5, 1.0)
    assert dumps_graph(g) == "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\nn 1 3\nn 2 2.5\nn 3 1\n"


def test_edgelist_format():
    g = loads_graph("4\n1 2\n# a comment\n3 4\n", "edgelist")
    assert g.edges == ((0, 1), (2, 3))
    assert loads_graph(dumps_graph(g, "edgelist"), "edgelist") == g
    with pytest.raises(ValidationError):
        loads_graph("3\n1 2\n2 1\n", "edgelist")


def test_binary_stream_and_files(tmp_path):
    g = load_graph(io.BytesIO(b"p edge 3 1\ne 3 1\n"))
    assert g.edges == ((0, 2),)
    write_graph(g, tmp_path / "g.col")
    assert read_graph(tmp_path / "g.col") == g


def test_constructor_validation():
    with pytest.raises(ValidationError):
        Graph(3, [(0, 0)])
    with pytest.raises(ValidationError):
        Graph(3, [(0, 1), (1, 0)])
    with pytest.raises(ValidationError):
        Graph(2, [], weights=[1, 0])
    with pytest.raises(DomainError):
        Graph(2, [(0, 2)])


def test_metrics():
    c5 = Graph(5, [(i, (i + 1) % 5) for i in range(5)])
    assert (metrics(c5).max_degree, metrics(c5).avg_degree) == (2, 2)
    star = metrics(star_graph(3))
    assert star.max_degree == 3
    assert star.avg_degree == Fraction(6, 4)
    assert star.avg_degree_str() == "6/4"
    single = metrics(Graph(1))
    assert (single.max_degree, single.avg_degree) == (0, 0)
    empty = metrics(Graph(0))
    assert (empty.max_degree, empty.avg_degree) == (0, 0)


def test_induced_subgraph(c5):
    h = induced_subgraph(c5, one(1, 2, 4))
    assert h.n == 3
    assert h.edges == ((0, 1),)
    assert h.origin == (0, 1, 3)
    assert induced_subgraph(c5, ()).n == 0
    assert induced_subgraph(complete_graph(4), one(1, 2, 3)) == complete_graph(3)
    with pytest.raises(DomainError):
        induced_subgraph(c5, {7})


def test_gnp_extremes_and_determinism():
    assert gen_gnp(4, 0, seed=7).m == 0
    assert gen_gnp(4, 1, seed=7) == complete_graph(4)
    assert dumps_graph(gen_gnp(8, 0.3, seed=1)) == dumps_graph(gen_gnp(8, 0.3, seed=1))
    with pytest.raises(DomainError):
        gen_gnp(4, 1.5, seed=0)
    with pytest.raises(DomainError):
        gen_gnp(4, -0.1, seed=0)


def test_random_weights_are_small_integers():
    g = random_weights(gen_gnp(30, 0.2, seed=3), seed=4)
    assert all(w == int(w) and 1 <= w <= 10 for w in g.weights)


def test_vertex_list_round_trip():
    assert parse_vertex_list("c header\n3 1\n2\n") == [2, 0, 1]
    assert format_vertex_list({2, 0}) == "1 3"
    with pytest.raises(ParseError):
        parse_vertex_list("0 1")


graphs = st.builds(
    lambda n, p, seed, w: random_weights(gen_gnp(n, p, seed), seed) if w else gen_gnp(n, p, seed),
    st.integers(0, 25),
    st.floats(0, 1),
    st.integers(0, 2**32),
    st.booleans(),
)


@settings(max_examples=150, deadline=None)
@given(graphs)
def test_generated_graph_properties(g):
    assert sum(g.degree(v) for v in g.vertices()) == 2 * g.m
    for v in g.vertices():
        assert v not in g.adj[v]
        assert list(g.adj[v]) == sorted(set(g.adj[v]))
        for w in g.adj[v]:
            assert v in g.adj[w]
    assert loads_graph(dumps_graph(g)) == g
    assert induced_subgraph(g, g.vertices()) == g
    m = metrics(g)
    if g.n:
        assert m.max_degree >= m.avg_degree >= 0
