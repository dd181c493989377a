import pytest
from hypothesis import given
from hypothesis import strategies as st

from q1lab import families
from q1lab.formats import from_graph6, parse_edge_list, to_edge_list, to_graph6
from q1lab.graph import Graph, GraphError


@pytest.mark.parametrize(
    "g6, graph",
    [
        ("A_", families.complete(2)),
        ("Bw", families.complete(3)),
        ("C~", families.complete(4)),
        ("@", families.complete(1)),
        ("C?", families.empty(4)),
    ],
)
def test_known_graph6(g6, graph):
    assert to_graph6(graph) == g6
    assert from_graph6(g6) == graph


def test_graph6_large_size_field():
    g = families.path(64)
    s = to_graph6(g)
    assert s.startswith("~??~") or s[0] == "~"
    assert from_graph6(s) == g


@given(st.integers(1, 12).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, 2 ** (n * (n - 1) // 2) - 1))))
def test_graph6_round_trip(case):
    g = Graph.from_mask(*case)
    assert from_graph6(to_graph6(g)) == g


@pytest.mark.parametrize("bad", ["", "A", "A__", "!x"])
def test_graph6_rejects(bad):
    with pytest.raises(GraphError):
        from_graph6(bad)


def test_edge_list_round_trip(g2):
    text = to_edge_list(g2)
    assert text.splitlines()[0] == "7 15"
    assert parse_edge_list(text) == g2


@pytest.mark.parametrize("bad", ["", "3 2\n0 1\n", "3 1\n0 x\n", "3 1\n0 0\n", "3 1\n0 1 2\n"])
def test_edge_list_rejects(bad):
    with pytest.raises(GraphError):
        parse_edge_list(bad)
