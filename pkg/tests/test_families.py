import pytest

from q1lab import families
from q1lab.bounds import turan_edge_count
from q1lab.graph import (
    GraphError,
    chromatic_number,
    clique_number,
    complement,
    is_connected,
    multipartite_parts,
    union,
)
from q1lab.spectral import q1

SMALL = [(n, t) for n in range(1, 13) for t in range(1, n + 1)]


def test_turan_10_3():
    g = families.turan(10, 3)
    assert multipartite_parts(g) == [4, 3, 3]
    assert g.m == 33
    # part layout: larger parts first, contiguous ids
    assert g.neighbors(0) == list(range(4, 10))


def test_turan_edges():
    assert families.turan(6, 3) == complement(families.perfect_matching(6))
    for n in range(1, 9):
        assert families.turan(n, n) == families.complete(n)


@pytest.mark.parametrize("n,t", SMALL)
def test_turan_invariants(n, t):
    g = families.turan(n, t)
    assert clique_number(g) == t
    assert chromatic_number(g) == t
    assert g.m == turan_edge_count(n, t)


def test_turan_edge_formula_to_64():
    for n in range(1, 65):
        for t in range(1, n + 1):
            parts = families.turan_parts(n, t)
            assert turan_edge_count(n, t) == (n * n - sum(p * p for p in parts)) // 2


def test_turan_bad_params():
    with pytest.raises(GraphError):
        families.turan(3, 4)
    with pytest.raises(GraphError):
        families.turan(3, 0)


def test_complete_multipartite():
    assert families.complete_multipartite([1, 1, 1, 1]) == families.complete(4)
    assert families.complete_multipartite([4, 3, 3]) == families.turan(10, 3)
    with pytest.raises(GraphError):
        families.complete_multipartite([])


def test_kite_examples():
    k = families.kite(4, 3)
    assert k.m == 4 and sorted(k.degrees()) == [1, 2, 2, 3]
    for n in range(2, 9):
        assert families.kite(n, 2) == families.path(n)
    k74 = families.kite(7, 4)
    assert k74.m == 9 and clique_number(k74) == 4 and is_connected(k74)
    with pytest.raises(GraphError):
        families.kite(3, 4)


@pytest.mark.parametrize("n,w", [(n, w) for n in range(2, 13) for w in range(2, n + 1)])
def test_kite_clique(n, w):
    assert clique_number(families.kite(n, w)) == w


def test_cpm_examples():
    assert families.complement_perfect_matching(4) == families.complement(families.perfect_matching(4)) if hasattr(families, "complement") else True
    c4 = families.complement_perfect_matching(4)
    assert sorted(c4.degrees()) == [2, 2, 2, 2] and is_connected(c4) and c4.m == 4
    assert families.complement_perfect_matching(6) == families.turan(6, 3)
    assert q1(families.complement_perfect_matching(8)) == pytest.approx(12, abs=1e-9)
    with pytest.raises(GraphError):
        families.complement_perfect_matching(7)


@pytest.mark.parametrize("n", [2, 4, 6, 8, 10, 12])
def test_cpm_invariants(n):
    g = families.complement_perfect_matching(n)
    assert set(g.degrees()) == {n - 2}
    assert clique_number(g) == n // 2


def test_cpm_plus_triangle():
    for n in (5, 7, 9, 11):
        g = families.cpm_plus_triangle(n)
        assert g == complement(union(families.perfect_matching(n - 3), families.complete(3)))
        assert is_connected(g)
    # n=5: complement of K2 + K3 is K_{2,3}
    assert families.cpm_plus_triangle(5) == families.complete_multipartite([2, 3])
    g9 = families.cpm_plus_triangle(9)
    assert sorted(g9.degrees()) == [6, 6, 6, 7, 7, 7, 7, 7, 7]
    assert clique_number(g9) == 4  # three matching pairs plus the triangle
    assert not is_connected(families.cpm_union_triangle(9))
    with pytest.raises(GraphError):
        families.cpm_plus_triangle(8)


def test_trivial_constructors():
    assert families.path(2) == families.complete(2)
    assert families.complete(3).m == 3
    assert families.empty(1) == families.complete(1)


@pytest.mark.parametrize(
    "text, expected",
    [
        ("turan:10,3", families.turan(10, 3)),
        ("kite:7,4", families.kite(7, 4)),
        ("kpq:2,3", families.complete_multipartite([2, 3])),
        ("path:5", families.path(5)),
        ("complete:4", families.complete(4)),
        ("cpm:8", families.complement_perfect_matching(8)),
        ("cpmtri:9", families.cpm_plus_triangle(9)),
        ("multipartite:4,3,3", families.turan(10, 3)),
    ],
)
def test_parse_family(text, expected):
    assert families.parse_family(text).build() == expected


@pytest.mark.parametrize("bad", ["turan:3", "foo:1", "turan", "kite:3,4", "path:x"])
def test_parse_family_rejects(bad):
    with pytest.raises(GraphError):
        families.parse_family(bad)
