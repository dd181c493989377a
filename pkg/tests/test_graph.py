import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import brute_clique
from q1lab import families
from q1lab.graph import (
    Graph,
    GraphError,
    chromatic_number,
    clique_number,
    complement,
    degree_profile,
    duplicate_vertex,
    from_edge_list,
    induced_subgraph,
    is_connected,
    join,
    multipartite_parts,
    union,
)
from q1lab.verify import enumerate_connected


def graphs(max_n=7):
    return st.integers(1, max_n).flatmap(
        lambda n: st.integers(0, 2 ** (n * (n - 1) // 2) - 1).map(lambda m: Graph.from_mask(n, m))
    )


def brute_chromatic(g):
    for k in range(1, g.n + 1):
        for colours in itertools.product(range(k), repeat=g.n):
            if all(colours[u] != colours[v] for u, v in g.edges()):
                return k
    return 0


class TestConstruction:
    def test_path_p3(self):
        g = from_edge_list(3, [(0, 1), (1, 2)])
        assert g.m == 2 and g.edges() == [(0, 1), (1, 2)]

    def test_singleton(self):
        g = from_edge_list(1, [])
        assert (g.n, g.m) == (1, 0)

    def test_g2_degrees(self, g2):
        assert g2.m == 15
        assert sorted(g2.degrees()) == [4, 4, 4, 4, 4, 5, 5]

    def test_duplicate_edges_collapse(self):
        assert from_edge_list(3, [(0, 1), (1, 0), (0, 1)]).m == 1

    @pytest.mark.parametrize("edges", [[(0, 0)], [(0, 3)], [(-1, 1)]])
    def test_rejects_bad_edges(self, edges):
        with pytest.raises(GraphError):
            from_edge_list(3, edges)

    def test_rejects_asymmetric(self):
        with pytest.raises(GraphError):
            Graph(2, (0b10, 0))

    def test_envelope(self):
        with pytest.raises(GraphError):
            from_edge_list(65, [])
        with pytest.raises(GraphError):
            join(families.empty(40), families.empty(30))

    @given(graphs())
    def test_invariants(self, g):
        assert sum(g.degrees()) == 2 * g.m
        for u in range(g.n):
            assert not g.has_edge(u, u)
            for v in g.neighbors(u):
                assert g.has_edge(v, u)
        assert Graph.from_mask(g.n, g.to_mask()) == g


class TestOperations:
    def test_complement_examples(self):
        assert complement(families.complete(4)) == families.empty(4)
        assert complement(families.empty(5)) == families.complete(5)
        assert complement(families.perfect_matching(6)) == families.turan(6, 3)

    @settings(max_examples=200)
    @given(graphs(7))
    def test_complement_involution(self, g):
        assert complement(complement(g)) == g

    def test_join_examples(self):
        assert join(families.empty(2), families.empty(3)) == families.complete_multipartite([2, 3])
        assert join(families.complete(1), families.complete(1)) == families.complete(2)
        e = families.empty
        assert join(e(4), join(e(3), e(3))) == families.turan(10, 3)

    def test_union_examples(self):
        k1, k3 = families.complete(1), families.complete(3)
        assert union(k1, k1) == families.empty(2)
        assert union(k3, k3).m == 6

    @given(graphs(4), graphs(4), graphs(4))
    def test_join_union_edge_identity(self, a, b, c):
        assert join(a, union(b, c)).m == a.m + b.m + c.m + a.n * (b.n + c.n)

    def test_duplicate_p4_gives_c4(self):
        g = duplicate_vertex(families.path(4), 0, 2)
        assert g.edges() == [(0, 1), (0, 3), (1, 2), (2, 3)]
        assert g.neighbors(0) == g.neighbors(2) == [1, 3]

    def test_duplicate_idempotent_on_duplicates(self):
        g = families.complete_multipartite([2, 3])
        assert duplicate_vertex(g, 0, 1) == g

    def test_duplicate_same_vertex(self):
        with pytest.raises(GraphError):
            duplicate_vertex(families.path(3), 1, 1)

    @pytest.mark.parametrize("n", range(2, 7))
    def test_duplicate_preserves_clique_freeness(self, n):
        for g in enumerate_connected(n, dedup=True):
            w = clique_number(g)
            for u, v in itertools.permutations(range(n), 2):
                h = duplicate_vertex(g, u, v)
                hw = clique_number(h)
                assert hw <= w
                nbhd = induced_subgraph(g, [x for x in g.neighbors(v) if x != u])
                assert hw <= max(w, (clique_number(nbhd) if nbhd.n else 0) + 1)


class TestInvariants:
    def test_clique_examples(self, g2):
        assert clique_number(families.complete(5)) == 5
        assert clique_number(families.turan(10, 3)) == 3
        assert clique_number(g2) == brute_clique(g2) == 3

    @settings(max_examples=300)
    @given(graphs(6))
    def test_clique_matches_brute_force(self, g):
        assert clique_number(g) == brute_clique(g)

    def test_chromatic_examples(self):
        assert chromatic_number(families.complete_multipartite([3, 4])) == 2
        assert chromatic_number(families.turan(9, 4)) == 4
        c5 = from_edge_list(5, [(i, (i + 1) % 5) for i in range(5)])
        assert chromatic_number(c5) == 3

    def test_chromatic_cap(self):
        with pytest.raises(GraphError):
            chromatic_number(families.path(17))

    @settings(max_examples=80, deadline=None)
    @given(graphs(6))
    def test_chromatic_matches_brute_force(self, g):
        assert chromatic_number(g) == brute_chromatic(g)

    @pytest.mark.parametrize("n", range(1, 8))
    def test_clique_at_most_chromatic(self, n):
        for g in enumerate_connected(n, dedup=True):
            assert clique_number(g) <= chromatic_number(g)

    def test_connectivity(self):
        k3 = families.complete(3)
        assert is_connected(families.complete(1))
        assert not is_connected(union(k3, k3))
        assert is_connected(families.kite(7, 4))

    def test_degree_profile_star(self):
        p = degree_profile(families.complete_multipartite([1, 3]))
        assert p.degrees == (3, 1, 1, 1)
        assert p.two_avg == (1.0, 3.0, 3.0, 3.0)

    def test_degree_profile_g2(self, g2):
        p = degree_profile(g2)
        assert p.degrees == (5, 5, 4, 4, 4, 4, 4)
        assert p.two_avg[4] == pytest.approx(21 / 5)  # v5: neighbour degrees 4,4,4,4,5

    def test_degree_profile_regular_and_isolated(self):
        p = degree_profile(families.complement_perfect_matching(8))
        assert set(p.two_avg) == {6.0}
        assert degree_profile(union(families.complete(2), families.complete(1))).two_avg[2] is None

    def test_multipartite_parts(self):
        assert multipartite_parts(families.turan(10, 3)) == [4, 3, 3]
        assert multipartite_parts(families.path(4)) is None
