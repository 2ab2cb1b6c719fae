from __future__ import annotations

from itertools import permutations

import pytest
from hypothesis import given, settings

from oracles import brute_chromatic, brute_clique, graphs
from sigmacolor import (
    Coloring,
    Graph,
    InstanceTooLarge,
    Ordering,
    ValidationError,
    chromatic_number_exact,
    clique_number_exact,
    degeneracy_ordering,
    gen_subdivided_clique,
    is_proper,
    neighborhood_at_depth,
)
from sigmacolor.graph import back_degrees, bfs_distances, dsatur_coloring


def k4_subdivided() -> Graph:
    return gen_subdivided_clique(4).graph


class TestGraph:
    def test_rejects_self_loop(self):
        with pytest.raises(ValidationError):
            Graph(3, [(1, 1)])

    def test_rejects_out_of_range(self):
        with pytest.raises(ValidationError):
            Graph(2, [(0, 2)])

    def test_parallel_edges_collapse(self):
        g = Graph(3, [(0, 1), (1, 0)])
        assert g.m == 1
        assert g.adj == ((1,), (0,), ())

    @given(graphs())
    def test_adjacency_consistent(self, g):
        for v in range(g.n):
            assert list(g.adj[v]) == sorted(g.adj[v])
            for u in g.adj[v]:
                assert v in g.adj[u]
                assert (min(u, v), max(u, v)) in g.edges

    def test_induced_subgraph_relabels(self):
        g = Graph.cycle(5)
        sub, labels = g.induced_subgraph([4, 0, 1])
        assert labels == [0, 1, 4]
        assert sub.sorted_edges() == [(0, 1), (0, 2)]


class TestOrdering:
    def test_rejects_non_permutation(self):
        with pytest.raises(ValidationError):
            Ordering([0, 0, 1])

    def test_position_is_inverse(self):
        o = Ordering([2, 0, 1])
        assert all(o.position[o.perm[i]] == i for i in range(3))


class TestDegeneracy:
    def test_edgeless(self):
        assert degeneracy_ordering(Graph(5))[1] == 0

    def test_complete(self):
        assert degeneracy_ordering(Graph.complete(4))[1] == 3

    def test_subdivided_k4_matches_exhaustive(self):
        g = k4_subdivided()
        assert degeneracy_ordering(g)[1] == 2
        # every vertex has degree >= 2, so no ordering does better than 2;
        # branch vertices first attains it
        assert min(g.degree(v) for v in range(g.n)) == 2
        best = min(
            max(back_degrees(g, Ordering(list(p) + list(range(4, 10)))))
            for p in permutations(range(4))
        )
        assert best == 2

    @given(graphs())
    def test_back_degree_bounded(self, g):
        order, d = degeneracy_ordering(g)
        assert max(back_degrees(g, order), default=0) <= d

    @given(graphs(max_n=7))
    @settings(max_examples=60)
    def test_degeneracy_is_minimum_back_degree(self, g):
        _, d = degeneracy_ordering(g)
        best = min(
            (max(back_degrees(g, Ordering(p)), default=0) for p in permutations(range(g.n))),
            default=0,
        )
        assert d == best


class TestNeighborhood:
    def test_path(self):
        assert neighborhood_at_depth(Graph.path(3), 0, 2) == {1, 2}

    def test_isolated(self):
        assert neighborhood_at_depth(Graph(3), 1, 4) == frozenset()

    def test_cycle(self):
        assert neighborhood_at_depth(Graph.cycle(6), 0, 2) == {1, 2, 4, 5}

    def test_depth_must_be_positive(self):
        with pytest.raises(ValueError):
            neighborhood_at_depth(Graph.path(3), 0, 0)

    @given(graphs(min_n=1))
    def test_matches_distances(self, g):
        dist = bfs_distances(g, 0)
        for d in (1, 2, 3):
            assert neighborhood_at_depth(g, 0, d) == {v for v in range(g.n) if 1 <= dist[v] <= d}


class TestChromatic:
    def test_complete(self):
        assert chromatic_number_exact(Graph.complete(5))[0] == 5

    def test_odd_cycle(self):
        assert chromatic_number_exact(Graph.cycle(5))[0] == 3

    def test_subdivided_k4_bipartite(self):
        k, c = chromatic_number_exact(k4_subdivided())
        assert k == 2 and is_proper(k4_subdivided(), c)

    def test_cap(self):
        with pytest.raises(InstanceTooLarge):
            chromatic_number_exact(Graph(25))
        assert chromatic_number_exact(Graph(25), cap=30)[0] == 1

    @given(graphs(max_n=8))
    @settings(max_examples=150)
    def test_matches_brute_force(self, g):
        k, c = chromatic_number_exact(g)
        assert k == brute_chromatic(g)
        assert is_proper(g, c)
        assert c.palette_size == k

    @given(graphs(max_n=9))
    def test_sandwich(self, g):
        k, _ = chromatic_number_exact(g)
        assert clique_number_exact(g)[0] <= k <= degeneracy_ordering(g)[1] + 1

    def test_witness_deterministic(self):
        g = Graph.cycle(7)
        assert chromatic_number_exact(g)[1] == chromatic_number_exact(g)[1]


class TestClique:
    def test_complete(self):
        assert clique_number_exact(Graph.complete(6))[0] == 6

    def test_forest(self):
        assert clique_number_exact(Graph.path(6))[0] == 2

    def test_c5_with_chord(self):
        g = Graph(5, list(Graph.cycle(5).edges) + [(0, 2)])
        size, members = clique_number_exact(g)
        assert size == 3 and members == {0, 1, 2}

    def test_cap(self):
        with pytest.raises(InstanceTooLarge):
            clique_number_exact(Graph(65))

    @given(graphs(max_n=9))
    @settings(max_examples=150)
    def test_matches_brute_force(self, g):
        size, members = clique_number_exact(g)
        assert size == brute_clique(g)
        assert len(members) == size
        assert all(g.has_edge(u, v) for u in members for v in members if u < v)


class TestProper:
    def test_monochromatic_edge(self):
        assert not is_proper(Graph.complete(2), Coloring([0, 0]))

    def test_all_distinct(self):
        assert is_proper(Graph.complete(4), Coloring(range(4)))

    def test_alternating_c4(self):
        assert is_proper(Graph.cycle(4), Coloring([0, 1, 0, 1]))

    @given(graphs())
    def test_dsatur_proper(self, g):
        assert is_proper(g, dsatur_coloring(g))
