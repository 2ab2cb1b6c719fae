from __future__ import annotations

from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_arrangeability, graphs, ordering_cost
from sigmacolor import (
    Graph,
    InstanceTooLarge,
    Ordering,
    arrangeability_exact,
    arrangeability_of_ordering,
    gen_subdivided_biclique,
    heuristic_ordering,
)
from sigmacolor.arrangeability import vertex_costs
from sigmacolor.graph import back_degrees, degeneracy_ordering


def random_tree(n: int, parents: list[int]) -> Graph:
    return Graph(n, [(parents[i - 1] % i, i) for i in range(1, n)])


class TestOfOrdering:
    def test_edgeless(self):
        cert = arrangeability_of_ordering(Graph(4), Ordering([2, 0, 3, 1]))
        assert cert.k == 0

    def test_star_center_first_and_last(self):
        g = Graph.star(4)
        assert arrangeability_of_ordering(g, Ordering([0, 1, 2, 3, 4])).k == 0
        last = arrangeability_of_ordering(g, Ordering([1, 2, 3, 4, 0]))
        # the last leaf sees the three earlier leaves through the center
        assert last.k == 3 and last.worst_vertex == 4

    def test_worst_vertex_attains_k(self):
        g = Graph.cycle(6)
        cert = arrangeability_of_ordering(g, Ordering([3, 1, 5, 0, 2, 4]))
        assert vertex_costs(g, cert.ordering)[cert.worst_vertex] == cert.k

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            arrangeability_of_ordering(Graph(3), Ordering([0, 1]))

    @given(graphs(max_n=8), st.randoms(use_true_random=False))
    def test_matches_definition(self, g, rnd):
        perm = list(range(g.n))
        rnd.shuffle(perm)
        assert arrangeability_of_ordering(g, Ordering(perm)).k == ordering_cost(g, perm)


class TestExact:
    def test_path_p4(self):
        cert = arrangeability_exact(Graph.path(4))
        assert cert.k == brute_arrangeability(Graph.path(4))[0] == 0

    def test_k4(self):
        assert arrangeability_exact(Graph.complete(4)).k == 2
        assert all(ordering_cost(Graph.complete(4), p) == 2 for p in permutations(range(4)))

    def test_edgeless(self):
        assert arrangeability_exact(Graph(6)).k == 0

    def test_cap(self):
        with pytest.raises(InstanceTooLarge):
            arrangeability_exact(Graph(11))

    def test_subdivided_biclique_h3(self):
        g = gen_subdivided_biclique(3).graph
        assert arrangeability_exact(g, cap=g.n).k >= 1

    @given(graphs(max_n=7))
    @settings(max_examples=80, deadline=None)
    def test_matches_exhaustive_search(self, g):
        cert = arrangeability_exact(g)
        k, first = brute_arrangeability(g)
        assert cert.k == k
        # permutations() enumerates in lexicographic order, so ``first`` is the
        # lexicographically smallest optimal ordering
        assert cert.ordering.perm == first
        assert arrangeability_of_ordering(g, cert.ordering).k == cert.k

    @given(graphs(max_n=8), st.randoms(use_true_random=False))
    @settings(deadline=None)
    def test_minimal(self, g, rnd):
        perm = list(range(g.n))
        rnd.shuffle(perm)
        assert arrangeability_exact(g).k <= arrangeability_of_ordering(g, Ordering(perm)).k

    @given(graphs(max_n=8))
    @settings(deadline=None)
    def test_back_degree_at_most_k_plus_one(self, g):
        cert = arrangeability_exact(g)
        assert max(back_degrees(g, cert.ordering), default=0) <= cert.k + 1


class TestHeuristic:
    def test_k4(self):
        assert arrangeability_of_ordering(Graph.complete(4), heuristic_ordering(Graph.complete(4))).k == 2

    def test_edgeless(self):
        assert arrangeability_of_ordering(Graph(5), heuristic_ordering(Graph(5))).k == 0

    @given(st.integers(1, 12).flatmap(lambda n: st.tuples(st.just(n), st.lists(st.integers(0, 100), min_size=n - 1, max_size=n - 1))))
    def test_tree_at_most_one(self, data):
        n, parents = data
        g = random_tree(n, parents)
        assert arrangeability_of_ordering(g, heuristic_ordering(g)).k <= 1

    @given(graphs())
    def test_is_degeneracy_ordering(self, g):
        assert heuristic_ordering(g) == degeneracy_ordering(g)[0]
