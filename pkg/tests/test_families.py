from __future__ import annotations

from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sigmacolor import (
    Graph,
    NeighborhoodSystem,
    PathTooLong,
    ValidationError,
    build_sigma_graph,
    chromatic_number_exact,
    encode_depth_d_system,
    gen_random_instance,
    gen_star_example,
    gen_subdivided_biclique,
    gen_subdivided_clique,
    gen_subdivision,
    maximum_average_degree,
    rho,
    sigma_chromatic_exact,
    star_chromatic_exact,
)


def is_tree(g: Graph) -> bool:
    if g.m != g.n - 1:
        return False
    seen, stack = {0}, [0]
    while stack:
        for y in g.adj[stack.pop()]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == g.n


class TestSubdividedClique:
    def test_k4_counts(self):
        g, s, stats = gen_subdivided_clique(4)
        assert (g.n, g.m, rho(s), s.depth) == (10, 12, 2, 1)
        assert stats["vertices"] == 10 and stats["edges"] == 12

    def test_k2_is_p3(self):
        g, s, _ = gen_subdivided_clique(2)
        assert g == Graph(3, [(0, 2), (1, 2)])
        assert s[2] == {0, 1}

    def test_labels_branch_first(self):
        g, s, _ = gen_subdivided_clique(4)
        # subdividers follow in lexicographic edge order
        assert [sorted(s[w]) for w in range(4, 10)] == [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]]

    @pytest.mark.parametrize("n", range(2, 8))
    def test_chromatic_is_n(self, n):
        g, s, stats = gen_subdivided_clique(n)
        assert sigma_chromatic_exact(g, s, cap=g.n) == n == stats["chi_sigma_lower"] == stats["chi_sigma_upper"]

    def test_rejects_small(self):
        with pytest.raises(ValueError):
            gen_subdivided_clique(1)


class TestSubdividedBiclique:
    def test_counts(self):
        g, s, stats = gen_subdivided_biclique(3)
        assert (g.n, g.m) == (15, 18) and s is None
        assert stats["star_chromatic_upper"] == 3

    def test_h1_is_p3(self):
        g = gen_subdivided_biclique(1).graph
        assert g == Graph(3, [(0, 2), (1, 2)])

    def test_star_chromatic_at_most_three(self):
        g = gen_subdivided_biclique(3).graph
        assert star_chromatic_exact(g, cap=g.n)[0] <= 3


class TestStarExample:
    def test_n4(self):
        g, s, _ = gen_star_example(4)
        assert g.n == 11 and sigma_chromatic_exact(g, s) == 4

    def test_n2(self):
        g, s, _ = gen_star_example(2)
        assert sigma_chromatic_exact(g, s) == 2

    def test_depth_validation(self):
        g, s, _ = gen_star_example(3)
        with pytest.raises(ValidationError):
            NeighborhoodSystem(g, s.sigma, depth=1)
        NeighborhoodSystem(g, s.sigma, depth=2)

    @pytest.mark.parametrize("n", range(2, 8))
    def test_tree_with_large_chromatic(self, n):
        g, s, stats = gen_star_example(n)
        assert is_tree(g) and maximum_average_degree(g) <= 2
        assert g.n == 1 + n + comb(n, 2) == stats["vertices"]
        assert rho(s) == 2 and sigma_chromatic_exact(g, s, cap=g.n) == n


class TestSubdivision:
    def test_zero_counts(self):
        h = Graph.cycle(4)
        g, emb = gen_subdivision(h, [0] * 4)
        assert g == h and emb.branch == (0, 1, 2, 3)

    def test_one_subdivision_of_k4(self):
        g, _ = gen_subdivision(Graph.complete(4), [1] * 6)
        assert g == gen_subdivided_clique(4).graph

    def test_mixed_counts_on_triangle(self):
        g, emb = gen_subdivision(Graph.complete(3), [2, 0, 3])
        assert g.n == 3 + 5
        assert [len(p) - 1 for p in emb.paths] == [3, 1, 4]

    def test_bad_counts(self):
        with pytest.raises(ValidationError):
            gen_subdivision(Graph.complete(3), [1, 1])
        with pytest.raises(ValidationError):
            gen_subdivision(Graph.complete(3), [1, -1, 1])


class TestEncode:
    def test_subdivided_k4(self):
        g, emb = gen_subdivision(Graph.complete(4), [1] * 6)
        s = encode_depth_d_system(g, emb, 1)
        assert s.depth == 3 and rho(s) == 2
        assert sigma_chromatic_exact(g, s) >= 4

    def test_single_edge_pattern(self):
        g, emb = gen_subdivision(Graph.path(2), [2])
        s = encode_depth_d_system(g, emb, 1)
        assert build_sigma_graph(g, s).edges == {(0, 1)}
        assert s[2] == {0, 1}  # first internal vertex of a 3-edge path

    def test_c5_three_subdivision(self):
        g, emb = gen_subdivision(Graph.cycle(5), [3] * 5)
        s = encode_depth_d_system(g, emb, 1)
        assert sigma_chromatic_exact(g, s) >= 3

    def test_path_too_long(self):
        g, emb = gen_subdivision(Graph.path(2), [6])
        with pytest.raises(PathTooLong):
            encode_depth_d_system(g, emb, 1)

    def test_needs_internal_vertex(self):
        g, emb = gen_subdivision(Graph.path(2), [0])
        with pytest.raises(PathTooLong):
            encode_depth_d_system(g, emb, 1)

    @given(st.sampled_from([Graph.complete(4), Graph.cycle(5), Graph.complete(3), Graph.path(4)]), st.integers(1, 2), st.data())
    @settings(max_examples=40, deadline=None)
    def test_chromatic_dominates_pattern(self, h, d, data):
        counts = data.draw(st.lists(st.integers(1, 4 * d + 1), min_size=h.m, max_size=h.m))
        g, emb = gen_subdivision(h, counts)
        s = encode_depth_d_system(g, emb, d)
        assert s.depth == 2 * d + 1 and rho(s) == 2
        gs = build_sigma_graph(g, s)
        assert all(gs.has_edge(u, v) for u, v in h.edges)
        assert sigma_chromatic_exact(g, s, cap=g.n) >= chromatic_number_exact(h)[0]


class TestRandom:
    def test_no_edges(self):
        g, s, _ = gen_random_instance(6, 0.0, 3, seed=1)
        assert g.m == 0 and rho(s) == 0

    def test_rho_cap_zero(self):
        g, s, _ = gen_random_instance(6, 0.9, 0, seed=1)
        assert rho(s) == 0

    def test_deterministic(self):
        assert gen_random_instance(9, 0.4, 3, seed=7) == gen_random_instance(9, 0.4, 3, seed=7)

    def test_bad_arguments(self):
        with pytest.raises(ValueError):
            gen_random_instance(4, 1.5, 2, seed=0)
        with pytest.raises(ValueError):
            gen_random_instance(4, 0.5, -1, seed=0)

    @given(st.integers(1, 12), st.floats(0, 1), st.integers(0, 5), st.integers(0, 1000), st.integers(1, 3))
    def test_stats_match(self, n, p, cap, seed, depth):
        g, s, stats = gen_random_instance(n, p, cap, seed=seed, depth=depth)
        assert rho(s) <= cap and s.depth == depth
        assert (stats["vertices"], stats["edges"], stats["rho"]) == (g.n, g.m, rho(s))
