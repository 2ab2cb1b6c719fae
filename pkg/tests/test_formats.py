from __future__ import annotations

import pytest
from hypothesis import given

from oracles import graphs, instances
from sigmacolor import FullHypergraph, Graph, Ordering, ParseError, ValidationError, gen_star_example
from sigmacolor import formats


class TestGraphFormat:
    def test_comments_and_blank_lines(self):
        text = "# a triangle\n3 3\n0 1\n\n1 2  # chord\n0 2\n"
        assert formats.parse_graph(text) == Graph.complete(3)

    @pytest.mark.parametrize(
        "text, line",
        [
            ("3 2\n0 1\n0 1\n", 3),
            ("3 1\n1 1\n", 2),
            ("3 1\n1 0\n", 2),
            ("3 1\n0 5\n", 2),
            ("3 1\n0 x\n", 2),
        ],
    )
    def test_errors_carry_line(self, text, line):
        with pytest.raises(ParseError) as err:
            formats.parse_graph(text)
        assert err.value.line == line

    def test_count_mismatch(self):
        with pytest.raises(ParseError):
            formats.parse_graph("3 2\n0 1\n")

    def test_missing_header(self):
        with pytest.raises(ParseError):
            formats.parse_graph("# nothing\n")

    @given(graphs())
    def test_round_trip(self, g):
        assert formats.parse_graph(formats.format_graph(g)) == g


class TestSigmaFormat:
    def test_absent_vertices_empty(self):
        g = Graph.path(3)
        s = formats.parse_sigma("1: 0 2\n", g)
        assert s.sigma == (frozenset(), frozenset({0, 2}), frozenset())

    def test_depth_header(self):
        g, s, _ = gen_star_example(3)
        assert formats.parse_sigma(formats.format_sigma(s), g) == s

    def test_default_depth(self):
        g = Graph.path(3)
        assert formats.parse_sigma("0: 2\n", g, default_depth=2).depth == 2

    def test_repeated_vertex(self):
        with pytest.raises(ParseError) as err:
            formats.parse_sigma("1: 0\n1: 2\n", Graph.path(3))
        assert err.value.line == 2

    def test_validation_names_vertex(self):
        with pytest.raises(ValidationError) as err:
            formats.parse_sigma("0: 2\n", Graph.path(3))
        assert err.value.vertex == 0

    def test_clamp(self):
        s = formats.parse_sigma("0: 1 2\n", Graph.path(3), clamp=True)
        assert s[0] == {1} and s.dropped == {0: {2}}

    def test_garbage(self):
        with pytest.raises(ParseError):
            formats.parse_sigma("depth 1\nhello\n", Graph.path(3))

    @given(instances())
    def test_round_trip(self, inst):
        g, s = inst
        assert formats.parse_sigma(formats.format_sigma(s), g) == s


class TestOtherFormats:
    def test_ordering(self):
        o = formats.parse_ordering("2 0 1\n")
        assert o == Ordering([2, 0, 1])
        assert formats.format_ordering(o) == "2 0 1\n"

    def test_ordering_not_permutation(self):
        with pytest.raises(ParseError):
            formats.parse_ordering("0 0 1\n")

    def test_lists(self):
        lists = formats.parse_lists("0: 3 1\n1: 2\n", 2)
        assert lists[0] == (1, 3) and lists[1] == (2,)

    def test_lists_missing_vertex(self):
        with pytest.raises(ParseError):
            formats.parse_lists("0: 1\n", 2)

    def test_hypergraph_round_trip(self):
        h = FullHypergraph(range(4), [(0, 1, 2), (0, 3), (1, 3), (2, 3)])
        back = formats.parse_hypergraph(formats.format_hypergraph(h))
        assert back.hyperedges == h.hyperedges

    def test_hypergraph_not_full(self):
        with pytest.raises(ParseError):
            formats.parse_hypergraph("3 1\n0 1\n")
