from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from tonal.graph import ColouredHost, Colour, Graph, PatternColouring, star_forest
from tonal.io import (ParseError, format_coloured, format_graph, parse_coloured, parse_graph,
                      parse_graph6, parse_host, to_graph6)
from tonal.patterns import is_star_forest


def test_star_forest_single_star():
    g = star_forest([3])
    assert (g.n, g.e) == (4, 3)
    assert sorted(g.degree(v) for v in range(g.n)) == [1, 1, 1, 3]


def test_star_forest_two_parts():
    g = star_forest([2, 1])
    assert (g.n, g.e) == (5, 3)
    assert sorted((g.degree(v) for v in range(g.n)), reverse=True) == [2, 1, 1, 1, 1]


def test_star_forest_matching():
    g = star_forest([1, 1])
    assert g.n == 4 and g.e == 2
    assert all(g.degree(v) == 1 for v in range(4))


@pytest.mark.parametrize("parts", [[], [0], [2, -1], [1, 2]])
def test_star_forest_rejects(parts):
    with pytest.raises(ValueError):
        star_forest(parts)


@given(st.lists(st.integers(1, 5), min_size=1, max_size=4))
def test_star_forest_components_are_stars(parts):
    parts = sorted(parts, reverse=True)
    g = star_forest(parts)
    comps = g.components()
    assert len(comps) == len(parts)
    assert is_star_forest(g)
    assert g.n == sum(p + 1 for p in parts) and g.e == sum(parts)


def test_graph_rejects_loops_and_range():
    with pytest.raises(ValueError):
        Graph(3, frozenset({(1, 1)}))
    with pytest.raises(ValueError):
        Graph(3, frozenset({(0, 3)}))
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 1), (1, 0)])


def test_pattern_counts_consistent():
    pc = PatternColouring(Graph.complete(3), frozenset({(0, 1), (1, 2), (0, 2)}))
    assert pc.tone == (3, 0)
    assert list(pc.colour.values()).count(Colour.RED) == pc.r
    assert pc.swapped().tone == (0, 3)


def test_host_counts_and_partition():
    h = ColouredHost.from_red_edges(5, [(0, 1), (2, 3)])
    assert h.red_count == 2 and h.blue_count == 8
    assert all(h.red[v] & h.blue[v] == 0 for v in range(5))
    assert h.flipped(0, 1).red_count == 1
    assert h.swapped().red_count == 8
    assert ColouredHost.from_edge_mask(5, h.edge_mask) == h


# serialization ------------------------------------------------------------

def test_parse_edge_list_p4():
    g = parse_graph("p 4\ne 0 1\ne 1 2\ne 2 3")
    assert g == Graph.path(4)


def test_parse_graph6_k4():
    g = parse_graph("C~")
    assert g.n == 4 and g.e == 6
    ref = nx.from_graph6_bytes(b"C~")
    assert {tuple(sorted(e)) for e in ref.edges()} == g.edges


def test_parse_coloured_rbr():
    pc = parse_coloured("p 4\ne 0 1 R\ne 1 2 B\ne 2 3 R")
    assert pc.tone == (2, 1)
    assert pc.colour_of(1, 2) is Colour.BLUE and pc.colour_of(0, 1) is Colour.RED


def test_parse_coloured_all_red_triangle():
    pc = parse_coloured("e 0 1 R\ne 1 2 R\ne 0 2 R")
    assert pc.graph == Graph.complete(3) and pc.tone == (3, 0)


@pytest.mark.parametrize("text,fragment,offset", [
    ("e 0 0", "self-loop", 0),
    ("e 0 1 R\ne 0 1 B", "conflicting", 8),
    ("p 3\ne 0 1\ne 1 0", "duplicate", 10),
    ("p 2\ne 0 5", "out of range", 4),
    ("p x", "malformed header", 0),
    ("# c\nq 1 2", "unknown line", 4),
])
def test_parse_errors(text, fragment, offset):
    with pytest.raises(ParseError) as err:
        parse_coloured(text) if "R" in text else parse_graph(text)
    assert fragment in str(err.value)
    assert err.value.offset == offset


def test_missing_colour_token():
    with pytest.raises(ParseError, match="missing colour"):
        parse_coloured("p 2\ne 0 1")


def test_host_must_be_complete():
    with pytest.raises(ParseError):
        parse_host("p 3\ne 0 1 R")


def test_comments_ignored():
    assert parse_graph("# hello\np 2 # order\ne 0 1\n").edges == {(0, 1)}


def test_graph6_bad_bytes():
    with pytest.raises(ParseError):
        parse_graph6("C\x01")
    with pytest.raises(ParseError):
        parse_graph6("C~~")


def _all_graphs(n):
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, frozenset(p for i, p in enumerate(pairs) if mask >> i & 1))


@pytest.mark.parametrize("n", range(0, 6))
def test_roundtrip_exhaustive(n):
    for g in _all_graphs(n):
        assert parse_graph(format_graph(g)) == g
        assert parse_graph6(to_graph6(g)) == g
        assert to_graph6(g) == nx.to_graph6_bytes(_nx(g), header=False).decode().strip()
        # one colouring per graph is enough; colourings are covered below
        pc = PatternColouring(g, frozenset(g.edge_list[::2]))
        assert parse_coloured(format_coloured(pc)) == pc


def _nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


@st.composite
def coloured_graphs(draw, max_n=10):
    n = draw(st.integers(0, max_n))
    pairs = list(combinations(range(n), 2))
    edges = draw(st.sets(st.sampled_from(pairs))) if pairs else set()
    red = draw(st.sets(st.sampled_from(sorted(edges)))) if edges else set()
    return PatternColouring(Graph(n, frozenset(edges)), frozenset(red))


@settings(max_examples=200)
@given(coloured_graphs())
def test_roundtrip_random(pc):
    g = pc.graph
    back = parse_coloured(format_coloured(pc))
    assert back == pc
    assert back.r + back.b == g.e
    assert parse_graph6(to_graph6(g)) == g
    ref = nx.from_graph6_bytes(to_graph6(g).encode())
    assert ref.number_of_nodes() == g.n and {tuple(sorted(e)) for e in ref.edges()} == g.edges


def test_large_graph6_size_field():
    g = Graph(70, frozenset({(0, 69), (3, 4)}))
    s = to_graph6(g)
    assert s[0] == "~"
    assert parse_graph6(s) == g
    assert parse_graph6(">>graph6<<" + s) == g
