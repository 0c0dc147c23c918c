import random
from itertools import combinations

import networkx as nx
import pytest

from tonal.canonical import CanonicalSize, canonical_colouring
from tonal.embed import find_embedding
from tonal.errors import SizeLimitError
from tonal.graph import Graph, PatternColouring, star_forest
from tonal.patterns import (automorphisms, burnside_count, enumerate_pattern_classes, graph_catalogue,
                            is_star_forest, patterns_equivalent, witness_pattern)

from oracles import naive_automorphisms, naive_equivalent

P4 = Graph.path(4)
K3 = Graph.complete(3)
K13 = star_forest([3])


def union(*graphs):
    edges, base = set(), 0
    for g in graphs:
        edges |= {(u + base, v + base) for u, v in g.edges}
        base += g.n
    return Graph(base, frozenset(edges))


@pytest.mark.parametrize("g,order", [(P4, 2), (K3, 6), (K13, 6)])
def test_automorphism_orders(g, order):
    auts = automorphisms(g)
    assert len(auts) == order
    assert set(auts) == naive_automorphisms(g)


def test_automorphisms_form_a_group():
    for g in graph_catalogue(5):
        auts = set(automorphisms(g))
        assert tuple(range(g.n)) in auts
        for a in auts:
            inv = [0] * g.n
            for i, x in enumerate(a):
                inv[x] = i
            assert tuple(inv) in auts
            for b in auts:
                assert tuple(a[b[i]] for i in range(g.n)) in auts


def test_automorphisms_match_bruteforce_catalogue():
    for g in graph_catalogue(5):
        assert set(automorphisms(g)) == naive_automorphisms(g)


def test_guard():
    with pytest.raises(SizeLimitError, match="10"):
        automorphisms(Graph(11, frozenset()))


def test_equivalent_end_blue_both_ends():
    a = PatternColouring(P4, frozenset({(1, 2), (2, 3)}))
    b = PatternColouring(P4, frozenset({(0, 1), (1, 2)}))
    assert patterns_equivalent(a, b)


def test_middle_blue_not_equivalent_to_end_blue(rbr_p4):
    end = PatternColouring(P4, frozenset({(1, 2), (2, 3)}))
    assert not patterns_equivalent(rbr_p4, end)
    assert patterns_equivalent(rbr_p4, rbr_p4)


def _coloured_small(max_n):
    for g in graph_catalogue(max_n):
        for mask in range(1 << g.e):
            yield PatternColouring.from_mask(g, mask)


def test_equivalence_matches_naive_relabelled():
    rng = random.Random(0)
    items = list(_coloured_small(4))
    for pc in items:
        perm = list(range(pc.graph.n))
        rng.shuffle(perm)
        moved = PatternColouring(pc.graph.relabel(perm),
                                 frozenset(tuple(sorted((perm[u], perm[v]))) for u, v in pc.red))
        assert patterns_equivalent(pc, moved)
    for _ in range(3000):
        a, b = rng.choice(items), rng.choice(items)
        assert patterns_equivalent(a, b) == naive_equivalent(a, b)


def test_equivalence_reflexive_symmetric():
    items = [pc for pc in _coloured_small(4) if pc.graph.n == 4]
    for a in items:
        assert patterns_equivalent(a, a)
    rng = random.Random(1)
    for _ in range(2000):
        a, b = rng.choice(items), rng.choice(items)
        assert patterns_equivalent(a, b) == patterns_equivalent(b, a)


def test_equivalence_transitive_within_orbits():
    rng = random.Random(2)
    g = Graph(5, frozenset({(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 2)}))
    auts = automorphisms(g)
    for _ in range(100):
        mask = rng.randrange(1 << g.e)
        base = PatternColouring.from_mask(g, mask)
        orbit = []
        for p in rng.sample(auts, min(3, len(auts))):
            orbit.append(PatternColouring(g, frozenset(tuple(sorted((p[u], p[v]))) for u, v in base.red)))
        a, b, c = (orbit * 3)[:3]
        assert patterns_equivalent(a, b) and patterns_equivalent(b, c) and patterns_equivalent(a, c)


@pytest.mark.parametrize("p", [1, 2, 3, 4, 5])
def test_star_one_class_per_tone(p):
    classes = enumerate_pattern_classes(star_forest([p]))
    assert len(classes) == p + 1
    assert sorted(c.tone for c in classes) == [(r, p - r) for r in range(p + 1)]


def test_p4_classes():
    classes = enumerate_pattern_classes(P4)
    assert len(classes) == 6 == (2 ** 3 + 2 ** 2) // 2
    two_one = [c for c in classes if c.tone == (2, 1)]
    assert len(two_one) == 2
    middles = {c.representative.colour_of(1, 2).value for c in two_one}
    assert middles == {"R", "B"}


def test_k3_classes():
    classes = enumerate_pattern_classes(K3)
    assert len(classes) == 4 == (8 + 3 * 4 + 2 * 2) // 6
    assert [c.tone for c in classes] == [(3, 0), (2, 1), (1, 2), (0, 3)]


def test_classes_sorted_and_deterministic():
    a = enumerate_pattern_classes(P4)
    b = enumerate_pattern_classes(P4)
    assert a == b
    rs = [c.tone[0] for c in a]
    assert rs == sorted(rs, reverse=True)


def test_class_sums_and_burnside_catalogue():
    for g in graph_catalogue(5):
        classes = enumerate_pattern_classes(g)
        assert sum(c.orbit_size for c in classes) == 2 ** g.e
        assert len(classes) == burnside_count(g, sorted(naive_automorphisms(g)))
        for c in classes:
            assert c.representative.r == c.tone[0]
            assert len(automorphisms(g)) % c.orbit_size == 0
        # no two representatives equivalent
        codes = {pc.id: pc for pc in classes}
        for x, y in combinations(codes.values(), 2):
            if x.tone == y.tone:
                assert not naive_equivalent(x.representative, y.representative)


def test_is_star_forest_examples():
    assert is_star_forest(union(star_forest([3]), star_forest([1])))
    assert not is_star_forest(K3)
    assert not is_star_forest(P4)
    assert is_star_forest(Graph(3, frozenset()))


def _nx_star_forest(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    for comp in nx.connected_components(h):
        sub = h.subgraph(comp)
        if len(comp) > 2 and not (nx.is_tree(sub) and max(d for _, d in sub.degree()) == len(comp) - 1):
            return False
    return True


def test_witness_absent_iff_star_forest_catalogue7():
    for g in graph_catalogue(7):
        assert is_star_forest(g) == _nx_star_forest(g)
        if g.e == 0:
            continue
        wp = witness_pattern(g)
        assert (wp is None) == is_star_forest(g)
        if wp is not None:
            assert wp.tone == (g.e - 1, 1)


def test_witness_examples(rbr_p4):
    assert witness_pattern(K13) is None
    assert witness_pattern(P4) == rbr_p4
    g = union(star_forest([2]), P4)
    wp = witness_pattern(g)
    assert wp.graph.edges - wp.red == {(4, 5)}
    tri = witness_pattern(K3)
    assert tri.tone == (2, 1)


def test_witness_rejects_edgeless():
    with pytest.raises(ValueError):
        witness_pattern(Graph(3, frozenset()))


def test_witness_unembeddable_in_canonical_hosts():
    hosts = [canonical_colouring(CanonicalSize(4, 3)), canonical_colouring(CanonicalSize(21, 15))]
    for g in graph_catalogue(6):
        if g.e == 0 or is_star_forest(g):
            continue
        wp = witness_pattern(g)
        for h in hosts:
            if h.n >= g.n:
                assert find_embedding(h, wp) is None
