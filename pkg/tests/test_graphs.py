import random

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from kbracket import chords
from kbracket.graphs import (Graph, RootedGraph, attach_hexagon, brick_search,
                             brick_type, building_complicated, building_simple,
                             circle_word, cycle, f_naive, f_reduced, family_F,
                             family_G, graph_from_text, graph_to_text, hexagon,
                             is_isomorphic, negate, path, realize_as_chord_diagram,
                             star_join)


def random_graph(rng, n, p=0.4):
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Graph.from_edges(edges, vertices=range(n))


def test_f_ground_values():
    assert f_naive(Graph(frozenset(), frozenset())) == 1
    assert f_naive(path(1)) == 0
    assert f_naive(path(2)) == -1
    assert f_naive(path(3)) == -1
    assert f_naive(cycle(6)) == 2


def test_f_reduced_small_paths():
    assert f_reduced(path(2)) == -1
    # the reduction laws force f(L_4) = -f(L_1) = 0 and f(L_5) = -f(L_2) = 1
    assert f_reduced(path(4)) == 0
    assert f_reduced(path(5)) == 1


def test_path_recursion():
    for n in range(4, 31):
        assert f_reduced(path(n)) == -f_reduced(path(n - 3))


def test_cycle_recursion():
    for n in range(4, 31):
        assert f_reduced(cycle(n)) == f_reduced(path(n - 1)) - f_reduced(path(n - 3))


def test_hexagon_brick():
    assert brick_type(hexagon()) == (2, 1)


def test_l3_brick():
    assert brick_type(RootedGraph(path(3), 0)) == (-1, -1)


def test_l1_brick():
    assert brick_type(RootedGraph(path(1), 0)) == (0, 1)


def test_star_join_paths():
    assert is_isomorphic(star_join(RootedGraph(path(1), 0), RootedGraph(path(1), 0)),
                         path(2))
    assert is_isomorphic(star_join(RootedGraph(path(1), 0), RootedGraph(path(2), 0)),
                         path(3))


def test_negate_hexagon():
    assert f_reduced(negate(hexagon())) == -2


def test_negate_l1():
    assert f_reduced(negate(RootedGraph(path(1), 0))) == 0


def test_attach_hexagon_brick_progression():
    rg = hexagon()
    assert brick_type(rg) == (2, 1)
    rg = attach_hexagon(rg)
    assert brick_type(rg) == (3, 1)
    rg = attach_hexagon(rg)
    assert brick_type(rg) == (4, 1)


def test_attach_hexagon_law_against_oracle():
    rng = random.Random(11)
    for _ in range(5):
        g = random_graph(rng, rng.randint(1, 6))
        root = rng.choice(sorted(g.vertices))
        rg = RootedGraph(g, root)
        grown = attach_hexagon(rg)
        assert f_naive(grown.graph) == f_naive(g) + f_naive(g.without(root))


def test_family_g_values():
    for r in range(1, 6):
        rg = family_G(r)
        assert f_reduced(rg.graph) == r + 1
        assert brick_type(rg) == (r + 1, 1)
        if r <= 3:
            assert f_naive(rg.graph) == r + 1


def test_family_f_fibonacci():
    fib = [2, 3, 5, 8, 13, 21]
    for r in range(1, 7):
        rg = family_F(r)
        assert f_reduced(rg.graph) == fib[r - 1]
        if r >= 2:
            assert brick_type(rg) == (fib[r - 1], fib[r - 2])
        if r <= 3:
            assert f_naive(rg.graph) == fib[r - 1]


def test_building_simple_hexagons():
    H = hexagon()
    S = building_simple([H, H, H])
    assert (f_naive(S.graph), f_naive(S.graph.without(S.center))) == (7, 8)


def test_building_single_brick():
    H = hexagon()
    S = building_simple([H])
    assert f_naive(S.graph) == 2 - 1


def test_building_complicated_hexagons():
    H = hexagon()
    C = building_complicated([H, H])
    assert (f_naive(C.graph), f_naive(C.graph.without(C.center))) == (-3, 1)
    C1 = building_complicated([H])
    assert (f_naive(C1.graph), f_naive(C1.graph.without(C1.brick_roots[0]))) == (-1, -1)


def test_brick_search_trivial():
    b = brick_search(0, 1, max_vertices=3)
    assert b is not None and brick_type(b) == (0, 1)


def test_brick_search_5_3():
    b = brick_search(5, 3, max_vertices=8)
    assert b is not None
    assert brick_type(b) == (5, 3)
    assert b.graph.n <= 8


def test_f_of_41_building():
    b53 = brick_search(5, 3, max_vertices=8)
    S = building_simple([b53, b53, hexagon()])
    assert f_reduced(S.graph) == 41


def test_realize_k2():
    g = Graph.from_edges([(0, 1)])
    cd = realize_as_chord_diagram(g)
    assert cd is not None
    assert is_isomorphic(chords.interlacement_graph(cd), g)


def test_realize_two_isolated_vertices():
    g = Graph(frozenset({0, 1}), frozenset())
    cd = realize_as_chord_diagram(g)
    assert cd is not None
    assert len(cd.circles) == 1
    assert is_isomorphic(chords.interlacement_graph(cd), g)


def test_realize_hexagon():
    cd = realize_as_chord_diagram(cycle(6), max_circles=2)
    assert cd is not None
    assert len(cd.circles) <= 2
    assert is_isomorphic(chords.interlacement_graph(cd), cycle(6))


def test_realize_non_circle_graph_fails():
    # W5, the 5-wheel, is a known non-circle graph
    rim = [(i, (i % 5) + 1) for i in range(1, 6)]
    spokes = [(0, i) for i in range(1, 6)]
    w5 = Graph.from_edges(rim + spokes)
    assert circle_word(w5) is None


def test_graph_text_roundtrip():
    g = Graph.from_edges([(0, 1), (1, 2)], vertices=range(4))
    text = graph_to_text(g)
    g2 = graph_from_text(text)
    assert is_isomorphic(g, g2)
    assert g2.n == 4


@settings(deadline=None, max_examples=40)
@given(st.integers(0, 10 ** 6), st.integers(0, 12))
def test_f_oracle_equivalence(seed, n):
    rng = random.Random(seed)
    g = random_graph(rng, n, p=rng.uniform(0.2, 0.7))
    assert f_naive(g) == f_reduced(g)


@settings(deadline=None, max_examples=25)
@given(st.integers(0, 10 ** 6), st.integers(1, 7), st.integers(1, 7))
def test_disjoint_union_multiplies(seed, n1, n2):
    rng = random.Random(seed)
    g1 = random_graph(rng, n1)
    g2 = random_graph(rng, n2).shifted(100)
    union = Graph(g1.vertices | g2.vertices, g1.edges | g2.edges)
    assert f_naive(union) == f_naive(g1) * f_naive(g2)


@settings(deadline=None, max_examples=30)
@given(st.integers(0, 10 ** 6), st.integers(2, 9))
def test_duplication_law(seed, n):
    rng = random.Random(seed)
    g = random_graph(rng, n, p=0.45)
    order = sorted(g.vertices)
    adj = g.adjacency()
    for v in order:
        for w in order:
            if v != w and w not in adj[v] and adj[v] <= adj[w]:
                assert f_naive(g) == f_naive(g.without(w))
                return
