import random
from itertools import combinations

from hypothesis import given, settings
import hypothesis.strategies as st

from kbracket import chords
from kbracket.chords import (Chord, ChordDiagram, COHERENT, REVERSING,
                             a_state_chords, canonical_form, gamma_sums,
                             isomorphic, lando_graph, interlacement_graph,
                             resmooth_count, second_top_coeff, to_diagram)
from kbracket.corpus import random_chord_diagram, random_diagram
from kbracket.diagram import bracket, components, extreme_degrees, mirror
from kbracket.families import pretzel


TREFOIL = pretzel([-1, -1, -1])


def test_trefoil_chord_diagram_shape():
    cd = a_state_chords(TREFOIL)
    assert len(cd.circles) == 2
    assert len(cd.chords) == 3
    where = cd.circle_of()
    for ch in cd.chords:
        assert where[ch.ends[0]] != where[ch.ends[1]]


def test_zero_crossing_circle():
    from kbracket.diagram import Diagram
    cd = a_state_chords(Diagram((), (), 1))
    assert cd.circles == ((),)
    assert cd.chords == ()


def test_kink_chords():
    cd = a_state_chords(pretzel([-1]))
    assert len(cd.circles) == 2
    assert len(cd.chords) == 1


def test_to_diagram_empty_circle():
    d = to_diagram(ChordDiagram(((),), ()))
    assert d.n_crossings == 0
    assert d.free_circles == 1


def test_single_coherent_chord_states():
    cd = ChordDiagram(((0, 1),), (Chord((0, 1), COHERENT),))
    d = to_diagram(cd)
    assert components(d, 0) == 1
    assert components(d, 1) == 2


def test_single_reversing_chord_is_nonsplit():
    cd = ChordDiagram(((0, 1),), (Chord((0, 1), REVERSING),))
    d = to_diagram(cd)
    assert components(d, 0) == 1
    assert components(d, 1) == 1


def test_resmooth_empty_subset():
    cd = a_state_chords(TREFOIL)
    assert resmooth_count(cd, ()) == 2


def test_resmooth_single_and_all():
    cd = a_state_chords(TREFOIL)
    assert resmooth_count(cd, [0]) == 1
    assert resmooth_count(cd, [0, 1, 2]) == 3


def test_lando_trefoil_empty():
    g = lando_graph(a_state_chords(TREFOIL))
    assert len(g.vertices) == 0 and len(g.edges) == 0


def test_lando_interleaved_pair():
    cd = ChordDiagram(((0, 2, 1, 3),),
                      (Chord((0, 1), COHERENT), Chord((2, 3), COHERENT)))
    g = lando_graph(cd)
    assert len(g.vertices) == 2 and len(g.edges) == 1


def test_lando_nested_pair():
    cd = ChordDiagram(((0, 2, 3, 1),),
                      (Chord((0, 1), COHERENT), Chord((2, 3), COHERENT)))
    g = lando_graph(cd)
    assert len(g.vertices) == 2 and len(g.edges) == 0


def test_interlacement_isolates_cross_circle_chords():
    cd = a_state_chords(TREFOIL)
    g = interlacement_graph(cd)
    assert len(g.vertices) == 3 and len(g.edges) == 0


def test_interlacement_parallel_block_with_bridges():
    # two parallel same-circle chords x1 x2 plus cross chords to satellites
    circles = ((0, 4, 2, 6, 3, 7, 1, 5), (8, 9))
    ch = (
        Chord((0, 1), COHERENT),  # x1
        Chord((2, 3), COHERENT),  # x2 parallel to x1
        Chord((4, 8), REVERSING),
        Chord((6, 7), COHERENT),
        Chord((5, 9), REVERSING),
    )
    cd = ChordDiagram(circles, ch)
    g = interlacement_graph(cd)
    assert (0, 1) not in g.edges  # the parallel pair stays independent


def test_roundtrip_trefoil():
    cd = a_state_chords(TREFOIL)
    assert isomorphic(cd, a_state_chords(to_diagram(cd)))


def test_canonical_form_invariance_under_relabel_and_rotation():
    rng = random.Random(7)
    for _ in range(20):
        cd = random_chord_diagram(rng, rng.randint(1, 6))
        rotated = []
        for circle in cd.circles:
            k = rng.randrange(len(circle)) if circle else 0
            rotated.append(circle[k:] + circle[:k])
        rng.shuffle(rotated)
        perm = {e: e + 100 for ch in cd.chords for e in ch.ends}
        cd2 = ChordDiagram(
            tuple(tuple(perm[e] for e in c) for c in rotated),
            tuple(Chord((perm[p], perm[q]), t) for (p, q), t in
                  ((ch.ends, ch.twist) for ch in cd.chords)),
        )
        assert canonical_form(cd) == canonical_form(cd2)


@settings(deadline=None, max_examples=50)
@given(st.integers(0, 10 ** 6), st.integers(1, 7))
def test_resmooth_matches_union_find(seed, n):
    rng = random.Random(seed)
    cd = random_chord_diagram(rng, n)
    d = to_diagram(cd)
    subset = [j for j in range(n) if rng.getrandbits(1)]
    state = sum(1 << j for j in subset)
    assert resmooth_count(cd, subset) == components(d, state)


@settings(deadline=None, max_examples=30)
@given(st.integers(0, 10 ** 6), st.integers(1, 7))
def test_roundtrip_random(seed, n):
    rng = random.Random(seed)
    cd = random_chord_diagram(rng, n)
    assert isomorphic(cd, a_state_chords(to_diagram(cd)))


@settings(deadline=None, max_examples=30)
@given(st.integers(0, 10 ** 6), st.integers(1, 7))
def test_surgery_changes_circles_by_one_on_consistent_diagrams(seed, n):
    rng = random.Random(seed)
    d = random_diagram(rng, n)
    cd = a_state_chords(d)
    base = len(cd.circles)
    where = cd.circle_of()
    for j, ch in enumerate(cd.chords):
        after = resmooth_count(cd, [j])
        if where[ch.ends[0]] == where[ch.ends[1]]:
            assert after == base + 1
        else:
            assert after == base - 1


def test_gamma_sums_give_second_coefficient():
    for entries in ([2, -2, -2], [2, -3, -2], [-1, -1, -1], [3, -2, -3]):
        d = pretzel(entries)
        p = bracket(d)
        m, M = extreme_degrees(d)
        assert second_top_coeff(d) == p.coeff(M - 4)
        # bottom side via the mirror
        assert second_top_coeff(mirror(d)) == p.coeff(m + 4)


def test_gamma_sums_count_independent_sets():
    d = pretzel([2, -2, -2])
    cd = a_state_chords(d)
    S0, S1, T0 = gamma_sums(cd)
    from kbracket.graphs import f_reduced
    assert S0 == f_reduced(lando_graph(cd))
