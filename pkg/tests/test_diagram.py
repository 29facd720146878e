import random

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from kbracket.corpus import random_diagram
from kbracket.diagram import (Crossing, Diagram, bracket, bracket_range,
                              components, extreme_coeffs, extreme_degrees,
                              gamma_states, link_components, mirror,
                              second_coeffs, EnumerationLimitError)
from kbracket.families import pretzel
from kbracket.laurent import LaurentPoly, delta_pow, span_min_max


TREFOIL = pretzel([-1, -1, -1])
TREFOIL_BRACKET = LaurentPoly({5: -1, -3: -1, -7: 1})


def unknot_circle():
    return Diagram((), (), 1)


def test_zero_crossing_circle_components():
    assert components(unknot_circle(), 0) == 1


def test_trefoil_extreme_state_components():
    assert components(TREFOIL, 0) == 2
    assert components(TREFOIL, 0b111) == 3


def test_unknot_bracket_is_one():
    assert bracket(unknot_circle()) == LaurentPoly.one()


def test_kink_bracket():
    kink = pretzel([-1])
    assert components(kink, 0) == 2
    assert bracket(kink) == LaurentPoly({3: -1})


def test_trefoil_bracket():
    p = bracket(TREFOIL)
    assert p == TREFOIL_BRACKET
    assert span_min_max(p) == (-7, 5, 12)
    assert extreme_degrees(TREFOIL) == (-7, 5)


def test_trefoil_is_knot():
    assert link_components(TREFOIL) == 1


def test_extreme_degrees_zero_crossing():
    assert extreme_degrees(unknot_circle()) == (0, 0)


def test_gamma_a_contains_all_a_state():
    for seed in range(5):
        d = random_diagram(random.Random(seed), 6)
        assert 0 in gamma_states(d, "A")
        assert (1 << d.n_crossings) - 1 in gamma_states(d, "B")


def test_trefoil_gamma_a_against_definition():
    b, circ = (lambda d: __import__("kbracket.diagram", fromlist=["scan_states"]).scan_states(d))(TREFOIL)
    s_a = circ[0]
    expected = {s for s in range(8) if circ[s] == s_a + bin(s).count("1")}
    assert gamma_states(TREFOIL, "A") == expected


def test_trefoil_extreme_coeffs():
    assert extreme_coeffs(TREFOIL) == (1, -1)


def test_trefoil_second_coeffs():
    a_m4, a_M4 = second_coeffs(TREFOIL)
    assert a_M4 == 0  # degree 1 coefficient
    assert a_m4 == TREFOIL_BRACKET.coeff(-3)


def test_mirror_involution():
    assert mirror(mirror(TREFOIL)) == TREFOIL


def test_mirror_bracket_substitution():
    assert bracket(mirror(TREFOIL)) == TREFOIL_BRACKET.invert_variable()


def test_mirror_extreme_degrees():
    m, M = extreme_degrees(TREFOIL)
    assert extreme_degrees(mirror(TREFOIL)) == (-M, -m)


def test_free_circle_multiplies_by_loop_factor():
    plus = Diagram(TREFOIL.crossings, TREFOIL.arcs, 1)
    assert bracket(plus) == TREFOIL_BRACKET * delta_pow(1)


def test_bracket_partition_independence():
    d = pretzel([2, -2, -2])
    total = 1 << d.n_crossings
    whole = bracket(d)
    for cut in (1, 7, 32, total // 2):
        parts = LaurentPoly.zero()
        start = 0
        while start < total:
            stop = min(start + cut, total)
            parts = parts + bracket_range(d, start, stop)
            start = stop
        assert parts == whole


def test_bracket_workers_match():
    d = pretzel([2, -2, -2, 2])
    assert bracket(d, workers=2) == bracket(d, workers=1)


def test_enumeration_limit_error():
    d = pretzel([2, -2, -2])
    with pytest.raises(EnumerationLimitError, match="extreme-coefficient"):
        bracket(d, limit=5)


def test_crossing_validation():
    with pytest.raises(ValueError):
        Crossing(((0, 1), (2, 3)), ((0, 1), (2, 3)))
    with pytest.raises(ValueError):
        Crossing(((0, 1), (2, 2)), ((0, 2), (1, 3)))


def test_arc_validation():
    cr = Crossing(((0, 1), (2, 3)), ((0, 2), (1, 3)))
    with pytest.raises(ValueError):
        Diagram((cr,), ((0, 0), (1, 2)), 0)
    with pytest.raises(ValueError):
        Diagram((cr,), ((0, 1), (1, 2)), 0)


def test_json_roundtrip_bitexact():
    text = TREFOIL.to_json()
    again = Diagram.from_json(text)
    assert again == TREFOIL
    assert again.to_json() == text


@settings(deadline=None, max_examples=40)
@given(st.integers(0, 10 ** 6), st.integers(1, 8))
def test_one_flip_changes_circles_by_one(seed, n):
    rng = random.Random(seed)
    d = random_diagram(rng, n)
    state = rng.randrange(1 << n)
    i = rng.randrange(n)
    assert abs(components(d, state) - components(d, state ^ (1 << i))) == 1


@settings(deadline=None, max_examples=25)
@given(st.integers(0, 10 ** 6), st.integers(1, 9))
def test_extreme_coeffs_match_bracket(seed, n):
    rng = random.Random(seed)
    d = random_diagram(rng, n)
    p = bracket(d)
    m, M = extreme_degrees(d)
    assert extreme_coeffs(d) == (p.coeff(m), p.coeff(M))
