import pytest

from kbracket import chords
from kbracket.chords import gamma_sums, second_top_coeff
from kbracket.diagram import (bracket, components, extreme_coeffs,
                              extreme_degrees, gamma_states, link_components,
                              mirror)
from kbracket.families import (d_family, d_rs, d_rs_alpha, l_family, pretzel)
from kbracket.graphs import f_reduced, family_G, is_isomorphic
from kbracket.laurent import span_min_max


def test_pretzel_one_crossing_unknot():
    p = bracket(pretzel([1]))
    assert p.to_pairs() in ([[-3, -1]], [[3, -1]])


def test_pretzel_trefoil():
    assert str(bracket(pretzel([-1, -1, -1]))) == "-1*A^5 + -1*A^-3 + 1*A^-7"


def test_pretzel_validation():
    with pytest.raises(ValueError):
        pretzel([])
    with pytest.raises(ValueError):
        pretzel([2, 0, -2])


@pytest.mark.parametrize("entries,alpha", [([2, -2, -2], 2), ([2, -3, -2], 1),
                                           ([3, -2, -3], 1), ([2, -2, -2, -2], 3)])
def test_pretzel_negative_columns_claims(entries, alpha):
    d = pretzel(entries)
    p = bracket(d)
    m, M = extreme_degrees(d)
    assert p.coeff(M) == 0
    assert abs(p.coeff(M - 4)) == alpha
    s_a = components(d, 0)
    assert p.coeff(M - 4) == (-1) ** ((s_a - 1) % 2) * alpha


def test_d_family_r1_full():
    d = d_family(1)
    assert d.n_crossings == 12
    assert components(d, 0) == 1
    assert components(d, (1 << 12) - 1) == 9
    assert extreme_degrees(d) == (-28, 12)
    p = bracket(d)
    assert (p.coeff(-28), p.coeff(12)) == (1, 2)
    assert span_min_max(p)[2] == 40
    assert gamma_states(d, "B") == {(1 << 12) - 1}


def test_d_family_r2_structure():
    d = d_family(2)
    assert d.n_crossings == 24
    assert components(d, 0) == 1
    assert components(d, (1 << 24) - 1) == 15
    assert extreme_degrees(d) == (-52, 24)
    assert extreme_coeffs(d) == (1, 3)


def test_d_family_lando_is_duplication_of_chain():
    for r in (1, 2):
        d = d_family(r)
        lando = chords.lando_graph(chords.a_state_chords(d))
        assert f_reduced(lando) == r + 1
        # eliminating duplicated vertices must land on the chain graph
        reduced = lando
        from kbracket.graphs import _find_duplicate
        while True:
            w = _find_duplicate(reduced)
            if w is None:
                break
            reduced = reduced.without(w)
        assert is_isomorphic(reduced, family_G(r).graph)
        b_lando = chords.lando_graph(chords.a_state_chords(mirror(d)))
        assert len(b_lando.vertices) == 0


def test_d_rs_structure():
    for (r, s) in [(1, 1), (2, 1), (1, 2)]:
        d = d_rs(r, s)
        c = d.n_crossings
        assert c == 12 * (r + s) + 2
        assert components(d, 0) == 6 * s + 3
        assert components(d, (1 << c) - 1) == 6 * r + 3
        assert link_components(d) == 1
        assert extreme_degrees(d) == (-24 * r - 12 * s - 6, 12 * r + 24 * s + 6)
        assert extreme_coeffs(d) == (s + 1, r + 1)


def test_d_rs_gamma_route_coefficients():
    d = d_rs(1, 1)
    cd_a = chords.a_state_chords(d)
    cd_b = chords.a_state_chords(mirror(d))
    S0a, _, _ = gamma_sums(cd_a)
    S0b, _, _ = gamma_sums(cd_b)
    assert (-1) ** ((len(cd_a.circles) - 1) % 2) * S0a == 2
    assert (-1) ** ((len(cd_b.circles) - 1) % 2) * S0b == 2


def test_d_rs_alpha_structure():
    r, s, alpha = 1, 1, 3
    d = d_rs_alpha(r, s, alpha)
    c = d.n_crossings
    assert c == 12 * (r + s) + 2 + alpha
    assert components(d, 0) == 6 * s + alpha + 2
    assert components(d, (1 << c) - 1) == 6 * r + 4
    assert link_components(d) == 1
    assert extreme_degrees(d) == (-24 * r - 12 * s - alpha - 8,
                                  12 * r + 24 * s + 3 * alpha + 4)
    assert extreme_coeffs(d) == (-(s + 1), r + 1)


def test_d_rs_alpha_guards():
    with pytest.raises(ValueError):
        d_rs_alpha(1, 1, 2)
    with pytest.raises(ValueError):
        d_rs_alpha(1, 1, 1)


def test_l_family_guards():
    with pytest.raises(ValueError):
        l_family(1, 2, 2, 2)
    with pytest.raises(ValueError):
        l_family(2, 2, 1, 2)


def test_l_family_full_smallest():
    r, s, alpha, beta = 2, 2, 2, 2
    d = l_family(r, s, alpha, beta)
    assert d.n_crossings == 2 * r + 2 * s + alpha + beta + 4
    assert components(d, 0) == r + s + alpha
    assert components(d, (1 << d.n_crossings) - 1) == r + s + beta
    assert link_components(d) == r + s + 2
    p = bracket(d)
    m, M = extreme_degrees(d)
    assert p.coeff(m) == 0 and p.coeff(M) == 0
    assert p.max_degree() == 4 * r + 4 * s + 3 * alpha + beta - 2
    assert p.coeff(p.max_degree()) == (-1) ** ((r + s + alpha - 1) % 2) * s
    assert p.min_degree() == -4 * r - 4 * s - alpha - 3 * beta + 2
    assert p.coeff(p.min_degree()) == (-1) ** ((r + s + beta - 1) % 2) * r


def test_l_family_lando_two_parallel_chords():
    d = l_family(2, 2, 2, 2)
    ga = chords.lando_graph(chords.a_state_chords(d))
    gb = chords.lando_graph(chords.a_state_chords(mirror(d)))
    assert (len(ga.vertices), len(ga.edges)) == (2, 0)
    assert (len(gb.vertices), len(gb.edges)) == (2, 0)
    assert f_reduced(ga) == 0 and f_reduced(gb) == 0


def test_l_family_odd_alpha_component_count():
    d = l_family(2, 2, 3, 2)
    assert link_components(d) == 2 + 2 + 2 - 1 - 0


def test_l_family_second_coeffs_defect_route():
    d = l_family(2, 2, 2, 2)
    p = bracket(d)
    m, M = extreme_degrees(d)
    assert second_top_coeff(d) == p.coeff(M - 4)
    assert second_top_coeff(mirror(d)) == p.coeff(m + 4)
