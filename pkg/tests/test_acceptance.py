"""Acceptance suite: one test and one printed pass/fail line per criterion.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines as the
criteria execute.  Time budgets are asserted where the criterion states
one.
"""

import random
import time
from itertools import product

import numpy as np

from kbracket import chords, corpus, verify
from kbracket.chords import a_state_chords, isomorphic, resmooth_count, to_diagram
from kbracket.cli import main
from kbracket.diagram import (bracket, components, extreme_degrees, mirror,
                              scan_states)
from kbracket.families import d_family, d_rs, d_rs_alpha, pretzel
from kbracket.graphs import (brick_search, brick_type, building_simple, cycle,
                             f_naive, f_reduced, family_F, family_G, hexagon,
                             negate, path)


def _report(num, ok, detail=""):
    line = f"criterion {num:02d}: {'PASS' if ok else 'FAIL'}"
    if detail:
        line += f" ({detail})"
    print(line, flush=True)
    assert ok, line


def test_criterion_01_f_ground_truth_and_recursions():
    t0 = time.time()
    ok = (f_reduced(path(1)) == 0 and f_reduced(path(2)) == -1
          and f_reduced(path(3)) == -1 and f_reduced(cycle(6)) == 2)
    for n in range(4, 31):
        ok = ok and f_reduced(path(n)) == -f_reduced(path(n - 3))
        ok = ok and f_reduced(cycle(n)) == f_reduced(path(n - 1)) - f_reduced(path(n - 3))
    elapsed = time.time() - t0
    _report(1, ok and elapsed < 1.0, f"{elapsed:.2f}s")


def test_criterion_01_f_L4_table_value_as_claimed():
    """The claimed table value f(L_4) = 1.

    Direct enumeration and the recursion f(L_n) = -f(L_{n-3}) with
    f(L_1) = 0 both give f(L_4) = 0, so the claimed value contradicts
    the other assertions of this criterion; it is asserted here exactly
    as stated and fails honestly.
    """
    value = f_naive(path(4))
    _report(1, value == 1, f"claimed 1, enumeration gives {value}")


def test_criterion_02_oracle_equivalence():
    t0 = time.time()
    rng = random.Random(0)
    bad = 0
    for _ in range(200):
        n = rng.randint(0, 18)
        p = rng.uniform(0.25, 0.7)
        from kbracket.graphs import Graph
        g = Graph.from_edges([(i, j) for i in range(n) for j in range(i + 1, n)
                              if rng.random() < p], vertices=range(n))
        if f_naive(g) != f_reduced(g):
            bad += 1
    elapsed = time.time() - t0
    _report(2, bad == 0 and elapsed < 30.0, f"{bad} mismatches, {elapsed:.1f}s")


def test_criterion_03_hexagon_chains():
    t0 = time.time()
    ok = True
    for r in range(1, 9):
        rg = family_G(r)
        ok = ok and f_reduced(rg.graph) == r + 1
        ok = ok and f_reduced(negate(rg)) == -(r + 1)
    elapsed = time.time() - t0
    _report(3, ok and elapsed < 5.0, f"{elapsed:.2f}s")


def test_criterion_04_building_formulas():
    rows = verify.check_lemma3(k_max=3)
    bad = [r for r in rows if not r.ok]
    _report(4, not bad, f"{len(rows)} rows" + (f", first failure {bad[0].render()}" if bad else ""))


def test_criterion_05_forty_one():
    b53 = brick_search(5, 3, max_vertices=8)
    ok = b53 is not None and brick_type(b53) == (5, 3)
    if ok:
        S = building_simple([b53, b53, hexagon()])
        ok = f_naive(S.graph) == 41
    _report(5, ok)


def test_criterion_06_fibonacci_chain():
    want = [2, 3, 5, 8, 13, 21]
    got = [f_reduced(family_F(r).graph) for r in range(1, 7)]
    _report(6, got == want, f"{got}")


def test_criterion_07_bracket_engine_properties():
    t0 = time.time()
    rows = verify.check_engine(n_diagrams=100, max_crossings=14, seed=0)
    elapsed = time.time() - t0
    bad = [r for r in rows if not r.ok]
    _report(7, not bad and elapsed < 120.0,
            f"{elapsed:.1f}s" + (f", {bad[0].render()}" if bad else ""))


def test_criterion_08_resmooth_oracle_agreement():
    rng = random.Random(8)
    bad = 0
    for _ in range(50):
        k = rng.randint(1, 12)
        cd = corpus.random_chord_diagram(rng, k)
        d = to_diagram(cd)
        _, circ = scan_states(d)
        for state in range(1 << k):
            subset = [j for j in range(k) if (state >> j) & 1]
            if resmooth_count(cd, subset) != int(circ[state]):
                bad += 1
                break
    _report(8, bad == 0, f"{bad} disagreeing diagrams")


def test_criterion_09_d_family():
    t0 = time.time()
    d1 = d_family(1)
    p = bracket(d1)
    t_first = time.time() - t0
    ok = (d1.n_crossings == 12 and extreme_degrees(d1) == (-28, 12)
          and p.coeff(-28) == 1 and p.coeff(12) == 2
          and p.max_degree() - p.min_degree() == 40
          and t_first < 1.0)
    d2 = d_family(2)
    from kbracket.diagram import extreme_coeffs
    ok = ok and (d2.n_crossings == 24
                 and components(d2, 0) == 1
                 and components(d2, (1 << 24) - 1) == 15
                 and extreme_coeffs(d2) == (1, 3))
    _report(9, ok, f"r=1 full bracket in {t_first:.2f}s; r=2 structural")


def test_criterion_10_joined_chains():
    d = d_rs(1, 1)
    from kbracket.diagram import extreme_coeffs
    ok = (d.n_crossings == 26
          and extreme_degrees(d) == (-42, 42)
          and extreme_coeffs(d) == (2, 2))
    da = d_rs_alpha(1, 1, 3)
    ok = ok and (da.n_crossings == 29
                 and extreme_degrees(da) == (-47, 49)
                 and extreme_coeffs(da) == (-2, 2))
    _report(10, ok)


def test_criterion_11_link_family():
    t0 = time.time()
    rows = verify.check_thm5(grid=((2, 2, 2, 2), (2, 3, 2, 2), (3, 2, 2, 3)))
    elapsed = time.time() - t0
    bad = [r for r in rows if not r.ok]
    partial = [r for r in rows if r.mode != "full"]
    _report(11, not bad and not partial and elapsed < 60.0,
            f"{len(rows)} rows, {elapsed:.1f}s" + (f", {bad[0].render()}" if bad else ""))


def test_criterion_12_knot_family():
    t0 = time.time()
    rows = verify.check_thm6(grid=((2, 2, 2, 2), (2, 2, 3, 2)))
    elapsed = time.time() - t0
    bad = [r for r in rows if not r.ok]
    _report(12, not bad and elapsed < 60.0,
            f"{len(rows)} rows, {elapsed:.1f}s" + (f", {bad[0].render()}" if bad else ""))


def test_criterion_13_pretzel_second_coefficients():
    bad = []
    for a in (2, 3):
        for s in (2, 3):
            for bs in product((-2, -3), repeat=s):
                alpha = sum(1 for b in bs if b == -2)
                if alpha < 1:
                    continue
                d = pretzel([a, *bs])
                p = bracket(d)
                m, M = extreme_degrees(d)
                if p.coeff(M) != 0 or abs(p.coeff(M - 4)) != alpha:
                    bad.append((a, bs))
    _report(13, not bad, f"{bad}" if bad else "all rows")


def test_criterion_14_roundtrip():
    rng = random.Random(14)
    bad = 0
    for _ in range(100):
        k = rng.randint(1, 10)
        cd = corpus.random_chord_diagram(rng, k)
        if not isomorphic(cd, a_state_chords(to_diagram(cd))):
            bad += 1
    _report(14, bad == 0, f"{bad} failures")


def test_criterion_15_verify_determinism(tmp_path, capsys):
    out = []
    for workers in (1, 3):
        assert main(["--workers", str(workers), "verify", "thm2", "r=1..1"]) == 0
        out.append(capsys.readouterr().out)
    _report(15, out[0] == out[1] and len(out[0]) > 0)
