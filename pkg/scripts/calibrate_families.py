#!/usr/bin/env python3
"""Search for the joining/gadget configurations used by the big generators.

The closed forms pin crossing counts, extreme-state circle counts, the
shape of both Lando graphs and the four outer coefficients; the figures
the constructions came from do not survive in machine-readable form, so
this script enumerates small placement spaces and reports every
configuration that satisfies all constraints.  Winning configurations
are frozen as constants in kbracket.families and re-checked by the
verification suite; rerun this script only when changing a generator.

Usage: python3 scripts/calibrate_families.py [l|drs|k]
"""

import sys
import time
from itertools import product

sys.path.insert(0, "src")

from kbracket.diagram import (bracket, components, extreme_degrees,
                              link_components, mirror)
from kbracket import chords
from kbracket.graphs import f_reduced
from kbracket.families import (_Builder, _circle_gadget, pretzel_builder,
                               d_family, _builder_from, _append_diagram,
                               MERGE_A, MERGE_B, PASS)


def l_columns(r, s, alpha, beta):
    return [2] + [-2] * (s - 2) + [-alpha] + [2] * (r - 2) + [-2, beta]


def waist_pair(b, ports, j):
    n = len(ports)
    if j == 0:
        return (b.arc_index(ports[0][0], ports[-1][1]),
                b.arc_index(ports[0][2], ports[-1][3]))
    return (b.arc_index(ports[j - 1][1], ports[j][0]),
            b.arc_index(ports[j - 1][3], ports[j][2]))


def build_l(r, s, alpha, beta, cfg1, cfg2):
    b, ports = pretzel_builder(l_columns(r, s, alpha, beta))
    for cfg in (cfg1, cfg2):
        j, pattern, choices, oa, ob = cfg
        top, bot = waist_pair(b, ports, j)
        _circle_gadget(b, top, bot, pattern, choices, oa, ob)
    return b.build()


def quick_l_check(d, r, s, alpha, beta):
    c = d.n_crossings
    if components(d, 0) != r + s + alpha:
        return False
    if components(d, (1 << c) - 1) != r + s + beta:
        return False
    want_comps = r + s + 2 - (alpha % 2) - (beta % 2)
    if link_components(d) != want_comps:
        return False
    return True


def lando_l_check(d):
    ga = chords.lando_graph(chords.a_state_chords(d))
    if len(ga.vertices) != 2 or len(ga.edges) != 0:
        return False
    gb = chords.lando_graph(chords.a_state_chords(mirror(d)))
    return len(gb.vertices) == 2 and len(gb.edges) == 0


def coeff_l_check(d, r, s, alpha, beta):
    from kbracket.chords import second_top_coeff
    aM4 = second_top_coeff(d)
    am4 = second_top_coeff(mirror(d))
    want_top = (-1) ** ((r + s + alpha - 1) % 2) * s
    want_bot = (-1) ** ((r + s + beta - 1) % 2) * r
    return aM4 == want_top and am4 == want_bot


def full_l_check(d, r, s, alpha, beta):
    p = bracket(d)
    m, M = extreme_degrees(d)
    if p.coeff(m) != 0 or p.coeff(M) != 0:
        return False
    top = 4 * r + 4 * s + 3 * alpha + beta - 2
    bot = -4 * r - 4 * s - alpha - 3 * beta + 2
    if p.max_degree() != top or p.min_degree() != bot:
        return False
    if p.coeff(top) != (-1) ** ((r + s + alpha - 1) % 2) * s:
        return False
    if p.coeff(bot) != (-1) ** ((r + s + beta - 1) % 2) * r:
        return False
    return True


def search_l(params=(2, 2, 2, 2), verbose=True):
    r, s, alpha, beta = params
    n = r + s
    t0 = time.time()
    patterns = [("a", "a", "b", "b"), ("a", "b", "a", "b")]
    hits = []
    tried = 0
    for j1, j2 in product(range(n), repeat=2):
        if j1 == j2:
            continue
        for pat1, pat2 in product(patterns, repeat=2):
            for ch1 in product((0, 1), repeat=4):
                for ch2 in product((0, 1), repeat=4):
                    cfg1 = (j1, pat1, ch1, 0, 0)
                    cfg2 = (j2, pat2, ch2, 0, 0)
                    tried += 1
                    try:
                        d = build_l(r, s, alpha, beta, cfg1, cfg2)
                    except Exception:
                        continue
                    if not quick_l_check(d, r, s, alpha, beta):
                        continue
                    if not lando_l_check(d):
                        continue
                    if not coeff_l_check(d, r, s, alpha, beta):
                        continue
                    if not full_l_check(d, r, s, alpha, beta):
                        continue
                    hits.append((cfg1, cfg2))
                    if verbose:
                        print("HIT", cfg1, cfg2, flush=True)
                    if len(hits) >= 40:
                        print(f"(stopping early, {tried} tried, {time.time()-t0:.0f}s)")
                        return hits
    print(f"search_l{params}: {len(hits)} hits / {tried} tried in {time.time()-t0:.0f}s")
    return hits


if __name__ == "__main__":
    what = sys.argv[1] if len(sys.argv) > 1 else "l"
    if what == "l":
        search_l((2, 2, 2, 2))
