#!/usr/bin/env python3
"""Search for the knot-family assembly.

Targets, for K(r, s; alpha, beta):

  c = 3r + 3s + alpha + beta + 5
  |s_A| = 2r + s + alpha + 1      |s_B| = r + 2s + beta + 2
  single component; both Lando graphs two parallel chords
  top coefficient (-1)^(s+alpha-1) s at degree 7r+5s+3alpha+beta+3
  bottom coefficient (-1)^(r+beta) r at degree -5r-7s-alpha-3beta-5

Assembly: start from the L diagram, add a capped column of r+1
crossings splitting an A-circle, a through column of s crossings
splitting a B-circle, then splice components together (zero crossings)
until the diagram is connected, steering (|s_A|, |s_B|) to the budget.
"""

import sys
import time
from itertools import product

sys.path.insert(0, "src")
sys.path.insert(0, "/root/pkg/src")

from kbracket.families import l_family, _builder_from, _twist_join, _Builder
from kbracket.diagram import (Diagram, bracket, components, extreme_degrees,
                              link_components, mirror, UnionFind)
from kbracket import chords
from kbracket.graphs import f_reduced
from kbracket.chords import gamma_sums, second_top_coeff


def counts(d):
    c = d.n_crossings
    return components(d, 0), components(d, (1 << c) - 1), link_components(d)


def build_with_columns(L, col1, col2):
    """col = (arc_x, arc_y, k, capped, ox, oy) with arcs as end pairs."""
    b = _builder_from(L)
    for (ax, ay, k, capped, ox, oy) in (col1, col2):
        _twist_join(b, b.arc_index(*ax), b.arc_index(*ay), k, capped, ox, oy)
    return b


def arc_groups(d, side):
    from kbracket.diagram import smoothing_circle_arcs
    return smoothing_circle_arcs(d, side)


def component_of_arcs(d):
    n = d.n_ends
    uf = UnionFind(n)
    for x, y in d.arcs:
        uf.union(x, y)
    for i, cr in enumerate(d.crossings):
        for u, v in cr.strand_pairing():
            uf.union(4 * i + u, 4 * i + v)
    return {tuple(a): uf.find(a[0]) for a in d.arcs}


def splice_applied(d, a1, a2, cross):
    arcs = [tuple(a) for a in d.arcs]
    arcs.remove(tuple(a1))
    arcs.remove(tuple(a2))
    (u1, u2), (v1, v2) = a1, a2
    if cross:
        arcs.extend([(u1, v2), (v1, u2)])
    else:
        arcs.extend([(u1, v1), (u2, v2)])
    return Diagram(d.crossings, tuple(arcs), d.free_circles)


def search(r, s, alpha, beta, verbose=True, max_finalists=6):
    L = l_family(r, s, alpha, beta)
    sA0, sB0, comps0 = counts(L)
    want_sA = 2 * r + s + alpha + 1
    want_sB = r + 2 * s + beta + 2
    want_c = 3 * r + 3 * s + alpha + beta + 5
    want_top = (-1) ** ((s + alpha - 1) % 2) * s
    want_bot = (-1) ** ((r + beta) % 2) * r
    top_deg = 7 * r + 5 * s + 3 * alpha + beta + 3
    bot_deg = -5 * r - 7 * s - alpha - 3 * beta - 5
    if verbose:
        print(f"L: sA={sA0} sB={sB0} comps={comps0}; want sA={want_sA} sB={want_sB} c={want_c}")

    # column 1: capped r+1 crossings, delta sA = r+1 (cap splits an A-circle)
    a_groups = arc_groups(L, "A")
    col1_cands = []
    for g in a_groups:
        if len(g) < 2:
            continue
        for i in range(len(g)):
            for j in range(i + 1, len(g)):
                col1_cands.append((tuple(g[i]), tuple(g[j])))
    finalists = []
    t0 = time.time()
    for ax1, ay1 in col1_cands:
        for ox1, oy1 in product((0, 1), repeat=2):
            b1 = _builder_from(L)
            try:
                _twist_join(b1, b1.arc_index(*ax1), b1.arc_index(*ay1),
                            r + 1, True, ox1, oy1)
            except KeyError:
                continue
            d1 = b1.build()
            sA1, sB1, comps1 = counts(d1)
            if sA1 != sA0 + r + 1 or sB1 != sB0:
                continue
            # column 2: through, s crossings, delta sB = s
            b_groups = arc_groups(d1, "B")
            col2_cands = []
            for g in b_groups:
                if len(g) < 2:
                    continue
                for i in range(len(g)):
                    for j in range(i + 1, len(g)):
                        col2_cands.append((tuple(g[i]), tuple(g[j])))
            for ax2, ay2 in col2_cands:
                for ox2, oy2 in product((0, 1), repeat=2):
                    b2 = _builder_from(d1)
                    try:
                        _twist_join(b2, b2.arc_index(*ax2), b2.arc_index(*ay2),
                                    s, False, ox2, oy2)
                    except KeyError:
                        continue
                    d2 = b2.build()
                    sA2, sB2, comps2 = counts(d2)
                    if sA2 != sA1 or sB2 != sB1 + s:
                        continue
                    # splice phase: DFS to comps=1 with (dA, dB) = (0, +2)
                    got = splice_dfs(d2, want_sA - sA2, want_sB + 2 - s - sB1,
                                     comps2 - 1)
                    for dfin in got:
                        ok, info = final_checks(dfin, r, s, alpha, beta,
                                                want_sA, want_sB, want_c,
                                                want_top, want_bot, top_deg, bot_deg)
                        if verbose and ok is not None:
                            print("FINAL", ok, info,
                                  f"cols=({ax1},{ay1},{ox1},{oy1})/({ax2},{ay2},{ox2},{oy2})",
                                  f"{time.time()-t0:.0f}s", flush=True)
                        if ok:
                            finalists.append((dfin, (ax1, ay1, ox1, oy1),
                                              (ax2, ay2, ox2, oy2)))
                            if len(finalists) >= max_finalists:
                                return finalists
    return finalists


def arc_classes(d):
    """One representative arc per (component, A-circle, B-circle) class."""
    from kbracket.diagram import smoothing_circle_arcs

    comp = component_of_arcs(d)
    acirc = {}
    for gi, g in enumerate(smoothing_circle_arcs(d, "A")):
        for a in g:
            acirc[tuple(a)] = gi
    bcirc = {}
    for gi, g in enumerate(smoothing_circle_arcs(d, "B")):
        for a in g:
            bcirc[tuple(a)] = gi
    reps = {}
    for a in d.arcs:
        key = (comp[tuple(a)], acirc[tuple(a)], bcirc[tuple(a)])
        reps.setdefault(key, tuple(a))
    return reps


def splice_dfs(d, budget_a, budget_b, merges_needed, cap=3000):
    """Splice sequences reaching comps=1 within the circle budgets."""
    out = []
    seen = [0]

    def rec(cur, ba, bb, merges):
        if seen[0] > cap or out:
            return
        if merges == 0:
            if ba == 0 and bb == 0:
                out.append(cur)
            return
        if abs(ba) > merges or abs(bb) > merges:
            return
        if (ba - merges) % 2 or (bb - merges) % 2:
            return
        reps = arc_classes(cur)
        keys = sorted(reps)
        c = cur.n_crossings
        sA = components(cur, 0)
        sB = components(cur, (1 << c) - 1)
        for i in range(len(keys)):
            for j in range(i + 1, len(keys)):
                k1, k2 = keys[i], keys[j]
                if k1[0] == k2[0]:
                    continue  # same component: not a merging splice
                # sign prefilter: distinct A-circles force dA = -1
                if k1[1] != k2[1] and abs(ba + 1) > merges - 1:
                    continue
                if k1[2] != k2[2] and abs(bb + 1) > merges - 1:
                    continue
                for cross in (True, False):
                    seen[0] += 1
                    if seen[0] > cap or out:
                        return
                    nxt = splice_applied(cur, reps[k1], reps[k2], cross)
                    da = components(nxt, 0) - sA
                    db = components(nxt, (1 << c) - 1) - sB
                    if abs(da) != 1 or abs(db) != 1:
                        continue
                    if abs(ba - da) > merges - 1 or abs(bb - db) > merges - 1:
                        continue
                    rec(nxt, ba - da, bb - db, merges - 1)
                    if out:
                        return

    if (budget_a - merges_needed) % 2 == 0 and (budget_b - merges_needed) % 2 == 0:
        rec(d, budget_a, budget_b, merges_needed)
    return out


def final_checks(d, r, s, alpha, beta, want_sA, want_sB, want_c,
                 want_top, want_bot, top_deg, bot_deg):
    c = d.n_crossings
    if c != want_c:
        return None, "c"
    sA, sB, comps = counts(d)
    if (sA, sB, comps) != (want_sA, want_sB, 1):
        return None, "counts"
    ga = chords.lando_graph(chords.a_state_chords(d))
    gb = chords.lando_graph(chords.a_state_chords(mirror(d)))
    if f_reduced(ga) != 0 or f_reduced(gb) != 0:
        return False, f"lando f ({f_reduced(ga)},{f_reduced(gb)})"
    shape = (len(ga.vertices), len(ga.edges), len(gb.vertices), len(gb.edges))
    aM4 = second_top_coeff(d)
    am4 = second_top_coeff(mirror(d))
    if (aM4, am4) != (want_top, want_bot):
        return False, f"dfs ({aM4},{am4}) want ({want_top},{want_bot}) shape {shape}"
    p = bracket(d)
    m, M = extreme_degrees(d)
    ok = (p.coeff(m) == 0 and p.coeff(M) == 0
          and p.max_degree() == top_deg and p.min_degree() == bot_deg
          and p.coeff(top_deg) == want_top and p.coeff(bot_deg) == want_bot)
    return ok, f"bracket top={p.max_degree()}({p.coeff(p.max_degree())}) bot={p.min_degree()}({p.coeff(p.min_degree())}) shape {shape}"


if __name__ == "__main__":
    r, s, alpha, beta = (int(x) for x in (sys.argv[1:5] or [2, 2, 2, 2]))
    got = search(r, s, alpha, beta)
    print("finalists:", len(got))
