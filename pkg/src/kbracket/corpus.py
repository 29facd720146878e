"""Seeded random chord diagrams and diagrams for property checks.

Random chord diagrams get the default twist flags (coherent on a single
circle, reversing across circles), which matches side-by-side planar
layouts.  Diagrams built from them are screened for the one-flip rule
(every single-label change moves the circle count by exactly one);
screened diagrams satisfy the degree congruences the extreme-state
theory needs, so the property corpus only keeps those.
"""

from __future__ import annotations

import random

import numpy as np

from .chords import Chord, ChordDiagram, COHERENT, REVERSING, to_diagram
from .diagram import Diagram, scan_states


def random_chord_diagram(rng: random.Random, n_chords: int,
                         max_circles: int = 3, free_circles: int = 0) -> ChordDiagram:
    """Random circles partition of 2n endpoints plus a random chord matching."""
    endpoints = list(range(2 * n_chords))
    rng.shuffle(endpoints)
    n_circles = rng.randint(1, max(1, min(max_circles, n_chords)))
    cuts = sorted(rng.sample(range(1, 2 * n_chords), n_circles - 1)) if n_circles > 1 else []
    circles = []
    prev = 0
    for cut in cuts + [2 * n_chords]:
        circles.append(tuple(endpoints[prev:cut]))
        prev = cut
    circles = [c for c in circles if c]
    where = {}
    for i, circle in enumerate(circles):
        for e in circle:
            where[e] = i
    pool = list(range(2 * n_chords))
    rng.shuffle(pool)
    chords = []
    for p, q in zip(pool[::2], pool[1::2]):
        twist = COHERENT if where[p] == where[q] else REVERSING
        chords.append(Chord((p, q), twist))
    circles.extend(() for _ in range(free_circles))
    return ChordDiagram(tuple(circles), tuple(chords))


def is_flip_consistent(d: Diagram) -> bool:
    """True when flipping any single crossing changes |sD| by exactly one."""
    c = d.n_crossings
    if c == 0:
        return True
    _, circ = scan_states(d)
    for i in range(c):
        bit = 1 << i
        idx = np.arange(1 << c)
        diff = np.abs(circ[idx] - circ[idx ^ bit])
        if not np.all(diff == 1):
            return False
    return True


def random_diagram(rng: random.Random, n_crossings: int,
                   require_consistent: bool = True, max_tries: int = 200) -> Diagram:
    """Random diagram with the given crossing count.

    With require_consistent the sample is rejected until the one-flip
    rule holds, which keeps the corpus inside the planar-like class the
    extreme-coefficient formulas are stated for.
    """
    for _ in range(max_tries):
        cd = random_chord_diagram(rng, n_crossings,
                                  max_circles=rng.randint(1, 3),
                                  free_circles=rng.randrange(2))
        d = to_diagram(cd)
        if not require_consistent or is_flip_consistent(d):
            return d
    raise RuntimeError("no flip-consistent diagram found; widen max_tries")
