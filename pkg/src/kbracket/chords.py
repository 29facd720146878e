"""Chord diagrams of smoothed link diagrams.

A ChordDiagram records the circles of a smoothing as cyclic endpoint
sequences plus one chord per crossing.  Each chord carries a twist flag
telling how the opposite smoothing reconnects relative to the recorded
circle traversal:

  coherent:  (out_p, in_q), (out_q, in_p)
  reversing: (in_p, in_q), (out_p, out_q)

where in/out are the traversal arc-ends at the chord's endpoints p, q.
Surgery (switching a chord to its opposite smoothing) is implemented on
cyclic words.  Reversed word segments flip the traversal sense of the
endpoints inside them, and a flipped sense at an endpoint flips the
effective twist of its chord; the word machinery tracks this, and the
union-find oracle on the rebuilt diagram pins it down in the tests.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .diagram import Crossing, Diagram

COHERENT = "coherent"
REVERSING = "reversing"


@dataclass(frozen=True)
class Chord:
    ends: tuple
    twist: str = COHERENT

    def __post_init__(self):
        p, q = self.ends
        object.__setattr__(self, "ends", (p, q))
        if self.twist not in (COHERENT, REVERSING):
            raise ValueError(f"unknown twist flag {self.twist!r}")


@dataclass(frozen=True)
class ChordDiagram:
    circles: tuple  # tuple of tuples of endpoint ids; empty tuple = free circle
    chords: tuple   # tuple of Chord

    def __post_init__(self):
        object.__setattr__(self, "circles", tuple(tuple(c) for c in self.circles))
        chords = tuple(c if isinstance(c, Chord) else Chord(tuple(c[0]), c[1]) for c in self.chords)
        object.__setattr__(self, "chords", chords)
        placed = [e for circle in self.circles for e in circle]
        if len(placed) != len(set(placed)):
            raise ValueError("an endpoint appears on more than one circle position")
        chord_ends = [e for ch in self.chords for e in ch.ends]
        if len(chord_ends) != len(set(chord_ends)):
            raise ValueError("an endpoint belongs to more than one chord")
        if sorted(placed) != sorted(chord_ends):
            raise ValueError("circle endpoints and chord endpoints disagree")

    @property
    def n_chords(self) -> int:
        return len(self.chords)

    def circle_of(self):
        """endpoint -> index of the circle carrying it."""
        where = {}
        for i, circle in enumerate(self.circles):
            for e in circle:
                where[e] = i
        return where

    def to_json_obj(self):
        return {
            "circles": [list(c) for c in self.circles],
            "chords": [{"ends": list(ch.ends), "twist": ch.twist} for ch in self.chords],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj) -> "ChordDiagram":
        circles = tuple(tuple(c) for c in obj["circles"])
        chords = tuple(Chord(tuple(ch["ends"]), ch["twist"]) for ch in obj["chords"])
        return cls(circles, chords)

    @classmethod
    def from_json(cls, text: str) -> "ChordDiagram":
        return cls.from_json_obj(json.loads(text))


# -- diagram <-> chord diagram ---------------------------------------------

def a_state_chords(d: Diagram) -> ChordDiagram:
    """Trace the circles of the all-A smoothing and record one chord per crossing.

    Crossing i's two smoothing arcs become endpoints 2i and 2i+1 (in the
    sorted order of its a_pairing).  Twist flags are chosen so that
    to_diagram inverts this map.
    """
    n = d.n_ends
    arc = d.arc_partner()
    pa = d.pairing_partner("A")

    endpoint_of_end = {}
    for i, cr in enumerate(d.crossings):
        for k, (u, v) in enumerate(cr.a_pairing):
            endpoint_of_end[4 * i + u] = 2 * i + k
            endpoint_of_end[4 * i + v] = 2 * i + k

    circles = []
    inout = {}  # endpoint -> (in end, out end) along the recorded traversal
    visited = [False] * n
    for e0 in range(n):
        if visited[e0]:
            continue
        word = []
        e = e0
        while not visited[e]:
            visited[e] = True
            f = pa[e]
            visited[f] = True
            ep = endpoint_of_end[e]
            word.append(ep)
            inout[ep] = (e, f)
            e = arc[f]
        circles.append(tuple(word))
    for _ in range(d.free_circles):
        circles.append(())

    chords = []
    for i, cr in enumerate(d.crossings):
        p, q = 2 * i, 2 * i + 1
        in_p, out_p = inout[p]
        in_q, out_q = inout[q]
        b = set(cr.b_pairing)
        local = lambda e: e - 4 * i
        coherent = {tuple(sorted((local(out_p), local(in_q)))),
                    tuple(sorted((local(out_q), local(in_p))))}
        reversing = {tuple(sorted((local(in_p), local(in_q)))),
                     tuple(sorted((local(out_p), local(out_q))))}
        if b == coherent:
            chords.append(Chord((p, q), COHERENT))
        elif b == reversing:
            chords.append(Chord((p, q), REVERSING))
        else:
            raise AssertionError("b_pairing matches neither reconnection pattern")
    return ChordDiagram(tuple(circles), tuple(chords))


def to_diagram(cd: ChordDiagram) -> Diagram:
    """Rebuild the diagram whose all-A smoothing is this chord diagram."""
    index_of = {ch.ends: j for j, ch in enumerate(cd.chords)}
    slot = {}  # endpoint -> (in end, out end)
    for j, ch in enumerate(cd.chords):
        p, q = ch.ends
        slot[p] = (4 * j + 0, 4 * j + 1)
        slot[q] = (4 * j + 2, 4 * j + 3)

    arcs = []
    free = 0
    for circle in cd.circles:
        if not circle:
            free += 1
            continue
        k = len(circle)
        for t in range(k):
            out_cur = slot[circle[t]][1]
            in_next = slot[circle[(t + 1) % k]][0]
            arcs.append((out_cur, in_next))

    crossings = []
    for ch in cd.chords:
        a = ((0, 1), (2, 3))
        if ch.twist == COHERENT:
            b = ((1, 2), (0, 3))
        else:
            b = ((0, 2), (1, 3))
        crossings.append(Crossing(a, b))
    return Diagram(tuple(crossings), tuple(arcs), free)


# -- surgery on cyclic words ------------------------------------------------

def _signed_words(cd: ChordDiagram):
    """Circles as lists of (endpoint, sense) with sense True = original."""
    return [tuple((e, True) for e in circle) for circle in cd.circles]


def _surger(words, p, q, twist):
    """Switch one chord to its opposite smoothing.

    Returns the new word list.  The effective reconnection pattern is the
    chord's twist flag XORed with the traversal senses at its endpoints.
    """
    loc = {}
    for wi, word in enumerate(words):
        for t, (e, sense) in enumerate(word):
            if e == p or e == q:
                loc[e] = (wi, t, sense)
    wp, tp, sense_p = loc[p]
    wq, tq, sense_q = loc[q]
    reversing = (twist == REVERSING) ^ (not sense_p) ^ (not sense_q)

    def flip(segment):
        return tuple((e, not s) for e, s in reversed(segment))

    if wp == wq:
        word = words[wp]
        if tp > tq:
            tp, tq = tq, tp
        alpha = word[tp + 1:tq]
        beta = word[tq + 1:] + word[:tp]
        rest = [w for i, w in enumerate(words) if i != wp]
        if not reversing:
            rest.append(alpha)
            rest.append(beta)
        else:
            rest.append(alpha + flip(beta))
        return rest
    alpha = words[wp][tp + 1:] + words[wp][:tp]
    beta = words[wq][tq + 1:] + words[wq][:tq]
    rest = [w for i, w in enumerate(words) if i not in (wp, wq)]
    if not reversing:
        rest.append(alpha + beta)
    else:
        rest.append(alpha + flip(beta))
    return rest


def resmooth_count(cd: ChordDiagram, subset) -> int:
    """Circle count after switching every chord in `subset` to its B-smoothing.

    Independent of the union-find route through to_diagram; the two are
    held equal in the tests.
    """
    chosen = set()
    for item in subset:
        if isinstance(item, Chord):
            chosen.add(item.ends)
        elif isinstance(item, int):
            chosen.add(cd.chords[item].ends)
        else:
            chosen.add(tuple(item))
    words = _signed_words(cd)
    for ch in cd.chords:
        if ch.ends in chosen:
            words = _surger(words, ch.ends[0], ch.ends[1], ch.twist)
    return len(words)


# -- interleaving graphs -----------------------------------------------------

def _interleaves(circle, a_ends, b_ends) -> bool:
    pos = {e: t for t, e in enumerate(circle)}
    i, j = sorted((pos[a_ends[0]], pos[a_ends[1]]))
    inside = sum(1 for e in b_ends if i < pos[e] < j)
    return inside == 1


def lando_graph(cd: ChordDiagram):
    """Graph on same-circle chords; edges join interleaving pairs."""
    from .graphs import Graph

    where = cd.circle_of()
    verts = []
    for j, ch in enumerate(cd.chords):
        p, q = ch.ends
        if where[p] == where[q]:
            verts.append(j)
    edges = set()
    for x in range(len(verts)):
        for y in range(x + 1, len(verts)):
            j, k = verts[x], verts[y]
            cj = where[cd.chords[j].ends[0]]
            ck = where[cd.chords[k].ends[0]]
            if cj != ck:
                continue
            circle = cd.circles[cj]
            if _interleaves(circle, cd.chords[j].ends, cd.chords[k].ends):
                edges.add((j, k))
    return Graph(frozenset(verts), frozenset(edges))


def interlacement_graph(cd: ChordDiagram):
    """Graph on all chords; same-circle interleaving pairs are adjacent."""
    from .graphs import Graph

    where = cd.circle_of()
    verts = list(range(len(cd.chords)))
    edges = set()
    for j in range(len(verts)):
        for k in range(j + 1, len(verts)):
            pj, qj = cd.chords[j].ends
            pk, qk = cd.chords[k].ends
            if where[pj] != where[qj] or where[pk] != where[qk]:
                continue
            if where[pj] != where[pk]:
                continue
            circle = cd.circles[where[pj]]
            if _interleaves(circle, (pj, qj), (pk, qk)):
                edges.add((j, k))
    return Graph(frozenset(verts), frozenset(edges))


# -- canonical form ----------------------------------------------------------

def canonical_form(cd: ChordDiagram):
    """A label-free canonical encoding, equal for isomorphic chord diagrams.

    Isomorphism allows renaming endpoints, rotating or reflecting each
    circle, and reordering circles.  Reflecting a circle toggles the
    twist flag of the cross-circle chords attached to it.
    """
    where = cd.circle_of()
    chord_of_end = {}
    for j, ch in enumerate(cd.chords):
        for e in ch.ends:
            chord_of_end[e] = j
    same_circle = {j: where[ch.ends[0]] == where[ch.ends[1]]
                   for j, ch in enumerate(cd.chords)}

    nonempty = [c for c in cd.circles if c]
    n_free = len(cd.circles) - len(nonempty)

    variants_per_circle = []
    for circle in nonempty:
        variants = []
        k = len(circle)
        for refl in (False, True):
            seq = tuple(reversed(circle)) if refl else circle
            for r in range(k):
                rot = seq[r:] + seq[:r]
                variants.append((rot, refl))
        variants_per_circle.append(variants)

    import itertools

    def encode(order, combo):
        relabel = {}
        seqs = []
        refl_of_circle = {}
        for i, (rot, refl) in zip(order, combo):
            refl_of_circle[where[nonempty[i][0]]] = refl
            row = []
            for e in rot:
                j = chord_of_end[e]
                if j not in relabel:
                    relabel[j] = len(relabel)
                row.append(relabel[j])
            seqs.append(tuple(row))
        flags = []
        for j in sorted(relabel, key=relabel.get):
            ch = cd.chords[j]
            twist = ch.twist
            if not same_circle[j]:
                t1 = refl_of_circle[where[ch.ends[0]]]
                t2 = refl_of_circle[where[ch.ends[1]]]
                if t1 ^ t2:
                    twist = COHERENT if twist == REVERSING else REVERSING
            flags.append((same_circle[j], twist))
        return (tuple(seqs), tuple(flags), n_free)

    def local_key(variant):
        rot, _ = variant
        first = {}
        row = []
        for e in rot:
            j = chord_of_end[e]
            if j not in first:
                first[j] = len(first)
            row.append((first[j], same_circle[j]))
        return tuple(row)

    # circles of equal length are interchangeable, so orderings within each
    # length block are searched as well
    by_len = {}
    for i in range(len(nonempty)):
        by_len.setdefault(len(nonempty[i]), []).append(i)
    blocks = [by_len[k] for k in sorted(by_len, reverse=True)]

    pools = {i: variants_per_circle[i] for i in range(len(nonempty))}
    total = 1
    for block in blocks:
        total *= len(list(itertools.permutations(block)))
    for i, vs in pools.items():
        total *= len(vs)
    if total > 200000:
        for i, vs in pools.items():
            mk = min(local_key(v) for v in vs)
            pools[i] = [v for v in vs if local_key(v) == mk]

    best = None
    for perm_combo in itertools.product(*(itertools.permutations(b) for b in blocks)):
        order = [i for block in perm_combo for i in block]
        for combo in itertools.product(*(pools[i] for i in order)):
            enc = encode(order, combo)
            if best is None or enc < best:
                best = enc
    if best is None:
        best = ((), (), n_free)
    return best


def isomorphic(cd1: ChordDiagram, cd2: ChordDiagram) -> bool:
    return canonical_form(cd1) == canonical_form(cd2)


# -- defect-bounded state classes -------------------------------------------

class GammaEnumerationError(RuntimeError):
    """Raised when the defect-bounded scan grows past its node budget."""


def gamma_sums(cd: ChordDiagram, node_cap: int = 2_000_000):
    """Signed sums over the defect-0 and defect-2 state classes.

    A subset T of chords switched to B has defect |s_A| + |T| - |s(T)|,
    which never decreases as T grows.  Returns (S0, S1, T0) with
    S0 = sum over defect-0 sets of (-1)^|T|, S1 the same sum weighted by
    |T|, and T0 the sum of (-1)^|T| over defect-2 sets.
    """
    n = len(cd.chords)
    base = _signed_words(cd)
    s_a = len(base)
    S0 = S1 = T0 = 0
    nodes = 0
    stack = [(0, base, 0, 0)]  # (next index, words, size, defect)
    while stack:
        start, words, size, defect = stack.pop()
        nodes += 1
        if nodes > node_cap:
            raise GammaEnumerationError(
                "defect scan exceeded its node budget; "
                "use the full bracket within the enumeration limit instead"
            )
        if defect == 0:
            sign = -1 if size % 2 else 1
            S0 += sign
            S1 += sign * size
        elif defect == 2:
            T0 += -1 if size % 2 else 1
        for j in range(start, n):
            ch = cd.chords[j]
            new_words = _surger(words, ch.ends[0], ch.ends[1], ch.twist)
            new_defect = s_a + size + 1 - len(new_words)
            if new_defect <= 2:
                stack.append((j + 1, new_words, size + 1, new_defect))
    return S0, S1, T0


def second_top_coeff(d: Diagram) -> int:
    """Bracket coefficient at degree M-4 via the defect-bounded classes."""
    cd = a_state_chords(d)
    s_a = len(cd.circles)
    S0, S1, T0 = gamma_sums(cd)
    sign = -1 if (s_a - 1) % 2 else 1
    return sign * ((s_a - 1) * S0 + S1 + T0)
