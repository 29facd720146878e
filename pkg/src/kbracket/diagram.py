"""Embedding-free link diagrams and the exact Kauffman bracket state sum.

A diagram stores, for every crossing, the two reconnection patterns of
its four strand-ends (the A-smoothing and the B-smoothing), a perfect
matching of all strand-ends into arcs, and a count of crossing-free
circles.  Over/under data and any planar embedding are never stored:
the bracket depends only on the two smoothings.

Strand-ends are numbered 4*crossing + slot with slots 0..3.  States are
integers 0..2^c-1; bit i is crossing i's label (0 = A, 1 = B).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .laurent import LaurentPoly, delta_pow

DEFAULT_LIMIT = 24

_BLOCK_BITS = 15  # states processed per vectorized block
_CHUNK_BITS = 18  # states per worker chunk; fixed so results never depend on worker count


class EnumerationLimitError(RuntimeError):
    """Raised when a full state enumeration would exceed the configured limit."""


def _normalize_pairing(pairing):
    pairs = tuple(sorted(tuple(sorted(p)) for p in pairing))
    flat = sorted(x for p in pairs for x in p)
    if flat != [0, 1, 2, 3] or len(pairs) != 2:
        raise ValueError(f"pairing {pairing!r} is not a perfect matching on slots 0..3")
    return pairs


@dataclass(frozen=True)
class Crossing:
    """A crossing, given by its two smoothings of the four local ends."""

    a_pairing: tuple
    b_pairing: tuple

    def __post_init__(self):
        object.__setattr__(self, "a_pairing", _normalize_pairing(self.a_pairing))
        object.__setattr__(self, "b_pairing", _normalize_pairing(self.b_pairing))
        if self.a_pairing == self.b_pairing:
            raise ValueError("a_pairing and b_pairing must differ")

    def strand_pairing(self):
        """The third matching: how the two strands actually pass through."""
        used = {self.a_pairing, self.b_pairing}
        for m in (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2))):
            if m not in used:
                return m
        raise AssertionError("unreachable")


@dataclass(frozen=True)
class Diagram:
    crossings: tuple
    arcs: tuple
    free_circles: int = 0
    _cache: dict = field(default_factory=dict, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(self.crossings))
        arcs = tuple(tuple(sorted(a)) for a in self.arcs)
        object.__setattr__(self, "arcs", tuple(sorted(arcs)))
        n = 4 * len(self.crossings)
        seen = [0] * n
        for x, y in self.arcs:
            if x == y:
                raise ValueError("arc pairs an end with itself")
            seen[x] += 1
            seen[y] += 1
        if any(s != 1 for s in seen):
            raise ValueError("arcs are not a perfect matching on all strand ends")
        if self.free_circles < 0:
            raise ValueError("free_circles must be nonnegative")

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    @property
    def n_ends(self) -> int:
        return 4 * len(self.crossings)

    def arc_partner(self):
        """arc partner of every end, as a list."""
        part = [0] * self.n_ends
        for x, y in self.arcs:
            part[x] = y
            part[y] = x
        return part

    def pairing_partner(self, side: str):
        """Partner of every end under the A (or B) smoothing at its crossing."""
        part = [0] * self.n_ends
        for i, cr in enumerate(self.crossings):
            pairing = cr.a_pairing if side == "A" else cr.b_pairing
            for u, v in pairing:
                part[4 * i + u] = 4 * i + v
                part[4 * i + v] = 4 * i + u
        return part

    def _succ_arrays(self):
        """Per-label successor arrays succ[e] = arc[pairing[e]], cached."""
        key = "succ"
        if key not in self._cache:
            arc = self.arc_partner()
            pa = self.pairing_partner("A")
            pb = self.pairing_partner("B")
            succ_a = np.array([arc[pa[e]] for e in range(self.n_ends)], dtype=np.int32)
            succ_b = np.array([arc[pb[e]] for e in range(self.n_ends)], dtype=np.int32)
            coe = np.arange(self.n_ends, dtype=np.int64) // 4
            self._cache[key] = (succ_a, succ_b, coe)
        return self._cache[key]

    # -- serialization ------------------------------------------------

    def to_json_obj(self):
        def e(end):
            return [end // 4, end % 4]

        return {
            "crossings": [
                {
                    "a": [list(p) for p in cr.a_pairing],
                    "b": [list(p) for p in cr.b_pairing],
                }
                for cr in self.crossings
            ],
            "arcs": [[e(x), e(y)] for x, y in self.arcs],
            "free_circles": self.free_circles,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj) -> "Diagram":
        crossings = []
        for cr in obj["crossings"]:
            crossings.append(Crossing(tuple(tuple(p) for p in cr["a"]),
                                      tuple(tuple(p) for p in cr["b"])))
        arcs = []
        for (ci1, s1), (ci2, s2) in obj["arcs"]:
            arcs.append((4 * ci1 + s1, 4 * ci2 + s2))
        return cls(tuple(crossings), tuple(arcs), int(obj.get("free_circles", 0)))

    @classmethod
    def from_json(cls, text: str) -> "Diagram":
        return cls.from_json_obj(json.loads(text))


class UnionFind:
    """Union-find with path compression; one instance per component count."""

    __slots__ = ("parent",)

    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        p = self.parent
        root = x
        while p[root] != root:
            root = p[root]
        while p[x] != root:
            p[x], x = root, p[x]
        return root

    def union(self, x: int, y: int) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        self.parent[ry] = rx
        return True


def components(d: Diagram, state: int) -> int:
    """Number of circles |sD| of the smoothed diagram, by union-find."""
    n = d.n_ends
    if n == 0:
        return d.free_circles
    uf = UnionFind(n)
    count = n
    for x, y in d.arcs:
        if uf.union(x, y):
            count -= 1
    for i, cr in enumerate(d.crossings):
        pairing = cr.b_pairing if (state >> i) & 1 else cr.a_pairing
        for u, v in pairing:
            if uf.union(4 * i + u, 4 * i + v):
                count -= 1
    return count + d.free_circles


def link_components(d: Diagram) -> int:
    """Number of components of the underlying link diagram (strands pass through)."""
    n = d.n_ends
    if n == 0:
        return d.free_circles
    uf = UnionFind(n)
    count = n
    for x, y in d.arcs:
        if uf.union(x, y):
            count -= 1
    for i, cr in enumerate(d.crossings):
        for u, v in cr.strand_pairing():
            if uf.union(4 * i + u, 4 * i + v):
                count -= 1
    return count + d.free_circles


def smoothing_circle_arcs(d: Diagram, side: str):
    """Arcs of d grouped by the circle of the all-A or all-B smoothing.

    Groups are sorted by their smallest end, so the order is stable.
    """
    n = d.n_ends
    uf = UnionFind(n)
    for x, y in d.arcs:
        uf.union(x, y)
    pp = d.pairing_partner(side)
    for e in range(n):
        uf.union(e, pp[e])
    groups: dict[int, list] = {}
    for a in d.arcs:
        groups.setdefault(uf.find(a[0]), []).append(a)
    return sorted(groups.values(), key=lambda g: min(min(a) for a in g))


def mirror(d: Diagram) -> Diagram:
    """Swap the A- and B-smoothing at every crossing."""
    return Diagram(
        tuple(Crossing(cr.b_pairing, cr.a_pairing) for cr in d.crossings),
        d.arcs,
        d.free_circles,
    )


def extreme_degrees(d: Diagram) -> tuple[int, int]:
    """The extreme state degrees (m, M) from the all-B and all-A states."""
    c = d.n_crossings
    s_a = components(d, 0)
    s_b = components(d, (1 << c) - 1)
    m = -c - 2 * s_b + 2
    M = c + 2 * s_a - 2
    return m, M


# -- vectorized state scan ------------------------------------------------

_POP16 = np.array([bin(i).count("1") for i in range(1 << 16)], dtype=np.int64)


def _popcount(states: np.ndarray) -> np.ndarray:
    return _POP16[states & 0xFFFF] + _POP16[(states >> 16) & 0xFFFF]


def _circle_counts_block(states, succ_a, succ_b, coe):
    """Circle count for every state in the block, by min-label doubling.

    succ = arc . pairing is a permutation of the ends whose orbits pair
    up two per circle, so circles = orbits / 2.  Successors are kept as
    flat indices into the (block, ends) matrix so each doubling round is
    two flat takes and a minimum.
    """
    n = succ_a.shape[0]
    B = states.shape[0]
    bits = ((states[:, None] >> coe[None, :]) & 1).astype(bool)
    base = (np.arange(B, dtype=np.int64) * n)[:, None]
    P = np.where(bits, succ_b[None, :], succ_a[None, :]) + base
    local = np.arange(n, dtype=np.int32)
    M = np.broadcast_to(local, (B, n)).copy()
    span = 1
    while span < n:
        np.minimum(M, M.take(P), out=M)
        P = P.take(P)
        span *= 2
    orbits = (M == local[None, :]).sum(axis=1)
    return orbits // 2


def _scan_range(d: Diagram, start: int, stop: int, kmax: int) -> np.ndarray:
    """Histogram over (b(s), circles) for states in [start, stop)."""
    c = d.n_crossings
    succ_a, succ_b, coe = d._succ_arrays()
    hist = np.zeros((c + 1) * (kmax + 1), dtype=np.int64)
    block = 1 << _BLOCK_BITS
    for lo in range(start, stop, block):
        hi = min(lo + block, stop)
        states = np.arange(lo, hi, dtype=np.int64)
        circ = _circle_counts_block(states, succ_a, succ_b, coe)
        b = _popcount(states)
        idx = b * (kmax + 1) + circ
        hist += np.bincount(idx, minlength=hist.shape[0])
    return hist


def _worker_scan(args):
    obj, start, stop, kmax = args
    d = Diagram.from_json_obj(obj)
    return _scan_range(d, start, stop, kmax)


def state_histogram(d: Diagram, workers: int = 1) -> np.ndarray:
    """Joint histogram of (b(s), |sD| without free circles) over all states."""
    c = d.n_crossings
    kmax = max(1, d.n_ends // 2)
    total = 1 << c
    if workers <= 1 or total <= (1 << _CHUNK_BITS):
        return _scan_range(d, 0, total, kmax)
    from concurrent.futures import ProcessPoolExecutor

    chunk = 1 << _CHUNK_BITS
    obj = d.to_json_obj()
    tasks = [(obj, lo, min(lo + chunk, total), kmax) for lo in range(0, total, chunk)]
    hist = np.zeros((c + 1) * (kmax + 1), dtype=np.int64)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(_worker_scan, tasks):
            hist += part
    return hist


def _assemble(d: Diagram, hist: np.ndarray, kmax: int) -> LaurentPoly:
    c = d.n_crossings
    poly = LaurentPoly.zero()
    for b in range(c + 1):
        for k in range(kmax + 1):
            cnt = int(hist[b * (kmax + 1) + k])
            if cnt:
                circles = k + d.free_circles
                term = delta_pow(circles - 1).shift(c - 2 * b) * cnt
                poly = poly + term
    return poly


def bracket(d: Diagram, limit: int = DEFAULT_LIMIT, workers: int = 1) -> LaurentPoly:
    """The Kauffman bracket by exact enumeration of all 2^c states."""
    c = d.n_crossings
    if c == 0:
        if d.free_circles == 0:
            raise ValueError("empty diagram has no bracket")
        return delta_pow(d.free_circles - 1)
    if c > limit:
        raise EnumerationLimitError(
            f"{c} crossings exceeds the enumeration limit {limit}; "
            f"raise the limit or use the extreme-coefficient mode"
        )
    kmax = max(1, d.n_ends // 2)
    hist = state_histogram(d, workers=workers)
    return _assemble(d, hist, kmax)


def bracket_range(d: Diagram, start: int, stop: int) -> LaurentPoly:
    """Partial bracket over a state-index range; partials add up to bracket(d)."""
    kmax = max(1, d.n_ends // 2)
    hist = _scan_range(d, start, stop, kmax)
    return _assemble(d, hist, kmax)


def scan_states(d: Diagram, limit: int = DEFAULT_LIMIT):
    """(b, circles) arrays indexed by state, for diagrams within the limit."""
    c = d.n_crossings
    if c > limit:
        raise EnumerationLimitError(
            f"{c} crossings exceeds the enumeration limit {limit}"
        )
    succ_a, succ_b, coe = d._succ_arrays()
    total = 1 << c
    circ = np.empty(total, dtype=np.int64)
    block = 1 << _BLOCK_BITS
    for lo in range(0, total, block):
        hi = min(lo + block, total)
        states = np.arange(lo, hi, dtype=np.int64)
        circ[lo:hi] = _circle_counts_block(states, succ_a, succ_b, coe)
    b = _popcount(np.arange(total, dtype=np.int64))
    return b, circ + d.free_circles


def gamma_states(d: Diagram, side: str, limit: int = DEFAULT_LIMIT) -> set[int]:
    """The state class contributing to the extreme coefficient on one side.

    Side "A": states with |s| = |s_A| + b(s); side "B": |s| = |s_B| + a(s).
    """
    c = d.n_crossings
    b, circ = scan_states(d, limit=limit)
    if side == "A":
        target = int(circ[0])
        mask = circ == target + b
    elif side == "B":
        target = int(circ[(1 << c) - 1])
        mask = circ == target + (c - b)
    else:
        raise ValueError("side must be 'A' or 'B'")
    return set(int(s) for s in np.nonzero(mask)[0])


def extreme_coeffs(d: Diagram) -> tuple[int, int]:
    """(a_m, a_M): bracket coefficients at the extreme state degrees.

    Computed through the Lando graphs of the two extreme smoothings, so
    no state enumeration is needed; cross-validated against brute force
    in the test corpus.
    """
    from . import chords
    from .graphs import f_reduced

    cd_a = chords.a_state_chords(d)
    s_a = len(cd_a.circles)
    a_M = (-1) ** ((s_a - 1) % 2) * f_reduced(chords.lando_graph(cd_a))
    cd_b = chords.a_state_chords(mirror(d))
    s_b = len(cd_b.circles)
    a_m = (-1) ** ((s_b - 1) % 2) * f_reduced(chords.lando_graph(cd_b))
    return a_m, a_M


def second_coeffs(d: Diagram, check_limit: int = 16) -> tuple[int, int]:
    """(a_{m+4}, a_{M-4}): the second-extreme bracket coefficients.

    Uses the defect-bounded state classes on each side; for small
    diagrams the result is cross-checked against the full bracket.
    """
    from . import chords

    a_M4 = chords.second_top_coeff(d)
    a_m4 = chords.second_top_coeff(mirror(d))
    c = d.n_crossings
    if c <= check_limit and (c > 0 or d.free_circles > 0):
        poly = bracket(d, limit=check_limit)
        m, M = extreme_degrees(d)
        if poly.coeff(M - 4) != a_M4 or poly.coeff(m + 4) != a_m4:
            raise AssertionError(
                "second-extreme coefficients disagree with the full bracket"
            )
    return a_m4, a_M4
