"""Simple graphs and the signed independent-set count f(G).

f(G) sums (-1)^|C| over all independent vertex subsets C, the empty set
included.  f_naive enumerates; f_reduced applies the reduction laws
(duplication, multiplicativity over components, and the vertex
recursion f(G) = f(G - v) - f(G - N[v])) and is held equal to f_naive
on a random corpus.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations


@dataclass(frozen=True)
class Graph:
    vertices: frozenset
    edges: frozenset
    _cache: dict = field(default_factory=dict, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "vertices", frozenset(self.vertices))
        edges = frozenset(tuple(sorted(e)) for e in self.edges)
        object.__setattr__(self, "edges", edges)
        for u, v in edges:
            if u == v:
                raise ValueError("loops are not allowed")
            if u not in self.vertices or v not in self.vertices:
                raise ValueError("edge endpoint outside the vertex set")

    @classmethod
    def from_edges(cls, edges, vertices=()) -> "Graph":
        es = [tuple(sorted(e)) for e in edges]
        vs = set(vertices)
        for u, v in es:
            vs.add(u)
            vs.add(v)
        return cls(frozenset(vs), frozenset(es))

    @property
    def n(self) -> int:
        return len(self.vertices)

    def adjacency(self):
        if "adj" not in self._cache:
            adj = {v: set() for v in self.vertices}
            for u, v in self.edges:
                adj[u].add(v)
                adj[v].add(u)
            self._cache["adj"] = adj
        return self._cache["adj"]

    def neighbors(self, v) -> set:
        return self.adjacency()[v]

    def degree(self, v) -> int:
        return len(self.adjacency()[v])

    def without(self, *vs) -> "Graph":
        drop = set(vs)
        return Graph(self.vertices - drop,
                     frozenset(e for e in self.edges if not (set(e) & drop)))

    def without_closed_neighborhood(self, v) -> "Graph":
        return self.without(v, *self.adjacency()[v])

    def induced(self, vs) -> "Graph":
        keep = set(vs)
        return Graph(frozenset(keep),
                     frozenset(e for e in self.edges if set(e) <= keep))

    def relabel(self, mapping) -> "Graph":
        return Graph(frozenset(mapping[v] for v in self.vertices),
                     frozenset((mapping[u], mapping[v]) for u, v in self.edges))

    def shifted(self, offset: int) -> "Graph":
        return self.relabel({v: v + offset for v in self.vertices})

    def components(self):
        adj = self.adjacency()
        seen = set()
        out = []
        for v in sorted(self.vertices):
            if v in seen:
                continue
            comp = {v}
            stack = [v]
            while stack:
                u = stack.pop()
                for w in adj[u]:
                    if w not in comp:
                        comp.add(w)
                        stack.append(w)
            seen |= comp
            out.append(self.induced(comp))
        return out

    def degree_sequence(self):
        return tuple(sorted(self.degree(v) for v in self.vertices))


@dataclass(frozen=True)
class RootedGraph:
    graph: Graph
    root: int

    def __post_init__(self):
        if self.root not in self.graph.vertices:
            raise ValueError("root is not a vertex")


# -- f(G) --------------------------------------------------------------------

def f_naive(g: Graph, max_vertices: int = 30) -> int:
    """Signed count over all independent sets, by direct enumeration."""
    if g.n > max_vertices:
        raise ValueError(
            f"{g.n} vertices exceeds the enumeration bound {max_vertices}; use f_reduced"
        )
    order = sorted(g.vertices)
    adj = g.adjacency()
    total = 0
    # DFS over (position, chosen-so-far); independent sets only
    stack = [(0, frozenset(), 1)]
    while stack:
        pos, forbidden, sign = stack.pop()
        total += sign
        for i in range(pos, len(order)):
            v = order[i]
            if v in forbidden:
                continue
            stack.append((i + 1, forbidden | adj[v] | {v}, -sign))
    return total


_f_memo: dict = {}


def _find_duplicate(g: Graph):
    """A vertex w deletable by the duplication law, or None."""
    adj = g.adjacency()
    order = sorted(g.vertices)
    for v in order:
        nv = adj[v]
        for w in order:
            if w == v or w in nv:
                continue
            if nv <= adj[w]:
                return w
    return None


def f_reduced(g: Graph) -> int:
    """f(G) by duplication elimination, component splitting and recursion."""
    key = (g.vertices, g.edges)
    hit = _f_memo.get(key)
    if hit is not None:
        return hit
    result = _f_reduced_inner(g)
    _f_memo[key] = result
    return result


def _f_reduced_inner(g: Graph) -> int:
    if g.n == 0:
        return 1
    adj = g.adjacency()
    if any(not adj[v] for v in g.vertices):
        return 0  # isolated vertex: factor f(single vertex) = 0
    w = _find_duplicate(g)
    if w is not None:
        return f_reduced(g.without(w))
    comps = g.components()
    if len(comps) > 1:
        out = 1
        for comp in comps:
            out *= f_reduced(comp)
            if out == 0:
                return 0
        return out
    v = max(sorted(g.vertices), key=lambda u: (g.degree(u), -u))
    return f_reduced(g.without(v)) - f_reduced(g.without_closed_neighborhood(v))


# -- named graphs and constructions -------------------------------------------

def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs at least one vertex")
    return Graph.from_edges([(i, i + 1) for i in range(n - 1)], vertices=range(n))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least three vertices")
    return Graph.from_edges([(i, (i + 1) % n) for i in range(n)])


def hexagon() -> RootedGraph:
    return RootedGraph(cycle(6), 0)


def star_join(g1: RootedGraph, g2: RootedGraph) -> Graph:
    """Disjoint union of the two graphs plus an edge joining the roots."""
    offset = (max(g1.graph.vertices) + 1) if g1.graph.vertices else 0
    h = g2.graph.shifted(offset)
    edges = set(g1.graph.edges) | set(h.edges)
    edges.add(tuple(sorted((g1.root, g2.root + offset))))
    return Graph(g1.graph.vertices | h.vertices, frozenset(edges))


def brick_type(rg: RootedGraph) -> tuple[int, int]:
    """(f(G), f(G - root))."""
    return f_reduced(rg.graph), f_reduced(rg.graph.without(rg.root))


def attach_hexagon(rg: RootedGraph) -> RootedGraph:
    """Join a fresh hexagon's vertex w to the root; the new root sits next to w.

    Maps a brick of type (n, k) to one of type (n + k, k).
    """
    offset = max(rg.graph.vertices) + 1
    hexg = cycle(6).shifted(offset)
    w, new_root = offset, offset + 1
    edges = set(rg.graph.edges) | set(hexg.edges)
    edges.add(tuple(sorted((rg.root, w))))
    return RootedGraph(Graph(rg.graph.vertices | hexg.vertices, frozenset(edges)), new_root)


def negate(rg: RootedGraph) -> Graph:
    """Star-join with a 3-vertex path rooted at an end; flips the sign of f."""
    l3 = RootedGraph(path(3), 0)
    return star_join(rg, l3)


def family_G(r: int) -> RootedGraph:
    """Hexagon chain with f = r + 1 and brick type (r + 1, 1)."""
    if r < 1:
        raise ValueError("r must be at least 1")
    rg = hexagon()
    for _ in range(r - 1):
        rg = attach_hexagon(rg)
    return rg


def family_F(r: int) -> RootedGraph:
    """Hexagon chain rooted at the attachment vertex; f follows 2, 3, 5, 8, ...

    Each attachment maps a brick of type (n, k) to one of type (n + k, n):
    removing the new root w leaves the old graph times a 5-vertex path,
    whose f is 1.
    """
    if r < 1:
        raise ValueError("r must be at least 1")
    rg = hexagon()
    for _ in range(r - 1):
        offset = max(rg.graph.vertices) + 1
        hexg = cycle(6).shifted(offset)
        w = offset
        edges = set(rg.graph.edges) | set(hexg.edges)
        edges.add(tuple(sorted((rg.root, w))))
        rg = RootedGraph(Graph(rg.graph.vertices | hexg.vertices, frozenset(edges)), w)
    return rg


@dataclass(frozen=True)
class Building:
    """A star of bricks around a central vertex.

    `center` is the hub, `brick_roots` the vertices the bricks were
    rooted at, `intermediates` the subdividing vertices (complicated
    form only).
    """

    graph: Graph
    center: int
    brick_roots: tuple
    intermediates: tuple | None = None


def building_simple(bricks) -> Building:
    """Join a central vertex to the root of every brick."""
    if not bricks:
        raise ValueError("a building needs at least one brick")
    center = 0
    vertices = {center}
    edges = set()
    roots = []
    offset = 1
    for rg in bricks:
        h = rg.graph.shifted(offset)
        vertices |= h.vertices
        edges |= set(h.edges)
        root = rg.root + offset
        roots.append(root)
        edges.add(tuple(sorted((center, root))))
        offset = max(h.vertices) + 1
    return Building(Graph(frozenset(vertices), frozenset(edges)), center, tuple(roots))


def building_complicated(bricks) -> Building:
    """As building_simple, but with one extra vertex on every spoke."""
    if not bricks:
        raise ValueError("a building needs at least one brick")
    center = 0
    vertices = {center}
    edges = set()
    roots = []
    mids = []
    offset = 1
    for rg in bricks:
        h = rg.graph.shifted(offset)
        vertices |= h.vertices
        edges |= set(h.edges)
        root = rg.root + offset
        roots.append(root)
        mid = max(h.vertices) + 1
        mids.append(mid)
        vertices.add(mid)
        edges.add(tuple(sorted((center, mid))))
        edges.add(tuple(sorted((mid, root))))
        offset = mid + 1
    return Building(Graph(frozenset(vertices), frozenset(edges)), center, tuple(roots), tuple(mids))


# -- isomorphism (brute force with degree pruning) ----------------------------

def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or len(g1.edges) != len(g2.edges):
        return False
    if g1.degree_sequence() != g2.degree_sequence():
        return False
    vs1 = sorted(g1.vertices, key=lambda v: (-g1.degree(v), v))
    vs2 = sorted(g2.vertices)
    adj1, adj2 = g1.adjacency(), g2.adjacency()

    def extend(i, mapping, used):
        if i == len(vs1):
            return True
        v = vs1[i]
        for w in vs2:
            if w in used or g1.degree(v) != g2.degree(w):
                continue
            ok = True
            for u in adj1[v]:
                if u in mapping and mapping[u] not in adj2[w]:
                    ok = False
                    break
            if not ok:
                continue
            for u, x in mapping.items():
                if u not in adj1[v] and x in adj2[w]:
                    ok = False
                    break
            if not ok:
                continue
            mapping[v] = w
            used.add(w)
            if extend(i + 1, mapping, used):
                return True
            del mapping[v]
            used.discard(w)
        return False

    return extend(0, {}, set())


# -- brick search --------------------------------------------------------------

def _atlas_graphs(max_vertices: int):
    import networkx as nx

    for ag in nx.graph_atlas_g():
        if ag.number_of_nodes() == 0 or ag.number_of_nodes() > max_vertices:
            continue
        yield Graph.from_edges(ag.edges(), vertices=ag.nodes())


def brick_search(n: int, k: int, max_vertices: int = 8) -> RootedGraph | None:
    """Smallest rooted graph (by search order) with f(G) = n, f(G - root) = k.

    Exhausts all graphs on up to 7 vertices, then one-vertex extensions
    of the 7-vertex graphs up to the requested bound.
    """
    if max_vertices > 10:
        raise ValueError("search bound is 10 vertices")
    for g in _atlas_graphs(min(max_vertices, 7)):
        if f_reduced(g) != n:
            continue
        for v in sorted(g.vertices):
            if f_reduced(g.without(v)) == k:
                return RootedGraph(g, v)
    if max_vertices <= 7:
        return None
    # extend 7-vertex graphs by one vertex joined to every nonempty subset
    for g in _atlas_graphs(7):
        if g.n != 7:
            continue
        base = sorted(g.vertices)
        new = max(base) + 1
        for size in range(1, 8):
            for nbrs in combinations(base, size):
                edges = set(g.edges) | {(b, new) for b in nbrs}
                h = Graph(g.vertices | {new}, frozenset(edges))
                if f_reduced(h) != n:
                    continue
                for v in sorted(h.vertices):
                    if f_reduced(h.without(v)) == k:
                        return RootedGraph(h, v)
    return None


# -- chord-diagram realization --------------------------------------------------

def circle_word(comp: Graph):
    """Double-occurrence word on one circle with interlacement graph `comp`.

    Vertices are inserted in BFS order, each placement checked against
    the required adjacencies; returns the word as a list of vertex
    labels (each twice) or None when no single-circle realization
    exists.
    """
    order = []
    adj = comp.adjacency()
    seen = set()
    for v0 in sorted(comp.vertices):
        if v0 in seen:
            continue
        queue = [v0]
        seen.add(v0)
        while queue:
            u = queue.pop(0)
            order.append(u)
            for w in sorted(adj[u]):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)

    def consistent(word, placed):
        pos = {}
        for t, v in enumerate(word):
            pos.setdefault(v, []).append(t)
        for i, v in enumerate(placed):
            for w in placed[i + 1:]:
                (a1, a2), (b1, b2) = pos[v], pos[w]
                inter = (a1 < b1 < a2 < b2) or (b1 < a1 < b2 < a2)
                if inter != (w in adj[v]):
                    return False
        return True

    def search(i, word):
        if i == len(order):
            return word
        v = order[i]
        L = len(word)
        for a in range(L + 1):
            for b in range(a + 1, L + 2):
                cand = word[:a] + [v] + word[a:b - 1] + [v] + word[b - 1:]
                if consistent(cand, order[: i + 1]):
                    got = search(i + 1, cand)
                    if got is not None:
                        return got
        return None

    if not order:
        return []
    first = order[0]
    return search(1, [first, first])


def realize_as_chord_diagram(g: Graph, max_circles: int = 2, max_vertices: int = 12):
    """A chord diagram whose interlacement graph is isomorphic to g.

    Every chord gets both endpoints on one circle; each connected
    component with an edge needs its own circle, isolated vertices share
    one.  Returns None when the backtracking search finds nothing
    (not every graph is a circle graph).
    """
    from . import chords as chords_mod

    if g.n > max_vertices:
        raise ValueError(f"{g.n} vertices exceeds the realization bound {max_vertices}")
    comps = g.components()
    nontrivial = [c for c in comps if len(c.edges) > 0]
    isolated = [c for c in comps if len(c.edges) == 0]
    needed = len(nontrivial) + (1 if isolated else 0)
    if needed > max(max_circles, 1) and (nontrivial or isolated):
        if needed > max_circles:
            return None

    circles = []
    chord_list = []

    next_id = 0
    for comp in nontrivial:
        word = circle_word(comp)
        if word is None:
            return None
        ids = {}
        seq = []
        for v in word:
            if v not in ids:
                ids[v] = (next_id, next_id + 1)
                next_id += 2
                seq.append(ids[v][0])
            else:
                seq.append(ids[v][1])
        circles.append(tuple(seq))
        for v in sorted(ids):
            chord_list.append(chords_mod.Chord(ids[v], chords_mod.COHERENT))
    if isolated:
        seq = []
        for comp in isolated:
            (v,) = comp.vertices
            seq.extend([next_id, next_id + 1])
            chord_list.append(chords_mod.Chord((next_id, next_id + 1), chords_mod.COHERENT))
            next_id += 2
        circles.append(tuple(seq))
    return chords_mod.ChordDiagram(tuple(circles), tuple(chord_list))


# -- file formats ----------------------------------------------------------------

def graph_to_text(g: Graph) -> str:
    lines = [f"vertices: {g.n}"]
    index = {v: i for i, v in enumerate(sorted(g.vertices))}
    for u, v in sorted(g.edges):
        lines.append(f"{index[u]} {index[v]}")
    return "\n".join(lines) + "\n"


def graph_from_text(text: str) -> Graph:
    vertices = set()
    edges = []
    declared = None
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.lower().startswith("vertices:"):
            declared = int(line.split(":", 1)[1])
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line: {raw!r}")
        u, v = int(parts[0]), int(parts[1])
        vertices.update((u, v))
        edges.append((u, v))
    if declared is not None:
        vertices.update(range(declared))
    return Graph.from_edges(edges, vertices=vertices)


def graph_to_json_obj(g: Graph):
    index = {v: i for i, v in enumerate(sorted(g.vertices))}
    return {"vertices": g.n, "edges": [[index[u], index[v]] for u, v in sorted(g.edges)]}


def graph_from_json_obj(obj) -> Graph:
    return Graph.from_edges([tuple(e) for e in obj["edges"]], vertices=range(obj["vertices"]))
