"""Finite simplicial graphs and the combinatorics every other module rests on.

Vertices are opaque strings and keep their construction order, so that all
derived objects (complements, clique lists, iso witnesses) are deterministic
for a fixed input.  Graphs are immutable and hashable.
"""

import itertools
import os

from .errors import DomainError, InputError

CLIQUE_VERTEX_CAP = 20  # overridable through RAAG_MAX_VERTICES


class SimpleGraph:
    """A finite simplicial graph: no loops, no multiple edges.

    >>> g = SimpleGraph(["a", "b", "c"], [("a", "b"), ("b", "c")])
    >>> g.adjacent("a", "b"), g.adjacent("a", "c")
    (True, False)
    >>> sorted(g.link("b"))
    ['a', 'c']
    """

    def __init__(self, vertices, edges=()):
        vertices = tuple(vertices)
        if len(set(vertices)) != len(vertices):
            raise DomainError("vertex identifiers must be unique")
        self.vertices = vertices
        self._index = {v: i for i, v in enumerate(vertices)}
        adj = {v: set() for v in vertices}
        seen = set()
        for e in edges:
            u, v = e
            if u == v:
                raise DomainError("self-loop at %r" % (u,))
            if u not in self._index or v not in self._index:
                raise DomainError("edge %r uses an unknown vertex" % (e,))
            key = frozenset((u, v))
            if key in seen:
                raise DomainError("repeated edge %r" % (e,))
            seen.add(key)
            adj[u].add(v)
            adj[v].add(u)
        self._adj = {v: frozenset(ns) for v, ns in adj.items()}
        self.edges = tuple(
            sorted(
                (tuple(sorted(e, key=self._index.__getitem__)) for e in seen),
                key=lambda p: (self._index[p[0]], self._index[p[1]]),
            )
        )

    def __eq__(self, other):
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return self.vertices == other.vertices and set(self.edges) == set(other.edges)

    def __hash__(self):
        return hash((self.vertices, frozenset(self.edges)))

    def __repr__(self):
        return "SimpleGraph(%r, %r)" % (list(self.vertices), list(self.edges))

    def index(self, v):
        try:
            return self._index[v]
        except KeyError:
            raise DomainError("unknown vertex %r" % (v,))

    def has_vertex(self, v):
        return v in self._index

    def adjacent(self, u, v):
        self.index(u), self.index(v)
        return v in self._adj[u]

    def link(self, v):
        """Neighbors of v, in vertex order."""
        self.index(v)
        return tuple(u for u in self.vertices if u in self._adj[v])

    def star(self, v):
        """v together with its neighbors, in vertex order."""
        self.index(v)
        return tuple(u for u in self.vertices if u == v or u in self._adj[v])

    def degree(self, v):
        self.index(v)
        return len(self._adj[v])

    def is_clique(self, vs):
        vs = list(vs)
        for v in vs:
            self.index(v)
        return all(self.adjacent(u, v) for u, v in itertools.combinations(vs, 2))

    def connected_components(self):
        """Components as tuples of vertices, ordered by first vertex."""
        seen = set()
        comps = []
        for v in self.vertices:
            if v in seen:
                continue
            comp = []
            stack = [v]
            seen.add(v)
            while stack:
                u = stack.pop()
                comp.append(u)
                for w in self._adj[u]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            comps.append(tuple(sorted(comp, key=self._index.__getitem__)))
        return comps

    def to_json(self):
        return {"vertices": list(self.vertices), "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json(cls, data):
        if not isinstance(data, dict) or "vertices" not in data:
            raise InputError("graph JSON must be an object with 'vertices' and 'edges'")
        vertices = data["vertices"]
        edges = data.get("edges", [])
        if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
            raise InputError("graph vertices must be a list of strings")
        if not isinstance(edges, list) or not all(
            isinstance(e, list) and len(e) == 2 for e in edges
        ):
            raise InputError("graph edges must be a list of 2-element lists")
        try:
            return cls(vertices, [tuple(e) for e in edges])
        except DomainError as exc:
            raise InputError(str(exc))


def complement(g):
    """The graph on the same vertices whose edges are the non-edges of g."""
    edges = [
        (u, v)
        for u, v in itertools.combinations(g.vertices, 2)
        if not g.adjacent(u, v)
    ]
    return SimpleGraph(g.vertices, edges)


def induced_subgraph(g, subset):
    """Induced subgraph on `subset`; vertex order inherited from g."""
    subset = set(subset)
    for v in subset:
        g.index(v)
    vertices = [v for v in g.vertices if v in subset]
    edges = [e for e in g.edges if e[0] in subset and e[1] in subset]
    return SimpleGraph(vertices, edges)


def enumerate_cliques(g, cap=None):
    """All nonempty cliques of g as (vertices, is_maximal) pairs.

    Exponential by design; refuses graphs above the vertex cap (default
    CLIQUE_VERTEX_CAP, overridable via the RAAG_MAX_VERTICES environment
    variable).
    """
    if cap is None:
        cap = int(os.environ.get("RAAG_MAX_VERTICES", CLIQUE_VERTEX_CAP))
    if len(g.vertices) > cap:
        raise DomainError(
            "clique enumeration capped at %d vertices (got %d)" % (cap, len(g.vertices))
        )
    cliques = []
    for r in range(1, len(g.vertices) + 1):
        for combo in itertools.combinations(g.vertices, r):
            if g.is_clique(combo):
                cliques.append(combo)
    out = []
    for c in cliques:
        cs = set(c)
        # maximal iff no single vertex extends it
        maximal = not any(
            v not in cs and all(g.adjacent(v, u) for u in cs) for v in g.vertices
        )
        out.append((c, maximal))
    return out


def max_clique_size(g):
    if not g.vertices:
        raise DomainError("empty graph has no cliques")
    best = 1
    order = list(g.vertices)

    def extend(clique, candidates):
        nonlocal best
        best = max(best, len(clique))
        for i, v in enumerate(candidates):
            if len(clique) + len(candidates) - i <= best:
                break
            if all(g.adjacent(v, u) for u in clique):
                extend(clique + [v], candidates[i + 1 :])

    extend([], order)
    return best


def join_factors(g):
    """A nontrivial join decomposition (S1, S2) of g, or None.

    g is a join iff its complement is disconnected; S1 is then the smallest
    complement component (ties broken by vertex order) and S2 the rest.
    Every S1-S2 pair is adjacent in g.
    """
    if not g.vertices:
        raise DomainError("empty graph")
    comps = complement(g).connected_components()
    if len(comps) < 2:
        return None
    comps = sorted(comps, key=lambda c: (len(c), g.index(c[0])))
    s1 = comps[0]
    s2 = tuple(v for v in g.vertices if v not in set(s1))
    return (s1, s2)


def dominates(g, w, v):
    """True iff the link of v is contained in the star of w."""
    if v == w:
        raise DomainError("dominates requires two distinct vertices")
    lk = set(g.link(v))
    st = set(g.star(w))
    return lk <= st


def _refine_colors(g):
    """Iterated degree refinement; returns a vertex -> color map."""
    color = {v: g.degree(v) for v in g.vertices}
    while True:
        sig = {
            v: (color[v], tuple(sorted(color[u] for u in g.link(v))))
            for v in g.vertices
        }
        palette = {s: i for i, s in enumerate(sorted(set(sig.values())))}
        new = {v: palette[sig[v]] for v in g.vertices}
        if new == color:
            return color
        color = new


def graph_isomorphic(g1, g2):
    """An adjacency-preserving bijection g1 -> g2 (as a dict), or None.

    Backtracking over color classes from iterated degree refinement; exact
    and deterministic, intended for the small graphs this toolkit works with.
    """
    if len(g1.vertices) != len(g2.vertices) or len(g1.edges) != len(g2.edges):
        return None
    c1, c2 = _refine_colors(g1), _refine_colors(g2)
    if sorted(c1.values()) != sorted(c2.values()):
        return None
    mapping = {}
    used = set()

    def backtrack(i):
        if i == len(g1.vertices):
            return True
        v = g1.vertices[i]
        for w in g2.vertices:
            if w in used or c1[v] != c2[w]:
                continue
            if any(g1.adjacent(v, u) != g2.adjacent(w, mapping[u]) for u in mapping):
                continue
            mapping[v] = w
            used.add(w)
            if backtrack(i + 1):
                return True
            del mapping[v]
            used.discard(w)
        return False

    if not backtrack(0):
        return None
    assert all(
        g1.adjacent(u, v) == g2.adjacent(mapping[u], mapping[v])
        for u, v in itertools.combinations(g1.vertices, 2)
    )
    return dict(mapping)
