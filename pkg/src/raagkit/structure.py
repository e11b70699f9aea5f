"""Isomorphism decisions, classification arithmetic, and generator moves.

Groups defined by graphs are rigid: two of them are isomorphic exactly when
their graphs are, so the isomorphism decision delegates to graph matching.
The rest of this module is small exact arithmetic around classification
(free products of free abelian groups, cohomological dimensions, products
of free groups in a fixed genus) and the standard generating automorphisms.
"""

from dataclasses import dataclass

from .errors import DomainError
from .graphs import (
    SimpleGraph,
    complement,
    dominates,
    graph_isomorphic,
    induced_subgraph,
    join_factors,
    max_clique_size,
)
from .words import Word, reduce


def raag_isomorphic(g1, g2):
    """Do the graphs define isomorphic groups?  Equivalent to graph iso."""
    return graph_isomorphic(g1, g2) is not None


def describe_raag(g):
    """A structural name for A(g) built from joins and disjoint unions.

    Complete pieces give free abelian factors (Z^k), edgeless pieces free
    groups (F_k); joins become direct products and disjoint unions free
    products.  Pieces with no such splitting render as A(n=...,m=...).
    """
    if not g.vertices:
        raise DomainError("empty graph")

    def piece(h):
        n = len(h.vertices)
        if n == 1:
            return "Z"
        if len(h.edges) == n * (n - 1) // 2:
            return "Z^%d" % n
        if not h.edges:
            return "F%d" % n
        comps = h.connected_components()
        if len(comps) > 1:
            parts = [piece(induced_subgraph(h, c)) for c in comps]
            return " * ".join(("(%s)" % p if " x " in p else p) for p in parts)
        jf = join_factors(h)
        if jf is not None:
            s1, s2 = jf
            parts = [piece(induced_subgraph(h, s1)), piece(induced_subgraph(h, s2))]
            return " x ".join(("(%s)" % p if "*" in p else p) for p in parts)
        return "A(n=%d,m=%d)" % (n, len(h.edges))

    return piece(g)


def classify_hyperbolic_raag(g):
    """Free-product-of-free-abelian decomposition, or None.

    Succeeds exactly when every connected component is a clique; the result
    lists the component vertex sets (the free factors Z^k)."""
    comps = g.connected_components()
    factors = []
    for c in comps:
        if not g.is_clique(c):
            return None
        factors.append(tuple(c))
    return factors


def vcd(g):
    """Cohomological dimension of A(g): the size of a maximum clique."""
    if not g.vertices:
        raise DomainError("empty graph")
    return max_clique_size(g)


@dataclass(frozen=True)
class DimensionComparison:
    genus: int
    punctures: int
    mcg_vcd: int
    max_abelian_rank: int

    @property
    def obstruction(self):
        return self.mcg_vcd != self.max_abelian_rank


def mcg_vcd_obstruction(genus, punctures=0):
    """Compare the mapping class group's cohomological dimension with the
    rank of its maximal abelian subgroups.

    Closed surfaces use 4g-5 against 3g-3; punctured ones 4g+p-4 against
    3g-3+p.  A difference obstructs commensurability with any group whose
    dimension equals its maximal abelian rank.
    """
    g, p = int(genus), int(punctures)
    if 2 - 2 * g - p >= 0:
        raise DomainError("need negative Euler characteristic: 2-2g-p < 0")
    if p == 0:
        return DimensionComparison(g, p, 4 * g - 5, 3 * g - 3)
    return DimensionComparison(g, p, 4 * g + p - 4, 3 * g - 3 + p)


@dataclass(frozen=True)
class ProductBound:
    genus: int
    paper_bound: int
    exact_optimum: int
    optimum_split: tuple  # (one-holed tori, larger pieces)

    @property
    def discrepancy(self):
        return self.exact_optimum != self.paper_bound


def max_product_free_factors(genus):
    """How many direct factors of free groups fit in a closed surface.

    `paper_bound` is the closed-form cap: 3(g-1)/2 for odd genus, 3g/2 for
    even.  `exact_optimum` maximizes the number of disjoint supporting
    pieces directly: n_T one-holed tori (Euler characteristic -1 each,
    at most g of them) plus n_S other pieces at characteristic at most -2,
    within a total budget of 2g-2.  The two values can differ; both are
    reported.
    """
    g = int(genus)
    if g < 2:
        raise DomainError("genus must be at least 2")
    paper_bound = 3 * (g - 1) // 2 if g % 2 else 3 * g // 2
    best, split = 0, (0, 0)
    for n_t in range(0, g + 1):
        budget = 2 * g - 2 - n_t
        if budget < 0:
            break
        n_s = budget // 2
        if n_t + n_s > best:
            best, split = n_t + n_s, (n_t, n_s)
    return ProductBound(g, paper_bound, best, split)


# -- standard generating endomorphisms ---------------------------------------


@dataclass(frozen=True)
class Endomorphism:
    graph: SimpleGraph
    images: dict  # vertex -> Word

    def __post_init__(self):
        for v in self.graph.vertices:
            if v not in self.images:
                raise DomainError("no image for vertex %r" % (v,))
        for v, w in self.images.items():
            if w.graph != self.graph:
                raise DomainError("image of %r lives over a different graph" % (v,))
        object.__setattr__(self, "images", dict(self.images))


def identity_endomorphism(g):
    return Endomorphism(g, {v: Word(g, ((v, 1),)) for v in g.vertices})


def transvection(g, v, w, inverse=False):
    """The dominated transvection v -> v w (or v w^-1).

    Legal only when w dominates v (the link of v sits in the star of w).
    """
    if not dominates(g, w, v):
        raise DomainError("%r does not dominate %r: transvection illegal" % (w, v))
    e = -1 if inverse else 1
    images = {u: Word(g, ((u, 1),)) for u in g.vertices}
    images[v] = Word(g, ((v, 1), (w, e)))
    return Endomorphism(g, images)


def partial_conjugation(g, x, component, inverse=False):
    """Conjugate the vertices of `component` by x.

    `component` must be a union of connected components of the graph minus
    the star of x.
    """
    g.index(x)
    component = set(component)
    star = set(g.star(x))
    if component & star:
        raise DomainError("component set must avoid the star of %r" % (x,))
    rest = induced_subgraph(g, [v for v in g.vertices if v not in star])
    covered = set()
    for c in rest.connected_components():
        if set(c) & component:
            if not set(c) <= component:
                raise DomainError(
                    "component set splits a connected component of the"
                    " star complement"
                )
            covered |= set(c)
    if covered != component:
        raise DomainError("unknown vertices in component set")
    e = -1 if inverse else 1
    images = {u: Word(g, ((u, 1),)) for u in g.vertices}
    for u in component:
        images[u] = Word(g, ((x, e), (u, 1), (x, -e)))
    return Endomorphism(g, images)


def permutation_automorphism(g, mapping):
    """Relabel generators along a graph automorphism."""
    if set(mapping) != set(g.vertices) or set(mapping.values()) != set(g.vertices):
        raise DomainError("mapping is not a vertex bijection")
    for u, v in g.edges:
        if not g.adjacent(mapping[u], mapping[v]):
            raise DomainError("mapping is not a graph automorphism")
    return Endomorphism(g, {v: Word(g, ((mapping[v], 1),)) for v in g.vertices})


def whitehead_endomorphism(g, kind, **params):
    """Uniform entry point: kind is 'transvection', 'partial_conjugation',
    or 'permutation', with keyword parameters matching the helpers."""
    if kind == "transvection":
        return transvection(g, params["v"], params["w"], params.get("inverse", False))
    if kind == "partial_conjugation":
        return partial_conjugation(
            g, params["x"], params["component"], params.get("inverse", False)
        )
    if kind == "permutation":
        return permutation_automorphism(g, params["mapping"])
    raise DomainError("unknown endomorphism kind %r" % (kind,))


def apply_endomorphism(endo, w):
    """Substitute generator images and reduce."""
    if w.graph != endo.graph:
        raise DomainError("word lives over a different graph")
    out = Word(endo.graph, ())
    for gen, exp in w.syllables:
        out = out * endo.images[gen].power(exp)
    return reduce(out)


def compose(e1, e2):
    """The endomorphism applying e2 first, then e1."""
    if e1.graph != e2.graph:
        raise DomainError("endomorphisms live over different graphs")
    return Endomorphism(
        e1.graph,
        {v: apply_endomorphism(e1, w) for v, w in e2.images.items()},
    )
