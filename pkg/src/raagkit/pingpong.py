"""Ping-pong machinery: the reduced-word action, axiom checks, and
depth-bounded certification that clique products generate the expected group.

The action is left multiplication on canonical reduced words with the
identity as basepoint.  The set attached to a vertex v consists of the
reduced words that can be shuffled to start with a nonzero power of v.
All certification here is depth-bounded: a passing report says "no kernel
element found up to the stated depth", never "isomorphic".
"""

import itertools
from dataclasses import dataclass, field

from .errors import DomainError
from .graphs import SimpleGraph
from .words import Word, reduce, words_equal


@dataclass(frozen=True)
class CliqueProduct:
    """A product of powers of generators drawn from one clique."""

    graph: SimpleGraph
    clique: tuple
    factors: tuple  # ((generator, exponent), ...)

    def __post_init__(self):
        object.__setattr__(self, "clique", tuple(self.clique))
        object.__setattr__(self, "factors", tuple(tuple(f) for f in self.factors))
        if not self.graph.is_clique(self.clique):
            raise DomainError("%r does not span a clique" % (self.clique,))
        cl = set(self.clique)
        for gen, exp in self.factors:
            if gen not in cl:
                raise DomainError("factor %r is outside the clique" % (gen,))
            if exp == 0:
                raise DomainError("zero exponent in clique product")

    def word(self):
        return Word(self.graph, self.factors)


@dataclass(frozen=True)
class PPCollection:
    products: tuple

    def __post_init__(self):
        object.__setattr__(self, "products", tuple(self.products))
        if not self.products:
            raise DomainError("empty collection")
        graphs = {p.graph for p in self.products}
        if len(graphs) != 1:
            raise DomainError("products live over different graphs")

    @property
    def graph(self):
        return self.products[0].graph


@dataclass(frozen=True)
class AxiomReport:
    passed: bool
    depth: int
    exponent_bound: int
    words_sampled: int
    violation: dict | None = None


@dataclass(frozen=True)
class DepthReport:
    """Outcome of kernel search; `passed` means no kernel found at depth."""

    passed: bool
    depth: int
    words_checked: int
    kernel_witness: str | None = None

    def summary(self):
        if self.passed:
            return "no kernel found at depth %d" % self.depth
        return "kernel element at depth %d: %s" % (self.depth, self.kernel_witness)


def x_set_membership(w, v):
    """Can the reduced word w be shuffled to start with a power of v?

    Formally: w = v^s w' in reduced form with s != 0 and w shorter after
    stripping the syllable.
    """
    w.graph.index(v)
    r = reduce(w)
    adj = r.graph._adj
    for idx, (g, _) in enumerate(r.syllables):
        if g == v and all(h in adj[v] for h, _ in r.syllables[:idx]):
            return True
    return False


def enumerate_reduced_words(graph, max_syllables, exponent_bound, nontrivial=False):
    """Canonical reduced words with at most `max_syllables` syllables and
    exponents bounded by `exponent_bound`, deduplicated."""
    exps = [e for e in range(-exponent_bound, exponent_bound + 1) if e]
    seen = set()
    out = []
    level = [()]
    if not nontrivial:
        seen.add(())
        out.append(Word(graph, ()))
    for _ in range(max_syllables):
        nxt = []
        for sylls in level:
            for g in graph.vertices:
                if sylls and sylls[-1][0] == g:
                    continue
                for e in exps:
                    cand = sylls + ((g, e),)
                    w = reduce(Word(graph, cand))
                    if w.syllables == cand and cand not in seen:
                        seen.add(cand)
                        out.append(w)
                        nxt.append(cand)
        level = nxt
    return out


def check_pingpong_axioms(images, depth=3, exponent_bound=3):
    """Exhaustively test the three ping-pong conditions for a generator
    assignment, over the reduced-word action.

    `images` maps every vertex to a Word over the same graph.  Conditions
    are checked for all exponents k with 1 <= |k| <= exponent_bound, with
    set membership sampled over all reduced words of at most `depth`
    syllables.  Checked in the order: basepoint condition, edge condition,
    non-edge condition; the first violation stops the search.
    """
    if depth < 1 or exponent_bound < 1:
        raise DomainError("depth and exponent bound must be at least 1")
    if not images:
        raise DomainError("empty image map")
    graphs = {w.graph for w in images.values()}
    if len(graphs) != 1:
        raise DomainError("images live over different graphs")
    graph = graphs.pop()
    for v in graph.vertices:
        if v not in images:
            raise DomainError("no image for vertex %r" % (v,))

    sample = enumerate_reduced_words(graph, depth, exponent_bound)
    membership = {
        v: [w for w in sample if x_set_membership(w, v)] for v in graph.vertices
    }
    ks = [k for k in range(-exponent_bound, exponent_bound + 1) if k]

    def violation(cond, **kw):
        data = {"condition": cond}
        data.update(kw)
        return AxiomReport(False, depth, exponent_bound, len(sample), data)

    for i in graph.vertices:
        for k in ks:
            if not x_set_membership(images[i].power(k), i):
                return violation(3, generator=i, exponent=k)
    for i in graph.vertices:
        for j in graph.vertices:
            if i == j:
                continue
            edge = graph.adjacent(i, j)
            for k in ks:
                img = images[i].power(k)
                for w in membership[j]:
                    target = j if edge else i
                    if not x_set_membership(img * w, target):
                        return violation(
                            1 if edge else 2,
                            generator=i,
                            other=j,
                            exponent=k,
                            word=w.format(),
                        )
    return AxiomReport(True, depth, exponent_bound, len(sample))


def build_lambda(collection):
    """Commutation graph of a collection: one vertex per product, edges
    where the two products commute in A(Gamma)."""
    words = [p.word() for p in collection.products]
    names = ["Z%d" % (i + 1) for i in range(len(words))]
    edges = []
    for (i, wi), (j, wj) in itertools.combinations(enumerate(words), 2):
        if words_equal(wi * wj, wj * wi):
            edges.append((names[i], names[j]))
    return SimpleGraph(names, edges)


def has_property_pp(collection):
    """Search for an induced embedding of the commutation graph into the
    ambient graph sending each product's vertex into its support.

    Returns the embedding as a dict, or None.
    """
    lam = build_lambda(collection)
    graph = collection.graph
    supports = [reduce(p.word()).support() for p in collection.products]
    names = list(lam.vertices)
    assignment = {}
    used = set()

    def backtrack(i):
        if i == len(names):
            return True
        vi = names[i]
        for cand in supports[i]:
            if cand in used:
                continue
            ok = True
            for vj in assignment:
                if lam.adjacent(vi, vj) != graph.adjacent(cand, assignment[vj]):
                    ok = False
                    break
            if not ok:
                continue
            assignment[vi] = cand
            used.add(cand)
            if backtrack(i + 1):
                return True
            del assignment[vi]
            used.discard(cand)
        return False

    if not backtrack(0):
        return None
    return dict(assignment)


def verify_embedding_at_depth(collection, depth=3):
    """Substitute the products for the vertices of their commutation graph
    and search for a kernel element among all nontrivial reduced words with
    at most `depth` syllables and exponents bounded by `depth`."""
    if depth < 1:
        raise DomainError("depth must be at least 1")
    lam = build_lambda(collection)
    graph = collection.graph
    zwords = dict(zip(lam.vertices, (p.word() for p in collection.products)))
    checked = 0
    for w in enumerate_reduced_words(lam, depth, depth, nontrivial=True):
        image = Word(graph, ())
        for gen, exp in w.syllables:
            image = image * zwords[gen].power(exp)
        checked += 1
        if not reduce(image).syllables:
            return DepthReport(False, depth, checked, kernel_witness=w.format())
    return DepthReport(True, depth, checked)
