"""Rational cup-product algebras of right-angled Artin groups.

The degree-one part has one basis class per vertex, the degree-two part one
per edge, and the product of two vertex classes is the (signed) edge class
when the vertices are adjacent and zero otherwise.  From such an algebra,
given in a basis that is a permutation and rescaling of a vertex basis, the
defining graph can be reconstructed; the basis-independent invariants
(radical dimension, multiplication ranks) are available in any basis.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, InputError
from .graphs import SimpleGraph
from . import linalg


@dataclass(frozen=True)
class CupAlgebra:
    """Bilinear product H1 x H1 -> H2 with alternating structure constants.

    `structure[i][j]` is the H2-coordinate vector of the product of the
    i-th and j-th basis classes.
    """

    dim1: int
    dim2: int
    structure: tuple  # dim1 x dim1 tuple of dim2-tuples of Fractions

    def __post_init__(self):
        s = tuple(
            tuple(tuple(Fraction(x) for x in cell) for cell in row)
            for row in self.structure
        )
        object.__setattr__(self, "structure", s)
        if len(s) != self.dim1 or any(len(row) != self.dim1 for row in s):
            raise DomainError("structure constants are not dim1 x dim1")
        for row in s:
            for cell in row:
                if len(cell) != self.dim2:
                    raise DomainError("a structure vector has the wrong length")
        for i in range(self.dim1):
            if any(x != 0 for x in s[i][i]):
                raise DomainError("product of a class with itself must vanish")
            for j in range(i + 1, self.dim1):
                if any(a != -b for a, b in zip(s[i][j], s[j][i])):
                    raise DomainError("structure constants are not alternating")

    def product(self, v, w):
        """Product of two H1 coordinate vectors, as an H2 vector."""
        if len(v) != self.dim1 or len(w) != self.dim1:
            raise DomainError("vector length does not match dim1")
        out = [Fraction(0)] * self.dim2
        for i, vi in enumerate(v):
            if not vi:
                continue
            for j, wj in enumerate(w):
                if not wj:
                    continue
                cell = self.structure[i][j]
                for k in range(self.dim2):
                    if cell[k]:
                        out[k] += vi * wj * cell[k]
        return out

    def to_json(self):
        return {
            "dim1": self.dim1,
            "dim2": self.dim2,
            "structure": [
                [[_fmt(x) for x in cell] for cell in row] for row in self.structure
            ],
        }

    @classmethod
    def from_json(cls, data):
        try:
            dim1 = int(data["dim1"])
            dim2 = int(data["dim2"])
            structure = [
                [[_parse_rational(x) for x in cell] for cell in row]
                for row in data["structure"]
            ]
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError("bad cup-algebra JSON: %s" % (exc,))
        try:
            return cls(dim1, dim2, tuple(tuple(tuple(c) for c in r) for r in structure))
        except DomainError as exc:
            raise InputError(str(exc))


def _fmt(x):
    x = Fraction(x)
    return "%d/%d" % (x.numerator, x.denominator) if x.denominator != 1 else str(x.numerator)


def _parse_rational(text):
    if isinstance(text, int):
        return Fraction(text)
    return Fraction(str(text))


def cohomology_of_graph(g):
    """The cup algebra of A(g) in the vertex/edge dual bases.

    The product of the duals of adjacent vertices u, v (u before v in vertex
    order) is +1 times the dual of the edge (u, v); reversing the order
    flips the sign.
    """
    n = len(g.vertices)
    edges = list(g.edges)
    eindex = {frozenset(e): k for k, e in enumerate(edges)}
    m = len(edges)
    structure = [[[Fraction(0)] * m for _ in range(n)] for _ in range(n)]
    for i, u in enumerate(g.vertices):
        for j, v in enumerate(g.vertices):
            if i < j and g.adjacent(u, v):
                k = eindex[frozenset((u, v))]
                structure[i][j][k] = Fraction(1)
                structure[j][i][k] = Fraction(-1)
    return CupAlgebra(n, m, tuple(tuple(tuple(c) for c in r) for r in structure))


def radical(alg):
    """Basis of {v : v * w = 0 for all w}, computed exactly."""
    rows = []
    for j in range(alg.dim1):
        for k in range(alg.dim2):
            rows.append([alg.structure[i][j][k] for i in range(alg.dim1)])
    if not rows:
        rows = [[Fraction(0)] * alg.dim1]
    return linalg.kernel_basis(rows, alg.dim1)


def radical_dimension(alg):
    return len(radical(alg))


def rank_fv(alg, v):
    """Rank of the multiplication map w -> v * w."""
    if len(v) != alg.dim1:
        raise DomainError("probe vector length does not match dim1")
    v = [Fraction(x) for x in v]
    rows = []
    for j in range(alg.dim1):
        basis_j = [Fraction(int(t == j)) for t in range(alg.dim1)]
        rows.append(alg.product(v, basis_j))
    return linalg.rank(rows)


def base_change(alg, matrix):
    """The same algebra written in the H1 basis whose j-th vector has the
    old-basis coordinates matrix[.][j]."""
    if len(matrix) != alg.dim1 or not linalg.invertible(matrix):
        raise DomainError("base change must be an invertible dim1 x dim1 matrix")
    cols = [[Fraction(matrix[i][j]) for i in range(alg.dim1)] for j in range(alg.dim1)]
    structure = [
        [tuple(alg.product(cols[i], cols[j])) for j in range(alg.dim1)]
        for i in range(alg.dim1)
    ]
    return CupAlgebra(alg.dim1, alg.dim2, tuple(tuple(r) for r in structure))


def scale_h2(alg, scales, permutation=None):
    """Rescale/permute the H2 basis; scales must be nonzero."""
    if len(scales) != alg.dim2 or any(Fraction(s) == 0 for s in scales):
        raise DomainError("need dim2 nonzero scales")
    perm = list(permutation) if permutation is not None else list(range(alg.dim2))
    if sorted(perm) != list(range(alg.dim2)):
        raise DomainError("bad H2 permutation")
    scales = [Fraction(s) for s in scales]
    structure = [
        [
            tuple(cell[perm[k]] * scales[k] for k in range(alg.dim2))
            for cell in row
        ]
        for row in alg.structure
    ]
    return CupAlgebra(alg.dim1, alg.dim2, tuple(tuple(r) for r in structure))


def reconstruct_graph(alg):
    """Rebuild a defining graph from an algebra in monomial position.

    Monomial position means the H1 basis is a permutation and nonzero
    rescaling of a vertex-dual basis.  Vertices are the basis indices
    (named v0, v1, ...); two are adjacent exactly when their product is
    nonzero.  The nonzero products must be linearly independent in H2 and
    fill it; otherwise the input is rejected.
    """
    products = {}
    for i in range(alg.dim1):
        for j in range(i + 1, alg.dim1):
            cell = alg.structure[i][j]
            if any(x != 0 for x in cell):
                products[(i, j)] = list(cell)
    if len(products) != alg.dim2:
        raise DomainError(
            "dimension inconsistency: %d nonzero products for dim2 = %d"
            % (len(products), alg.dim2)
        )
    if products:
        if linalg.rank(list(products.values())) != len(products):
            raise DomainError(
                "input not in monomial position: nonzero products are dependent"
            )
    names = ["v%d" % i for i in range(alg.dim1)]
    edges = [(names[i], names[j]) for (i, j) in sorted(products)]
    graph = SimpleGraph(names, edges)
    iso = sum(1 for v in names if graph.degree(v) == 0)
    if radical_dimension(alg) != iso:
        raise DomainError("radical dimension disagrees with isolated vertex count")
    return graph


def induced_algebra_map_preserves_structure(g1, g2, mapping):
    """Check that a graph isomorphism induces a cup-algebra isomorphism.

    The induced map permutes vertex duals; edge duals follow with the sign
    of the order reversal.  Verifies all structure constants transport
    exactly.
    """
    a1 = cohomology_of_graph(g1)
    a2 = cohomology_of_graph(g2)
    idx2 = {v: i for i, v in enumerate(g2.vertices)}
    e2index = {frozenset(e): k for k, e in enumerate(g2.edges)}
    for i, u in enumerate(g1.vertices):
        for j, v in enumerate(g1.vertices):
            if i == j:
                continue
            cell = a1.structure[i][j]
            mi, mj = idx2[mapping[u]], idx2[mapping[v]]
            target = a2.structure[mi][mj]
            # transport cell through the edge correspondence
            transported = [Fraction(0)] * a2.dim2
            for k, e in enumerate(g1.edges):
                if cell[k] == 0:
                    continue
                me = frozenset((mapping[e[0]], mapping[e[1]]))
                if me not in e2index:
                    return False
                # sign flips when the image pair reverses the edge orientation
                p, q = tuple(sorted(me, key=idx2.__getitem__))
                sign = 1 if (mapping[e[0]], mapping[e[1]]) == (p, q) else -1
                transported[e2index[me]] += cell[k] * sign
            if transported != list(target):
                return False
    return True
