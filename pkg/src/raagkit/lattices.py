"""Integer lattices: intersections, subgroup indices, and independence checks.

Everything is exact integer arithmetic via Hermite-style row reduction.
An infinite index is reported as math.inf.
"""

import math
from dataclasses import dataclass

from .errors import DomainError, InputError
from . import linalg


@dataclass(frozen=True)
class IntegerLattice:
    ambient_rank: int
    generators: tuple  # tuple of integer tuples

    def __post_init__(self):
        gens = tuple(tuple(int(x) for x in v) for v in self.generators)
        object.__setattr__(self, "generators", gens)
        if self.ambient_rank < 0:
            raise DomainError("ambient rank must be nonnegative")
        for v in gens:
            if len(v) != self.ambient_rank:
                raise DomainError("generator %r has the wrong length" % (v,))

    def basis(self):
        """Canonical Hermite basis rows (possibly fewer than generators)."""
        if not self.generators:
            return []
        return [
            list(r)
            for r in linalg.integer_row_space_basis(
                [list(v) for v in self.generators], self.ambient_rank
            )
        ]

    def rank(self):
        return len(self.basis())

    def contains(self, vector):
        if len(vector) != self.ambient_rank:
            raise DomainError("vector length mismatch")
        basis = self.basis()
        if not basis:
            return not any(vector)
        return linalg.solve_integer_combination(basis, list(vector)) is not None

    def to_json(self):
        return {"rank": self.ambient_rank, "generators": [list(v) for v in self.generators]}

    @classmethod
    def from_json(cls, data):
        try:
            return cls(int(data["rank"]), tuple(tuple(v) for v in data["generators"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError("bad lattice JSON: %s" % (exc,))
        except DomainError as exc:
            raise InputError(str(exc))

    def __eq__(self, other):
        if not isinstance(other, IntegerLattice):
            return NotImplemented
        return self.ambient_rank == other.ambient_rank and self.basis() == other.basis()

    def __hash__(self):
        return hash((self.ambient_rank, tuple(map(tuple, self.basis()))))


def lattice_meet(l1, l2):
    """Intersection lattice, via the integer kernel of the stacked bases."""
    if l1.ambient_rank != l2.ambient_rank:
        raise DomainError("lattices live in different ambient ranks")
    b1, b2 = l1.basis(), l2.basis()
    if not b1 or not b2:
        return IntegerLattice(l1.ambient_rank, ())
    stacked = b1 + b2
    kernel = linalg.integer_left_kernel(stacked, l1.ambient_rank)
    gens = []
    for x in kernel:
        a = x[: len(b1)]
        vec = [
            sum(a[i] * b1[i][c] for i in range(len(b1)))
            for c in range(l1.ambient_rank)
        ]
        if any(vec):
            gens.append(tuple(vec))
    meet = IntegerLattice(l1.ambient_rank, tuple(gens))
    return IntegerLattice(l1.ambient_rank, tuple(tuple(r) for r in meet.basis()))


def lattice_index(sub, super_):
    """The index [super_ : sub]; math.inf when the ranks differ.

    Raises when sub is not contained in super_.
    """
    if sub.ambient_rank != super_.ambient_rank:
        raise DomainError("lattices live in different ambient ranks")
    super_basis = super_.basis()
    coords = []
    for v in sub.generators:
        c = linalg.solve_integer_combination(super_basis, list(v)) if super_basis else (
            None if any(v) else []
        )
        if c is None:
            raise DomainError("sublattice is not contained in the superlattice")
        coords.append(c)
    r_super = len(super_basis)
    if sub.rank() < r_super:
        return math.inf
    if r_super == 0:
        return 1
    h = linalg.integer_row_space_basis(coords, r_super)
    if len(h) < r_super:
        return math.inf
    det = 1
    for i, row in enumerate(h):
        piv = next(x for x in row if x)
        det *= abs(piv)
    return det


def irredundancy_check(vectors):
    """True iff the integer vectors are linearly independent over Q."""
    vecs = [list(map(int, v)) for v in vectors]
    if not vecs:
        return True
    lengths = {len(v) for v in vecs}
    if len(lengths) != 1:
        raise DomainError("vectors have mixed lengths")
    return linalg.rank(vecs) == len(vecs)
