import itertools
import random
from fractions import Fraction

import pytest

from raagkit.cohomology import (
    CupAlgebra,
    base_change,
    cohomology_of_graph,
    induced_algebra_map_preserves_structure,
    radical,
    radical_dimension,
    rank_fv,
    reconstruct_graph,
    scale_h2,
)
from raagkit.errors import DomainError
from raagkit.graphs import SimpleGraph, graph_isomorphic
from raagkit import linalg


def path3():
    return SimpleGraph(["a", "b", "c"], [("a", "b"), ("b", "c")])


def random_graph(rng, n):
    names = ["v%d" % i for i in range(n)]
    pairs = list(itertools.combinations(names, 2))
    return SimpleGraph(names, [p for p in pairs if rng.random() < 0.5])


def random_invertible(rng, n):
    while True:
        m = [[Fraction(rng.randrange(-3, 4)) for _ in range(n)] for _ in range(n)]
        if linalg.invertible(m):
            return m


def monomial_scramble(rng, alg):
    """Permute and rescale the vertex basis, and scramble the H2 basis."""
    n = alg.dim1
    perm = list(range(n))
    rng.shuffle(perm)
    matrix = [[Fraction(0)] * n for _ in range(n)]
    for j in range(n):
        num = rng.choice([x for x in range(-5, 6) if x])
        den = rng.choice([1, 2, 3])
        matrix[perm[j]][j] = Fraction(num, den)
    out = base_change(alg, matrix)
    if alg.dim2:
        scales = [
            Fraction(rng.choice([x for x in range(-4, 5) if x]), rng.choice([1, 2]))
            for _ in range(alg.dim2)
        ]
        h2perm = list(range(alg.dim2))
        rng.shuffle(h2perm)
        out = scale_h2(out, scales, h2perm)
    return out


def test_cohomology_of_graph_small_cases():
    g = SimpleGraph(["a", "b"], [])
    alg = cohomology_of_graph(g)
    assert alg.dim1 == 2 and alg.dim2 == 0
    e = SimpleGraph(["a", "b"], [("a", "b")])
    alg = cohomology_of_graph(e)
    assert alg.structure[0][1] == (Fraction(1),)
    assert alg.structure[1][0] == (Fraction(-1),)
    p = path3()
    alg = cohomology_of_graph(p)
    assert alg.dim1 == 3 and alg.dim2 == 2
    assert all(x == 0 for x in alg.product([1, 0, 0], [0, 0, 1]))


def test_alternating_validation():
    with pytest.raises(DomainError):
        CupAlgebra(2, 1, (((Fraction(1),), (Fraction(1),)), ((Fraction(1),), (Fraction(0),))))


def test_radical_examples():
    assert radical_dimension(cohomology_of_graph(SimpleGraph(["a", "b"]))) == 2
    assert (
        radical_dimension(cohomology_of_graph(SimpleGraph(["a", "b"], [("a", "b")])))
        == 0
    )
    g = SimpleGraph(["a", "b", "c"], [("a", "b")])  # edge plus isolated vertex
    alg = cohomology_of_graph(g)
    rng = random.Random(20)
    scrambled = base_change(alg, random_invertible(rng, 3))
    assert radical_dimension(scrambled) == 1


def test_rank_fv_examples():
    p = path3()
    alg = cohomology_of_graph(p)
    assert rank_fv(alg, [0, 0, 0]) == 0
    assert rank_fv(alg, [0, 1, 0]) == 2  # the middle vertex has degree two
    assert rank_fv(alg, [1, 0, 0]) == 1  # a degree-one vertex has rank one


def test_reconstruct_identity_basis():
    p = path3()
    g = reconstruct_graph(cohomology_of_graph(p))
    assert graph_isomorphic(g, p) is not None


def test_reconstruct_scrambled_square():
    rng = random.Random(21)
    sq = SimpleGraph(
        ["w", "x", "y", "z"], [("w", "x"), ("x", "y"), ("y", "z"), ("z", "w")]
    )
    alg = monomial_scramble(rng, cohomology_of_graph(sq))
    out = reconstruct_graph(alg)
    assert graph_isomorphic(out, sq) is not None


def test_reconstruct_round_trip_random_graphs():
    rng = random.Random(22)
    for _ in range(50):
        g = random_graph(rng, rng.randrange(1, 8))
        alg = monomial_scramble(rng, cohomology_of_graph(g))
        out = reconstruct_graph(alg)
        assert graph_isomorphic(out, g) is not None


def test_reconstruct_rejects_non_monomial_position():
    # mixing b with d on two disjoint edges creates a spurious third
    # nonzero product, more than dim2 can account for
    g = SimpleGraph(["a", "b", "c", "d"], [("a", "b"), ("c", "d")])
    alg = cohomology_of_graph(g)
    mix = [
        [Fraction(1), Fraction(0), Fraction(0), Fraction(0)],
        [Fraction(0), Fraction(1), Fraction(0), Fraction(0)],
        [Fraction(0), Fraction(0), Fraction(1), Fraction(0)],
        [Fraction(0), Fraction(1), Fraction(0), Fraction(1)],
    ]
    with pytest.raises(DomainError):
        reconstruct_graph(base_change(alg, mix))


def test_gl_invariance_of_radical_and_ranks():
    rng = random.Random(23)
    for _ in range(10):
        g = random_graph(rng, rng.randrange(2, 6))
        alg = cohomology_of_graph(g)
        probes = [
            [Fraction(rng.randrange(-3, 4)) for _ in range(alg.dim1)]
            for _ in range(6)
        ]
        base_rad = radical_dimension(alg)
        base_ranks = [rank_fv(alg, p) for p in probes]
        for _ in range(5):
            m = random_invertible(rng, alg.dim1)
            minv = linalg.mat_inverse(m)
            changed = base_change(alg, m)
            assert radical_dimension(changed) == base_rad
            moved = [linalg.mat_vec(minv, p) for p in probes]
            assert [rank_fv(changed, p) for p in moved] == base_ranks


def test_iso_witness_transports_structure_constants():
    rng = random.Random(24)
    for _ in range(20):
        g = random_graph(rng, rng.randrange(1, 6))
        perm = list(g.vertices)
        rng.shuffle(perm)
        m = dict(zip(g.vertices, perm))
        h = SimpleGraph(perm, [(m[u], m[v]) for u, v in g.edges])
        wit = graph_isomorphic(g, h)
        assert wit is not None
        assert induced_algebra_map_preserves_structure(g, h, wit)


def test_json_round_trip():
    alg = cohomology_of_graph(path3())
    assert CupAlgebra.from_json(alg.to_json()) == alg
