import pytest

from raagkit.coincidence import (
    ComponentSpec,
    CurveComplexFragment,
    ReductionSystemSpec,
    RelationMatrix,
    SupportSpec,
    check_conventions,
    coincidence_graph,
    configuration_from_json,
    embedding_genus_plan,
    flag_embedding_check,
    predicted_subgroup,
    tits_classification,
    virtually_commute,
)
from raagkit.errors import DomainError, InputError
from raagkit.graphs import SimpleGraph, graph_isomorphic


def twists(*ids):
    return tuple(SupportSpec(i, "twist", "c_" + i) for i in ids)


def four_curve_config():
    """Two intersecting pairs, all other pairs disjoint: a 4-cycle."""
    specs = twists("1", "2", "3", "4")
    rel = RelationMatrix(
        specs,
        [
            ("1", "3", "intersecting"),
            ("2", "4", "intersecting"),
            ("1", "2", "disjoint"),
            ("2", "3", "disjoint"),
            ("3", "4", "disjoint"),
            ("1", "4", "disjoint"),
        ],
    )
    return specs, rel


def test_relation_matrix_validation():
    specs = twists("1", "2")
    with pytest.raises(DomainError):
        RelationMatrix(specs, [])  # missing pair
    with pytest.raises(DomainError):
        RelationMatrix(specs, [("1", "1", "disjoint")])
    with pytest.raises(DomainError):
        RelationMatrix(specs, [("1", "2", "sideways")])
    with pytest.raises(DomainError):
        RelationMatrix(specs, [("1", "2", "disjoint")], shares_power=[("1", "2")])
    # equal-support pairs must agree on data
    a = SupportSpec("a", "pA", "S", boundary=("b1",))
    b = SupportSpec("b", "pA", "T", boundary=("b1",))
    with pytest.raises(DomainError):
        RelationMatrix((a, b), [("a", "b", "equal")])


def test_check_conventions():
    specs = twists("1", "2")
    rel = RelationMatrix(specs, [("1", "2", "disjoint")])
    assert check_conventions(specs, rel).passed

    bad = SupportSpec("p", "pA", "S", boundary=("c_t",), no_peripheral_leaves=False)
    t = SupportSpec("t", "twist", "c_t")
    rel = RelationMatrix((bad, t), [("p", "t", "disjoint")])
    report = check_conventions((bad, t), rel)
    assert not report.passed
    assert any("peripheral" in v for v in report.violations)
    assert any("twisted boundary" in v for v in report.violations)

    p1 = SupportSpec("p1", "pA", "S", boundary=("b",))
    p2 = SupportSpec("p2", "pA", "S", boundary=("b",))
    rel = RelationMatrix((p1, p2), [("p1", "p2", "equal")])
    report = check_conventions((p1, p2), rel)
    assert not report.passed
    assert any("shared power" in v for v in report.violations)
    rel = RelationMatrix((p1, p2), [("p1", "p2", "equal")], shares_power=[("p1", "p2")])
    assert check_conventions((p1, p2), rel).passed


def test_coincidence_graph_four_curves():
    specs, rel = four_curve_config()
    g = coincidence_graph(specs, rel)
    square = SimpleGraph("1234", [("1", "2"), ("2", "3"), ("3", "4"), ("1", "4")])
    assert g == square
    assert graph_isomorphic(
        g, SimpleGraph("wxyz", [("w", "x"), ("x", "y"), ("y", "z"), ("z", "w")])
    )


def test_coincidence_graph_mutually_intersecting():
    specs = twists("1", "2", "3")
    rel = RelationMatrix(
        specs,
        [(a, b, "intersecting") for a, b in [("1", "2"), ("1", "3"), ("2", "3")]],
    )
    g = coincidence_graph(specs, rel)
    assert g.edges == ()


def test_predicted_subgroup():
    specs, rel = four_curve_config()
    pres = predicted_subgroup(specs, rel)
    assert pres.description == "F2 x F2"
    assert pres.generators == ("f_1^N", "f_2^N", "f_3^N", "f_4^N")
    assert ("f_1^N", "f_2^N") in pres.commuting_relations

    specs = twists("1", "2", "3")
    rel = RelationMatrix(
        specs,
        [(a, b, "intersecting") for a, b in [("1", "2"), ("1", "3"), ("2", "3")]],
    )
    assert predicted_subgroup(specs, rel).description == "F3"

    disj = twists("1", "2")
    rel = RelationMatrix(disj, [("1", "2", "disjoint")])
    assert predicted_subgroup(disj, rel).description == "Z^2"

    p1 = SupportSpec("p1", "pA", "S")
    p2 = SupportSpec("p2", "pA", "S")
    rel = RelationMatrix((p1, p2), [("p1", "p2", "equal")], shares_power=[("p1", "p2")])
    with pytest.raises(DomainError):
        predicted_subgroup((p1, p2), rel)


def test_tits_classification():
    disj = twists("1", "2", "3")
    rel = RelationMatrix(
        disj, [(a, b, "disjoint") for a, b in [("1", "2"), ("1", "3"), ("2", "3")]]
    )
    kind, graph, desc = tits_classification(disj, rel)
    assert kind == "virtually-abelian" and desc == "Z^3"

    two = twists("1", "2")
    rel = RelationMatrix(two, [("1", "2", "intersecting")])
    kind, graph, desc = tits_classification(two, rel)
    assert kind == "enveloped-nonabelian" and desc == "F2"

    specs, rel = four_curve_config()
    kind, graph, desc = tits_classification(specs, rel)
    assert kind == "enveloped-nonabelian" and desc == "F2 x F2"


# -- virtual commutation -------------------------------------------------------


def pa_system(label):
    return ReductionSystemSpec((), (ComponentSpec("whole", (), label),))


def test_virtually_commute_case1():
    assert virtually_commute(pa_system("phi"), pa_system("phi")) == (True, 1)
    assert virtually_commute(pa_system("phi"), pa_system("psi")) == (False, None)


def test_virtually_commute_case2():
    r1 = ReductionSystemSpec(
        ("c",),
        (
            ComponentSpec("L", (), "phi"),
            ComponentSpec("R", (), None),
        ),
    )
    r2 = ReductionSystemSpec(
        ("c",),
        (
            ComponentSpec("L", (), "phi"),
            ComponentSpec("R", (), "rho"),
        ),
    )
    assert virtually_commute(r1, r2) == (True, 2)
    r3 = ReductionSystemSpec(
        ("c",),
        (
            ComponentSpec("L", (), "other"),
            ComponentSpec("R", (), None),
        ),
    )
    assert virtually_commute(r1, r3) == (False, None)


def test_virtually_commute_case3():
    # r1 = twist about c (trivial off c); r2 reduces along c and d, with d
    # sitting inside a component of the complement of c
    r1 = ReductionSystemSpec(
        ("c",),
        (
            ComponentSpec("L", ("d",), None),
            ComponentSpec("R", (), None),
        ),
    )
    r2 = ReductionSystemSpec(
        ("c", "d"),
        (
            ComponentSpec("A", (), "phi"),
            ComponentSpec("B", (), None),
            ComponentSpec("C", (), None),
        ),
    )
    assert virtually_commute(r1, r2) == (True, 3)
    assert virtually_commute(r2, r1) == (True, 3)
    # pseudo-Anosov on the component containing d blocks commutation
    r1_bad = ReductionSystemSpec(
        ("c",),
        (
            ComponentSpec("L", ("d",), "psi"),
            ComponentSpec("R", (), None),
        ),
    )
    assert virtually_commute(r1_bad, r2) == (False, None)


def test_virtually_commute_case4():
    r1 = ReductionSystemSpec(
        ("c1",), (ComponentSpec("A", ("c2",), None), ComponentSpec("B", (), None))
    )
    r2 = ReductionSystemSpec(
        ("c2",), (ComponentSpec("C", ("c1",), None), ComponentSpec("D", (), None))
    )
    # without the pants flag nothing fires
    assert virtually_commute(r1, r2) == (False, None)
    assert virtually_commute(r1, r2, pants_compatible=True) == (True, 4)
    # intersecting curves kill case 4
    assert virtually_commute(
        r1, r2, intersecting_pairs=[("c1", "c2")], pants_compatible=True
    ) == (False, None)


def test_virtually_commute_symmetry():
    r1 = pa_system("phi")
    r2 = pa_system("psi")
    assert virtually_commute(r1, r2) == virtually_commute(r2, r1)
    r3 = ReductionSystemSpec(
        ("c",), (ComponentSpec("L", (), "phi"), ComponentSpec("R", (), None))
    )
    assert virtually_commute(r3, r3) == (True, 2)


def test_incomplete_labeling():
    r1 = ReductionSystemSpec(("c1",), (ComponentSpec("A", (), None),))
    r2 = ReductionSystemSpec(("c2",), (ComponentSpec("C", ("c1",), None),))
    with pytest.raises(DomainError):
        # c2 is in neither a component of r1 nor r1's curves
        virtually_commute(r1, r2, pants_compatible=True)


# -- flag embeddings and genus plans -------------------------------------------


def test_flag_embedding_check():
    frag = CurveComplexFragment(
        SimpleGraph("pqrs", [("p", "q"), ("q", "r"), ("r", "s"), ("s", "p")])
    )
    edgeless2 = SimpleGraph("ab")
    emb = flag_embedding_check(edgeless2, frag)
    assert emb is not None
    assert not frag.graph.adjacent(emb["a"], emb["b"])
    triangle = SimpleGraph("abc", [("a", "b"), ("b", "c"), ("a", "c")])
    assert flag_embedding_check(triangle, frag) is None
    same = flag_embedding_check(frag.graph, frag)
    assert same == {v: v for v in frag.graph.vertices}


def test_embedding_genus_plan():
    k3 = SimpleGraph("abc", [("a", "b"), ("b", "c"), ("a", "c")])
    plan = embedding_genus_plan(k3)
    assert plan.genus_bound == 3 and plan.base_genus == 0
    sets = list(plan.assignment.values())
    assert all(not (s1 & s2) for i, s1 in enumerate(sets) for s2 in sets[i + 1 :])

    e2 = SimpleGraph("ab")
    plan = embedding_genus_plan(e2)
    assert plan.genus_bound == 4
    assert plan.assignment["a"] & plan.assignment["b"]

    single = SimpleGraph("a")
    assert embedding_genus_plan(single).genus_bound == 1


def test_configuration_json():
    data = {
        "classes": [
            {"id": "1", "kind": "twist", "support": "c1"},
            {"id": "2", "kind": "twist", "support": "c2"},
        ],
        "relations": [["1", "2", "disjoint"]],
    }
    specs, rel = configuration_from_json(data)
    assert coincidence_graph(specs, rel).edges == (("1", "2"),)
    with pytest.raises(InputError):
        configuration_from_json({"classes": []})
    with pytest.raises(InputError):
        configuration_from_json(
            {
                "classes": [
                    {"id": "1", "kind": "twist", "support": "c1"},
                    {"id": "2", "kind": "twist", "support": "c2"},
                ],
                "relations": [],
            }
        )
