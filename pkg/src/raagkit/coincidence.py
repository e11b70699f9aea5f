"""Symbolic mapping-class configurations and their combinatorics.

Geometry is input data here, never computed: every disjointness or
intersection fact, every shared-power declaration, and every canonical
reduction system arrives as part of the configuration.  On top of that
symbolic data this module builds coincidence graphs, the group presentation
they predict (with an uninterpreted power N), virtual-commutation verdicts
for reduction systems, flag embeddings into curve-complex fragments, and a
handle-counting plan for realizing a graph's group by homeomorphisms on
subsurfaces.
"""

import itertools
from dataclasses import dataclass

from .errors import DomainError, InputError
from .graphs import SimpleGraph, complement
from .structure import describe_raag

TWIST = "twist"
PSEUDO_ANOSOV = "pA"

DISJOINT = "disjoint"
INTERSECTING = "intersecting"
EQUAL = "equal"


@dataclass(frozen=True)
class SupportSpec:
    """One mapping class: a twist about a curve or a pseudo-Anosov on a
    subsurface.  `boundary` lists the support's boundary curves (pA only);
    `no_peripheral_leaves` records that its invariant laminations avoid
    the boundary, which collections here always require."""

    id: str
    kind: str
    support: str
    boundary: tuple = ()
    no_peripheral_leaves: bool = True

    def __post_init__(self):
        if self.kind not in (TWIST, PSEUDO_ANOSOV):
            raise DomainError("kind must be %r or %r" % (TWIST, PSEUDO_ANOSOV))
        if self.kind == TWIST and self.boundary:
            raise DomainError("twists carry no boundary list")
        object.__setattr__(self, "boundary", tuple(self.boundary))


class RelationMatrix:
    """Symmetric pairwise relations between supports: disjoint,
    intersecting, or equal-support (with a shares-power flag)."""

    def __init__(self, specs, relations, shares_power=()):
        self.specs = tuple(specs)
        ids = [s.id for s in self.specs]
        if len(set(ids)) != len(ids):
            raise DomainError("duplicate mapping-class ids")
        self._by_id = {s.id: s for s in self.specs}
        self._rel = {}
        self._shares = set()
        for a, b, kind in relations:
            if a not in self._by_id or b not in self._by_id or a == b:
                raise DomainError("bad relation pair (%r, %r)" % (a, b))
            if kind not in (DISJOINT, INTERSECTING, EQUAL):
                raise DomainError("unknown relation kind %r" % (kind,))
            key = frozenset((a, b))
            if key in self._rel and self._rel[key] != kind:
                raise DomainError("conflicting relations for %r" % (key,))
            self._rel[key] = kind
        for a, b in shares_power:
            key = frozenset((a, b))
            if self._rel.get(key) != EQUAL:
                raise DomainError("shares_power requires an equal-support pair")
            self._shares.add(key)
        for a, b in itertools.combinations(ids, 2):
            if frozenset((a, b)) not in self._rel:
                raise DomainError("relation missing for pair (%r, %r)" % (a, b))
        for key, kind in self._rel.items():
            if kind == EQUAL:
                a, b = sorted(key)
                sa, sb = self._by_id[a], self._by_id[b]
                if sa.kind != sb.kind or sa.support != sb.support or set(
                    sa.boundary
                ) != set(sb.boundary):
                    raise DomainError(
                        "equal-support pair (%r, %r) disagrees on support data"
                        % (a, b)
                    )

    def relation(self, a, b):
        return self._rel[frozenset((a, b))]

    def shares_power(self, a, b):
        return frozenset((a, b)) in self._shares


@dataclass(frozen=True)
class ConventionReport:
    passed: bool
    violations: tuple


def check_conventions(specs, rel):
    """Convention check for a configuration.

    Violations: a pseudo-Anosov whose laminations have peripheral leaves;
    two equal-support classes that commute without sharing a power (they
    differ by boundary twisting, which is disallowed); a twist about a
    boundary curve of a boundary-twisting pseudo-Anosov.
    """
    violations = []
    for s in specs:
        if s.kind == PSEUDO_ANOSOV and not s.no_peripheral_leaves:
            violations.append(
                "%s: laminations must have no peripheral leaves" % s.id
            )
    for a, b in itertools.combinations([s.id for s in specs], 2):
        if rel.relation(a, b) == EQUAL and not rel.shares_power(a, b):
            violations.append(
                "%s, %s: equal supports commuting without a shared power" % (a, b)
            )
    for s in specs:
        if s.kind != PSEUDO_ANOSOV or s.no_peripheral_leaves:
            continue
        for t in specs:
            if t.kind == TWIST and t.support in s.boundary:
                violations.append(
                    "%s: twist supported on the twisted boundary of %s"
                    % (t.id, s.id)
                )
    return ConventionReport(not violations, tuple(violations))


def coincidence_graph(specs, rel):
    """One vertex per mapping class; edges where supports are disjoint or
    coincide with a shared power (the commuting pairs)."""
    report = check_conventions(specs, rel)
    if not report.passed:
        raise DomainError("conventions fail: %s" % "; ".join(report.violations))
    ids = [s.id for s in specs]
    edges = []
    for a, b in itertools.combinations(ids, 2):
        kind = rel.relation(a, b)
        if kind == DISJOINT or (kind == EQUAL and rel.shares_power(a, b)):
            edges.append((a, b))
    return SimpleGraph(ids, edges)


@dataclass(frozen=True)
class Presentation:
    graph: SimpleGraph
    generators: tuple  # symbolic names, one per vertex
    commuting_relations: tuple  # pairs of generator names
    description: str

    def to_json(self):
        return {
            "graph": self.graph.to_json(),
            "generators": list(self.generators),
            "relations": [list(r) for r in self.commuting_relations],
            "isomorphism_type": self.description,
        }


def predicted_subgroup(specs, rel):
    """The group presentation predicted for high powers of an irredundant
    configuration: the graph group on the coincidence graph, with symbolic
    generators f_<id>^N.

    Shared-power pairs are redundant and rejected.
    """
    for a, b in itertools.combinations([s.id for s in specs], 2):
        if rel.relation(a, b) == EQUAL and rel.shares_power(a, b):
            raise DomainError(
                "redundant pair (%r, %r): shared powers generate a cyclic group"
                % (a, b)
            )
    graph = coincidence_graph(specs, rel)
    gens = {v: "f_%s^N" % v for v in graph.vertices}
    relations = tuple((gens[u], gens[v]) for u, v in graph.edges)
    return Presentation(
        graph,
        tuple(gens[v] for v in graph.vertices),
        relations,
        describe_raag(graph),
    )


def tits_classification(specs, rel):
    """Coarse alternative for high powers: virtually abelian when every
    pair commutes, otherwise nonabelian but enveloped by the graph group
    on the coincidence graph."""
    graph = coincidence_graph(specs, rel)
    n = len(graph.vertices)
    if len(graph.edges) == n * (n - 1) // 2:
        return ("virtually-abelian", graph, describe_raag(graph) if n else "")
    return ("enveloped-nonabelian", graph, describe_raag(graph))


# -- reduction systems and virtual commutation --------------------------------


@dataclass(frozen=True)
class ComponentSpec:
    """A complementary piece of a reduction system: the curves it contains
    and the restriction of the mapping class to it (None means trivial,
    otherwise a pseudo-Anosov label; equal labels mean a shared power)."""

    id: str
    curves_inside: tuple = ()
    restriction: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "curves_inside", tuple(self.curves_inside))


@dataclass(frozen=True)
class ReductionSystemSpec:
    """A canonical reduction system: its curves and the complementary
    components with restriction labels."""

    curves: tuple
    components: tuple

    def __post_init__(self):
        object.__setattr__(self, "curves", tuple(self.curves))
        object.__setattr__(self, "components", tuple(self.components))
        seen = set()
        for c in self.components:
            if c.id in seen:
                raise DomainError("duplicate component id %r" % (c.id,))
            seen.add(c.id)

    def component_of_curve(self, curve):
        hits = [c for c in self.components if curve in c.curves_inside]
        if len(hits) != 1:
            raise DomainError(
                "incomplete labeling: curve %r lies in %d components"
                % (curve, len(hits))
            )
        return hits[0]

    def is_pseudo_anosov(self):
        return not self.curves and len(self.components) == 1 and (
            self.components[0].restriction is not None
        )


def virtually_commute(r1, r2, intersecting_pairs=(), pants_compatible=False):
    """Decide virtual commutation of two reduced mapping classes from their
    reduction systems; returns (verdict, case) with case in 1..4 or None.

    The four sufficient conditions, tried in order:
      1. both pseudo-Anosov with a shared power (equal restriction labels);
      2. equal reduction systems with componentwise shared-power or trivial
         restrictions;
      3. one system properly contains the other, and the smaller side's
         class is trivial on every component meeting the bigger system;
      4. the union extends to a pants decomposition (an input flag), all
         curves pairwise disjoint, and each side's curves sit in trivially
         restricted components of the other.
    """
    crossing = {frozenset(p) for p in intersecting_pairs}

    def disjoint(c1, c2):
        return frozenset((c1, c2)) not in crossing

    # case 1
    if r1.is_pseudo_anosov() and r2.is_pseudo_anosov():
        if r1.components[0].restriction == r2.components[0].restriction:
            return True, 1
        return False, None

    set1, set2 = set(r1.curves), set(r2.curves)

    # case 2
    if set1 == set2:
        ids1 = {c.id: c for c in r1.components}
        ids2 = {c.id: c for c in r2.components}
        if set(ids1) != set(ids2):
            raise DomainError(
                "incomplete labeling: equal systems with mismatched components"
            )
        ok = True
        for cid, c1 in ids1.items():
            c2 = ids2[cid]
            if c1.restriction is None or c2.restriction is None:
                continue
            if c1.restriction != c2.restriction:
                ok = False
                break
        if ok:
            return True, 2
        return False, None

    # case 3, in either orientation
    def properly_contained(small, big, small_sys, big_sys):
        if not set(small) < set(big):
            return False
        for comp in small_sys.components:
            if set(comp.curves_inside) & set(big) and comp.restriction is not None:
                return False
        return True

    if properly_contained(set1, set2, r1, r2):
        return True, 3
    if properly_contained(set2, set1, r2, r1):
        return True, 3

    # case 4
    union = set1 | set2
    if pants_compatible and all(
        disjoint(a, b) for a, b in itertools.combinations(union, 2)
    ):
        ok = True
        for c in set1 - set2:
            if r2.component_of_curve(c).restriction is not None:
                ok = False
                break
        if ok:
            for c in set2 - set1:
                if r1.component_of_curve(c).restriction is not None:
                    ok = False
                    break
        if ok:
            return True, 4
    return False, None


# -- curve complexes and genus planning ---------------------------------------


@dataclass(frozen=True)
class CurveComplexFragment:
    """A finite piece of a curve complex: vertices are curves, adjacency
    is disjoint realizability."""

    graph: SimpleGraph


def flag_embedding_check(g, fragment):
    """An injection of g onto an induced subgraph of the fragment, or None."""
    frag = fragment.graph
    assignment = {}
    used = set()

    def backtrack(i):
        if i == len(g.vertices):
            return True
        v = g.vertices[i]
        for cand in frag.vertices:
            if cand in used:
                continue
            if any(
                g.adjacent(v, u) != frag.adjacent(cand, assignment[u])
                for u in assignment
            ):
                continue
            assignment[v] = cand
            used.add(cand)
            if backtrack(i + 1):
                return True
            del assignment[v]
            used.discard(cand)
        return False

    if not backtrack(0):
        return None
    for u, v in itertools.combinations(g.vertices, 2):
        assert g.adjacent(u, v) == frag.adjacent(assignment[u], assignment[v])
    return dict(assignment)


@dataclass(frozen=True)
class GenusPlan:
    genus_bound: int
    base_genus: int
    assignment: dict  # vertex -> frozenset of handle labels


def embedding_genus_plan(g):
    """Handle budget for supporting one homeomorphism per vertex on
    pairwise-correctly-overlapping subsurfaces.

    Work in the complement: one handle per vertex plus one per complement
    edge, on a base surface with one handle per complement edge.  A vertex
    claims its own handle and the handles of its complement edges, so
    vertices adjacent in g (non-adjacent in the complement) get disjoint
    handle sets, while non-adjacent ones share exactly their connecting
    edge handle.
    """
    comp = complement(g)
    base = len(comp.edges)
    bound = base + len(g.vertices) + len(comp.edges)
    assignment = {}
    for v in g.vertices:
        handles = {("vertex", v)}
        for e in comp.edges:
            if v in e:
                handles.add(("edge",) + e)
        assignment[v] = frozenset(handles)
    for u, v in itertools.combinations(g.vertices, 2):
        shared = assignment[u] & assignment[v]
        if g.adjacent(u, v):
            assert not shared
        else:
            connecting = next(e for e in comp.edges if u in e and v in e)
            assert shared == {("edge",) + connecting}
    return GenusPlan(bound, base, assignment)


# -- configuration file format -------------------------------------------------


def configuration_from_json(data):
    """Parse {"classes": [...], "relations": [...], "shares_power": [...]}."""
    try:
        specs = tuple(
            SupportSpec(
                id=c["id"],
                kind=c["kind"],
                support=c["support"],
                boundary=tuple(c.get("boundary", ())),
                no_peripheral_leaves=bool(c.get("no_peripheral_leaves", True)),
            )
            for c in data["classes"]
        )
        relations = [tuple(r) for r in data["relations"]]
        shares = [tuple(p) for p in data.get("shares_power", ())]
    except (KeyError, TypeError) as exc:
        raise InputError("bad configuration JSON: %s" % (exc,))
    try:
        rel = RelationMatrix(specs, relations, shares)
    except DomainError as exc:
        raise InputError(str(exc))
    return specs, rel
