"""Folded subgroup automata for finitely generated subgroups of free groups.

Free words are sequences of (generator index, sign) over rank n, written in
text as lowercase letters with capitals for inverses ("aBa" = a b^-1 a).
A subgroup is represented by its folded core automaton based at a marked
state: words in the subgroup are exactly the ones tracing a loop at the
base.  Folding repeatedly identifies the targets of equally-labeled edges,
and the result is relabeled by breadth-first search so that equal subgroups
produce identical automata.
"""

import itertools
from dataclasses import dataclass

from .errors import DomainError, InputError


@dataclass(frozen=True)
class FreeWord:
    rank: int
    letters: tuple  # ((generator index, +1|-1), ...), freely reduced

    def __post_init__(self):
        out = []
        for gen, sign in self.letters:
            gen, sign = int(gen), int(sign)
            if sign not in (1, -1):
                raise DomainError("letter sign must be +1 or -1")
            if not 0 <= gen < self.rank:
                raise DomainError("generator index %d outside rank %d" % (gen, self.rank))
            if out and out[-1] == (gen, -sign):
                out.pop()
            else:
                out.append((gen, sign))
        object.__setattr__(self, "letters", tuple(out))

    @classmethod
    def parse(cls, rank, text):
        letters = []
        for ch in text.strip():
            if ch.islower():
                letters.append((ord(ch) - ord("a"), 1))
            elif ch.isupper():
                letters.append((ord(ch) - ord("A"), -1))
            elif ch.isspace():
                continue
            else:
                raise InputError("bad free-word character %r" % (ch,))
        return cls(rank, tuple(letters))

    def format(self):
        return "".join(
            chr((ord("a") if s > 0 else ord("A")) + g) for g, s in self.letters
        )

    def inverse(self):
        return FreeWord(self.rank, tuple((g, -s) for g, s in reversed(self.letters)))

    def __mul__(self, other):
        if other.rank != self.rank:
            raise DomainError("free words of different ranks")
        return FreeWord(self.rank, self.letters + other.letters)

    def __len__(self):
        return len(self.letters)


class StallingsGraph:
    """Folded, connected, core automaton with a base state.

    `forward[(state, gen)]` is the target of the gen-labeled edge leaving
    `state`; `backward` indexes the same edges from their targets.
    """

    def __init__(self, rank, num_states, base, edges):
        self.rank = rank
        self.num_states = num_states
        self.base = base
        self.forward = {}
        self.backward = {}
        for s, g, t in edges:
            if not (0 <= s < num_states and 0 <= t < num_states):
                raise DomainError("edge endpoint outside the state set")
            if (s, g) in self.forward or (t, g) in self.backward:
                raise DomainError("automaton is not folded")
            self.forward[(s, g)] = t
            self.backward[(t, g)] = s
        self.edges = tuple(sorted((s, g, t) for (s, g), t in self.forward.items()))

    def step(self, state, gen, sign):
        key = (state, gen)
        return self.forward.get(key) if sign > 0 else self.backward.get(key)

    def is_complete(self):
        return all(
            (s, g) in self.forward
            for s in range(self.num_states)
            for g in range(self.rank)
        )

    def to_json(self):
        return {
            "rank": self.rank,
            "states": self.num_states,
            "base": self.base,
            "edges": [
                {"from": s, "label": chr(ord("a") + g), "to": t}
                for s, g, t in self.edges
            ],
        }


def _fold(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def fold(generators, rank):
    """Folded core automaton of the subgroup generated by `generators`.

    Deterministic: the resulting states are numbered by breadth-first
    search from the base with labels in alphabetical order.
    """
    if rank < 1:
        raise DomainError("rank must be at least 1")
    edges = []  # (state, gen, state), meaning state --gen--> state
    next_state = 1
    for w in generators:
        if w.rank != rank:
            raise DomainError("generator rank mismatch")
        if not w.letters:
            continue
        cur = 0
        for i, (g, s) in enumerate(w.letters):
            nxt = 0 if i == len(w.letters) - 1 else next_state
            if nxt != 0:
                next_state += 1
            if s > 0:
                edges.append((cur, g, nxt))
            else:
                edges.append((nxt, g, cur))
            cur = nxt

    parent = list(range(next_state))

    def canon_edges():
        return {(_fold(parent, s), g, _fold(parent, t)) for s, g, t in edges}

    # fold: identify targets of same-labeled edges leaving (or entering) a state
    changed = True
    es = canon_edges()
    while changed:
        changed = False
        out_map, in_map = {}, {}
        for s, g, t in es:
            if (s, g) in out_map and out_map[(s, g)] != t:
                a, b = _fold(parent, out_map[(s, g)]), _fold(parent, t)
                parent[a] = b
                changed = True
                break
            out_map[(s, g)] = t
            if (t, g) in in_map and in_map[(t, g)] != s:
                a, b = _fold(parent, in_map[(t, g)]), _fold(parent, s)
                parent[a] = b
                changed = True
                break
            in_map[(t, g)] = s
        es = canon_edges()

    base = _fold(parent, 0)
    # core trim: drop degree-one states other than the base
    while True:
        degree = {}
        for s, g, t in es:
            degree[s] = degree.get(s, 0) + 1
            degree[t] = degree.get(t, 0) + 1
        victim = next(
            (
                s
                for s in degree
                if degree[s] == 1 and s != base
            ),
            None,
        )
        if victim is None:
            break
        es = {(s, g, t) for s, g, t in es if s != victim and t != victim}

    # canonical breadth-first relabeling from the base
    states = {base} | {s for s, _, _ in es} | {t for _, _, t in es}
    label = {base: 0}
    queue = [base]
    fwd = {(s, g): t for s, g, t in es}
    bwd = {(t, g): s for s, g, t in es}
    while queue:
        cur = queue.pop(0)
        for g in range(rank):
            for nxt in (fwd.get((cur, g)), bwd.get((cur, g))):
                if nxt is not None and nxt not in label:
                    label[nxt] = len(label)
                    queue.append(nxt)
    if len(label) != len(states):
        raise DomainError("folded graph is not connected")  # cannot happen
    renamed = [(label[s], g, label[t]) for s, g, t in es]
    return StallingsGraph(rank, len(label), 0, sorted(renamed))


def membership(word, automaton):
    """Does the word trace a loop at the base state?"""
    if word.rank != automaton.rank:
        raise DomainError("word rank differs from automaton rank")
    cur = automaton.base
    for g, s in word.letters:
        cur = automaton.step(cur, g, s)
        if cur is None:
            return False
    return cur == automaton.base


def rank_and_index(automaton):
    """Subgroup rank and index: (|edges| - |states| + 1, |states| or inf)."""
    e = len(automaton.edges)
    v = automaton.num_states
    rk = e - v + 1
    index = v if automaton.is_complete() else float("inf")
    return rk, index


def generates_full(generators, rank):
    """Do the words generate the whole free group of the given rank?"""
    h = fold(generators, rank)
    rk, index = rank_and_index(h)
    return index == 1 and rk == rank


@dataclass(frozen=True)
class FactorReport:
    generators: tuple  # the projected words, as text
    generates_full: bool
    rank: int
    index: object
    abelian: bool


@dataclass(frozen=True)
class ProjectionReport:
    """Per-factor analysis of a subgroup of a product of two free groups.

    Full projections do NOT certify that the subgroup is the whole product;
    deciding that is not available in general, and this report never
    claims it.
    """

    left: FactorReport
    right: FactorReport
    disclaimer: str = (
        "full projections do not certify the subgroup equals the product"
    )


def product_projection_analysis(pairs, rank_left, rank_right):
    """Project a generating set of a subgroup of F_n x F_m to each factor."""
    left_words = [p[0] for p in pairs]
    right_words = [p[1] for p in pairs]

    def analyze(words, rank):
        h = fold(words, rank)
        rk, index = rank_and_index(h)
        return FactorReport(
            generators=tuple(w.format() for w in words),
            generates_full=(index == 1 and rk == rank),
            rank=rk,
            index=index,
            abelian=rk <= 1,
        )

    return ProjectionReport(analyze(left_words, rank_left), analyze(right_words, rank_right))
