"""Group elements of A(Gamma) as syllable words, with exact normal forms.

A word is a sequence of syllables (generator, nonzero exponent) over the
vertices of an ambient graph; vertex generators commute exactly when their
vertices are adjacent.  Two same-generator syllables merge whenever only
commuting syllables separate them, and a word is *reduced* when no such
merge is available under any sequence of commutation swaps.

`reduce` returns a canonical representative: after all merges, syllables are
piled to the left greedily by vertex order, so equal group elements get an
identical syllable sequence.  Everything else (word problem, cyclic
reduction, centralizer predicates, block normal forms) is built on that.

Exponents are plain Python integers, so power experiments never overflow.
"""

import re

from .errors import DomainError, InputError
from .graphs import SimpleGraph, induced_subgraph, join_factors

_SYLLABLE_RE = re.compile(r"^([^\s^]+)(?:\^(-?\d+))?$")


class Word:
    """An element of A(Gamma), stored in syllable-merged form.

    Adjacent same-generator syllables merge at construction; zero exponents
    drop out.  `syllables` is a tuple of (generator, exponent) pairs.
    """

    __slots__ = ("graph", "syllables")

    def __init__(self, graph, syllables=()):
        merged = []
        for gen, exp in syllables:
            graph.index(gen)
            if not isinstance(exp, int):
                raise DomainError("exponent %r is not an integer" % (exp,))
            if exp == 0:
                continue
            if merged and merged[-1][0] == gen:
                e = merged[-1][1] + exp
                if e == 0:
                    merged.pop()
                else:
                    merged[-1] = (gen, e)
            else:
                merged.append((gen, exp))
        self.graph = graph
        self.syllables = tuple(merged)

    # -- construction helpers -------------------------------------------

    @classmethod
    def parse(cls, graph, text):
        """Parse the `gen^exp` text format, e.g. "a^2 b^-1 c".

        `^1` may be omitted; the empty string (or "1") is the identity.
        """
        text = text.strip()
        if text in ("", "1"):
            return cls(graph, ())
        sylls = []
        for token in text.split():
            m = _SYLLABLE_RE.match(token)
            if not m:
                raise InputError("bad syllable %r" % (token,))
            gen, exp = m.group(1), m.group(2)
            if not graph.has_vertex(gen):
                raise DomainError("generator %r is not a vertex" % (gen,))
            sylls.append((gen, 1 if exp is None else int(exp)))
        return cls(graph, sylls)

    def format(self):
        """Inverse of `parse`; the identity renders as "1"."""
        if not self.syllables:
            return "1"
        return " ".join(
            g if e == 1 else "%s^%d" % (g, e) for g, e in self.syllables
        )

    # -- basic algebra ---------------------------------------------------

    def __mul__(self, other):
        if other.graph != self.graph:
            raise DomainError("words live over different graphs")
        return Word(self.graph, self.syllables + other.syllables)

    def inverse(self):
        return Word(self.graph, [(g, -e) for g, e in reversed(self.syllables)])

    def power(self, k):
        if k == 0:
            return Word(self.graph, ())
        base = self if k > 0 else self.inverse()
        return Word(self.graph, base.syllables * abs(k))

    def __eq__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return self.graph == other.graph and self.syllables == other.syllables

    def __hash__(self):
        return hash((self.graph, self.syllables))

    def __len__(self):
        return len(self.syllables)

    def __repr__(self):
        return "Word(%s)" % self.format()

    def letter_length(self):
        return sum(abs(e) for _, e in self.syllables)

    def support(self):
        """Generators occurring in the word, in vertex order."""
        gens = {g for g, _ in self.syllables}
        return tuple(v for v in self.graph.vertices if v in gens)

    def is_trivial(self):
        return not reduce(self).syllables


# -- reduction to canonical form ------------------------------------------


class _WordCore:
    """Per-graph integer encoding: generators as indices, links as bitmasks."""

    __slots__ = ("names", "index", "commuting")

    def __init__(self, graph):
        self.names = graph.vertices
        self.index = graph._index
        self.commuting = [
            sum(1 << graph._index[u] for u in graph._adj[v]) for v in graph.vertices
        ]


def _core(graph):
    core = getattr(graph, "_word_core", None)
    if core is None:
        core = _WordCore(graph)
        graph._word_core = core
    return core


def _encode(core, sylls):
    idx = core.index
    return [(idx[g], e) for g, e in sylls]


def _decode(core, sylls):
    names = core.names
    return [(names[g], e) for g, e in sylls]


def _merge_fixpoint(core, sylls):
    """Merge same-generator syllables separated by commuting ones only."""
    commuting = core.commuting
    sylls = list(sylls)
    changed = True
    while changed:
        changed = False
        n = len(sylls)
        for i in range(n):
            gi, ei = sylls[i]
            mask = commuting[gi]
            for j in range(i + 1, n):
                gj, ej = sylls[j]
                if gj == gi:
                    e = ei + ej
                    sylls[i : j + 1] = ([(gi, e)] if e else []) + sylls[i + 1 : j]
                    changed = True
                    break
                if not (mask >> gj) & 1:
                    break
            if changed:
                break
    return sylls


def _pile_left(core, sylls):
    """Deterministic linearization: smallest front-movable vertex first."""
    commuting = core.commuting
    rem = list(sylls)
    out = []
    while rem:
        seen = 0
        best = -1
        best_g = -1
        for idx, (g, _) in enumerate(rem):
            if not (seen & ~commuting[g]) and (best < 0 or g < best_g):
                best, best_g = idx, g
            seen |= 1 << g
        out.append(rem.pop(best))
    return out


def _canonical(core, sylls):
    return _pile_left(core, _merge_fixpoint(core, sylls))


def reduce(w):
    """Canonical reduced form of w.

    Idempotent and length-nonincreasing; two words are equal in A(Gamma)
    exactly when their canonical forms coincide.

    >>> g = SimpleGraph(["a", "b"], [("a", "b")])
    >>> reduce(Word.parse(g, "b a b^-1")).format()
    'a'
    """
    core = _core(w.graph)
    return Word(w.graph, _decode(core, _canonical(core, _encode(core, w.syllables))))


def is_reduced(w):
    return reduce(w).letter_length() == w.letter_length()


def words_equal(w1, w2):
    """Word problem: does w1 w2^-1 reduce to the identity?"""
    if w1.graph != w2.graph:
        raise DomainError("words live over different graphs")
    return not reduce(w1 * w2.inverse()).syllables


def cyclically_reduce(w):
    """Cyclic reduction: returns (u, c) with w = c u c^-1.

    u admits no commutation shuffle exposing a first/last syllable of the
    same generator, which makes it of minimal letter length among conjugates
    reachable by cyclic syllable moves.

    >>> g = SimpleGraph(["a", "b"], [])
    >>> u, c = cyclically_reduce(Word.parse(g, "a b a^-1"))
    >>> u.format(), c.format()
    ('b', 'a')
    """
    w = reduce(w)
    core = _core(w.graph)
    commuting = core.commuting
    sylls = _encode(core, w.syllables)
    conj = []
    while True:
        found = None
        n = len(sylls)
        for i in range(n):
            gi = sylls[i][0]
            if any(not (commuting[gi] >> h) & 1 for h, _ in sylls[:i]):
                continue
            for j in range(n - 1, i, -1):
                if sylls[j][0] != gi:
                    continue
                if all((commuting[gi] >> h) & 1 for h, _ in sylls[j + 1 :]):
                    found = (i, j)
                    break
            if found:
                break
        if not found:
            break
        i, j = found
        gi, ei = sylls[i]
        ej = sylls[j][1]
        rest = sylls[:i] + sylls[i + 1 : j] + sylls[j + 1 :]
        e = ei + ej
        sylls = _merge_fixpoint(core, rest + ([(gi, e)] if e else []))
        conj.append((gi, ei))
    u = Word(w.graph, _decode(core, _pile_left(core, sylls)))
    return u, reduce(Word(w.graph, _decode(core, conj)))


def is_cyclically_reduced(w):
    u, c = cyclically_reduce(w)
    return not c.syllables and u.letter_length() == w.letter_length()


# -- central block decompositions ------------------------------------------


class CentralBlockForm:
    """A factorization of a word into central blocks.

    Blocks are stored left to right, so concatenating them in order
    reproduces the element.  Each block is central: its support spans a
    clique, so all its syllables commute with one another.
    """

    __slots__ = ("blocks",)

    def __init__(self, blocks):
        blocks = tuple(blocks)
        if not blocks:
            raise DomainError("block form of the empty word is undefined")
        for b in blocks:
            if not b.syllables:
                raise DomainError("empty central block")
            if not b.graph.is_clique(b.support()):
                raise DomainError("block %r is not central" % (b,))
        self.blocks = blocks

    def concatenation(self):
        out = self.blocks[0]
        for b in self.blocks[1:]:
            out = out * b
        return out

    def __repr__(self):
        return "CentralBlockForm(%s)" % " | ".join(b.format() for b in self.blocks)


def central_form(w):
    """Maximal central decomposition, extracting the rightmost block first.

    Each block is the longest central word that can be split off the right
    end of what remains; consequently every generator of a block fails to
    commute with some generator of the block to its right, and blocks are
    ordered internally so that the last letter of each block does not
    commute with the last letter of the block to its right.
    """
    w = reduce(w)
    if not w.syllables:
        raise DomainError("central form of the empty word is undefined")
    adj = w.graph._adj
    rem = list(w.syllables)
    blocks_rl = []  # rightmost block first
    while rem:
        movable = [
            idx
            for idx in range(len(rem))
            if all(h in adj[rem[idx][0]] for h, _ in rem[idx + 1 :])
        ]
        block = [rem[idx] for idx in movable]
        rem = [s for idx, s in enumerate(rem) if idx not in set(movable)]
        blocks_rl.append(block)

    # Order the letters inside each block so the last letters chain:
    # walking right-to-left, each block's last letter refuses to commute
    # with the previous block's last letter.
    order = w.graph.index
    lasts = []
    for k in range(len(blocks_rl) - 1, -1, -1):
        block = blocks_rl[k]
        if k == len(blocks_rl) - 1:
            last = min(block, key=lambda s: order(s[0]))
        else:
            prev_last = lasts[-1]
            candidates = [s for s in block if s[0] not in adj[prev_last[0]]]
            last = min(candidates, key=lambda s: order(s[0]))
        lasts.append(last)
    lasts.reverse()  # lasts[k] matches blocks_rl[k]

    ordered = []
    for block, last in zip(blocks_rl, lasts):
        rest = sorted((s for s in block if s != last), key=lambda s: order(s[0]))
        ordered.append(Word(w.graph, rest + [last]))
    return CentralBlockForm(list(reversed(ordered)))


def left_greedy_form(w):
    """Left greedy normal form.

    Starting from the central decomposition, every generator is moved as far
    left as commutation with whole blocks allows.  Afterwards no generator
    occurring in a block commutes with the entire block to its left.
    """
    base = central_form(w)
    graph = w.graph
    adj = graph._adj
    order = graph.index
    blocks = [list(b.syllables) for b in base.blocks]  # reading order

    def commutes_with_block(gen, block):
        return all(h in adj[gen] for h, _ in block)

    r = 1
    while r < len(blocks):
        moved = True
        while moved:
            moved = False
            for syll in sorted(blocks[r], key=lambda s: order(s[0])):
                t = r
                while t - 1 >= 0 and commutes_with_block(syll[0], blocks[t - 1]):
                    t -= 1
                if t < r:
                    blocks[r].remove(syll)
                    blocks[t].append(syll)
                    moved = True
        if not blocks[r]:
            del blocks[r]
        else:
            r += 1
    ordered = [
        Word(graph, sorted(b, key=lambda s: order(s[0]))) for b in blocks
    ]
    return CentralBlockForm(ordered)


# -- join subgroups and centralizers ----------------------------------------


def _require_cyclically_reduced(w):
    if not w.syllables:
        raise DomainError("the empty word is excluded here")
    if not is_cyclically_reduced(w):
        raise DomainError("word %r is not cyclically reduced" % (w.format(),))


def in_join_subgroup(w):
    """Is the (cyclically reduced) word contained in a join subgroup?

    True iff the support sits inside the link of some outside vertex, or
    the induced subgraph on the support is itself a nontrivial join.
    """
    _require_cyclically_reduced(w)
    supp = w.support()
    g = w.graph
    if join_factors(induced_subgraph(g, supp)) is not None:
        return True
    supp_set = set(supp)
    for v in g.vertices:
        if v in supp_set:
            continue
        if supp_set <= set(g.link(v)):
            return True
    return False


def centralizer_is_cyclic(w):
    """Negation of `in_join_subgroup` for cyclically reduced words."""
    return not in_join_subgroup(w)


def is_enveloped_generating_set(gens):
    """Does every generator's support span a clique of the ambient graph?"""
    graphs = {w.graph for w in gens}
    if len(graphs) > 1:
        raise DomainError("generators live over different graphs")
    for w in gens:
        r = reduce(w)
        if not r.graph.is_clique(r.support()):
            return False
    return True
