"""Dual braid monoids attached to standard Coxeter elements.

Divisors of a Coxeter element c in absolute order form the lattice of
noncrossing partitions; their minimal factorisations into reflections
carry a Hurwitz braid group action; and the atoms of the dual monoid
embed into the classical braid group through an explicit family of
conjugated generators.  This module computes all of these exactly:
divisor sets by breadth first search through reflection length levels,
Hurwitz orbits by closure under the elementary moves, atom braid words
by the rotation formula over a fixed generator ordering, and simple
dual braids as products of atom normal forms.

The noncrossing partition model is combinatorial for types A and B: the
circle carries the orbit of the point 1 under c, blocks are the cycles
of the divisor, and crossing freeness is checked on circular positions.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from functools import cache

from .coxeter import (
    CoxeterElement,
    IntegrityError,
    abs_divides,
    bruhat_leq,
    coxeter_element_orderings,
    coxeter_group,
    standard_coxeter_elements,
    type_b_element_embedding,
)
from .garside import (
    BraidWord,
    GarsideTable,
    _letters_of_nf_ids,
    _nf_ids,
    _nf_mul_ids,
    _rational_ids,
    garside_table,
)


def _require_standard(c: CoxeterElement) -> None:
    if c not in standard_coxeter_elements(c.group):
        raise ValueError("expected a standard Coxeter element")


def divisors_of(c: CoxeterElement) -> tuple[CoxeterElement, ...]:
    """The divisor set DIV(c) in absolute order, sorted by level.

    Breadth first search: level k+1 consists of the products x*t that gain
    reflection length and still divide c.
    """
    _require_standard(c)
    group = c.group
    T = group.reflections
    level: set[CoxeterElement] = {group.identity}
    out = [group.identity]
    for k in range(c.reflection_length()):
        nxt: set[CoxeterElement] = set()
        for x in level:
            for t in T:
                y = x * t
                if y.reflection_length() == k + 1 and abs_divides(y, c):
                    nxt.add(y)
        level = nxt
        out.extend(sorted(nxt, key=lambda w: w.sort_key()))
    return tuple(out)


# ---------------------------------------------------------------------------
# noncrossing partitions, types A and B


@dataclass(frozen=True)
class NoncrossingPartition:
    """A partition of circle labels into blocks, blocks in cycle order."""

    sequence: tuple[int, ...]
    blocks: tuple[tuple[int, ...], ...]

    def positions(self) -> dict[int, int]:
        return {label: i for i, label in enumerate(self.sequence)}

    def is_noncrossing(self) -> bool:
        pos = self.positions()
        sets = [sorted(pos[l] for l in blk) for blk in self.blocks]
        for a in range(len(sets)):
            for b in range(a + 1, len(sets)):
                pa, pb = sets[a], sets[b]
                if len(pa) < 2 or len(pb) < 2:
                    continue
                gaps = set()
                for q in pb:
                    gaps.add(bisect_left(pa, q) % len(pa))
                    if len(gaps) > 1:
                        return False
        return True

    def to_json(self) -> dict:
        return {
            "sequence": list(self.sequence),
            "blocks": [list(b) for b in self.blocks],
        }

    @staticmethod
    def from_json(data: dict) -> "NoncrossingPartition":
        return NoncrossingPartition(
            tuple(data["sequence"]), tuple(tuple(b) for b in data["blocks"])
        )


def circle_sequence(c: CoxeterElement) -> tuple[int, ...]:
    """The orbit of the point 1 under c, the circular label order.

    A standard Coxeter element acts as a single cycle on the relevant
    points: n+1 of them in type A, all 2n signed points in type B.
    """
    fam = c.group.type.family
    n = c.group.rank
    expected = n + 1 if fam == "A" else 2 * n
    if fam not in ("A", "B"):
        raise ValueError("the circle model exists for types A and B")
    seq = [1]
    x = c.act(1)
    while x != 1:
        seq.append(x)
        x = c.act(x)
    if len(seq) != expected:
        raise ValueError("element does not act as a full cycle")
    return tuple(seq)


def ncp_encode(x: CoxeterElement, c: CoxeterElement) -> NoncrossingPartition:
    """The noncrossing partition of a divisor: blocks are the cycles of x."""
    _require_standard(c)
    if x.group is not c.group:
        raise ValueError("elements of different groups")
    if not abs_divides(x, c):
        raise ValueError("not a divisor of the Coxeter element")
    seq = circle_sequence(c)
    unseen = set(seq)
    blocks = []
    for label in seq:
        if label not in unseen:
            continue
        blk = [label]
        unseen.discard(label)
        nxt = x.act(label)
        while nxt != label:
            blk.append(nxt)
            unseen.discard(nxt)
            nxt = x.act(nxt)
        blocks.append(tuple(blk))
    p = NoncrossingPartition(seq, tuple(blocks))
    if not p.is_noncrossing():
        raise IntegrityError("divisor encoded to a crossing partition")
    return p


def ncp_decode(p: NoncrossingPartition, c: CoxeterElement) -> CoxeterElement:
    """Rebuild the divisor whose cycles are the blocks of p.

    Each block, read in the stored order, is one cycle.  Raises ValueError
    when the blocks do not partition the circle, are not symmetric (type B),
    or assemble to an element outside DIV(c).
    """
    _require_standard(c)
    group = c.group
    seq = circle_sequence(c)
    if tuple(p.sequence) != seq:
        raise ValueError("partition drawn on a different circle")
    labels = [l for blk in p.blocks for l in blk]
    if sorted(labels) != sorted(seq):
        raise ValueError("blocks do not partition the circle")
    mapping: dict[int, int] = {}
    for blk in p.blocks:
        for i, l in enumerate(blk):
            mapping[l] = blk[(i + 1) % len(blk)]
    fam = group.type.family
    n = group.rank
    if fam == "A":
        payload = tuple(mapping[i] for i in range(1, n + 2))
    else:
        for i in range(1, n + 1):
            if mapping[-i] != -mapping[i]:
                raise ValueError("blocks are not symmetric under negation")
        payload = tuple(mapping[i] for i in range(1, n + 1))
    x = group.element(payload)
    if not abs_divides(x, c):
        raise ValueError("decoded element is not a divisor")
    return x


# ---------------------------------------------------------------------------
# Hurwitz action


def hurwitz_orbit(
    start: tuple[CoxeterElement, ...],
) -> frozenset[tuple[CoxeterElement, ...]]:
    """Closure of a tuple under the Hurwitz moves and their inverses.

    Move i sends (..., a, b, ...) to (..., a b a^-1, a, ...) in slots
    i, i+1; the inverse move conjugates the other way.
    """
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for tup in frontier:
            for i in range(len(tup) - 1):
                a, b = tup[i], tup[i + 1]
                fwd = tup[:i] + (a * b * a.inverse(), a) + tup[i + 2 :]
                bwd = tup[:i] + (b, b.inverse() * a * b) + tup[i + 2 :]
                for cand in (fwd, bwd):
                    if cand not in seen:
                        seen.add(cand)
                        nxt.append(cand)
        frontier = nxt
    return frozenset(seen)


def hurwitz_orbit_braids(
    start: tuple[BraidWord, ...],
) -> frozenset[tuple[BraidWord, ...]]:
    """Hurwitz closure at the braid group level.

    Entries are kept in canonical letters (rebuilt from their normal
    forms) so that tuples compare by braid equality, not word equality.
    """
    if not start:
        return frozenset({start})
    group = start[0].group
    table = garside_table(group)

    def canon(b: BraidWord) -> tuple:
        return _nf_ids(table, b.letters)

    def rebuild(nf: tuple) -> BraidWord:
        return BraidWord(group, _letters_of_nf_ids(table, nf))

    start_key = tuple(canon(b) for b in start)
    seen = {start_key}
    frontier = [start_key]
    while frontier:
        nxt = []
        for tup in frontier:
            for i in range(len(tup) - 1):
                na, nb = tup[i], tup[i + 1]
                a, b = rebuild(na), rebuild(nb)
                fwd_first = canon(a * b * a.inverse())
                bwd_second = canon(b.inverse() * a * b)
                fwd = tup[:i] + (fwd_first, na) + tup[i + 2 :]
                bwd = tup[:i] + (nb, bwd_second) + tup[i + 2 :]
                for cand in (fwd, bwd):
                    if cand not in seen:
                        seen.add(cand)
                        nxt.append(cand)
        frontier = nxt
    return frozenset(tuple(rebuild(nf) for nf in tup) for tup in seen)


# ---------------------------------------------------------------------------
# dual atoms and the embedding of simple dual braids


class DualAtomTable:
    """Atom braid words of the dual monoid for (c, ordering).

    The word at rotation index i is a_1 ... a_i a_{i+1} a_i^-1 ... a_1^-1
    with a_j running cyclically through the ordering.  Indices 0 to
    2|T| - 1 hit every reflection exactly twice; the two words for the
    same reflection must be equal as braids, which is checked here.
    """

    def __init__(self, c: CoxeterElement, ordering: tuple[int, ...]) -> None:
        group = c.group
        if sorted(ordering) != list(range(1, group.rank + 1)):
            raise ValueError("ordering must be a permutation of the generator indices")
        if group.from_word(ordering) != c:
            raise ValueError("ordering does not multiply to the given element")
        self.group = group
        self.c = c
        self.ordering = tuple(ordering)
        table = garside_table(group)
        n = group.rank
        T = group.reflections
        words: dict[CoxeterElement, BraidWord] = {}
        nfs: dict[CoxeterElement, tuple] = {}
        hits: dict[CoxeterElement, int] = {}
        for i in range(2 * len(T)):
            seq = [self.ordering[j % n] for j in range(i + 1)]
            letters = tuple(seq) + tuple(-l for l in reversed(seq[:-1]))
            t = group.from_word(abs(l) for l in letters)
            nf = _nf_ids(table, letters)
            hits[t] = hits.get(t, 0) + 1
            if t in nfs:
                if nfs[t] != nf:
                    raise IntegrityError(
                        "rotation formula produced unequal braids for one reflection"
                    )
            else:
                nfs[t] = nf
                words[t] = BraidWord(group, letters)
        if len(words) != len(T) or any(h != 2 for h in hits.values()):
            raise IntegrityError("rotation formula did not cover T twice over")
        self._table = table
        self._nfs = nfs
        self._words = words

    @property
    def reflections(self) -> tuple[CoxeterElement, ...]:
        return self.group.reflections

    def braid(self, t: CoxeterElement) -> BraidWord:
        return self._words[t]

    def normal_form_ids(self, t: CoxeterElement) -> tuple:
        return self._nfs[t]

    def all_rational(self) -> bool:
        return all(_rational_ids(nf) for nf in self._nfs.values())


def dual_atoms(c: CoxeterElement, ordering: tuple[int, ...] | None = None) -> DualAtomTable:
    _require_standard(c)
    if ordering is None:
        ordering = coxeter_element_orderings(c.group)[c]
    return DualAtomTable(c, ordering)


class DualMonoid:
    """All dual braid data attached to one standard Coxeter element."""

    def __init__(self, c: CoxeterElement, ordering: tuple[int, ...] | None = None) -> None:
        _require_standard(c)
        if ordering is None:
            ordering = coxeter_element_orderings(c.group)[c]
        self.group = c.group
        self.c = c
        self.ordering = tuple(ordering)
        self.atoms = DualAtomTable(c, self.ordering)
        self._table: GarsideTable = garside_table(c.group)
        self._divisors: tuple[CoxeterElement, ...] | None = None
        self._embed_cache: dict[CoxeterElement, tuple] = {}

    def divisors(self) -> tuple[CoxeterElement, ...]:
        if self._divisors is None:
            self._divisors = divisors_of(self.c)
        return self._divisors

    def contains(self, x: CoxeterElement) -> bool:
        return abs_divides(x, self.c)

    def embed_nf_ids(self, x: CoxeterElement) -> tuple:
        cached = self._embed_cache.get(x)
        if cached is not None:
            return cached
        if not self.contains(x):
            raise ValueError("element is not a divisor of the Coxeter element")
        nf = (0, ())
        for t in t_reduced_factorization(x):
            nf = _nf_mul_ids(self._table, nf, self.atoms.normal_form_ids(t))
        self._embed_cache[x] = nf
        return nf

    def embed(self, x: CoxeterElement) -> BraidWord:
        return BraidWord(self.group, _letters_of_nf_ids(self._table, self.embed_nf_ids(x)))


@cache
def dual_monoid(c: CoxeterElement, ordering: tuple[int, ...] | None = None) -> DualMonoid:
    return DualMonoid(c, ordering)


def t_reduced_factorization(x: CoxeterElement) -> tuple[CoxeterElement, ...]:
    """Greedy minimal reflection factorisation of x.

    At each step take the first reflection, in the fixed enumeration of T,
    that divides the remainder in absolute order.
    """
    group = x.group
    out = []
    cur = x
    while not cur.is_identity():
        for t in group.reflections:
            if abs_divides(t, cur):
                out.append(t)
                cur = t * cur
                break
        else:
            raise IntegrityError("no reflection divides a nonidentity element")
    return tuple(out)


def embed_simple(
    x: CoxeterElement, c: CoxeterElement, ordering: tuple[int, ...] | None = None
) -> BraidWord:
    """The simple dual braid of a divisor x of c, in the classical braid group."""
    return dual_monoid(c, ordering).embed(x)


def verify_dual_relations(
    c: CoxeterElement, ordering: tuple[int, ...] | None = None
) -> tuple[tuple[CoxeterElement, CoxeterElement, CoxeterElement, bool], ...]:
    """Check the dual braid relations inside the classical braid group.

    For every ordered pair of distinct reflections with t1 t2 dividing c,
    the relation is b(t1) b(t2) = b(t2) b(t3) with t3 = t2 t1 t2.  Returns
    one row (t1, t2, t3, ok) per relation.
    """
    dm = dual_monoid(c, ordering)
    table = dm._table
    atoms = dm.atoms
    T = dm.group.reflections
    rows = []
    for t1 in T:
        for t2 in T:
            if t1 == t2:
                continue
            if not abs_divides(t1 * t2, c):
                continue
            t3 = t2 * t1 * t2
            lhs = _nf_mul_ids(table, atoms.normal_form_ids(t1), atoms.normal_form_ids(t2))
            rhs = _nf_mul_ids(table, atoms.normal_form_ids(t2), atoms.normal_form_ids(t3))
            rows.append((t1, t2, t3, lhs == rhs))
    return tuple(rows)


def linear_coxeter_bruhat_check(
    n: int,
) -> tuple[tuple[CoxeterElement, CoxeterElement, CoxeterElement, bool], ...]:
    """Fraction comparison for the linear Coxeter element of A_n.

    For c = s_1 s_2 ... s_n and every nonidentity divisor u, the left
    fraction b(x)^-1 b(y) of the simple dual braid must satisfy x < y
    strictly in Bruhat order.  Returns rows (u, x, y, ok).
    """
    from .garside import fraction_form

    W = coxeter_group("A", n)
    ordering = tuple(range(1, n + 1))
    c = W.from_word(ordering)
    dm = dual_monoid(c, ordering)
    rows = []
    for u in dm.divisors():
        if u.is_identity():
            continue
        x, y = fraction_form(dm.embed(u))
        ok = x != y and bruhat_leq(x, y)
        rows.append((u, x, y, ok))
    return tuple(rows)


def type_b_absolute_order_embedding_check(c: CoxeterElement) -> bool:
    """Divisibility in a type B dual monoid matches the type A image.

    For all divisors x, y of c in W(B_n): x divides y in absolute order
    exactly when the folded images divide in W(A_{2n-1}).
    """
    if c.group.type.family != "B":
        raise ValueError("expected a type B element")
    div = divisors_of(c)
    images = {x: type_b_element_embedding(x) for x in div}
    for x in div:
        for y in div:
            if abs_divides(x, y) != abs_divides(images[x], images[y]):
                return False
    return True
