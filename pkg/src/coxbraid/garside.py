"""Classical Garside structure for Artin-Tits groups of spherical type.

A braid is a word in the Artin generators, stored as a tuple of nonzero
1-based letters where -i means the inverse of the i-th generator.  The
left greedy normal form writes any braid as Delta^k f_1 ... f_l with
simple factors f_i (copies of Coxeter group elements), f_1 != w0 and all
factors nonidentity, adjacent pairs locally maximal.  Words are folded
into this form left to right: a positive letter appends a simple, a
negative letter rewrites through sigma^-1 = Delta^-1 b(w0 s) and twists
the accumulated factors by the diagram automorphism tau(x) = w0 x w0.

All group level lookups go through a per group table of integer indexed
multiplication, descent masks and inverses, built once and reused.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cache
from typing import Iterable

from .coxeter import (
    CoxeterElement,
    CoxeterGroup,
    CoxeterType,
    IntegrityError,
    coxeter_group,
    coxeter_group_of,
    reduced_words,
    type_b_embedding_words,
)


@dataclass(frozen=True)
class BraidWord:
    """A word in the Artin generators of a spherical type braid group."""

    group: CoxeterGroup
    letters: tuple[int, ...]

    def __post_init__(self) -> None:
        for l in self.letters:
            if l == 0 or abs(l) > self.group.rank:
                raise ValueError(f"letter {l} out of range for {self.group.type.label()}")

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if self.group is not other.group:
            raise ValueError("braids over different groups")
        return BraidWord(self.group, self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.group, tuple(-l for l in reversed(self.letters)))

    def image(self) -> CoxeterElement:
        """The underlying Coxeter group element, forgetting signs."""
        return self.group.from_word(abs(l) for l in self.letters)

    def exponent_sum(self) -> int:
        return sum(1 if l > 0 else -1 for l in self.letters)

    def to_json(self) -> dict:
        return {"group": self.group.type.to_json(), "letters": list(self.letters)}

    @staticmethod
    def from_json(data: dict) -> "BraidWord":
        group = coxeter_group_of(CoxeterType.from_json(data["group"]))
        return BraidWord(group, tuple(data["letters"]))

    def __repr__(self) -> str:
        body = ",".join(str(l) for l in self.letters) or "e"
        return f"Braid({self.group.type.label()}; {body})"


class GarsideTable:
    """Integer indexed multiplication tables for one finite Coxeter group.

    Element ids follow the deterministic order of group.elements().  The
    table is immutable after construction apart from the lazily filled
    shortlex word cache, whose entries are write once.
    """

    def __init__(self, group: CoxeterGroup) -> None:
        self.group = group
        self.n = group.rank
        els = group.elements()
        payloads = [w.payload for w in els]
        index = {p: i for i, p in enumerate(payloads)}
        mul = group._mul
        gens = group._gen_payloads
        self.payloads = payloads
        self.index = index
        self.lmul = [[index[mul(g, p)] for p in payloads] for g in gens]
        self.rmul = [[index[mul(p, g)] for p in payloads] for g in gens]
        self.length = [group._length(p) for p in payloads]
        self.inv = [index[group._inv(p)] for p in payloads]
        self.e = index[group.identity.payload]
        self.w0 = index[group.longest_element.payload]
        size = len(payloads)
        ldesc = [0] * size
        rdesc = [0] * size
        for x in range(size):
            lx = self.length[x]
            for s in range(self.n):
                if self.length[self.lmul[s][x]] < lx:
                    ldesc[x] |= 1 << s
                if self.length[self.rmul[s][x]] < lx:
                    rdesc[x] |= 1 << s
        self.ldesc = ldesc
        self.rdesc = rdesc
        w0p = group.longest_element.payload
        self.tau = [index[mul(mul(w0p, p), w0p)] for p in payloads]
        self.gen_ids = [index[g] for g in gens]
        self.w0s = [self.rmul[s][self.w0] for s in range(self.n)]
        self.tau_letters = tuple(
            self.gen_ids.index(self.tau[self.gen_ids[s]]) + 1 for s in range(self.n)
        )
        self._words: list[tuple[int, ...] | None] = [None] * size

    def element(self, x: int) -> CoxeterElement:
        return CoxeterElement(self.group, self.payloads[x])

    def id_of(self, w: CoxeterElement) -> int:
        return self.index[w.payload]

    def word(self, x: int) -> tuple[int, ...]:
        """Shortlex reduced word of the simple with id x."""
        cached = self._words[x]
        if cached is None:
            out = []
            c = x
            while c != self.e:
                mask = self.ldesc[c]
                s = (mask & -mask).bit_length() - 1
                out.append(s + 1)
                c = self.lmul[s][c]
            cached = tuple(out)
            self._words[x] = cached
        return cached

    def renorm(self, x: int, y: int) -> tuple[int, int]:
        """Slide left descents of y that are not right descents of x."""
        mask = self.ldesc[y] & ~self.rdesc[x]
        while mask:
            s = (mask & -mask).bit_length() - 1
            x = self.rmul[s][x]
            y = self.lmul[s][y]
            mask = self.ldesc[y] & ~self.rdesc[x]
        return x, y


@cache
def garside_table(group: CoxeterGroup) -> GarsideTable:
    return GarsideTable(group)


def _normalize(table: GarsideTable, factors: list[int]) -> tuple[int, list[int]]:
    """Bubble adjacent renormalisations to the unique locally greedy form.

    Returns (shift, factors) where shift counts stripped leading copies of
    w0; trailing identities are dropped.  Each renormalisation moves
    length strictly leftward, so the passes terminate.
    """
    if factors:
        changed = True
        while changed:
            changed = False
            for i in range(len(factors) - 1):
                x, y = factors[i], factors[i + 1]
                nx, ny = table.renorm(x, y)
                if nx != x:
                    factors[i], factors[i + 1] = nx, ny
                    changed = True
    shift = 0
    while factors and factors[0] == table.w0:
        factors.pop(0)
        shift += 1
    while factors and factors[-1] == table.e:
        factors.pop()
    return shift, factors


def _nf_ids(table: GarsideTable, letters: Iterable[int]) -> tuple[int, tuple[int, ...]]:
    k = 0
    F: list[int] = []
    for letter in letters:
        s = abs(letter) - 1
        if letter > 0:
            F.append(table.gen_ids[s])
        else:
            k -= 1
            F = [table.tau[x] for x in F]
            F.append(table.w0s[s])
    shift, F = _normalize(table, F)
    return k + shift, tuple(F)


def _nf_mul_ids(
    table: GarsideTable, a: tuple[int, tuple[int, ...]], b: tuple[int, tuple[int, ...]]
) -> tuple[int, tuple[int, ...]]:
    ka, Fa = a
    kb, Fb = b
    if kb % 2:
        Fa = tuple(table.tau[x] for x in Fa)
    shift, F = _normalize(table, list(Fa) + list(Fb))
    return ka + kb + shift, tuple(F)


def _letters_of_nf_ids(table: GarsideTable, nf: tuple[int, tuple[int, ...]]) -> tuple[int, ...]:
    k, F = nf
    w0word = table.word(table.w0)
    out: list[int] = []
    if k >= 0:
        out.extend(w0word * k)
    else:
        out.extend(tuple(-l for l in reversed(w0word)) * (-k))
    for f in F:
        out.extend(table.word(f))
    return tuple(out)


def _nf_inv_ids(
    table: GarsideTable, nf: tuple[int, tuple[int, ...]]
) -> tuple[int, tuple[int, ...]]:
    letters = _letters_of_nf_ids(table, nf)
    return _nf_ids(table, tuple(-l for l in reversed(letters)))


@dataclass(frozen=True)
class GarsideNormalForm:
    """Left greedy normal form Delta^inf f_1 ... f_l."""

    group: CoxeterGroup
    inf: int
    factors: tuple[CoxeterElement, ...]

    def supremum(self) -> int:
        return self.inf + len(self.factors)

    def is_identity(self) -> bool:
        return self.inf == 0 and not self.factors

    def to_json(self) -> dict:
        return {
            "inf": self.inf,
            "factors": [list(f.reduced_word()) for f in self.factors],
        }

    @staticmethod
    def from_json(group: CoxeterGroup, data: dict) -> "GarsideNormalForm":
        return GarsideNormalForm(
            group, data["inf"], tuple(group.from_word(w) for w in data["factors"])
        )

    def __repr__(self) -> str:
        facs = " ".join("." .join(map(str, f.reduced_word())) for f in self.factors)
        return f"NF(D^{self.inf} | {facs})"


def delta_normal_form(b: BraidWord) -> GarsideNormalForm:
    table = garside_table(b.group)
    k, F = _nf_ids(table, b.letters)
    return GarsideNormalForm(b.group, k, tuple(table.element(f) for f in F))


def braid_from_normal_form(nf: GarsideNormalForm) -> BraidWord:
    table = garside_table(nf.group)
    ids = (nf.inf, tuple(table.id_of(f) for f in nf.factors))
    return BraidWord(nf.group, _letters_of_nf_ids(table, ids))


def braid_equal(a: BraidWord, b: BraidWord) -> bool:
    """Word problem: compare left greedy normal forms."""
    if a.group is not b.group:
        raise ValueError("braids over different groups")
    table = garside_table(a.group)
    return _nf_ids(table, a.letters) == _nf_ids(table, b.letters)


# ---------------------------------------------------------------------------
# rational permutation braids and fraction forms


def _rational_ids(nf: tuple[int, tuple[int, ...]]) -> bool:
    k, F = nf
    return k >= -1 and k + len(F) <= 1


def is_rational_permutation(b: BraidWord) -> bool:
    """Whether b lies in the interval [Delta^-1, Delta] of prefix order."""
    table = garside_table(b.group)
    return _rational_ids(_nf_ids(table, b.letters))


def fraction_form(b: BraidWord) -> tuple[CoxeterElement, CoxeterElement]:
    """Left fraction: the coprime pair (x, y) with b = b(x)^-1 b(y).

    Coprime means the pair has no common left descent, equivalently the
    left weak order meet of x and y is the identity.  Raises ValueError
    for braids that are not rational permutation braids.
    """
    group = b.group
    table = garside_table(group)
    k, F = _nf_ids(table, b.letters)
    if not _rational_ids((k, F)):
        raise ValueError("not a rational permutation braid")
    e = group.identity
    w0 = group.longest_element
    if k == 1:
        return (e, w0)
    if k == 0:
        if not F:
            return (e, e)
        return (e, table.element(F[0]))
    u = table.element(F[0]) if F else None
    if u is None:
        return (w0, e)
    if len(F) == 1:
        return (u.inverse() * w0, e)
    return (u.inverse() * w0, table.element(F[1]))


def right_fraction_form(b: BraidWord) -> tuple[CoxeterElement, CoxeterElement]:
    """Right fraction: a pair (x, y) with b = b(x) b(y)^-1.

    This is the decomposition driving the sign rule of signed_lift; the
    denominator y is what the lift consults.
    """
    group = b.group
    table = garside_table(group)
    k, F = _nf_ids(table, b.letters)
    if not _rational_ids((k, F)):
        raise ValueError("not a rational permutation braid")
    e = group.identity
    w0 = group.longest_element
    if k == 1:
        return (w0, e)
    if k == 0:
        if not F:
            return (e, e)
        return (table.element(F[0]), e)
    if not F:
        return (e, w0)
    u = table.element(table.tau[F[0]])
    if len(F) == 1:
        return (u, w0)
    v = table.element(F[1])
    return (u, v.inverse() * w0)


def signed_lift(b: BraidWord, word: Iterable[int] | None = None) -> BraidWord:
    """Lift a reduced word of p(b) to a braid word equal to b.

    With b = b(x) b(y)^-1 the right fraction of a rational braid, the
    letter s_i of the chosen reduced word s_1 ... s_k of p(b) receives a
    positive sign exactly when multiplying the standing suffix product
    s_i ... s_k y makes the length go up by one.
    """
    group = b.group
    w = b.image()
    if word is None:
        word = w.reduced_word()
    word = tuple(word)
    if group.from_word(word) != w or len(word) != w.length():
        raise ValueError("not a reduced word of the braid's image")
    _, y = right_fraction_form(b)
    letters: list[int] = []
    cur = y
    for i in reversed(word):
        nxt = group.generator(i) * cur
        sign = 1 if nxt.length() == cur.length() + 1 else -1
        letters.append(i * sign)
        cur = nxt
    letters.reverse()
    return BraidWord(group, tuple(letters))


def square_free_witness(
    b: BraidWord,
) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """A reduced word of p(b) and signs realising b, or None.

    Rational braids get the constructive signed lift on the shortlex word,
    verified against b.  Other braids fall back to an exhaustive search
    over reduced words and sign vectors, which is only meant for small
    images.
    """
    w = b.image()
    k = w.length()
    table = garside_table(b.group)
    if _rational_ids(_nf_ids(table, b.letters)):
        word = w.reduced_word()
        lift = signed_lift(b, word)
        if not braid_equal(lift, b):
            raise IntegrityError("constructive lift of a rational braid failed")
        signs = tuple(1 if l > 0 else -1 for l in lift.letters)
        return word, signs
    for word in reduced_words(w):
        for signs in itertools.product((1, -1), repeat=k):
            cand = BraidWord(b.group, tuple(i * s for i, s in zip(word, signs)))
            if braid_equal(cand, b):
                return word, signs
    return None


def is_square_free(b: BraidWord) -> bool:
    return square_free_witness(b) is not None


# ---------------------------------------------------------------------------
# the Delta twist and the mirror symmetry of type A


def delta_twist(b: BraidWord) -> BraidWord:
    """Conjugation by the Garside element: Delta^-1 b Delta."""
    table = garside_table(b.group)
    tl = table.tau_letters
    return BraidWord(
        b.group, tuple((1 if l > 0 else -1) * tl[abs(l) - 1] for l in b.letters)
    )


def mirror_letters(b: BraidWord) -> BraidWord:
    """Image under the diagram flip i -> rank + 1 - i of a type A braid."""
    if b.group.type.family != "A":
        raise ValueError("mirror is defined for type A")
    r = b.group.rank
    return BraidWord(
        b.group, tuple((1 if l > 0 else -1) * (r + 1 - abs(l)) for l in b.letters)
    )


def is_tau_fixed(b: BraidWord) -> bool:
    """Whether a braid over A_{2n-1} equals its mirror image."""
    t = b.group.type
    if t.family != "A" or t.rank % 2 == 0:
        raise ValueError("tau fixedness concerns type A of odd rank")
    return braid_equal(b, mirror_letters(b))


def positive_lift(w: CoxeterElement) -> BraidWord:
    """The positive simple braid b(w), via the shortlex reduced word."""
    return BraidWord(w.group, w.reduced_word())


def embed_braid_b_to_a(b: BraidWord) -> BraidWord:
    """Fold a type B braid word into A_{2n-1}.

    The sign change letter maps to the middle generator, the letter k >= 2
    to its commuting symmetric pair; inverses map to inverses.
    """
    if b.group.type.family != "B":
        raise ValueError("expected a type B braid")
    n = b.group.rank
    words = type_b_embedding_words(n)
    target = coxeter_group("A", 2 * n - 1)
    letters: list[int] = []
    for l in b.letters:
        img = words[abs(l)]
        if l > 0:
            letters.extend(img)
        else:
            letters.extend(-i for i in reversed(img))
    return BraidWord(target, tuple(letters))
