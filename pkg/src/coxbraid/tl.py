"""The Temperley Lieb quotient of the type A Hecke algebra.

Basis elements are planar diagrams: noncrossing perfect matchings of
n+1 top and n+1 bottom points.  Multiplication stacks diagrams and each
closed loop contributes a factor v + v^-1.  The generator image b_s is
the cup and cap diagram, products b_w over reduced words of fully
commutative elements are single diagrams, and those diagrams exhaust
the matchings, which is how elements are expanded on the {b_w} basis.

Two quotient maps from the Hecke algebra are provided, theta and
theta_prime, together with the braid group map omega = theta_prime
after a'.  The images of the simple dual braids of a standard Coxeter
element assemble into the Zinno matrix, whose triangularity, unit
determinant and sign alternating positivity are checked here.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from typing import Mapping, Union

from .coxeter import (
    CoxeterElement,
    IntegrityError,
    bruhat_leq,
    coxeter_group,
    reduced_words,
)
from .dual import dual_monoid
from .garside import BraidWord
from .hecke import HeckeElement, kl_table
from .laurent import LaurentPolynomial

_ZERO = LaurentPolynomial.zero()
_ONE = LaurentPolynomial.one()
_DELTA = LaurentPolynomial.of({1: 1, -1: 1})


@dataclass(frozen=True)
class TLDiagram:
    """A noncrossing perfect matching on 2m boundary points.

    Points 0..m-1 run along the top from left to right and points
    m..2m-1 continue around the circle, so the bottom row read left to
    right is 2m-1 down to m.
    """

    points: int
    pairing: tuple[int, ...]

    def __post_init__(self) -> None:
        p = self.pairing
        if self.points % 2 or len(p) != self.points:
            raise ValueError("need an even number of points, all matched")
        for i, j in enumerate(p):
            if not 0 <= j < self.points or j == i or p[j] != i:
                raise ValueError("pairing is not a fixed point free involution")
        chords = [(i, j) for i, j in enumerate(p) if i < j]
        for a, b in chords:
            for c, d in chords:
                if a < c < b < d:
                    raise IntegrityError("crossing chords in a planar diagram")

    def chords(self) -> tuple[tuple[int, int], ...]:
        return tuple((i, j) for i, j in enumerate(self.pairing) if i < j)


def identity_diagram(m: int) -> TLDiagram:
    pairing = tuple(2 * m - 1 - i for i in range(2 * m))
    return TLDiagram(2 * m, pairing)


def cup_cap_diagram(m: int, i: int) -> TLDiagram:
    """The generator diagram at 1 <= i <= m-1: a top cup and bottom cap."""
    if not 1 <= i < m:
        raise ValueError("generator index out of range")
    pairing = list(2 * m - 1 - j for j in range(2 * m))
    a, b = i - 1, i
    pairing[a], pairing[b] = b, a
    c, d = 2 * m - 1 - a, 2 * m - 1 - b
    pairing[c], pairing[d] = d, c
    return TLDiagram(2 * m, tuple(pairing))


def _compose_diagrams(d1: TLDiagram, d2: TLDiagram) -> tuple[TLDiagram, int]:
    """Stack d1 over d2; returns the resulting diagram and the loop count."""
    if d1.points != d2.points:
        raise ValueError("diagrams of different sizes")
    m = d1.points // 2
    layers = (d1.pairing, d2.pairing)

    def glued(node: tuple[int, int]) -> tuple[int, int] | None:
        layer, idx = node
        if layer == 0 and idx >= m:
            return (1, 2 * m - 1 - idx)
        if layer == 1 and idx < m:
            return (0, 2 * m - 1 - idx)
        return None

    ext_index = {}
    for i in range(m):
        ext_index[(0, i)] = i
    for c in range(m, 2 * m):
        ext_index[(1, c)] = c

    seen: set[tuple[int, int]] = set()
    result = [-1] * (2 * m)
    for start in ext_index:
        if start in seen:
            continue
        seen.add(start)
        cur = (start[0], layers[start[0]][start[1]])
        while cur not in ext_index:
            seen.add(cur)
            mid = glued(cur)
            seen.add(mid)
            cur = (mid[0], layers[mid[0]][mid[1]])
        seen.add(cur)
        a, b = ext_index[start], ext_index[cur]
        result[a], result[b] = b, a
    loops = 0
    for layer in (0, 1):
        for idx in range(2 * m):
            node = (layer, idx)
            if node in seen or glued(node) is None:
                continue
            loops += 1
            while node not in seen:
                seen.add(node)
                partner = (node[0], layers[node[0]][node[1]])
                seen.add(partner)
                node = glued(partner)
    return TLDiagram(2 * m, tuple(result)), loops


class TLElement:
    """A Z[v, v^-1] combination of diagrams on a common point count."""

    __slots__ = ("points", "coeffs")

    def __init__(
        self, points: int, coeffs: Mapping[TLDiagram, LaurentPolynomial] | None = None
    ) -> None:
        self.points = points
        self.coeffs: dict[TLDiagram, LaurentPolynomial] = {
            d: c for d, c in (coeffs or {}).items() if c
        }

    @staticmethod
    def unit(m: int) -> "TLElement":
        return TLElement(2 * m, {identity_diagram(m): _ONE})

    def coeff(self, d: TLDiagram) -> LaurentPolynomial:
        return self.coeffs.get(d, _ZERO)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "TLElement") -> "TLElement":
        if self.points != other.points:
            raise ValueError("elements of different algebras")
        acc = dict(self.coeffs)
        for d, c in other.coeffs.items():
            acc[d] = acc.get(d, _ZERO) + c
        return TLElement(self.points, acc)

    def __sub__(self, other: "TLElement") -> "TLElement":
        return self + other.scale(-1)

    def scale(self, factor: Union[LaurentPolynomial, int]) -> "TLElement":
        if isinstance(factor, int):
            factor = LaurentPolynomial.constant(factor)
        return TLElement(self.points, {d: c * factor for d, c in self.coeffs.items()})

    def __mul__(self, other: "TLElement") -> "TLElement":
        return tl_mul(self, other)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, TLElement)
            and self.points == other.points
            and self.coeffs == other.coeffs
        )

    def __repr__(self) -> str:
        if not self.coeffs:
            return "TLElement(0)"
        bits = [f"({c})*{d.chords()}" for d, c in self.coeffs.items()]
        return "TLElement(" + " + ".join(bits) + ")"

    def bar_coeffs(self) -> "TLElement":
        return TLElement(self.points, {d: c.bar() for d, c in self.coeffs.items()})


def tl_mul(a: TLElement, b: TLElement) -> TLElement:
    if a.points != b.points:
        raise ValueError("elements of different algebras")
    acc: dict[TLDiagram, LaurentPolynomial] = {}
    for d1, c1 in a.coeffs.items():
        for d2, c2 in b.coeffs.items():
            d, loops = _compose_diagrams(d1, d2)
            c = c1 * c2
            for _ in range(loops):
                c = c * _DELTA
            got = acc.get(d)
            acc[d] = c if got is None else got + c
    return TLElement(a.points, acc)


def j_tl(x: TLElement) -> TLElement:
    """The semilinear involution fixing every diagram."""
    return x.bar_coeffs()


# ---------------------------------------------------------------------------
# fully commutative elements and the b_w basis


def _avoids_321(payload: tuple[int, ...]) -> bool:
    best_drop = 0
    max_before = 0
    for value in payload:
        if max_before > value:
            if best_drop > value:
                return False
            best_drop = max(best_drop, value)
        max_before = max(max_before, value)
    return True


def fully_commutative(n: int) -> tuple[CoxeterElement, ...]:
    """All 321 avoiding elements of the symmetric group on n+1 points."""
    W = coxeter_group("A", n)
    out = [w for w in W.elements() if _avoids_321(w.payload)]
    return tuple(out)


@cache
def _b_w_table(n: int) -> dict[CoxeterElement, TLDiagram]:
    """The diagram of b_w for every fully commutative w, with both checks.

    The product over a reduced word must come out as a single diagram
    with coefficient one, and a second reduced word, when the element
    has one, must reproduce it.
    """
    m = n + 1
    table: dict[CoxeterElement, TLDiagram] = {}
    for w in fully_commutative(n):
        words = reduced_words(w)
        diagrams = set()
        for word in words[:2]:
            el = TLElement.unit(m)
            for i in word:
                el = tl_mul(el, TLElement(2 * m, {cup_cap_diagram(m, i): _ONE}))
            if len(el.coeffs) != 1 or next(iter(el.coeffs.values())) != _ONE:
                raise IntegrityError("b_w is not a single bare diagram")
            diagrams.add(next(iter(el.coeffs)))
        if len(diagrams) != 1:
            raise IntegrityError("b_w depends on the chosen reduced word")
        table[w] = diagrams.pop()
    if len(set(table.values())) != len(table):
        raise IntegrityError("distinct elements share a diagram")
    return table


def b_w(w: CoxeterElement) -> TLElement:
    """The basis element of a fully commutative w."""
    if w.group.type.family != "A":
        raise ValueError("expected a type A element")
    table = _b_w_table(w.group.rank)
    if w not in table:
        raise ValueError("element is not fully commutative")
    return TLElement(2 * (w.group.rank + 1), {table[w]: _ONE})


@cache
def _diagram_to_fc(n: int) -> dict[TLDiagram, CoxeterElement]:
    return {d: w for w, d in _b_w_table(n).items()}


def expand_in_b(x: TLElement) -> dict[CoxeterElement, LaurentPolynomial]:
    """Coordinates of a TL element on the {b_w} basis."""
    n = x.points // 2 - 1
    lookup = _diagram_to_fc(n)
    out = {}
    for d, c in x.coeffs.items():
        w = lookup.get(d)
        if w is None:
            raise IntegrityError("diagram outside the b_w basis")
        out[w] = c
    return out


# ---------------------------------------------------------------------------
# the quotient maps


@cache
def _theta_t(w: CoxeterElement) -> TLElement:
    """theta(T_w), folded along a reduced word."""
    m = w.group.rank + 1
    el = TLElement.unit(m)
    for i in w.reduced_word():
        gen = TLElement(
            2 * m, {cup_cap_diagram(m, i): LaurentPolynomial.v_power(-1)}
        ) + TLElement.unit(m).scale(-1)
        el = tl_mul(el, gen)
    return el


@cache
def _theta_prime_t(w: CoxeterElement) -> TLElement:
    """theta_prime(T_w), folded along a reduced word."""
    m = w.group.rank + 1
    el = TLElement.unit(m)
    for i in w.reduced_word():
        gen = TLElement.unit(m).scale(LaurentPolynomial.v_power(-2)) + TLElement(
            2 * m, {cup_cap_diagram(m, i): LaurentPolynomial.of({-1: -1})}
        )
        el = tl_mul(el, gen)
    return el


def theta(h: HeckeElement) -> TLElement:
    """The quotient map with T_s mapped to v^-1 b_s - 1."""
    if h.group.type.family != "A":
        raise ValueError("expected a type A element")
    m = h.group.rank + 1
    out = TLElement(2 * m)
    for w, c in h.coeffs.items():
        out = out + _theta_t(w).scale(c)
    return out


def theta_prime(h: HeckeElement) -> TLElement:
    """The quotient map with T_s mapped to v^-2 - v^-1 b_s."""
    if h.group.type.family != "A":
        raise ValueError("expected a type A element")
    m = h.group.rank + 1
    out = TLElement(2 * m)
    for w, c in h.coeffs.items():
        out = out + _theta_prime_t(w).scale(c)
    return out


def omega(b: BraidWord) -> TLElement:
    """The braid group map sending a generator to v^-1 - b_s."""
    if b.group.type.family != "A":
        raise ValueError("expected a type A braid")
    m = b.group.rank + 1
    out = TLElement.unit(m)
    for l in b.letters:
        scalar = LaurentPolynomial.v_power(-1 if l > 0 else 1)
        gen = TLElement.unit(m).scale(scalar) + TLElement(
            2 * m, {cup_cap_diagram(m, abs(l)): LaurentPolynomial.constant(-1)}
        )
        out = tl_mul(out, gen)
    return out


# ---------------------------------------------------------------------------
# the Zinno basis


def _word_key(w: CoxeterElement) -> str:
    word = w.reduced_word()
    return ",".join(map(str, word)) if word else "e"


@dataclass(frozen=True)
class ZinnoMatrix:
    """Images of the simple dual braids of c on the {b_w} basis.

    Rows are divisors of c ordered by reflection length; columns are
    fully commutative elements ordered by length.  The triangular data
    records the greedy elimination: pairs in elimination order with the
    diagonal entries, when the elimination succeeds.
    """

    c: CoxeterElement
    rows: tuple[CoxeterElement, ...]
    cols: tuple[CoxeterElement, ...]
    entries: tuple[tuple[LaurentPolynomial, ...], ...]
    pairing: tuple[tuple[int, int], ...] | None

    def entry(self, x: CoxeterElement, w: CoxeterElement) -> LaurentPolynomial:
        return self.entries[self.rows.index(x)][self.cols.index(w)]

    def is_square(self) -> bool:
        return len(self.rows) == len(self.cols)

    def diagonal(self) -> tuple[LaurentPolynomial, ...] | None:
        if self.pairing is None:
            return None
        return tuple(self.entries[r][c] for r, c in self.pairing)

    def invertible_over_laurent(self) -> bool:
        diag = self.diagonal()
        return diag is not None and all(p.is_unit_monomial() for p in diag)

    def to_json(self) -> dict:
        return {
            "group": self.c.group.type.to_json(),
            "coxeter_element": list(self.c.reduced_word()),
            "rows": [
                {
                    "divisor": list(x.reduced_word()),
                    "coeffs": {
                        _word_key(w): str(p)
                        for w, p in zip(self.cols, self.entries[i])
                        if p
                    },
                }
                for i, x in enumerate(self.rows)
            ],
        }


def _greedy_pairing(
    entries: tuple[tuple[LaurentPolynomial, ...], ...]
) -> tuple[tuple[int, int], ...] | None:
    """Peel rows whose support has shrunk to one live column.

    Succeeds exactly when some row and column permutation makes the
    matrix triangular with nowhere vanishing diagonal.
    """
    n = len(entries)
    live_rows = set(range(n))
    dead_cols: set[int] = set()
    order = []
    while live_rows:
        found = None
        for r in sorted(live_rows):
            support = [j for j, p in enumerate(entries[r]) if p and j not in dead_cols]
            if len(support) == 1:
                found = (r, support[0])
                break
        if found is None:
            return None
        order.append(found)
        live_rows.discard(found[0])
        dead_cols.add(found[1])
    return tuple(order)


def zinno_matrix(c: CoxeterElement, ordering: tuple[int, ...] | None = None) -> ZinnoMatrix:
    if c.group.type.family != "A":
        raise ValueError("expected a type A element")
    n = c.group.rank
    dm = dual_monoid(c, ordering)
    rows = tuple(
        sorted(dm.divisors(), key=lambda x: (x.reflection_length(), x.sort_key()))
    )
    cols = tuple(
        sorted(fully_commutative(n), key=lambda w: (w.length(), w.sort_key()))
    )
    col_index = {w: j for j, w in enumerate(cols)}
    entries = []
    for x in rows:
        coeffs = expand_in_b(omega(dm.embed(x)))
        row = [_ZERO] * len(cols)
        for w, p in coeffs.items():
            row[col_index[w]] = p
        entries.append(tuple(row))
    entries = tuple(entries)
    return ZinnoMatrix(c, rows, cols, entries, _greedy_pairing(entries))


def triangularity_check(c: CoxeterElement, ordering: tuple[int, ...] | None = None) -> dict:
    """Triangularity and unit diagonal of the Zinno matrix.

    For the one line Coxeter element s_1 s_2 ... s_n the pairing is also
    checked to refine Bruhat order: a nonzero entry in the row of x and
    the column paired with x' forces x' <= x, so every linear extension
    of Bruhat order triangularises the matrix.
    """
    zm = zinno_matrix(c, ordering)
    report = {
        "group": c.group.type.to_json(),
        "coxeter_element": list(c.reduced_word()),
        "square": zm.is_square(),
        "triangular": zm.pairing is not None,
        "unit_diagonal": zm.invertible_over_laurent(),
        "bruhat_refined": None,
    }
    n = c.group.rank
    linear = c == c.group.from_word(range(1, n + 1))
    if linear and zm.pairing is not None:
        col_owner = {cj: ri for ri, cj in zm.pairing}
        ok = True
        for ri, x in enumerate(zm.rows):
            for cj, p in enumerate(zm.entries[ri]):
                if p and not bruhat_leq(zm.rows[col_owner[cj]], x):
                    ok = False
        report["bruhat_refined"] = ok
    report["pass"] = bool(
        report["square"] and report["triangular"] and report["unit_diagonal"]
        and report["bruhat_refined"] is not False
    )
    return report


def positivity_tl_report(c: CoxeterElement, ordering: tuple[int, ...] | None = None) -> dict:
    """Sign alternating positivity of the Zinno rows.

    The coefficient of b_w in the image of each simple dual braid must
    lie in (-1)^{l(w)} N[v, v^-1].
    """
    if c.group.type.family != "A":
        raise ValueError("expected a type A element")
    dm = dual_monoid(c, ordering)
    items = []
    all_ok = True
    for x in sorted(dm.divisors(), key=lambda u: (u.reflection_length(), u.sort_key())):
        coeffs = expand_in_b(omega(dm.embed(x)))
        ok = all(
            (p * ((-1) ** w.length())).is_nonneg() for w, p in coeffs.items()
        )
        items.append(
            {
                "divisor": list(x.reduced_word()),
                "coeffs": {
                    _word_key(w): str(p)
                    for w, p in sorted(
                        coeffs.items(), key=lambda kv: (kv[0].length(), kv[0].sort_key())
                    )
                },
                "sign_positive": ok,
            }
        )
        all_ok = all_ok and ok
    return {
        "group": c.group.type.to_json(),
        "coxeter_element": list(dm.ordering),
        "items": items,
        "positive": all_ok,
    }


def fg_projection_check(n: int) -> dict:
    """theta of C'_w is b_w for fully commutative w and zero otherwise."""
    W = coxeter_group("A", n)
    table = kl_table(W)
    fc = set(fully_commutative(n))
    failures = []
    for w in W.elements():
        image = theta(table.c_prime(w))
        want = b_w(w) if w in fc else TLElement(2 * (n + 1))
        if image != want:
            failures.append(list(w.reduced_word()))
    return {
        "group": W.type.to_json(),
        "checked": W.type.order(),
        "failures": failures,
        "pass": not failures,
    }
