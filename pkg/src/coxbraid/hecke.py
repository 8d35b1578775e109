"""The Iwahori Hecke algebra over Z[v, v^-1] and its canonical bases.

Elements are stored on the standard basis {T_w} with exact Laurent
coefficients, normalised by T_s^2 = (v^-2 - 1) T_s + v^-2.  The braid
group maps in through a (generators to T_s) and its twist a', and the
Kazhdan Lusztig machinery lives in KLTable: polynomials P_{y,w} in
q = v^-2 computed by the classical recursion with mu corrections, the
bases C'_w = v^{l(w)} sum P_{y,w}(v^-2) T_y and C_w = (-1)^{l(w)}
j_H(C'_w), and triangular expansion of arbitrary elements in {C_w}.

Construction of a KLTable is single writer.  Sweeps that expand many
elements in parallel should call prepare() with the support they will
touch first; afterwards the table is only read.
"""

from __future__ import annotations

import json
import os
from functools import cache
from typing import Iterable, Mapping, Union

from .coxeter import (
    CoxeterElement,
    CoxeterGroup,
    IntegrityError,
    ResourceError,
    bruhat_leq,
    bruhat_lower_interval,
)
from .garside import BraidWord
from .laurent import LaurentPolynomial

KL_GROUP_ORDER_CAP = 1200
KL_CACHE_ENV = "COXBRAID_KL_CACHE"
KL_CACHE_VERSION = 1

_ZERO = LaurentPolynomial.zero()
_ONE = LaurentPolynomial.one()
_Q = LaurentPolynomial.v_power(1)
_V2 = LaurentPolynomial.v_power(2)
_V2_MINUS_1 = LaurentPolynomial.of({2: 1, 0: -1})
_VM2 = LaurentPolynomial.v_power(-2)
_VM2_MINUS_1 = LaurentPolynomial.of({-2: 1, 0: -1})


class HeckeElement:
    """A finitely supported Z[v, v^-1] combination of standard basis terms."""

    __slots__ = ("group", "coeffs")

    def __init__(
        self,
        group: CoxeterGroup,
        coeffs: Mapping[CoxeterElement, LaurentPolynomial] | None = None,
    ) -> None:
        self.group = group
        self.coeffs: dict[CoxeterElement, LaurentPolynomial] = {
            w: c for w, c in (coeffs or {}).items() if c
        }

    @staticmethod
    def unit(group: CoxeterGroup) -> "HeckeElement":
        return HeckeElement(group, {group.identity: _ONE})

    @staticmethod
    def t_basis(w: CoxeterElement) -> "HeckeElement":
        return HeckeElement(w.group, {w: _ONE})

    def coeff(self, w: CoxeterElement) -> LaurentPolynomial:
        return self.coeffs.get(w, _ZERO)

    def support(self) -> frozenset[CoxeterElement]:
        return frozenset(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        if self.group is not other.group:
            raise ValueError("elements of different algebras")
        acc = dict(self.coeffs)
        for w, c in other.coeffs.items():
            acc[w] = acc.get(w, _ZERO) + c
        return HeckeElement(self.group, acc)

    def __sub__(self, other: "HeckeElement") -> "HeckeElement":
        return self + other.scale(-1)

    def __neg__(self) -> "HeckeElement":
        return self.scale(-1)

    def scale(self, factor: Union[LaurentPolynomial, int]) -> "HeckeElement":
        if isinstance(factor, int):
            factor = LaurentPolynomial.constant(factor)
        return HeckeElement(self.group, {w: c * factor for w, c in self.coeffs.items()})

    def __mul__(self, other: "HeckeElement") -> "HeckeElement":
        return hecke_mul(self, other)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, HeckeElement)
            and self.group is other.group
            and self.coeffs == other.coeffs
        )

    def __repr__(self) -> str:
        if not self.coeffs:
            return "HeckeElement(0)"
        bits = []
        for w in sorted(self.coeffs, key=lambda u: (u.length(), u.sort_key())):
            word = ",".join(map(str, w.reduced_word())) or "e"
            bits.append(f"({self.coeffs[w]})T[{word}]")
        return "HeckeElement(" + " + ".join(bits) + ")"


def _acc(
    out: dict[CoxeterElement, LaurentPolynomial], w: CoxeterElement, c: LaurentPolynomial
) -> None:
    got = out.get(w)
    out[w] = c if got is None else got + c


def _mul_gen(h: HeckeElement, i: int, inverse: bool = False) -> HeckeElement:
    """Right multiplication by T_s or its inverse, one generator at a time."""
    s = h.group.generator(i)
    out: dict[CoxeterElement, LaurentPolynomial] = {}
    for w, c in h.coeffs.items():
        ws = w * s
        if ws.length() > w.length():
            if inverse:
                _acc(out, ws, c * _V2)
                _acc(out, w, c * _V2_MINUS_1)
            else:
                _acc(out, ws, c)
        else:
            if inverse:
                _acc(out, ws, c)
            else:
                _acc(out, w, c * _VM2_MINUS_1)
                _acc(out, ws, c * _VM2)
    return HeckeElement(h.group, out)


def hecke_mul(a: HeckeElement, b: HeckeElement) -> HeckeElement:
    if a.group is not b.group:
        raise ValueError("elements of different algebras")
    total: dict[CoxeterElement, LaurentPolynomial] = {}
    for w, c in b.coeffs.items():
        cur = a
        for i in w.reduced_word():
            cur = _mul_gen(cur, i)
        for x, p in cur.coeffs.items():
            _acc(total, x, p * c)
    return HeckeElement(a.group, total)


def braid_image_a(b: BraidWord) -> HeckeElement:
    """The group morphism into units sending each generator to T_s."""
    cur = HeckeElement.unit(b.group)
    for l in b.letters:
        cur = _mul_gen(cur, abs(l), inverse=l < 0)
    return cur


def braid_image_a_prime(b: BraidWord) -> HeckeElement:
    """The twist of a by v to the exponent sum, sending generators to vT_s."""
    return braid_image_a(b).scale(LaurentPolynomial.v_power(b.exponent_sum()))


def j_h(h: HeckeElement) -> HeckeElement:
    """The semilinear involution with T_s mapped to -v^2 T_s."""
    return HeckeElement(
        h.group,
        {
            w: c.bar().shifted(2 * w.length()) * ((-1) ** w.length())
            for w, c in h.coeffs.items()
        },
    )


@cache
def _bar_t(w: CoxeterElement) -> HeckeElement:
    """bar(T_w): the product of the inverse generators along a reduced word."""
    cur = HeckeElement.unit(w.group)
    for i in w.reduced_word():
        cur = _mul_gen(cur, i, inverse=True)
    return cur


def bar_involution(h: HeckeElement) -> HeckeElement:
    out = HeckeElement(h.group)
    for w, c in h.coeffs.items():
        out = out + _bar_t(w).scale(c.bar())
    return out


def _word_key(w: CoxeterElement) -> str:
    word = w.reduced_word()
    return ",".join(map(str, word)) if word else "e"


class KLTable:
    """Kazhdan Lusztig polynomials and bases for one finite group.

    P_{y,w} lives in the variable q; the basis elements come back as
    HeckeElements over v with q = v^-2 substituted.  Everything is
    memoised; an optional on disk cache (directory named by the
    environment variable COXBRAID_KL_CACHE) persists the polynomials
    between runs, keyed by group descriptor and format version.
    """

    def __init__(self, group: CoxeterGroup, cap: int = KL_GROUP_ORDER_CAP) -> None:
        if group.type.order() > cap:
            raise ResourceError(
                f"group of order {group.type.order()} exceeds the table cap {cap}"
            )
        self.group = group
        self._p: dict[tuple, LaurentPolynomial] = {}
        self._cprime: dict[CoxeterElement, HeckeElement] = {}
        self._c: dict[CoxeterElement, HeckeElement] = {}
        self._cache_path: str | None = None
        root = os.environ.get(KL_CACHE_ENV)
        if root:
            tag = group.type.label().replace("(", "-").replace(")", "")
            self._cache_path = os.path.join(
                root, f"kl-{tag}-v{KL_CACHE_VERSION}.json"
            )
            self._load_cache()

    # -- persistence -------------------------------------------------------

    def _load_cache(self) -> None:
        if not self._cache_path or not os.path.exists(self._cache_path):
            return
        try:
            with open(self._cache_path, "r", encoding="utf-8") as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError):
            return
        if data.get("version") != KL_CACHE_VERSION or data.get("group") != self.group.type.label():
            return
        for key, terms in data.get("p", {}).items():
            ypart, wpart = key.split("|")
            y = self.group.from_word(int(t) for t in ypart.split(",") if t)
            w = self.group.from_word(int(t) for t in wpart.split(",") if t)
            self._p[(y.payload, w.payload)] = LaurentPolynomial.from_json(terms)

    def save_cache(self) -> None:
        """Write the memoised polynomials to the cache directory, if set."""
        if not self._cache_path:
            return
        index = {w.payload: w for w in self.group.elements()}
        entries = {}
        for (py, pw), poly in self._p.items():
            key = "|".join(
                (",".join(map(str, index[py].reduced_word())),
                 ",".join(map(str, index[pw].reduced_word())))
            )
            entries[key] = poly.to_json()
        payload = {
            "version": KL_CACHE_VERSION,
            "group": self.group.type.label(),
            "p": dict(sorted(entries.items())),
        }
        try:
            os.makedirs(os.path.dirname(self._cache_path) or ".", exist_ok=True)
            with open(self._cache_path, "w", encoding="utf-8") as fh:
                json.dump(payload, fh)
        except OSError:
            pass

    # -- the polynomials ---------------------------------------------------

    def p(self, y: CoxeterElement, w: CoxeterElement) -> LaurentPolynomial:
        """P_{y,w} as a polynomial in q."""
        key = (y.payload, w.payload)
        got = self._p.get(key)
        if got is not None:
            return got
        if y == w:
            val = _ONE
        elif not bruhat_leq(y, w):
            val = _ZERO
        else:
            s = min(w.left_descents())
            gen = self.group.generator(s)
            sw = gen * w
            sy = gen * y
            if sy.length() < y.length():
                val = self.p(sy, sw) + _Q * self.p(y, sw)
                for z in bruhat_lower_interval(sw):
                    if (gen * z).length() < z.length() and bruhat_leq(y, z):
                        m = self.mu(z, sw)
                        if m:
                            gap = w.length() - z.length()
                            if gap % 2:
                                raise IntegrityError("odd exponent in the mu correction")
                            val = val - self.p(y, z) * LaurentPolynomial.v_power(
                                gap // 2, m
                            )
            else:
                val = self.p(sy, w)
        if y != w and val and 2 * val.max_exp() > w.length() - y.length() - 1:
            raise IntegrityError("degree bound violated in the recursion")
        self._p[key] = val
        return val

    def mu(self, y: CoxeterElement, w: CoxeterElement) -> int:
        """The coefficient of the top allowed q power in P_{y,w}."""
        gap = w.length() - y.length() - 1
        if gap < 0 or gap % 2:
            return 0
        return self.p(y, w).coeff(gap // 2)

    # -- bases -------------------------------------------------------------

    def c_prime(self, w: CoxeterElement) -> HeckeElement:
        got = self._cprime.get(w)
        if got is None:
            shift = w.length()
            got = HeckeElement(
                self.group,
                {
                    y: self.p(y, w).substituted_power(-2).shifted(shift)
                    for y in bruhat_lower_interval(w)
                },
            )
            self._cprime[w] = got
        return got

    def c_basis(self, w: CoxeterElement) -> HeckeElement:
        got = self._c.get(w)
        if got is None:
            got = j_h(self.c_prime(w)).scale((-1) ** w.length())
            self._c[w] = got
        return got

    def prepare(self, elements: Iterable[CoxeterElement]) -> None:
        """Force both bases for the given elements before parallel reads."""
        for w in elements:
            self.c_basis(w)

    # -- expansion ---------------------------------------------------------

    def expand_in_C(self, h: HeckeElement) -> dict[CoxeterElement, LaurentPolynomial]:
        """Coordinates of h on the basis {C_w}, by triangular elimination."""
        if h.group is not self.group:
            raise ValueError("element of a different algebra")
        out: dict[CoxeterElement, LaurentPolynomial] = {}
        work = h
        while not work.is_zero():
            w = max(work.coeffs, key=lambda u: (u.length(), u.sort_key()))
            gamma = work.coeffs[w].shifted(-w.length())
            out[w] = gamma
            work = work - self.c_basis(w).scale(gamma)
            if w in work.coeffs:
                raise IntegrityError("triangular elimination failed to clear a term")
        return out

    def expansion_is_positive(self, h: HeckeElement) -> bool:
        return all(c.is_nonneg() for c in self.expand_in_C(h).values())


@cache
def kl_table(group: CoxeterGroup) -> KLTable:
    return KLTable(group)


def positivity_report(
    c: CoxeterElement, ordering: tuple[int, ...] | None = None
) -> dict:
    """Expand every simple dual braid of c in {C_w} and record positivity."""
    from .dual import dual_monoid

    dm = dual_monoid(c, ordering)
    table = kl_table(c.group)
    items = []
    all_ok = True
    worst = None
    for u in dm.divisors():
        h = braid_image_a(dm.embed(u))
        expansion = table.expand_in_C(h)
        ok = all(p.is_nonneg() for p in expansion.values())
        item = {
            "divisor": list(u.reduced_word()),
            "coefficients": {_word_key(w): str(p) for w, p in sorted(
                expansion.items(), key=lambda kv: (kv[0].length(), kv[0].sort_key())
            )},
            "positive": ok,
        }
        items.append(item)
        if not ok:
            all_ok = False
            if worst is None:
                worst = item
    report = {
        "group": c.group.type.to_json(),
        "coxeter_element": list(dm.ordering),
        "items": items,
        "positive": all_ok,
    }
    if worst is not None:
        report["worst"] = worst
    return report
