"""Finite Coxeter groups of spherical type with exact element arithmetic.

Families A_n (n >= 1), B_n (n >= 2), D_n (n >= 4), I2(m) (m >= 3), H3 and
F4.  Element payloads are exact combinatorial or integral data:

  A_n    one line permutations of {1, ..., n+1}
  B_n    signed permutations, stored as (w(1), ..., w(n)) with w(-i) = -w(i)
  D_n    signed permutations with an even number of negative entries
  I2(m)  pairs (k, f) meaning rho^k s^f where s, t are the generators and
         rho = s*t is the basic rotation
  H3     3x3 matrices over Z[phi] with phi^2 = phi + 1, entries stored as
         integer pairs (a, b) meaning a + b*phi
  F4     4x4 integer matrices in the root basis

Products compose right to left, (u * v)(i) = u(v(i)), so that words read
the way they are written: from_word([1, 2]) applies s2 first.

Generator numbering is 1-based.  For B_n the letter 1 is the sign change
at the first coordinate and the letter i+1 swaps coordinates i and i+1,
so m(1, 2) = 4.  For D_n the letter 1 maps (1, 2) to (-2, -1), the letter
2 swaps coordinates 1 and 2, and letters k >= 3 swap coordinates k-1, k.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from math import factorial
from typing import Callable, Iterable


class IntegrityError(RuntimeError):
    """Two computation paths that must agree produced different results.

    This always signals an implementation bug, never bad input."""


class ResourceError(RuntimeError):
    """A computation was refused because it would exceed the configured
    budget."""


_FAMILIES = ("A", "B", "D", "I2", "H3", "F4")
_MIN_RANK = {"A": 1, "B": 2, "D": 4}
_FIXED_RANK = {"I2": 2, "H3": 3, "F4": 4}


@dataclass(frozen=True)
class CoxeterType:
    """Descriptor of a finite Coxeter group.

    JSON form is {"family": ..., "rank": ...} with an extra "m" entry for
    the dihedral family only.

    >>> CoxeterType("B", 3).order()
    48
    >>> CoxeterType("I2", 2, 7).reflection_count()
    7
    """

    family: str
    rank: int
    m: int | None = None

    def __post_init__(self) -> None:
        if self.family not in _FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.family in _FIXED_RANK:
            want = _FIXED_RANK[self.family]
            if self.rank != want:
                raise ValueError(f"family {self.family} has rank {want}, got {self.rank}")
        elif self.rank < _MIN_RANK[self.family]:
            raise ValueError(
                f"family {self.family} needs rank >= {_MIN_RANK[self.family]}, got {self.rank}"
            )
        if self.family == "I2":
            if self.m is None or self.m < 3:
                raise ValueError("family I2 needs a parameter m >= 3")
        elif self.m is not None:
            raise ValueError(f"family {self.family} takes no parameter m")

    def order(self) -> int:
        n = self.rank
        if self.family == "A":
            return factorial(n + 1)
        if self.family == "B":
            return 2**n * factorial(n)
        if self.family == "D":
            return 2 ** (n - 1) * factorial(n)
        if self.family == "I2":
            assert self.m is not None
            return 2 * self.m
        return {"H3": 120, "F4": 1152}[self.family]

    def reflection_count(self) -> int:
        n = self.rank
        if self.family == "A":
            return n * (n + 1) // 2
        if self.family == "B":
            return n * n
        if self.family == "D":
            return n * (n - 1)
        if self.family == "I2":
            assert self.m is not None
            return self.m
        return {"H3": 15, "F4": 24}[self.family]

    def coxeter_number(self) -> int:
        return 2 * self.reflection_count() // self.rank

    def label(self) -> str:
        if self.family == "I2":
            return f"I2({self.m})"
        if self.family in _FIXED_RANK:
            return self.family
        return f"{self.family}{self.rank}"

    def to_json(self) -> dict:
        data: dict = {"family": self.family, "rank": self.rank}
        if self.m is not None:
            data["m"] = self.m
        return data

    @staticmethod
    def from_json(data: dict) -> "CoxeterType":
        return CoxeterType(data["family"], data["rank"], data.get("m"))


# ---------------------------------------------------------------------------
# permutation and signed permutation payloads


def _perm_mul(u: tuple, v: tuple) -> tuple:
    return tuple(u[x - 1] for x in v)


def _perm_inv(u: tuple) -> tuple:
    out = [0] * len(u)
    for i, x in enumerate(u):
        out[x - 1] = i + 1
    return tuple(out)


def _perm_length(u: tuple) -> int:
    n = len(u)
    return sum(1 for i in range(n) for j in range(i + 1, n) if u[i] > u[j])


def _perm_cycle_count(u: tuple) -> int:
    seen = [False] * (len(u) + 1)
    cycles = 0
    for a in range(1, len(u) + 1):
        if seen[a]:
            continue
        cycles += 1
        x = a
        while not seen[x]:
            seen[x] = True
            x = u[x - 1]
    return cycles


def _sp_apply(u: tuple, x: int) -> int:
    return u[x - 1] if x > 0 else -u[-x - 1]


def _sp_mul(u: tuple, v: tuple) -> tuple:
    return tuple(_sp_apply(u, x) for x in v)


def _sp_inv(u: tuple) -> tuple:
    out = [0] * len(u)
    for i, x in enumerate(u):
        if x > 0:
            out[x - 1] = i + 1
        else:
            out[-x - 1] = -(i + 1)
    return tuple(out)


def _sp_stats(u: tuple) -> tuple[int, int, int]:
    """Inversions, negative entries and negative sum pairs of u."""
    n = len(u)
    inv = sum(1 for i in range(n) for j in range(i + 1, n) if u[i] > u[j])
    neg = sum(1 for x in u if x < 0)
    nsp = sum(1 for i in range(n) for j in range(i + 1, n) if u[i] + u[j] < 0)
    return inv, neg, nsp


def _sp_length_b(u: tuple) -> int:
    inv, neg, nsp = _sp_stats(u)
    return inv + neg + nsp


def _sp_length_d(u: tuple) -> int:
    inv, _, nsp = _sp_stats(u)
    return inv + nsp


def _sp_positive_cycles(u: tuple) -> int:
    """Count orbit pairs {O, -O} of u on {-n..-1, 1..n} with O != -O.

    The reflection length of a signed permutation in B_n or D_n is n minus
    this count (balanced orbits, those with O = -O, contribute fully)."""
    n = len(u)
    seen = [False] * (n + 1)
    pos = 0
    for a in range(1, n + 1):
        if seen[a]:
            continue
        seen[a] = True
        x = _sp_apply(u, a)
        while x != a and x != -a:
            seen[abs(x)] = True
            x = _sp_apply(u, x)
        if x == a:
            pos += 1
    return pos


# ---------------------------------------------------------------------------
# dihedral payloads


def _i2_mul(m: int, p: tuple, q: tuple) -> tuple:
    a, f = p
    b, g = q
    return ((a + b if f == 0 else a - b) % m, f ^ g)


def _i2_inv(m: int, p: tuple) -> tuple:
    k, f = p
    return (k if f else (-k) % m, f)


def _i2_length(m: int, p: tuple) -> int:
    k, f = p
    if f == 0:
        return 2 * min(k, m - k)
    return min(2 * k + 1, 2 * (m - k) - 1)


def _i2_rlen(p: tuple) -> int:
    if p == (0, 0):
        return 0
    return 1 if p[1] == 1 else 2


# ---------------------------------------------------------------------------
# matrix payloads, exact scalars


_H3_COXETER_MATRIX = ((1, 5, 2), (5, 1, 3), (2, 3, 1))
_PHI_COS = {2: (0, 0), 3: (1, 0), 5: (0, 1)}  # 2cos(pi/m) inside Z[phi]
_F4_CARTAN = ((2, -1, 0, 0), (-1, 2, -2, 0), (0, -1, 2, -1), (0, 0, -1, 2))


def _zphi_mul(a: tuple, b: tuple) -> tuple:
    # (a0 + a1 phi)(b0 + b1 phi) with phi^2 = phi + 1
    return (a[0] * b[0] + a[1] * b[1], a[0] * b[1] + a[1] * b[0] + a[1] * b[1])


def _pmat_mul(x: tuple, y: tuple) -> tuple:
    n = len(x)
    out = []
    for r in range(n):
        row = []
        for c in range(n):
            s0 = s1 = 0
            for k in range(n):
                a = x[r][k]
                b = y[k][c]
                s0 += a[0] * b[0] + a[1] * b[1]
                s1 += a[0] * b[1] + a[1] * b[0] + a[1] * b[1]
            row.append((s0, s1))
        out.append(tuple(row))
    return tuple(out)


def _imat_mul(x: tuple, y: tuple) -> tuple:
    n = len(x)
    return tuple(
        tuple(sum(x[r][k] * y[k][c] for k in range(n)) for c in range(n)) for r in range(n)
    )


def _h3_generators() -> tuple:
    gens = []
    for i in range(3):
        rows = []
        for r in range(3):
            row = []
            for c in range(3):
                if r == c:
                    row.append((-1, 0) if r == i else (1, 0))
                elif r == i:
                    row.append(_PHI_COS[_H3_COXETER_MATRIX[i][c]])
                else:
                    row.append((0, 0))
            rows.append(tuple(row))
        gens.append(tuple(rows))
    return tuple(gens)


def _h3_identity() -> tuple:
    return tuple(
        tuple((1, 0) if r == c else (0, 0) for c in range(3)) for r in range(3)
    )


def _f4_generators() -> tuple:
    gens = []
    for j in range(4):
        rows = []
        for r in range(4):
            row = []
            for c in range(4):
                e = 1 if r == c else 0
                if r == j:
                    e -= _F4_CARTAN[c][j]
                row.append(e)
            rows.append(tuple(row))
        gens.append(tuple(rows))
    return tuple(gens)


def _f4_identity() -> tuple:
    return tuple(tuple(1 if r == c else 0 for c in range(4)) for r in range(4))


def _rank_of_rows(rows: list[list], ops: dict) -> int:
    """Row rank by Gaussian elimination over an exact field."""
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    rank = 0
    for col in range(ncols):
        pivot = None
        for r in range(rank, nrows):
            if not ops["iszero"](rows[r][col]):
                pivot = r
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv_p = ops["inv"](rows[rank][col])
        for r in range(rank + 1, nrows):
            if ops["iszero"](rows[r][col]):
                continue
            f = ops["mul"](rows[r][col], inv_p)
            rows[r] = [
                ops["add"](rows[r][c], ops["neg"](ops["mul"](f, rows[rank][c])))
                for c in range(ncols)
            ]
        rank += 1
    return rank


_Q_OPS = {
    "add": lambda a, b: a + b,
    "mul": lambda a, b: a * b,
    "neg": lambda a: -a,
    "inv": lambda a: 1 / a,
    "iszero": lambda a: a == 0,
}


def _qphi_inv(a: tuple) -> tuple:
    norm = a[0] * a[0] + a[0] * a[1] - a[1] * a[1]
    return ((a[0] + a[1]) / norm, -a[1] / norm)


_QPHI_OPS = {
    "add": lambda a, b: (a[0] + b[0], a[1] + b[1]),
    "mul": lambda a, b: (a[0] * b[0] + a[1] * b[1], a[0] * b[1] + a[1] * b[0] + a[1] * b[1]),
    "neg": lambda a: (-a[0], -a[1]),
    "inv": _qphi_inv,
    "iszero": lambda a: a[0] == 0 and a[1] == 0,
}


def _moved_rank_h3(payload: tuple) -> int:
    # reflection length is the codimension of the fixed space, which is
    # the rank of M - Id
    rows = [
        [
            (
                Fraction(payload[r][c][0]) - (1 if r == c else 0),
                Fraction(payload[r][c][1]),
            )
            for c in range(3)
        ]
        for r in range(3)
    ]
    return _rank_of_rows(rows, _QPHI_OPS)


def _moved_rank_f4(payload: tuple) -> int:
    rows = [
        [Fraction(payload[r][c] - (1 if r == c else 0)) for c in range(4)]
        for r in range(4)
    ]
    return _rank_of_rows(rows, _Q_OPS)


def _flat(payload) -> tuple:
    """Flatten a payload to a tuple of ints, for deterministic ordering."""
    if payload and isinstance(payload[0], tuple):
        out = []
        for row in payload:
            for entry in row:
                if isinstance(entry, tuple):
                    out.extend(entry)
                else:
                    out.append(entry)
        return tuple(out)
    return tuple(payload)


# ---------------------------------------------------------------------------
# elements and groups


class CoxeterElement:
    """An element of a finite Coxeter group.

    Instances are immutable by convention and hashable.  Equality compares
    the group descriptor and the payload, so elements obtained from the
    same factory compare as expected.
    """

    __slots__ = ("group", "payload", "_hash")

    def __init__(self, group: "CoxeterGroup", payload) -> None:
        self.group = group
        self.payload = payload
        self._hash: int | None = None

    def __eq__(self, other) -> bool:
        if not isinstance(other, CoxeterElement):
            return NotImplemented
        return self.group.type == other.group.type and self.payload == other.payload

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.group.type, self.payload))
        return self._hash

    def __mul__(self, other: "CoxeterElement") -> "CoxeterElement":
        if self.group is not other.group:
            raise ValueError("elements of different groups")
        return CoxeterElement(self.group, self.group._mul(self.payload, other.payload))

    def inverse(self) -> "CoxeterElement":
        return CoxeterElement(self.group, self.group._inv(self.payload))

    def is_identity(self) -> bool:
        return self.payload == self.group.identity.payload

    def length(self) -> int:
        """Coxeter length, the number of letters in any reduced word."""
        return self.group._length(self.payload)

    def reflection_length(self) -> int:
        """Minimal number of reflections whose product is this element."""
        return self.group._rlen(self.payload)

    def left_descents(self) -> frozenset[int]:
        g = self.group
        me = self.length()
        return frozenset(
            i
            for i in range(1, g.rank + 1)
            if g._length(g._mul(g._gen_payloads[i - 1], self.payload)) < me
        )

    def right_descents(self) -> frozenset[int]:
        g = self.group
        me = self.length()
        return frozenset(
            i
            for i in range(1, g.rank + 1)
            if g._length(g._mul(self.payload, g._gen_payloads[i - 1])) < me
        )

    def reduced_word(self) -> tuple[int, ...]:
        """The shortlex minimal reduced word, as a tuple of 1-based letters."""
        g = self.group
        word = []
        p = self.payload
        while p != g.identity.payload:
            lp = g._length(p)
            for i in range(1, g.rank + 1):
                q = g._mul(g._gen_payloads[i - 1], p)
                if g._length(q) < lp:
                    word.append(i)
                    p = q
                    break
        return tuple(word)

    def act(self, x: int) -> int:
        """Apply to a point, for the permutation backed families only."""
        fam = self.group.type.family
        if fam == "A":
            return self.payload[x - 1]
        if fam in ("B", "D"):
            return _sp_apply(self.payload, x)
        raise ValueError(f"family {fam} has no point action")

    def order(self) -> int:
        k = 1
        x = self
        while not x.is_identity():
            x = x * self
            k += 1
        return k

    def sort_key(self) -> tuple:
        return (self.length(), _flat(self.payload))

    def __repr__(self) -> str:
        word = ".".join(str(i) for i in self.reduced_word()) or "e"
        return f"<{self.group.type.label()} {word}>"


class CoxeterGroup:
    """A finite Coxeter group with an exact payload backend.

    Do not construct directly, use :func:`coxeter_group` so that groups are
    singletons per descriptor.  All tables built here are immutable after
    construction; the lazily built caches are only ever extended with
    values that any thread would compute identically, so concurrent reads
    are safe.
    """

    def __init__(self, ctype: CoxeterType) -> None:
        self.type = ctype
        self.rank = ctype.rank
        fam = ctype.family
        n = ctype.rank

        if fam == "A":
            ident = tuple(range(1, n + 2))
            gens = []
            for i in range(1, n + 1):
                p = list(ident)
                p[i - 1], p[i] = p[i], p[i - 1]
                gens.append(tuple(p))
            self._mul = _perm_mul
            self._inv = _perm_inv
            self._length = _perm_length
            self._rlen = lambda p: (n + 1) - _perm_cycle_count(p)
            self._valid = lambda p: isinstance(p, tuple) and sorted(p) == list(ident)
        elif fam in ("B", "D"):
            ident = tuple(range(1, n + 1))
            gens = []
            if fam == "B":
                first = list(ident)
                first[0] = -1
                gens.append(tuple(first))
                for i in range(1, n):
                    p = list(ident)
                    p[i - 1], p[i] = p[i], p[i - 1]
                    gens.append(tuple(p))
                self._length = _sp_length_b
                self._valid = lambda p: sorted(abs(x) for x in p) == list(ident)
            else:
                first = list(ident)
                first[0], first[1] = -2, -1
                gens.append(tuple(first))
                for i in range(1, n):
                    p = list(ident)
                    p[i - 1], p[i] = p[i], p[i - 1]
                    gens.append(tuple(p))
                self._length = _sp_length_d
                self._valid = lambda p: (
                    sorted(abs(x) for x in p) == list(ident)
                    and sum(1 for x in p if x < 0) % 2 == 0
                )
            self._mul = _sp_mul
            self._inv = _sp_inv
            self._rlen = lambda p: n - _sp_positive_cycles(p)
        elif fam == "I2":
            m = ctype.m
            assert m is not None
            ident = (0, 0)
            gens = [(0, 1), (m - 1, 1)]
            self._mul = lambda p, q: _i2_mul(m, p, q)
            self._inv = lambda p: _i2_inv(m, p)
            self._length = lambda p: _i2_length(m, p)
            self._rlen = _i2_rlen
            self._valid = lambda p: (
                len(p) == 2 and 0 <= p[0] < m and p[1] in (0, 1)
            )
        else:
            if fam == "H3":
                ident = _h3_identity()
                gens = list(_h3_generators())
                self._mul = _pmat_mul
                self._rlen = _moved_rank_h3
            else:
                ident = _f4_identity()
                gens = list(_f4_generators())
                self._mul = _imat_mul
                self._rlen = _moved_rank_f4
            lengths: dict = {ident: 0}
            invs: dict = {ident: ident}
            frontier = [(ident, ident)]
            while frontier:
                nxt = []
                for p, pi in frontier:
                    for g in gens:
                        q = self._mul(p, g)
                        if q not in lengths:
                            lengths[q] = lengths[p] + 1
                            qi = self._mul(g, pi)
                            invs[q] = qi
                            nxt.append((q, qi))
                frontier = nxt
            if len(lengths) != ctype.order():
                raise IntegrityError(
                    f"{ctype.label()} closure has {len(lengths)} elements, "
                    f"expected {ctype.order()}"
                )
            self._table_length = lengths
            self._table_inv = invs
            self._length = lengths.__getitem__
            self._inv = invs.__getitem__
            self._valid = lengths.__contains__

        self._gen_payloads = tuple(gens)
        self.identity = CoxeterElement(self, ident)
        self.generators = tuple(CoxeterElement(self, g) for g in gens)

        self._elements_cache: tuple | None = None
        self._reflections_cache: tuple | None = None
        self._w0_cache: CoxeterElement | None = None
        self._coxeter_matrix_cache: tuple | None = None
        self._orderings_cache: dict | None = None
        self._bruhat_cache: dict = {}
        self._abs_search_cache: dict | None = None
        self._len_search_cache: dict | None = None

    # -- element factories ---------------------------------------------

    def element(self, payload) -> CoxeterElement:
        if not self._valid(payload):
            raise ValueError(f"invalid payload for {self.type.label()}: {payload!r}")
        return CoxeterElement(self, payload)

    def generator(self, i: int) -> CoxeterElement:
        if not 1 <= i <= self.rank:
            raise ValueError(f"generator index {i} out of range for {self.type.label()}")
        return self.generators[i - 1]

    def from_word(self, word: Iterable[int]) -> CoxeterElement:
        p = self.identity.payload
        for i in word:
            if not 1 <= i <= self.rank:
                raise ValueError(f"letter {i} out of range for {self.type.label()}")
            p = self._mul(p, self._gen_payloads[i - 1])
        return CoxeterElement(self, p)

    # -- global structure ------------------------------------------------

    def elements(self) -> tuple[CoxeterElement, ...]:
        """All elements, ordered by length then by flattened payload."""
        if self._elements_cache is None:
            seen = {self.identity.payload}
            out = [self.identity.payload]
            frontier = [self.identity.payload]
            while frontier:
                nxt = set()
                for p in frontier:
                    for g in self._gen_payloads:
                        q = self._mul(p, g)
                        if q not in seen:
                            nxt.add(q)
                frontier = sorted(nxt, key=_flat)
                seen.update(frontier)
                out.extend(frontier)
            if len(out) != self.type.order():
                raise IntegrityError(
                    f"enumerated {len(out)} elements of {self.type.label()}, "
                    f"expected {self.type.order()}"
                )
            self._elements_cache = tuple(CoxeterElement(self, p) for p in out)
        return self._elements_cache

    @property
    def longest_element(self) -> CoxeterElement:
        if self._w0_cache is None:
            w = self.identity
            while True:
                lw = w.length()
                for g in self.generators:
                    x = w * g
                    if x.length() > lw:
                        w = x
                        break
                else:
                    break
            if w.length() != self.type.reflection_count():
                raise IntegrityError("longest element has wrong length")
            self._w0_cache = w
        return self._w0_cache

    @property
    def coxeter_matrix(self) -> tuple[tuple[int, ...], ...]:
        if self._coxeter_matrix_cache is None:
            n = self.rank
            rows = []
            for i in range(n):
                row = []
                for j in range(n):
                    if i == j:
                        row.append(1)
                    else:
                        row.append((self.generators[i] * self.generators[j]).order())
                rows.append(tuple(row))
            self._coxeter_matrix_cache = tuple(rows)
        return self._coxeter_matrix_cache

    @property
    def reflections(self) -> tuple[CoxeterElement, ...]:
        """All reflections, ordered by length then payload."""
        if self._reflections_cache is None:
            fam = self.type.family
            n = self.rank
            payloads: set = set()
            if fam == "A":
                ident = self.identity.payload
                for i in range(1, n + 2):
                    for j in range(i + 1, n + 2):
                        p = list(ident)
                        p[i - 1], p[j - 1] = j, i
                        payloads.add(tuple(p))
            elif fam in ("B", "D"):
                ident = self.identity.payload
                for i in range(1, n + 1):
                    for j in range(i + 1, n + 1):
                        p = list(ident)
                        p[i - 1], p[j - 1] = j, i
                        payloads.add(tuple(p))
                        q = list(ident)
                        q[i - 1], q[j - 1] = -j, -i
                        payloads.add(tuple(q))
                if fam == "B":
                    for i in range(1, n + 1):
                        p = list(ident)
                        p[i - 1] = -i
                        payloads.add(tuple(p))
            elif fam == "I2":
                assert self.type.m is not None
                payloads = {(k, 1) for k in range(self.type.m)}
            else:
                frontier = set(self._gen_payloads)
                payloads = set(frontier)
                while frontier:
                    nxt = set()
                    for t in frontier:
                        for g in self._gen_payloads:
                            c = self._mul(self._mul(g, t), g)
                            if c not in payloads:
                                payloads.add(c)
                                nxt.add(c)
                    frontier = nxt
            if len(payloads) != self.type.reflection_count():
                raise IntegrityError(
                    f"found {len(payloads)} reflections in {self.type.label()}, "
                    f"expected {self.type.reflection_count()}"
                )
            elems = [CoxeterElement(self, p) for p in payloads]
            elems.sort(key=lambda t: (t.length(), _flat(t.payload)))
            self._reflections_cache = tuple(elems)
        return self._reflections_cache

    def __repr__(self) -> str:
        return f"CoxeterGroup({self.type.label()})"


@cache
def _group_of(ctype: CoxeterType) -> CoxeterGroup:
    return CoxeterGroup(ctype)


def coxeter_group(family: str, rank: int | None = None, m: int | None = None) -> CoxeterGroup:
    """Singleton factory.  Rank may be omitted for the fixed rank families.

    >>> coxeter_group("A", 2) is coxeter_group("A", 2)
    True
    """
    if rank is None:
        rank = _FIXED_RANK.get(family)
        if rank is None:
            raise ValueError(f"family {family} needs an explicit rank")
    return _group_of(CoxeterType(family, rank, m))


def coxeter_group_of(ctype: CoxeterType) -> CoxeterGroup:
    return _group_of(ctype)


# ---------------------------------------------------------------------------
# relations and orders


def _same_group(x: CoxeterElement, y: CoxeterElement) -> CoxeterGroup:
    if x.group is not y.group:
        raise ValueError("elements of different groups")
    return x.group


def abs_divides(x: CoxeterElement, y: CoxeterElement) -> bool:
    """Left divisibility in absolute order.

    x divides y when reflection lengths add up along x * (x^-1 y) = y.
    Absolute order has no left/right asymmetry since the reflection set is
    closed under conjugation.
    """
    _same_group(x, y)
    return (
        x.reflection_length() + (x.inverse() * y).reflection_length()
        == y.reflection_length()
    )


def weak_meet_left(u: CoxeterElement, v: CoxeterElement) -> CoxeterElement:
    """Greatest common prefix of u and v in weak order.

    Repeatedly extracts a common left descent.  Returns the meet as a
    group element; the pair (u, v) is left coprime exactly when the meet
    is the identity.
    """
    g = _same_group(u, v)
    meet = g.identity
    while True:
        common = u.left_descents() & v.left_descents()
        if not common:
            return meet
        s = g.generator(min(common))
        meet = meet * s
        u = s * u
        v = s * v


def bruhat_lower_interval(y: CoxeterElement) -> frozenset[CoxeterElement]:
    """The set of all x with x <= y in Bruhat order.

    Subword dynamic program over one fixed reduced word of y: processing
    the word letter by letter, keep all products of length increasing
    subwords seen so far.
    """
    g = y.group
    cached = g._bruhat_cache.get(y.payload)
    if cached is not None:
        return cached
    reach = {g.identity}
    for i in y.reduced_word():
        s = g.generator(i)
        extra = set()
        for z in reach:
            zs = z * s
            if zs.length() > z.length():
                extra.add(zs)
        reach.update(extra)
    result = frozenset(reach)
    g._bruhat_cache[y.payload] = result
    return result


def bruhat_leq(x: CoxeterElement, y: CoxeterElement) -> bool:
    _same_group(x, y)
    return x in bruhat_lower_interval(y)


def coxeter_element_orderings(group: CoxeterGroup) -> dict[CoxeterElement, tuple[int, ...]]:
    """Map each standard Coxeter element to the first ordering realising it.

    Orderings are permutations of (1, ..., rank) tried in lexicographic
    order; the product of the corresponding generators is the element.
    """
    if group._orderings_cache is None:
        found: dict[CoxeterElement, tuple[int, ...]] = {}
        for perm in itertools.permutations(range(1, group.rank + 1)):
            c = group.from_word(perm)
            if c not in found:
                found[c] = perm
        group._orderings_cache = found
    return group._orderings_cache


def standard_coxeter_elements(group: CoxeterGroup) -> tuple[CoxeterElement, ...]:
    """All products of the full generator set, one generator each, in any order.

    Ordered by the first ordering realising each element, so sweeps are
    deterministic.
    """
    return tuple(coxeter_element_orderings(group))


def reflections_from_coxeter(
    c: CoxeterElement, ordering: tuple[int, ...]
) -> frozenset[CoxeterElement]:
    """Generate reflections from a standard Coxeter element.

    For c = s_1 ... s_n (the ordering), returns the set of all
    c^k (s_1 ... s_i ... s_1) c^-k over k >= 0 and 1 <= i <= n.  Powers
    beyond the Coxeter number repeat, so k ranges over one full period.
    """
    g = c.group
    if sorted(ordering) != list(range(1, g.rank + 1)):
        raise ValueError("ordering must be a permutation of the generator indices")
    if g.from_word(ordering) != c:
        raise ValueError("ordering does not multiply to the given element")
    palindromes = []
    prefix = g.identity
    for i in ordering:
        s = g.generator(i)
        palindromes.append(prefix * s * prefix.inverse())
        prefix = prefix * s
    out = set()
    power = g.identity
    for _ in range(g.type.coxeter_number()):
        inv = power.inverse()
        for t in palindromes:
            out.add(power * t * inv)
        power = power * c
    return frozenset(out)


# ---------------------------------------------------------------------------
# search fallbacks, used as oracles and for cross checks


def length_by_search(w: CoxeterElement) -> int:
    """Word length via breadth first search over the Cayley graph."""
    g = w.group
    if g._len_search_cache is None:
        dist = {g.identity.payload: 0}
        frontier = [g.identity.payload]
        while frontier:
            nxt = []
            for p in frontier:
                for gen in g._gen_payloads:
                    q = g._mul(p, gen)
                    if q not in dist:
                        dist[q] = dist[p] + 1
                        nxt.append(q)
            frontier = nxt
        g._len_search_cache = dist
    return g._len_search_cache[w.payload]


def reflection_length_by_search(w: CoxeterElement) -> int:
    """Reflection length via breadth first search over the reflection Cayley graph."""
    g = w.group
    if g._abs_search_cache is None:
        refl = [t.payload for t in g.reflections]
        dist = {g.identity.payload: 0}
        frontier = [g.identity.payload]
        while frontier:
            nxt = []
            for p in frontier:
                for t in refl:
                    q = g._mul(p, t)
                    if q not in dist:
                        dist[q] = dist[p] + 1
                        nxt.append(q)
            frontier = nxt
        g._abs_search_cache = dist
    return g._abs_search_cache[w.payload]


def fixed_space_corank(w: CoxeterElement) -> int:
    """Codimension of the fixed space in the reflection representation.

    Exact linear algebra over Q or Q(phi).  Available for every family
    except the dihedral one, whose natural matrices are not rational.
    """
    fam = w.group.type.family
    p = w.payload
    if fam == "A":
        n1 = len(p)
        rows = [
            [Fraction((1 if p[c] == r + 1 else 0) - (1 if r == c else 0)) for c in range(n1)]
            for r in range(n1)
        ]
        return _rank_of_rows(rows, _Q_OPS)
    if fam in ("B", "D"):
        n = len(p)
        rows = []
        for r in range(n):
            row = []
            for c in range(n):
                e = 0
                if abs(p[c]) == r + 1:
                    e = 1 if p[c] > 0 else -1
                if r == c:
                    e -= 1
                row.append(Fraction(e))
            rows.append(row)
        return _rank_of_rows(rows, _Q_OPS)
    if fam == "H3":
        return _moved_rank_h3(p)
    if fam == "F4":
        return _moved_rank_f4(p)
    raise ValueError(f"family {fam} has no rational matrix model")


def reduced_words(w: CoxeterElement) -> tuple[tuple[int, ...], ...]:
    """Every reduced word of w, in lexicographic order.

    Recursion over left descents; intended for short elements only, the
    count grows quickly with length.
    """
    if w.is_identity():
        return ((),)
    out = []
    for i in sorted(w.left_descents()):
        rest = w.group.generator(i) * w
        for tail in reduced_words(rest):
            out.append((i,) + tail)
    return tuple(out)


# ---------------------------------------------------------------------------
# the type B to type A folding


def type_b_embedding_words(n: int) -> dict[int, tuple[int, ...]]:
    """Generator words in A_{2n-1} for the letters of B_n.

    Letter 1 (the sign change) maps to the middle generator; letter k >= 2
    maps to the commuting pair placed symmetrically around the middle.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    words: dict[int, tuple[int, ...]] = {1: (n,)}
    for k in range(2, n + 1):
        words[k] = (n - k + 1, n + k - 1)
    return words


def type_b_embedding(n: int) -> dict[int, CoxeterElement]:
    """Images in W(A_{2n-1}) of the generators of W(B_n)."""
    target = coxeter_group("A", 2 * n - 1)
    return {k: target.from_word(word) for k, word in type_b_embedding_words(n).items()}


def type_b_element_embedding(w: CoxeterElement) -> CoxeterElement:
    """Image of a type B element inside W(A_{2n-1}), via any reduced word."""
    if w.group.type.family != "B":
        raise ValueError("expected a type B element")
    images = type_b_embedding(w.group.rank)
    target = coxeter_group("A", 2 * w.group.rank - 1)
    out = target.identity
    for i in w.reduced_word():
        out = out * images[i]
    return out
