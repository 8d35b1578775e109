"""Diagram algebra, the two quotient maps, and the change of basis matrix."""

import pytest

from coxbraid.coxeter import (
    IntegrityError,
    bruhat_leq,
    coxeter_group,
    standard_coxeter_elements,
)
from coxbraid.dual import divisors_of, dual_monoid
from coxbraid.garside import BraidWord, positive_lift
from coxbraid.hecke import HeckeElement, braid_image_a, braid_image_a_prime, j_h, kl_table
from coxbraid.laurent import LaurentPolynomial as L
from coxbraid.tl import (
    TLDiagram,
    TLElement,
    b_w,
    cup_cap_diagram,
    expand_in_b,
    fg_projection_check,
    fully_commutative,
    identity_diagram,
    j_tl,
    omega,
    positivity_tl_report,
    theta,
    theta_prime,
    triangularity_check,
    zinno_matrix,
)

import oracles


DELTA = L.of({1: 1, -1: 1})


def u(m: int, i: int) -> TLElement:
    return TLElement(2 * m, {cup_cap_diagram(m, i): L.one()})


def test_diagram_validation():
    with pytest.raises(ValueError):
        TLDiagram(4, (1, 0, 3, 3))  # not an involution
    with pytest.raises(ValueError):
        TLDiagram(4, (0, 2, 1, 3))  # fixed points
    with pytest.raises(IntegrityError):
        TLDiagram(4, (2, 3, 0, 1))  # chords 0-2 and 1-3 cross
    with pytest.raises(ValueError):
        TLDiagram(3, (1, 0, 2))  # odd number of points


def test_identity_and_cup_cap_shapes():
    m = 4
    ident = identity_diagram(m)
    assert set(ident.chords()) == {(i, 2 * m - 1 - i) for i in range(m)}
    d = cup_cap_diagram(m, 2)
    assert (1, 2) in d.chords()
    assert (2 * m - 3, 2 * m - 2) in d.chords()
    with pytest.raises(ValueError):
        cup_cap_diagram(m, 0)
    with pytest.raises(ValueError):
        cup_cap_diagram(m, m)


def test_tl_relations():
    m = 4
    one = TLElement.unit(m)
    for i in range(1, m):
        ui = u(m, i)
        assert ui * ui == ui.scale(DELTA)
        assert ui * one == ui and one * ui == ui
        for j in range(1, m):
            if abs(i - j) >= 2:
                assert u(m, i) * u(m, j) == u(m, j) * u(m, i)
            elif abs(i - j) == 1:
                assert ui * u(m, j) * ui == ui


def test_element_arithmetic():
    m = 3
    a = u(m, 1)
    b = u(m, 2)
    assert a + b == b + a
    assert (a - a).is_zero()
    assert a.scale(2) == a + a
    assert a.scale(L.v_power(3)).coeff(cup_cap_diagram(m, 1)) == L.v_power(3)
    with pytest.raises(ValueError):
        a + TLElement.unit(4)
    with pytest.raises(ValueError):
        a * TLElement.unit(4)


def test_fully_commutative_matches_oracle():
    for n in (1, 2, 3):
        group = coxeter_group("A", n)
        fast = set(fully_commutative(n))
        slow = {w for w in group.elements() if oracles.is_fully_commutative_oracle(w)}
        assert fast == slow
    assert [len(fully_commutative(n)) for n in (1, 2, 3, 4)] == [2, 5, 14, 42]


def test_b_basis_is_a_bijection_onto_diagrams():
    for n in (2, 3):
        fc = fully_commutative(n)
        diagrams = set()
        for w in fc:
            x = b_w(w)
            support = list(x.coeffs)
            assert len(support) == 1
            assert x.coeff(support[0]) == L.one()
            diagrams.add(support[0])
        assert len(diagrams) == len(fc)


def test_expand_in_b_inverts_the_basis():
    group = coxeter_group("A", 3)
    for w in fully_commutative(3):
        assert expand_in_b(b_w(w)) == {w: L.one()}
    s1, s2 = group.generator(1), group.generator(2)
    mixed = b_w(s1).scale(L.v_power(2)) + b_w(s2).scale(-3)
    exp = expand_in_b(mixed)
    assert exp == {s1: L.v_power(2), s2: L.constant(-3)}
    assert expand_in_b(TLElement(8, {})) == {}


def test_theta_on_generators():
    group = coxeter_group("A", 2)
    for i in (1, 2):
        s = group.generator(i)
        got = theta(HeckeElement.t_basis(s))
        want = b_w(s).scale(L.v_power(-1)) - TLElement.unit(3)
        assert got == want
        got_p = theta_prime(HeckeElement.t_basis(s))
        want_p = TLElement.unit(3).scale(L.v_power(-2)) - b_w(s).scale(L.v_power(-1))
        assert got_p == want_p


def test_theta_is_an_algebra_map():
    group = coxeter_group("A", 3)
    words = [(1,), (2, 1), (1, 2, 3), (3, 2), (2,)]
    for wa in words:
        for wb in words:
            a = HeckeElement.t_basis(group.from_word(wa))
            b = HeckeElement.t_basis(group.from_word(wb))
            assert theta(a * b) == theta(a) * theta(b)
            assert theta_prime(a * b) == theta_prime(a) * theta_prime(b)


def test_theta_kernels():
    group = coxeter_group("A", 2)
    parabolic = group.elements()
    plain = None
    signed = None
    for w in parabolic:
        term = HeckeElement.t_basis(w)
        plain = term if plain is None else plain + term
        tw = term.scale(L.v_power(2 * w.length(), (-1) ** w.length()))
        signed = tw if signed is None else signed + tw
    assert theta(plain).is_zero()
    assert theta_prime(signed).is_zero()
    assert not theta(signed).is_zero()


def test_theta_and_theta_prime_are_j_conjugate():
    group = coxeter_group("A", 2)
    for word in ((1,), (1, 2), (2, 1, 1), (1, -2, 1)):
        h = braid_image_a(BraidWord(group, word))
        assert theta(h) == j_tl(theta_prime(j_h(h)))


def test_omega_on_generators_and_words():
    group = coxeter_group("A", 2)
    one = TLElement.unit(3)
    for i in (1, 2):
        s = group.generator(i)
        assert omega(BraidWord(group, (i,))) == one.scale(L.v_power(-1)) - b_w(s)
        assert omega(BraidWord(group, (-i,))) == one.scale(L.v_power(1)) - b_w(s)
    for word in ((1, 2), (1, -2, 1), (-1, -1)):
        b = BraidWord(group, word)
        assert omega(b) == theta_prime(braid_image_a_prime(b))
    assert omega(BraidWord(group, ())) == one


def test_omega_is_multiplicative():
    group = coxeter_group("A", 2)
    words = ((1,), (-2,), (1, 2), (2, -1))
    for wa in words:
        for wb in words:
            a, b = BraidWord(group, wa), BraidWord(group, wb)
            assert omega(a * b) == omega(a) * omega(b)


def test_j_tl_is_a_bar_involution():
    group = coxeter_group("A", 2)
    x = b_w(group.generator(1)).scale(L.v_power(2)) + b_w(group.generator(2)).scale(3)
    assert j_tl(j_tl(x)) == x
    y = b_w(group.from_word((1, 2)))
    assert j_tl(x * y) == j_tl(x) * j_tl(y)
    assert j_tl(b_w(group.generator(1))) == b_w(group.generator(1))
    shifted = b_w(group.generator(1)).scale(L.v_power(4))
    assert j_tl(shifted) == b_w(group.generator(1)).scale(L.v_power(-4))


def test_zinno_matrix_rank_two():
    group = coxeter_group("A", 2)
    c = group.from_word((1, 2))
    zm = zinno_matrix(c, (1, 2))
    assert zm.is_square()
    assert len(zm.rows) == 5 and len(zm.cols) == 5
    assert zm.pairing == ((0, 0), (1, 1), (2, 2), (4, 3), (3, 4))
    assert [str(p) for p in zm.diagonal()] == ["1", "-1", "-1", "1", "v^-1"]
    assert zm.invertible_over_laurent()
    e = group.identity
    row = [zm.entry(e, w) for w in zm.cols]
    assert [str(p) for p in row] == ["1", "0", "0", "0", "0"]
    data = zm.to_json()
    assert data["coxeter_element"] == [1, 2]
    assert len(data["rows"]) == 5


def test_zinno_matrix_depends_on_the_coxeter_element():
    group = coxeter_group("A", 2)
    za = zinno_matrix(group.from_word((1, 2)), (1, 2))
    zb = zinno_matrix(group.from_word((2, 1)), (2, 1))
    ea = {(str(x), str(w)): str(za.entry(x, w)) for x in za.rows for w in za.cols}
    eb = {(str(x), str(w)): str(zb.entry(x, w)) for x in zb.rows for w in zb.cols}
    assert ea != eb


@pytest.mark.parametrize("n", [2, 3])
def test_triangularity_all_standard_elements(n):
    group = coxeter_group("A", n)
    for c in standard_coxeter_elements(group):
        report = triangularity_check(c)
        assert report["pass"] is True
        assert report["square"] and report["triangular"] and report["unit_diagonal"]


def test_triangularity_bruhat_refinement_for_the_linear_element():
    group = coxeter_group("A", 3)
    c = group.from_word((1, 2, 3))
    report = triangularity_check(c, (1, 2, 3))
    assert report["bruhat_refined"] is True
    zm = zinno_matrix(c, (1, 2, 3))
    owner = {cj: ri for ri, cj in zm.pairing}
    for x in zm.rows:
        for j, w in enumerate(zm.cols):
            if not zm.entry(x, w).is_zero():
                assert bruhat_leq(zm.rows[owner[j]], x)


def test_divisors_and_basis_have_matching_sizes():
    for n in (2, 3, 4):
        group = coxeter_group("A", n)
        for c in standard_coxeter_elements(group):
            assert len(divisors_of(c)) == len(fully_commutative(n))


@pytest.mark.parametrize("n", [2, 3])
def test_sign_alternating_positivity(n):
    group = coxeter_group("A", n)
    for c in standard_coxeter_elements(group):
        report = positivity_tl_report(c)
        assert report["positive"] is True
        dm = dual_monoid(c)
        for x in dm.divisors():
            exp = expand_in_b(omega(dm.embed(x)))
            for w, p in exp.items():
                assert (p * ((-1) ** w.length())).is_nonneg()


def test_fg_projection():
    report = fg_projection_check(2)
    assert report["pass"] is True
    group = coxeter_group("A", 2)
    table = kl_table(group)
    w0 = group.longest_element
    assert theta(table.c_prime(w0)).is_zero()
    for w in fully_commutative(2):
        assert theta(table.c_prime(w)) == b_w(w)
    report3 = fg_projection_check(3)
    assert report3["pass"] is True
    assert report3["checked"] == 24


def test_theta_rejects_other_families():
    group = coxeter_group("B", 2)
    with pytest.raises(ValueError):
        theta(HeckeElement.t_basis(group.generator(1)))
