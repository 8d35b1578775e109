"""Dual monoid: divisors, circle model, Hurwitz action, embeddings."""

import pytest

from coxbraid.coxeter import (
    IntegrityError,
    coxeter_element_orderings,
    coxeter_group,
    standard_coxeter_elements,
)
from coxbraid.dual import (
    NoncrossingPartition,
    circle_sequence,
    divisors_of,
    dual_atoms,
    dual_monoid,
    embed_simple,
    hurwitz_orbit,
    hurwitz_orbit_braids,
    linear_coxeter_bruhat_check,
    ncp_decode,
    ncp_encode,
    t_reduced_factorization,
    type_b_absolute_order_embedding_check,
    verify_dual_relations,
)
from coxbraid.garside import braid_equal, is_rational_permutation

import oracles


DIVISOR_COUNTS = [
    ("A", 2, None, 5),
    ("A", 3, None, 14),
    ("A", 4, None, 42),
    ("B", 2, None, 6),
    ("B", 3, None, 20),
    ("D", 4, None, 50),
    ("I2", 2, 7, 9),
    ("H3", 3, None, 32),
    ("F4", 4, None, 105),
]


@pytest.mark.parametrize("family,rank,m,count", DIVISOR_COUNTS)
def test_divisor_counts(family, rank, m, count):
    group = coxeter_group(family, rank, m=m)
    for c in standard_coxeter_elements(group):
        div = divisors_of(c)
        assert len(div) == count
        assert len(set(div)) == count
        assert group.identity in div and c in div
        for x in div:
            rest = x.inverse() * c
            assert x.reflection_length() + rest.reflection_length() == group.rank


def test_divisors_need_a_standard_coxeter_element():
    group = coxeter_group("A", 3)
    with pytest.raises(ValueError):
        divisors_of(group.generator(1))
    with pytest.raises(ValueError):
        divisors_of(group.identity)


@pytest.mark.parametrize("family,rank,m", [("A", 3, None), ("B", 3, None)])
def test_ncp_round_trip(family, rank, m):
    group = coxeter_group(family, rank, m=m)
    for c in standard_coxeter_elements(group):
        seen = set()
        for x in divisors_of(c):
            p = ncp_encode(x, c)
            assert p.is_noncrossing()
            assert ncp_decode(p, c) == x
            seen.add(p.blocks)
            back = NoncrossingPartition.from_json(p.to_json())
            assert back == p
        assert len(seen) == len(divisors_of(c))


def test_ncp_decode_rejects_bad_partitions():
    group = coxeter_group("A", 3)
    c = standard_coxeter_elements(group)[0]
    seq = circle_sequence(c)
    assert sorted(seq) == [1, 2, 3, 4]
    crossing = NoncrossingPartition(seq, ((seq[0], seq[2]), (seq[1], seq[3])))
    with pytest.raises(ValueError):
        ncp_decode(crossing, c)
    with pytest.raises(ValueError):
        ncp_decode(NoncrossingPartition(seq, ((seq[0],),)), c)
    with pytest.raises(ValueError):
        ncp_decode(NoncrossingPartition((9, 8, 7, 6), ((9, 8, 7, 6),)), c)


def test_ncp_blocks_match_brute_enumeration():
    group = coxeter_group("A", 3)
    c = standard_coxeter_elements(group)[0]
    seq = circle_sequence(c)
    encoded = {frozenset(map(frozenset, ncp_encode(x, c).blocks)) for x in divisors_of(c)}
    brute = {
        frozenset(map(frozenset, part))
        for part in oracles.set_partitions(seq)
        if oracles.is_noncrossing_on_circle(part, seq)
    }
    assert encoded == brute


def test_type_b_figure_pin():
    group = coxeter_group("B", 5)
    c = group.from_word((2, 1, 3, 5, 4))
    assert circle_sequence(c) == (1, -2, -3, -5, -4, -1, 2, 3, 5, 4)
    x = group.element((5, 3, -2, 1, 4))
    p = ncp_encode(x, c)
    assert p.blocks == ((1, 5, 4), (-2, -3, 2, 3), (-5, -4, -1))
    assert ncp_decode(p, c) == x


def test_circle_sequence_shape():
    a = coxeter_group("A", 4)
    for c in standard_coxeter_elements(a):
        seq = circle_sequence(c)
        assert len(seq) == 5 and seq[0] == 1 and sorted(seq) == [1, 2, 3, 4, 5]
    b = coxeter_group("B", 3)
    for c in standard_coxeter_elements(b):
        seq = circle_sequence(c)
        assert len(seq) == 6 and seq[0] == 1
        half = len(seq) // 2
        assert tuple(-l for l in seq[:half]) == seq[half:]
    with pytest.raises(ValueError):
        circle_sequence(standard_coxeter_elements(coxeter_group("D", 4))[0])


HURWITZ_COUNTS = [
    ("A", 2, None, 3),
    ("A", 3, None, 16),
    ("B", 2, None, 4),
    ("B", 3, None, 27),
    ("I2", 2, 7, 7),
]


@pytest.mark.parametrize("family,rank,m,count", HURWITZ_COUNTS)
def test_hurwitz_orbit_is_all_factorizations(family, rank, m, count):
    group = coxeter_group(family, rank, m=m)
    c = standard_coxeter_elements(group)[0]
    start = t_reduced_factorization(c)
    orbit = hurwitz_orbit(start)
    assert len(orbit) == count
    assert orbit == oracles.reduced_factorizations_brute(c)


def test_hurwitz_braid_orbit_projects_bijectively():
    group = coxeter_group("A", 3)
    c = standard_coxeter_elements(group)[0]
    dm = dual_monoid(c)
    start = tuple(dm.embed(t) for t in t_reduced_factorization(c))
    braids = hurwitz_orbit_braids(start)
    refl = hurwitz_orbit(t_reduced_factorization(c))
    assert len(braids) == len(refl)
    projected = {tuple(b.image() for b in tup) for tup in braids}
    assert projected == refl


@pytest.mark.parametrize("family,rank,m", [("A", 3, None), ("B", 3, None), ("I2", 2, 8), ("H3", 3, None)])
def test_dual_atoms(family, rank, m):
    group = coxeter_group(family, rank, m=m)
    for c in standard_coxeter_elements(group):
        table = dual_atoms(c)
        assert frozenset(table.reflections) == frozenset(group.reflections)
        assert table.all_rational()
        keys = {table.normal_form_ids(t) for t in table.reflections}
        assert len(keys) == len(group.reflections)
        for t in table.reflections:
            assert table.braid(t).image() == t


def test_dihedral_atoms_closed_form():
    m = 9
    group = coxeter_group("I2", 2, m)
    c = group.from_word((1, 2))
    table = dual_atoms(c, (1, 2))
    words = set()
    for t in table.reflections:
        words.add(table.braid(t).letters)
    expected = set()
    for k in range(1, m + 1):
        alt = tuple(1 if i % 2 == 0 else 2 for i in range(k))
        prev = tuple(1 if i % 2 == 0 else 2 for i in range(k - 1))
        expected.add(alt + tuple(-l for l in reversed(prev)))
    assert words == expected


@pytest.mark.parametrize("family,rank,m", [("A", 3, None), ("B", 3, None), ("I2", 2, 6)])
def test_embed_simple(family, rank, m):
    group = coxeter_group(family, rank, m=m)
    for c in standard_coxeter_elements(group):
        ordering = coxeter_element_orderings(group)[c]
        dm = dual_monoid(c, ordering)
        for x in dm.divisors():
            b = dm.embed(x)
            assert is_rational_permutation(b)
            assert b.image() == x
            assert braid_equal(embed_simple(x, c, ordering), b)
        assert dm.embed(c).letters == ordering
        assert dm.embed(group.identity).letters == ()


def test_embed_is_multiplicative_on_complements():
    group = coxeter_group("B", 3)
    c = standard_coxeter_elements(group)[0]
    dm = dual_monoid(c)
    for x in dm.divisors():
        rest = x.inverse() * c
        assert dm.contains(rest)
        assert braid_equal(dm.embed(x) * dm.embed(rest), dm.embed(c))


def test_embed_rejects_non_divisors():
    group = coxeter_group("A", 3)
    c = standard_coxeter_elements(group)[0]
    dm = dual_monoid(c)
    outside = [w for w in group.elements() if not dm.contains(w)]
    assert outside
    with pytest.raises(ValueError):
        dm.embed(outside[0])


@pytest.mark.parametrize("family,rank,m", [("A", 3, None), ("B", 2, None), ("I2", 2, 5)])
def test_t_reduced_factorization(family, rank, m):
    group = coxeter_group(family, rank, m=m)
    T = set(group.reflections)
    for x in group.elements():
        fact = t_reduced_factorization(x)
        assert len(fact) == x.reflection_length()
        acc = group.identity
        for t in fact:
            assert t in T
            acc = acc * t
        assert acc == x


@pytest.mark.parametrize("family,rank,m", [("A", 3, None), ("B", 2, None), ("I2", 2, 5)])
def test_dual_relations_hold(family, rank, m):
    group = coxeter_group(family, rank, m=m)
    for c in standard_coxeter_elements(group):
        rows = verify_dual_relations(c)
        assert rows
        assert all(ok for _, _, _, ok in rows)
        for t1, t2, t3, _ in rows:
            assert t3 == t2 * t1 * t2


def test_linear_coxeter_bruhat():
    rows = linear_coxeter_bruhat_check(3)
    assert rows
    assert all(ok for _, _, _, ok in rows)


@pytest.mark.parametrize("rank", [2, 3])
def test_type_b_absolute_order_embedding(rank):
    group = coxeter_group("B", rank)
    for c in standard_coxeter_elements(group):
        assert type_b_absolute_order_embedding_check(c)
