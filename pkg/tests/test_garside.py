"""Classical Garside structure: normal forms, fractions, signed lifts."""

import random

import pytest

from coxbraid.coxeter import coxeter_group, weak_meet_left
from coxbraid.garside import (
    BraidWord,
    GarsideNormalForm,
    braid_equal,
    braid_from_normal_form,
    delta_normal_form,
    delta_twist,
    embed_braid_b_to_a,
    fraction_form,
    is_rational_permutation,
    is_square_free,
    is_tau_fixed,
    mirror_letters,
    positive_lift,
    right_fraction_form,
    signed_lift,
    square_free_witness,
)

import oracles


def random_words(group, count, max_len, seed):
    rng = random.Random(seed)
    letters = [l for i in range(1, group.rank + 1) for l in (i, -i)]
    out = []
    for _ in range(count):
        k = rng.randrange(0, max_len + 1)
        out.append(tuple(rng.choice(letters) for _ in range(k)))
    return out


@pytest.mark.parametrize("family,rank,m", [("A", 3, None), ("B", 2, None), ("I2", 2, 5)])
def test_normal_form_round_trip(family, rank, m):
    group = coxeter_group(family, rank, m=m)
    for word in random_words(group, 80, 9, seed=rank * 17 + (m or 0)):
        b = BraidWord(group, word)
        nf = delta_normal_form(b)
        assert braid_equal(braid_from_normal_form(nf), b)
        back = GarsideNormalForm.from_json(group, nf.to_json())
        assert back.inf == nf.inf and back.factors == nf.factors


def test_normal_form_shape():
    group = coxeter_group("A", 3)
    w0 = group.longest_element
    for word in random_words(group, 120, 10, seed=3):
        nf = delta_normal_form(BraidWord(group, word))
        for f in nf.factors:
            assert not f.is_identity()
            assert f != w0
        for left, right in zip(nf.factors, nf.factors[1:]):
            assert right.left_descents() <= left.right_descents()


def test_word_problem_against_rewriting_oracle():
    group = coxeter_group("A", 2)
    rng = random.Random(23)
    words = random_words(group, 40, 6, seed=9)
    for u in words[:20]:
        for v in words[20:]:
            lib = braid_equal(BraidWord(group, u), BraidWord(group, v))
            if lib:
                assert oracles.rewriting_equal(group, u, v)
        sc = oracles.scrambled(u, group, rng, moves=4)
        assert braid_equal(BraidWord(group, u), BraidWord(group, sc))
        assert oracles.rewriting_equal(group, u, sc)


def test_positive_word_problem_is_tits_closure():
    group = coxeter_group("A", 3)
    rng = random.Random(41)
    for _ in range(60):
        k = rng.randrange(1, 8)
        u = tuple(rng.randrange(1, 4) for _ in range(k))
        v = tuple(rng.randrange(1, 4) for _ in range(k))
        lib = braid_equal(BraidWord(group, u), BraidWord(group, v))
        assert lib == (v in oracles.positive_class(group, u))


def test_delta_squared_is_central():
    for group in (coxeter_group("A", 3), coxeter_group("B", 2)):
        delta = positive_lift(group.longest_element)
        d2 = delta * delta
        for word in random_words(group, 15, 6, seed=2):
            b = BraidWord(group, word)
            assert braid_equal(d2 * b, b * d2)


def test_delta_twist_matches_conjugation():
    for group in (coxeter_group("A", 3), coxeter_group("B", 2), coxeter_group("I2", 2, 5)):
        delta = positive_lift(group.longest_element)
        for word in random_words(group, 15, 6, seed=4):
            b = BraidWord(group, word)
            assert braid_equal(delta_twist(b), delta.inverse() * b * delta)


def test_rational_membership():
    group = coxeter_group("A", 2)
    for x in group.elements():
        for y in group.elements():
            b = positive_lift(x).inverse() * positive_lift(y)
            assert is_rational_permutation(b)
    s1 = BraidWord(group, (1,))
    assert not is_rational_permutation(s1 * s1)
    assert not is_rational_permutation((s1 * s1).inverse())
    assert is_rational_permutation(BraidWord(group, ()))


def test_fraction_forms_every_rational_braid():
    group = coxeter_group("A", 2)
    e = group.identity
    for x in group.elements():
        for y in group.elements():
            b = positive_lift(x).inverse() * positive_lift(y)
            fx, fy = fraction_form(b)
            assert weak_meet_left(fx, fy) == e
            assert braid_equal(positive_lift(fx).inverse() * positive_lift(fy), b)
            rx, ry = right_fraction_form(b)
            assert braid_equal(positive_lift(rx) * positive_lift(ry).inverse(), b)


def test_fraction_form_rejects_non_rational():
    group = coxeter_group("A", 2)
    big = BraidWord(group, (1, 1))
    with pytest.raises(ValueError):
        fraction_form(big)
    with pytest.raises(ValueError):
        right_fraction_form(big)


def test_signed_lift_round_trip():
    group = coxeter_group("A", 3)
    rng = random.Random(6)
    els = group.elements()
    for _ in range(40):
        x = els[rng.randrange(len(els))]
        y = els[rng.randrange(len(els))]
        b = positive_lift(x).inverse() * positive_lift(y)
        lift = signed_lift(b)
        assert braid_equal(lift, b)
        assert tuple(abs(l) for l in lift.letters) == b.image().reduced_word()


def test_signed_lift_rejects_wrong_word():
    group = coxeter_group("A", 2)
    b = positive_lift(group.generator(1))
    with pytest.raises(ValueError):
        signed_lift(b, (2,))
    with pytest.raises(ValueError):
        signed_lift(b, (1, 1, 1))


def test_square_free():
    group = coxeter_group("A", 2)
    for w in group.elements():
        assert is_square_free(positive_lift(w))
        assert is_square_free(positive_lift(w).inverse())
    s1 = BraidWord(group, (1,))
    assert not is_square_free(s1 * s1)
    witness = square_free_witness(BraidWord(group, (-1, 2, 1)))
    assert witness is not None
    word, signs = witness
    cand = BraidWord(group, tuple(i * s for i, s in zip(word, signs)))
    assert braid_equal(cand, BraidWord(group, (-1, 2, 1)))


def test_square_free_beyond_rational():
    group = coxeter_group("A", 2)
    # Delta * s1 has normal form of supremum 2, yet admits a square free word.
    b = BraidWord(group, (2, 1, 2, 2))
    assert not is_rational_permutation(b)
    assert not is_square_free(b)
    c = BraidWord(group, (1, 2, -1, -2))
    got = square_free_witness(c)
    if got is not None:
        word, signs = got
        assert braid_equal(
            BraidWord(group, tuple(i * s for i, s in zip(word, signs))), c
        )


def test_mirror_and_tau():
    group = coxeter_group("A", 3)
    b = BraidWord(group, (1, -2, 3))
    assert mirror_letters(b).letters == (3, -2, 1)
    assert mirror_letters(mirror_letters(b)).letters == b.letters
    assert is_tau_fixed(BraidWord(group, (2,)))
    assert is_tau_fixed(BraidWord(group, (1, 3)))
    assert not is_tau_fixed(BraidWord(group, (1,)))
    with pytest.raises(ValueError):
        mirror_letters(BraidWord(coxeter_group("B", 2), (1,)))


def test_type_b_fold_is_a_homomorphism():
    b_group = coxeter_group("B", 2)
    for u in random_words(b_group, 25, 6, seed=8):
        for v in random_words(b_group, 5, 4, seed=9):
            bu, bv = BraidWord(b_group, u), BraidWord(b_group, v)
            lhs = embed_braid_b_to_a(bu * bv)
            rhs = embed_braid_b_to_a(bu) * embed_braid_b_to_a(bv)
            assert braid_equal(lhs, rhs)
        img = embed_braid_b_to_a(BraidWord(b_group, u))
        assert is_tau_fixed(img)
    with pytest.raises(ValueError):
        embed_braid_b_to_a(BraidWord(coxeter_group("A", 2), (1,)))


def test_braid_word_validation():
    group = coxeter_group("A", 2)
    with pytest.raises(ValueError):
        BraidWord(group, (0,))
    with pytest.raises(ValueError):
        BraidWord(group, (3,))
    with pytest.raises(ValueError):
        BraidWord(group, (1,)) * BraidWord(coxeter_group("A", 3), (1,))
    assert BraidWord.from_json(BraidWord(group, (1, -2)).to_json()).letters == (1, -2)
