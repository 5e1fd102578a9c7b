import random

import pytest

from artin import (
    PreconditionError,
    Word,
    WordFormatError,
    alternating,
    as_defining_generators,
    delta_conjugates_generators,
    garside,
    is_central,
    membership_a_z,
    normal_form,
    root_bound_search,
    words_equal,
)
from artin.dihedral import AbelianNormalForm, reduced_words


W = Word.from_text


def test_normal_form_frozen_examples():
    assert str(normal_form(3, W("a b a b^-1 a^-1 b^-1"))) == "1"
    assert str(normal_form(3, W("a b"))) == "y"
    assert str(normal_form(3, W("a b a"))) == "x"
    assert str(normal_form(3, W("a"))) == "c^-1 y^2 x"
    assert str(normal_form(3, W("b"))) == "c^-1 x y^2"
    assert str(normal_form(5, W("a"))) == "c^-1 y^3 x"
    assert str(normal_form(4, W("a"))) == "x"
    assert str(normal_form(4, W("a b"))) == "y"
    assert str(normal_form(4, W("a b a b"))) == "y^2"
    assert str(normal_form(6, W("a b a b a b"))) == "y^3"
    assert str(normal_form(4, W("b a b a"))) == "y^2"
    assert str(normal_form(4, W(""))) == "1"


def test_normal_form_label_two_is_abelian():
    nf = normal_form(2, W("a b a^-1 b^2"))
    assert isinstance(nf, AbelianNormalForm)
    assert (nf.a_exp, nf.b_exp) == (0, 3)
    assert words_equal(2, W("a b"), W("b a"))
    assert not words_equal(2, W("a"), W("b"))


def test_words_equal_braid_instances():
    assert words_equal(3, W("a b a"), W("b a b"))
    assert words_equal(4, W("a b a b"), W("b a b a"))
    assert not words_equal(3, W("a b"), W("b a"))
    assert not words_equal(5, W("a"), W("b"))


def _random_word(rng, max_len):
    n = rng.randint(0, max_len)
    letters = []
    for _ in range(n):
        letters.append((rng.choice("ab"), rng.choice((-2, -1, 1, 1, 2))))
    return Word(tuple(letters)).free_reduce() if letters else Word(())


def test_round_trip_through_defining_generators():
    rng = random.Random(2024)
    for n in range(3, 9):
        for _ in range(200):
            w = _random_word(rng, 6)
            nf = normal_form(n, w)
            back = as_defining_generators(nf)
            assert normal_form(n, back) == nf, (n, w.to_text())


def test_product_soundness():
    rng = random.Random(77)
    for n in range(3, 9):
        for _ in range(120):
            u = _random_word(rng, 5)
            v = _random_word(rng, 5)
            direct = normal_form(n, u * v)
            recomposed = normal_form(
                n, as_defining_generators(normal_form(n, u)) * v
            )
            assert direct == recomposed, (n, u.to_text(), v.to_text())


def test_relator_insertion_invariance():
    rng = random.Random(13)
    for n in range(3, 9):
        relator = alternating("a", "b", n) * alternating("b", "a", n).inverse()
        for _ in range(100):
            w = _random_word(rng, 6)
            cut = rng.randint(0, len(w.letters))
            head = Word(w.letters[:cut])
            tail = Word(w.letters[cut:])
            stuffed = head * relator * tail
            assert normal_form(n, stuffed) == normal_form(n, w), (n, w.to_text())


def test_exponent_sums_respected():
    rng = random.Random(40)
    for n in range(3, 9):
        for _ in range(80):
            w = _random_word(rng, 6)
            back = as_defining_generators(normal_form(n, w))
            s1 = w.exponent_sums()
            s2 = back.exponent_sums()
            if n % 2 == 0:
                assert s1.get("a", 0) == s2.get("a", 0)
                assert s1.get("b", 0) == s2.get("b", 0)
            else:
                total1 = sum(s1.values())
                total2 = sum(s2.values())
                assert total1 == total2


def test_garside_and_centre():
    for n in range(3, 11):
        data = garside(n)
        assert data.delta == alternating("a", "b", n)
        assert is_central(n, data.z)
        assert is_central(n, data.delta) == (n % 2 == 0)
    assert garside(3).z.to_text() == "a b a a b a"
    assert garside(4).z.to_text() == "a b a b"


def test_delta_swaps_generators_odd():
    for n in (3, 5, 7, 9):
        assert delta_conjugates_generators(n)
    with pytest.raises(PreconditionError):
        delta_conjugates_generators(4)


def test_membership_examples():
    assert membership_a_z(4, W("a")) == (1, 0)
    assert membership_a_z(4, W("a b a b")) == (0, 1)
    assert membership_a_z(4, W("a b")) is None
    assert membership_a_z(6, W("a b a b a b")) == (0, 1)
    assert membership_a_z(6, W("b")) is None
    assert membership_a_z(4, W("a^3 b a b a^-1")) == (1, 1)
    assert membership_a_z(4, W("a^3 b a b")) == (2, 1)


def test_membership_consistency():
    rng = random.Random(31)
    for n in (4, 6, 8):
        z = garside(n).z
        for _ in range(60):
            i = rng.randint(-3, 3)
            k = rng.randint(-2, 2)
            w = Word.generator("a", i) * z**k if i else z**k
            got = membership_a_z(n, w.free_reduce())
            assert got == (i, k), (n, i, k)


def test_membership_requires_even_label():
    with pytest.raises(PreconditionError):
        membership_a_z(5, W("a"))
    with pytest.raises(PreconditionError):
        membership_a_z(2, W("a"))


def test_root_bound_holds_on_small_searches():
    assert root_bound_search(4, 4, 3) == ()
    assert root_bound_search(6, 3, 4) == ()


def test_tight_witness_root_of_degree_m():
    for n in (4, 6):
        m = n // 2
        r = W("a b")
        assert membership_a_z(n, r**m) == (0, 1)
        assert membership_a_z(n, r) is None


def test_reduced_words_enumeration():
    seen = list(reduced_words(2))
    texts = [w.to_text() for w in seen]
    assert "a" in texts and "a b" in texts and "a^-1 b" in texts
    assert "a a^-1" not in texts and "b^-1 b" not in texts
    assert len(texts) == len(set(texts))
    for w in seen:
        units = list(w.units())
        for (u, e), (v, f) in zip(units, units[1:]):
            assert not (u == v and e == -f)


def test_invalid_letters_rejected():
    with pytest.raises(WordFormatError):
        normal_form(3, W("a q"))
    with pytest.raises(PreconditionError):
        normal_form(1, W("a"))
