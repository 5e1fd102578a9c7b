import pytest

from artin import Word, WordFormatError, alternating


def test_parse_and_render_round_trip():
    w = Word.from_text("a b^-1 a^3 c_1^-2")
    assert w.letters == (("a", 1), ("b", -1), ("a", 3), ("c_1", -2))
    assert Word.from_text(w.to_text()) == w


def test_empty_word():
    assert Word.from_text("").letters == ()
    assert Word.from_text("   ").to_text() == ""


@pytest.mark.parametrize("bad", ["a^0", "^2", "a^", "1a", "a b^x", "a^-"])
def test_bad_tokens_rejected(bad):
    with pytest.raises(WordFormatError):
        Word.from_text(bad)


def test_zero_exponent_letter_rejected():
    with pytest.raises(WordFormatError):
        Word((("a", 0),))


def test_inverse_and_product():
    w = Word.from_text("a b^2")
    assert w.inverse().to_text() == "b^-2 a^-1"
    assert (w * w.inverse()).free_reduce() == Word()
    assert (w ** 3).free_reduce().to_text() == "a b^2 a b^2 a b^2"
    assert (w ** -1) == w.inverse()
    assert (w ** 0) == Word()


def test_free_reduce_merges_and_cancels():
    w = Word.from_text("a a^2 b b^-1 a^-3")
    assert w.free_reduce() == Word()
    w2 = Word.from_text("a b b a^-1 a b")
    assert w2.free_reduce().to_text() == "a b^3"
    # adjacent same-generator letters merge even when written separately
    assert Word.from_text("b b").free_reduce().letters == (("b", 2),)


def test_units_expand_exponents():
    w = Word.from_text("a^2 b^-2")
    assert list(w.units()) == [("a", 1), ("a", 1), ("b", -1), ("b", -1)]


def test_exponent_sums_and_support():
    w = Word.from_text("a b a^-1 c^2 b^-1")
    assert w.exponent_sums() == {"c": 2}
    assert w.support() == {"a", "b", "c"}
    assert w.syllable_length() == 6


def test_alternating():
    assert alternating("a", "b", 0) == Word()
    assert alternating("a", "b", 3).to_text() == "a b a"
    assert alternating("b", "a", 4).to_text() == "b a b a"
