"""Words, word polynomials, and the index encoding, checked against plain
string/tuple oracles."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mzvlab.words import (
    EMPTY,
    Index,
    Word,
    WordPoly,
    admissible_words,
    index_to_word,
    subspace_test,
    word_to_index,
    words_of_weight,
    yh_words,
)

letter_strings = st.text(alphabet="xy", max_size=10)
coefficients = st.fractions(min_value=-6, max_value=6, max_denominator=12).filter(bool)


def polys(max_weight=5, min_size=0):
    return st.dictionaries(
        st.text(alphabet="xy", max_size=max_weight), coefficients, min_size=min_size, max_size=6
    ).map(lambda d: sum((WordPoly.from_letters(s).scale(c) for s, c in d.items()), WordPoly.zero()))


# -- Word -------------------------------------------------------------------------


@given(letter_strings)
def test_word_string_round_trip(s):
    w = Word.from_letters(s)
    assert str(w) == (s or "1")
    assert w.length == len(s)


def test_word_from_letters_unit_spellings():
    assert Word.from_letters("") == EMPTY
    assert Word.from_letters("1") == EMPTY
    assert str(EMPTY) == "1"


@given(letter_strings, letter_strings)
def test_word_order_is_weight_then_lex(s1, s2):
    # canonical order: weight ascending, then lexicographic with x < y
    w1, w2 = Word.from_letters(s1), Word.from_letters(s2)
    assert (w1 < w2) == ((len(s1), s1) < (len(s2), s2))
    assert (w1 == w2) == (s1 == s2)


@given(letter_strings, letter_strings)
def test_word_concat_matches_strings(s1, s2):
    w = Word.from_letters(s1).concat(Word.from_letters(s2))
    assert str(w) == ((s1 + s2) or "1")


@given(letter_strings)
def test_word_structure_accessors(s):
    w = Word.from_letters(s)
    assert w.starts_with_y == s.startswith("y")
    assert w.ends_with_x == s.endswith("x")
    assert w.is_admissible == (s.startswith("y") and s.endswith("x"))
    if s:
        assert str(w.tail) == (s[1:] or "1")
        assert w.head == (1 if s[0] == "y" else 0)
        assert w.last == (1 if s[-1] == "y" else 0)


@given(letter_strings)
def test_word_prepend_append(s):
    w = Word.from_letters(s)
    assert str(w.prepend(1)) == "y" + s
    assert str(w.append(0)) == s + "x"


def test_word_immutable():
    w = Word.from_letters("yx")
    with pytest.raises(AttributeError):
        w.bits = 0


# -- Index encoding -----------------------------------------------------------------


def test_index_to_word_examples():
    assert str(index_to_word(Index((2,)))) == "yx"
    assert str(index_to_word(Index((1, 2)))) == "yyx"
    assert index_to_word(Index(())) == EMPTY


def test_word_to_index_examples():
    assert word_to_index(Word.from_letters("yxx")) == Index((3,))
    assert word_to_index(Word.from_letters("yyx")) == Index((1, 2))
    with pytest.raises(ValueError):
        word_to_index(Word.from_letters("xy"))


indices = st.lists(st.integers(min_value=1, max_value=6), max_size=5).map(lambda p: Index(tuple(p)))


@given(indices)
def test_index_word_round_trip(k):
    assert word_to_index(index_to_word(k)) == k


@given(letter_strings.filter(lambda s: not s or s[0] == "y"))
def test_word_index_round_trip_on_yh(s):
    w = Word.from_letters(s)
    assert index_to_word(word_to_index(w)) == w


@given(indices)
def test_index_weight_depth_encoding(k):
    w = index_to_word(k)
    assert w.length == k.weight == sum(k)
    assert k.depth == len(k)
    # one y per part
    assert str(w).count("y") == len(k)
    assert k.is_admissible == (len(k) == 0 or k[-1] >= 2)


def test_index_from_text():
    assert Index.from_text("1,2") == Index((1, 2))
    assert str(Index((1, 2))) == "(1,2)"
    with pytest.raises(ValueError):
        Index((0, 2))


# -- WordPoly --------------------------------------------------------------------


@given(polys(), polys(), polys())
def test_wordpoly_vector_space_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert p + q == q + p
    assert p + WordPoly.zero() == p
    assert p - p == WordPoly.zero()
    assert p.scale(Fraction(2, 3)).scale(Fraction(3, 2)) == p


@given(polys(), polys(), st.fractions(min_value=-4, max_value=4, max_denominator=6))
def test_wordpoly_scaling_distributes(p, q, c):
    assert (p + q).scale(c) == p.scale(c) + q.scale(c)


@given(polys())
def test_wordpoly_no_stored_zeros(p):
    q = p - p + p
    assert all(c != 0 for _, c in q.terms())
    assert q == p


@given(polys(max_weight=3), polys(max_weight=3), polys(max_weight=3))
def test_concat_product_bilinear_associative(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert (p + q) * r == p * r + q * r
    assert p * WordPoly.one() == p
    assert WordPoly.one() * p == p


@given(letter_strings, letter_strings)
def test_concat_on_words_is_string_concat(s1, s2):
    p = WordPoly.from_letters(s1) * WordPoly.from_letters(s2)
    assert p == WordPoly.from_letters(s1 + s2)


def test_homogeneous_parts():
    p = WordPoly.from_letters("yx") + WordPoly.from_letters("yyx").scale(Fraction(2))
    assert not p.is_homogeneous
    assert p.weights() == {2, 3}
    assert p.homogeneous_part(2) == WordPoly.from_letters("yx")
    assert p.homogeneous_part(5) == WordPoly.zero()
    assert p.homogeneous_part(3).coeff(Word.from_letters("yyx")) == 2


def test_rendering_examples():
    yyx, yxx = WordPoly.from_letters("yyx"), WordPoly.from_letters("yxx")
    assert str(yyx - yxx) == "yyx - yxx"
    assert str(WordPoly.from_letters("yxy").scale(Fraction(3, 2))) == "3/2*yxy"
    assert str(WordPoly.one()) == "1"
    assert str(WordPoly.zero()) == "0"
    assert str(WordPoly.one().scale(Fraction(-1, 2))) == "-1/2"


def test_subspace_examples():
    p = WordPoly.from_letters("yyx") - WordPoly.from_letters("yxx")
    assert subspace_test(p, "yHx")
    assert not subspace_test(WordPoly.from_letters("xy"), "yH")
    assert subspace_test(WordPoly.zero(), "yHx")
    assert subspace_test(WordPoly.from_letters("xx"), "Hx")
    with pytest.raises(ValueError):
        subspace_test(p, "H")


# -- graded enumerations -------------------------------------------------------------


@pytest.mark.parametrize("weight", range(0, 7))
def test_enumeration_counts(weight):
    all_words = list(words_of_weight(weight))
    assert len(all_words) == 2**weight
    assert len(set(all_words)) == len(all_words)
    assert all(w.length == weight for w in all_words)
    if weight >= 1:
        assert len(list(yh_words(weight))) == 2 ** (weight - 1)
    if weight >= 2:
        adm = list(admissible_words(weight))
        assert len(adm) == 2 ** (weight - 2)
        assert all(w.is_admissible for w in adm)


def test_enumerations_in_canonical_order():
    ws = list(words_of_weight(3))
    assert ws == sorted(ws)
    assert [str(w) for w in ws[:3]] == ["xxx", "xxy", "xyx"]
