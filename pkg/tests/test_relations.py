"""Relation families, echelon spans, and membership certificates."""

import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mzvlab.maps import tau
from mzvlab.products import concat, diamond
from mzvlab.relations import (
    SPAN_IDS,
    RowBasis,
    check_graded_equality,
    derivation_residual,
    duality_residual,
    graded_span,
    kawashima_generator,
    member,
    reduce_to_basis,
)
from mzvlab.words import Word, WordPoly, admissible_words, words_of_weight, yh_words


def P(s):
    return WordPoly.from_letters(s)


def W(s):
    return Word.from_letters(s)


# -- generators ---------------------------------------------------------------------


def test_kawashima_generator_examples():
    assert kawashima_generator(P("y"), P("y")) == P("yyx") - P("yxx")
    assert kawashima_generator(P("y"), P("yx")) == P("yyyx") - P("yxxx")


def test_kawashima_generator_validates_inputs():
    with pytest.raises(ValueError):
        kawashima_generator(WordPoly.zero(), P("y"))
    with pytest.raises(ValueError):
        kawashima_generator(P("xy"), P("y"))


@given(st.text(alphabet="xy", max_size=4), st.text(alphabet="xy", max_size=4))
def test_kawashima_generator_lands_in_admissible_words(s1, s2):
    u, v = P("y" + s1), P("y" + s2)
    gen = kawashima_generator(u, v)
    assert all(w.is_admissible for w in gen.support())
    assert gen.is_homogeneous and gen.weight() == len(s1) + len(s2) + 3


def test_reduce_to_basis_examples():
    w = W("yxy")
    assert reduce_to_basis(W(""), w) == WordPoly.from_word(w)
    assert reduce_to_basis(W("x"), W("")) == P("y")
    assert reduce_to_basis(W("y"), W("y")) == P("xy") + P("yx")


@given(st.text(alphabet="xy", max_size=4), st.text(alphabet="xy", max_size=4))
def test_reduce_to_basis_is_tau_then_diamond(s1, s2):
    assert reduce_to_basis(W(s1), W(s2)) == diamond(tau(P(s1)), P(s2))


# -- RowBasis ----------------------------------------------------------------------


def test_row_basis_insert_and_member():
    basis = RowBasis(3)
    assert basis.insert(P("yyx") - P("yxx"), "g0")
    assert not basis.insert((P("yyx") - P("yxx")).scale(Fraction(7, 3)), "g1")
    assert basis.dim == 1

    cert = basis.member(P("yyx") - P("yxx"))
    assert cert.member and cert.coordinates == [("g0", Fraction(1))]

    cert = basis.member(P("yyx"))
    assert not cert.member and not cert.residual.is_zero

    cert = basis.member(WordPoly.zero())
    assert cert.member and cert.coordinates == []


def test_row_basis_rejects_wrong_weight():
    basis = RowBasis(3)
    basis.insert(P("yyx"), "g")
    with pytest.raises(ValueError):
        basis.member(P("yx"))
    with pytest.raises(ValueError):
        basis.insert(P("yxyx"), "h")


@given(st.lists(st.fractions(min_value=-4, max_value=4, max_denominator=6), min_size=2, max_size=4))
def test_row_basis_combination_of_rows_is_member(coeffs):
    # span built from a few weight-4 relation generators
    gens = [
        kawashima_generator(P("y"), P("yx")),
        kawashima_generator(P("y"), P("yy")),
        kawashima_generator(P("yx"), P("y")),
        kawashima_generator(P("yy"), P("y")),
    ]
    basis = RowBasis(4)
    for i, g in enumerate(gens):
        basis.insert(g, f"g{i}")
    combo = sum((g.scale(c) for g, c in zip(gens, coeffs)), WordPoly.zero())
    dim_before = basis.dim
    assert not basis.insert(combo, "extra")
    assert basis.dim == dim_before
    cert = basis.member(combo)
    assert cert.member
    # certificate must recombine exactly
    rebuilt = sum(
        (basis.generator(gid).scale(c) for gid, c in cert.coordinates), WordPoly.zero()
    )
    assert rebuilt == combo


def test_row_basis_pivots_sorted_and_unit():
    basis = graded_span("A2", 5)
    assert basis.pivots == sorted(basis.pivots)
    for pivot, row in zip(basis.pivots, basis.rows):
        assert row.coeff(pivot) == 1
        for other in basis.rows:
            if other is not row:
                assert other.coeff(pivot) == 0


# -- graded spans ---------------------------------------------------------------------


def test_span_a2_weight3_has_single_generator():
    basis = graded_span("A2", 3)
    assert basis.dim == 1
    assert [str(w) for w in basis.pivots] == ["yxx"]
    cert = member(basis, P("yyx") - P("yxx"))
    assert cert.member
    assert [(gid, c) for gid, c in cert.coordinates] == [("A2(y,y)", Fraction(1))]


def test_span_below_weight3_is_zero_grade():
    for sid in SPAN_IDS:
        assert graded_span(sid, 2).dim == 0


@pytest.mark.parametrize("weight", [3, 4, 5])
def test_graded_equality_small_weights(weight):
    report = check_graded_equality(weight)
    assert report["equal"], report["witnesses"]
    dims = {s["id"]: s["dim"] for s in report["sets"]}
    assert len(set(dims.values())) == 1
    assert report["witnesses"] == []


def test_kawashima_generators_lie_in_a2():
    for n in (3, 4, 5, 6):
        basis = graded_span("A2", n)
        for wu in range(1, n - 1):
            for u in yh_words(wu):
                for v in yh_words(n - 1 - wu):
                    cert = basis.member(kawashima_generator(u, v))
                    assert cert.member, (u, v)


def test_reduce_to_basis_consistency_with_a4():
    # y*w1*w2*x - y*reduce(w1,w2)*x is an A4 relation (or zero when w1 empty)
    for total in range(1, 5):
        for a in range(total + 1):
            for w1 in words_of_weight(a):
                for w2 in words_of_weight(total - a):
                    lhs = concat(concat(P("y"), WordPoly.from_word(w1.concat(w2))), P("x"))
                    rhs = concat(concat(P("y"), reduce_to_basis(w1, w2)), P("x"))
                    residual = lhs - rhs
                    if residual.is_zero:
                        continue
                    cert = graded_span("A4", total + 2).member(residual)
                    assert cert.member, (w1, w2)


# -- duality / derivation residuals ----------------------------------------------------


def test_duality_residual_examples():
    assert duality_residual(W("yyx")) == P("yyx") - P("yxx")
    assert duality_residual(W("yx")).is_zero
    assert duality_residual(W("yxyx")).is_zero
    with pytest.raises(ValueError):
        duality_residual(W("xy"))


def test_derivation_residual_examples():
    assert derivation_residual(1, W("yx")) == P("yyx") - P("yxx")
    img = derivation_residual(2, W("yx"))
    assert img.is_homogeneous and img.weight() == 4
    assert graded_span("A4", 4).member(img).member
    with pytest.raises(ValueError):
        derivation_residual(1, W("xy"))


@pytest.mark.parametrize("weight", [3, 4, 5, 6])
def test_duality_residuals_in_a4(weight):
    basis = graded_span("A4", weight)
    for w in admissible_words(weight):
        assert basis.member(duality_residual(w)).member, w


@pytest.mark.parametrize("weight,l", [(4, 1), (5, 1), (4, 2), (5, 2)])
def test_derivation_residuals_in_a4(weight, l):
    basis = graded_span("A4", weight)
    for w in admissible_words(weight - l):
        assert basis.member(derivation_residual(l, w)).member, (l, w)


def test_check_graded_equality_report_shape():
    report = check_graded_equality(4)
    assert set(report) == {"weight", "sets", "equal", "witnesses"}
    assert [s["id"] for s in report["sets"]] == list(SPAN_IDS)
    for s in report["sets"]:
        assert isinstance(s["pivots"], list)
