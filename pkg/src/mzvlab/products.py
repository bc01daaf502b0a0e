"""Bilinear products on word polynomials: concatenation, diamond, harmonic.

The diamond and harmonic products are defined by structural recursion on the
leading letters; the base cases are exactly the unit laws.  Both recursions
strictly decrease the total weight of the argument pair, and the word-level
results are memoized, so graded computations up to weight ~10 stay cheap.

Commutativity and associativity of both products, and centrality of (x + y)
for diamond, are consequences of the defining recursions; the test suite
checks them, the implementation never assumes them.
"""

from __future__ import annotations

from functools import cache

from .words import EMPTY, Word, WordPoly, _raw

__all__ = ["concat", "diamond", "harmonic"]


def _coerce(p: Word | WordPoly) -> WordPoly:
    return WordPoly.from_word(p) if isinstance(p, Word) else p


def concat(p: Word | WordPoly, q: Word | WordPoly) -> WordPoly:
    """Concatenation product, extended bilinearly; unit is the empty word."""
    return _coerce(p) * _coerce(q)


def _prefix(bit: int, p: WordPoly) -> WordPoly:
    return _raw({w.prepend(bit): c for w, c in p.terms()})


@cache
def _diamond_words(w1: Word, w2: Word) -> WordPoly:
    if w1.length == 0:
        return WordPoly.from_word(w2)
    if w2.length == 0:
        return WordPoly.from_word(w1)
    a, u = w1.head, w1.tail
    b, v = w2.head, w2.tail
    if a == 0 and b == 0:
        # x u <> x v = x(u <> xv) - x(yu <> v)
        return _prefix(0, _diamond_words(u, w2)) - _prefix(0, _diamond_words(u.prepend(1), v))
    if a == 0 and b == 1:
        # x u <> y v = x(u <> yv) + y(xu <> v)
        return _prefix(0, _diamond_words(u, w2)) + _prefix(1, _diamond_words(w1, v))
    if a == 1 and b == 0:
        # y u <> x v = y(u <> xv) + x(yu <> v)
        return _prefix(1, _diamond_words(u, w2)) + _prefix(0, _diamond_words(w1, v))
    # y u <> y v = y(u <> yv) - y(xu <> v)
    return _prefix(1, _diamond_words(u, w2)) - _prefix(1, _diamond_words(u.prepend(0), v))


@cache
def _harmonic_words(w1: Word, w2: Word) -> WordPoly:
    if w1.length == 0:
        return WordPoly.from_word(w2)
    if w2.length == 0:
        return WordPoly.from_word(w1)
    if w1.head == 0:
        return _prefix(0, _harmonic_words(w1.tail, w2))
    if w2.head == 0:
        return _prefix(0, _harmonic_words(w1, w2.tail))
    u, v = w1.tail, w2.tail
    inner = _harmonic_words(u, w2) + _harmonic_words(w1, v) + _prefix(0, _harmonic_words(u, v))
    return _prefix(1, inner)


def _bilinear(word_product, p: Word | WordPoly, q: Word | WordPoly) -> WordPoly:
    p, q = _coerce(p), _coerce(q)
    out = WordPoly.zero()
    for w1, c1 in p.terms():
        for w2, c2 in q.terms():
            out = out + word_product(w1, w2).scale(c1 * c2)
    return out


def diamond(p: Word | WordPoly, q: Word | WordPoly) -> WordPoly:
    """Diamond product.

    On words:
        w <> 1 = 1 <> w = w
        x u <> x v = x(u <> xv) - x(yu <> v)
        x u <> y v = x(u <> yv) + y(xu <> v)
        y u <> x v = y(u <> xv) + x(yu <> v)
        y u <> y v = y(u <> yv) - y(xu <> v)
    """
    return _bilinear(_diamond_words, p, q)


def harmonic(p: Word | WordPoly, q: Word | WordPoly) -> WordPoly:
    """Harmonic product.

    On words:
        1 * w = w * 1 = w
        x u * w = x(u * w)          (likewise when the right factor leads with x)
        y u * y v = y(u * yv + yu * v + x(u * v))
    """
    return _bilinear(_harmonic_words, p, q)
