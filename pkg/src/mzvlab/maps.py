"""Linear and multiplicative maps on word polynomials.

tau      anti-automorphism: reverse the word and swap x <-> y
phi      automorphism x -> x + y, y -> -y (an involution)
s1       automorphism x -> x, y -> x + y
s1_inv   automorphism x -> x, y -> y - x
s_map    y w -> y s1(w) on the subspace of words starting with y
derivation(l, .)   the derivation sending x -> y(x+y)^(l-1)x and y to its negative
z_power(s)         (x + y)^s expanded in the word basis
z_basis_decompose  coordinates of a polynomial ending in x over the basis
                   (x+y)^(k1-1) x ... (x+y)^(kr-1) x
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache

from .words import EMPTY, Index, Word, WordPoly, _raw, subspace_test, word_to_index

__all__ = [
    "tau",
    "phi",
    "s1",
    "s1_inv",
    "s_map",
    "derivation",
    "z_power",
    "z_basis_decompose",
    "LetterSubstitution",
]


def _coerce(p: Word | WordPoly) -> WordPoly:
    return WordPoly.from_word(p) if isinstance(p, Word) else p


@cache
def _tau_word(w: Word) -> Word:
    # reverse the letters and swap x <-> y; bits are read LSB-first, which is
    # already the reversed order, and xor 1 performs the swap
    bits, out = w.bits, 0
    for _ in range(w.length):
        out = (out << 1) | ((bits & 1) ^ 1)
        bits >>= 1
    return Word(out, w.length)


def tau(p: Word | WordPoly) -> WordPoly:
    """Anti-automorphism with tau(x) = y, tau(y) = x; an involution."""
    if isinstance(p, Word):
        return WordPoly.from_word(_tau_word(p))
    return _raw({_tau_word(w): c for w, c in p.terms()})


class LetterSubstitution:
    """Algebra endomorphism determined by the images of x and y.

    Applied to a word letter by letter via the concatenation product and
    extended linearly; word images are memoized per instance.
    """

    def __init__(self, name: str, image_x: WordPoly, image_y: WordPoly):
        self.name = name
        self.images = (image_x, image_y)
        self._memo: dict[Word, WordPoly] = {EMPTY: WordPoly.one()}

    def _word(self, w: Word) -> WordPoly:
        got = self._memo.get(w)
        if got is None:
            got = self.images[w.head] * self._word(w.tail)
            self._memo[w] = got
        return got

    def __call__(self, p: Word | WordPoly) -> WordPoly:
        if isinstance(p, Word):
            return self._word(p)
        out = WordPoly.zero()
        for w, c in p.terms():
            out = out + self._word(w).scale(c)
        return out

    def __repr__(self) -> str:
        return f"LetterSubstitution({self.name!r})"


_X = WordPoly.from_letters("x")
_Y = WordPoly.from_letters("y")

phi = LetterSubstitution("phi", _X + _Y, -_Y)
s1 = LetterSubstitution("s1", _X, _X + _Y)
s1_inv = LetterSubstitution("s1_inv", _X, _Y - _X)


def s_map(p: Word | WordPoly) -> WordPoly:
    """y w -> y s1(w), extended linearly; defined on polynomials in yH."""
    p = _coerce(p)
    if not subspace_test(p, "yH"):
        raise ValueError("s_map requires every support word to start with y")
    out = WordPoly.zero()
    for w, c in p.terms():
        out = out + (_Y * s1(w.tail)).scale(c)
    return out


def z_power(s: int) -> WordPoly:
    """(x + y)^s in the word basis: the sum of all 2^s words of weight s."""
    if s < 0:
        raise ValueError("exponent must be >= 0")
    return _raw({Word(bits, s): Fraction(1) for bits in range(1 << s)})


@cache
def _derivation_image(l: int) -> WordPoly:
    # image of x under the weight-l derivation: y (x+y)^(l-1) x
    return _Y * z_power(l - 1) * _X


def derivation(l: int, p: Word | WordPoly) -> WordPoly:
    """The derivation with x -> y(x+y)^(l-1)x, y -> -y(x+y)^(l-1)x, l >= 1.

    Applied to a word by the Leibniz rule, one letter at a time; (x + y) is
    annihilated, so images of (x+y)-power blocks vanish.
    """
    if l < 1:
        raise ValueError("derivation order must be >= 1")
    p = _coerce(p)
    g = _derivation_image(l)
    out = WordPoly.zero()
    for w, c in p.terms():
        for i, ch in enumerate(w):
            left = Word(w.bits >> (w.length - i), i)
            right = Word(w.bits & ((1 << (w.length - i - 1)) - 1), w.length - i - 1)
            sign = c if ch == "x" else -c
            out = out + (WordPoly.from_word(left) * g * WordPoly.from_word(right)).scale(sign)
    return out


def z_basis_decompose(p: Word | WordPoly) -> list[tuple[Index, Fraction]]:
    """Coordinates of p over the basis (x+y)^(k1-1) x ... (x+y)^(kr-1) x.

    Every support word must end in x.  Substituting y -> (y - x) rewrites p
    over {x, x+y} (reusing the word machinery with the letter y standing for
    x+y); splitting each resulting word at its x letters then reads off the
    index.  Deterministic order: canonical order of the substituted words.
    """
    p = _coerce(p)
    if not subspace_test(p, "Hx"):
        raise ValueError("decomposition requires every support word to end with x")
    sub = s1_inv(p)
    out: list[tuple[Index, Fraction]] = []
    for w in sub.support():
        # w is a word over {x, z} with z in the y slot; blocks z^(a) x give parts a+1
        parts: list[int] = []
        run = 0
        for ch in w:
            if ch == "y":
                run += 1
            else:
                parts.append(run + 1)
                run = 0
        out.append((Index(parts), sub.coeff(w)))
    return out
