"""Words over the two-letter alphabet {x, y} and rational word polynomials.

A word y x^(k1-1) y x^(k2-1) ... y x^(kr-1) encodes the nested-sum index
(k1, ..., kr); the weight of a word is its length.  Words are packed into
integers (x -> 0, y -> 1, first letter at the most significant bit), so
hashing, concatenation and the canonical order are cheap integer operations
even inside weight-graded enumerations.

The canonical total order on words is: weight ascending, then lexicographic
with x < y.  With the chosen packing this is simply ``(length, bits)``.

``WordPoly`` is a finitely supported map Word -> Fraction.  Arithmetic never
mutates its operands and normalizes away zero coefficients, so equality is
plain dict equality.  ``p * q`` is the concatenation product (the ring
multiplication of the noncommutative polynomial algebra); ``+``, ``-`` and
scalar ``*`` are the vector space operations.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

__all__ = [
    "Word",
    "WordPoly",
    "Index",
    "EMPTY",
    "X",
    "Y",
    "Scalar",
    "index_to_word",
    "word_to_index",
    "subspace_test",
    "words_of_weight",
    "yh_words",
    "admissible_words",
]

Scalar = Union[int, Fraction]


class Word:
    """An immutable word over {x, y}.

    ``bits`` holds the letters with the first letter at the most significant
    position (x -> 0, y -> 1); ``length`` is the number of letters.  The empty
    word is ``Word(0, 0)`` and prints as ``"1"``.
    """

    __slots__ = ("bits", "length")

    def __init__(self, bits: int, length: int):
        if length < 0 or bits < 0 or bits >> length:
            raise ValueError(f"invalid packed word ({bits=}, {length=})")
        object.__setattr__(self, "bits", bits)
        object.__setattr__(self, "length", length)

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("Word is immutable")

    @classmethod
    def from_letters(cls, text: str) -> "Word":
        """Build a word from a string of letters; "" and "1" mean the empty word."""
        if text in ("", "1"):
            return EMPTY
        bits = 0
        for ch in text:
            if ch == "x":
                bits = bits << 1
            elif ch == "y":
                bits = (bits << 1) | 1
            else:
                raise ValueError(f"invalid letter {ch!r} in word {text!r}")
        return cls(bits, len(text))

    @property
    def weight(self) -> int:
        return self.length

    def letters(self) -> str:
        n = self.length
        return "".join("y" if (self.bits >> (n - 1 - i)) & 1 else "x" for i in range(n))

    # -- structural accessors ------------------------------------------------

    @property
    def head(self) -> int:
        """First letter as a bit (x=0, y=1); word must be nonempty."""
        if self.length == 0:
            raise ValueError("empty word has no first letter")
        return (self.bits >> (self.length - 1)) & 1

    @property
    def tail(self) -> "Word":
        """The word with its first letter removed."""
        if self.length == 0:
            raise ValueError("empty word has no tail")
        n = self.length - 1
        return Word(self.bits & ((1 << n) - 1), n)

    @property
    def last(self) -> int:
        if self.length == 0:
            raise ValueError("empty word has no last letter")
        return self.bits & 1

    def prepend(self, bit: int) -> "Word":
        return Word((bit << self.length) | self.bits, self.length + 1)

    def append(self, bit: int) -> "Word":
        return Word((self.bits << 1) | bit, self.length + 1)

    def concat(self, other: "Word") -> "Word":
        return Word((self.bits << other.length) | other.bits, self.length + other.length)

    @property
    def starts_with_y(self) -> bool:
        return self.length > 0 and self.head == 1

    @property
    def ends_with_x(self) -> bool:
        return self.length > 0 and self.last == 0

    @property
    def is_admissible(self) -> bool:
        """Starts with y and ends with x, so Z converges on it."""
        return self.starts_with_y and self.ends_with_x

    # -- protocol ------------------------------------------------------------

    def __iter__(self) -> Iterator[str]:
        n = self.length
        for i in range(n):
            yield "y" if (self.bits >> (n - 1 - i)) & 1 else "x"

    def __len__(self) -> int:
        return self.length

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Word)
            and self.length == other.length
            and self.bits == other.bits
        )

    def __hash__(self) -> int:
        return hash((self.length, self.bits))

    def sort_key(self) -> tuple[int, int]:
        return (self.length, self.bits)

    def __lt__(self, other: "Word") -> bool:
        return self.sort_key() < other.sort_key()

    def __le__(self, other: "Word") -> bool:
        return self.sort_key() <= other.sort_key()

    def __gt__(self, other: "Word") -> bool:
        return self.sort_key() > other.sort_key()

    def __ge__(self, other: "Word") -> bool:
        return self.sort_key() >= other.sort_key()

    def __str__(self) -> str:
        return self.letters() if self.length else "1"

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"


EMPTY = Word(0, 0)
X = Word(0, 1)
Y = Word(1, 1)


def _as_fraction(c: Scalar) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"coefficient must be rational, got {type(c).__name__}")


class WordPoly:
    """A rational linear combination of words, normalized (no zero terms)."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Word, Scalar] | Iterable[tuple[Word, Scalar]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Word, Fraction] = {}
        for w, c in items:
            if not isinstance(w, Word):
                raise TypeError(f"key must be Word, got {type(w).__name__}")
            c = _as_fraction(c)
            if c:
                got = acc.get(w)
                if got is None:
                    acc[w] = c
                else:
                    s = got + c
                    if s:
                        acc[w] = s
                    else:
                        del acc[w]
        object.__setattr__(self, "_terms", acc)

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("WordPoly is immutable")

    # -- constructors ----------------------------------------------------------

    @classmethod
    def zero(cls) -> "WordPoly":
        return _ZERO

    @classmethod
    def one(cls) -> "WordPoly":
        return _ONE

    @classmethod
    def from_word(cls, w: Word, c: Scalar = 1) -> "WordPoly":
        return cls({w: c})

    @classmethod
    def from_letters(cls, text: str, c: Scalar = 1) -> "WordPoly":
        return cls({Word.from_letters(text): c})

    # -- queries ---------------------------------------------------------------

    def coeff(self, w: Word) -> Fraction:
        return self._terms.get(w, Fraction(0))

    def terms(self) -> Iterator[tuple[Word, Fraction]]:
        return iter(self._terms.items())

    def support(self) -> list[Word]:
        return sorted(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def weights(self) -> set[int]:
        return {w.length for w in self._terms}

    @property
    def is_homogeneous(self) -> bool:
        return len(self.weights()) <= 1

    def weight(self) -> int:
        """Weight of a nonzero homogeneous polynomial."""
        ws = self.weights()
        if len(ws) != 1:
            raise ValueError("weight undefined: polynomial is zero or mixed-weight")
        return ws.pop()

    def homogeneous_part(self, n: int) -> "WordPoly":
        return WordPoly({w: c for w, c in self._terms.items() if w.length == n})

    def leading_word(self) -> Word:
        """Smallest support word in canonical order; used for pivoting."""
        if not self._terms:
            raise ValueError("zero polynomial has no leading word")
        return min(self._terms)

    # -- arithmetic --------------------------------------------------------------

    def __add__(self, other: "WordPoly") -> "WordPoly":
        if not isinstance(other, WordPoly):
            return NotImplemented
        if not self._terms:
            return other
        if not other._terms:
            return self
        acc = dict(self._terms)
        for w, c in other._terms.items():
            got = acc.get(w)
            if got is None:
                acc[w] = c
            else:
                s = got + c
                if s:
                    acc[w] = s
                else:
                    del acc[w]
        return _raw(acc)

    def __sub__(self, other: "WordPoly") -> "WordPoly":
        if not isinstance(other, WordPoly):
            return NotImplemented
        acc = dict(self._terms)
        for w, c in other._terms.items():
            got = acc.get(w)
            if got is None:
                acc[w] = -c
            else:
                s = got - c
                if s:
                    acc[w] = s
                else:
                    del acc[w]
        return _raw(acc)

    def __neg__(self) -> "WordPoly":
        return _raw({w: -c for w, c in self._terms.items()})

    def __mul__(self, other) -> "WordPoly":
        # poly * poly is the concatenation product; poly * scalar rescales
        if isinstance(other, WordPoly):
            acc: dict[Word, Fraction] = {}
            for w1, c1 in self._terms.items():
                for w2, c2 in other._terms.items():
                    w = w1.concat(w2)
                    c = c1 * c2
                    got = acc.get(w)
                    if got is None:
                        acc[w] = c
                    else:
                        s = got + c
                        if s:
                            acc[w] = s
                        else:
                            del acc[w]
            return _raw(acc)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other) -> "WordPoly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c: Scalar) -> "WordPoly":
        c = _as_fraction(c)
        if not c:
            return _ZERO
        return _raw({w: c * v for w, v in self._terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, WordPoly) and self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    # -- rendering ---------------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces: list[str] = []
        # descending canonical order: highest word first, matching usual
        # highest-degree-first polynomial rendering
        for w in sorted(self._terms, reverse=True):
            c = self._terms[w]
            mag = -c if c < 0 else c
            if w.length == 0:
                body = str(mag)
            elif mag == 1:
                body = str(w)
            else:
                body = f"{mag}*{w}"
            if not pieces:
                pieces.append(body if c > 0 else "-" + body)
            else:
                pieces.append(("+ " if c > 0 else "- ") + body)
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"WordPoly({str(self)!r})"


def _raw(terms: dict[Word, Fraction]) -> WordPoly:
    """Wrap an already-normalized dict without copying."""
    p = WordPoly.__new__(WordPoly)
    object.__setattr__(p, "_terms", terms)
    return p


_ZERO = WordPoly()
_ONE = WordPoly({EMPTY: 1})


class Index(tuple):
    """A nested-sum index (k1, ..., kr); all parts >= 1.

    Admissible means r = 0 or k_r >= 2, which is exactly convergence of the
    associated nested sum.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(parts)
        for k in parts:
            if not isinstance(k, int) or k < 1:
                raise ValueError(f"index parts must be integers >= 1, got {parts}")
        return super().__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def depth(self) -> int:
        return len(self)

    @property
    def is_admissible(self) -> bool:
        return len(self) == 0 or self[-1] >= 2

    @classmethod
    def from_text(cls, text: str) -> "Index":
        text = text.strip()
        if not text:
            return cls()
        try:
            return cls(int(part) for part in text.split(","))
        except ValueError:
            raise ValueError(f"invalid index text {text!r}; expected e.g. '1,2'") from None

    def __str__(self) -> str:
        return "(" + ",".join(str(k) for k in self) + ")"


def index_to_word(k: Iterable[int]) -> Word:
    """(k1, ..., kr) -> y x^(k1-1) ... y x^(kr-1); the empty index gives 1."""
    k = k if isinstance(k, Index) else Index(k)
    bits = 0
    length = 0
    for part in k:
        bits = ((bits << 1) | 1) << (part - 1)
        length += part
    return Word(bits, length)


def word_to_index(w: Word) -> Index:
    """Inverse of index_to_word; rejects words outside y*H (leading x)."""
    if w.length == 0:
        return Index()
    if not w.starts_with_y:
        raise ValueError(f"word {w} does not start with y")
    parts: list[int] = []
    for ch in w:
        if ch == "y":
            parts.append(1)
        else:
            parts[-1] += 1
    return Index(parts)


_SPACES = {
    "yH": lambda w: w.starts_with_y,
    "Hx": lambda w: w.ends_with_x,
    "yHx": lambda w: w.is_admissible,
}


def subspace_test(p: WordPoly, space: str) -> bool:
    """True iff every support word lies in the named subspace.

    ``space`` is one of "yH" (words starting with y), "Hx" (ending with x),
    "yHx" (both).  The zero polynomial belongs to all three.
    """
    try:
        pred = _SPACES[space]
    except KeyError:
        raise ValueError(f"unknown subspace {space!r}; expected one of {sorted(_SPACES)}") from None
    return all(pred(w) for w, _ in p.terms())


def words_of_weight(n: int) -> Iterator[Word]:
    """All words of weight n in canonical order."""
    for bits in range(1 << n):
        yield Word(bits, n)


def yh_words(n: int) -> Iterator[Word]:
    """Weight-n words starting with y, in canonical order; empty for n < 1."""
    if n < 1:
        return
    top = 1 << (n - 1)
    for low in range(top):
        yield Word(top | low, n)


def admissible_words(n: int) -> Iterator[Word]:
    """Weight-n words starting with y and ending with x; empty for n < 2."""
    if n < 2:
        return
    top = 1 << (n - 1)
    for mid in range(1 << (n - 2)):
        yield Word(top | (mid << 1), n)
