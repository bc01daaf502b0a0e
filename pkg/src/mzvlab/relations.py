"""Graded relation families, exact echelon bases, and membership certificates.

The four generator families over a fixed weight n (all inside the span of
admissible words, i.e. words starting with y and ending with x):

  A1: phi(u * v) x              u, v nonempty words starting with y
  A2: (u <> v) x                same range
  A3: y w1 (x+y)^m w2 x - y (x+y)^m (tau(w1) <> w2) x    m >= 0, w1, w2 words
  A4: y w1 w2 x - y (tau(w1) <> w2) x                    w1, w2 words

All coincide grade by grade; ``check_graded_equality`` verifies this by
mutual inclusion of echelon bases.  Membership certificates are exact: the
returned coordinates recombine to the query over the original generators.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import maps, products
from .words import Word, WordPoly, subspace_test, words_of_weight, yh_words

__all__ = [
    "RowBasis",
    "MembershipCertificate",
    "kawashima_generator",
    "reduce_to_basis",
    "graded_span",
    "member",
    "check_graded_equality",
    "duality_residual",
    "derivation_residual",
    "SPAN_IDS",
]

SPAN_IDS = ("A1", "A2", "A3", "A4")


@dataclass
class MembershipCertificate:
    """Outcome of an exact membership test against a RowBasis.

    When ``member`` is true, ``coordinates`` lists (generator id, coefficient)
    pairs whose combination equals the query exactly; otherwise ``residual``
    is the nonzero remainder after full reduction.
    """

    member: bool
    coordinates: list[tuple[str, Fraction]] | None = None
    residual: WordPoly | None = None

    def to_dict(self) -> dict:
        out: dict = {"member": self.member}
        if self.member:
            out["coordinates"] = [[gid, str(c)] for gid, c in (self.coordinates or [])]
        else:
            out["residual"] = str(self.residual)
        return out


class RowBasis:
    """Reduced echelon basis of a weight-graded subspace, over exact rationals.

    Rows are homogeneous WordPoly values with pivot coefficient 1; pivots are
    the canonically smallest support words, strictly increasing row by row,
    and absent from every other row.  Each row also carries its expression
    over the generators inserted so far, so membership certificates can name
    original generators.  Insertion of a dependent vector is a no-op.
    """

    def __init__(self, weight: int):
        self.weight = weight
        self.rows: list[WordPoly] = []
        self.pivots: list[Word] = []
        self._combos: list[dict[str, Fraction]] = []
        self._generators: dict[str, WordPoly] = {}

    @property
    def dim(self) -> int:
        return len(self.rows)

    def generator(self, gen_id: str) -> WordPoly:
        return self._generators[gen_id]

    def _check_weight(self, p: WordPoly) -> None:
        if p.is_zero:
            return
        if not p.is_homogeneous or p.weight() != self.weight:
            raise ValueError(f"expected homogeneous weight {self.weight}, got weights {sorted(p.weights())}")

    def _reduce(self, p: WordPoly) -> tuple[WordPoly, dict[str, Fraction]]:
        combo: dict[str, Fraction] = {}
        for pivot, row, row_combo in zip(self.pivots, self.rows, self._combos):
            c = p.coeff(pivot)
            if c:
                p = p - row.scale(c)
                for gid, rc in row_combo.items():
                    got = combo.get(gid, Fraction(0)) + c * rc
                    if got:
                        combo[gid] = got
                    else:
                        combo.pop(gid, None)
        return p, combo

    def insert(self, p: WordPoly, gen_id: str) -> bool:
        """Insert a generator; returns True iff the rank grew."""
        self._check_weight(p)
        residual, combo = self._reduce(p)
        if residual.is_zero:
            return False
        pivot = residual.leading_word()
        lead = residual.coeff(pivot)
        row = residual.scale(1 / lead)
        row_combo = {gid: -c / lead for gid, c in combo.items()}
        row_combo[gen_id] = row_combo.get(gen_id, Fraction(0)) + 1 / lead
        self._generators[gen_id] = p
        # keep the basis reduced: clear the new pivot from existing rows
        for i, other in enumerate(self.rows):
            c = other.coeff(pivot)
            if c:
                self.rows[i] = other - row.scale(c)
                oc = self._combos[i]
                for gid, rc in row_combo.items():
                    got = oc.get(gid, Fraction(0)) - c * rc
                    if got:
                        oc[gid] = got
                    else:
                        oc.pop(gid, None)
        at = 0
        while at < len(self.pivots) and self.pivots[at] < pivot:
            at += 1
        self.pivots.insert(at, pivot)
        self.rows.insert(at, row)
        self._combos.insert(at, row_combo)
        return True

    def member(self, p: WordPoly) -> MembershipCertificate:
        """Exact membership test; zero is a member of every basis."""
        if p.is_zero:
            return MembershipCertificate(member=True, coordinates=[])
        self._check_weight(p)
        residual, combo = self._reduce(p)
        if residual.is_zero:
            return MembershipCertificate(member=True, coordinates=sorted(combo.items()))
        return MembershipCertificate(member=False, residual=residual)

    def __repr__(self) -> str:
        return f"RowBasis(weight={self.weight}, dim={self.dim})"


def kawashima_generator(u: Word | WordPoly, v: Word | WordPoly) -> WordPoly:
    """phi(u * v) x for u, v in yH; the argument of the vanishing linear relation."""
    u = WordPoly.from_word(u) if isinstance(u, Word) else u
    v = WordPoly.from_word(v) if isinstance(v, Word) else v
    if u.is_zero or v.is_zero:
        raise ValueError("generator arguments must be nonzero")
    if not (subspace_test(u, "yH") and subspace_test(v, "yH")):
        raise ValueError("generator arguments must lie in yH")
    return maps.phi(products.harmonic(u, v)) * WordPoly.from_letters("x")


def reduce_to_basis(w1: Word, w2: Word) -> WordPoly:
    """tau(w1) <> w2, the combination w with f(y w1, w2 x) = f(y, w x)."""
    return products.diamond(maps.tau(w1), WordPoly.from_word(w2))


def _gen_a1(weight: int):
    for a in range(1, weight - 1):
        for u in yh_words(a):
            for v in yh_words(weight - 1 - a):
                if u <= v:
                    yield f"A1({u},{v})", kawashima_generator(u, v)


def _gen_a2(weight: int):
    x = WordPoly.from_letters("x")
    for a in range(1, weight - 1):
        for u in yh_words(a):
            for v in yh_words(weight - 1 - a):
                if u <= v:
                    yield f"A2({u},{v})", products.diamond(u, v) * x


def _a34_element(m: int, w1: Word, w2: Word) -> WordPoly:
    y = WordPoly.from_letters("y")
    x = WordPoly.from_letters("x")
    zm = maps.z_power(m)
    left = y * WordPoly.from_word(w1) * zm * WordPoly.from_word(w2) * x
    right = y * zm * products.diamond(maps.tau(w1), WordPoly.from_word(w2)) * x
    return left - right


def _gen_a3(weight: int):
    # w1 = 1 is skipped: tau(1) <> w2 = w2 makes the element vanish
    for m in range(0, weight - 2):
        budget = weight - 2 - m
        for a in range(1, budget + 1):
            for w1 in words_of_weight(a):
                for w2 in words_of_weight(budget - a):
                    yield f"A3({m};{w1},{w2})", _a34_element(m, w1, w2)


def _gen_a4(weight: int):
    for a in range(1, weight - 1):
        for w1 in words_of_weight(a):
            for w2 in words_of_weight(weight - 2 - a):
                yield f"A4({w1},{w2})", _a34_element(0, w1, w2)


_GENERATORS = {"A1": _gen_a1, "A2": _gen_a2, "A3": _gen_a3, "A4": _gen_a4}


@lru_cache(maxsize=None)
def graded_span(set_id: str, weight: int) -> RowBasis:
    """Echelon basis of the named family at the given weight.

    Weights below 3 give the zero grade: an empty basis (every family element
    there vanishes identically).  Enumeration is exhaustive over the weight
    budget, deduplicated by echelon insertion.
    """
    if set_id not in _GENERATORS:
        raise ValueError(f"unknown generator family {set_id!r}; expected one of {SPAN_IDS}")
    basis = RowBasis(weight)
    if weight < 3:
        return basis
    for gen_id, p in _GENERATORS[set_id](weight):
        if not subspace_test(p, "yHx"):  # pragma: no cover - defends the family defs
            raise AssertionError(f"generator {gen_id} left the admissible subspace")
        basis.insert(p, gen_id)
    return basis


def member(basis: RowBasis, p: WordPoly) -> MembershipCertificate:
    return basis.member(p)


def check_graded_equality(weight: int) -> dict:
    """Mutual-inclusion check of A1..A4 at one weight.

    Returns {weight, sets: [{id, dim, pivots}], equal, witnesses}; witnesses
    lists, for every failed inclusion, the source family, target family and
    the offending basis row rendered as text.
    """
    bases = {sid: graded_span(sid, weight) for sid in SPAN_IDS}
    witnesses: list[dict] = []
    for src, dst in itertools.permutations(SPAN_IDS, 2):
        for row in bases[src].rows:
            if not bases[dst].member(row).member:
                witnesses.append({"from": src, "to": dst, "row": str(row)})
    return {
        "weight": weight,
        "sets": [
            {"id": sid, "dim": bases[sid].dim, "pivots": [str(w) for w in bases[sid].pivots]}
            for sid in SPAN_IDS
        ],
        "equal": not witnesses,
        "witnesses": witnesses,
    }


def duality_residual(w: Word) -> WordPoly:
    """w - tau(w) for admissible w; lies in the A4 span of the same weight."""
    if not w.is_admissible:
        raise ValueError(f"duality residual needs an admissible word, got {w}")
    return WordPoly.from_word(w) - maps.tau(w)


def derivation_residual(l: int, w: Word) -> WordPoly:
    """The order-l derivation applied to admissible w; lies in A4 at weight + l."""
    if not w.is_admissible:
        raise ValueError(f"derivation residual needs an admissible word, got {w}")
    return maps.derivation(l, WordPoly.from_word(w))
