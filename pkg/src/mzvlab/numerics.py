"""Desk-scale numerical evaluation of nested sums and interpolation checks.

Float evaluations return a NumericReport whose error_estimate is the halving
difference |value(cutoff) - value(cutoff//2)|; converged means the estimate
met the requested tolerance.  Quantities that are finite sums (star_sum, h_n,
c2_coeff, small-cutoff zeta partial sums) also exist in exact rational form.

Index arguments accept any iterable of ints >= 1; see words.Index.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from . import kernels, maps
from .words import Index, Word, WordPoly, subspace_test, word_to_index

__all__ = [
    "NumericReport",
    "FamilySymbol",
    "DEFAULT_CUTOFF",
    "DIRICHLET_CUTOFF",
    "INNER_CUTOFF",
    "DEFAULT_TOL",
    "zeta_eval",
    "zeta_partial_exact",
    "z_eval_poly",
    "f_component",
    "star_sum",
    "h_n",
    "h_n_poly",
    "c2_coeff",
    "c2_identity_check",
    "c1_coeff",
    "l_partial",
    "kawashima_f",
    "kawashima_a1",
]

DEFAULT_CUTOFF = 2 ** 20
DIRICHLET_CUTOFF = 2 ** 16
INNER_CUTOFF = 2 ** 14
DEFAULT_TOL = 1e-6


@dataclass
class NumericReport:
    """A float value with its truncation point and halving error estimate."""

    value: float
    cutoff: int
    error_estimate: float
    converged: bool

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "cutoff": self.cutoff,
            "error_estimate": self.error_estimate,
            "converged": self.converged,
        }


@dataclass
class FamilySymbol:
    """The triple (A, B, s) naming the family member Z(A (x+y)^s B).

    A must lie in yH and B in Hx, so every expanded word is admissible.
    """

    a: WordPoly
    b: WordPoly
    s: int

    def __post_init__(self):
        if not subspace_test(self.a, "yH"):
            raise ValueError("A must lie in yH (every word starting with y)")
        if not subspace_test(self.b, "Hx"):
            raise ValueError("B must lie in Hx (every word ending with x)")
        if self.s < 0:
            raise ValueError("s must be >= 0")

    def expand(self) -> WordPoly:
        return self.a * maps.z_power(self.s) * self.b


def _index(k: Iterable[int]) -> Index:
    return k if isinstance(k, Index) else Index(k)


def _report(value: float, half: float, cutoff: int, tol: float) -> NumericReport:
    err = abs(value - half)
    return NumericReport(value=value, cutoff=cutoff, error_estimate=err, converged=err <= tol)


# -- exact rational sums -------------------------------------------------------


def zeta_partial_exact(k: Iterable[int], n: int) -> Fraction:
    """Exact partial sum over chains 1 <= n1 < ... < nr <= n; meant for small n."""
    k = _index(k)
    if not k:
        return Fraction(1)
    if n <= 0:
        return Fraction(0)
    cur = [Fraction(0)] * (n + 1)
    for t in range(1, n + 1):
        cur[t] = Fraction(1, t ** k[0])
    for kj in k[1:]:
        acc = Fraction(0)
        for t in range(1, n + 1):
            prev = cur[t]
            cur[t] = acc / t ** kj
            acc += prev
    return sum(cur[1:], Fraction(0))


def star_sum(k: Iterable[int], n: int) -> Fraction:
    """Exact sum over weakly increasing chains 1 <= n1 <= ... <= nr <= n."""
    k = _index(k)
    if not k:
        return Fraction(1)
    if n <= 0:
        return Fraction(0)
    cur = [Fraction(0)] * (n + 1)
    for t in range(1, n + 1):
        cur[t] = Fraction(1, t ** k[0])
    for kj in k[1:]:
        acc = Fraction(0)
        for t in range(1, n + 1):
            acc += cur[t]
            cur[t] = acc / t ** kj
    return sum(cur[1:], Fraction(0))


def h_n(k: Iterable[int], n: int) -> Fraction:
    """Exact sum over strict chains 0 < n1 < ... < nr = n (top pinned at n)."""
    k = _index(k)
    if not k:
        raise ValueError("h_n needs a nonempty index")
    if n <= 0:
        return Fraction(0)
    return zeta_partial_exact(k[:-1], n - 1) / Fraction(n ** k[-1])


def h_n_poly(p: WordPoly, n: int) -> Fraction:
    """h_n extended linearly over a polynomial in yH."""
    if not subspace_test(p, "yH"):
        raise ValueError("h_n_poly requires every support word to start with y")
    return sum((c * h_n(word_to_index(w), n) for w, c in p.terms()), Fraction(0))


def c2_coeff(k: Iterable[int], n: int) -> Fraction:
    """Exact Dirichlet coefficient over chains n = n1 > n2 > ... > nr > 0,
    weighted by 1/(n1^(k1+1) n2^k2 ... nr^kr)."""
    k = _index(k)
    if not k:
        raise ValueError("c2_coeff needs a nonempty index")
    if n <= 0:
        raise ValueError("n must be >= 1")
    rest = Index(reversed(k[1:]))
    return zeta_partial_exact(rest, n - 1) / Fraction(n ** (k[0] + 1))


def c2_identity_check(w: Word | WordPoly, n: int) -> bool:
    """Exact equality of the two c2 evaluations for w in Hx.

    Path one decomposes w over the (x+y)-power basis and sums c2_coeff; path
    two evaluates h_n(tau(s1_inv(w)))/n.
    """
    p = WordPoly.from_word(w) if isinstance(w, Word) else w
    direct = sum((c * c2_coeff(idx, n) for idx, c in maps.z_basis_decompose(p)), Fraction(0))
    dual = h_n_poly(maps.tau(maps.s1_inv(p)), n) / n
    return direct == dual


# -- float evaluations ---------------------------------------------------------


def _hurwitz_tail_series(series: dict[int, float], k: int) -> dict[int, float]:
    """Apply W'(v) = sum_{u>v} W(u) / u^k to an asymptotic series in 1/v.

    ``series`` maps exponent a to the coefficient of v^-a.  Each term becomes
    a shifted power sum with Euler-Maclaurin expansion

        sum_{u>v} u^-p = v^(1-p)/(p-1) - v^-p/2 + p v^-(p+1)/12
                          - p(p+1)(p+2) v^-(p+3)/720 + O(v^-(p+5)).

    Admissibility guarantees p >= 2 throughout.  The result is truncated
    three orders past its leading exponent; at the cutoffs used here the
    dropped terms are far below double precision.
    """
    out: dict[int, float] = {}

    def add(e: int, c: float) -> None:
        out[e] = out.get(e, 0.0) + c

    for a, c in series.items():
        p = a + k
        add(p - 1, c / (p - 1))
        add(p, -c / 2.0)
        add(p + 1, c * p / 12.0)
        add(p + 3, -c * p * (p + 1) * (p + 2) / 720.0)
    lead = min(e for e, c in out.items() if c)
    return {e: c for e, c in out.items() if c and e <= lead + 3}


def _zeta_tail(k: tuple, n: int, level_sums) -> float:
    """Analytic remainder of the strict-chain DP beyond cutoff n.

    Splitting each level's prefix sum at the cutoff and swapping summation
    order gives the exact identity  T = sum_i S_{i-1}(n) * W_i(n),  where
    S_i(n) is level i's cumulative total (S_0 = 1) and W_i is the weight 1
    pushed through Hurwitz tail transforms for parts k_r, ..., k_i.  Only the
    truncated Euler-Maclaurin expansions are approximate.
    """
    series = {0: 1.0}
    total = 0.0
    for i in range(len(k), 0, -1):
        series = _hurwitz_tail_series(series, k[i - 1])
        value = sum(c * float(n) ** -e for e, c in series.items())
        s_prev = 1.0 if i == 1 else float(level_sums[i - 2])
        total += s_prev * value
    return total


@lru_cache(maxsize=None)
def _zeta_float(k: tuple, cutoff: int) -> float:
    sums = kernels.zeta_level_sums(kernels.as_ks(k), cutoff)
    return float(sums[-1]) + _zeta_tail(k, cutoff, sums)


def zeta_eval(k: Iterable[int], cutoff: int | None = None, tol: float | None = None) -> NumericReport:
    """Nested-sum evaluation: DP truncated at the cutoff plus analytic tail.

    The raw partial sum alone converges like polylog(cutoff)/cutoff, too slow
    for tight tolerances at practical cutoffs, so the remainder is restored
    from the DP's own level sums (see _zeta_tail).  The halving estimate then
    reflects the accuracy of the corrected value, not the raw truncation.
    """
    k = _index(k)
    if not k or not k.is_admissible:
        raise ValueError(f"index {k} is not admissible (needs k_r >= 2)")
    cutoff = DEFAULT_CUTOFF if cutoff is None else int(cutoff)
    tol = DEFAULT_TOL if tol is None else tol
    if cutoff < 2:
        raise ValueError("cutoff must be >= 2")
    value = _zeta_float(tuple(k), cutoff)
    half = _zeta_float(tuple(k), cutoff // 2)
    return _report(value, half, cutoff, tol)


def z_eval_poly(p: WordPoly, cutoff: int | None = None, tol: float | None = None) -> NumericReport:
    """Z extended linearly over a polynomial of admissible words.

    Error estimates add with absolute coefficients, so the report is a safe
    bound for the combination whenever each summand's estimate is.
    """
    cutoff = DEFAULT_CUTOFF if cutoff is None else int(cutoff)
    tol = DEFAULT_TOL if tol is None else tol
    if not subspace_test(p, "yHx"):
        raise ValueError("every support word must be admissible (start y, end x)")
    value = 0.0
    err = 0.0
    for w, c in p.terms():
        rep = zeta_eval(word_to_index(w), cutoff, tol)
        value += float(c) * rep.value
        err += abs(float(c)) * rep.error_estimate
    return NumericReport(value=value, cutoff=cutoff, error_estimate=err, converged=err <= tol)


def f_component(sym: FamilySymbol, cutoff: int | None = None, tol: float | None = None) -> NumericReport:
    """Z(A (x+y)^s B) for the given family symbol."""
    return z_eval_poly(sym.expand(), cutoff, tol)


def c1_coeff(k: Iterable[int], n: int, inner_cutoff: int | None = None, tol: float | None = None) -> NumericReport:
    """Dirichlet coefficient with the weakly increasing block truncated.

    All chain variables are capped at max(inner_cutoff, n); the halving
    estimate reruns the table at half the cap (never below n).
    """
    k = _index(k)
    if not k:
        raise ValueError("c1_coeff needs a nonempty index")
    if n <= 0:
        raise ValueError("n must be >= 1")
    inner = INNER_CUTOFF if inner_cutoff is None else int(inner_cutoff)
    tol = DEFAULT_TOL if tol is None else tol
    m = max(inner, n)
    half_m = max(m // 2, n)
    ks = kernels.as_ks(k)
    value = float(kernels.c1_table(ks, m)[n])
    half = float(kernels.c1_table(ks, half_m)[n])
    return _report(value, half, m, tol)


def l_partial(
    k: Iterable[int],
    s: int,
    cutoff: int | None = None,
    inner_cutoff: int | None = None,
    tol: float | None = None,
) -> tuple[NumericReport, NumericReport]:
    """Partial sums (L1, L2) of the two Dirichlet series at integer s >= 0.

    L1 sums c1(N)/N^s for N <= cutoff with the weakly increasing blocks
    truncated at max(cutoff, inner_cutoff); L2 sums the finite c2(N)/N^s.
    The identity Z(A (x+y)^s B) = L1(s) + s L2(s) links them to f_component.
    For s = 0 and slowly decaying c1 the halving estimate is honest but the
    convergence flag may stay False at desk cutoffs.
    """
    k = _index(k)
    if not k:
        raise ValueError("l_partial needs a nonempty index")
    if s < 0:
        raise ValueError("s must be >= 0")
    cutoff = DIRICHLET_CUTOFF if cutoff is None else int(cutoff)
    inner = INNER_CUTOFF if inner_cutoff is None else int(inner_cutoff)
    tol = DEFAULT_TOL if tol is None else tol
    if cutoff < 4:
        raise ValueError("cutoff must be >= 4")
    ks = kernels.as_ks(k)

    def partials(c: int) -> tuple[float, float]:
        m = max(c, inner if c == cutoff else inner // 2, 2)
        t1 = kernels.c1_table(ks, m)
        t2 = kernels.c2_table(ks, m)
        l1 = 0.0
        l2 = 0.0
        for n in range(1, c + 1):
            w = float(n) ** (-s) if s else 1.0
            l1 += w * float(t1[n])
            l2 += w * float(t2[n])
        return l1, l2

    v1, v2 = partials(cutoff)
    h1, h2 = partials(cutoff // 2)
    return (
        _report(v1, h1, cutoff, tol),
        _report(v2, h2, cutoff, tol),
    )


def kawashima_f(k: Iterable[int], z: float, cutoff: int | None = None, tol: float | None = None) -> NumericReport:
    """The interpolating function at real z > -1.

    At integers z = N >= 0 the truncated series resums exactly to star_sum(k, N)
    up to float rounding; elsewhere the truncation error decays like
    polylog(cutoff)/cutoff and shows up in the halving estimate.
    """
    k = _index(k)
    if not k:
        raise ValueError("kawashima_f needs a nonempty index")
    z = float(z)
    if z <= -1.0:
        raise ValueError("z must be > -1 (poles at negative integers)")
    cutoff = DEFAULT_CUTOFF if cutoff is None else int(cutoff)
    tol = DEFAULT_TOL if tol is None else tol
    floor_m = int(max(z, 0.0)) + 2
    m = max(cutoff, floor_m)
    half_m = max(m // 2, floor_m)
    ks = kernels.as_ks(k)
    value = kernels.kawashima_f_eval(ks, z, m)
    half = kernels.kawashima_f_eval(ks, z, half_m)
    return _report(value, half, m, tol)


def kawashima_a1(k: Iterable[int], n: int, cutoff: int | None = None, tol: float | None = None) -> NumericReport:
    """First Taylor coefficient of the interpolating function at integer n >= 0.

    The empty index gives exactly 0.  At n = 0 the value matches
    Z(s_map(y^(k1) x y^(k2-1) x ... y^(kr-1) x)) for admissible encodings.
    """
    k = _index(k)
    if n < 0:
        raise ValueError("n must be >= 0")
    cutoff = DEFAULT_CUTOFF if cutoff is None else int(cutoff)
    tol = DEFAULT_TOL if tol is None else tol
    if not k:
        return NumericReport(value=0.0, cutoff=cutoff, error_estimate=0.0, converged=True)
    m = max(cutoff, n + 2)
    half_m = max(m // 2, n + 2)
    ks = kernels.as_ks(k)
    value = float(kernels.a1_table(ks, m)[n])
    half = float(kernels.a1_table(ks, half_m)[n])
    return _report(value, half, m, tol)
