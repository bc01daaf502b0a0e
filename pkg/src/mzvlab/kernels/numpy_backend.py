"""Vectorized numpy implementations of the nested-sum kernels.

Shared contract for every kernel: ``ks`` is a nonempty int64 array of index
parts (>= 1), sizes are plain ints, results are float64.  Tables are indexed
by the summation variable; entry 0 is unused and set to 0.
"""

from __future__ import annotations

import math

import numpy as np


def _inv_powers(m: int, k: float) -> np.ndarray:
    # t^-k for t = 0..m with a safe dummy at t = 0
    t = np.arange(m + 1, dtype=np.float64)
    t[0] = 1.0
    out = t ** (-k)
    out[0] = 0.0
    return out


def zeta_partial(ks: np.ndarray, n: int) -> float:
    """Partial sum over strictly increasing chains 1 <= n1 < ... < nr <= n."""
    return float(zeta_level_sums(ks, n)[-1])


def zeta_level_sums(ks: np.ndarray, n: int) -> np.ndarray:
    """Per-level cumulative sums S_i(n) of the strict-chain DP, i = 1..r.

    S_i(n) sums all chains n1 < ... < ni <= n over the first i parts; the last
    entry is the full partial sum.  Used both directly and by the analytic
    tail correction, which needs every level's total at the cutoff.
    """
    out = np.zeros(len(ks))
    if n <= 0:
        return out
    cur = _inv_powers(n, float(ks[0]))[1:]
    out[0] = cur.sum()
    for i, k in enumerate(ks[1:], start=1):
        pref = np.empty_like(cur)
        pref[0] = 0.0
        np.cumsum(cur[:-1], out=pref[1:])
        cur = pref * _inv_powers(n, float(k))[1:]
        out[i] = cur.sum()
    return out


def star_partial(ks: np.ndarray, n: int) -> float:
    """Partial sum over weakly increasing chains 1 <= n1 <= ... <= nr <= n."""
    if n <= 0:
        return 0.0
    cur = _inv_powers(n, float(ks[0]))[1:]
    for k in ks[1:]:
        cur = np.cumsum(cur) * _inv_powers(n, float(k))[1:]
    return float(cur.sum())


def c2_table(ks: np.ndarray, m: int) -> np.ndarray:
    """c2[N] for N = 1..m: chains N = n1 > n2 > ... > nr > 0 weighted by
    1/(n1 * n1^k1 * n2^k2 * ...); finite, no truncation."""
    e = np.ones(m + 1)
    for k in ks[:0:-1]:  # k_r down to k_2
        g = e * _inv_powers(m, float(k))
        e = np.concatenate(([0.0], np.cumsum(g[:-1])))  # strictly below N
    out = e * _inv_powers(m, float(ks[0]) + 1.0)
    return out


def c1_table(ks: np.ndarray, m: int) -> np.ndarray:
    """c1[N] for N = 1..m with every chain variable truncated at m.

    c1(N) = sum_j (-1)^(r-j) k_j * sum over chains
            N = n1 <= ... <= nj > n_{j+1} > ... > nr > 0
            of 1/(n_j * n1^k1 * ... * nr^kr).
    """
    r = len(ks)
    out = np.zeros(m + 1)
    for j in range(1, r + 1):
        # strictly decreasing part below n_j, over parts k_{j+1}..k_r
        e = np.ones(m + 1)
        for k in ks[:j - 1:-1]:
            g = e * _inv_powers(m, float(k))
            e = np.concatenate(([0.0], np.cumsum(g[:-1])))
        w = float(ks[j - 1]) * _inv_powers(m, float(ks[j - 1]) + 1.0) * e
        if j == 1:
            contrib = w
        else:
            s = w
            for k in ks[j - 2:0:-1]:  # k_{j-1} down to k_2
                suf = np.cumsum(s[::-1])[::-1]  # sum over t' >= t
                s = suf * _inv_powers(m, float(k))
            contrib = np.cumsum(s[::-1])[::-1] * _inv_powers(m, float(ks[0]))
        if (r - j) % 2:
            out -= contrib
        else:
            out += contrib
    out[0] = 0.0
    return out


def a1_table(ks: np.ndarray, m: int) -> np.ndarray:
    """First Taylor coefficient table D[n], n = 0..m, truncated at m.

    D_i(n) = sum_{t>n} k_i * Star_{i-1}(t) / t^(k_i+1)
           - sum_{t>n} D_{i-1}(t) / t^k_i,        D_0 = 0.
    Star_{i-1}(t) is the weakly increasing chain sum over the first i-1 parts.
    """
    p = np.zeros(m + 1)
    p[0] = 1.0  # chain-top array of the empty index
    d = np.zeros(m + 1)
    for k in ks:
        k = float(k)
        starcum = np.cumsum(p)
        body = k * starcum * _inv_powers(m, k + 1.0) - d * _inv_powers(m, k)
        suf = np.cumsum(body[::-1])[::-1]
        d = np.concatenate((suf[1:], [0.0]))  # exclusive: sum over t > n
        p = starcum * _inv_powers(m, k)
    return d


def kawashima_f_eval(ks: np.ndarray, z: float, m: int) -> float:
    """Truncated series value of the interpolating function at z > -1.

    Level arrays live on the lattice z + j; each level is the backward
    resummation of the defining series truncated at m.  For integer z >= 0
    the resummation telescopes exactly, so the value is exact up to float
    rounding for any m > z; elsewhere the truncation error decays like
    polylog(m)/m and is reported via the caller's halving estimate.
    """
    if m < 2:
        raise ValueError("cutoff too small")
    is_int = z >= 0.0 and z == math.floor(z)
    nz = int(z) if is_int else 0
    if m <= nz:
        raise ValueError("cutoff must exceed integer z")
    t = np.arange(m + 1, dtype=np.float64)
    zt = z + t
    zt[0] = 1.0  # dummy; entry 0 is never a summation point
    g = np.ones(m + 1)
    p = np.zeros(m + 1)
    p[0] = 1.0
    for k in ks:
        k = float(k)
        p = np.cumsum(p) * _inv_powers(m, k)
        star_m = float(p.sum())
        ghat = g * zt ** (-k)
        ghat[0] = 0.0
        c = np.cumsum(ghat)
        jmax = m - nz
        gnew = np.zeros(m + 1)
        gnew[: jmax + 1] = star_m - (c[jmax] - c[: jmax + 1])
        g = gnew
    return float(g[0])
