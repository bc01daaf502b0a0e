"""numba @njit implementations of the nested-sum kernels.

Same contract as numpy_backend: ``ks`` int64 array, float64 results, table
entry 0 unused.  Loops are written sequentially so each kernel compiles to a
single pass per level; the first call pays the JIT cost (disk-cached
afterwards).  Exponents are small integers, so reciprocal powers use repeated
multiplication rather than libm pow — this is what makes the scalar loops
competitive with (and faster than) vectorized numpy.
"""

from __future__ import annotations

import math

import numpy as np
from numba import njit


@njit(inline="always")
def _rpow(t: float, k: int) -> float:
    # 1 / t**k for integer k >= 1
    p = t
    for _ in range(k - 1):
        p *= t
    return 1.0 / p


@njit(cache=True)
def zeta_level_sums(ks: np.ndarray, n: int) -> np.ndarray:
    # S_i(n) for i = 1..r: each DP level's cumulative total at the cutoff,
    # needed by the analytic tail correction as well as the plain partial sum.
    out = np.zeros(len(ks))
    if n <= 0:
        return out
    cur = np.empty(n + 1)
    cur[0] = 0.0
    k0 = ks[0]
    total = 0.0
    for t in range(1, n + 1):
        cur[t] = _rpow(float(t), k0)
        total += cur[t]
    out[0] = total
    for j in range(1, len(ks)):
        kj = ks[j]
        acc = 0.0
        total = 0.0
        for t in range(1, n + 1):
            prev = cur[t]
            cur[t] = acc * _rpow(float(t), kj)
            acc += prev
            total += cur[t]
        out[j] = total
    return out


@njit(cache=True)
def zeta_partial(ks: np.ndarray, n: int) -> float:
    if n <= 0:
        return 0.0
    return zeta_level_sums(ks, n)[len(ks) - 1]


@njit(cache=True)
def star_partial(ks: np.ndarray, n: int) -> float:
    if n <= 0:
        return 0.0
    cur = np.empty(n + 1)
    cur[0] = 0.0
    k0 = ks[0]
    for t in range(1, n + 1):
        cur[t] = _rpow(float(t), k0)
    for j in range(1, len(ks)):
        kj = ks[j]
        acc = 0.0
        for t in range(1, n + 1):
            acc += cur[t]
            cur[t] = acc * _rpow(float(t), kj)
    total = 0.0
    for t in range(1, n + 1):
        total += cur[t]
    return total


@njit(cache=True)
def c2_table(ks: np.ndarray, m: int) -> np.ndarray:
    e = np.ones(m + 1)
    for j in range(len(ks) - 1, 0, -1):
        kj = ks[j]
        acc = 0.0
        e[0] = 0.0
        for t in range(1, m + 1):
            prev = e[t] * _rpow(float(t), kj)
            e[t] = acc
            acc += prev
    k1 = ks[0] + 1
    out = np.zeros(m + 1)
    for t in range(1, m + 1):
        out[t] = e[t] * _rpow(float(t), k1)
    return out


@njit(cache=True)
def c1_table(ks: np.ndarray, m: int) -> np.ndarray:
    r = len(ks)
    out = np.zeros(m + 1)
    e = np.empty(m + 1)
    s = np.empty(m + 1)
    for j in range(1, r + 1):
        for t in range(m + 1):
            e[t] = 1.0
        # strictly decreasing part below n_j, parts k_r down to k_{j+1}
        for i in range(r - 1, j - 1, -1):
            ki = ks[i]
            acc = 0.0
            e[0] = 0.0
            for t in range(1, m + 1):
                prev = e[t] * _rpow(float(t), ki)
                e[t] = acc
                acc += prev
        kj = float(ks[j - 1])
        s[0] = 0.0
        for t in range(1, m + 1):
            s[t] = kj * _rpow(float(t), ks[j - 1] + 1) * e[t]
        if j > 1:
            # weakly increasing block down to n_2, then the n_1 = N weight
            for i in range(j - 2, 0, -1):
                ki = ks[i]
                acc = 0.0
                for t in range(m, 0, -1):
                    acc += s[t]
                    s[t] = acc * _rpow(float(t), ki)
            k1 = ks[0]
            acc = 0.0
            for t in range(m, 0, -1):
                acc += s[t]
                s[t] = acc * _rpow(float(t), k1)
        sign = 1.0 if (r - j) % 2 == 0 else -1.0
        for t in range(1, m + 1):
            out[t] += sign * s[t]
    return out


@njit(cache=True)
def a1_table(ks: np.ndarray, m: int) -> np.ndarray:
    p = np.zeros(m + 1)
    p[0] = 1.0
    d = np.zeros(m + 1)
    starcum = np.empty(m + 1)
    body = np.empty(m + 1)
    for j in range(len(ks)):
        k = ks[j]
        kf = float(k)
        acc = 0.0
        for t in range(m + 1):
            acc += p[t]
            starcum[t] = acc
        for t in range(1, m + 1):
            tf = float(t)
            body[t] = kf * starcum[t] * _rpow(tf, k + 1) - d[t] * _rpow(tf, k)
        acc = 0.0
        d[m] = 0.0
        for t in range(m, 0, -1):
            acc += body[t]
            d[t - 1] = acc
        for t in range(1, m + 1):
            p[t] = starcum[t] * _rpow(float(t), k)
        p[0] = 0.0
    return d


@njit(cache=True)
def kawashima_f_eval(ks: np.ndarray, z: float, m: int) -> float:
    if m < 2:
        raise ValueError("cutoff too small")
    is_int = z >= 0.0 and z == math.floor(z)
    nz = int(z) if is_int else 0
    if m <= nz:
        raise ValueError("cutoff must exceed integer z")
    jmax = m - nz
    g = np.ones(m + 1)
    p = np.zeros(m + 1)
    p[0] = 1.0
    c = np.empty(m + 1)
    for i in range(len(ks)):
        k = ks[i]
        # star level: p <- cumsum(p) * t^-k, tracking the level total
        acc = 0.0
        star_m = 0.0
        for t in range(m + 1):
            acc += p[t]
            if t == 0:
                p[t] = 0.0
            else:
                p[t] = acc * _rpow(float(t), k)
                star_m += p[t]
        # prefix sums of g[t] / (z+t)^k
        c[0] = 0.0
        for t in range(1, m + 1):
            c[t] = c[t - 1] + g[t] * _rpow(z + float(t), k)
        cm = c[jmax]
        for t in range(jmax + 1):
            g[t] = star_m - (cm - c[t])
        for t in range(jmax + 1, m + 1):
            g[t] = 0.0
    return g[0]
