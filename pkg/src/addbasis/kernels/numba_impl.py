"""numba kernels. Same contracts as numpy_impl; see that module for the
result-vector layouts."""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def _rotl(m, i, g, full):
    if i == 0:
        return m
    return ((m << i) | (m >> (g - i))) & full


@njit(cache=True)
def _popcount(m):
    c = 0
    while m:
        m &= m - 1
        c += 1
    return c


@njit(cache=True)
def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


@njit(cache=True)
def _sum_mask(b, c, g, full):
    s = 0
    for i in range(g):
        if (b >> i) & 1:
            s |= _rotl(c, i, g, full)
    return s


@njit(cache=True)
def _divisor_array(g):
    n = 0
    for d in range(1, g + 1):
        if g % d == 0:
            n += 1
    out = np.empty(n, dtype=np.int64)
    j = 0
    for d in range(1, g + 1):
        if g % d == 0:
            out[j] = d
            j += 1
    return out


@njit(cache=True)
def _stab_gen(m, g, full, divisors):
    # smallest divisor d of g with (set m) + d == (set m); d == g always works
    for k in range(divisors.size):
        d = divisors[k]
        if _rotl(m, d, g, full) == m:
            return d
    return g


@njit(cache=True)
def _saturate(m, d, g, full):
    s = m
    k = d
    while k < g:
        s |= _rotl(m, k, g, full)
        k += d
    return s


@njit(cache=True)
def window_sumset(a, b):
    n = a.size
    m = b.size
    if n == 0 or m == 0:
        return np.zeros(0, dtype=np.bool_)
    out = np.zeros(n + m - 1, dtype=np.bool_)
    for i in range(n):
        if a[i]:
            for j in range(m):
                if b[j]:
                    out[i + j] = True
    return out


@njit(cache=True)
def pair_sweep(g):
    full = (1 << g) - 1
    divisors = _divisor_array(g)
    gen_all = np.empty(full + 1, dtype=np.int64)
    for m in range(full + 1):
        gen_all[m] = _stab_gen(m, g, full, divisors)

    ineq = 0
    prop2 = 0
    stab = 0
    fb = -1
    fc = -1
    pairs = 0
    for b in range(1, full + 1):
        gb = gen_all[b]
        for c in range(1, full + 1):
            pairs += 1
            s = _sum_mask(b, c, g, full)
            d0 = gen_all[s]
            bad1 = _popcount(s) < _popcount(_saturate(b, d0, g, full)) + _popcount(
                _saturate(c, d0, g, full)
            ) - g // d0
            if _saturate(s, d0, g, full) != s:
                bad1 = True
            gc = gen_all[c]
            bad2 = d0 == g and (gb != g or gc != g)
            bad3 = _gcd(gb, gc) % d0 != 0
            if bad1:
                ineq += 1
            if bad2:
                prop2 += 1
            if bad3:
                stab += 1
            if (bad1 or bad2 or bad3) and fb < 0:
                fb = b
                fc = c
    return np.array([ineq, prop2, stab, fb, fc, pairs], dtype=np.int64)


@njit(cache=True)
def triple_sweep(g):
    full = (1 << g) - 1
    divisors = _divisor_array(g)
    viol = 0
    f1 = -1
    f2 = -1
    f3 = -1
    triples = 0
    for b1 in range(1, full + 1):
        p1 = _popcount(b1)
        for b2 in range(1, full + 1):
            s12 = _sum_mask(b1, b2, g, full)
            p2 = _popcount(b2)
            for b3 in range(1, full + 1):
                triples += 1
                s = _sum_mask(s12, b3, g, full)
                if _stab_gen(s, g, full, divisors) == g:
                    if _popcount(s) < p1 + p2 + _popcount(b3) - 2:
                        viol += 1
                        if f1 < 0:
                            f1 = b1
                            f2 = b2
                            f3 = b3
    return np.array([viol, f1, f2, f3, triples], dtype=np.int64)


@njit(cache=True)
def lemma1_sweep(g):
    full = (1 << g) - 1
    viol = 0
    first = -1
    for b in range(1, full + 1):
        cur = 1
        prev = 1
        stabilized = False
        bad = False
        for _ in range(g + 2):
            nxt = _sum_mask(b, cur, g, full)
            sz = _popcount(nxt)
            if stabilized and sz != prev:
                bad = True
            if not stabilized and sz < prev:
                bad = True
            if sz == prev:
                stabilized = True
            cur = nxt
            prev = sz
        if not stabilized:
            bad = True
        if bad:
            viol += 1
            if first < 0:
                first = b
    return np.array([viol, first, full], dtype=np.int64)


def warmup():
    """Trigger jit compilation of every kernel on tiny inputs."""
    window_sumset(np.array([True, False]), np.array([True]))
    pair_sweep(2)
    triple_sweep(2)
    lemma1_sweep(2)
