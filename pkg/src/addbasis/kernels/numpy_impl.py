"""Pure numpy kernels.

Subsets of Z/g are bitmasks: bit r set means residue r belongs to the set.
Masks fit in int64 for every modulus these sweeps accept (g <= 16). All
sweeps return int64 result vectors so both backends share one contract:

    pair_sweep   -> [ineq_viol, prop2_viol, stab_viol, first_b, first_c, pairs]
    triple_sweep -> [viol, first_b1, first_b2, first_b3, triples]
    lemma1_sweep -> [viol, first_mask, masks]

first_* fields are -1 when no violation was seen.
"""

from __future__ import annotations

import numpy as np


def _divisors(g: int) -> list[int]:
    return [d for d in range(1, g + 1) if g % d == 0]


def _popcount_table(g: int) -> np.ndarray:
    n = 1 << g
    pc = np.zeros(n, dtype=np.int64)
    for i in range(1, n):
        pc[i] = pc[i >> 1] + (i & 1)
    return pc


def _rotation_table(g: int) -> np.ndarray:
    """rot[i, m] = mask of (set m) + i in Z/g, for every mask m."""
    full = (1 << g) - 1
    masks = np.arange(full + 1, dtype=np.int64)
    rot = np.empty((g, full + 1), dtype=np.int64)
    rot[0] = masks
    for i in range(1, g):
        rot[i] = ((masks << i) | (masks >> (g - i))) & full
    return rot


def window_sumset(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Boolean sumset of two window indicator vectors.

    out[k] is True iff a[i] and b[j] for some i + j = k. Output length is
    len(a) + len(b) - 1. Representation counts are bounded by the shorter
    operand, so integer convolution is exact.
    """
    if a.size == 0 or b.size == 0:
        return np.zeros(0, dtype=np.bool_)
    return np.convolve(a.astype(np.int64), b.astype(np.int64)) > 0


def pair_sweep(g: int) -> np.ndarray:
    """Check every pair of nonempty B, C <= Z/g.

    Verifies, with H the stabilizer of B+C:
      - |B+C| >= |B+H| + |C+H| - |H| and (B+C)+H == B+C,
      - B+C non-degenerate implies B and C non-degenerate,
      - stab(B) + stab(C) <= stab(B+C).
    """
    full = (1 << g) - 1
    masks = np.arange(full + 1, dtype=np.int64)
    rot = _rotation_table(g)
    pc = _popcount_table(g)
    divisors = _divisors(g)

    # smallest stabilizing divisor per mask; g itself means trivial stabilizer
    gen = np.full(full + 1, g, dtype=np.int64)
    for d in reversed(divisors[:-1]):
        gen = np.where(rot[d] == masks, d, gen)

    # sat[d][m] = mask of (set m) + subgroup generated by d
    sat = {}
    for d in divisors:
        s = masks.copy()
        for k in range(d, g, d):
            s |= rot[k]
        sat[d] = s

    cs = masks[1:]
    gen_c = gen[1:]
    ineq_viol = 0
    prop2_viol = 0
    stab_viol = 0
    first_b = np.int64(-1)
    first_c = np.int64(-1)
    pairs = 0
    for b in range(1, full + 1):
        s = np.zeros(full, dtype=np.int64)
        for i in range(g):
            if (b >> i) & 1:
                s |= rot[i][1:]
        d0 = gen[s]
        bad = np.zeros(full, dtype=bool)
        for d in divisors:
            idx = d0 == d
            if not idx.any():
                continue
            si = s[idx]
            ok = (pc[si] >= pc[sat[d][b]] + pc[sat[d][cs[idx]]] - g // d) & (
                sat[d][si] == si
            )
            bad[idx] = ~ok
        ineq_viol += int(bad.sum())

        p2 = (d0 == g) & ((gen[b] != g) | (gen_c != g))
        prop2_viol += int(p2.sum())

        sc = np.gcd(gen[b], gen_c) % d0 != 0
        stab_viol += int(sc.sum())

        any_bad = bad | p2 | sc
        if first_b < 0 and any_bad.any():
            first_b = np.int64(b)
            first_c = cs[int(np.argmax(any_bad))]
        pairs += full

    return np.array(
        [ineq_viol, prop2_viol, stab_viol, first_b, first_c, pairs], dtype=np.int64
    )


def triple_sweep(g: int) -> np.ndarray:
    """Check |B1+B2+B3| >= |B1|+|B2|+|B3| - 2 whenever B1+B2+B3 is
    non-degenerate, over all triples of nonempty subsets of Z/g."""
    full = (1 << g) - 1
    rot = _rotation_table(g)
    pc = _popcount_table(g)
    divisors = _divisors(g)
    masks = np.arange(full + 1, dtype=np.int64)
    gen = np.full(full + 1, g, dtype=np.int64)
    for d in reversed(divisors[:-1]):
        gen = np.where(rot[d] == masks, d, gen)

    bs = masks[1:]
    viol = 0
    first = np.full(3, -1, dtype=np.int64)
    triples = 0
    for b1 in range(1, full + 1):
        p1 = int(pc[b1])
        for b2 in range(1, full + 1):
            s12 = 0
            for i in range(g):
                if (b1 >> i) & 1:
                    s12 |= int(rot[i][b2])
            s = np.zeros(full, dtype=np.int64)
            for i in range(g):
                if (s12 >> i) & 1:
                    s |= rot[i][1:]
            nondeg = gen[s] == g
            bad = nondeg & (pc[s] < p1 + int(pc[b2]) + pc[bs] - 2)
            viol += int(bad.sum())
            if first[0] < 0 and bad.any():
                first[:] = (b1, b2, int(bs[int(np.argmax(bad))]))
            triples += full
    return np.array([viol, first[0], first[1], first[2], triples], dtype=np.int64)


def lemma1_sweep(g: int) -> np.ndarray:
    """Check the fold-size profile shape for every nonempty B <= Z/g.

    u_r = |rB| (u_0 = 1) must strictly increase up to the first repeat and
    stay constant afterward.
    """
    full = (1 << g) - 1
    rot = _rotation_table(g)
    pc = _popcount_table(g)
    bs = np.arange(1, full + 1, dtype=np.int64)

    cur = np.ones(full, dtype=np.int64)  # 0B = {0} for every B
    prev_sizes = pc[cur]
    stabilized = np.zeros(full, dtype=bool)
    bad = np.zeros(full, dtype=bool)
    for _ in range(g + 2):
        nxt = np.zeros(full, dtype=np.int64)
        for i in range(g):
            sel = ((bs >> i) & 1).astype(bool)
            nxt[sel] |= rot[i][cur[sel]]
        sizes = pc[nxt]
        bad |= stabilized & (sizes != prev_sizes)
        bad |= ~stabilized & (sizes < prev_sizes)
        stabilized |= sizes == prev_sizes
        cur = nxt
        prev_sizes = sizes
    bad |= ~stabilized

    viol = int(bad.sum())
    first = int(bs[int(np.argmax(bad))]) if viol else -1
    return np.array([viol, first, full], dtype=np.int64)
