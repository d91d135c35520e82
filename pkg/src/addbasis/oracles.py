"""Independent brute-force oracles for cross-checking the set engine.

Everything in this module works from first principles: raw literal
dicts, membership predicates, and plain integer bitmasks.  Nothing here
calls the canonicalization, sumset, or order machinery in
:mod:`addbasis.intset` / :mod:`addbasis.basis`, so an agreement between
the two paths is evidence rather than tautology.

Membership convention for a raw literal ``{"exceptional": E,
"threshold": T, "modulus": g, "residues": R}``:

    x in S  <=>  x in E  or  (x >= T and x mod g in R)

with no normalization applied (duplicate residues, residues of a
non-minimal modulus, exceptional elements above the threshold are all
taken at face value).

The order oracle represents an n-fold sumset as a Python int used as a
bit vector.  Bit i of the mask at fold n stands for the integer
``i + n*lo`` where lo = min(A).  Sums that can no longer fall back into
[0, window] even with all remaining summands at the minimum are
truncated each round, which keeps masks around ``window + cap*|lo|``
bits.
"""

from __future__ import annotations

from typing import Callable, Iterable

__all__ = [
    "raw_contains",
    "raw_elements",
    "brute_pair_sums",
    "order_bitset",
]


def raw_contains(raw: dict, x: int) -> bool:
    """Membership in an eventually periodic literal, no canonicalization."""
    if x in raw.get("exceptional", ()):
        return True
    residues = raw.get("residues", ())
    g = raw.get("modulus", 1)
    if not residues:
        return False
    return x >= raw["threshold"] and x % g in residues


def raw_elements(raw: dict, lo: int, hi: int) -> list:
    """All members of the literal in [lo, hi), ascending."""
    return [x for x in range(lo, hi) if raw_contains(raw, x)]


def brute_pair_sums(xs: Iterable[int], ys: Iterable[int], lo: int, hi: int) -> list:
    """Sorted pairwise sums x+y that land in [lo, hi).

    The inputs must already contain every element that can contribute a
    sum in the window; the caller picks the enumeration ranges.
    """
    hits = {x + y for x in xs for y in ys if lo <= x + y < hi}
    return sorted(hits)


def _mask_of(elems: Iterable[int], offset: int) -> int:
    m = 0
    for x in elems:
        m |= 1 << (x - offset)
    return m


def _shift_or(mask: int, addend_mask: int) -> int:
    """Bitmask of all sums a+b with a in mask, b in addend_mask.

    Offsets add; the caller tracks them.
    """
    out = 0
    b = addend_mask
    while b:
        low = b & -b
        out |= mask << (low.bit_length() - 1)
        b ^= low
    return out


def order_bitset(member: Callable[[int], bool], lo_elt, window: int = 512,
                 cap: int = 64):
    """Order of a basis by windowed bit-vector convolution.

    member is a membership predicate for the set A, lo_elt its minimum
    element.  Returns the least h <= cap such that the h-fold sumset of
    A covers every integer in [window//2, window] while the (h-1)-fold
    misses at least one, or None when no h <= cap does.

    Elements are gathered from [lo_elt, window + cap*|min(lo_elt,0)|];
    with at most cap summands each at least lo_elt, no element outside
    that range can take part in a sum landing inside [0, window].

    lo_elt must be a member, and the 128 integers right below it are
    scanned to catch a lo_elt that is not actually the minimum; members
    further below than that are the caller's contract to rule out.
    """
    if window < 2:
        raise ValueError("window must be at least 2")
    if cap < 1:
        raise ValueError("cap must be positive")
    if not member(lo_elt) or any(member(x) for x in range(lo_elt - 128, lo_elt)):
        raise ValueError("lo_elt must be the least element of the set")
    neg = max(0, -lo_elt)
    elems = [x for x in range(lo_elt, window + cap * neg + 1) if member(x)]
    base = _mask_of(elems, lo_elt)

    t_lo, t_hi = window // 2, window
    target = ((1 << (t_hi - t_lo + 1)) - 1)

    def covered(mask: int, n: int) -> bool:
        off = n * lo_elt
        if t_lo - off < 0:
            return False
        return (mask >> (t_lo - off)) & target == target

    cur = base
    prev_full = covered(cur, 1)
    if prev_full:
        return 1
    for n in range(2, cap + 1):
        cur = _shift_or(cur, base)
        # bit i now stands for i + n*lo_elt; drop sums that cannot
        # re-enter [0, window] with the remaining cap-n summands
        keep_hi = window + (cap - n) * neg - n * lo_elt
        if keep_hi < 0:
            return None
        cur &= (1 << (keep_hi + 1)) - 1
        if covered(cur, n):
            return n
    return None
