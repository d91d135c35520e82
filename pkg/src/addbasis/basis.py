"""Basis orders and removal parameters.

A set A is an additive basis of order h when every sufficiently large
integer is a sum of exactly h elements of A; the order G(A) is the least
such h. For eventually periodic A the order engine iterates exact sumsets
and certifies order n by the n-fold sumset being cofinite. A provably fails
to be a basis exactly when it is bounded above or its differences share a
common divisor > 1; anything else is decided within an iteration cap.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from math import gcd

from .errors import CapExceeded, EmptySet, FiniteSet, NotABasis, PreconditionViolated, XNotSubset
from .intset import EventuallyPeriodicSet, FiniteIntSet


def default_cap() -> int:
    """Iteration cap for order searches; ADDBASIS_CAP overrides."""
    return int(os.environ.get("ADDBASIS_CAP", "64"))


@dataclass(frozen=True)
class OrderResult:
    order: int
    certificate: EventuallyPeriodicSet  # the cofinite order-fold sumset
    sub_certificate: EventuallyPeriodicSet | None  # (order-1)-fold, not cofinite


@dataclass(frozen=True)
class RemovalParameters:
    k: int  # |X|
    d: int  # diameter(X) / delta(X)
    eta: int  # smallest gap in B between elements at least diameter(X) apart
    mu: int  # smallest diameter of X together with one element of B
    ap: bool  # X is an arithmetic progression


def eventual_gcd(a: EventuallyPeriodicSet) -> int:
    """gcd of all pairwise differences of elements of A."""
    if a.is_finite():
        raise FiniteSet("eventual gcd needs an infinite set")
    a0 = a.min_element()
    d = a.modulus
    for e in a.exceptional:
        d = gcd(d, e - a0)
    t, g = a.threshold, a.modulus
    for r in a.residues:
        d = gcd(d, t + ((r - t) % g) - a0)
    return d


def order(a: EventuallyPeriodicSet, cap: int | None = None) -> OrderResult:
    """Least h whose exact h-fold sumset is cofinite.

    Raises NotABasis on a provable obstruction (bounded above, or eventual
    gcd > 1), CapExceeded when no h <= cap certifies; the latter is never a
    claim that A is not a basis.
    """
    if cap is None:
        cap = default_cap()
    if cap < 1:
        raise ValueError(f"cap must be >= 1, got {cap}")
    if a.is_finite():
        raise NotABasis("set is bounded above")
    if eventual_gcd(a) > 1:
        raise NotABasis(f"pairwise differences share the factor {eventual_gcd(a)}")
    prev = None
    cur = a
    for n in range(1, cap + 1):
        if n > 1:
            cur = cur.sumset(a)
        if cur.is_cofinite():
            return OrderResult(n, cur, prev)
        prev = cur
    raise CapExceeded(cap)


def remove_and_order(
    a: EventuallyPeriodicSet, xs: FiniteIntSet, cap: int | None = None
) -> OrderResult:
    """Order of A with the finite subset X removed."""
    missing = [x for x in xs if x not in a]
    if missing:
        raise XNotSubset(f"{missing[0]} is not an element of the base set")
    return order(a.remove_finite(xs), cap)


def d_param(xs: FiniteIntSet) -> int:
    """diameter(X) / delta(X); always an integer since delta divides every
    difference to min(X)."""
    dia = xs.diameter()
    dl = xs.delta()
    assert dia % dl == 0
    return dia // dl


def eta_witness(b: EventuallyPeriodicSet, xs: FiniteIntSet):
    """(eta, a, b'): the closest pair of distinct elements of B at distance
    >= diameter(X), ties broken toward the numerically smallest pair.

    Scans base points over the exceptional part plus one full period, taking
    each base's successor at distance >= max(diameter, 1), and symmetrically
    each base's predecessor."""
    dia = xs.diameter()
    step = max(dia, 1)
    bases = list(b.exceptional)
    t, g = b.threshold, b.modulus
    for r in b.residues:
        bases.append(t + ((r - t) % g))
    if not bases:
        raise EmptySet("no elements to scan")
    best = None
    for p in bases:
        q = b.successor(p + step)
        if q is not None:
            cand = (q - p, p, q)
            if best is None or cand < best:
                best = cand
    for q in bases:
        p = b.predecessor(q - step)
        if p is not None:
            cand = (q - p, p, q)
            if best is None or cand < best:
                best = cand
    if best is None:
        raise PreconditionViolated("no pair of elements is diameter(X) apart")
    return best


def eta_param(b: EventuallyPeriodicSet, xs: FiniteIntSet) -> int:
    return eta_witness(b, xs)[0]


def mu_witness(b: EventuallyPeriodicSet, xs: FiniteIntSet):
    """(mu, y0): smallest diameter of X with one element y of B adjoined,
    ties broken toward the smallest y."""
    if b.is_empty():
        raise EmptySet("no elements to adjoin")
    x1 = xs.min_element()
    xn = xs.max_element()
    cands = []
    inside = b.successor(x1)
    if inside is not None and inside <= xn:
        cands.append((xn - x1, inside))
    else:
        p = b.predecessor(x1)
        if p is not None:
            cands.append((xn - p, p))
        s = b.successor(xn)
        if s is not None:
            cands.append((s - x1, s))
    if not cands:
        raise EmptySet("no elements to adjoin")
    mu, y0 = min(cands)
    if mu < 1:
        raise PreconditionViolated("X meets B, nothing was removed")
    return mu, y0


def mu_param(b: EventuallyPeriodicSet, xs: FiniteIntSet) -> int:
    return mu_witness(b, xs)[0]


def removal_parameters(b: EventuallyPeriodicSet, xs: FiniteIntSet) -> RemovalParameters:
    return RemovalParameters(
        k=len(xs),
        d=d_param(xs),
        eta=eta_param(b, xs),
        mu=mu_param(b, xs),
        ap=xs.is_ap(),
    )


def _fold_table(s: EventuallyPeriodicSet, n: int) -> list[EventuallyPeriodicSet]:
    """[1-fold, ..., n-fold] sumsets of s."""
    out = [s]
    for _ in range(n - 1):
        out.append(out[-1].sumset(s))
    return out


def nfold_thresholds(s: EventuallyPeriodicSet, n: int) -> list[int]:
    """Canonical thresholds of the 1-fold through n-fold sumsets; used to
    size verification windows past every settled tail."""
    return [f.threshold for f in _fold_table(s, n)]


def decomposition_check(a: EventuallyPeriodicSet, xs: FiniteIntSet, h: int) -> bool:
    """With B = A \\ X, test that hB ∪ ((h-1)B + X) ∪ ... ∪ (B + (h-1)X)
    misses only finitely many integers. Holds whenever A is a basis of
    order h."""
    missing = [x for x in xs if x not in a]
    if missing:
        raise XNotSubset(f"{missing[0]} is not an element of the base set")
    if h < 1:
        raise ValueError(f"order must be >= 1, got {h}")
    b = a.remove_finite(xs)
    if b.is_empty():
        return False
    bf = _fold_table(b, h)
    total = bf[h - 1]
    if h > 1:
        xf = _fold_table(xs.as_eps(), h - 1)
        for ell in range(1, h):
            total = total.union(bf[h - ell - 1].sumset(xf[ell - 1]))
    return total.is_cofinite()


def theorem5_construction_check(
    a: EventuallyPeriodicSet, xs: FiniteIntSet, cap: int | None = None
) -> bool:
    """Adjoin a unit to B = A \\ X and test the constructed order bound.

    Translate by -y0 (y0 the mu-minimizer in B), then adjoin +1, or -1 when
    all of X sits at or below y0. The construction must give a basis of
    order <= h * mu when A is a basis of order h."""
    missing = [x for x in xs if x not in a]
    if missing:
        raise XNotSubset(f"{missing[0]} is not an element of the base set")
    h = order(a, cap).order
    b = a.remove_finite(xs)
    mu, y0 = mu_witness(b, xs)
    shifted = b.translate(-y0)
    xmax = xs.max_element() - y0
    unit = 1 if xmax > 0 else -1
    adjoined = shifted.union(FiniteIntSet([unit]).as_eps())
    try:
        res = order(adjoined, h * mu)
    except CapExceeded:
        return False
    return res.order <= h * mu
