"""Exact arithmetic on eventually periodic integer sets.

Conventions
-----------
A set is stored as S = exceptional ∪ {x >= threshold : x mod g in residues},
with:

  * exceptional: finitely many elements, all strictly below the threshold,
  * modulus g >= 1 and residues a subset of {0, ..., g-1},
  * x mod g always normalized to {0, ..., g-1}, also for negative x.

Canonical form (unique per set, so equality is field comparison):

  * the modulus is minimal: residues are not a union of full classes of any
    proper divisor of g,
  * the threshold is minimal: it cannot be lowered by one without changing
    the set (an exceptional element that obeys the rule at threshold-1 is
    absorbed into the periodic part during descent),
  * if residues are empty the set is finite: g = 1 and the threshold is
    max(exceptional) + 1, or 0 for the empty set.

Sets may contain negative elements; only the exceptional part can, since the
periodic part starts at the threshold (which itself may be negative).

Sumsets are exact. The sum of two sets with nonempty periodic parts is
computed as: below the safe threshold T* = T1 + T2 + g1*g2/gcd(g1, g2) by
window enumeration, and at or above T* by residue classes, namely
(R1+R2 mod gcd) plus the classes (e + R2 mod g2), (R1 + f mod g1) that the
exceptional elements e, f contribute against the other periodic part. The
eventual modulus therefore divides lcm(g1, g2); canonicalization then makes
it minimal.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

import numpy as np

from . import kernels
from .errors import EmptyOperand, EmptySet, HoleAboveThreshold, PreconditionViolated


def _divisors(g: int) -> list[int]:
    return [d for d in range(1, g + 1) if g % d == 0]


def _lift(residues, g: int, target: int) -> set[int]:
    """All classes mod target that reduce to one of `residues` mod g."""
    return {r + k * g for r in residues for k in range(target // g)}


def _canonicalize(exceptional, threshold, modulus, residues):
    g = int(modulus)
    if g < 1:
        raise ValueError(f"modulus must be >= 1, got {g}")
    t = int(threshold)
    rset = set()
    for r in residues:
        r = int(r)
        if not 0 <= r < g:
            raise ValueError(f"residue {r} outside 0..{g - 1}")
        rset.add(r)
    exc = {int(e) for e in exceptional}

    for e in sorted(exc):
        if e >= t:
            if e % g in rset:
                exc.discard(e)  # already covered by the periodic part
            else:
                raise HoleAboveThreshold(
                    f"exceptional {e} >= threshold {t} disobeys the periodic rule;"
                    " raise the threshold first"
                )

    if not rset:
        t = max(exc) + 1 if exc else 0
        return tuple(sorted(exc)), t, 1, ()

    for gp in _divisors(g)[:-1]:
        rp = {r % gp for r in rset}
        if _lift(rp, gp, g) == rset:
            g, rset = gp, rp
            break

    while True:
        x = t - 1
        member = x in exc
        if member != ((x % g) in rset):
            break
        t = x
        if member:
            exc.discard(x)

    return tuple(sorted(exc)), t, g, tuple(sorted(rset))


class EventuallyPeriodicSet:
    """An integer set that is exactly periodic from its threshold upward.

    Instances are immutable and always in canonical form; construct them
    through make_eps or the set operations.
    """

    __slots__ = ("exceptional", "threshold", "modulus", "residues")

    def __init__(self, exceptional=(), threshold=0, modulus=1, residues=()):
        exc, t, g, r = _canonicalize(exceptional, threshold, modulus, residues)
        object.__setattr__(self, "exceptional", exc)
        object.__setattr__(self, "threshold", t)
        object.__setattr__(self, "modulus", g)
        object.__setattr__(self, "residues", r)

    def __setattr__(self, name, value):
        raise AttributeError("EventuallyPeriodicSet is immutable")

    def __eq__(self, other):
        if not isinstance(other, EventuallyPeriodicSet):
            return NotImplemented
        return (
            self.exceptional == other.exceptional
            and self.threshold == other.threshold
            and self.modulus == other.modulus
            and self.residues == other.residues
        )

    def __hash__(self):
        return hash((self.exceptional, self.threshold, self.modulus, self.residues))

    def __repr__(self):
        return (
            f"EventuallyPeriodicSet(exceptional={self.exceptional}, "
            f"threshold={self.threshold}, modulus={self.modulus}, "
            f"residues={self.residues})"
        )

    # membership and enumeration

    def __contains__(self, x: int) -> bool:
        if x < self.threshold:
            return x in self.exceptional
        return (x % self.modulus) in self.residues

    def is_empty(self) -> bool:
        return not self.residues and not self.exceptional

    def is_finite(self) -> bool:
        return not self.residues

    def is_cofinite(self) -> bool:
        """True iff the complement in the integers >= threshold is empty,
        i.e. the set contains every sufficiently large integer."""
        return self.modulus == 1 and self.residues == (0,)

    def min_element(self) -> int:
        if self.is_empty():
            raise EmptySet("empty set has no minimum")
        cands = list(self.exceptional[:1])
        if self.residues:
            cands.append(self._first_periodic())
        return min(cands)

    def _first_periodic(self) -> int:
        t = self.threshold
        g = self.modulus
        return min(t + ((r - t) % g) for r in self.residues)

    def successor(self, y: int):
        """Smallest element >= y, or None when the set is finite and
        exhausted below y."""
        cands = [e for e in self.exceptional if e >= y]
        if self.residues:
            m = max(y, self.threshold)
            g = self.modulus
            cands.append(min(m + ((r - m) % g) for r in self.residues))
        return min(cands) if cands else None

    def predecessor(self, y: int):
        """Largest element <= y, or None."""
        cands = [e for e in self.exceptional if e <= y]
        if self.residues and y >= self.threshold:
            g = self.modulus
            best = None
            for r in self.residues:
                x = y - ((y - r) % g)
                if x >= self.threshold and (best is None or x > best):
                    best = x
            if best is not None:
                cands.append(best)
        return max(cands) if cands else None

    def window_bool(self, lo: int, hi: int) -> np.ndarray:
        """Indicator vector of the set on [lo, hi], both ends inclusive."""
        if hi < lo:
            return np.zeros(0, dtype=np.bool_)
        xs = np.arange(lo, hi + 1, dtype=np.int64)
        if self.residues:
            out = (xs >= self.threshold) & np.isin(
                xs % self.modulus, np.array(self.residues, dtype=np.int64)
            )
        else:
            out = np.zeros(xs.size, dtype=np.bool_)
        for e in self.exceptional:
            if lo <= e <= hi:
                out[e - lo] = True
        return out

    def enumerate_window(self, lo: int, hi: int) -> "FiniteIntSet":
        if lo > hi:
            raise PreconditionViolated(f"window [{lo}, {hi}] is reversed")
        mask = self.window_bool(lo, hi)
        return FiniteIntSet(int(i) + lo for i in np.nonzero(mask)[0])

    # counting

    def count_upto(self, m: int) -> int:
        """|S ∩ (-inf, m]|; finite because only the exceptional part goes
        below the threshold."""
        n = sum(1 for e in self.exceptional if e <= m)
        t, g = self.threshold, self.modulus
        for r in self.residues:
            first = t + ((r - t) % g)
            if first <= m:
                n += (m - first) // g + 1
        return n

    def lower_density(self) -> Fraction:
        return Fraction(len(self.residues), self.modulus)

    # set operations

    def translate(self, t: int) -> "EventuallyPeriodicSet":
        g = self.modulus
        return EventuallyPeriodicSet(
            (e + t for e in self.exceptional),
            self.threshold + t,
            g,
            ((r + t) % g for r in self.residues),
        )

    def union(self, other: "EventuallyPeriodicSet") -> "EventuallyPeriodicSet":
        if self.is_empty():
            return other
        if other.is_empty():
            return self
        big = lcm(self.modulus, other.modulus)
        t = max(self.threshold, other.threshold)
        exc = set(self.exceptional) | set(other.exceptional)
        for x in range(min(self.threshold, other.threshold), t):
            if x in self or x in other:
                exc.add(x)
        classes = _lift(self.residues, self.modulus, big) | _lift(
            other.residues, other.modulus, big
        )
        return EventuallyPeriodicSet(exc, t, big, classes)

    def sumset(self, other: "EventuallyPeriodicSet") -> "EventuallyPeriodicSet":
        """Exact pairwise sumset {a + b}.

        Below the safe threshold the result is enumerated; from the safe
        threshold upward it is given by residue classes (see the module
        docstring for why the safe threshold works).
        """
        if self.is_empty() or other.is_empty():
            raise EmptyOperand("sumset of an empty operand")
        if self.is_finite() and not other.is_finite():
            return other.sumset(self)

        if self.is_finite():  # both finite
            sums = {a + b for a in self.exceptional for b in other.exceptional}
            return EventuallyPeriodicSet(sums, max(sums) + 1, 1, ())

        if other.is_finite():
            big = self.modulus
            tstar = self.threshold + max(other.exceptional)
            classes = {
                (r + e) % big for r in self.residues for e in other.exceptional
            }
        else:
            g1, g2 = self.modulus, other.modulus
            d = gcd(g1, g2)
            big = lcm(g1, g2)
            tstar = self.threshold + other.threshold + g1 * g2 // d
            core = {(r1 + r2) % d for r1 in self.residues for r2 in other.residues}
            classes = _lift(core, d, big)
            classes |= _lift(
                {(e + r) % g2 for e in self.exceptional for r in other.residues},
                g2,
                big,
            )
            classes |= _lift(
                {(r + f) % g1 for r in self.residues for f in other.exceptional},
                g1,
                big,
            )

        a_min = self.min_element()
        b_min = other.min_element()
        members = []
        hi_a = tstar - 1 - b_min
        hi_b = tstar - 1 - a_min
        if hi_a >= a_min and hi_b >= b_min:
            wa = self.window_bool(a_min, hi_a)
            wb = other.window_bool(b_min, hi_b)
            ws = kernels.window_sumset(wa, wb)
            base = a_min + b_min
            members = [
                int(i) + base for i in np.nonzero(ws)[0] if int(i) + base < tstar
            ]
        return EventuallyPeriodicSet(members, tstar, big, classes)

    def nfold(self, n: int) -> "EventuallyPeriodicSet":
        """Sums of exactly n elements (repetition allowed)."""
        if n < 1:
            raise ValueError(f"fold count must be >= 1, got {n}")
        if self.is_empty():
            raise EmptyOperand("nfold of the empty set")
        acc = self
        for _ in range(n - 1):
            acc = acc.sumset(self)
        return acc

    def remove_finite(self, xs) -> "EventuallyPeriodicSet":
        """Set difference S \\ X for a finite X (need not be a subset)."""
        drop = {int(x) for x in xs}
        exc = set(self.exceptional)
        t, g = self.threshold, self.modulus
        if self.residues and drop:
            t = max(t, max(drop) + 1)
            for x in range(self.threshold, t):
                if (x % g) in self.residues:
                    exc.add(x)
        return EventuallyPeriodicSet(exc - drop, t, g, self.residues)

    def equal_mod_finite(self, other: "EventuallyPeriodicSet") -> bool:
        """True iff the symmetric difference is finite: the periodic parts
        agree after lifting to the lcm modulus."""
        big = lcm(self.modulus, other.modulus)
        return _lift(self.residues, self.modulus, big) == _lift(
            other.residues, other.modulus, big
        )


class FiniteIntSet:
    """A finite set of integers, stored sorted."""

    __slots__ = ("elements",)

    def __init__(self, elements=()):
        object.__setattr__(self, "elements", tuple(sorted({int(x) for x in elements})))

    def __setattr__(self, name, value):
        raise AttributeError("FiniteIntSet is immutable")

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        return x in self.elements

    def __eq__(self, other):
        if not isinstance(other, FiniteIntSet):
            return NotImplemented
        return self.elements == other.elements

    def __hash__(self):
        return hash(self.elements)

    def __repr__(self):
        return f"FiniteIntSet({list(self.elements)})"

    def min_element(self) -> int:
        if not self.elements:
            raise EmptySet("empty set has no minimum")
        return self.elements[0]

    def max_element(self) -> int:
        if not self.elements:
            raise EmptySet("empty set has no maximum")
        return self.elements[-1]

    def diameter(self) -> int:
        if not self.elements:
            raise EmptySet("diameter of the empty set")
        return self.elements[-1] - self.elements[0]

    def delta(self) -> int:
        """gcd of the differences to the minimum; 1 for singletons by
        convention (gcd over an empty difference set)."""
        if not self.elements:
            raise EmptySet("delta of the empty set")
        lo = self.elements[0]
        d = 0
        for x in self.elements[1:]:
            d = gcd(d, x - lo)
        return d if d else 1

    def is_ap(self) -> bool:
        """True iff the elements form an arithmetic progression."""
        if not self.elements:
            return False
        return self.diameter() == self.delta() * (len(self.elements) - 1)

    def translate(self, t: int) -> "FiniteIntSet":
        return FiniteIntSet(x + t for x in self.elements)

    def as_eps(self) -> EventuallyPeriodicSet:
        e = self.elements
        return EventuallyPeriodicSet(e, e[-1] + 1 if e else 0, 1, ())


def make_eps(exceptional=(), threshold=0, modulus=1, residues=()) -> EventuallyPeriodicSet:
    """Build the canonical eventually periodic set for a raw description."""
    return EventuallyPeriodicSet(exceptional, threshold, modulus, residues)


def naturals() -> EventuallyPeriodicSet:
    return EventuallyPeriodicSet((), 0, 1, (0,))


def project_classes(s, g: int) -> set[int]:
    """Classes mod g hit by S, exactly: the periodic part hits every class
    of the coset r + <gcd(g_S, g)> because the progression r + k*g_S is
    infinite, so no sampling is involved."""
    if g < 1:
        raise ValueError(f"modulus must be >= 1, got {g}")
    if isinstance(s, FiniteIntSet):
        if not s.elements:
            raise EmptySet("projection of the empty set")
        return {x % g for x in s.elements}
    if s.is_empty():
        raise EmptySet("projection of the empty set")
    out = {e % g for e in s.exceptional}
    step = gcd(s.modulus, g)
    for r in s.residues:
        out |= {(r + k * step) % g for k in range(g // step)}
    return out


def saturate_mod(s, g: int) -> EventuallyPeriodicSet:
    """S^(g) = {x >= 0 : x mod g hits the projection of S mod g}."""
    return EventuallyPeriodicSet((), 0, g, project_classes(s, g))
