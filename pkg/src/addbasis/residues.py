"""Residue sets in Z/g: projections, sumsets, stabilizers, and the exact
lower-bound checks used on sums of subsets of a cyclic group.

A subset B of Z/g is degenerate when its stabilizer {t : B + t = B} is a
nontrivial subgroup. Subgroups of Z/g are cyclic, so a stabilizer is stored
by its generator: the smallest divisor d of g with B + d = B (d = g means
the trivial subgroup {0})."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import (
    EmptyOperand,
    EmptySet,
    ModulusMismatch,
    NotSaturable,
    PreconditionViolated,
)
from .intset import EventuallyPeriodicSet, FiniteIntSet, project_classes, saturate_mod


def _divisors(g: int) -> list[int]:
    return [d for d in range(1, g + 1) if g % d == 0]


class ResidueSet:
    """A subset of Z/g."""

    __slots__ = ("modulus", "members")

    def __init__(self, modulus: int, members=()):
        g = int(modulus)
        if g < 1:
            raise ValueError(f"modulus must be >= 1, got {g}")
        ms = set()
        for m in members:
            m = int(m)
            if not 0 <= m < g:
                raise ValueError(f"residue {m} outside 0..{g - 1}")
            ms.add(m)
        object.__setattr__(self, "modulus", g)
        object.__setattr__(self, "members", tuple(sorted(ms)))

    def __setattr__(self, name, value):
        raise AttributeError("ResidueSet is immutable")

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, x):
        return x in self.members

    def __eq__(self, other):
        if not isinstance(other, ResidueSet):
            return NotImplemented
        return self.modulus == other.modulus and self.members == other.members

    def __hash__(self):
        return hash((self.modulus, self.members))

    def __repr__(self):
        return f"ResidueSet({self.modulus}, {list(self.members)})"

    def is_full(self) -> bool:
        return len(self.members) == self.modulus


@dataclass(frozen=True)
class StabilizerSubgroup:
    """The subgroup of Z/g generated by a divisor of g."""

    modulus: int
    generator: int

    def members(self) -> tuple[int, ...]:
        return tuple(range(0, self.modulus, self.generator))

    def order(self) -> int:
        return self.modulus // self.generator

    def is_trivial(self) -> bool:
        return self.generator == self.modulus

    def as_residue_set(self) -> ResidueSet:
        return ResidueSet(self.modulus, self.members())


def project(s, g: int) -> ResidueSet:
    """Image of an integer set in Z/g, computed exactly."""
    return ResidueSet(g, project_classes(s, g))


def sum_residue(b: ResidueSet, c: ResidueSet) -> ResidueSet:
    if b.modulus != c.modulus:
        raise ModulusMismatch(f"moduli differ: {b.modulus} vs {c.modulus}")
    if not b.members or not c.members:
        raise EmptyOperand("residue sumset of an empty operand")
    g = b.modulus
    return ResidueSet(g, {(x + y) % g for x in b for y in c})


def stabilizer(b: ResidueSet) -> StabilizerSubgroup:
    """Largest subgroup H with B + H = B, as its generating divisor."""
    if not b.members:
        raise EmptySet("stabilizer of the empty set")
    g = b.modulus
    mem = set(b.members)
    for d in _divisors(g):
        if {(x + d) % g for x in mem} == mem:
            return StabilizerSubgroup(g, d)
    return StabilizerSubgroup(g, g)  # unreachable: d = g always stabilizes


def is_degenerate(b: ResidueSet) -> bool:
    return not stabilizer(b).is_trivial()


def kneser_witness(b: ResidueSet, c: ResidueSet):
    """Stabilizer H of B+C together with the verdict of
    |B+C| >= |B+H| + |C+H| - |H| (and B+C+H == B+C, true by construction
    of H, asserted anyway)."""
    s = sum_residue(b, c)
    h = stabilizer(s)
    hs = h.as_residue_set()
    bh = sum_residue(b, hs)
    ch = sum_residue(c, hs)
    ok = len(s) >= len(bh) + len(ch) - h.order() and sum_residue(s, hs) == s
    return h, ok


def sum_lower_bound_check(parts) -> bool:
    """|B1 + ... + Bn| >= |B1| + ... + |Bn| - n + 1, required the full sum
    is non-degenerate."""
    parts = list(parts)
    if not parts:
        raise EmptyOperand("no summands")
    total = parts[0]
    for p in parts[1:]:
        total = sum_residue(total, p)
    if is_degenerate(total):
        raise PreconditionViolated("sum is degenerate")
    return len(total) >= sum(len(p) for p in parts) - len(parts) + 1


def prop2_check(b: ResidueSet, c: ResidueSet) -> bool:
    """Truth of: B+C non-degenerate implies both B and C non-degenerate."""
    if is_degenerate(sum_residue(b, c)):
        return True
    return not is_degenerate(b) and not is_degenerate(c)


def minimal_saturation_modulus(s) -> int:
    """Smallest m >= 1 with S ~ saturate_mod(S, m).

    Exists iff S has a nonempty periodic part and every exceptional residue
    (mod the canonical modulus) lies in the residue set; otherwise every
    saturation differs from S on an infinite class. The search is a literal
    linear scan over m = 1, 2, ...; the canonical modulus always satisfies
    it under the precondition."""
    if isinstance(s, FiniteIntSet):
        raise NotSaturable("finite sets are never ~ to a saturation")
    if s.is_empty():
        raise EmptySet("empty set")
    if s.is_finite():
        raise NotSaturable("finite sets are never ~ to a saturation")
    g = s.modulus
    if any(e % g not in s.residues for e in s.exceptional):
        raise NotSaturable("an exceptional residue escapes the periodic classes")
    for m in range(1, g + 1):
        if s.equal_mod_finite(saturate_mod(s, m)):
            found = m
            break
    else:
        raise NotSaturable("no modulus up to the canonical one works")
    assert not is_degenerate(project(s, found))
    return found


def lemma1_profile(b: ResidueSet):
    """Fold-size profile of B in Z/g.

    Returns (r0, values) with values[r] = |rB| for r = 0..r0+2, where r0 is
    the first index whose value repeats. 0B = {0}, so values[0] = 1."""
    if not b.members:
        raise EmptySet("profile of the empty set")
    g = b.modulus
    cur = ResidueSet(g, (0,))
    values = [1]
    r0 = None
    for _ in range(g + 2):
        cur = sum_residue(cur, b)
        values.append(len(cur))
        if r0 is None and values[-1] == values[-2]:
            r0 = len(values) - 2
        if r0 is not None and len(values) >= r0 + 3:
            break
    return r0, values[: r0 + 3]
