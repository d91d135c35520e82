"""Eventually periodic sets: canonical form, membership, exact sumsets."""

import pytest
from hypothesis import given, settings, strategies as st

from addbasis import (
    EventuallyPeriodicSet,
    FiniteIntSet,
    make_eps,
    naturals,
    project_classes,
    saturate_mod,
)
from addbasis.errors import (
    EmptyOperand,
    EmptySet,
    HoleAboveThreshold,
    PreconditionViolated,
)
from addbasis.oracles import raw_contains


def test_canonical_keeps_low_exceptional():
    s = make_eps([1], 2, 2, [0])
    assert s.exceptional == (1,)
    assert s.threshold == 2
    assert s.modulus == 2
    assert s.residues == (0,)


def test_canonical_rejects_hole_above_threshold():
    with pytest.raises(HoleAboveThreshold):
        make_eps([1], 0, 2, [0])


def test_canonical_reduces_modulus():
    s = make_eps([], 5, 4, [0, 2])
    assert s.modulus == 2
    assert s.residues == (0,)
    assert s.threshold == 5


def test_canonical_absorbs_redundant_exceptional():
    s = make_eps([4, 8], 2, 2, [0])
    assert s.exceptional == ()
    # the evens above 2 start at 2, so the rule alone describes the set
    # from threshold 1 on
    assert s.threshold == 1
    assert 0 not in s and 2 in s


def test_canonical_lowers_threshold():
    s = make_eps([0, 2, 4], 6, 2, [0])
    assert s.exceptional == ()
    # all even naturals; -1 is the least threshold that adds nothing
    assert s.threshold == -1
    assert -2 not in s and 0 in s


def test_finite_normalization():
    s = make_eps([3, 7], 20, 5, [])
    assert s.modulus == 1
    assert s.residues == ()
    assert s.threshold == 8
    assert s.is_finite()
    assert not s.is_cofinite()


def test_empty_set():
    s = make_eps([], 0, 1, [])
    assert s.is_empty()
    assert s.threshold == 0
    with pytest.raises(EmptySet):
        s.min_element()


def test_validation_errors():
    with pytest.raises(ValueError):
        make_eps([], 0, 0, [])
    with pytest.raises(ValueError):
        make_eps([], 0, 4, [4])
    with pytest.raises(ValueError):
        make_eps([], 0, 4, [-1])


def test_membership_and_bounds():
    s = make_eps([1], 2, 2, [0])
    assert 1 in s and 2 in s and 4 in s
    assert 0 not in s and 3 not in s and -2 not in s
    assert s.min_element() == 1


def test_negative_threshold():
    s = make_eps([-9], -4, 3, [2])
    assert -9 in s and -4 in s and -1 in s and 2 in s
    assert -7 not in s
    assert s.min_element() == -9


@st.composite
def literals(draw):
    g = draw(st.integers(1, 12))
    t = draw(st.integers(-10, 30))
    residues = sorted(draw(st.sets(st.integers(0, g - 1), max_size=g)))
    exc = set(draw(st.sets(st.integers(t - 12, t - 1), max_size=4)))
    if residues:
        # members above the threshold already covered by the rule are
        # accepted and absorbed
        for off in draw(st.sets(st.integers(0, 3 * g), max_size=2)):
            if (t + off) % g in residues:
                exc.add(t + off)
    return {"exceptional": sorted(exc), "threshold": t, "modulus": g,
            "residues": residues}


@settings(max_examples=120, deadline=None)
@given(literals())
def test_membership_matches_literal(lit):
    s = make_eps(**lit)
    lo = min([-40, lit["threshold"] - 15] + lit["exceptional"])
    hi = lit["threshold"] + 4 * lit["modulus"]
    for x in range(lo, hi + 1):
        assert (x in s) == raw_contains(lit, x), (x, lit)


@settings(max_examples=120, deadline=None)
@given(literals())
def test_canonical_is_fixed_point(lit):
    s = make_eps(**lit)
    again = EventuallyPeriodicSet(s.exceptional, s.threshold, s.modulus, s.residues)
    assert again == s
    assert all(e < s.threshold for e in s.exceptional)


@settings(max_examples=80, deadline=None)
@given(literals(), literals())
def test_sumset_matches_brute_force(la, lb):
    a, b = make_eps(**la), make_eps(**lb)
    if a.is_empty() or b.is_empty():
        with pytest.raises(EmptyOperand):
            a.sumset(b)
        return
    s = a.sumset(b)
    lo = a.min_element() + b.min_element()
    hi = max(s.threshold, lo) + 3 * max(a.modulus, b.modulus)
    xs = a.enumerate_window(a.min_element(), hi - b.min_element()).elements
    ys = b.enumerate_window(b.min_element(), hi - a.min_element()).elements
    brute = {x + y for x in xs for y in ys if x + y <= hi}
    got = set(s.enumerate_window(lo, hi).elements)
    assert got == brute


def test_sumset_micro_example():
    a = make_eps([0, 1], 2, 2, [0])
    two_a = a.sumset(a)
    assert two_a == naturals()


def test_nfold_requires_positive():
    a = make_eps([0, 1], 2, 2, [0])
    with pytest.raises(ValueError):
        a.nfold(0)
    assert a.nfold(1) == a


def test_translate_wraps_residues():
    s = make_eps([], 0, 2, [0]).translate(1)
    assert s.residues == (1,)
    assert 1 in s and 2 not in s


@settings(max_examples=80, deadline=None)
@given(literals(), st.integers(-25, 25))
def test_translate_then_back(lit, t):
    s = make_eps(**lit)
    assert s.translate(t).translate(-t) == s


def test_union_materializes_gap():
    a = make_eps([], 10, 3, [0])
    b = make_eps([2], 4, 3, [1])
    u = a.union(b)
    for x in range(-5, 40):
        assert (x in u) == ((x in a) or (x in b))


def test_remove_finite():
    a = make_eps([0, 1], 2, 2, [0])
    b = a.remove_finite([2])
    assert 2 not in b and 4 in b and 0 in b
    assert b.exceptional == (0, 1)
    assert b.threshold == 3


def test_successor_predecessor():
    s = make_eps([1], 2, 2, [0])
    assert s.successor(1) == 1
    assert s.successor(3) == 4
    assert s.predecessor(3) == 2
    assert s.predecessor(4) == 4
    assert s.predecessor(0) is None
    f = make_eps([5], 6, 1, [])
    assert f.successor(6) is None


def test_count_upto_closed_form():
    s = make_eps([1], 2, 2, [0])
    for m in range(-3, 30):
        brute = sum(1 for x in range(-3, m + 1) if x in s)
        assert s.count_upto(m) == brute


def test_equal_mod_finite():
    a = make_eps([], 0, 2, [0])
    b = make_eps([1, 3], 6, 2, [0])
    assert a.equal_mod_finite(b)
    assert not a.equal_mod_finite(naturals())


def test_finite_int_set_basics():
    xs = FiniteIntSet([4, 2, 2, 8])
    assert xs.elements == (2, 4, 8)
    assert xs.diameter() == 6
    assert xs.delta() == 2
    assert not xs.is_ap()
    assert FiniteIntSet([3, 5, 7]).is_ap()
    assert FiniteIntSet([5]).is_ap()
    assert FiniteIntSet([5]).delta() == 1
    with pytest.raises(EmptySet):
        FiniteIntSet([]).diameter()


def test_enumerate_window_rejects_reversed():
    s = naturals()
    with pytest.raises(PreconditionViolated):
        s.enumerate_window(5, 1)


def test_project_classes_mixed():
    s = make_eps([3], 4, 6, [0, 2, 4])
    assert project_classes(s, 6) == {0, 2, 3, 4}
    assert project_classes(s, 2) == {0, 1}
    sat = saturate_mod(s, 6)
    assert sat.residues == (0, 2, 3, 4)


def test_saturate_mod_of_evens():
    evens = make_eps([], 0, 2, [0])
    assert project_classes(evens, 4) == {0, 2}
    # the mod-4 saturation is the evens again, canonically reduced
    assert saturate_mod(evens, 4) == evens
    assert saturate_mod(evens, 3) == naturals()
