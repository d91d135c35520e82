"""Closed-form removal bounds: frozen values, identities, orderings."""

import math

import pytest
from hypothesis import given, strategies as st

from addbasis.basis import RemovalParameters
from addbasis.bounds import (
    compare_all,
    magnitude_reference,
    removal_bound_binomial,
    removal_bound_binomial_sum,
    removal_bound_diameter,
    removal_bound_diameter_sum,
    removal_bound_diameter_weak,
    removal_bound_gap,
    removal_bound_reach,
    single_removal_bounds,
)


def test_frozen_small_values():
    assert removal_bound_diameter(2, 1) == 7
    assert removal_bound_gap(2, 1) == 6
    assert removal_bound_reach(2, 2) == 14
    assert removal_bound_diameter_weak(2, 1) == 7
    assert removal_bound_diameter_weak(1, 1) == 2
    assert removal_bound_binomial(2, 1) == 5
    assert removal_bound_binomial(3, 1) == 9


def test_single_removal_values():
    by_name = {bv.name: bv for bv in single_removal_bounds(2)}
    assert by_name["plagne"].value == 4
    assert by_name["grekos"].value == 6
    assert by_name["nash_single"].value == 5
    assert not by_name["erdos_graham"].certified
    by_name3 = {bv.name: bv for bv in single_removal_bounds(3)}
    assert by_name3["grekos"].value == 12
    assert by_name3["nash_single"].value == 9


def test_historical_ordering():
    for h in range(2, 101):
        by_name = {bv.name: bv.value for bv in single_removal_bounds(h)}
        assert by_name["plagne"] <= by_name["nash_single"] <= by_name["grekos"]


@given(st.integers(1, 40), st.integers(1, 6))
def test_binomial_forms_agree(h, k):
    assert removal_bound_binomial(h, k) == removal_bound_binomial_sum(h, k)


@given(st.integers(1, 40), st.integers(0, 12))
def test_diameter_forms_agree(h, d):
    assert removal_bound_diameter(h, d) == removal_bound_diameter_sum(h, d)


@given(st.integers(1, 60), st.integers(1, 25))
def test_gap_bound_product_form(h, eta):
    assert removal_bound_gap(h, eta) == (eta * (h - 1) + 1) * (h + 1)
    assert removal_bound_gap(h, eta) >= h + 1


@given(st.integers(1, 60))
def test_k1_mu1_collapse(h):
    want = (h * h + 3 * h) // 2
    assert removal_bound_binomial(h, 1) == want
    assert removal_bound_reach(h, 1) == want


@given(st.integers(1, 30), st.integers(1, 10))
def test_weak_diameter_dominates(h, d):
    assert removal_bound_diameter_weak(h, d) >= removal_bound_diameter(h, d)


def test_magnitude_reference():
    lower, upper = magnitude_reference(10, 1)
    assert lower == pytest.approx(100.0 / 3.0)
    assert upper == pytest.approx(200.0)


def test_binomial_leading_coefficient():
    h = 200
    for k in range(1, 4):
        ratio = removal_bound_binomial(h, k) / h ** (k + 1)
        target = 1.0 / math.factorial(k + 1)
        assert abs(ratio - target) <= 0.1 * target


def test_compare_all_micro():
    p = RemovalParameters(k=1, d=0, eta=1, mu=1, ap=True)
    got = [(bv.name, bv.value) for bv in compare_all(2, p)]
    assert got == [
        ("cor2", 5),
        ("farhi_d", 5),
        ("farhi_mu", 5),
        ("nash", 5),
        ("farhi_eta", 6),
    ]
    assert all(bv.certified for bv in compare_all(2, p))


def test_compare_all_remark_presence():
    no_d = RemovalParameters(k=2, d=0, eta=3, mu=4, ap=False)
    names = {bv.name for bv in compare_all(3, no_d)}
    assert "remark_d" not in names and "cor2" not in names
    with_d = RemovalParameters(k=2, d=2, eta=3, mu=4, ap=True)
    names = {bv.name for bv in compare_all(3, with_d)}
    assert {"remark_d", "cor2"} <= names


def test_input_validation():
    with pytest.raises(ValueError):
        removal_bound_binomial(0, 1)
    with pytest.raises(ValueError):
        removal_bound_binomial(2, 0)
    with pytest.raises(ValueError):
        removal_bound_diameter(3, -1)
    with pytest.raises(ValueError):
        removal_bound_gap(3, 0)
    with pytest.raises(ValueError):
        removal_bound_reach(3, 0)
    with pytest.raises(ValueError):
        removal_bound_diameter_weak(3, 0)
    with pytest.raises(ValueError):
        magnitude_reference(3, 0)
