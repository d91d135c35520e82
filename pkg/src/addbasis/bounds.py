"""Closed-form upper bounds on the order after removing a finite subset.

All certified bounds are exact integer formulas (arbitrary precision, no
floats). Inputs: h = order of the original basis, k = |X|, d =
diameter(X)/delta(X), eta = smallest usable gap in A \\ X, mu = smallest
enclosing diameter of X plus one element of A \\ X.

The report-facing names of the certified bounds (nash, farhi_d, farhi_eta,
farhi_mu, remark_d, cor2) are fixed by the report format and kept as the
BoundValue.name strings.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .basis import RemovalParameters


@dataclass(frozen=True)
class BoundValue:
    name: str
    value: int | float
    inputs: dict = field(default_factory=dict, compare=False)
    certified: bool = True


def _check_h(h: int):
    if h < 1:
        raise ValueError(f"order must be >= 1, got {h}")


def removal_bound_binomial(h: int, k: int) -> int:
    """General k-element bound (h+1)C(h+k-1,k) - kC(h+k-1,k+1)."""
    _check_h(h)
    if k < 1:
        raise ValueError(f"removal size must be >= 1, got {k}")
    return (h + 1) * math.comb(h + k - 1, k) - k * math.comb(h + k - 1, k + 1)


def removal_bound_binomial_sum(h: int, k: int) -> int:
    """Sum form of the general k-element bound,
    C(h+k-1,k) + sum_i C(k+i-1,i)(h-i); equals removal_bound_binomial."""
    _check_h(h)
    if k < 1:
        raise ValueError(f"removal size must be >= 1, got {k}")
    return math.comb(h + k - 1, k) + sum(
        math.comb(k + i - 1, i) * (h - i) for i in range(h)
    )


def removal_bound_diameter(h: int, d: int) -> int:
    """Diameter-ratio bound h(h+3)/2 + d h(h-1)(h+4)/6."""
    _check_h(h)
    if d < 0:
        raise ValueError(f"diameter ratio must be >= 0, got {d}")
    return h * (h + 3) // 2 + d * (h * (h - 1) * (h + 4) // 6)


def removal_bound_diameter_sum(h: int, d: int) -> int:
    """Sum form sum_{l=0}^{h-1} (l d + 1)(h - l + 1); equals
    removal_bound_diameter."""
    _check_h(h)
    if d < 0:
        raise ValueError(f"diameter ratio must be >= 0, got {d}")
    return sum((ell * d + 1) * (h - ell + 1) for ell in range(h))


def removal_bound_gap(h: int, eta: int) -> int:
    """Gap bound eta(h^2 - 1) + h + 1 = (eta(h-1) + 1)(h+1)."""
    _check_h(h)
    if eta < 1:
        raise ValueError(f"gap must be >= 1, got {eta}")
    return eta * (h * h - 1) + h + 1


def removal_bound_reach(h: int, mu: int) -> int:
    """Enclosing-diameter bound hmu(hmu + 3)/2."""
    _check_h(h)
    if mu < 1:
        raise ValueError(f"enclosing diameter must be >= 1, got {mu}")
    m = h * mu
    return m * (m + 3) // 2


def removal_bound_diameter_weak(h: int, d: int) -> int:
    """Weaker diameter-ratio bound hd(hd+1)(hd+5)/6; dominates
    removal_bound_diameter for d >= 1."""
    _check_h(h)
    if d < 1:
        raise ValueError(f"diameter ratio must be >= 1, got {d}")
    m = h * d
    return m * (m + 1) * (m + 5) // 6


def single_removal_bounds(h: int) -> list[BoundValue]:
    """Reference single-element bounds. The first is a real-valued
    asymptotic, flagged non-certified; the other three are exact."""
    _check_h(h)
    return [
        BoundValue(
            "erdos_graham",
            1.25 * h * h + 0.5 * h * math.log(h) + 2 * h,
            {"h": h},
            certified=False,
        ),
        BoundValue("grekos", h * h + h, {"h": h}),
        BoundValue("nash_single", (h * h + 3 * h) // 2, {"h": h}),
        BoundValue("plagne", h * (h + 1) // 2 + (h + 1) // 3, {"h": h}),
    ]


def magnitude_reference(h: int, k: int) -> tuple[float, float]:
    """Reference growth envelope for the worst case over all order-h bases
    and k-element removals: lower main term (4/3)(h/(k+1))^(k+1), upper main
    term (2/k!) h^(k+1). Not certified bounds for any particular instance."""
    _check_h(h)
    if k < 1:
        raise ValueError(f"removal size must be >= 1, got {k}")
    lower = (4.0 / 3.0) * (h / (k + 1)) ** (k + 1)
    upper = 2.0 / math.factorial(k) * float(h) ** (k + 1)
    return lower, upper


def compare_all(h: int, params: RemovalParameters) -> list[BoundValue]:
    """Every certified bound applicable to the parameter bundle, ascending
    by value."""
    vals = [
        BoundValue("nash", removal_bound_binomial(h, params.k), {"h": h, "k": params.k}),
        BoundValue("farhi_d", removal_bound_diameter(h, params.d), {"h": h, "d": params.d}),
        BoundValue("farhi_eta", removal_bound_gap(h, params.eta), {"h": h, "eta": params.eta}),
        BoundValue("farhi_mu", removal_bound_reach(h, params.mu), {"h": h, "mu": params.mu}),
    ]
    if params.d >= 1:
        vals.append(
            BoundValue("remark_d", removal_bound_diameter_weak(h, params.d), {"h": h, "d": params.d})
        )
    if params.ap:
        vals.append(
            BoundValue(
                "cor2",
                removal_bound_diameter(h, params.k - 1),
                {"h": h, "d": params.k - 1},
            )
        )
    return sorted(vals, key=lambda bv: (bv.value, bv.name))
