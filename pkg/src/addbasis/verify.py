"""Verification suites.

Each suite checks one mathematical claim the library relies on, either
exhaustively over a small finite range or on a seeded random sample,
and reports how many cases it checked together with the first
counterexample found (None when the claim held everywhere).  Random
suites derive an independent deterministic stream per suite name, so
two runs with the same seed check byte-identical samples regardless of
which suites are selected.

The formula_overrides hook exists for harness self-tests: injecting a
deliberately wrong closed form must make the identity suite fail with a
concrete counterexample.
"""

from __future__ import annotations

import random
import time
import zlib
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial, gcd, lcm

from . import bounds as _bounds
from .basis import (
    d_param,
    eta_witness,
    eventual_gcd,
    mu_witness,
    order,
)
from .corpus import golden_corpus_path, load_corpus
from .errors import CapExceeded, NotABasis, NotSaturable
from .intset import (
    EventuallyPeriodicSet,
    FiniteIntSet,
    make_eps,
    naturals,
    saturate_mod,
)
from .kernels import lemma1_sweep, pair_sweep, triple_sweep
from .oracles import order_bitset, raw_contains
from .residues import (
    ResidueSet,
    is_degenerate,
    kneser_witness,
    lemma1_profile,
    minimal_saturation_modulus,
    project,
    prop2_check,
    sum_residue,
)

__all__ = ["SuiteResult", "VerifyConfig", "SUITE_NAMES", "run_suites"]


@dataclass(frozen=True)
class SuiteResult:
    name: str
    passed: bool
    checked: int
    counterexample: str | None
    seconds: float


@dataclass
class VerifyConfig:
    seed: int = 20260817
    max_modulus: int = 8
    corpus_path: str | None = None
    samples: int = 200
    formula_overrides: dict = field(default_factory=dict)


_SUITES: dict = {}


def _suite(name):
    def deco(fn):
        _SUITES[name] = fn
        return fn
    return deco


def _rng(cfg: VerifyConfig, tag: str) -> random.Random:
    return random.Random((cfg.seed << 32) ^ zlib.crc32(tag.encode()))


def _mask_set(g: int, mask: int) -> ResidueSet:
    return ResidueSet(g, [i for i in range(g) if mask >> i & 1])


def _random_literal(rng, gmax=12, tlo=-10, thi=30, allow_finite=True) -> dict:
    g = rng.randint(1, gmax)
    low = 0 if allow_finite else 1
    residues = sorted(rng.sample(range(g), rng.randint(low, g)))
    t = rng.randint(tlo, thi)
    pool = range(t - 15, t)
    exc = set(rng.sample(pool, rng.randint(0, 4)))
    if residues and rng.random() < 0.3:
        # redundant members above the threshold; they must be absorbed
        for _ in range(2):
            cand = t + rng.randint(0, 3 * g)
            if cand % g in residues:
                exc.add(cand)
    if rng.random() < 0.25 and residues and g <= 6:
        # deliberately non-minimal modulus: replicate the pattern
        f = rng.randint(2, 3)
        residues = sorted(r + j * g for r in residues for j in range(f))
        g *= f
    return {
        "exceptional": sorted(exc),
        "threshold": t,
        "modulus": g,
        "residues": residues,
    }


def _random_eps(rng, gmax=12, tlo=-10, thi=30, allow_finite=False):
    lit = _random_literal(rng, gmax, tlo, thi, allow_finite)
    return make_eps(**lit)


def _rule(lit: dict, x: int) -> bool:
    return bool(lit["residues"]) and x % lit["modulus"] in lit["residues"]


@_suite("intset_canonical")
def _canonical(cfg: VerifyConfig):
    rng = _rng(cfg, "intset_canonical")
    checked = 0
    for _ in range(2 * cfg.samples):
        lit = _random_literal(rng)
        s = make_eps(**lit)
        lo = min(-50, lit["threshold"] - 20, *(lit["exceptional"] or [0]))
        hi = lit["threshold"] + 5 * lit["modulus"]
        for x in range(lo, hi + 1):
            if (x in s) != raw_contains(lit, x):
                return checked, f"membership differs at {x} for literal {lit}"
        again = EventuallyPeriodicSet(s.exceptional, s.threshold, s.modulus, s.residues)
        if again != s:
            return checked, f"canonical form is not a fixed point for {lit}"
        g, t, res = s.modulus, s.threshold, set(s.residues)
        for d in range(1, g):
            if g % d:
                continue
            base = {r % d for r in res}
            if {r0 + j * d for r0 in base for j in range(g // d)} == res:
                return checked, f"modulus {g} not minimal for {lit}: divisor {d} lifts"
        if s.residues:
            member = (t - 1) in s
            rule = (t - 1) % g in res
            if member == rule:
                return checked, f"threshold {t} not minimal for {lit}"
        if any(e >= t for e in s.exceptional):
            return checked, f"exceptional above threshold in canonical form of {lit}"
        checked += 1
    return checked, None


@_suite("intset_sumset_brute")
def _sumset_brute(cfg: VerifyConfig):
    rng = _rng(cfg, "intset_sumset_brute")
    checked = 0
    for _ in range(100):
        a = _random_eps(rng, tlo=-8, thi=30, allow_finite=True)
        b = _random_eps(rng, tlo=-8, thi=30, allow_finite=True)
        if a.is_empty() or b.is_empty():
            continue
        s = a.sumset(b)
        period = lcm(a.modulus, b.modulus)
        lo = a.min_element() + b.min_element()
        hi = max(s.threshold, lo) + 4 * period
        xs = a.enumerate_window(a.min_element(), hi - b.min_element()).elements
        ys = b.enumerate_window(b.min_element(), hi - a.min_element()).elements
        brute = {x + y for x in xs for y in ys if x + y <= hi}
        got = set(s.enumerate_window(lo, hi).elements)
        if got != brute:
            diff = sorted(got ^ brute)[:5]
            return checked, f"sumset differs at {diff} for {a!r} + {b!r}"
        checked += 1
    return checked, None


@_suite("intset_counting")
def _counting(cfg: VerifyConfig):
    rng = _rng(cfg, "intset_counting")
    checked = 0
    for _ in range(cfg.samples):
        s = _random_eps(rng, allow_finite=True)
        if s.is_empty():
            continue
        m = rng.randint(-20, 80)
        brute = len([x for x in range(min(s.min_element(), m), m + 1) if x in s])
        if s.count_upto(m) != brute:
            return checked, f"count_upto({m}) = {s.count_upto(m)} != {brute} for {s!r}"
        t = rng.randint(-20, 20)
        d = abs(s.translate(t).count_upto(m) - s.count_upto(m))
        if d > abs(t):
            return checked, f"translation by {t} moved count_upto({m}) by {d} for {s!r}"
        if s.lower_density() * s.modulus != len(s.residues):
            return checked, f"lower density wrong for {s!r}"
        big = rng.randint(500, 4000)
        dens = Fraction(s.count_upto(big), big)
        bound = Fraction(len(s.exceptional) + s.modulus + abs(s.threshold), big)
        if abs(dens - s.lower_density()) > bound:
            return checked, f"density estimate off at m={big} for {s!r}"
        checked += 1
    return checked, None


@_suite("intset_saturation")
def _saturation(cfg: VerifyConfig):
    rng = _rng(cfg, "intset_saturation")
    checked = 0
    for _ in range(60):
        b = _random_eps(rng, gmax=10, allow_finite=True)
        c = _random_eps(rng, gmax=10, allow_finite=True)
        if b.is_empty() or c.is_empty():
            continue
        g = rng.randint(1, 10)
        left = saturate_mod(b.sumset(c), g)
        right = saturate_mod(b, g).sumset(c)
        if not left.equal_mod_finite(right):
            return checked, f"saturation identity fails for g={g}, {b!r}, {c!r}"
        checked += 1
    nat = naturals()
    for _ in range(cfg.samples):
        s = _random_eps(rng, allow_finite=True)
        if s.is_cofinite() != s.equal_mod_finite(nat):
            return checked, f"cofinite test disagrees with ~N for {s!r}"
        checked += 1
    return checked, None


@_suite("kneser_pairs")
def _kneser_pairs(cfg: VerifyConfig):
    checked = 0
    for g in range(1, cfg.max_modulus + 1):
        res = pair_sweep(g)
        ineq, prop2, stab, first_b, first_c, pairs = (int(v) for v in res)
        checked += pairs
        if ineq or prop2 or stab:
            kind = "inequality" if ineq else ("degenerate-summand" if prop2 else "stabilizer")
            b = _mask_set(g, first_b)
            c = _mask_set(g, first_c)
            return checked, f"{kind} violation in Z/{g}: B={b.members}, C={c.members}"
    return checked, None


@_suite("kneser_sampled")
def _kneser_sampled(cfg: VerifyConfig):
    rng = _rng(cfg, "kneser_sampled")
    checked = 0
    g_lo = min(16, max(2, cfg.max_modulus))
    while checked < max(10000, cfg.samples):
        g = rng.randint(g_lo, 16)
        b = _mask_set(g, rng.randint(1, (1 << g) - 1))
        c = _mask_set(g, rng.randint(1, (1 << g) - 1))
        _, ok = kneser_witness(b, c)
        if not ok:
            return checked, f"witness fails in Z/{g}: B={b.members}, C={c.members}"
        if not prop2_check(b, c):
            return checked, f"degenerate summand in Z/{g}: B={b.members}, C={c.members}"
        checked += 1
    return checked, None


@_suite("kneser_triples")
def _kneser_triples(cfg: VerifyConfig):
    checked = 0
    for g in range(1, min(6, cfg.max_modulus) + 1):
        res = triple_sweep(g)
        viol, b1, b2, b3, triples = (int(v) for v in res)
        checked += triples
        if viol:
            sets = tuple(_mask_set(g, m).members for m in (b1, b2, b3))
            return checked, f"triple inequality fails in Z/{g}: {sets}"
    return checked, None


@_suite("lemma1_profile")
def _lemma1(cfg: VerifyConfig):
    checked = 0
    for g in range(1, 11):
        res = lemma1_sweep(g)
        viol, first_mask, masks = (int(v) for v in res)
        checked += masks
        if viol:
            b = _mask_set(g, first_mask)
            return checked, f"fold profile not strict-then-constant for B={b.members} in Z/{g}"
    rng = _rng(cfg, "lemma1_profile")
    for _ in range(100):
        g = rng.randint(1, 12)
        b = _mask_set(g, rng.randint(1, (1 << g) - 1))
        r0, values = lemma1_profile(b)
        strict = all(x < y for x, y in zip(values[: r0 + 1], values[1: r0 + 1]))
        flat = len(set(values[r0:])) == 1
        if not (strict and flat):
            return checked, f"profile {values} malformed for B={b.members} in Z/{g}"
        if len(values) > 2 and values[2] != len(sum_residue(b, b)):
            return checked, f"profile value |2B| wrong for B={b.members} in Z/{g}"
        checked += 1
    return checked, None


@_suite("prop1_saturation")
def _prop1(cfg: VerifyConfig):
    rng = _rng(cfg, "prop1_saturation")
    checked = 0
    while checked < cfg.samples:
        s = _random_eps(rng)
        try:
            m = minimal_saturation_modulus(s)
        except NotSaturable:
            continue
        if m != s.modulus:
            return checked, f"minimal saturation modulus {m} != canonical {s.modulus} for {s!r}"
        if is_degenerate(project(s, m)):
            return checked, f"projection mod {m} degenerate for {s!r}"
        for div in range(1, s.modulus):
            if s.modulus % div:
                continue
            if s.equal_mod_finite(saturate_mod(s, div)):
                return checked, f"saturation mod {div} already ~ S for {s!r}"
        checked += 1
    return checked, None


@_suite("lemma2_diameter")
def _lemma2(cfg: VerifyConfig):
    checked = 0
    for mask in range(1, 1 << 13):
        xs = FiniteIntSet(i for i in range(13) if mask >> i & 1)
        d = d_param(xs)
        if len(xs) > d + 1:
            return checked, f"|X| = {len(xs)} exceeds d+1 = {d + 1} for X={xs.elements}"
        if (len(xs) == d + 1) != xs.is_ap():
            return checked, f"equality/AP mismatch for X={xs.elements}"
        checked += 1
    return checked, None


def _mixed_fold(b: EventuallyPeriodicSet, x: EventuallyPeriodicSet, u: int, v: int):
    if u == 0 and v == 0:
        return FiniteIntSet([0]).as_eps()
    if u == 0:
        return x.nfold(v)
    if v == 0:
        return b.nfold(u)
    return b.nfold(u).sumset(x.nfold(v))


@_suite("lemma3_covering")
def _lemma3(cfg: VerifyConfig):
    rng = _rng(cfg, "lemma3_covering")
    checked = 0
    while checked < max(200, cfg.samples):
        b = _random_eps(rng, gmax=10, tlo=0, thi=20)
        xs = FiniteIntSet(rng.sample(range(-8, 25), rng.randint(1, 4)))
        eta, pair_lo, pair_hi = eta_witness(b, xs)
        u = rng.randint(0, 3)
        v = rng.randint(0, 3)
        if u + v == 0:
            v = 1
        bp = b.translate(-pair_lo)
        xp = xs.translate(-xs.min_element()).as_eps()
        lhs = _mixed_fold(bp, xp, u, v)
        rhs = _mixed_fold(bp, xp, u + v, 0)
        r_lo = rhs.min_element()
        r_mask = rhs.window_bool(r_lo, 400)
        for n in lhs.enumerate_window(0, 400).elements:
            hit = any(
                n - tau >= r_lo and n - tau - r_lo < r_mask.size and r_mask[n - tau - r_lo]
                for tau in range(eta)
            )
            if not hit:
                return checked, (
                    f"relation (u={u}, v={v}) fails at {n} for B'={bp!r}, X'={xp!r}, eta={eta}"
                )
        lhs_u = _mixed_fold(b, xs.as_eps(), u, v)
        rhs_u = _mixed_fold(b, xs.as_eps(), u + v, 0)
        slack = eta * max(0, v * (pair_lo - xs.min_element()))
        for _ in range(4):
            m = rng.randint(50, 400)
            if lhs_u.count_upto(m) > eta * rhs_u.count_upto(m) + slack:
                return checked, f"counting bound fails at m={m} (u={u}, v={v}, B={b!r}, X={xs.elements})"
        g = rng.randint(1, 12)
        if len(project(lhs_u, g)) > eta * len(project(rhs_u, g)):
            return checked, f"residue bound fails mod {g} (u={u}, v={v}, B={b!r}, X={xs.elements})"
        checked += 1
    return checked, None


@_suite("bounds_identities")
def _identities(cfg: VerifyConfig):
    ov = cfg.formula_overrides
    nash = ov.get("nash", _bounds.removal_bound_binomial)
    farhi_d = ov.get("farhi_d", _bounds.removal_bound_diameter)
    farhi_eta = ov.get("farhi_eta", _bounds.removal_bound_gap)
    farhi_mu = ov.get("farhi_mu", _bounds.removal_bound_reach)
    checked = 0
    for h in range(1, 21):
        for k in range(1, 21):
            if nash(h, k) != _bounds.removal_bound_binomial_sum(h, k):
                return checked, f"binomial closed form != sum at (h={h}, k={k})"
            checked += 1
    for h in range(1, 41):
        for k in range(1, 13):
            if nash(h, k) != (h + 1) * comb(h + k - 1, k) - k * comb(h + k - 1, k + 1):
                return checked, f"binomial bound wrong at (h={h}, k={k})"
            checked += 1
    for h in range(1, 31):
        for d in range(0, 11):
            if farhi_d(h, d) != sum((l * d + 1) * (h - l + 1) for l in range(h)):
                return checked, f"diameter closed form != sum at (h={h}, d={d})"
            checked += 1
    for h in range(1, 201):
        for d in range(0, 51):
            if farhi_d(h, d) != h * (h + 3) // 2 + d * h * (h - 1) * (h + 4) // 6:
                return checked, f"diameter bound wrong at (h={h}, d={d})"
            checked += 1
    for h in range(1, 51):
        for eta in range(1, 21):
            if farhi_eta(h, eta) != (eta * (h - 1) + 1) * (h + 1):
                return checked, f"gap bound product form fails at (h={h}, eta={eta})"
            checked += 1
    for h in range(1, 51):
        want = h * (h + 3) // 2
        if not nash(h, 1) == farhi_mu(h, 1) == farhi_d(h, 0) == want:
            return checked, f"k=1/mu=1/d=0 consistency fails at h={h}"
        checked += 1
    for h in range(1, 31):
        for d in range(1, 11):
            if _bounds.removal_bound_diameter_weak(h, d) < farhi_d(h, d):
                return checked, f"weak diameter bound undercuts at (h={h}, d={d})"
            checked += 1
    for h in range(2, 101):
        singles = {bv.name: bv.value for bv in _bounds.single_removal_bounds(h)}
        if not singles["plagne"] <= singles["nash_single"] <= singles["grekos"]:
            return checked, f"historical ordering breaks at h={h}"
        checked += 1
    for k in range(1, 4):
        h = 200
        lead = nash(h, k) / h ** (k + 1)
        if abs(lead - 1 / factorial(k + 1)) > 0.1 / factorial(k + 1):
            return checked, f"leading coefficient off for k={k}"
        checked += 1
    return checked, None


@_suite("order_oracle")
def _order_oracle(cfg: VerifyConfig):
    path = cfg.corpus_path or golden_corpus_path()
    entries = load_corpus(path)
    checked = 0
    for e in entries:
        cap = e.cap()
        lit = e.raw_basis

        def member(x, lit=lit):
            return raw_contains(lit, x)

        lo = _raw_min(lit)
        try:
            engine = order(e.basis, cap).order
        except (NotABasis, CapExceeded):
            engine = None
        got = order_bitset(member, lo, e.window, cap)
        if engine != got:
            return checked, f"{e.name}: engine order {engine} != oracle {got}"
        removed = set(e.remove)

        def member2(x, lit=lit, removed=removed):
            return raw_contains(lit, x) and x not in removed

        lo2 = lo
        while not member2(lo2):
            lo2 += 1
        try:
            engine2 = order(e.basis.remove_finite(FiniteIntSet(e.remove)), cap).order
        except (NotABasis, CapExceeded):
            engine2 = None
        got2 = order_bitset(member2, lo2, e.window, cap)
        if engine2 != got2:
            return checked, f"{e.name}: reduced order {engine2} != oracle {got2}"
        checked += 1
    return checked, None


def _raw_min(lit: dict) -> int:
    cands = list(lit["exceptional"])
    if lit["residues"]:
        t, g = lit["threshold"], lit["modulus"]
        cands.append(min(t + ((r - t) % g) for r in lit["residues"]))
    return min(cands)


@_suite("sumset_monotone")
def _monotone(cfg: VerifyConfig):
    rng = _rng(cfg, "sumset_monotone")
    checked = 0
    for _ in range(cfg.samples):
        a = _random_eps(rng, gmax=10, tlo=-5, thi=20)
        h = rng.randint(1, 4)
        hi_fold = a.nfold(h + 1)
        lo_fold = a.nfold(h)
        pool = a.enumerate_window(a.min_element(), a.threshold + 2 * a.modulus).elements
        elt = rng.choice(pool)
        pts = lo_fold.enumerate_window(
            lo_fold.min_element(), lo_fold.threshold + 3 * lo_fold.modulus
        ).elements
        for p in rng.sample(pts, min(20, len(pts))):
            if p + elt not in hi_fold:
                return checked, f"{h + 1}-fold misses {p + elt} = {p} + {elt} for {a!r}"
        checked += 1
    return checked, None


@_suite("params_brute")
def _params(cfg: VerifyConfig):
    rng = _rng(cfg, "params_brute")
    checked = 0
    for _ in range(cfg.samples):
        a = _random_eps(rng, tlo=-5, thi=25)
        pool = a.enumerate_window(a.min_element(), a.threshold + 2 * a.modulus + 6).elements
        xs = FiniteIntSet(rng.sample(pool, min(rng.randint(1, 4), len(pool))))
        b = a.remove_finite(xs)
        t, g = b.threshold, b.modulus
        window = b.enumerate_window(b.min_element(), max(t, b.min_element()) + 3 * g).elements
        got_gcd = eventual_gcd(b)
        brute_gcd = 0
        for x in window:
            brute_gcd = gcd(brute_gcd, x - window[0])
        if got_gcd != (brute_gcd or 1):
            return checked, f"eventual gcd {got_gcd} != brute {brute_gcd} for {b!r}"

        dia = xs.diameter()
        eta, a_lo, a_hi = eta_witness(b, xs)
        wide = b.enumerate_window(
            b.min_element(), max(t, b.min_element()) + 3 * g + dia + 1
        ).elements
        cand = [
            y - x
            for i, x in enumerate(wide)
            for y in wide[i + 1:]
            if y - x >= max(dia, 1)
        ]
        if cand and eta != min(cand):
            return checked, f"eta {eta} != brute {min(cand)} for B={b!r}, X={xs.elements}"
        if a_hi - a_lo != eta or a_lo not in b or a_hi not in b:
            return checked, f"eta witness ({a_lo}, {a_hi}) broken for B={b!r}"

        mu, y0 = mu_witness(b, xs)
        x1, xn = xs.min_element(), xs.max_element()
        ys = b.enumerate_window(x1 - mu - g - 5, xn + mu + g + 5).elements
        brute_mu = min(
            (max(xn, y) - min(x1, y) for y in ys), default=None
        )
        if brute_mu is not None and mu != brute_mu:
            return checked, f"mu {mu} != brute {brute_mu} for B={b!r}, X={xs.elements}"
        if y0 not in b or max(xn, y0) - min(x1, y0) != mu:
            return checked, f"mu witness {y0} broken for B={b!r}, X={xs.elements}"
        checked += 1
    return checked, None


SUITE_NAMES = list(_SUITES)


def run_suites(cfg: VerifyConfig | None = None, names=None) -> list:
    cfg = cfg or VerifyConfig()
    if names is not None:
        unknown = [n for n in names if n not in _SUITES]
        if unknown:
            raise ValueError(f"unknown suite {unknown[0]!r}")
    out = []
    for name, fn in _SUITES.items():
        if names is not None and name not in names:
            continue
        t0 = time.perf_counter()
        try:
            checked, cex = fn(cfg)
        except Exception as exc:
            checked, cex = 0, f"crash: {type(exc).__name__}: {exc}"
        out.append(SuiteResult(name, cex is None, checked, cex, time.perf_counter() - t0))
    return out
