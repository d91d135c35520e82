"""The verification suites: determinism, failure injection, name handling."""

import pytest

from addbasis.verify import run_suites, SUITE_NAMES, VerifyConfig


def test_suite_names_registered():
    assert len(SUITE_NAMES) == len(set(SUITE_NAMES))
    for expected in ("intset_canonical", "kneser_pairs", "lemma2_diameter",
                     "lemma3_covering", "bounds_identities", "order_oracle"):
        assert expected in SUITE_NAMES


def test_unknown_suite_name():
    with pytest.raises(ValueError, match="unknown suite"):
        run_suites(names=["no_such_suite"])


def test_deterministic_under_seed():
    cfg = VerifyConfig(seed=99, max_modulus=5)
    names = ["intset_canonical", "intset_counting", "params_brute"]
    a = run_suites(cfg, names=names)
    b = run_suites(cfg, names=names)
    assert [(r.name, r.passed, r.checked, r.counterexample) for r in a] == [
        (r.name, r.passed, r.checked, r.counterexample) for r in b
    ]
    c = run_suites(VerifyConfig(seed=100, max_modulus=5), names=["params_brute"])
    assert all(r.passed for r in c)


def test_core_suites_pass_quickly():
    cfg = VerifyConfig(seed=3, max_modulus=4, samples=40)
    results = run_suites(cfg, names=["intset_sumset_brute", "kneser_pairs",
                                     "lemma3_covering", "sumset_monotone"])
    assert all(r.passed for r in results)
    assert all(r.checked > 0 for r in results)


def test_injected_wrong_formula_is_caught():
    cfg = VerifyConfig(
        seed=5,
        formula_overrides={"farhi_eta": lambda h, eta: eta * (h * h - 1) + h},
    )
    (res,) = run_suites(cfg, names=["bounds_identities"])
    assert not res.passed
    assert res.counterexample
    assert "farhi_eta" in res.counterexample or "eta" in res.counterexample


def test_injected_wrong_nash_is_caught():
    cfg = VerifyConfig(
        seed=5,
        formula_overrides={"nash": lambda h, k: h * k + 1},
    )
    (res,) = run_suites(cfg, names=["bounds_identities"])
    assert not res.passed


def test_crash_becomes_failure():
    def boom(h, eta):
        raise RuntimeError("synthetic")

    cfg = VerifyConfig(seed=5, formula_overrides={"farhi_eta": boom})
    (res,) = run_suites(cfg, names=["bounds_identities"])
    assert not res.passed
    assert "crash" in res.counterexample
