"""Command-line interface.

Subcommands:

    analyze <file>     basis-side facts per corpus entry (canonical form,
                       eventual gcd, density, order)
    remove <file>      full removal pipeline, human-readable per entry
    report <file>      same pipeline as a csv/md/json table
    bounds             evaluate the upper-bound formulas for given params
    verify             run the verification suites
    gen                write a randomized corpus
    kneser             sweep pair sums in Z/g against the stabilizer bound

Exit codes: 0 all good, 1 at least one assertion violation (a bound or
check a theorem guarantees failed, which means an implementation bug),
2 input error, 3 an order search hit its cap.  The ADDBASIS_CAP
environment variable overrides the default order cap of 64 wherever no
explicit cap is given.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .basis import eventual_gcd, order
from .bounds import (
    removal_bound_binomial,
    removal_bound_diameter,
    removal_bound_diameter_weak,
    removal_bound_gap,
    removal_bound_reach,
    BoundValue,
)
from .corpus import (
    corpus_to_json,
    emit_report,
    gen_corpus,
    golden_corpus_path,
    load_corpus,
    run_corpus,
)
from .errors import AddBasisError, CapExceeded, NotABasis, ParseError, ValidationError
from .kernels import BACKEND, pair_sweep
from .residues import kneser_witness, prop2_check, ResidueSet
from .verify import run_suites, SUITE_NAMES, VerifyConfig

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2
EXIT_CAP = 3


def _write_out(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_analyze(args) -> int:
    entries = load_corpus(args.corpus)
    code = EXIT_OK
    for e in entries:
        b = e.basis
        print(f"{e.name}:")
        print(f"  canonical: exceptional={list(b.exceptional)} threshold={b.threshold}"
              f" modulus={b.modulus} residues={list(b.residues)}")
        print(f"  min element {b.min_element()}, lower density {b.lower_density()}")
        try:
            g = eventual_gcd(b)
            print(f"  eventual gcd {g}")
            res = order(b, e.cap())
            print(f"  order {res.order}")
        except NotABasis as exc:
            print(f"  not a basis: {exc}")
        except CapExceeded as exc:
            print(f"  order above cap {exc.cap}")
            code = EXIT_CAP
    return code


def _run_pipeline(args):
    entries = load_corpus(args.corpus)
    reports, skips = run_corpus(entries)
    code = EXIT_OK
    if any(s.cap_related for s in skips):
        code = EXIT_CAP
    if any(r.violations() for r in reports):
        code = EXIT_VIOLATION
    return reports, skips, code


def _cmd_remove(args) -> int:
    reports, skips, code = _run_pipeline(args)
    for r in reports:
        p = r.params
        print(f"{r.name}: h={r.h} exact={r.exact} "
              f"k={p.k} d={p.d} eta={p.eta} mu={p.mu}")
        for bv in r.bounds:
            print(f"  {bv.name:10s} {bv.value:>8}  slack {bv.value - r.exact}")
        print(f"  decomposition {'ok' if r.decomposition_ok else 'FAILED'},"
              f" construction {'ok' if r.construction_ok else 'FAILED'}")
        viol = r.violations()
        if viol:
            print(f"  VIOLATIONS: {', '.join(viol)}")
    for s in skips:
        print(f"{s.name}: skipped ({s.reason})")
    return code


def _cmd_report(args) -> int:
    reports, skips, code = _run_pipeline(args)
    _write_out(emit_report(reports, args.format), args.out)
    for s in skips:
        print(f"skipped {s.name}: {s.reason}", file=sys.stderr)
    return code


def _cmd_bounds(args) -> int:
    h = args.h
    vals = [BoundValue("nash", removal_bound_binomial(h, args.k),
                       {"h": h, "k": args.k})]
    if args.d is not None:
        vals.append(BoundValue("farhi_d", removal_bound_diameter(h, args.d),
                               {"h": h, "d": args.d}))
        if args.d >= 1:
            vals.append(BoundValue("remark_d", removal_bound_diameter_weak(h, args.d),
                                   {"h": h, "d": args.d}))
    if args.eta is not None:
        vals.append(BoundValue("farhi_eta", removal_bound_gap(h, args.eta),
                               {"h": h, "eta": args.eta}))
    if args.mu is not None:
        vals.append(BoundValue("farhi_mu", removal_bound_reach(h, args.mu),
                               {"h": h, "mu": args.mu}))
    if args.ap:
        vals.append(BoundValue("cor2", removal_bound_diameter(h, args.k - 1),
                               {"h": h, "d": args.k - 1}))
    vals.sort(key=lambda bv: (bv.value, bv.name))
    if args.format == "csv":
        lines = ["bound,value"] + [f"{bv.name},{bv.value}" for bv in vals]
        print("\n".join(lines))
    elif args.format == "md":
        print("| bound | value |")
        print("| --- | --- |")
        for bv in vals:
            print(f"| {bv.name} | {bv.value} |")
    else:
        print(json.dumps({bv.name: bv.value for bv in vals}, indent=2))
    return EXIT_OK


def _cmd_verify(args) -> int:
    cfg = VerifyConfig(seed=args.seed, max_modulus=args.max_modulus,
                       corpus_path=args.corpus)
    results = run_suites(cfg, names=args.suite or None)
    failed = 0
    for r in results:
        mark = "PASS" if r.passed else "FAIL"
        line = f"{mark} {r.name} (checked {r.checked}, {r.seconds:.2f}s)"
        if not r.passed:
            line += f"\n     counterexample: {r.counterexample}"
            failed += 1
        print(line)
    print(f"{len(results) - failed}/{len(results)} suites passed "
          f"(seed {args.seed}, backend {BACKEND})")
    return EXIT_OK if failed == 0 else EXIT_VIOLATION


def _cmd_gen(args) -> int:
    entries = gen_corpus(args.seed, args.count)
    _write_out(corpus_to_json(entries), args.out)
    return EXIT_OK


def _cmd_kneser(args) -> int:
    g = args.modulus
    if g < 1:
        print(f"modulus must be positive, got {g}", file=sys.stderr)
        return EXIT_INPUT
    if args.exhaustive:
        if g > 16:
            print("exhaustive sweep supports modulus <= 16", file=sys.stderr)
            return EXIT_INPUT
        res = pair_sweep(g)
        ineq, prop2, stab, first_b, first_c, pairs = (int(v) for v in res)
        bad = ineq + prop2 + stab
        print(f"Z/{g}: {pairs} pairs, {bad} violations (backend {BACKEND})")
        if bad:
            bset = [i for i in range(g) if first_b >> i & 1]
            cset = [i for i in range(g) if first_c >> i & 1]
            print(f"first: B={bset} C={cset}")
            return EXIT_VIOLATION
        return EXIT_OK
    rng = random.Random(args.seed)
    bad = 0
    first = None
    for _ in range(args.samples):
        b = ResidueSet(g, [i for i in range(g) if rng.getrandbits(1)] or [0])
        c = ResidueSet(g, [i for i in range(g) if rng.getrandbits(1)] or [0])
        _, ok = kneser_witness(b, c)
        if not (ok and prop2_check(b, c)):
            bad += 1
            first = first or (b, c)
    print(f"Z/{g}: {args.samples} sampled pairs, {bad} violations")
    if bad:
        print(f"first: B={first[0].members} C={first[1].members}")
        return EXIT_VIOLATION
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="addbasis",
        description="exact sumset and basis-order computations on "
                    "eventually periodic sets of integers",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="basis facts per corpus entry")
    p.add_argument("corpus", help="corpus JSON file")
    p.set_defaults(fn=_cmd_analyze)

    p = sub.add_parser("remove", help="order after removal, bounds, checks")
    p.add_argument("corpus", help="corpus JSON file")
    p.set_defaults(fn=_cmd_remove)

    p = sub.add_parser("report", help="removal pipeline as a table")
    p.add_argument("corpus", help="corpus JSON file")
    p.add_argument("--format", choices=["csv", "md", "json"], default="csv")
    p.add_argument("--out", help="write to a file instead of stdout")
    p.set_defaults(fn=_cmd_report)

    p = sub.add_parser("bounds", help="evaluate upper-bound formulas")
    p.add_argument("--h", type=int, required=True, help="order of the base set")
    p.add_argument("--k", type=int, required=True, help="number of removed elements")
    p.add_argument("--d", type=int, help="diameter / gcd-step of the removed set")
    p.add_argument("--eta", type=int, help="least gap >= diam(X) in the reduced set")
    p.add_argument("--mu", type=int, help="least diameter of X with one element adjoined")
    p.add_argument("--ap", action="store_true",
                   help="removed set is an arithmetic progression")
    p.add_argument("--format", choices=["csv", "md", "json"], default="csv")
    p.set_defaults(fn=_cmd_bounds)

    p = sub.add_parser("verify", help="run the verification suites")
    p.add_argument("--seed", type=int, default=20260817)
    p.add_argument("--max-modulus", type=int, default=8,
                   help="exhaustive pair sweep up to this modulus")
    p.add_argument("--corpus", help="corpus for the order-oracle suite "
                                    "(default: the packaged one)")
    p.add_argument("--suite", action="append", choices=SUITE_NAMES,
                   help="run only this suite (repeatable)")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("gen", help="write a randomized corpus")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--out", help="write to a file instead of stdout")
    p.set_defaults(fn=_cmd_gen)

    p = sub.add_parser("kneser", help="sweep sums of residue sets in Z/g")
    p.add_argument("--modulus", type=int, required=True)
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--samples", type=int, default=10000)
    p.add_argument("--seed", type=int, default=20260817)
    p.set_defaults(fn=_cmd_kneser)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (ParseError, ValidationError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CapExceeded as exc:
        print(f"cap exceeded: no order within {exc.cap}", file=sys.stderr)
        return EXIT_CAP
    except AddBasisError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
