#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure numpy fallback.

The four hot kernels are the exhaustive pair sweep over Z/g, the triple
sweep, the fold-profile sweep, and the boolean window convolution used
by the exact sumset.  Both backends compute identical results; this
script times them side by side.

Usage:
    python3 benchmarks/bench_kernels.py
    python3 benchmarks/bench_kernels.py --max-modulus 12 --repeats 5
    python3 benchmarks/bench_kernels.py --output results.json
"""

import argparse
import json
import time

import numpy as np

from addbasis.kernels import numpy_impl

try:
    from addbasis.kernels import numba_impl
    NUMBA_AVAILABLE = True
except ImportError:
    numba_impl = None
    NUMBA_AVAILABLE = False


def time_call(fn, *args, repeats=3):
    best = float("inf")
    result = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def bench_pair_sweep(max_modulus, repeats):
    rows = []
    for g in range(6, max_modulus + 1):
        t_np, r_np = time_call(numpy_impl.pair_sweep, g, repeats=repeats)
        row = {"kernel": "pair_sweep", "modulus": g,
               "pairs": int(r_np[5]), "numpy_s": t_np}
        if NUMBA_AVAILABLE:
            t_nb, r_nb = time_call(numba_impl.pair_sweep, g, repeats=repeats)
            assert np.array_equal(np.asarray(r_np), np.asarray(r_nb)), g
            row["numba_s"] = t_nb
            row["speedup"] = t_np / t_nb if t_nb > 0 else float("inf")
        rows.append(row)
    return rows


def bench_triple_sweep(max_modulus, repeats):
    rows = []
    for g in range(4, min(max_modulus, 7) + 1):
        t_np, r_np = time_call(numpy_impl.triple_sweep, g, repeats=repeats)
        row = {"kernel": "triple_sweep", "modulus": g,
               "triples": int(r_np[4]), "numpy_s": t_np}
        if NUMBA_AVAILABLE:
            t_nb, r_nb = time_call(numba_impl.triple_sweep, g, repeats=repeats)
            assert np.array_equal(np.asarray(r_np), np.asarray(r_nb)), g
            row["numba_s"] = t_nb
            row["speedup"] = t_np / t_nb if t_nb > 0 else float("inf")
        rows.append(row)
    return rows


def bench_lemma1_sweep(max_modulus, repeats):
    rows = []
    for g in range(8, max_modulus + 3):
        t_np, r_np = time_call(numpy_impl.lemma1_sweep, g, repeats=repeats)
        row = {"kernel": "lemma1_sweep", "modulus": g,
               "masks": int(r_np[2]), "numpy_s": t_np}
        if NUMBA_AVAILABLE:
            t_nb, r_nb = time_call(numba_impl.lemma1_sweep, g, repeats=repeats)
            assert np.array_equal(np.asarray(r_np), np.asarray(r_nb)), g
            row["numba_s"] = t_nb
            row["speedup"] = t_np / t_nb if t_nb > 0 else float("inf")
        rows.append(row)
    return rows


def bench_window_sumset(repeats):
    rng = np.random.default_rng(20260817)
    rows = []
    for n in (1 << 10, 1 << 12, 1 << 14):
        a = rng.random(n) < 0.3
        b = rng.random(n) < 0.3
        t_np, r_np = time_call(numpy_impl.window_sumset, a, b, repeats=repeats)
        row = {"kernel": "window_sumset", "size": n, "numpy_s": t_np}
        if NUMBA_AVAILABLE:
            t_nb, r_nb = time_call(numba_impl.window_sumset, a, b, repeats=repeats)
            assert np.array_equal(r_np, r_nb), n
            row["numba_s"] = t_nb
            row["speedup"] = t_np / t_nb if t_nb > 0 else float("inf")
        rows.append(row)
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-modulus", type=int, default=11)
    ap.add_argument("--repeats", type=int, default=3)
    ap.add_argument("--output", help="also dump rows as JSON")
    args = ap.parse_args()

    if NUMBA_AVAILABLE:
        print("warming up the jit...")
        numba_impl.warmup()
    else:
        print("numba not importable; timing the numpy path only")

    rows = []
    rows += bench_pair_sweep(args.max_modulus, args.repeats)
    rows += bench_triple_sweep(args.max_modulus, args.repeats)
    rows += bench_lemma1_sweep(args.max_modulus, args.repeats)
    rows += bench_window_sumset(args.repeats)

    hdr = f"{'kernel':14s} {'arg':>6s} {'cases':>9s} {'numpy':>10s} {'numba':>10s} {'speedup':>8s}"
    print(hdr)
    print("-" * len(hdr))
    for row in rows:
        arg = row.get("modulus") or row.get("size")
        cases = row.get("pairs") or row.get("triples") or row.get("masks") or ""
        numba_s = f"{row['numba_s'] * 1e3:8.2f}ms" if "numba_s" in row else "-"
        speed = f"{row['speedup']:7.1f}x" if "speedup" in row else "-"
        print(f"{row['kernel']:14s} {arg:>6d} {cases!s:>9s} "
              f"{row['numpy_s'] * 1e3:8.2f}ms {numba_s:>10s} {speed:>8s}")

    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            json.dump({"numba_available": NUMBA_AVAILABLE, "rows": rows}, fh, indent=2)
        print(f"wrote {args.output}")


if __name__ == "__main__":
    main()
