#!/usr/bin/env python3
"""Compare the compiled kernel backend against the pure-Python fallback.

Two views:
  * kernel microbenchmarks, both modules imported side by side;
  * end-to-end workloads run in subprocesses with NSYMM_BACKEND forced,
    so every layer above the kernels is exercised through each backend.

Usage: python benchmarks/bench_backends.py [--repeat N]
"""

import argparse
import os
import subprocess
import sys
import time


def best_of(repeat, fn):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def dense_terms(weight_bound, integral=False):
    # every composition of every weight up to the bound; rational or
    # integer coefficients (the latter exercises the den==1 fast path)
    from nsymm.words import compositions_of

    terms = {}
    for n in range(1, weight_bound + 1):
        for word in compositions_of(n):
            sign = 1 if len(word) % 2 else -1
            terms[word] = (sign * word[-1], 1) if integral else (sign, n)
    return terms


def micro_benchmarks(repeat):
    try:
        from nsymm import _core
    except ImportError:
        print("compiled backend not built; nothing to compare")
        return []
    from nsymm import _core_py

    p8 = dense_terms(8)
    p8i = dense_terms(8, integral=True)
    p6 = dense_terms(6)
    p4 = dense_terms(4)
    tensor = {((w[:1]), (w[1:])): c for w, c in dense_terms(7).items()}
    rows = []
    cases = [
        ("mul_word_terms (deg 8 x deg 8, rational)", lambda k: k.mul_word_terms(p8, p8)),
        ("mul_word_terms (deg 8 x deg 8, integral)", lambda k: k.mul_word_terms(p8i, p8i)),
        ("mul_word_terms (deg 6 x deg 4)", lambda k: k.mul_word_terms(p6, p4)),
        ("mul_tensor_terms (split deg 7, squared)", lambda k: k.mul_tensor_terms(tensor, tensor)),
        ("add_terms (deg 6 + deg 6)", lambda k: k.add_terms(p6, p6)),
        ("scale_terms (deg 6 by 3/7)", lambda k: k.scale_terms(p6, (3, 7))),
        ("quasi_shuffle_words ((1,2,1,1) x (2,1,2))",
         lambda k: k.quasi_shuffle_words((1, 2, 1, 1), (2, 1, 2))),
    ]
    for label, fn in cases:
        compiled = best_of(repeat, lambda: fn(_core))
        pure = best_of(repeat, lambda: fn(_core_py))
        rows.append((label, compiled, pure))
    return rows


WORKLOADS = {
    "verify_iso(7)": "from nsymm import verify_iso, degree_limit\n"
    "with degree_limit(8):\n    assert verify_iso(7).passed\n",
    "primitivity to degree 8": "from nsymm.suites import primitivity_suite\n"
    "assert primitivity_suite(8).passed\n",
    "qsymm convolution law to weight 6": "from nsymm import verify_hs_qsymm\n"
    "assert verify_hs_qsymm(6).passed\n",
    "newton consistency to degree 8": "from nsymm.suites import newton_consistency_suite\n"
    "assert newton_consistency_suite(8).passed\n",
}


def run_workload(code, backend):
    env = dict(os.environ, NSYMM_BACKEND=backend)
    timed = (
        "import time\n"
        "start = time.perf_counter()\n"
        + code
        + "print(time.perf_counter() - start)\n"
    )
    out = subprocess.run(
        [sys.executable, "-c", timed], env=env, capture_output=True, text=True, check=True
    )
    return float(out.stdout.strip().splitlines()[-1])


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=5, help="best-of repetitions")
    args = parser.parse_args()

    from nsymm import backend_name

    print(f"default backend in this environment: {backend_name()}")
    print()
    print("kernel microbenchmarks (best of %d):" % args.repeat)
    header = f"{'case':45s} {'compiled':>10s} {'pure':>10s} {'speedup':>8s}"
    print(header)
    print("-" * len(header))
    for label, compiled, pure in micro_benchmarks(args.repeat):
        print(f"{label:45s} {compiled*1e3:9.2f}ms {pure*1e3:9.2f}ms {pure/compiled:7.2f}x")

    print()
    print("end-to-end workloads (one subprocess each, import cost excluded):")
    print(header)
    print("-" * len(header))
    for label, code in WORKLOADS.items():
        compiled = run_workload(code, "compiled")
        pure = run_workload(code, "python")
        print(f"{label:45s} {compiled*1e3:9.2f}ms {pure*1e3:9.2f}ms {pure/compiled:7.2f}x")


if __name__ == "__main__":
    main()
