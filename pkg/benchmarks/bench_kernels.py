"""Compare the compiled kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py --repeat 3
"""

import argparse
import time

from hyperlab import kernels
from hyperlab.classifiers import _encode
from hyperlab.intervals import BOTTOM, TOP
from hyperlab.hyperstructure import validate_krasner, validated, zmod, paper_24
from hyperlab.oracle import Corpus, gen_fuzzy


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def workloads():
    big = zmod(6, 2, 4)
    yield "validate zmod(6,2,4)", lambda be: validate_krasner(big, backend=be, override_cap=True)
    R = validated(zmod(5, 2, 4))
    sets = gen_fuzzy(R, Corpus(seed=7, count=200))
    encoded = [_encode(A) for A in sets]

    def ordinary_sweep(be):
        for lo, hi, enc in encoded:
            top, bottom = enc(TOP), enc(BOTTOM)
            be.sum_violation(R.f_masks, R.size, R.m, lo, hi, top, bottom)
            be.product_violation(R.g_table, R.size, R.n, lo, hi, bottom, top, bottom)

    yield "closed forms, 200 sets on zmod(5,2,4)", ordinary_sweep
    P = paper_24()
    yield "validate paper_24", lambda be: validate_krasner(P, backend=be)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)
    if kernels.compiled_backend is None:
        print("compiled kernels unavailable; only the fallback can be timed")
    print(f"{'workload':<40} {'python s':>10} {'compiled s':>11} {'speedup':>8}")
    for name, fn in workloads():
        py = best_of(lambda: fn(kernels.python_backend), args.repeat)
        if kernels.compiled_backend is None:
            print(f"{name:<40} {py:>10.4f} {'-':>11} {'-':>8}")
            continue
        cy = best_of(lambda: fn(kernels.compiled_backend), args.repeat)
        print(f"{name:<40} {py:>10.4f} {cy:>11.4f} {py / cy:>7.1f}x")


if __name__ == "__main__":
    main()
