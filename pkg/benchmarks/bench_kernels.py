"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5]
"""
import argparse
import timeit

import numpy as np

from ulamcodes import _pykernels

try:
    from ulamcodes import _kernels
except ImportError:
    _kernels = None


def workloads(rng):
    a = rng.permutation(np.arange(1, 201)).astype(np.int64)
    b = rng.permutation(np.arange(1, 201)).astype(np.int64)
    book = np.array([rng.permutation(np.arange(1, 13)) for _ in range(2000)], dtype=np.int64)
    word = rng.permutation(np.arange(1, 13)).astype(np.int64)
    return {
        "lcs_length n=200": lambda k: k.lcs_length(a, b),
        "far_from_all 2000x12 d=9": lambda k: k.far_from_all(word, book, 9),
        "nearest 2000x12": lambda k: k.nearest(word, book),
        "min_pairwise_distance 300x12": lambda k: k.min_pairwise_distance(book[:300]),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()
    jobs = workloads(np.random.default_rng(args.seed))
    print(f"{'kernel':32} {'python (ms)':>12} {'cython (ms)':>12} {'speed-up':>9}")
    for name, job in jobs.items():
        py = min(timeit.repeat(lambda: job(_pykernels), number=1, repeat=args.repeat)) * 1e3
        if _kernels is None:
            print(f"{name:32} {py:12.3f} {'n/a':>12} {'n/a':>9}")
            continue
        if job(_kernels) != job(_pykernels):
            raise SystemExit(f"{name}: backends disagree")
        cy = min(timeit.repeat(lambda: job(_kernels), number=1, repeat=args.repeat)) * 1e3
        print(f"{name:32} {py:12.3f} {cy:12.3f} {py / cy:8.1f}x")


if __name__ == "__main__":
    main()
