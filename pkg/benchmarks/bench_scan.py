"""Compare the compiled and NumPy kernels of the completeness scan.

    python3 benchmarks/bench_scan.py [--bound 375] [--repeat 3]
"""

import argparse
import statistics
import time

from quinticgit import _kernels
from quinticgit.critical import _crit_matrix


def time_backend(fn, bound, exps, crit):
    scanned = 0
    bad = []
    t = time.perf_counter()
    for a0 in range(1, bound + 1):
        n, v = fn(a0, bound, exps, crit)
        scanned += n
        bad.extend(map(tuple, v))
    return time.perf_counter() - t, scanned, sorted(bad)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--degree", type=int, default=5)
    ap.add_argument("--bound", type=int, default=375)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    exps, crit = _crit_matrix(args.degree)
    results = {}
    for name, fn in sorted(_kernels.available_backends().items()):
        runs = [time_backend(fn, args.bound, exps, crit) for _ in range(args.repeat)]
        times = [r[0] for r in runs]
        results[name] = (statistics.median(times), runs[0][1], runs[0][2])
        print(f"{name:>7}: median {statistics.median(times):7.2f}s  min {min(times):7.2f}s  "
              f"scanned {runs[0][1]}  violations {len(runs[0][2])}")
    if len({(r[1], tuple(r[2])) for r in results.values()}) != 1:
        raise SystemExit("backends disagree")
    if "cython" in results:
        print(f"speedup: {results['python'][0] / results['cython'][0]:.1f}x")


if __name__ == "__main__":
    main()
