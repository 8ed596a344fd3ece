"""Compare the compiled Landen kernel with its NumPy twin.

Usage: python benchmarks/bench_kernels.py [--sizes 1000 100000] [--repeat 5]

Prints the best-of-N wall time per call for each backend, the speedup, and
the largest difference between the two outputs (they should agree to a few
ulps).
"""

import argparse
import timeit

import numpy as np

from jacobi_local.core import _landen_py

try:
    from jacobi_local.core import _landen
except ImportError:  # extension not built
    _landen = None


def _inputs(n, seed=0):
    rng = np.random.default_rng(seed)
    m = rng.uniform(0.01, 0.99, n)
    x = rng.uniform(-20.0, 20.0, n)
    return x, m


def _scalar_loop(fn, x, m):
    for xi, mi in zip(x, m):
        fn(float(xi), float(mi))


def bench(sizes, repeat, scalar_calls):
    rows = []
    for n in sizes:
        x, m = _inputs(n)
        t_py = min(timeit.repeat(lambda: _landen_py.ellipj_landen(x, m), number=1, repeat=repeat))
        row = {"case": f"array n={n}", "python": t_py}
        if _landen is not None:
            t_cy = min(timeit.repeat(lambda: _landen.ellipj_landen(x, m), number=1, repeat=repeat))
            a = np.stack(_landen_py.ellipj_landen(x, m))
            b = np.stack(_landen.ellipj_landen(x, m))
            row.update(cython=t_cy, diff=float(np.max(np.abs(a - b))))
        rows.append(row)
    x, m = _inputs(scalar_calls, seed=1)
    t_py = min(timeit.repeat(lambda: _scalar_loop(_landen_py.ellipj_landen, x, m),
                             number=1, repeat=repeat))
    row = {"case": f"scalar x{scalar_calls}", "python": t_py}
    if _landen is not None:
        row["cython"] = min(timeit.repeat(lambda: _scalar_loop(_landen.ellipj_landen, x, m),
                                          number=1, repeat=repeat))
    rows.append(row)
    return rows


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[1_000, 100_000])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--scalar-calls", type=int, default=2_000)
    args = ap.parse_args(argv)
    if _landen is None:
        print("compiled kernel not available; timing the NumPy twin only")
    print(f"{'case':<18} {'numpy [s]':>11} {'cython [s]':>11} {'speedup':>8} {'max diff':>10}")
    for r in bench(args.sizes, args.repeat, args.scalar_calls):
        cy = r.get("cython")
        sp = f"{r['python'] / cy:8.1f}" if cy else f"{'-':>8}"
        cys = f"{cy:11.5f}" if cy else f"{'-':>11}"
        diff = f"{r['diff']:10.2e}" if "diff" in r else f"{'-':>10}"
        print(f"{r['case']:<18} {r['python']:11.5f} {cys} {sp} {diff}")


if __name__ == "__main__":
    main()
