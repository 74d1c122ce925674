"""Compare the compiled and pure-Python kernels on representative workloads.

    python3 benchmarks/bench_kernels.py [--size N] [--repeat R]
"""

import argparse
import timeit

import numpy as np

from fracschrod import kernels


def _problem(n):
    rng = np.random.default_rng(0)
    d = np.ascontiguousarray(rng.normal(size=n) + 2.0)
    e = np.ascontiguousarray(rng.normal(size=n - 1))
    return d, e


def workloads(n):
    d, e = _problem(n)
    e2 = e * e
    w = np.ascontiguousarray(np.random.default_rng(1).normal(size=n))
    v = np.ascontiguousarray(np.random.default_rng(2).normal(size=n))
    rhs = np.ascontiguousarray(np.ones(n))
    return {
        "sturm_count": lambda k: k.sturm_count(d, e2, 0.5),
        "bisect 5 eigenvalues": lambda k: k.bisect_eigenvalues(d, e, 0, 5, 0.0, 400),
        "shifted solve": lambda k: k.tridiag_shifted_solve(d, e, 0.3, rhs),
        "toeplitz apply": lambda k: k.toeplitz_lower_apply(w, v),
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--size", type=int, default=2000)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    names = kernels.available_backends()
    mods = {name: kernels.backend(name) for name in names}
    print(f"size {args.size}, best of {args.repeat}, active backend: {kernels.BACKEND}")
    print(f"{'workload':<22}" + "".join(f"{name:>14}" for name in names) + ("     speedup" if len(names) > 1 else ""))
    for label, fn in workloads(args.size).items():
        times = {}
        for name, mod in mods.items():
            number = 1 if name == "python" else 20
            times[name] = min(timeit.repeat(lambda: fn(mod), number=number, repeat=args.repeat)) / number
        row = f"{label:<22}" + "".join(f"{times[n] * 1e3:>12.3f}ms" for n in names)
        if len(names) > 1:
            row += f"{times['python'] / times['cython']:>11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
