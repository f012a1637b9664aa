"""Compare the compiled and numpy kernel backends.

    python benchmarks/bench_kernels.py [--repeat 5]
"""
import argparse
import time

import numpy as np

from convexsupport import _kernels, min_curvature_radius, random_convex, sweep


def best_of(fn, repeat):
    fn()
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def cases(degree):
    rng = np.random.default_rng(degree)
    ca = rng.standard_normal(degree) / np.arange(1, degree + 1) ** 2
    cb = rng.standard_normal(degree) / np.arange(1, degree + 1) ** 2
    m = max(4096, 64 * degree)
    p = random_convex(degree, 1, 0.05)
    return {
        "eval_series_uniform": lambda: _kernels.eval_series_uniform(1.0, ca, cb, m),
        "min_series_uniform": lambda: _kernels.min_series_uniform(1.0, ca, cb, m),
        "min_curvature_radius": lambda: min_curvature_radius(p),
    }


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--degrees", type=int, nargs="+", default=[8, 32, 128, 512])
    parser.add_argument("--sweep-count", type=int, default=500)
    args = parser.parse_args()

    backends = sorted(_kernels.BACKENDS)
    if "compiled" not in backends:
        print("compiled extension not built; timing the numpy backend only")
    header = f"{'kernel':<22}{'degree':>7}" + "".join(f"{b + ' ms':>14}" for b in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)

    original = _kernels.BACKEND
    try:
        for degree in args.degrees:
            table = {}
            for name in backends:
                _kernels.use(name)
                for kernel, fn in cases(degree).items():
                    table.setdefault(kernel, {})[name] = best_of(fn, args.repeat)
            for kernel, times in table.items():
                row = f"{kernel:<22}{degree:>7}" + "".join(f"{times[b] * 1e3:>14.3f}" for b in backends)
                if len(backends) == 2:
                    row += f"{times['python'] / times['compiled']:>9.1f}x"
                print(row)

        times = {}
        for name in backends:
            _kernels.use(name)
            times[name] = best_of(lambda: sweep(args.sweep_count, 8, 11), 1)
        row = f"{'sweep x' + str(args.sweep_count):<22}{8:>7}" + "".join(f"{times[b] * 1e3:>14.1f}" for b in backends)
        if len(backends) == 2:
            row += f"{times['python'] / times['compiled']:>9.1f}x"
        print(row)
    finally:
        _kernels.use(original)


if __name__ == "__main__":
    main()
