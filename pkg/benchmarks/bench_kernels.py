"""Compare the compiled and pure-Python chamber/alcove reduction.

    python3 benchmarks/bench_kernels.py [--points N] [--repeat R]
"""
import argparse
import timeit

import numpy as np

from fusionring import _kernels_py
from fusionring.rootdata import build_root_datum

try:
    from fusionring import _kernels as _compiled
except ImportError:
    _compiled = None


def workload(name, k, n, seed=0):
    d = build_root_datum(name)
    rng = np.random.default_rng(seed)
    pts = rng.integers(-3 * (k + d.dual_coxeter), 3 * (k + d.dual_coxeter), size=(n, d.rank), dtype=np.int64)
    return (pts, d.simple_root_array, d.theta_array, d.comark_array, k + d.dual_coxeter)


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--points", type=int, default=2000)
    p.add_argument("--repeat", type=int, default=5)
    args = p.parse_args(argv)
    print(f"{'case':<10}{'python [ms]':>14}{'cython [ms]':>14}{'speedup':>10}")
    for name, k in [("A2", 6), ("B3", 4), ("G2", 5), ("E6", 2)]:
        job = workload(name, k, args.points)
        t_py = min(timeit.repeat(lambda: _kernels_py.reflect_batch(*job), number=1, repeat=args.repeat))
        row = f"{name} k={k:<4}{1e3 * t_py:>14.2f}"
        if _compiled is not None:
            assert all(np.array_equal(a, b) for a, b in zip(_compiled.reflect_batch(*job), _kernels_py.reflect_batch(*job)))
            t_c = min(timeit.repeat(lambda: _compiled.reflect_batch(*job), number=1, repeat=args.repeat))
            row += f"{1e3 * t_c:>14.2f}{t_py / t_c:>9.1f}x"
        else:
            row += f"{'n/a':>14}{'':>10}"
        print(row)


if __name__ == "__main__":
    main()
