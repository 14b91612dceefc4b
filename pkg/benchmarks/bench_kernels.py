"""Compare the pure-Python and compiled triangle-packing kernels.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Workloads: greedy maximal packing on random color classes of growing size,
and exact search on 5n-vertex random colorings (the regime where the
monochromatic finder falls back to backtracking), plus an exact search
that has to exhaust the tree and report failure.
"""

import argparse
import timeit

import numpy as np

from ctm_ramsey import kernels
from ctm_ramsey.extremal import gen_ctm_lower_bound
from ctm_ramsey.graph import Color, random_coloring


def _mask(g, c):
    return np.ascontiguousarray(g.mask(c), dtype=np.uint8)


def workloads():
    for size in (30, 100, 300):
        gs = [_mask(random_coloring(size, s), Color.RED) for s in range(10)]
        yield f"greedy  K{size} x10", "greedy_pack", [(a,) for a in gs]
    for n in (2, 3, 4):
        gs = [_mask(random_coloring(5 * n, s), Color.RED) for s in range(50)]
        yield f"exact   5n={5 * n} x50", "pack_exact", [(a, n) for a in gs]
    # blue class of the lower-bound coloring: every triangle meets the n - 1
    # hub vertices, so the search must exhaust before answering "no"
    n = 3
    blue = _mask(gen_ctm_lower_bound(n), Color.BLUE)
    yield f"exact   blue {7 * n - 3}v need {n} (no)", "pack_exact", [(blue, n)]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    names = kernels.available_backends()
    print(f"active backend: {kernels.BACKEND}")
    print(f"{'workload':32}" + "".join(f"{n:>12}" for n in names) + ("     speedup" if len(names) == 2 else ""))
    for label, fn, calls in workloads():
        times = []
        for name in names:
            f = getattr(kernels.backend(name), fn)
            best = min(timeit.repeat(lambda: [f(*c) for c in calls], number=1, repeat=args.repeat))
            times.append(best)
        row = f"{label:32}" + "".join(f"{t * 1e3:10.2f}ms" for t in times)
        if len(times) == 2:
            row += f"{times[0] / times[1]:11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
