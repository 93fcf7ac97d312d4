"""Benchmark the lattice point counting backends against each other.

Runs the same dilation counts through the numba kernel and the numpy
fallback (plus the pure python scan on the smallest case, for scale) and
prints per-call timings.  The numba path is what FANO3_DISABLE_NUMBA=1
switches off.

Usage: python benchmarks/bench_lattice_points.py [repeats]
"""

import random
import sys
import time

from fano3._kernels import numba_enabled
from fano3.polytope import convex_hull, is_fano, is_reflexive, lattice_points, polar

PYRAMID = [(1, 0, 1), (1, 1, 1), (0, 1, 1), (-1, 0, 1), (0, -1, 1), (0, 0, -1)]


def random_reflexive(rng):
    while True:
        pts = set()
        while len(pts) < rng.randint(4, 9):
            p = tuple(rng.randint(-1, 1) for _ in range(3))
            if p != (0, 0, 0):
                pts.add(p)
        try:
            poly = convex_hull(pts)
        except ValueError:
            continue
        if is_fano(poly) and is_reflexive(poly):
            return poly


def shear(poly, k):
    # skew the polytope to stretch its bounding box without changing counts
    pts = [(x + k * z, y - k * x, z) for x, y, z in poly.vertices]
    return convex_hull(pts)


def time_backend(polys, dilation, backend, repeats):
    # one warmup pass so numba compilation stays out of the timing
    total = 0
    for poly in polys:
        total += lattice_points(poly, dilation, backend=backend)
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        check = 0
        for poly in polys:
            check += lattice_points(poly, dilation, backend=backend)
        best = min(best, time.perf_counter() - start)
        assert check == total
    return best, total


def main():
    repeats = int(sys.argv[1]) if len(sys.argv) > 1 else 5
    rng = random.Random(99)
    pyramid = convex_hull(PYRAMID)
    cases = {
        "pyramid polar, m=6": ([polar(pyramid)], 6),
        "100 random reflexive, m=5": ([random_reflexive(rng) for _ in range(100)], 5),
        "sheared pyramid polar, m=4": ([shear(polar(pyramid), 7)], 4),
    }
    backends = ["numba", "numpy"] if numba_enabled() else ["numpy"]
    if not numba_enabled():
        print("numba disabled or unavailable; timing the numpy path only")
    print(f"{'case':<32} {'backend':<8} {'points':>9} {'best of ' + str(repeats):>12}")
    for name, (polys, dilation) in cases.items():
        reference = None
        timings = {}
        run = list(backends)
        if name.startswith("pyramid"):
            run.append("python")
        for backend in run:
            best, total = time_backend(polys, dilation, backend, repeats)
            timings[backend] = best
            if reference is None:
                reference = total
            assert total == reference, "backends disagree"
            print(f"{name:<32} {backend:<8} {total:>9} {best * 1000:>9.2f} ms")
        if "numba" in timings and "numpy" in timings:
            print(f"{'':<32} numba speedup over numpy: "
                  f"{timings['numpy'] / timings['numba']:.1f}x")


if __name__ == "__main__":
    main()
