"""Lattice point counting kernels.

Counting the lattice points of a dilated polytope is the one hot loop in the
whole package.  The kernels scan the (x, y) range of the bounding box and,
for each column, clip the z interval against the facet inequalities
A @ p <= b with exact integer floor divisions, so the work is quadratic in
the box size rather than cubic.  Three interchangeable backends exist:

* ``numba``  - an @njit compiled scan (the default when numba imports),
* ``numpy``  - the same scan vectorised one x-slab at a time,
* ``python`` - nested loops on Python ints, exact for any magnitude.

Set the environment variable ``FANO3_DISABLE_NUMBA=1`` to force the numpy
path.  The compiled backends work on int64; callers are guarded by an exact
overflow bound computed in Python ints, and anything that could exceed int64
is routed to the python backend instead.  All backends agree exactly and the
test suite checks them against each other and against brute-force scans.
"""

from __future__ import annotations

import os

import numpy as np

try:  # pragma: no cover - absence is handled by the numpy path
    from numba import njit
except ImportError:  # pragma: no cover
    njit = None

_INT64_SAFE = 2**62


def numba_enabled() -> bool:
    return njit is not None and os.environ.get("FANO3_DISABLE_NUMBA", "") != "1"


def default_backend() -> str:
    return "numba" if numba_enabled() else "numpy"


if njit is not None:

    @njit(cache=True)
    def _count_numba(normals, bounds, lo, hi):  # pragma: no cover - compiled
        count = 0
        nf = normals.shape[0]
        for x in range(lo[0], hi[0] + 1):
            for y in range(lo[1], hi[1] + 1):
                zlo = lo[2]
                zhi = hi[2]
                feasible = True
                for i in range(nf):
                    c = normals[i, 2]
                    rest = bounds[i] - normals[i, 0] * x - normals[i, 1] * y
                    if c == 0:
                        if rest < 0:
                            feasible = False
                            break
                    elif c > 0:
                        top = rest // c
                        if top < zhi:
                            zhi = top
                    else:
                        bottom = -(rest // (-c))
                        if bottom > zlo:
                            zlo = bottom
                    if zlo > zhi:
                        feasible = False
                        break
                if feasible and zlo <= zhi:
                    count += zhi - zlo + 1
        return count


def _count_numpy(normals, bounds, lo, hi) -> int:
    ys = np.arange(lo[1], hi[1] + 1, dtype=np.int64)
    count = 0
    for x in range(lo[0], hi[0] + 1):
        zlo = np.full(ys.shape, lo[2], dtype=np.int64)
        zhi = np.full(ys.shape, hi[2], dtype=np.int64)
        feasible = np.ones(ys.shape, dtype=bool)
        for (a, b, c), bound in zip(normals, bounds):
            rest = bound - a * x - b * ys
            if c == 0:
                feasible &= rest >= 0
            elif c > 0:
                np.minimum(zhi, rest // c, out=zhi)
            else:
                np.maximum(zlo, -(rest // (-c)), out=zlo)
        widths = zhi - zlo + 1
        widths[~feasible] = 0
        np.maximum(widths, 0, out=widths)
        count += int(widths.sum())
    return count


def _count_python(normals, bounds, lo, hi) -> int:
    count = 0
    for x in range(lo[0], hi[0] + 1):
        for y in range(lo[1], hi[1] + 1):
            zlo, zhi = lo[2], hi[2]
            feasible = True
            for (a, b, c), bound in zip(normals, bounds):
                rest = bound - a * x - b * y
                if c == 0:
                    if rest < 0:
                        feasible = False
                        break
                elif c > 0:
                    zhi = min(zhi, rest // c)
                else:
                    zlo = max(zlo, -(rest // (-c)))
                if zlo > zhi:
                    feasible = False
                    break
            if feasible and zlo <= zhi:
                count += zhi - zlo + 1
    return count


def _fits_int64(normals, bounds, lo, hi) -> bool:
    # exact worst-case bound on |<n, p>| over the box, in Python ints
    reach = [max(abs(a), abs(b)) for a, b in zip(lo, hi)]
    for n, b in zip(normals, bounds):
        if abs(b) + sum(abs(c) * r for c, r in zip(n, reach)) >= _INT64_SAFE:
            return False
    return True


def count_box_points(normals, bounds, lo, hi, backend: str | None = None) -> int:
    """Number of integer points p with lo <= p <= hi and normals @ p <= bounds.

    ``normals`` is a sequence of integer 3-vectors, ``bounds`` the matching
    right-hand sides.  The backend is picked automatically unless forced.
    """
    normals = [tuple(int(c) for c in n) for n in normals]
    bounds = [int(b) for b in bounds]
    lo = tuple(int(c) for c in lo)
    hi = tuple(int(c) for c in hi)
    if any(l > h for l, h in zip(lo, hi)):
        return 0
    if backend is None:
        backend = default_backend()
        if not _fits_int64(normals, bounds, lo, hi):
            backend = "python"
    if backend == "python":
        return _count_python(normals, bounds, lo, hi)
    if not _fits_int64(normals, bounds, lo, hi):
        raise OverflowError("facet data exceeds the int64 range of this backend")
    a = np.array(normals, dtype=np.int64)
    b = np.array(bounds, dtype=np.int64)
    lo_a = np.array(lo, dtype=np.int64)
    hi_a = np.array(hi, dtype=np.int64)
    if backend == "numba":
        if njit is None:
            raise RuntimeError("numba backend requested but numba is not installed")
        return int(_count_numba(a, b, lo_a, hi_a))
    if backend == "numpy":
        return _count_numpy(a, b, lo_a, hi_a)
    raise ValueError(f"unknown backend {backend!r}")


def list_box_points(normals, bounds, lo, hi) -> list[tuple[int, int, int]]:
    """The integer points themselves, via an exact python scan."""
    normals = [tuple(int(c) for c in n) for n in normals]
    bounds = [int(b) for b in bounds]
    out = []
    for x in range(lo[0], hi[0] + 1):
        for y in range(lo[1], hi[1] + 1):
            for z in range(lo[2], hi[2] + 1):
                if all(
                    n[0] * x + n[1] * y + n[2] * z <= b
                    for n, b in zip(normals, bounds)
                ):
                    out.append((x, y, z))
    return out
