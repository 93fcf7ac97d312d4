"""Numerical invariants of a reflexive polytope.

The degree is the normalized volume of the polar polytope, and the Hilbert
coefficients are the lattice point counts of its dilations.  Both are
constant in flat families of the associated varieties, which is what makes
them useful alongside the classification verdicts.
"""

from __future__ import annotations

from .polytope import (
    LatticePolytope,
    is_reflexive,
    lattice_points,
    normalized_volume,
    polar,
)


def degree(poly: LatticePolytope) -> int:
    """Anticanonical degree: the normalized volume of the polar polytope."""
    if not is_reflexive(poly):
        raise ValueError("degree requires a reflexive polytope")
    return normalized_volume(polar(poly))


def hilbert_prefix(poly: LatticePolytope, m_max: int) -> list[int]:
    """Coefficients h_0..h_{m_max} of the Hilbert series.

    h_m counts the lattice points of the m-th dilation of the polar
    polytope, which is the dimension of the space of global sections of the
    m-th anticanonical power on the associated variety.
    """
    if m_max < 0:
        raise ValueError("m_max must be nonnegative")
    if not is_reflexive(poly):
        raise ValueError("hilbert coefficients require a reflexive polytope")
    dual = polar(poly)
    return [lattice_points(dual, m) for m in range(m_max + 1)]
