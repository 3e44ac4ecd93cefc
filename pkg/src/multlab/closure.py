"""Integral closure of m-primary monomial ideals via the Newton polyhedron.

A monomial x^v lies in the integral closure exactly when v is >= some convex
combination of the exponent vectors of the generators.  Membership is an
exact linear feasibility problem over the rationals, solved here with a
phase-I simplex on `fractions.Fraction` entries (Bland's rule, so it always
terminates).  The closure itself is found by testing every candidate in the
box spanned by the pure-power bounds, then minimalizing.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product as iter_product

from .monomial import MonomialIdeal, box_bounds, contains, ideal


def _phase_one_feasible(cols: list[tuple[int, ...]], rhs: tuple[int, ...]) -> bool:
    """Is there lam >= 0 with sum(lam) = 1 and sum lam_j cols[j] <= rhs?

    Standard form: one convexity row with an artificial variable, one row per
    coordinate with a slack.  Minimizing the artificial to zero certifies
    feasibility; everything stays in exact rational arithmetic.
    """
    g = len(cols)
    d = len(rhs)
    rows = d + 1
    ncols = g + d + 1  # lambdas, slacks, artificial
    art = g + d

    T = [[Fraction(0)] * (ncols + 1) for _ in range(rows)]
    for i in range(d):
        for j in range(g):
            T[i][j] = Fraction(cols[j][i])
        T[i][g + i] = Fraction(1)
        T[i][ncols] = Fraction(rhs[i])
    for j in range(g):
        T[d][j] = Fraction(1)
    T[d][art] = Fraction(1)
    T[d][ncols] = Fraction(1)

    basis = list(range(g, g + d)) + [art]
    # objective: minimize the artificial == maximize -art; reduced costs
    # start as the negated artificial row since art is basic there
    z = [-T[d][j] for j in range(ncols + 1)]
    z[art] = Fraction(0)

    while True:
        # Bland's rule (smallest eligible index) guarantees termination;
        # the artificial never re-enters once driven out
        enter = next((j for j in range(ncols) if j != art and z[j] < 0), None)
        if enter is None:
            break
        ratios = [
            (T[i][ncols] / T[i][enter], basis[i], i)
            for i in range(rows)
            if T[i][enter] > 0
        ]
        if not ratios:
            return False  # unbounded phase-I: cannot happen, but be safe
        _, _, leave = min(ratios)
        piv = T[leave][enter]
        T[leave] = [v / piv for v in T[leave]]
        for i in range(rows):
            if i != leave and T[i][enter]:
                f = T[i][enter]
                T[i] = [a - f * b for a, b in zip(T[i], T[leave])]
        if z[enter]:
            f = z[enter]
            z = [a - f * b for a, b in zip(z, T[leave])]
        basis[leave] = enter
        if art not in basis:
            return True
    return -z[ncols] == 0


def newton_polyhedron_member(I: MonomialIdeal, point) -> bool:
    """True when x^point lies in the integral closure of I."""
    v = tuple(int(e) for e in point)
    if len(v) != I.dim:
        raise ValueError(f"point has {len(v)} coordinates, ideal has {I.dim}")
    if any(e < 0 for e in v):
        raise ValueError("exponents must be non-negative")
    if contains(I, v):
        return True
    return _phase_one_feasible(list(I.gens), v)


def integral_closure(I: MonomialIdeal) -> MonomialIdeal:
    """Smallest integrally closed monomial ideal containing I.

    Candidates live in the box of pure-power bounds: any closure generator
    is <= the bound vector coordinatewise, so scanning the box and
    minimalizing is complete.  Requires an m-primary ideal (finite box).
    """
    bounds = box_bounds(I)
    members = [
        v
        for v in iter_product(*(range(b + 1) for b in bounds))
        if newton_polyhedron_member(I, v)
    ]
    return ideal(members, dim=I.dim)
