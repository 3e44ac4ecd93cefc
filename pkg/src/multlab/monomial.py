"""Monomials and monomial ideals in k[x_1..x_d], exponent-vector style.

A monomial is a tuple of non-negative ints (its exponent vector); a
monomial ideal is the set of monomials divisible by at least one of a
finite set of generators.  Ideals are kept in canonical form: the
generators are the divisibility-minimal antichain, sorted lexicographically,
so equal ideals compare equal as values.

All arithmetic is exact.  Large generator sets are filtered with numpy
(int64 with explicit bounds checks); results are ordinary Python ints.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from math import comb

import numpy as np

from .errors import DimensionMismatchError, NotMPrimaryError

Monomial = tuple[int, ...]

# Exponents are machine integers inside the engine; keep far away from the
# int64 edge so sums of generators can never wrap.
MAX_EXPONENT = 2**31


def divides(a: Monomial, b: Monomial) -> bool:
    """True if x^a divides x^b, i.e. a <= b componentwise."""
    return all(ai <= bi for ai, bi in zip(a, b))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(ai + bi for ai, bi in zip(a, b))


def degree(a: Monomial) -> int:
    return sum(a)


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal, stored as its minimal generators.

    The constructor validates shape and ordering but trusts that `gens`
    is already a divisibility antichain; build ideals from arbitrary
    generating sets with `ideal(...)`, which minimalizes.
    """

    dim: int
    gens: tuple[Monomial, ...]

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dim must be >= 1")
        if not self.gens:
            raise ValueError("an ideal needs at least one generator")
        prev = None
        for g in self.gens:
            if len(g) != self.dim:
                raise DimensionMismatchError(
                    f"generator {g} has {len(g)} exponents, expected {self.dim}"
                )
            if any(e < 0 or e >= MAX_EXPONENT for e in g):
                raise ValueError(f"exponents must be in [0, {MAX_EXPONENT}): {g}")
            if prev is not None and g <= prev:
                raise ValueError("generators must be strictly increasing (lex)")
            prev = g

    def __str__(self) -> str:
        from .expr import format_ideal

        return format_ideal(self)

    def __contains__(self, m: Monomial) -> bool:
        return contains(self, m)

    @property
    def is_unit(self) -> bool:
        return self.gens[0] == (0,) * self.dim


def ideal(gens, dim: int | None = None) -> MonomialIdeal:
    """Build an ideal from any generating set, minimalizing it.

    >>> ideal([(2, 0), (3, 1), (0, 1)]).gens
    ((0, 1), (2, 0))
    """
    gens = [tuple(int(e) for e in g) for g in gens]
    if not gens:
        raise ValueError("empty generating set")
    if dim is None:
        dim = len(gens[0])
    return MonomialIdeal(dim, minimalize(gens))


def unit_ideal(dim: int) -> MonomialIdeal:
    return MonomialIdeal(dim, ((0,) * dim,))


def m_ideal(dim: int) -> MonomialIdeal:
    """The maximal ideal m = (x_1, ..., x_d)."""
    eye = []
    for i in range(dim):
        g = [0] * dim
        g[i] = 1
        eye.append(tuple(g))
    return MonomialIdeal(dim, tuple(sorted(eye)))


def m_power(dim: int, k: int) -> MonomialIdeal:
    """m^k, generated by all monomials of total degree k."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return unit_ideal(dim)
    gens = []
    for pick in combinations_with_replacement(range(dim), k):
        g = [0] * dim
        for i in pick:
            g[i] += 1
        gens.append(tuple(g))
    return MonomialIdeal(dim, tuple(sorted(gens)))


def m_power_degree(ideal_: MonomialIdeal) -> int | None:
    """k if the ideal equals m^k, else None.  Recognized in O(#gens)."""
    k = degree(ideal_.gens[0])
    if any(degree(g) != k for g in ideal_.gens):
        return None
    if len(ideal_.gens) != comb(k + ideal_.dim - 1, ideal_.dim - 1):
        return None
    return k


# ---------------------------------------------------------------------------
# minimalization (divisibility antichain)

def minimalize(gens) -> tuple[Monomial, ...]:
    """Divisibility-minimal antichain of a generating set, sorted lex.

    Raises ValueError on empty input.
    """
    pts = {tuple(int(e) for e in g) for g in gens}
    if not pts:
        raise ValueError("empty generating set")
    if len(pts) <= 48:
        out = [p for p in pts if not any(q != p and divides(q, p) for q in pts)]
        return tuple(sorted(out))
    arr = np.array(sorted(pts), dtype=np.int64)
    return tuple(map(tuple, minimalize_array(arr).tolist()))


def as_array(ideal_: MonomialIdeal) -> np.ndarray:
    return np.array(ideal_.gens, dtype=np.int64)


def ideal_from_array(dim: int, arr: np.ndarray) -> MonomialIdeal:
    gens = tuple(sorted(map(tuple, arr.tolist())))
    return MonomialIdeal(dim, gens)


def _dedup_rows(pts: np.ndarray) -> np.ndarray:
    """np.unique(pts, axis=0) but via packed integer keys when they fit.

    Row-wise unique sorts void views, which is an order of magnitude slower
    than a plain int64 sort; coordinates here are small enough to pack
    almost always.  Output is lex-sorted either way.
    """
    n, d = pts.shape
    if n <= 1:
        return pts
    maxs = pts.max(axis=0).astype(np.int64) + 1
    bits = int(sum(max(1, int(m).bit_length()) for m in maxs))
    if bits > 63:
        return np.unique(pts, axis=0)
    key = pts[:, 0].astype(np.int64)
    for i in range(1, d):
        key = key * maxs[i] + pts[:, i]
    _, idx = np.unique(key, return_index=True)
    return pts[idx]


def _scatter_min(grid: np.ndarray, cells: tuple, vals: np.ndarray) -> None:
    if len(vals) <= 4096:
        # np.minimum.at is unbuffered (correct with duplicate cells)
        np.minimum.at(grid, cells, vals)
        return
    # sort + reduceat beats the unbuffered ufunc on big batches
    flat = np.ravel_multi_index(cells, grid.shape)
    order = np.argsort(flat, kind="stable")
    flat, vals = flat[order], vals[order]
    starts = np.flatnonzero(np.r_[True, flat[1:] != flat[:-1]])
    mins = np.minimum.reduceat(vals, starts)
    heads = flat[starts]
    grid.flat[heads] = np.minimum(grid.flat[heads], mins)


def _pareto_pairwise(pts: np.ndarray) -> np.ndarray:
    le = (pts[:, None, :] <= pts[None, :, :]).all(axis=2)
    np.fill_diagonal(le, False)
    return pts[~le.any(axis=0)]

def _pareto_layers(pts: np.ndarray) -> np.ndarray:
    # degree layers are antichains, so only cross-layer tests are needed
    deg = pts.sum(axis=1)
    order = np.argsort(deg, kind="stable")
    pts, deg = pts[order], deg[order]
    kept = []
    for val in np.unique(deg):
        layer = pts[deg == val]
        if kept:
            base = np.concatenate(kept)
            dom = (base[None, :, :] <= layer[:, None, :]).all(axis=2).any(axis=1)
            layer = layer[~dom]
        if len(layer):
            kept.append(layer)
    return np.concatenate(kept)


_GRID_CELL_CAP = 30_000_000


def minimalize_array(pts: np.ndarray) -> np.ndarray:
    """Pareto-minimal rows of a non-negative int64 array.

    One prefix-min pass over the non-value axes, filtering on the perturbed
    value v*n + lex_rank.  A dominating row is lex-smaller (its first
    differing coordinate is smaller), so on value ties the dominator wins
    the perturbed comparison; and a row that wins it while sitting in the
    prefix cell really does dominate, because winning forces value <= and
    the cell gives <= elsewhere.  Hence one pass is exact.
    """
    pts = _dedup_rows(pts)  # lex-sorted, so row index is the lex rank
    n, d = pts.shape
    if n <= 1:
        return pts
    if d == 1:
        return pts[:1]
    if n <= 1024:
        return _pareto_pairwise(pts)
    maxs = pts.max(axis=0)
    c = int(np.argmax(maxs))
    rest = [i for i in range(d) if i != c]
    cells_shape = 1
    for i in rest:
        cells_shape *= int(maxs[i]) + 1
    if cells_shape > _GRID_CELL_CAP or int(maxs[c]) + 1 > 2**62 // n:
        return _pareto_layers(pts)
    tilde = pts[:, c] * n + np.arange(n, dtype=np.int64)
    grid = np.full(
        [int(maxs[i]) + 1 for i in rest], np.iinfo(np.int64).max, np.int64
    )
    cells = tuple(pts[:, i] for i in rest)
    _scatter_min(grid, cells, tilde)
    for ax in range(len(rest)):
        np.minimum.accumulate(grid, axis=ax, out=grid)
    pref = grid[cells]
    return pts[pref == tilde]


# ---------------------------------------------------------------------------
# arithmetic

def _check_same_dim(a: MonomialIdeal, b: MonomialIdeal) -> None:
    if a.dim != b.dim:
        raise DimensionMismatchError(f"dim {a.dim} != dim {b.dim}")


def product(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    """The product ideal, with minimal generators.

    >>> from multlab.expr import parse_ideal
    >>> print(product(parse_ideal("(x, y^2)"), parse_ideal("(x^2, y)")))
    (x^3, x*y, y^3)
    """
    _check_same_dim(a, b)
    ka, kb = m_power_degree(a), m_power_degree(b)
    if ka is not None and kb is not None:
        return m_power(a.dim, ka + kb)
    arr = product_array(as_array(a), as_array(b))
    return ideal_from_array(a.dim, arr)


def product_array(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    cand = (a[:, None, :] + b[None, :, :]).reshape(-1, a.shape[1])
    return minimalize_array(cand)


def power(a: MonomialIdeal, n: int) -> MonomialIdeal:
    """a^n by iterated products, minimalizing at each step."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return unit_ideal(a.dim)
    out = a
    for _ in range(n - 1):
        out = product(out, a)
    return out


def contains(ideal_: MonomialIdeal, m: Monomial) -> bool:
    """Membership of the monomial x^m in the ideal."""
    if len(m) != ideal_.dim:
        raise DimensionMismatchError(f"monomial {m} vs dim {ideal_.dim}")
    return any(divides(g, m) for g in ideal_.gens)


def ideal_contains(outer: MonomialIdeal, inner: MonomialIdeal) -> bool:
    """True if inner is a subset of outer (every generator is a member)."""
    _check_same_dim(outer, inner)
    return all(contains(outer, g) for g in inner.gens)


def is_m_primary(ideal_: MonomialIdeal) -> bool:
    """True if the ideal contains a positive pure power of every variable.

    Equivalently the staircase complement is finite and the ideal is proper;
    the unit ideal is not m-primary.
    """
    seen = set()
    for g in ideal_.gens:
        nz = [i for i, e in enumerate(g) if e > 0]
        if len(nz) == 1:
            seen.add(nz[0])
    return len(seen) == ideal_.dim


def box_bounds(ideal_: MonomialIdeal) -> tuple[int, ...]:
    """For each variable the least k with x_i^k in the ideal.

    The staircase complement lives inside the box prod [0, b_i).
    Raises NotMPrimaryError when some variable has no pure power.
    """
    bounds = [0] * ideal_.dim
    for g in ideal_.gens:
        nz = [i for i, e in enumerate(g) if e > 0]
        if len(nz) == 1:
            i = nz[0]
            bounds[i] = g[i] if bounds[i] == 0 else min(bounds[i], g[i])
    if any(b == 0 for b in bounds):
        missing = ", ".join(f"x{i + 1}" for i, b in enumerate(bounds) if b == 0)
        raise NotMPrimaryError(
            f"no pure power of {missing}: the colength is infinite"
        )
    return tuple(bounds)


def scale_by_m(ideal_: MonomialIdeal) -> MonomialIdeal:
    """m * I."""
    return product(m_ideal(ideal_.dim), ideal_)
