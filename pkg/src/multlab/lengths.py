"""Colengths of monomial ideals and memoized colengths of ideal products.

`colength` is the workhorse: length of R/I as a k-vector space, i.e. the
number of standard monomials.  Powers of the maximal ideal short-circuit to
a binomial; everything else runs through the grid counter on the box of
pure-power bounds.  `ProductSampler` serves the multiplicity engine, which
needs lambda(R / I_1^{n_1} ... I_s^{n_s}) on many nearby exponent vectors:
it caches generator arrays along a lattice walk so each new vector costs one
ideal multiplication plus one count.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

from .counting import count_grid, count_naive
from .errors import NotMPrimaryError
from .monomial import (
    MonomialIdeal,
    as_array,
    box_bounds,
    is_m_primary,
    m_power_degree,
    minimalize_array,
    product_array,
)


def colength(I: MonomialIdeal) -> int:
    """Number of standard monomials of I; 0 for the unit ideal.

    Raises NotMPrimaryError when the count is infinite.
    """
    if I.is_unit:
        return 0
    k = m_power_degree(I)
    if k is not None:
        return comb(k - 1 + I.dim, I.dim)
    return count_grid(as_array(I), box_bounds(I))


def colength_naive(I: MonomialIdeal) -> int:
    """Reference colength by exhaustive box enumeration (small ideals only)."""
    if I.is_unit:
        return 0
    return count_naive(as_array(I), box_bounds(I))


class ProductSampler:
    """Colengths of products prod_j I_j^{n_j}, memoized across exponents.

    Generator arrays are built incrementally: to reach n, multiply the
    cached array of n - e_j (largest coordinate first) by I_j once.  When
    every ideal is a power of the maximal ideal the colength collapses to
    a closed-form binomial and no arrays are touched.
    """

    def __init__(self, ideals):
        ideals = tuple(ideals)
        if not ideals:
            raise ValueError("need at least one ideal")
        d = ideals[0].dim
        bounds = []
        for I in ideals:
            if I.dim != d:
                raise ValueError("mixed ambient dimensions in one sampler")
            if I.is_unit:
                bounds.append((0,) * d)
            elif is_m_primary(I):
                bounds.append(box_bounds(I))
            else:
                raise NotMPrimaryError(
                    "sampler requires m-primary (or unit) ideals"
                )
        self.ideals = ideals
        self.dim = d
        self._bounds = bounds
        self._m_degrees = [m_power_degree(I) for I in ideals]
        self._all_m = all(k is not None for k in self._m_degrees)
        self._arrays = {(0,) * len(ideals): as_array(ideals[0])[:0].reshape(0, d)}
        self._gen_arrays = [as_array(I) for I in ideals]
        self._counts: dict[tuple[int, ...], int] = {}

    def _array_at(self, n: tuple[int, ...]):
        arrs = self._arrays
        path = []
        cur = n
        while cur not in arrs:
            j = max(range(len(cur)), key=cur.__getitem__)
            path.append(j)
            cur = cur[:j] + (cur[j] - 1,) + cur[j + 1 :]
        arr = arrs[cur]
        while path:
            j = path.pop()
            cur = cur[:j] + (cur[j] + 1,) + cur[j + 1 :]
            if arr.shape[0] == 0:
                arr = self._gen_arrays[j]
            else:
                arr = minimalize_array(product_array(arr, self._gen_arrays[j]))
            arrs[cur] = arr
        return arr

    def colength_at(self, n) -> int:
        n = tuple(int(e) for e in n)
        if len(n) != len(self.ideals):
            raise ValueError("exponent vector length mismatch")
        if any(e < 0 for e in n):
            raise ValueError("exponents must be non-negative")
        hit = self._counts.get(n)
        if hit is not None:
            return hit
        d = self.dim
        if self._all_m:
            total_deg = sum(e * k for e, k in zip(n, self._m_degrees))
            value = comb(total_deg - 1 + d, d) if total_deg else 0
        else:
            box = tuple(
                sum(e * b[i] for e, b in zip(n, self._bounds))
                for i in range(d)
            )
            if all(b == 0 for b in box):
                value = 0
            else:
                value = count_grid(self._array_at(n), box)
        self._counts[n] = value
        return value


@lru_cache(maxsize=32)
def _shared_sampler(ideals: tuple[MonomialIdeal, ...]) -> ProductSampler:
    return ProductSampler(ideals)


def colength_of_product(ideals, exponents) -> int:
    """lambda(R / prod I_j^{n_j}) for m-primary ideals; 0 when all n_j = 0."""
    key = tuple(ideals)
    n = tuple(int(e) for e in exponents)
    if len(n) != len(key):
        raise ValueError("one exponent per ideal")
    return _shared_sampler(key).colength_at(n)
