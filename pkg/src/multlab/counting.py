"""Exact lattice-point counting for staircase complements.

Everything here counts standard monomials: exponent vectors v inside a box
prod [0, b_i) that are not divisible by any generator.  `count_naive` is the
trivially-correct reference (enumerate the box, test every generator).
`count_grid` is the production counter: pick the coordinate with the largest
box as the "height" axis, then the number of standard points equals the sum,
over the remaining grid, of the clipped prefix minimum of generator heights.
The prefix minima are built with vectorized running minima, streaming over
one axis so memory stays at the size of a (d-2)-dimensional slice.

Counts are exact: int64 internally with an explicit width guard that reroutes
to object (big-int) arrays, Python ints at the boundary.
"""

from __future__ import annotations

from itertools import product as iter_product

import numpy as np

_INT64_SAFE = 2**62


def _volume(box) -> int:
    vol = 1
    for b in box:
        vol *= int(b)
    return vol


def count_naive(gens, box) -> int:
    """Reference counter: walk the whole box and test each generator.

    Exponentially slow by design; guarded to ~10^7 cells.
    """
    box = [int(b) for b in box]
    if _volume(box) > 10_000_000:
        raise ValueError("box too large for the reference counter")
    gens = [tuple(int(e) for e in g) for g in np.asarray(gens)]
    count = 0
    for v in iter_product(*(range(b) for b in box)):
        if not any(all(ge <= ve for ge, ve in zip(g, v)) for g in gens):
            count += 1
    return count


def count_fill(gens, box) -> int:
    """Vectorized reference: mark every covered cell, count the rest."""
    box = tuple(int(b) for b in box)
    if _volume(box) > 200_000_000:
        raise ValueError("box too large for the fill counter")
    covered = np.zeros(box, dtype=bool)
    for g in np.asarray(gens, dtype=np.int64):
        if all(int(g[i]) < box[i] for i in range(len(box))):
            covered[tuple(slice(int(g[i]), None) for i in range(len(box)))] = True
    return _volume(box) - int(covered.sum())


def count_grid(gens, box) -> int:
    """Streamed prefix-minimum counter; exact for any d >= 1.

    The standard-point count equals sum over cells (x != height axis) of
    min(b_c, min{g_c : g agrees with a prefix of the cell}), accumulated
    slice by slice along the largest remaining axis.
    """
    box = tuple(int(b) for b in box)
    d = len(box)
    if any(b <= 0 for b in box):
        return 0
    gens = np.asarray(gens, dtype=np.int64)
    if gens.ndim != 2 or gens.shape[1] != d:
        raise ValueError("generator array must be (n, d)")
    if d == 1:
        return min(int(gens[:, 0].min()), box[0])

    order = sorted(range(d), key=lambda i: box[i], reverse=True)
    c, stream, inner = order[0], order[1], order[2:]
    bc, bs = box[c], box[stream]

    # generators outside the box on a non-height axis can never divide
    keep = np.ones(len(gens), dtype=bool)
    for ax in (stream, *inner):
        keep &= gens[:, ax] < box[ax]
    gens = gens[keep]
    vals = np.minimum(gens[:, c], bc) if len(gens) else gens[:, c]

    # int64 is plenty unless a single accumulated sum can overflow it
    slice_cap = bc * bs if d == 2 else bc
    for ax in inner:
        slice_cap *= box[ax]
    dtype = object if slice_cap >= _INT64_SAFE or bc >= _INT64_SAFE else np.int64

    w = gens[:, stream]
    o = np.argsort(w, kind="stable")
    w, vals = w[o], vals[o]
    cells = tuple(gens[o, i] for i in inner)
    starts = np.searchsorted(w, np.arange(bs + 1))

    if d == 2:
        per = np.full(bs, bc, dtype=dtype)
        if dtype is object:
            vals = vals.astype(object)
        np.minimum.at(per, w, vals)
        running = np.minimum.accumulate(per)
        return int(running.sum())

    inner_shape = tuple(box[i] for i in inner)
    M = np.full(inner_shape, bc, dtype=dtype)
    if dtype is object:
        vals = vals.astype(object)
    total = 0
    prev = None
    for t in range(bs):
        lo, hi = starts[t], starts[t + 1]
        if hi > lo:
            np.minimum.at(M, tuple(cv[lo:hi] for cv in cells), vals[lo:hi])
            prev = None
        if prev is None:
            S = M.copy()
            for ax in range(len(inner)):
                np.minimum.accumulate(S, axis=ax, out=S)
            prev = int(S.sum())
        total += prev
    return total
