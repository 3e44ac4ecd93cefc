"""Hilbert-Samuel and mixed multiplicities via stabilized difference tables.

For m-primary ideals the function n |-> lambda(R / I_1^{n_1} ... I_s^{n_s})
agrees with a polynomial of total degree d once every n_j is large.  Taking
the mixed finite difference of order (a_1, ..., a_s) with sum d kills every
lower term and returns a_1! ... a_s! times the leading coefficient -- which
is exactly the mixed multiplicity e(I_1^[a_1], ..., I_s^[a_s]).  `stabilize`
evaluates that difference at a window of diagonal shifts and accepts the
value only when the window is constant, doubling the base point otherwise,
so polynomiality is confirmed rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from itertools import product as iter_product
from math import comb

from .errors import DimensionMismatchError, NotMPrimaryError, StabilizationError
from .lengths import ProductSampler
from .monomial import MonomialIdeal, is_m_primary, m_ideal


@dataclass(frozen=True)
class LengthSample:
    """One evaluated lattice point: exponent vector and its colength."""

    point: tuple[int, ...]
    value: int


@dataclass(frozen=True)
class DifferenceTable:
    """A confirmed mixed difference: where it was taken and what it gave."""

    base: tuple[int, ...]
    order: tuple[int, ...]
    samples: tuple[LengthSample, ...]
    result: int
    stable: bool


@dataclass(frozen=True)
class StabilizePolicy:
    """How hard to push for a constant difference window.

    `initial_base` of None lets the caller's heuristic pick the starting
    point; on an unstable window every base coordinate is multiplied by
    `growth`, up to `max_rounds` escalations.  `window` is the number of
    extra diagonal shifts that must reproduce the shift-0 value.
    """

    initial_base: int | tuple[int, ...] | None = None
    window: int = 2
    max_rounds: int = 6
    growth: int = 2

    def __post_init__(self):
        if self.window < 1:
            raise ValueError("window must be at least 1")
        if self.max_rounds < 0:
            raise ValueError("max_rounds must be non-negative")
        if self.growth < 2:
            raise ValueError("growth must be at least 2")


def _mixed_difference(f, base, order, cache):
    """Sum of (-1)^{|order - delta|} prod C(order_j, delta_j) f(base + delta)."""
    total = 0
    for delta in iter_product(*(range(o + 1) for o in order)):
        point = tuple(b + t for b, t in zip(base, delta))
        value = cache.get(point)
        if value is None:
            value = f(point)
            cache[point] = value
        coeff = 1
        for o, t in zip(order, delta):
            coeff *= comb(o, t)
        sign = (-1) ** (sum(order) - sum(delta))
        total += sign * coeff * value
    return total


def stabilize(sampler, order, policy: StabilizePolicy | None = None) -> DifferenceTable:
    """Confirmed mixed difference of `sampler` (a callable on lattice points).

    Evaluates the order-`order` difference at diagonal shifts 0..window of a
    base point and returns a DifferenceTable once all shifts agree, growing
    the base geometrically otherwise.  Raises StabilizationError with the
    full escalation history if no window ever becomes constant.
    """
    policy = policy or StabilizePolicy()
    order = tuple(int(o) for o in order)
    if not order or any(o < 1 for o in order):
        raise ValueError("order must be a non-empty tuple of positive ints")
    if policy.initial_base is None:
        base = (max(2, max(order)),) * len(order)
    elif isinstance(policy.initial_base, int):
        base = (policy.initial_base,) * len(order)
    else:
        base = tuple(int(b) for b in policy.initial_base)
        if len(base) != len(order):
            raise ValueError("initial_base length must match order length")
    if any(b < 1 for b in base):
        raise ValueError("base coordinates must be positive")

    bases_tried = []
    diffs_seen = []
    for _ in range(policy.max_rounds + 1):
        cache: dict[tuple[int, ...], int] = {}
        diffs = [
            _mixed_difference(
                sampler, tuple(b + s for b in base), order, cache
            )
            for s in range(policy.window + 1)
        ]
        bases_tried.append(base)
        diffs_seen.append(tuple(diffs))
        if all(v == diffs[0] for v in diffs):
            samples = tuple(
                LengthSample(point, value) for point, value in sorted(cache.items())
            )
            return DifferenceTable(
                base=base,
                order=order,
                samples=samples,
                result=diffs[0],
                stable=True,
            )
        base = tuple(b * policy.growth for b in base)
    raise StabilizationError(
        "difference window never became constant",
        bases=bases_tried,
        attempts=diffs_seen,
    )


def _merge_slots(ideals, type_):
    """Drop zero slots and fuse repeated ideals, summing their orders."""
    merged: list[MonomialIdeal] = []
    orders: list[int] = []
    for I, a in zip(ideals, type_):
        if a == 0:
            continue
        if not is_m_primary(I):
            raise NotMPrimaryError(
                "mixed multiplicities need m-primary ideals in every "
                "slot with positive order"
            )
        try:
            at = merged.index(I)
        except ValueError:
            merged.append(I)
            orders.append(a)
        else:
            orders[at] += a
    return merged, tuple(orders)


def _heuristic_base(ideals, dim: int) -> int:
    top = max((max(max(g) for g in I.gens) for I in ideals), default=1)
    return max(dim, top + 1)


def _difference_table(ideals, type_, policy, sampler_cache=None):
    ideals = list(ideals)
    if not ideals:
        raise ValueError("need at least one ideal")
    d = ideals[0].dim
    for I in ideals:
        if I.dim != d:
            raise DimensionMismatchError(
                f"ideals live in different dimensions: {I.dim} != {d}"
            )
    type_ = tuple(int(a) for a in type_)
    if len(type_) != len(ideals):
        raise ValueError("type length must match the number of ideals")
    if any(a < 0 for a in type_):
        raise ValueError("type entries must be non-negative")
    if sum(type_) != d:
        raise ValueError(f"type must sum to the ambient dimension {d}")

    merged, orders = _merge_slots(ideals, type_)
    policy = policy or StabilizePolicy()
    if policy.initial_base is None:
        policy = replace(policy, initial_base=_heuristic_base(merged, d))

    key = tuple(merged)
    if sampler_cache is not None and key in sampler_cache:
        sampler = sampler_cache[key]
    else:
        sampler = ProductSampler(merged)
        if sampler_cache is not None:
            sampler_cache[key] = sampler

    table = stabilize(sampler.colength_at, orders, policy)
    if table.result < 1:
        raise ArithmeticError(
            f"difference table produced {table.result}; mixed multiplicities "
            "of m-primary ideals are positive, so the inputs are inconsistent"
        )
    return table


def mixed_difference_table(
    ideals, type_=None, policy: StabilizePolicy | None = None
) -> DifferenceTable:
    """The stabilized difference table behind `mixed_multiplicity`."""
    ideals = list(ideals)
    if type_ is None:
        type_ = (1,) * len(ideals)
    return _difference_table(ideals, type_, policy)


def mixed_multiplicity(
    ideals, type_=None, policy: StabilizePolicy | None = None, *, _sampler_cache=None
) -> int:
    """Mixed multiplicity e(I_1^[a_1], ..., I_s^[a_s]).

    `type_` defaults to (1, ..., 1), which requires exactly d ideals.  Slots
    with a_i = 0 are ignored; repeated ideals are merged by summing their
    orders.  Every counted slot must hold an m-primary ideal.
    """
    ideals = list(ideals)
    if type_ is None:
        type_ = (1,) * len(ideals)
    return _difference_table(ideals, type_, policy, _sampler_cache).result


def hilbert_samuel(I: MonomialIdeal, policy: StabilizePolicy | None = None) -> int:
    """Hilbert-Samuel multiplicity e(I) of an m-primary ideal."""
    return mixed_multiplicity([I], (I.dim,), policy)


def hyperplane_section_multiplicity(
    ideals, k: int = 1, policy: StabilizePolicy | None = None
) -> int:
    """Multiplicity of the images of `ideals` after k general hyperplane cuts.

    Computed without leaving the ambient ring: cutting by k general linear
    forms turns e(J_1, ..., J_{d-k}) downstairs into the mixed multiplicity
    e(m, ..., m, J_1, ..., J_{d-k}) with k copies of the maximal ideal.
    """
    ideals = list(ideals)
    if not ideals:
        raise ValueError("need at least one ideal")
    d = ideals[0].dim
    if not 1 <= k <= d - 1:
        raise ValueError(f"need 1 <= k <= {d - 1} hyperplane cuts, got {k}")
    if len(ideals) != d - k:
        raise ValueError(
            f"need {d - k} ideals for {k} cuts in dimension {d}, got {len(ideals)}"
        )
    m = m_ideal(d)
    return mixed_multiplicity([m] * k + ideals, (1,) * d, policy)
