"""Colengths: closed forms, counters, the product sampler."""

from math import comb

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from multlab import (
    NotMPrimaryError,
    ProductSampler,
    colength,
    colength_naive,
    colength_of_product,
    ideal,
    m_ideal,
    m_power,
    parse_ideal,
    power,
    product,
    unit_ideal,
)
from multlab.counting import count_fill, count_grid, count_naive
from multlab.monomial import as_array, box_bounds

from conftest import oracle_colength, random_mprimary


class TestCounters:
    def test_frozen_values(self):
        I = parse_ideal("(x^2, x*y, y^3)")
        assert count_naive(as_array(I), box_bounds(I)) == 4
        assert count_fill(as_array(I), box_bounds(I)) == 4
        assert count_grid(as_array(I), box_bounds(I)) == 4

    def test_one_dimension(self):
        I = ideal([(5,)], dim=1)
        assert count_grid(as_array(I), (5,)) == 5
        assert count_naive(as_array(I), (5,)) == 5

    def test_oversized_sums_handled_exactly(self):
        # a tall box whose count exceeds int64: exercises the object reroute
        tall = 2**62
        arr = np.array([[2, tall - 5]], dtype=np.int64)
        want = 3 * tall - 5
        assert want > np.iinfo(np.int64).max
        assert count_grid(arr, (3, tall)) == want

    def test_counters_agree_random(self, rng):
        for _ in range(40):
            d = rng.randint(1, 4)
            I = random_mprimary(rng, d, max_power=4, extras=3)
            arr, box = as_array(I), box_bounds(I)
            want = count_naive(arr, box)
            assert count_fill(arr, box) == want
            assert count_grid(arr, box) == want

    def test_redundant_generators_ok(self):
        # counters must not require minimal generating sets
        I = parse_ideal("(x^2, x*y, y^3)")
        arr = np.vstack([as_array(I), [[5, 5], [2, 1], [2, 0]]]).astype(np.int64)
        assert count_grid(arr, box_bounds(I)) == 4


class TestColength:
    def test_frozen_examples(self):
        assert colength(parse_ideal("(x^2, x*y, y^3)")) == 4
        assert colength(power(parse_ideal("(x^2, y^2)"), 3)) == 24
        assert colength(m_power(2, 3)) == 6
        assert colength(m_power(3, 3)) == 10

    def test_unit_ideal_is_zero(self):
        assert colength(unit_ideal(3)) == 0
        assert colength_naive(unit_ideal(3)) == 0

    def test_not_m_primary_raises(self):
        with pytest.raises(NotMPrimaryError):
            colength(parse_ideal("(x^2, x*y)"))

    @given(st.integers(1, 5), st.integers(1, 7))
    def test_m_power_closed_form(self, d, k):
        assert colength(m_power(d, k)) == comb(k - 1 + d, d)

    def test_matches_independent_oracle(self, rng):
        for _ in range(30):
            d = rng.randint(1, 4)
            I = random_mprimary(rng, d, max_power=4, extras=3)
            assert colength(I) == oracle_colength(I)
            assert colength_naive(I) == oracle_colength(I)

    def test_monotone_under_containment(self, rng):
        m = m_ideal(3)
        for _ in range(10):
            I = random_mprimary(rng, 3)
            assert colength(product(m, I)) >= colength(I)


class TestProductSampler:
    def test_matches_direct_products(self, rng):
        for _ in range(8):
            a = random_mprimary(rng, 2)
            b = random_mprimary(rng, 2)
            sampler = ProductSampler([a, b])
            for na in range(4):
                for nb in range(4):
                    direct = product(power(a, na), power(b, nb))
                    want = 0 if direct.is_unit else colength(direct)
                    assert sampler.colength_at((na, nb)) == want

    def test_all_zero_is_zero(self):
        sampler = ProductSampler([m_ideal(2), m_ideal(2)])
        assert sampler.colength_at((0, 0)) == 0

    def test_m_power_fast_path(self):
        sampler = ProductSampler([m_power(3, 2), m_ideal(3)])
        for a, b in [(0, 0), (1, 0), (2, 3), (5, 1)]:
            k = 2 * a + b
            assert sampler.colength_at((a, b)) == (comb(k - 1 + 3, 3) if k else 0)

    def test_unit_columns_are_inert(self):
        I = parse_ideal("(x^2, y^2)")
        sampler = ProductSampler([I, unit_ideal(2)])
        for n in range(4):
            assert sampler.colength_at((n, 7)) == sampler.colength_at((n, 0))

    def test_rejects_non_primary(self):
        with pytest.raises(NotMPrimaryError):
            ProductSampler([parse_ideal("(x^2, x*y)")])

    def test_colength_of_product_wrapper(self):
        A, B = parse_ideal("(x, y^2)"), parse_ideal("(x^2, y)")
        assert colength_of_product([A, B], (1, 1)) == colength(product(A, B))
        assert colength_of_product([A, B], (0, 0)) == 0
        with pytest.raises(ValueError):
            colength_of_product([A, B], (1,))


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))
def test_sampler_agrees_with_oracle_on_triples(na, nb, nc):
    a = parse_ideal("(x^2, x*y, y^3)")
    b = parse_ideal("(x, y^3)")
    c = m_ideal(2)
    sampler = ProductSampler([a, b, c])
    direct = product(product(power(a, na), power(b, nb)), power(c, nc))
    want = 0 if direct.is_unit else oracle_colength(direct)
    assert sampler.colength_at((na, nb, nc)) == want
