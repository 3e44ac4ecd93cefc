"""Monomial ideal core: construction, minimalization, arithmetic, membership."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from multlab import (
    DimensionMismatchError,
    MonomialIdeal,
    NotMPrimaryError,
    box_bounds,
    contains,
    ideal,
    ideal_contains,
    is_m_primary,
    m_ideal,
    m_power,
    minimalize,
    parse_ideal,
    power,
    product,
    unit_ideal,
)
from multlab.monomial import as_array, minimalize_array, scale_by_m

from conftest import oracle_minimalize, oracle_power, oracle_product, random_mprimary


class TestConstruction:
    def test_ideal_minimalizes_and_sorts(self):
        I = ideal([(3, 1), (2, 0), (0, 1), (5, 5)])
        assert I.gens == ((0, 1), (2, 0))
        assert I.dim == 2

    def test_dim_inferred_and_explicit(self):
        assert ideal([(1, 0, 0)]).dim == 3
        assert ideal([(2,)], dim=1).gens == ((2,),)

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            ideal([])

    def test_rejects_negative_exponents(self):
        with pytest.raises(ValueError):
            ideal([(1, -1)])

    def test_rejects_ragged(self):
        with pytest.raises(ValueError):
            ideal([(1, 0), (1, 0, 0)])

    def test_unit_ideal(self):
        R = unit_ideal(3)
        assert R.is_unit
        assert R.gens == ((0, 0, 0),)
        assert ideal([(0, 0), (1, 2)]).is_unit  # 1 divides everything

    def test_m_ideal_and_powers(self):
        m = m_ideal(2)
        assert m.gens == ((0, 1), (1, 0))
        assert m_power(2, 3).gens == ((0, 3), (1, 2), (2, 1), (3, 0))
        assert m_power(2, 1) == m
        assert m_power(3, 0) == unit_ideal(3)

    def test_construction_is_canonical(self):
        a = ideal([(2, 0), (0, 3), (1, 1)])
        b = ideal([(1, 1), (2, 0), (0, 3), (2, 5)])
        assert a == b
        assert hash(a) == hash(b)


class TestMinimalize:
    def test_small_cases(self):
        assert minimalize([(1, 2), (1, 2)]) == ((1, 2),)
        assert minimalize([(0, 0), (1, 1)]) == ((0, 0),)
        assert minimalize([(2, 0), (1, 1), (0, 2), (2, 2)]) == (
            (0, 2),
            (1, 1),
            (2, 0),
        )

    @given(
        st.lists(
            st.tuples(*[st.integers(0, 6)] * 3), min_size=1, max_size=60
        )
    )
    def test_matches_oracle(self, gens):
        assert minimalize(gens) == oracle_minimalize(gens)

    def test_array_path_tie_heavy(self, rng):
        # force the grid path: > 1024 points in a tiny coordinate range
        pts = np.array(
            [[rng.randrange(0, 4) for _ in range(4)] for _ in range(2500)],
            dtype=np.int64,
        )
        got = sorted(map(tuple, minimalize_array(pts).tolist()))
        want = list(oracle_minimalize(map(tuple, pts.tolist())))
        assert got == want

    def test_array_path_antichain_is_fixed_point(self):
        layer = m_power(3, 7)  # all degree-7 monomials: a large antichain
        arr = as_array(layer)
        big = np.repeat(arr, 40, axis=0)  # 1440 rows with duplicates
        got = sorted(map(tuple, minimalize_array(big).tolist()))
        assert got == sorted(layer.gens)


class TestArithmetic:
    def test_product_example(self):
        A, B = parse_ideal("(x, y^2)"), parse_ideal("(x^2, y)")
        assert product(A, B) == parse_ideal("(x^3, x*y, y^3)")

    def test_power_example(self):
        B = parse_ideal("(x^2, y)")
        assert power(B, 3) == parse_ideal("(x^6, x^4*y, x^2*y^2, y^3)")

    def test_power_edge_cases(self):
        B = parse_ideal("(x^2, y)")
        assert power(B, 0) == unit_ideal(2)
        assert power(B, 1) == B

    def test_unit_is_identity(self):
        I = parse_ideal("(x^2, x*y, y^3)")
        assert product(I, unit_ideal(2)) == I

    def test_m_power_shortcut_consistent(self):
        direct = product(m_power(3, 2), m_power(3, 3))
        assert direct == m_power(3, 5)
        assert oracle_product(m_power(3, 2), m_power(3, 3)) == m_power(3, 5)

    def test_product_commutes_and_associates(self, rng):
        for _ in range(10):
            a = random_mprimary(rng, 3)
            b = random_mprimary(rng, 3)
            c = random_mprimary(rng, 3)
            assert product(a, b) == product(b, a)
            assert product(product(a, b), c) == product(a, product(b, c))

    def test_product_matches_oracle(self, rng):
        for _ in range(25):
            a = random_mprimary(rng, rng.randint(1, 4))
            b = random_mprimary(rng, a.dim)
            assert product(a, b) == oracle_product(a, b)

    def test_power_matches_oracle(self, rng):
        for _ in range(10):
            a = random_mprimary(rng, rng.randint(1, 3))
            n = rng.randint(0, 4)
            assert power(a, n) == oracle_power(a, n)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            product(m_ideal(2), m_ideal(3))

    def test_scale_by_m(self):
        I = parse_ideal("(x^2, y)")
        assert scale_by_m(I) == product(m_ideal(2), I)
        assert scale_by_m(unit_ideal(2)) == m_ideal(2)


class TestMembership:
    def test_contains(self):
        I = parse_ideal("(x^2, x*y, y^3)")
        assert contains(I, (2, 0))
        assert contains(I, (5, 7))
        assert not contains(I, (1, 0))
        assert not contains(I, (0, 2))

    def test_contains_checks_dim(self):
        with pytest.raises(DimensionMismatchError):
            contains(m_ideal(2), (1, 0, 0))

    def test_ideal_contains(self):
        I = parse_ideal("(x^2, x*y, y^3)")
        assert ideal_contains(m_ideal(2), I)  # m contains I
        assert not ideal_contains(I, m_ideal(2))
        assert ideal_contains(I, I)

    def test_ideal_contains_matches_products(self, rng):
        m = m_ideal(2)
        for _ in range(10):
            a = random_mprimary(rng, 2)
            assert ideal_contains(a, product(a, m))  # mI inside I


class TestMPrimary:
    def test_m_primary_detection(self):
        assert is_m_primary(parse_ideal("(x^2, x*y, y^3)"))
        assert is_m_primary(m_ideal(4))
        assert not is_m_primary(parse_ideal("(x^2, x*y)"))  # no pure y power
        assert not is_m_primary(unit_ideal(2))

    def test_box_bounds(self):
        assert box_bounds(parse_ideal("(x^2, x*y, y^3)")) == (2, 3)
        assert box_bounds(m_power(3, 4)) == (4, 4, 4)

    def test_box_bounds_raises_with_axis_names(self):
        with pytest.raises(NotMPrimaryError, match="x2"):
            box_bounds(parse_ideal("(x^2, x*y)"))

    @given(st.integers(1, 4), st.integers(1, 5))
    def test_m_powers_are_m_primary(self, d, k):
        I = m_power(d, k)
        assert is_m_primary(I)
        assert box_bounds(I) == (k,) * d


@settings(max_examples=40)
@given(
    st.integers(2, 4).flatmap(
        lambda d: st.lists(
            st.tuples(*[st.integers(0, 5)] * d), min_size=1, max_size=12
        )
    )
)
def test_ideal_roundtrip_through_array(gens):
    I = ideal(gens)
    arr = as_array(I)
    assert tuple(map(tuple, arr.tolist())) == I.gens
    assert MonomialIdeal(I.dim, I.gens) == I
