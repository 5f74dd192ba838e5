from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hopfmzv.errors import PrecisionExceeded
from hopfmzv.realizations import x_series
from hopfmzv.series import (
    KERNEL_BACKEND,
    LaurentSeries,
    coefficient,
    constant,
    equal_on_window,
    monomial,
    pole_part,
    regular_part,
    series_add,
    series_diff,
    series_from_json,
    series_mul,
    series_scale,
    series_slice,
    series_to_json,
    zero_series,
)

Fr = Fraction


def L(ord_, *coeffs):
    return LaurentSeries(ord_, tuple(Fr(c) for c in coeffs))


def test_window_bookkeeping():
    a = L(-2, 1, 0, 3)
    assert a.valid_through == 0
    assert coefficient(a, -2) == 1
    assert coefficient(a, 0) == 3
    with pytest.raises(PrecisionExceeded):
        coefficient(a, 1)


def test_coeffs_are_coerced_to_fractions():
    a = LaurentSeries(0, (1, 2))
    assert all(isinstance(c, Fraction) for c in a.coeffs)


def test_add_takes_worst_window():
    a = L(-1, 1, 1, 1, 1)  # valid through 2
    b = L(0, 5, 5)  # valid through 1
    s = series_add(a, b)
    assert s.ord == -1
    assert s.valid_through == 1
    assert s.coeffs == (Fr(1), Fr(6), Fr(6))


def test_mul_monomials_and_polynomials():
    assert series_mul(monomial(-1, 1, 5), monomial(1, 1, 5)).coefficient(0) == 1
    p = series_mul(L(0, 1, 1, 0, 0), L(0, 1, -1, 0, 0))
    assert (p.coefficient(0), p.coefficient(1), p.coefficient(2)) == (1, 0, -1)


def test_mul_window_erosion():
    a = L(-1, 1, 1, 1)  # vt 1
    b = L(-2, 1, 1, 1, 1, 1)  # vt 2
    p = series_mul(a, b)
    assert p.ord == -3
    # min(vt_a + ord_b, vt_b + ord_a) = min(1 - 2, 2 - 1) = -1
    assert p.valid_through == -1


def test_square_of_x_constant_term():
    # (-1/z - 1/2 - z/12 - ...)^2 at z^0: 2*(-1)*(-1/12) + (1/2)^2 = 5/12
    x = x_series(6)
    assert series_mul(x, x).coefficient(0) == Fr(5, 12)


def test_diff_costs_one_exponent():
    a = L(-1, 1, 2, 3)
    d = series_diff(a)
    assert d.ord == -2
    assert d.valid_through == a.valid_through - 1
    assert d.coefficient(-2) == -1
    assert d.coefficient(0) == 3


def test_pole_and_regular_parts_partition():
    a = L(-2, 7, 8, 9, 10)
    p, r = pole_part(a), regular_part(a)
    assert p.coeffs == (Fr(7), Fr(8), Fr(0), Fr(0))
    assert r.coeffs == (Fr(0), Fr(0), Fr(9), Fr(10))
    assert equal_on_window(series_add(p, r), a)


def test_zero_series_window():
    z = zero_series(5)
    assert z.valid_through == 5
    assert coefficient(z, 3) == 0
    with pytest.raises(PrecisionExceeded):
        coefficient(z, 6)


def test_slice_shrinks_but_never_widens():
    a = L(-1, 1, 2, 3, 4)
    s = series_slice(a, 1)
    assert s.valid_through == 1
    assert s.coeffs == (Fr(1), Fr(2), Fr(3))
    with pytest.raises(PrecisionExceeded):
        series_slice(a, 9)


def test_equal_on_window_needs_overlap():
    a = L(0, 1, 2)
    b = L(5, 9)
    # windows [0,1] and [5,5] share only 2 known exponents ([0,1] for both,
    # b's being known zeros) -- asking for 3 is PrecisionExceeded, not False
    with pytest.raises(PrecisionExceeded):
        equal_on_window(a, b, 3)
    assert not equal_on_window(a, b)  # 1 != 0 at z^0
    assert equal_on_window(L(0, 1, 2, 3), L(0, 1, 2))
    assert not equal_on_window(L(0, 1, 2, 3), L(0, 1, 99))


def test_json_round_trip():
    a = L(-2, 1, 0, Fr(-7, 3))
    obj = series_to_json(a)
    assert obj["ord"] == -2 and obj["valid_through"] == 0
    back = series_from_json(obj)
    assert back.ord == a.ord and back.coeffs == a.coeffs


small_series = st.builds(
    lambda o, cs: LaurentSeries(o, tuple(cs)),
    st.integers(min_value=-3, max_value=3),
    st.lists(
        st.fractions(min_value=-5, max_value=5, max_denominator=9),
        min_size=1,
        max_size=6,
    ),
)


@given(small_series, small_series)
def test_mul_commutes(a, b):
    x, y = series_mul(a, b), series_mul(b, a)
    assert x.ord == y.ord and x.coeffs == y.coeffs


@given(small_series, small_series, small_series)
def test_mul_distributes_over_add(a, b, c):
    lhs = series_mul(a, series_add(b, c))
    rhs = series_add(series_mul(a, b), series_mul(a, c))
    if min(lhs.valid_through, rhs.valid_through) >= min(lhs.ord, rhs.ord):
        assert equal_on_window(lhs, rhs)


def test_kernel_backends_agree():
    pytest.importorskip("hopfmzv._kernels")
    from hopfmzv import _kernels, _kernels_py

    a = tuple(Fr(i, 3) for i in range(-4, 8))
    b = tuple(Fr(5 - i, 7) for i in range(10))
    for n in (0, 1, 5, 12):
        assert list(_kernels.convolve(a, b, n)) == list(_kernels_py.convolve(a, b, n))


def test_active_backend_is_reported():
    assert KERNEL_BACKEND in ("compiled", "pure-python")
