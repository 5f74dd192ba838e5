import json
from fractions import Fraction
from importlib import resources
from math import factorial

import pytest

from hopfmzv.errors import EvenWeight, NotAdmissible, PrecisionExceeded
from hopfmzv.realizations import (
    mero_depth1,
    mero_depth2,
    phi,
    plan_valid_through,
    psi,
    psi_C,
    psi_factor,
    x_series,
)
from hopfmzv.series import equal_on_window, series_from_json, series_mul, series_slice

Fr = Fraction


def _fixture_entries():
    text = (
        resources.files("hopfmzv")
        .joinpath("fixtures/example_series.json")
        .read_text()
    )
    return json.loads(text)


def test_worked_series_match_the_fixture_exactly():
    for entry in _fixture_entries():
        char = phi if entry["kind"] == "phi" else psi
        want = series_from_json(entry["series"])
        got = series_slice(char(entry["word"], want.valid_through), want.valid_through)
        assert got.ord == want.ord, entry["word"]
        assert got.coeffs == want.coeffs, (entry["kind"], entry["word"])


def test_phi_of_y_is_the_x_atom():
    assert equal_on_window(phi("y", 8), x_series(8), 6)


def test_psi_of_y_equals_phi_of_y():
    assert equal_on_window(phi("y", 8), psi("y", 8), 6)


def test_phi_leading_pole():
    # phi(d^k y) ~ (-1)^(k+1) k! z^-(k+1)
    for k in range(5):
        s = phi("d" * k + "y", 1)
        assert s.ord == -(k + 1)
        assert s.coefficient(-(k + 1)) == Fr((-1) ** (k + 1) * factorial(k))


def test_psi_depth_one_pole_is_simple():
    # every psi(d^k y) keeps a simple pole: sum_l binom(k,l)(-1)^(l+1)/(l+1)
    for k in range(1, 5):
        assert psi("d" * k + "y", 1).ord == -1


def test_psi_dydy_as_an_explicit_f_combination():
    # f(z)^2 - f(z) f(2z) - f(2z)^2 + f(2z) f(3z)
    V = 8
    f1, f2, f3 = psi_factor(1, V), psi_factor(2, V), psi_factor(3, V)
    explicit = (
        series_mul(f1, f1)
        - series_mul(f1, f2)
        - series_mul(f2, f2)
        + series_mul(f2, f3)
    )
    assert equal_on_window(psi("dydy", 5), explicit, 6)


def test_constant_oracle_structure():
    # C^k_m vanishes for m = 1..k and equals (-1)^(k+1) k! at m = k+1
    for k in range(1, 6):
        for m in range(1, k + 1):
            assert psi_C((k,), (m,)) == 0
        assert psi_C((k,), (k + 1,)) == Fr((-1) ** (k + 1) * factorial(k))
    assert psi_C((0,), (1,)) == -1
    with pytest.raises(ValueError):
        psi_C((1, 2), (1,))


def test_inadmissible_words_rejected():
    with pytest.raises(NotAdmissible):
        phi("dyd", 1)
    with pytest.raises(NotAdmissible):
        psi("d", 1)


def test_empty_word_realizes_the_unit():
    for char in (phi, psi):
        s = char("", 4)
        assert s.coefficient(0) == 1
        assert all(s.coefficient(n) == 0 for n in range(1, 5))


def test_requested_window_is_honoured():
    s = phi("ddydy", 7)
    assert s.valid_through >= 7
    with pytest.raises(PrecisionExceeded):
        s.coefficient(s.valid_through + 1)


def test_plan_grows_with_weight_and_indices():
    assert plan_valid_through(1, "y", 0) == 1 + 1 + 0
    assert plan_valid_through(2, "ddydy", 0) == 2 + 5 + 3
    assert plan_valid_through(2, "ddydy", 4) == 2 + 5 + 3 + 4


def test_depth1_closed_form():
    assert mero_depth1(0) == Fr(-1, 2)
    assert mero_depth1(1) == Fr(-1, 12)
    assert mero_depth1(2) == 0
    assert mero_depth1(3) == Fr(1, 120)
    with pytest.raises(ValueError):
        mero_depth1(-1)


def test_depth2_closed_form():
    assert mero_depth2(0, 1) == Fr(1, 24)
    assert mero_depth2(1, 0) == Fr(1, 12)
    assert mero_depth2(3, 2) == Fr(1, 504)
    with pytest.raises(EvenWeight):
        mero_depth2(1, 1)
    with pytest.raises(ValueError):
        mero_depth2(-1, 2)
