import math
import numpy as np
import pytest
from graphene_zb.errors import IndexOverflow, Overflow
from graphene_zb.special import (
    N_MAX,
    HermiteTable,
    bessel_i,
    bessel_i_scaled,
    hermite,
    hermite_imag_scaled,
)


@pytest.mark.parametrize("n, x, expected", [
    (0, 3.0, 1.0),
    (1, 0.5, 1.0),
    (2, 1.5, 7.0),
    (3, 1.0, -4.0),
    (4, 0.0, 12.0),
])
def test_hermite_known_values(n: int, x: float, expected: float):
    assert hermite(n, x) == pytest.approx(expected)

@pytest.mark.parametrize("n, x, expected", [
    (0, 2.0, 1.0),
    (2, 1.0, 6.0),
    (3, 1.0, 20.0),
    (4, 0.0, 12.0),
])
def test_imaginary_axis_polynomials(n: int, x: float, expected: float):
    assert hermite_imag_scaled(n, x) == pytest.approx(expected)

@pytest.mark.parametrize("n", range(8))
def test_hermite_parity(n: int):
    assert hermite(n, -0.7) == pytest.approx((-1) ** n * hermite(n, 0.7))

def test_index_beyond_table_raises():
    with pytest.raises(IndexOverflow):
        hermite(N_MAX + 1, 1.0)
    with pytest.raises(IndexOverflow):
        HermiteTable.build(1.0, n_max=N_MAX + 1)


def test_table_matches_direct_recurrence():
    table = HermiteTable.build(9.6, n_max=60)
    for n in (0, 1, 5, 10, 40, 60):
        assert table[n] == pytest.approx(hermite_imag_scaled(n, 9.6), rel=1e-12)

def test_real_table_matches_hermite():
    table = HermiteTable.build(0.7, n_max=30, imaginary=False)
    for n in range(31):
        assert table[n] == pytest.approx(hermite(n, 0.7), rel=1e-10, abs=1e-10)

def test_table_survives_large_index():
    table = HermiteTable.build(9.6, n_max=N_MAX)
    assert np.all(np.isfinite(table.log_abs))
    assert np.all(table.sign == 1.0)
    # G_{n+1} = 2x G_n + 2n G_{n-1} in log form
    n = 300
    lhs = table.log_abs[n + 1]
    rhs = math.log(2 * 9.6 * math.exp(table.log_abs[n] - lhs)
                   + 2 * n * math.exp(table.log_abs[n - 1] - lhs)) + lhs
    assert lhs == pytest.approx(rhs, rel=1e-12)


def test_bessel_at_zero():
    assert bessel_i(0, 0.0) == 1.0
    assert bessel_i(1, 0.0) == 0.0

def test_bessel_i1_at_one():
    assert bessel_i(1, 1.0) == pytest.approx(0.5651591, rel=1e-7)

def test_i0_dominates_i1():
    x = np.linspace(0.0, 50.0, 201)
    assert np.all(bessel_i(0, x) >= bessel_i(1, x))

def test_i0_derivative_is_i1():
    x = np.linspace(0.5, 50.0, 100)
    h = 1e-3
    derivative = (bessel_i(0, x - 2 * h) - 8 * bessel_i(0, x - h)
                  + 8 * bessel_i(0, x + h) - bessel_i(0, x + 2 * h)) / (12 * h)
    assert np.allclose(derivative, bessel_i(1, x), rtol=1e-8, atol=0.0)
    assert (bessel_i(0, h) - bessel_i(0, 0.0)) / h == pytest.approx(bessel_i(1, 0.0), abs=1e-3)

def test_bessel_overflow_guard():
    with pytest.raises(Overflow):
        bessel_i(0, 701.0)

def test_scaled_bessel_is_finite_for_large_arguments():
    value = bessel_i_scaled(2, 1e5)
    assert 0.0 < value < 1.0
    assert bessel_i_scaled(1, 3.0) == pytest.approx(math.exp(-3.0) * bessel_i(1, 3.0), rel=1e-12)

def test_unsupported_order():
    with pytest.raises(ValueError):
        bessel_i(3, 1.0)


@pytest.mark.parametrize("x", [-30.0, -7.5, -0.3, 0.0, 1.1, 9.6, 30.0])
@pytest.mark.parametrize("imaginary", [False, True])
def test_three_term_recurrence(x: float, imaginary: bool):
    # H_{n+1} - 2x H_n + 2n H_{n-1} = 0, G_{n+1} - 2x G_n - 2n G_{n-1} = 0
    table = HermiteTable.build(x, n_max=201, imaginary=imaginary)
    c = -1.0 if imaginary else 1.0
    for n in range(1, 201):
        logs = table.log_abs[n - 1:n + 2]
        scaled = table.sign[n - 1:n + 2] * np.exp(logs - logs.max())
        terms = (scaled[2], -2.0 * x * scaled[1], c * 2.0 * n * scaled[0])
        assert abs(math.fsum(terms)) <= 1e-9 * sum(abs(v) for v in terms)

@pytest.mark.parametrize("n", range(12))
def test_imaginary_axis_parity(n: int):
    assert hermite_imag_scaled(n, -1.3) == pytest.approx((-1) ** n * hermite_imag_scaled(n, 1.3))

def test_table_parity():
    plus, minus = HermiteTable.build(9.6, n_max=200), HermiteTable.build(-9.6, n_max=200)
    parity = np.where(np.arange(201) % 2 == 0, 1.0, -1.0)
    assert np.array_equal(minus.sign, parity * plus.sign)
    assert np.allclose(minus.log_abs, plus.log_abs, rtol=1e-14, atol=0.0)
