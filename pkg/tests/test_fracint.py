import math

import numpy as np
import pytest

from causalfrac.exceptions import DomainError, RegularizationError
from causalfrac.fracint import (
    FractionalImage,
    QuadratureConfig,
    auto_regularization_k,
    boundary_corrected,
    frac_integral,
    frac_integral_grid,
    iterated_integral,
)
from causalfrac.funcspace import Grid, make_constant, make_exponential, make_polynomial, make_power
from causalfrac.special import gamma
from causalfrac.verify import closed_form_power

# poly on a = 0.5: 1 + 2u - u^2/2 + u^3/4 with u = y - a; values from the term-wise
# closed form in 40-digit arithmetic
POLY = make_polynomial(0.5, (1.0, 2.0, -0.5, 0.25))
POLY_ORACLE = [
    (0.5, 1.3, 1.9725994236154871),
    (0.3 + 0.4j, 2.0, 4.0347941328382175 + 0.05509123632774965j),
    (1.7, 1.0, 0.268862242632238),
]


@pytest.mark.parametrize("s, x, expected", POLY_ORACLE)
def test_polynomial_against_reference(s, x, expected):
    assert abs(frac_integral(POLY, s, x) - expected) < 1e-12 * abs(expected)


@pytest.mark.parametrize("p", [0.0, 0.5, 1.0, 2.0, 3.0])
@pytest.mark.parametrize("s", [0.25, 0.5, 1.0, 1.5, 2.7, 0.5 + 0.5j, 1 - 2j, 0.3 + 10j])
def test_power_closed_form(p, s):
    x = np.array([0.25, 1.0, 2.0])
    ref = closed_form_power(s, p, 0.0, x)
    got = frac_integral(make_power(0.0, p), s, x)
    assert np.max(np.abs(got - ref) / np.abs(ref)) < 1e-10


def test_shifted_lower_bound():
    f = make_power(-1.0, 2.0)
    assert frac_integral(f, 0.5, 1.0) == pytest.approx(closed_form_power(0.5, 2.0, -1.0, 1.0), rel=1e-12)


def test_order_zero_is_identity():
    f = make_power(0.0, 2.0)
    assert frac_integral(f, 0, 1.5) == f(1.5)


def test_causality():
    f = make_power(0.0, 1.0)
    assert np.all(frac_integral(f, 0.5, np.array([-1.0, 0.0])) == 0)


@pytest.mark.parametrize("s", [-0.5, 1j, 0.0 - 1j])
def test_rejects_nonpositive_real_part(s):
    with pytest.raises(DomainError, match=r"Re\(s\) > 0 required for J\^s"):
        frac_integral(make_power(0.0, 1.0), s, 1.0)


def test_liouville_exponential():
    x = np.array([-1.0, 0.0, 1.0])
    for s in (0.5, 1.0, 2.3, 0.5 + 0.5j):
        got = frac_integral(make_exponential(), s, x, QuadratureConfig(tail_T=40))
        assert np.max(np.abs(got / np.exp(x) - 1)) < 1e-8


def test_regularization_depth_independent():
    f = make_polynomial(0.0, (1.0, -1.0, 0.5, 0.25))
    x = np.array([0.3, 1.0, 2.0])
    vals = [boundary_corrected(f, 0.4 + 0.2j, k, x) for k in range(1, 5)]
    for v in vals[1:]:
        assert np.max(np.abs(v - vals[0])) < 1e-12


def test_constant_single_step_exact():
    c = make_constant(0.0, 2.0)
    x = np.array([0.5, 1.0, 3.0])
    assert np.allclose(boundary_corrected(c, 0.5, 1, x), 2 * closed_form_power(0.5, 0.0, 0.0, x), rtol=1e-14)


def test_auto_k():
    assert auto_regularization_k(make_power(0.0, 2.0), 0.3) == 1
    assert auto_regularization_k(make_power(0.0, 2.0), 1.5) == 0
    # f'(a+) is infinite for sqrt, so no integration by parts is possible
    assert auto_regularization_k(make_power(0.0, 0.5), 0.3) == 1
    assert auto_regularization_k(make_power(0.0, 0.5), 0.3 - 1.0 + 0.0) == 1


def test_explicit_k_beyond_smoothness():
    with pytest.raises(RegularizationError):
        frac_integral(make_power(0.0, 0.5), 0.5, 1.0, QuadratureConfig(regularization_k=2))


def test_grid_error_estimate_shrinks():
    f = make_exponential()
    errs = [frac_integral_grid(f, 0.5, Grid(-1, 1, 5), QuadratureConfig(nodes=n)).err_estimate
            for n in (16, 32, 64)]
    assert errs[0] > errs[1] > errs[2]
    assert errs[2] < 1e-10


@pytest.mark.parametrize(
    "f, grid",
    [
        (make_power(0.0, 2.0), Grid(0.1, 2, 5)),
        (make_power(0.0, 0.5), Grid(0.1, 2, 5)),
        (make_polynomial(0.0, (1.0, 2.0, 3.0)), Grid(0.1, 2, 5)),
        (make_exponential(), Grid(-1, 1, 5)),
    ],
)
@pytest.mark.parametrize("s", [0.3, 1.5, 0.5 + 0.5j])
def test_grid_error_estimate_monotone(f, grid, s):
    errs = [frac_integral_grid(f, s, grid, QuadratureConfig(nodes=n)).err_estimate for n in (16, 32, 64, 128)]
    for a, b in zip(errs, errs[1:]):
        assert b <= 1.1 * a


def test_config_validation():
    with pytest.raises(DomainError):
        QuadratureConfig(nodes=2)
    with pytest.raises(DomainError):
        QuadratureConfig(regularization_k=-1)
    with pytest.raises(DomainError):
        QuadratureConfig(tail_T=0)
    assert QuadratureConfig(nodes=32).doubled().nodes == 64


def test_iterated_integral():
    f = make_power(0.0, 1.0)
    assert iterated_integral(f, 2, 1.0) == pytest.approx(1 / 6, abs=1e-13)
    assert iterated_integral(f, 2, 2.0) == pytest.approx(4 / 3, abs=1e-12)
    g = make_power(0.0, 0.5)
    # graded panels resolve the sqrt endpoint only to ~1e-11
    assert iterated_integral(g, 1, 1.0) == pytest.approx(frac_integral(g, 1.0, 1.0), abs=1e-10)
    with pytest.raises(DomainError):
        iterated_integral(f, 0, 1.0)
    with pytest.raises(DomainError):
        iterated_integral(make_exponential(), 1, 1.0)


def test_fractional_image_composes():
    f = make_power(0.0, 1.0)
    img = FractionalImage(f, 0.5)
    x = np.array([0.5, 1.0])
    assert np.allclose(img(x), closed_form_power(0.5, 1.0, 0.0, x), rtol=1e-13)
    # analytic derivative of J^0.5 x is Gamma(2)/Gamma(1.5) x^0.5
    d = img.derivative(1)(x)
    assert np.allclose(d, (gamma(2) / gamma(1.5)) * np.sqrt(x), rtol=1e-12)


def test_fractional_image_of_constant_derivative():
    # D^1 J^0.5 C = C x^-0.5 / Gamma(0.5)
    img = FractionalImage(make_constant(0.0, 1.0), 0.5)
    assert img.derivative(1)(2.0) == pytest.approx(2.0**-0.5 / math.sqrt(math.pi), rel=1e-13)
