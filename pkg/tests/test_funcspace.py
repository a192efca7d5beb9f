import math

import numpy as np
import pytest

from causalfrac.exceptions import DomainError, RegularizationError, SpecParseError
from causalfrac.funcspace import (
    Grid,
    Power,
    ScaledSum,
    derivative,
    format_function,
    make_constant,
    make_exponential,
    make_polynomial,
    make_power,
    parse_function,
)


def test_causal_zero_below_bound():
    f = make_power(1.0, 2.0)
    vals = f(np.array([0.0, 1.0, 2.0]))
    assert np.allclose(vals, [0, 0, 1])


def test_scalar_in_scalar_out():
    assert np.ndim(make_power(0.0, 1.0)(0.5)) == 0


def test_power_derivatives():
    f = make_power(0.0, 3.0)
    assert derivative(f, 2, 2.0) == pytest.approx(12.0)
    assert f.derivative(4).is_zero()
    g = make_power(0.0, 0.5)
    assert derivative(g, 1, 4.0) == pytest.approx(0.25)
    with pytest.raises(RegularizationError):
        g.boundary_value(1)


def test_boundary_values():
    f = make_polynomial(0.0, (1.0, 2.0, 3.0))
    assert [f.boundary_value(m) for m in range(4)] == [1, 2, 6, 0]
    assert make_power(0.0, 1.0).boundary_value(1) == 1


def test_polynomial_eval_and_derivative():
    f = make_polynomial(1.0, (1.0, -1.0, 0.5))
    x = 3.0
    assert f(x) == pytest.approx(1 - 2 + 2)
    assert derivative(f, 1, x) == pytest.approx(-1 + 2)


def test_exponential():
    e = make_exponential()
    assert e.lower_bound == -math.inf
    assert e(0.0) == pytest.approx(1.0)
    assert e.derivative(3)(1.0) == pytest.approx(math.e)
    # e**x vanishes as x -> -inf
    assert e.boundary_value(0) == 0


def test_linear_combination():
    f = 2 * make_power(0.0, 1.0) - make_power(0.0, 2.0)
    assert isinstance(f, ScaledSum)
    assert f(3.0) == pytest.approx(6 - 9)
    with pytest.raises(DomainError):
        make_power(0.0, 1.0) + make_power(1.0, 1.0)


def test_constructor_validation():
    with pytest.raises(DomainError):
        make_power(0.0, -1.0)
    with pytest.raises(DomainError):
        make_power(-math.inf, 1.0)
    with pytest.raises(DomainError):
        make_polynomial(0.0, ())


def test_grid():
    assert np.allclose(Grid(0, 1, 3).points(), [0, 0.5, 1])
    with pytest.raises(DomainError):
        Grid(0, 1, 1)
    with pytest.raises(DomainError):
        Grid(1, 0, 3)
    with pytest.raises(DomainError):
        Grid(0, 1, 3).check_inside(0.0)


@pytest.mark.parametrize(
    "spec", ["power:a=0,p=1", "exp", "const:a=0,c=1", "poly:a=0.5,coeffs=1,2,-0.5", "const:a=0,c=1+2i"]
)
def test_spec_round_trip(spec):
    f = parse_function(spec)
    assert parse_function(format_function(f)) == f


@pytest.mark.parametrize(
    "spec", ["power:a=0", "power:a=0,p=-1", "sin", "exp:a=0", "const:a=x,c=1", "power:a=0,p=1,q=2", "poly:a=0,coeffs="]
)
def test_spec_rejects(spec):
    with pytest.raises(SpecParseError):
        parse_function(spec)


def test_power_complex_exponent_internal():
    f = Power(0.0, 0.5 + 1j)
    assert f(1.0) == pytest.approx(1.0)
