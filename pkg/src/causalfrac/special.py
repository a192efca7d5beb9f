"""Gamma, beta and related constants for real and complex arguments.

The complex gamma function uses the Lanczos approximation (g = 7, nine
coefficients) for |s| < 7, the Stirling series beyond, and the reflection
formula for Re(s) < 1/2.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Sequence

from .exceptions import DomainError, GammaOverflowError, PoleError, UnsupportedOrderError

__all__ = [
    "EULER_GAMMA",
    "ExpansionCoefficients",
    "beta",
    "euler_mascheroni",
    "gamma",
    "gamma_derivative_at_one",
    "is_pole",
    "loggamma",
    "phi",
    "phi_expansion",
    "rgamma",
]

#: Euler-Mascheroni constant (standard value).
EULER_GAMMA = 0.57721566490153286061
_ZETA3 = 1.2020569031595942854

_LANCZOS_G = 7.0
_LANCZOS_COEF = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)
# B_2n / (2n (2n - 1)), n = 1..8
_STIRLING_COEF = (
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
)
_STIRLING_MIN_ABS = 7.0
# Gamma(171.62...) is the largest value below DBL_MAX.
_MAX_REAL_ARG = 171.6243769563027


def is_pole(s: complex) -> bool:
    """True when ``s`` is a non-positive integer on the real axis."""
    s = complex(s)
    return s.imag == 0.0 and s.real <= 0.0 and s.real == math.floor(s.real)


def _lanczos_sum(z: complex) -> complex:
    acc = complex(_LANCZOS_COEF[0])
    for i, c in enumerate(_LANCZOS_COEF[1:], start=1):
        acc += c / (z + i)
    return acc


def _loggamma_right(s: complex) -> complex:
    # valid for Re(s) >= 1/2
    if abs(s) >= _STIRLING_MIN_ABS:
        inv = 1.0 / s
        inv2 = inv * inv
        acc = 0j
        for c in reversed(_STIRLING_COEF):
            acc = acc * inv2 + c
        return (s - 0.5) * cmath.log(s) - s + _HALF_LOG_2PI + acc * inv
    z = s - 1.0
    t = z + _LANCZOS_G + 0.5
    return _HALF_LOG_2PI + (z + 0.5) * cmath.log(t) - t + cmath.log(_lanczos_sum(z))


def _sinpi(s: complex) -> complex:
    # argument reduction keeps relative accuracy next to the integers
    n = round(s.real)
    v = cmath.sin(math.pi * (s - n))
    return -v if n % 2 else v


def gamma(s: complex) -> complex:
    """Euler gamma function for a complex argument.

    Raises :class:`PoleError` at non-positive integers and
    :class:`GammaOverflowError` once ``Re(s)`` exceeds the double range.
    """
    s = complex(s)
    if is_pole(s):
        raise PoleError(f"gamma has a pole at s = {s.real:g}")
    if s.real > _MAX_REAL_ARG:
        raise GammaOverflowError(f"gamma({s}) overflows double precision")
    if s.real < 0.5:
        # reflection: Gamma(s) Gamma(1-s) = pi / sin(pi s)
        return math.pi / (_sinpi(s) * gamma(1.0 - s))
    if s.imag == 0.0 and s.real == math.floor(s.real) and s.real <= 23:
        return complex(math.factorial(int(s.real) - 1))
    return cmath.exp(_loggamma_right(s))


def rgamma(s: complex) -> complex:
    """Reciprocal gamma ``1/Gamma(s)``; zero at the poles and on overflow."""
    s = complex(s)
    if is_pole(s):
        return 0j
    if s.real > _MAX_REAL_ARG:
        return cmath.exp(-_loggamma_right(s))
    return 1.0 / gamma(s)


def loggamma(s: complex) -> complex:
    """Logarithm of the gamma function.

    For ``Re(s) >= 1/2`` this is the branch continuous from the positive real
    axis. Left of that line the reflection formula is used, which fixes the
    imaginary part only modulo ``2*pi``.
    """
    s = complex(s)
    if is_pole(s):
        raise PoleError(f"loggamma has a pole at s = {s.real:g}")
    if s.real >= 0.5:
        return _loggamma_right(s)
    return math.log(math.pi) - cmath.log(_sinpi(s)) - loggamma(1.0 - s)


def beta(s1: complex, s2: complex) -> complex:
    """Euler beta function ``Gamma(s1) Gamma(s2) / Gamma(s1 + s2)``."""
    s1, s2 = complex(s1), complex(s2)
    if s1.real <= 0.0 or s2.real <= 0.0:
        raise DomainError("beta requires Re(s1) > 0 and Re(s2) > 0")
    try:
        return gamma(s1) * gamma(s2) / gamma(s1 + s2)
    except GammaOverflowError:
        return cmath.exp(loggamma(s1) + loggamma(s2) - loggamma(s1 + s2))


def euler_mascheroni() -> float:
    return EULER_GAMMA


def gamma_derivative_at_one(n: int) -> float:
    """n-th derivative of Gamma at 1 for n in {0, 1, 2}.

    Gamma'(1) = -gamma and Gamma''(1) = gamma**2 + pi**2/6.
    """
    if n == 0:
        return 1.0
    if n == 1:
        return -EULER_GAMMA
    if n == 2:
        return EULER_GAMMA**2 + math.pi**2 / 6.0
    raise UnsupportedOrderError("only Gamma(1), Gamma'(1) and Gamma''(1) are provided")


@dataclass(frozen=True)
class ExpansionCoefficients:
    """Taylor coefficients of ``phi(eps) = exp(eps * log_a) / Gamma(1 + eps)``.

    ``c[n]`` multiplies ``eps**n / n!``.
    """

    log_a: float
    c: tuple[float, ...]

    def evaluate(self, eps: float) -> float:
        return sum(cn * eps**n / math.factorial(n) for n, cn in enumerate(self.c))

    @property
    def order(self) -> int:
        return len(self.c) - 1


def phi(eps: float, log_a: float) -> float:
    """Exact ``(x - y)**eps / Gamma(1 + eps)`` with ``log_a = ln(x - y)``."""
    return (cmath.exp(eps * log_a) * rgamma(1.0 + eps)).real


def phi_expansion(log_a: float, n_terms: int) -> ExpansionCoefficients:
    """Coefficients c_0 .. c_{n_terms} of the expansion of :func:`phi` in eps.

    ``n_terms`` is the highest power of eps retained, so the truncation error
    of the reconstruction is O(eps**(n_terms + 1)).
    """
    if not isinstance(n_terms, int) or n_terms < 0:
        raise UnsupportedOrderError(f"n_terms must be a non-negative integer, got {n_terms!r}")
    if n_terms > 3:
        raise UnsupportedOrderError(f"expansion beyond eps**3 is not provided (n_terms={n_terms})")
    g = EULER_GAMMA
    zeta2 = math.pi**2 / 6.0
    shifted = g + log_a
    coeffs: Sequence[float] = (
        1.0,
        shifted,
        g * g - zeta2 + 2.0 * g * log_a + log_a * log_a,
        # cumulants of log(phi) are (gamma + log_a, -zeta(2), 2 zeta(3))
        shifted**3 - 3.0 * shifted * zeta2 + 2.0 * _ZETA3,
    )
    return ExpansionCoefficients(log_a=float(log_a), c=tuple(float(v) for v in coeffs[: n_terms + 1]))
