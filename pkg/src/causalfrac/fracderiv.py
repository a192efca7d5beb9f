"""Fractional derivative D^s for Re(s) > 0 and the unified operator.

With k = floor(Re(s)) + 1:

* right variant  D_R^s f = J^{k-s} f^(k)      (integral of the k-th derivative)
* left variant   D_L^s f = D^k J^{k-s} f      (k-th derivative of an integral)

The two agree when f^(m)(a+) = 0 for m < k.  For a constant C the right
variant vanishes while the left one gives C (x-a)**(-s) / Gamma(1-s).
"""

from __future__ import annotations

import enum
import math

import numpy as np

from .exceptions import DomainError
from .fracint import DEFAULT_CONFIG, FractionalImage, QuadratureConfig, _as_order, frac_integral
from .funcspace import CausalFunction

__all__ = [
    "DerivativeVariant",
    "derivative_image",
    "frac_derivative",
    "frac_derivative_split",
    "split_order",
    "unified_apply",
    "unified_image",
]


class DerivativeVariant(str, enum.Enum):
    LEFT = "left"
    RIGHT = "right"


def _variant(variant) -> DerivativeVariant:
    try:
        return DerivativeVariant(variant)
    except ValueError:
        raise DomainError(f"variant must be 'left' or 'right', got {variant!r}") from None


def _derivative_k(s: complex) -> int:
    if s.real <= 0:
        raise DomainError(f"Re(s) > 0 required for D^s, got s = {s}; use unified_apply for other orders")
    return math.floor(s.real) + 1


def derivative_image(f: CausalFunction, s, cfg: QuadratureConfig = DEFAULT_CONFIG) -> CausalFunction:
    """Right-variant D^s f as a composable causal function."""
    s = _as_order(s)
    k = _derivative_k(s)
    return FractionalImage(f.derivative(k), k - s, cfg)


def _central_difference(F, x: np.ndarray, k: int, h: np.ndarray) -> np.ndarray:
    # k-th central difference on a half-step stencil, O(h^2)
    acc = np.zeros(x.shape, dtype=complex)
    for j in range(k + 1):
        acc = acc + (-1) ** j * math.comb(k, j) * np.asarray(F(x + (0.5 * k - j) * h))
    return acc / h**k


def frac_derivative(
    f: CausalFunction,
    s,
    x,
    variant: DerivativeVariant | str = DerivativeVariant.RIGHT,
    cfg: QuadratureConfig = DEFAULT_CONFIG,
):
    """D^s f at ``x`` for Re(s) > 0, right (default) or left variant.

    The left variant differentiates ``y -> J^{k-s} f(y)`` numerically with
    step ``1e-4 * max(1, |x|)``.
    """
    s = _as_order(s)
    k = _derivative_k(s)
    variant = _variant(variant)
    x = np.asarray(x, dtype=float)
    if variant is DerivativeVariant.RIGHT:
        return frac_integral(f.derivative(k), k - s, x, cfg)
    h = 1e-4 * np.maximum(1.0, np.abs(x))
    out = _central_difference(lambda y: frac_integral(f, k - s, y, cfg), x, k, h)
    return out[()] if x.ndim == 0 else out


def split_order(s) -> tuple[int, complex]:
    """Split s = E(s) + s1 with E(s) = floor(Re(s)) and 0 <= Re(s1) < 1.

    The imaginary part stays in s1.  Orders with Re(s) <= 1 are returned
    unchanged as ``(0, s)``.
    """
    s = _as_order(s)
    if s.real <= 1:
        return 0, s
    whole = math.floor(s.real)
    return whole, s - whole


def frac_derivative_split(f: CausalFunction, s, x, cfg: QuadratureConfig = DEFAULT_CONFIG):
    """D^s f as the ordinary derivative of order E(s) followed by D^{s1}."""
    whole, frac = split_order(s)
    g = f.derivative(whole)
    if frac == 0:
        return g(x)
    return frac_derivative(g, frac, x, DerivativeVariant.RIGHT, cfg)


def unified_apply(f: CausalFunction, s, x, cfg: QuadratureConfig = DEFAULT_CONFIG):
    """J^s for Re(s) > 0, the identity for s = 0, right D^{-s} for Re(s) < 0."""
    s = _as_order(s)
    if s == 0:
        return f(x)
    if s.real > 0:
        return frac_integral(f, s, x, cfg)
    if s.real < 0:
        return frac_derivative(f, -s, x, DerivativeVariant.RIGHT, cfg)
    raise DomainError(f"purely imaginary order {s} is outside both Re(s) > 0 and Re(s) < 0")


def unified_image(f: CausalFunction, s, cfg: QuadratureConfig = DEFAULT_CONFIG) -> CausalFunction:
    """Composable counterpart of :func:`unified_apply`."""
    s = _as_order(s)
    if s == 0:
        return f
    if s.real > 0:
        return FractionalImage(f, s, cfg)
    if s.real < 0:
        return derivative_image(f, -s, cfg)
    raise DomainError(f"purely imaginary order {s} is outside both Re(s) > 0 and Re(s) < 0")
