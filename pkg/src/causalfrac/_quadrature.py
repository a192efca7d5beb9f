"""Quadrature rules on [0, 1] for integrands with algebraic endpoint singularities."""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

# half-width of the truncated tanh-sinh interval; exp(-pi*sinh(5.5)) ~ 1e-167
_DE_HALF_WIDTH = 5.5


@lru_cache(maxsize=64)
def tanh_sinh(n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Double-exponential rule with ``n`` points on [0, 1].

    Returns ``(v, cv, w)`` where ``cv = 1 - v`` is computed without
    cancellation, so integrands singular at either end can be evaluated at
    distances far below machine epsilon from the endpoint.
    """
    if n < 4:
        raise ValueError("tanh-sinh rule needs at least 4 points")
    t = np.linspace(-_DE_HALF_WIDTH, _DE_HALF_WIDTH, n)
    h = t[1] - t[0]
    z = np.pi * np.sinh(t)
    v = 1.0 / (1.0 + np.exp(-z))
    cv = 1.0 / (1.0 + np.exp(z))
    w = h * np.pi * np.cosh(t) * v * cv
    for arr in (v, cv, w):
        arr.setflags(write=False)
    return v, cv, w


@lru_cache(maxsize=64)
def graded_gauss_legendre(n: int, levels: int = 14, ratio: float = 0.2) -> tuple[np.ndarray, np.ndarray]:
    """Composite Gauss-Legendre on [0, 1], geometrically refined towards 0.

    Panels are ``[0, r**L], [r**L, r**(L-1)], ..., [r, 1]`` with ``n`` nodes
    each; suits integrands behaving like ``u**p`` (p > -1) near the origin.
    """
    x, w = np.polynomial.legendre.leggauss(n)
    edges = np.concatenate(([0.0], ratio ** np.arange(levels, -1, -1)))
    nodes, weights = [], []
    for lo, hi in zip(edges[:-1], edges[1:]):
        half = 0.5 * (hi - lo)
        nodes.append(lo + half * (x + 1.0))
        weights.append(half * w)
    u = np.concatenate(nodes)
    wt = np.concatenate(weights)
    u.setflags(write=False)
    wt.setflags(write=False)
    return u, wt


@lru_cache(maxsize=64)
def exp_sinh(n: int, T: float, lower: float = 4.0) -> tuple[np.ndarray, np.ndarray]:
    """Rule for int_0^T with T large: t = exp(pi/2 sinh u), u in [-lower, u_T].

    Nodes cluster algebraically at 0 and thin out geometrically towards T,
    which suits integrands like t**beta * exp(-t).
    """
    if n < 4:
        raise ValueError("exp-sinh rule needs at least 4 points")
    u_top = math.asinh(2.0 * math.log(T) / math.pi)
    u = np.linspace(-lower, u_top, n)
    h = u[1] - u[0]
    t = np.exp(0.5 * np.pi * np.sinh(u))
    t[-1] = T
    w = h * 0.5 * np.pi * np.cosh(u) * t
    w[-1] *= 0.5
    t.setflags(write=False)
    w.setflags(write=False)
    return t, w
