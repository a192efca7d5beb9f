"""Causal functions: f(x) = 0 for x <= a, smooth on ]a, +inf[.

Every function exposes analytic derivatives of any order and the one-sided
limits ``f^(m)(a+)`` needed by the boundary-corrected integral.  Evaluation
close to the lower bound goes through :meth:`CausalFunction.at_offset`, which
takes the distance ``x - a`` directly so that quadrature nodes packed against
``a`` never lose precision to cancellation.
"""

from __future__ import annotations

import math
import re
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .exceptions import DomainError, OrderUnavailableError, RegularizationError, SpecParseError
from .parsing import parse_order

__all__ = [
    "CausalFunction",
    "Constant",
    "Exponential",
    "Grid",
    "Polynomial",
    "Power",
    "ScaledSum",
    "derivative",
    "format_function",
    "make_constant",
    "make_exponential",
    "make_polynomial",
    "make_power",
    "parse_function",
]


def _falling_factorial(p: complex, k: int) -> complex:
    out = 1.0
    for j in range(k):
        out *= p - j
    return out


def _is_nonneg_integer(p: complex) -> bool:
    p = complex(p)
    return p.imag == 0.0 and p.real >= 0 and p.real == math.floor(p.real)


def _wrap(x: np.ndarray, values: np.ndarray):
    return values[()] if x.ndim == 0 else values


class CausalFunction(ABC):
    """A function vanishing on ``x <= lower_bound``."""

    lower_bound: float

    #: highest derivative order available analytically
    max_derivative: float = math.inf

    @property
    def kind(self) -> str:
        return type(self).__name__.lower()

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        a = self.lower_bound
        if math.isinf(a):
            return _wrap(x, np.asarray(self._eval_unbounded(x), dtype=complex))
        out = np.zeros(x.shape, dtype=complex)
        mask = x > a
        if np.any(mask):
            out[mask] = self.at_offset(x[mask] - a)
        return _wrap(x, out)

    def _eval_unbounded(self, x: np.ndarray) -> np.ndarray:
        raise NotImplementedError(f"{self.kind} does not support an infinite lower bound")

    @abstractmethod
    def at_offset(self, d: np.ndarray) -> np.ndarray:
        """Values at ``lower_bound + d`` for ``d > 0`` (finite lower bound only)."""

    @abstractmethod
    def derivative(self, k: int) -> CausalFunction:
        """k-th derivative on ]a, +inf[ as a new causal function."""

    @abstractmethod
    def boundary_value(self, m: int) -> complex:
        """One-sided limit ``f^(m)(a+)``.

        Raises :class:`RegularizationError` when the limit is infinite.
        """

    def deriv(self, k: int, x):
        return derivative(self, k, x)

    def is_zero(self) -> bool:
        return False

    def _check_order(self, k: int) -> None:
        if not isinstance(k, (int, np.integer)) or k < 0:
            raise OrderUnavailableError(f"derivative order must be a non-negative integer, got {k!r}")
        if k > self.max_derivative:
            raise OrderUnavailableError(
                f"{self.kind} provides derivatives up to order {self.max_derivative}, requested {k}"
            )

    # linear combinations -------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, CausalFunction):
            return NotImplemented
        return ScaledSum.of((1.0, self), (1.0, other))

    def __sub__(self, other):
        if not isinstance(other, CausalFunction):
            return NotImplemented
        return ScaledSum.of((1.0, self), (-1.0, other))

    def __mul__(self, scalar):
        if isinstance(scalar, CausalFunction) or not np.isscalar(scalar):
            return NotImplemented
        return ScaledSum.of((complex(scalar), self))

    __rmul__ = __mul__

    def __neg__(self):
        return ScaledSum.of((-1.0, self))


@dataclass(frozen=True)
class Power(CausalFunction):
    """``coef * (x - a)**exponent`` for x > a.

    Public construction goes through :func:`make_power` (real exponent >= 0);
    negative and complex exponents appear internally as derivatives and as
    boundary terms of fractional integrals.
    """

    lower_bound: float
    exponent: complex
    coef: complex = 1.0

    def at_offset(self, d):
        d = np.asarray(d, dtype=float)
        p = self.exponent
        if p == 0:
            return np.full(d.shape, self.coef, dtype=complex)
        if isinstance(p, complex) and p.imag == 0.0:
            p = p.real
        return self.coef * np.power(d, p, dtype=complex)

    def derivative(self, k):
        self._check_order(k)
        p = self.exponent
        if k == 0:
            return self
        if _is_nonneg_integer(p) and k > complex(p).real:
            return Constant(self.lower_bound, 0.0)
        return Power(self.lower_bound, p - k, self.coef * _falling_factorial(p, k))

    def boundary_value(self, m):
        g = self.derivative(m)
        if g.is_zero():
            return 0j
        e = complex(g.exponent)
        if e == 0:
            return complex(g.coef)
        if e.real > 0:
            return 0j
        if g.coef == 0:
            return 0j
        raise RegularizationError(
            f"f^({m})(a+) is infinite for (x-a)^{_fmt(self.exponent)} at a = {self.lower_bound:g}"
        )


@dataclass(frozen=True)
class Polynomial(CausalFunction):
    """``sum_j coeffs[j] * (x - a)**j`` for x > a."""

    lower_bound: float
    coeffs: tuple[complex, ...]

    def at_offset(self, d):
        d = np.asarray(d, dtype=float)
        out = np.zeros(d.shape, dtype=complex)
        for c in reversed(self.coeffs):
            out = out * d + c
        return out

    def derivative(self, k):
        self._check_order(k)
        c = list(self.coeffs)
        for _ in range(k):
            c = [j * c[j] for j in range(1, len(c))]
        return Polynomial(self.lower_bound, tuple(c) if c else (0.0,))

    def boundary_value(self, m):
        if m >= len(self.coeffs):
            return 0j
        return complex(math.factorial(m) * self.coeffs[m])

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)


@dataclass(frozen=True)
class Exponential(CausalFunction):
    """``e**x`` on the whole real line (lower bound -inf)."""

    lower_bound: float = -math.inf

    def _eval_unbounded(self, x):
        return np.exp(x).astype(complex)

    def at_offset(self, d):
        raise DomainError("the exponential has no finite lower bound")

    def derivative(self, k):
        self._check_order(k)
        return self

    def boundary_value(self, m):
        return 0j


@dataclass(frozen=True)
class Constant(CausalFunction):
    """``C`` for x > a and 0 for x <= a; ``f(a+) = C`` may be non-zero."""

    lower_bound: float
    value: complex

    def at_offset(self, d):
        return np.full(np.shape(d), self.value, dtype=complex)

    def derivative(self, k):
        self._check_order(k)
        return self if k == 0 else Constant(self.lower_bound, 0.0)

    def boundary_value(self, m):
        return complex(self.value) if m == 0 else 0j

    def is_zero(self):
        return self.value == 0


@dataclass(frozen=True)
class ScaledSum(CausalFunction):
    """Finite linear combination ``sum_i c_i f_i`` sharing one lower bound."""

    terms: tuple[tuple[complex, CausalFunction], ...]

    @classmethod
    def of(cls, *terms: tuple[complex, CausalFunction]) -> ScaledSum:
        flat: list[tuple[complex, CausalFunction]] = []
        for c, f in terms:
            if isinstance(f, ScaledSum):
                flat.extend((c * ci, fi) for ci, fi in f.terms)
            else:
                flat.append((c, f))
        if not flat:
            raise ValueError("empty linear combination")
        bounds = {f.lower_bound for _, f in flat}
        if len(bounds) != 1:
            raise DomainError(f"cannot combine functions with lower bounds {sorted(bounds)}")
        return cls(tuple(flat))

    @property
    def lower_bound(self):  # type: ignore[override]
        return self.terms[0][1].lower_bound

    @property
    def max_derivative(self):  # type: ignore[override]
        return min(f.max_derivative for _, f in self.terms)

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        out = np.zeros(x.shape, dtype=complex)
        for c, f in self.terms:
            out = out + c * np.asarray(f(x))
        return _wrap(x, out)

    def at_offset(self, d):
        d = np.asarray(d, dtype=float)
        out = np.zeros(d.shape, dtype=complex)
        for c, f in self.terms:
            out = out + c * f.at_offset(d)
        return out

    def derivative(self, k):
        self._check_order(k)
        if k == 0:
            return self
        return ScaledSum.of(*((c, f.derivative(k)) for c, f in self.terms))

    def boundary_value(self, m):
        return sum((c * f.boundary_value(m) for c, f in self.terms if c != 0), 0j)

    def is_zero(self):
        return all(c == 0 or f.is_zero() for c, f in self.terms)


@dataclass(frozen=True)
class Grid:
    """Uniform abscissae ``linspace(x0, x1, n)``."""

    x0: float
    x1: float
    n: int

    def __post_init__(self):
        if self.n < 2:
            raise DomainError("grid needs n >= 2")
        # x0 == x1 is accepted: a repeated abscissa is a valid CLI request
        if not self.x0 <= self.x1:
            raise DomainError("grid needs x0 <= x1")

    def points(self) -> np.ndarray:
        return np.linspace(self.x0, self.x1, self.n)

    def check_inside(self, a: float) -> None:
        if not math.isinf(a) and self.x0 <= a:
            raise DomainError(f"grid points must lie strictly above the lower bound a = {a:g}")


# constructors --------------------------------------------------------------


def make_power(a: float, p: float) -> Power:
    if isinstance(p, complex) or p < 0:
        raise DomainError(f"power exponent must be real and >= 0, got {p!r}")
    if math.isinf(a):
        raise DomainError("power functions need a finite lower bound")
    return Power(float(a), float(p))


def make_polynomial(a: float, coeffs: Sequence[complex]) -> Polynomial:
    if math.isinf(a):
        raise DomainError("polynomials need a finite lower bound")
    if len(coeffs) == 0:
        raise DomainError("polynomial needs at least one coefficient")
    return Polynomial(float(a), tuple(coeffs))


def make_exponential() -> Exponential:
    return Exponential()


def make_constant(a: float, C: complex) -> Constant:
    if math.isinf(a):
        raise DomainError("constants need a finite lower bound")
    return Constant(float(a), C)


def derivative(f: CausalFunction, k: int, x):
    """Analytic k-th derivative of ``f`` evaluated at ``x``."""
    return f.derivative(k)(x)


# CLI mini-syntax -----------------------------------------------------------

_KV = re.compile(r"^\s*([A-Za-z_]+)\s*=\s*(.+?)\s*$")


def _fmt(v) -> str:
    v = complex(v)
    return f"{v.real:g}" if v.imag == 0 else f"{v.real:g}{v.imag:+g}i"


def _parse_kv(body: str) -> dict[str, str]:
    # coeffs=1,2,3 swallows the trailing commas, so split on "key=" tokens
    parts = re.split(r",(?=\s*[A-Za-z_]+\s*=)", body)
    out: dict[str, str] = {}
    for part in parts:
        m = _KV.match(part)
        if not m:
            raise SpecParseError(f"expected key=value, got {part!r}")
        out[m.group(1).lower()] = m.group(2)
    return out


def _parse_real(text: str, name: str) -> float:
    try:
        return float(text)
    except ValueError:
        raise SpecParseError(f"{name} must be a real number, got {text!r}") from None


def parse_function(spec: str) -> CausalFunction:
    """Build a catalogue function from its text specifier.

    ``power:a=<r>,p=<r>`` | ``exp`` | ``const:a=<r>,c=<r>`` |
    ``poly:a=<r>,coeffs=<r,r,...>``
    """
    text = spec.strip()
    name, _, body = text.partition(":")
    name = name.strip().lower()
    if name == "exp":
        if body.strip():
            raise SpecParseError("exp takes no parameters")
        return make_exponential()
    kv = _parse_kv(body) if body.strip() else {}
    expected = {"power": {"a", "p"}, "const": {"a", "c"}, "poly": {"a", "coeffs"}}
    if name not in expected:
        raise SpecParseError(f"unknown function kind {name!r}; use power, exp, const or poly")
    if set(kv) != expected[name]:
        raise SpecParseError(f"{name} needs parameters {sorted(expected[name])}, got {sorted(kv)}")
    a = _parse_real(kv["a"], "a")
    try:
        if name == "power":
            return make_power(a, _parse_real(kv["p"], "p"))
        if name == "const":
            return make_constant(a, parse_order(kv["c"]))
        coeffs = [parse_order(c) for c in kv["coeffs"].split(",") if c.strip()]
        return make_polynomial(a, coeffs)
    except DomainError as exc:
        raise SpecParseError(str(exc)) from None


def format_function(f: CausalFunction) -> str:
    """Inverse of :func:`parse_function` for the catalogue kinds."""
    if isinstance(f, Exponential):
        return "exp"
    if isinstance(f, Power) and complex(f.coef) == 1:
        return f"power:a={f.lower_bound:g},p={_fmt(f.exponent)}"
    if isinstance(f, Constant):
        return f"const:a={f.lower_bound:g},c={_fmt(f.value)}"
    if isinstance(f, Polynomial):
        return f"poly:a={f.lower_bound:g},coeffs=" + ",".join(_fmt(c) for c in f.coeffs)
    raise ValueError(f"{f.kind} has no text specifier")
