"""Text forms of complex orders: ``<re>[+<im>i]`` with no spaces."""

from __future__ import annotations

import re

from .exceptions import SpecParseError

_NUM = r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
_COMPLEX = re.compile(rf"^(?P<re>[+-]?{_NUM})(?:(?P<im>[+-](?:{_NUM})?)i)?$")
_IMAG = re.compile(rf"^(?P<im>[+-]?(?:{_NUM})?)i$")


def _imag(text: str) -> float:
    if text in ("", "+", "-"):
        text += "1"
    return float(text)


def parse_order(text: str) -> complex:
    """Parse ``0.5``, ``-1.5``, ``0.5+0.5i``, ``1-2i`` or ``2i``.

    >>> parse_order("0.5-0.5i")
    (0.5-0.5j)
    """
    s = text.strip().replace("j", "i")
    m = _COMPLEX.match(s)
    if m:
        im = m.group("im")
        return complex(float(m.group("re")), 0.0 if im is None else _imag(im))
    m = _IMAG.match(s)
    if m:
        return complex(0.0, _imag(m.group("im")))
    raise SpecParseError(f"cannot parse order {text!r}; expected <re>[+<im>i]")


def format_order(s: complex) -> str:
    """Inverse of :func:`parse_order` (round-trips exactly)."""
    s = complex(s)
    if s.imag == 0:
        return repr(s.real)
    return f"{s.real!r}{'+' if s.imag >= 0 else '-'}{abs(s.imag)!r}i"
