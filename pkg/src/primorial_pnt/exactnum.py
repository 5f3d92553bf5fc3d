"""Exact naturals and rationals, and natural logarithms of big values.

Naturals are plain Python ``int`` and ratios are ``fractions.Fraction``;
both are exact at any size. Floating point appears only in the value
returned by :func:`ln_natural` and :func:`ln_ratio`.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

from .errors import DomainError

Natural = int
Ratio = Fraction
RatioLike = Union[int, Fraction]

LN2 = math.log(2.0)

# Bits kept in the mantissa; must stay well inside the double exponent range.
_MANTISSA_BITS = 64


def ln_natural(x: Natural) -> float:
    """Natural log of a positive integer of any size.

    ``x`` is split as ``m * 2**k`` with ``m`` below ``2**64`` so the float
    conversion never overflows and the relative error stays near one ulp.
    """
    if x <= 0:
        raise DomainError(f"ln undefined for {x}")
    k = max(0, x.bit_length() - _MANTISSA_BITS)
    return math.log(x >> k) + k * LN2


def ln_ratio(q: RatioLike) -> float:
    """``ln(numerator) - ln(denominator)`` of a positive rational."""
    q = Fraction(q)
    if q <= 0:
        raise DomainError(f"ln undefined for {q}")
    return ln_natural(q.numerator) - ln_natural(q.denominator)


def to_float(q: RatioLike) -> float:
    return float(Fraction(q))


def format_ratio(q: RatioLike) -> str:
    """Render as ``p/q`` (always with a slash, ``1/1`` for one)."""
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_ratio(text: str) -> Fraction:
    """Parse ``"p/q"``, an integer, or a decimal literal into an exact Fraction."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise DomainError(f"not a rational number: {text!r}") from None
