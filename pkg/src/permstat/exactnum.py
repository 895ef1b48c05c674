"""Exact integer/rational arithmetic helpers.

Counts are plain Python ``int`` and exact ratios are ``fractions.Fraction``;
both are arbitrary precision and immutable, which is all the rest of the
package needs.  This module adds the factorial family and a logarithm that
stays accurate for numbers far outside the float range.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce
from numbers import Rational
from typing import Iterable, Union

ExactInt = int
ExactRational = Fraction
Exact = Union[int, Fraction]

_LN2 = math.log(2.0)
# bits of mantissa kept when shifting huge values into float range
_KEEP_BITS = 64


def _check_natural(value: int, name: str) -> None:
    if not isinstance(value, int) or isinstance(value, bool):
        raise TypeError(f"{name} must be an int, got {type(value).__name__}")
    if value < 0:
        raise ValueError(f"{name} must be >= 0, got {value}")


def factorial(n: int) -> int:
    """Return ``n!``."""
    _check_natural(n, "n")
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    """Binomial coefficient; zero when ``k > n``."""
    _check_natural(n, "n")
    _check_natural(k, "k")
    return math.comb(n, k)


def multinomial(parts: Iterable[int]) -> int:
    """Return ``(sum parts)! / prod(part!)``.

    Computed as a product of binomials so the intermediate values stay as
    small as the result allows.

    >>> multinomial([1, 0, 1])
    2
    """
    parts = list(parts)
    if not parts:
        raise ValueError("multinomial needs at least one part")
    total = 0
    result = 1
    for p in parts:
        _check_natural(p, "part")
        total += p
        result *= math.comb(total, p)
    return result


def as_fraction(value: Union[int, Fraction, str]) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are refused: they would smuggle rounding into exact code paths.
    """
    if isinstance(value, float):
        raise TypeError("floats are not accepted where an exact value is required")
    if isinstance(value, (int, Rational, str)):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def _ln_positive_int(n: int) -> float:
    shift = n.bit_length() - _KEEP_BITS
    if shift <= 0:
        return math.log(n)
    return math.log(n >> shift) + shift * _LN2


def ln_exact(q: Union[int, Fraction]) -> float:
    """Natural log of a positive exact value, to double precision.

    Large numerators/denominators are reduced to a 64-bit mantissa and a
    power-of-two exponent first, so ``ln_exact(factorial(10**5))`` works
    without overflow.  Values near 1 go through ``log1p`` to keep relative
    accuracy.
    """
    q = as_fraction(q)
    if q <= 0:
        raise ValueError(f"logarithm of a non-positive value: {q}")
    if Fraction(1, 2) < q < 2:
        return math.log1p(float(q - 1))
    return _ln_positive_int(q.numerator) - _ln_positive_int(q.denominator)


def product(values: Iterable[Exact], start: Exact = 1) -> Exact:
    return reduce(lambda a, b: a * b, values, start)


def format_exact(value: Union[int, Fraction]) -> str:
    """Render an exact value as ``"p/q"`` (or ``"p"`` for integers)."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
