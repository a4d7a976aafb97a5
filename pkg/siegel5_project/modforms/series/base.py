"""
Shared constants and scalar helpers for the expansion types.

Kept decoupled from the series classes so that services, selectors and
management commands can normalize exact scalars without importing them.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Tuple, Union

Exact = Union[int, Fraction]
Exponent = Tuple[int, int, int]

#: Names of the three Fourier variables; exponent (a, b, c) stands for q^a r^b s^c.
VARIABLES = ('tau', 'z', 'w')

#: Precision of the embedded generator table (a + c <= 7).
TABLE_TRUNCATION = 7


def exact(value) -> Exact:
    """Coerce a rational scalar to int when integral, else Fraction.

    Floats are refused: every value in the toolkit is exact.
    """
    if isinstance(value, bool):
        return int(value)
    if isinstance(value, int):
        return value
    if isinstance(value, Rational):
        value = Fraction(value.numerator, value.denominator)
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, str):
        return exact(Fraction(value))
    raise TypeError(f"Expected an exact rational, got {type(value).__name__}")


def order(key: Exponent) -> int:
    """Total order a + c of an exponent triple."""
    return key[0] + key[2]


def canonical_key(key: Exponent) -> Tuple[int, int, int]:
    """Sort key of the coefficient tables: a + c ascending, a descending, b ascending."""
    a, b, c = key
    return (a + c, -a, b)


def in_cone(key: Exponent) -> bool:
    a, b, c = key
    return b * b <= 4 * a * c
