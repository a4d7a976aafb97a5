"""
Rational functions in one variable t with integer coefficients.

Polynomials are stored as coefficient lists, constant term first.
Expansion at t = 0 is exact long division over the integers (the
denominator's constant term must be +1 or -1) or over the rationals.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence

import sympy as sp

from .base import exact
from ..exceptions import ValidationError

t = sp.Symbol('t')


def _trim(coefficients: Sequence) -> List:
    out = [exact(c) for c in coefficients]
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out or [0]


def poly_mul(x: Sequence, y: Sequence) -> List:
    out = [0] * (len(x) + len(y) - 1)
    for i, a in enumerate(x):
        if a:
            for j, b in enumerate(y):
                out[i + j] += a * b
    return _trim(out)


def binomial_factor(sign: int, degree: int) -> List[int]:
    """Coefficients of 1 + sign * t^degree."""
    out = [0] * (degree + 1)
    out[0] += 1
    out[degree] += sign
    return out


def poly_from_expr(expr) -> List:
    """Coefficient list of a sympy polynomial expression in ``t``."""
    coefficients = sp.Poly(sp.expand(expr), t).all_coeffs()[::-1]
    return _trim([exact(sp.Rational(c)) for c in coefficients])


def is_palindromic(coefficients: Sequence) -> bool:
    """t^deg * P(1/t) == P(t)."""
    coefficients = _trim(coefficients)
    return coefficients == coefficients[::-1]


class RationalFunction:
    """Immutable numerator / denominator pair of polynomials in t."""

    __slots__ = ('numerator', 'denominator')

    def __init__(self, numerator: Sequence, denominator: Sequence = (1,)):
        numerator = tuple(_trim(numerator))
        denominator = tuple(_trim(denominator))
        if denominator == (0,):
            raise ValidationError("Denominator must be nonzero")
        object.__setattr__(self, 'numerator', numerator)
        object.__setattr__(self, 'denominator', denominator)

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    @classmethod
    def from_factors(cls, numerator_factors, denominator_factors) -> 'RationalFunction':
        numerator, denominator = [1], [1]
        for factor in numerator_factors:
            numerator = poly_mul(numerator, factor)
        for factor in denominator_factors:
            denominator = poly_mul(denominator, factor)
        return cls(numerator, denominator)

    @classmethod
    def from_expr(cls, expr) -> 'RationalFunction':
        numerator, denominator = sp.fraction(sp.together(expr))
        return cls(poly_from_expr(numerator), poly_from_expr(denominator))

    def is_expandable(self) -> bool:
        return self.denominator[0] != 0

    def expand(self, upto: int) -> List:
        """Power-series coefficients c_0 .. c_upto.

        Raises:
            ValidationError: If the denominator vanishes at t = 0.
        """
        if upto < 0:
            raise ValidationError(f"Expansion bound must be non-negative, got {upto}")
        if not self.is_expandable():
            raise ValidationError("Denominator vanishes at t = 0; not expandable as a power series")
        d0 = self.denominator[0]
        coefficients: List = []
        for n in range(upto + 1):
            value = self.numerator[n] if n < len(self.numerator) else 0
            for i in range(1, min(n, len(self.denominator) - 1) + 1):
                value -= self.denominator[i] * coefficients[n - i]
            coefficients.append(exact(Fraction(value) / d0) if value % d0 else exact(value // d0))
        return coefficients

    def __mul__(self, other: 'RationalFunction') -> 'RationalFunction':
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return RationalFunction(
            poly_mul(self.numerator, other.numerator),
            poly_mul(self.denominator, other.denominator),
        )

    def __repr__(self) -> str:
        return f"RationalFunction({list(self.numerator)}, {list(self.denominator)})"
