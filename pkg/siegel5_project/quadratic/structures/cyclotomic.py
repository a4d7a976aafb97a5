"""
Exact arithmetic in cyclotomic fields.

Elements are coordinate vectors in the power basis 1, zeta, ..., zeta^(d-1)
of Q(zeta_n), reduced modulo the n-th cyclotomic polynomial.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, List, Sequence, Tuple, Union

import sympy as sp

from modforms.exceptions import ValidationError

Scalar = Union[int, Fraction]

_x = sp.Symbol('x')


def _reduction_table(modulus: Sequence[int], count: int) -> List[Tuple[int, ...]]:
    """Coordinates of x^0 .. x^(count-1) modulo a monic integer polynomial.

    ``modulus`` lists the coefficients constant term first, leading 1 last.
    """
    degree = len(modulus) - 1
    table = []
    current = [1] + [0] * (degree - 1)
    for _ in range(count):
        table.append(tuple(current))
        top = current[-1]
        shifted = [0] + current[:-1]
        current = [shifted[i] - top * modulus[i] for i in range(degree)]
    return table


class CyclotomicField:
    """The field Q(zeta_n) with zeta_n = e^(2 pi i / n)."""

    def __init__(self, conductor: int):
        if conductor < 1:
            raise ValidationError(f"Conductor must be positive, got {conductor}")
        self.conductor = conductor
        poly = sp.Poly(sp.cyclotomic_poly(conductor, _x), _x)
        self.modulus = tuple(int(c) for c in reversed(poly.all_coeffs()))
        self.degree = len(self.modulus) - 1
        self._powers = _reduction_table(self.modulus, max(conductor, 2 * self.degree - 1))
        self._conjugates = tuple(self._powers[(-i) % conductor] for i in range(self.degree))

    def __repr__(self):
        return f"CyclotomicField({self.conductor})"

    def __eq__(self, other):
        return isinstance(other, CyclotomicField) and other.conductor == self.conductor

    def __hash__(self):
        return hash(('CyclotomicField', self.conductor))

    def power_coordinates(self, k: int) -> Tuple[int, ...]:
        """Integer coordinates of x^k for 0 <= k < max(n, 2d - 1)."""
        return self._powers[k]

    def element(self, coords: Iterable[Scalar]) -> 'CyclotomicNumber':
        coords = tuple(Fraction(c) for c in coords)
        if len(coords) != self.degree:
            raise ValidationError(f"Expected {self.degree} coordinates, got {len(coords)}")
        return CyclotomicNumber(self, coords)

    def rational(self, value: Scalar) -> 'CyclotomicNumber':
        return CyclotomicNumber(self, (Fraction(value),) + (Fraction(0),) * (self.degree - 1))

    def zero(self) -> 'CyclotomicNumber':
        return self.rational(0)

    def one(self) -> 'CyclotomicNumber':
        return self.rational(1)

    def zeta(self, k: int = 1) -> 'CyclotomicNumber':
        """zeta_n^k."""
        return CyclotomicNumber(self, tuple(Fraction(c) for c in self._powers[k % self.conductor]))

    def root_of_unity(self, r: Scalar) -> 'CyclotomicNumber':
        """e(r) = e^(2 pi i r) for rational r whose denominator divides the conductor.

        Raises:
            ValidationError: If e(r) does not lie in this field.
        """
        r = Fraction(r)
        scaled = r * self.conductor
        if scaled.denominator != 1:
            raise ValidationError(f"e({r}) does not lie in Q(zeta_{self.conductor})")
        return self.zeta(int(scaled))

    def exponential_sum(self, counts) -> 'CyclotomicNumber':
        """Sum of weight * e(r) over a mapping {r: weight}."""
        coords = [Fraction(0)] * self.degree
        for r, weight in counts.items():
            if not weight:
                continue
            scaled = Fraction(r) * self.conductor
            if scaled.denominator != 1:
                raise ValidationError(f"e({r}) does not lie in Q(zeta_{self.conductor})")
            for i, c in enumerate(self._powers[int(scaled) % self.conductor]):
                if c:
                    coords[i] += weight * c
        return CyclotomicNumber(self, tuple(coords))

    def reduce(self, coords: Sequence) -> Tuple:
        """Fold coordinates of degree >= d back into the power basis."""
        out = list(coords[:self.degree]) + [0] * max(0, self.degree - len(coords))
        for k in range(self.degree, len(coords)):
            value = coords[k]
            if value:
                for i, c in enumerate(self._powers[k]):
                    if c:
                        out[i] += c * value
        return tuple(out)

    def conjugate_coordinates(self, coords: Sequence) -> Tuple:
        out = [0] * self.degree
        for i, value in enumerate(coords):
            if value:
                for j, c in enumerate(self._conjugates[i]):
                    if c:
                        out[j] += c * value
        return tuple(out)


@lru_cache(maxsize=None)
def cyclotomic_field(conductor: int) -> CyclotomicField:
    return CyclotomicField(conductor)


class CyclotomicNumber:
    """Immutable element of a :class:`CyclotomicField`."""

    __slots__ = ('field', 'coords')

    def __init__(self, field: CyclotomicField, coords: Tuple[Fraction, ...]):
        object.__setattr__(self, 'field', field)
        object.__setattr__(self, 'coords', coords)

    def __setattr__(self, name, value):
        raise AttributeError("CyclotomicNumber is immutable")

    def _coerce(self, other) -> 'CyclotomicNumber':
        if isinstance(other, CyclotomicNumber):
            if other.field != self.field:
                raise ValidationError(f"Cannot combine elements of {self.field} and {other.field}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.rational(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CyclotomicNumber(self.field, tuple(a + b for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.field, tuple(-a for a in self.coords))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber(self.field, tuple(a * other for a in self.coords))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d = self.field.degree
        product = [Fraction(0)] * (2 * d - 1)
        for i, a in enumerate(self.coords):
            if a:
                for j, b in enumerate(other.coords):
                    if b:
                        product[i + j] += a * b
        return CyclotomicNumber(self.field, self.field.reduce(product))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero in a cyclotomic field")
            return self * (Fraction(1) / Fraction(other))
        return NotImplemented

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValidationError("Only non-negative powers are supported")
        result = self.field.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.rational(other)
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        return self.field == other.field and self.coords == other.coords

    def __hash__(self):
        return hash((self.field.conductor, self.coords))

    def __bool__(self):
        return any(self.coords)

    def __repr__(self):
        terms = [f"{c}*z^{i}" if i else str(c) for i, c in enumerate(self.coords) if c]
        return f"<{' + '.join(terms) or '0'} in Q(zeta_{self.field.conductor})>"

    def conjugate(self) -> 'CyclotomicNumber':
        """Image under zeta -> zeta^-1 (complex conjugation)."""
        return CyclotomicNumber(self.field, self.field.conjugate_coordinates(self.coords))

    @property
    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def rational(self) -> Fraction:
        """The value as a rational number.

        Raises:
            ValidationError: If the element is irrational.
        """
        if not self.is_rational:
            raise ValidationError(f"{self!r} is not rational")
        return self.coords[0]

    def to_complex(self) -> complex:
        n = self.field.conductor
        return sum(float(c) * cmath.exp(2j * cmath.pi * i / n) for i, c in enumerate(self.coords) if c)
