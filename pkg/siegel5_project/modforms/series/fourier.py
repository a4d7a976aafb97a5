"""
Truncated Fourier expansions of degree-2 Siegel modular forms.

A :class:`FourierSeries` stores sum c(a, b, c) q^a r^b s^c over the
triples with a + c <= trunc, with exact rational coefficients. Storage is
sparse and normalized: zero coefficients are never kept.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from types import MappingProxyType
from typing import Dict, Mapping, Optional

from .base import Exact, Exponent, exact, in_cone, order
from .mixins import CalculusMixin, SupportMixin
from ..exceptions import (
    PrecisionError, SupportConeError, ValidationError, WeightMismatchError,
)


class FourierSeries(CalculusMixin, SupportMixin):
    """Immutable truncated expansion with a modular weight."""

    __slots__ = ('weight', 'trunc', '_coeffs')

    def __init__(
        self,
        weight: int,
        trunc: int,
        coeffs: Optional[Mapping[Exponent, object]] = None,
        *,
        check_cone: bool = True,
    ):
        if trunc < 0:
            raise ValidationError(f"Truncation must be non-negative, got {trunc}")
        normalized: Dict[Exponent, Exact] = {}
        for key, value in (coeffs or {}).items():
            a, b, c = (int(x) for x in key)
            if a < 0 or c < 0:
                raise ValidationError(f"Exponents of q and s must be non-negative, got {(a, b, c)}")
            if a + c > trunc:
                raise PrecisionError(f"Coefficient {(a, b, c)} lies beyond truncation a + c <= {trunc}")
            value = exact(value)
            if value == 0:
                continue
            if check_cone and b * b > 4 * a * c:
                raise SupportConeError(f"Coefficient {(a, b, c)} violates b^2 <= 4ac")
            normalized[(a, b, c)] = value
        object.__setattr__(self, 'weight', weight)
        object.__setattr__(self, 'trunc', trunc)
        object.__setattr__(self, '_coeffs', MappingProxyType(normalized))

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    # ------------------------------------------------------------------
    # construction helpers
    # ------------------------------------------------------------------
    @classmethod
    def zero(cls, weight: int, trunc: int) -> 'FourierSeries':
        return cls(weight, trunc)

    @classmethod
    def one(cls, trunc: int) -> 'FourierSeries':
        """The weight-0 constant 1."""
        return cls(0, trunc, {(0, 0, 0): 1})

    def _with_coeffs(self, coeffs, weight=None, trunc=None) -> 'FourierSeries':
        return FourierSeries(
            self.weight if weight is None else weight,
            self.trunc if trunc is None else trunc,
            coeffs,
            check_cone=False,
        )

    def truncated(self, trunc: int) -> 'FourierSeries':
        """Drop every coefficient with a + c > trunc."""
        if trunc > self.trunc:
            raise PrecisionError(f"Cannot raise truncation from {self.trunc} to {trunc}")
        return self._with_coeffs(
            {key: value for key, value in self.items() if order(key) <= trunc},
            trunc=trunc,
        )

    def with_weight(self, weight: int) -> 'FourierSeries':
        return self._with_coeffs(self._coeffs, weight=weight)

    # ------------------------------------------------------------------
    # mapping protocol
    # ------------------------------------------------------------------
    def keys(self):
        return self._coeffs.keys()

    def items(self):
        return self._coeffs.items()

    def __getitem__(self, key: Exponent) -> Exact:
        return self._coeffs.get(tuple(key), 0)

    def __len__(self) -> int:
        return len(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def coefficient(self, a: int, b: int, c: int) -> Fraction:
        """Return the coefficient of q^a r^b s^c.

        Raises:
            PrecisionError: If a + c exceeds the truncation; the value is
                unknown there, not zero.
            ValidationError: If a or c is negative.
        """
        if a < 0 or c < 0:
            raise ValidationError(f"Exponents of q and s must be non-negative, got {(a, b, c)}")
        if a + c > self.trunc:
            raise PrecisionError(f"Coefficient {(a, b, c)} is beyond truncation a + c <= {self.trunc}")
        return Fraction(self._coeffs.get((a, b, c), 0))

    # ------------------------------------------------------------------
    # ring operations
    # ------------------------------------------------------------------
    def __add__(self, other: 'FourierSeries') -> 'FourierSeries':
        if not isinstance(other, FourierSeries):
            return NotImplemented
        if self.weight != other.weight:
            raise WeightMismatchError(f"Cannot add series of weights {self.weight} and {other.weight}")
        trunc = min(self.trunc, other.trunc)
        total: Dict[Exponent, Exact] = defaultdict(int)
        for source in (self, other):
            for key, value in source.items():
                if order(key) <= trunc:
                    total[key] += value
        return self._with_coeffs(total, trunc=trunc)

    def __neg__(self) -> 'FourierSeries':
        return self._with_coeffs({key: -value for key, value in self.items()})

    def __sub__(self, other: 'FourierSeries') -> 'FourierSeries':
        if not isinstance(other, FourierSeries):
            return NotImplemented
        return self + (-other)

    def scale(self, scalar) -> 'FourierSeries':
        scalar = exact(scalar)
        return self._with_coeffs({key: value * scalar for key, value in self.items()})

    def __mul__(self, other) -> 'FourierSeries':
        if isinstance(other, FourierSeries):
            return series_mul(self, other)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __rmul__(self, other) -> 'FourierSeries':
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __pow__(self, exponent: int) -> 'FourierSeries':
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = FourierSeries.one(self.trunc)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    # ------------------------------------------------------------------
    # comparison and display
    # ------------------------------------------------------------------
    def __eq__(self, other) -> bool:
        if not isinstance(other, FourierSeries):
            return NotImplemented
        return (
            self.weight == other.weight
            and self.trunc == other.trunc
            and dict(self._coeffs) == dict(other._coeffs)
        )

    def __hash__(self) -> int:
        return hash((self.weight, self.trunc, frozenset(self._coeffs.items())))

    def agrees_with(self, other: 'FourierSeries') -> bool:
        """Coefficient-wise equality on the common truncation, ignoring weights."""
        trunc = min(self.trunc, other.trunc)
        return self.truncated(trunc)._coeffs == other.truncated(trunc)._coeffs

    def first_difference(self, other: 'FourierSeries') -> Optional[Exponent]:
        """First triple (canonical order) where the two expansions disagree."""
        trunc = min(self.trunc, other.trunc)
        difference = self.truncated(trunc).with_weight(0) - other.truncated(trunc).with_weight(0)
        support = difference.support()
        return support[0] if support else None

    def __repr__(self) -> str:
        return f"FourierSeries(weight={self.weight}, trunc={self.trunc}, terms={len(self)})"


def series_add(x: FourierSeries, y: FourierSeries) -> FourierSeries:
    """Coefficient-wise sum on the common truncation.

    Raises:
        WeightMismatchError: If the weights differ.
    """
    return x + y


def series_mul(x: FourierSeries, y: FourierSeries) -> FourierSeries:
    """Convolution on exponent triples; weights add, truncations take the minimum.

    Every splitting (a1 + a2, c1 + c2) of a kept triple has a_i <= a and
    c_i <= c, so all factors it needs lie inside both truncations.
    """
    trunc = min(x.trunc, y.trunc)
    left = sorted(((order(k), k, v) for k, v in x.items() if order(k) <= trunc))
    right = sorted(((order(k), k, v) for k, v in y.items() if order(k) <= trunc))
    product: Dict[Exponent, Exact] = defaultdict(int)
    for n1, (a1, b1, c1), v1 in left:
        remaining = trunc - n1
        for n2, (a2, b2, c2), v2 in right:
            if n2 > remaining:
                break
            product[(a1 + a2, b1 + b2, c1 + c2)] += v1 * v2
    return assert_cone(FourierSeries(x.weight + y.weight, trunc, product, check_cone=False))


def assert_cone(series: FourierSeries) -> FourierSeries:
    """Return ``series`` after checking every support triple satisfies b^2 <= 4ac.

    Raises:
        SupportConeError: Naming the first violating triple.
    """
    for key in series.support():
        if not in_cone(key):
            raise SupportConeError(f"Coefficient {key} violates b^2 <= 4ac")
    return series
