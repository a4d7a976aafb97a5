"""
Weighted polynomials in the abstract generators F1, F2, G1, G2 and X_J.

The grading weights are (1, 1, 2, 2, 9). Terms are kept in a sparse map
from exponent vectors (e1, e2, e3, e4, eJ) to exact rationals; the
canonical term order is lexicographic on (eJ, e1, e2, e3, e4).
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from types import MappingProxyType
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .base import Exact, exact
from ..exceptions import ValidationError, WeightMismatchError

Monomial = Tuple[int, int, int, int, int]

VARIABLE_NAMES = ('F1', 'F2', 'G1', 'G2', 'XJ')
GRADING = (1, 1, 2, 2, 9)
NVARS = len(VARIABLE_NAMES)


def monomial_weight(exponents: Sequence[int]) -> int:
    return sum(e * w for e, w in zip(exponents, GRADING))


def term_order_key(exponents: Monomial) -> Tuple[int, ...]:
    """Lexicographic key on (eJ, e1, e2, e3, e4)."""
    return (exponents[4],) + tuple(exponents[:4])


def _mono_mul(x: Monomial, y: Monomial) -> Monomial:
    return tuple(a + b for a, b in zip(x, y))


def _mono_divides(d: Monomial, m: Monomial) -> bool:
    return all(a <= b for a, b in zip(d, m))


class GradedPoly:
    """Immutable polynomial in F1, F2, G1, G2, X_J with exact coefficients."""

    __slots__ = ('_terms',)

    def __init__(self, terms: Optional[Mapping[Sequence[int], object]] = None):
        normalized: Dict[Monomial, Exact] = {}
        for exponents, value in (terms or {}).items():
            exponents = tuple(int(e) for e in exponents)
            if len(exponents) == NVARS - 1:
                exponents = exponents + (0,)
            if len(exponents) != NVARS or min(exponents) < 0:
                raise ValidationError(f"Invalid exponent vector {exponents}")
            value = exact(value)
            if value:
                normalized[exponents] = value
        object.__setattr__(self, '_terms', MappingProxyType(normalized))

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    # ------------------------------------------------------------------
    # construction
    # ------------------------------------------------------------------
    @classmethod
    def constant(cls, value) -> 'GradedPoly':
        return cls({(0,) * NVARS: value})

    @classmethod
    def variable(cls, name: str) -> 'GradedPoly':
        try:
            index = VARIABLE_NAMES.index(name)
        except ValueError:
            raise ValidationError(f"Unknown variable {name!r}")
        exponents = [0] * NVARS
        exponents[index] = 1
        return cls({tuple(exponents): 1})

    @classmethod
    def generators(cls) -> Tuple['GradedPoly', ...]:
        """The five variables F1, F2, G1, G2, XJ."""
        return tuple(cls.variable(name) for name in VARIABLE_NAMES)

    @classmethod
    def monomial(cls, exponents: Sequence[int], coefficient=1) -> 'GradedPoly':
        return cls({tuple(exponents): coefficient})

    # ------------------------------------------------------------------
    # inspection
    # ------------------------------------------------------------------
    @property
    def terms(self) -> Mapping[Monomial, Exact]:
        return self._terms

    def items(self) -> List[Tuple[Monomial, Exact]]:
        """Terms in canonical order, leading term first."""
        return sorted(self._terms.items(), key=lambda item: term_order_key(item[0]), reverse=True)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coefficient(self, exponents: Sequence[int]) -> Exact:
        exponents = tuple(exponents)
        if len(exponents) == NVARS - 1:
            exponents = exponents + (0,)
        return self._terms.get(exponents, 0)

    def weights(self) -> set:
        return {monomial_weight(m) for m in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.weights()) <= 1

    def weight(self) -> int:
        """Grading weight of a homogeneous polynomial (0 for the zero polynomial).

        Raises:
            WeightMismatchError: If the polynomial mixes weights.
        """
        weights = self.weights()
        if len(weights) > 1:
            raise WeightMismatchError(f"Polynomial is not homogeneous: weights {sorted(weights)}")
        return weights.pop() if weights else 0

    def leading_term(self) -> Tuple[Monomial, Exact]:
        if not self._terms:
            raise ValidationError("The zero polynomial has no leading term")
        return self.items()[0]

    def xj_degree(self) -> int:
        return max((m[4] for m in self._terms), default=0)

    # ------------------------------------------------------------------
    # arithmetic
    # ------------------------------------------------------------------
    @staticmethod
    def _coerce(other) -> Optional['GradedPoly']:
        if isinstance(other, GradedPoly):
            return other
        try:
            return GradedPoly.constant(exact(other))
        except TypeError:
            return None

    def __add__(self, other) -> 'GradedPoly':
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        total: Dict[Monomial, Exact] = defaultdict(int, self._terms)
        for m, v in other._terms.items():
            total[m] += v
        return GradedPoly(total)

    __radd__ = __add__

    def __neg__(self) -> 'GradedPoly':
        return GradedPoly({m: -v for m, v in self._terms.items()})

    def __sub__(self, other) -> 'GradedPoly':
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> 'GradedPoly':
        return (-self) + other

    def __mul__(self, other) -> 'GradedPoly':
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        product: Dict[Monomial, Exact] = defaultdict(int)
        for m1, v1 in self._terms.items():
            for m2, v2 in other._terms.items():
                product[_mono_mul(m1, m2)] += v1 * v2
        return GradedPoly(product)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> 'GradedPoly':
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = GradedPoly.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return dict(self._terms) == dict(other._terms)

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # ------------------------------------------------------------------
    # substitutions
    # ------------------------------------------------------------------
    def substitute(self, images: Sequence['GradedPoly']) -> 'GradedPoly':
        """Ring homomorphism sending the i-th variable to ``images[i]``."""
        if len(images) != NVARS:
            raise ValidationError(f"Expected {NVARS} images, got {len(images)}")
        powers: List[List[GradedPoly]] = [[GradedPoly.constant(1)] for _ in range(NVARS)]

        def power(index: int, e: int) -> GradedPoly:
            cache = powers[index]
            while len(cache) <= e:
                cache.append(cache[-1] * images[index])
            return cache[e]

        result = GradedPoly()
        for m, v in self._terms.items():
            term = GradedPoly.constant(v)
            for index, e in enumerate(m):
                if e:
                    term = term * power(index, e)
            result = result + term
        return result

    def apply_linear(self, matrix: Sequence[Sequence[int]], j_sign=1) -> 'GradedPoly':
        """Substitute a linear change of F1, F2, G1, G2 and X_J -> j_sign * X_J.

        Row i of ``matrix`` lists the image of the i-th variable in the
        coordinates (F1, F2, G1, G2). Rows must not mix weight-1 and
        weight-2 variables.
        """
        variables = GradedPoly.generators()
        images = []
        for i, row in enumerate(matrix):
            image = GradedPoly()
            for j, entry in enumerate(row):
                if entry:
                    if GRADING[i] != GRADING[j]:
                        raise ValidationError("Linear action must preserve the weight decomposition")
                    image = image + variables[j] * entry
            images.append(image)
        images.append(variables[4] * j_sign)
        return self.substitute(images)

    def reduce_xj(self, lam, relation: 'GradedPoly') -> 'GradedPoly':
        """Rewrite every X_J^2 as ``lam * relation`` until eJ <= 1 in each term."""
        lam = exact(lam)
        result = GradedPoly()
        for m, v in self._terms.items():
            pairs, rest = divmod(m[4], 2)
            base = GradedPoly.monomial(m[:4] + (rest,), v)
            for _ in range(pairs):
                base = base * relation * lam
            result = result + base
        return result

    def divide(self, divisor: 'GradedPoly') -> Tuple['GradedPoly', 'GradedPoly']:
        """Division with remainder by a single divisor in the canonical term order.

        Returns:
            (quotient, remainder) with ``self = quotient * divisor + remainder``;
            the remainder is zero exactly when ``divisor`` divides ``self``.
        """
        if not divisor:
            raise ValidationError("Division by the zero polynomial")
        lead_m, lead_v = divisor.leading_term()
        quotient: Dict[Monomial, Exact] = defaultdict(int)
        remainder: Dict[Monomial, Exact] = defaultdict(int)
        current = self
        while current:
            m, v = current.leading_term()
            if _mono_divides(lead_m, m):
                factor_m = tuple(a - b for a, b in zip(m, lead_m))
                factor_v = exact(Fraction(v) / Fraction(lead_v))
                quotient[factor_m] += factor_v
                current = current - divisor * GradedPoly.monomial(factor_m, factor_v)
            else:
                remainder[m] += v
                current = current - GradedPoly.monomial(m, v)
        return GradedPoly(quotient), GradedPoly(remainder)

    # ------------------------------------------------------------------
    # display
    # ------------------------------------------------------------------
    def __str__(self) -> str:
        if not self._terms:
            return '0'
        pieces = []
        for m, v in self.items():
            factors = [
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(VARIABLE_NAMES, m) if e
            ]
            magnitude = abs(v)
            body = '*'.join(factors)
            if not body:
                text = str(magnitude)
            elif magnitude == 1:
                text = body
            else:
                text = f"{magnitude}*{body}"
            sign = '-' if v < 0 else '+'
            pieces.append((sign, text))
        first_sign, first_text = pieces[0]
        out = ('-' if first_sign == '-' else '') + first_text
        for sign, text in pieces[1:]:
            out += f" {sign} {text}"
        return out

    def __repr__(self) -> str:
        return f"GradedPoly({self})"
