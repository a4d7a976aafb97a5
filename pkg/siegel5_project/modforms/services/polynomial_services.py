"""
Weighted polynomial services: evaluation into Fourier expansions, the
epsilon_2 action, Reynolds averaging, exact division and the named
generator tables.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Sequence, Tuple

from ..error_handlers import handle_service_errors
from ..exceptions import DataIntegrityError, WeightMismatchError
from ..series import EPS2, FourierSeries, GradedPoly, GroupAction
from ..series.graded import NVARS, Monomial

logger = logging.getLogger(__name__)

F1, F2, G1, G2, XJ = GradedPoly.generators()


def parse_jacobian_polynomial(path: Path) -> GradedPoly:
    """Read the ``c e1 e2 e3 e4`` lines of the embedded P_J table.

    Raises:
        DataIntegrityError: For a missing file, a malformed line or a
            repeated monomial.
    """
    terms: Dict[Tuple[int, ...], int] = {}
    try:
        handle = open(path, encoding='utf-8')
    except OSError as e:
        raise DataIntegrityError(f"Cannot read polynomial table {path}: {e}")
    with handle:
        for lineno, line in enumerate(handle, start=1):
            line = line.strip()
            if not line or line.startswith('#'):
                continue
            parts = line.split()
            if len(parts) != 5:
                raise DataIntegrityError(f"{path.name}:{lineno}: expected 5 columns, got {len(parts)}")
            try:
                c, *exponents = (int(p) for p in parts)
            except ValueError:
                raise DataIntegrityError(f"{path.name}:{lineno}: non-integer entry in {line!r}")
            key = tuple(exponents) + (0,)
            if key in terms:
                raise DataIntegrityError(f"{path.name}:{lineno}: repeated monomial {tuple(exponents)}")
            terms[key] = c
    logger.debug(f"Parsed {len(terms)} terms from {path}")
    return GradedPoly(terms)


@handle_service_errors("polynomial_services")
def poly_eval(poly: GradedPoly, gens) -> FourierSeries:
    """Substitute F1 -> f1, F2 -> f2, G1 -> g1, G2 -> g2, X_J -> J.

    Raises:
        WeightMismatchError: If ``poly`` is not homogeneous.
    """
    if not poly.is_homogeneous():
        raise WeightMismatchError(f"Cannot evaluate a non-homogeneous polynomial (weights {sorted(poly.weights())})")
    weight = poly.weight()
    trunc = gens.trunc
    if not poly:
        return FourierSeries.zero(weight, trunc)
    values = list(gens.basic()) + [gens.J]

    cache: Dict[Monomial, FourierSeries] = {(0,) * NVARS: FourierSeries.one(trunc)}

    def monomial_value(m: Monomial) -> FourierSeries:
        if m in cache:
            return cache[m]
        index = max(i for i, e in enumerate(m) if e)
        lower = tuple(e - (i == index) for i, e in enumerate(m))
        if values[index] is None:
            raise WeightMismatchError("X_J cannot be evaluated before J is derived")
        cache[m] = monomial_value(lower) * values[index]
        return cache[m]

    total = FourierSeries.zero(weight, trunc)
    for m, coefficient in poly.items():
        total = total + monomial_value(m).scale(coefficient)
    return total


def apply_eps2(poly: GradedPoly) -> GradedPoly:
    """F1 -> F2, F2 -> -F1, G1 -> G2, G2 -> G1, X_J -> -X_J."""
    return EPS2.apply(poly)


def reynolds(poly: GradedPoly, action: GroupAction = EPS2, character: int = 0) -> GradedPoly:
    """Average over the cyclic group, twisted by a real character.

    ``character`` is m with chi_m(g^j) = e(jm/n); only real characters
    (2m divisible by n) keep the result rational.
    """
    n = action.order
    if (2 * character) % n:
        raise WeightMismatchError(f"Character {character} of a group of order {n} is not real")
    total = GradedPoly()
    for j, (matrix, sign) in enumerate(action.elements()):
        chi = 1 if (j * character * 2 // n) % 2 == 0 else -1
        total = total + poly.apply_linear(matrix, sign) * chi
    return total * Fraction(1, n)


@dataclass(frozen=True)
class DivisionResult:
    quotient: GradedPoly
    remainder: GradedPoly

    @property
    def exact(self) -> bool:
        return not self.remainder


def poly_divide(poly: GradedPoly, divisor: GradedPoly) -> DivisionResult:
    """Divide and report whether the division is exact."""
    quotient, remainder = poly.divide(divisor)
    return DivisionResult(quotient, remainder)


def check_invariance(polys: Sequence[GradedPoly], action: GroupAction = EPS2) -> List[bool]:
    """For each polynomial, whether the action's generator fixes it."""
    return [action.apply(p) == p for p in polys]


#: The 18 generators of the holomorphic ring, as (label, weight, polynomial).
HOLOMORPHIC_GENERATORS: Tuple[Tuple[str, int, GradedPoly], ...] = (
    ('e2', 2, F1**2 + F2**2 - 4 * G1 - 4 * G2),
    ('a4', 4, F1**2 * G1 + F2**2 * G2),
    ('b4', 4, F1 * F2 * G1 - F1 * F2 * G2),
    ('c4', 4, F1**3 * F2 - F1 * F2**3),
    ('d4', 4, F1**2 * F2**2),
    ('e4', 4, G1 * G2),
    ('a6', 6, F1**2 * F2**2 * G1 + F1**2 * F2**2 * G2),
    ('b6', 6, F1**3 * F2 * G1 - F1 * F2**3 * G2),
    ('c6', 6, F1**2 * G1**2 + F2**2 * G2**2),
    ('d6', 6, F1**2 * G1 * G2 + F2**2 * G1 * G2),
    ('a10', 10, F1**8 * F2**2 + 3 * F1**6 * F2**4 + 3 * F1**4 * F2**6 + F1**2 * F2**8),
    ('a11', 11, F1 * F2 * XJ),
    ('b11', 11, (F1**2 - F2**2) * XJ),
    ('c11', 11, (G1 - G2) * XJ),
    ('a13', 13, (F1**3 * F2 + F1 * F2**3) * XJ),
    ('b13', 13, (F1**4 - F2**4) * XJ),
    ('c13', 13, (F1**2 * G1 - F1**2 * G2 + F2**2 * G1 - F2**2 * G2) * XJ),
    ('a15', 15, (F1**6 - 3 * F1**4 * F2**2 + 3 * F1**2 * F2**4 - F2**6) * XJ),
)

#: Minimal generators of the epsilon_2-invariants of C[F1, F2, G1, G2, X_J].
INVARIANT_GENERATORS: Tuple[Tuple[str, int, GradedPoly], ...] = (
    ('s2', 2, F1**2 + F2**2),
    ('e2', 2, F1**2 + F2**2 - 4 * (G1 + G2)),
    ('a4', 4, F1**2 * G1 + F2**2 * G2),
    ('b4', 4, F1 * F2 * (G1 - G2)),
    ('c4', 4, F1 * F2 * (F1 - F2) * (F1 + F2)),
    ('d4', 4, F1**2 * F2**2),
    ('e4', 4, G1 * G2),
    ('a11', 11, XJ * F1 * F2),
    ('b11', 11, XJ * (F1**2 - F2**2)),
    ('c11', 11, XJ * (G1 - G2)),
)

#: Weight-two generators of the epsilon_4-invariants, plus J.
KERNEL_EPS4_GENERATORS: Tuple[Tuple[str, int, GradedPoly], ...] = (
    ('f1^2', 2, F1**2),
    ('f2^2', 2, F2**2),
    ('f1 f2', 2, F1 * F2),
    ('g1', 2, G1),
    ('g2', 2, G2),
    ('J', 9, XJ),
)

#: The weight-4 Maass forms in the monomial coordinates.
MAASS_POLYNOMIALS: Tuple[Tuple[str, GradedPoly], ...] = (
    ('phi1', (F1**2 + F2**2 - 4 * G1 - 4 * G2)**2 + F1**2 * F2**2),
    ('phi2', F1**2 * G1 + F2**2 * G2 - 2 * G1 * G2),
    ('phi3', F1 * F2 * (F1**2 - 2 * F1 * F2 - F2**2 + 2 * G1 - 2 * G2)),
    ('phi4', 2 * G1 * G2 + F1 * F2 * (G1 - G2)),
)
