"""
Modular Jacobian of four expansions and the J^2 identity.

The Jacobian of psi_1..psi_4 with weights k_1..k_4 is the determinant of
the 4x4 matrix with first row (k_i psi_i) and rows D_tau psi_i, D_z psi_i,
D_w psi_i, using the normalized derivatives of the fourier module. It has
weight k_1 + k_2 + k_3 + k_4 + 3.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from ..error_handlers import handle_service_errors, log_operation
from ..exceptions import ValidationError, WeightMismatchError
from ..series import FourierSeries, GradedPoly
from ..series.base import VARIABLES, canonical_key

logger = logging.getLogger(__name__)


def _determinant(matrix: List[List[FourierSeries]], weight: int) -> FourierSeries:
    """Cofactor expansion along the first row."""
    size = len(matrix)
    if size == 1:
        return matrix[0][0].with_weight(weight)
    trunc = min(entry.trunc for row in matrix for entry in row)
    total = FourierSeries.zero(weight, trunc)
    for column in range(size):
        entry = matrix[0][column]
        if not entry:
            continue
        minor = [row[:column] + row[column + 1:] for row in matrix[1:]]
        term = (entry * _determinant(minor, weight - entry.weight)).with_weight(weight)
        total = total - term if column % 2 else total + term
    return total


@handle_service_errors("jacobian_services")
def jacobian(forms: Sequence[FourierSeries], weights: Sequence[int]) -> FourierSeries:
    """Modular Jacobian of four expansions.

    Args:
        forms: psi_1..psi_4.
        weights: k_1..k_4, which must equal the weights of the forms.

    Returns:
        The determinant, of weight sum(k_i) + 3.

    Raises:
        ValidationError: Unless exactly four forms of one truncation are given.
        WeightMismatchError: If a form's weight differs from its k_i.
    """
    if len(forms) != 4 or len(weights) != 4:
        raise ValidationError(f"Jacobian needs four forms and four weights, got {len(forms)} and {len(weights)}")
    truncations = {form.trunc for form in forms}
    if len(truncations) != 1:
        raise ValidationError(f"Jacobian arguments have different truncations {sorted(truncations)}")
    for index, (form, k) in enumerate(zip(forms, weights)):
        if form.weight != k:
            raise WeightMismatchError(f"Argument {index + 1} has weight {form.weight}, expected {k}")

    matrix = [[form.scale(k) for form, k in zip(forms, weights)]]
    for var in VARIABLES:
        matrix.append([form.derive(var) for form in forms])
    weight = sum(weights)
    return _determinant(matrix, weight).with_weight(weight + 3)


def jacobian_valuation(series: FourierSeries) -> Tuple[Optional[int], Dict[Tuple[int, int, int], object]]:
    """Lowest total order a + c of a nonzero coefficient and the terms of that order."""
    valuation = series.valuation()
    if valuation is None:
        return None, {}
    part = series.homogeneous_part(valuation)
    return valuation, {key: part[key] for key in sorted(part, key=canonical_key)}


@dataclass(frozen=True)
class SquareCheckResult:
    """Outcome of comparing J^2 with a multiple of an evaluated polynomial."""

    passed: bool
    scalar: Optional[Fraction]
    witness: Optional[Tuple[int, int, int]]
    checked: int
    trunc: int

    @property
    def determined(self) -> bool:
        return self.scalar is not None


@handle_service_errors("jacobian_services")
def compare_up_to_scalar(lhs: FourierSeries, rhs: FourierSeries) -> SquareCheckResult:
    """Find the unique rational lam with lhs = lam * rhs coefficient-wise, if any.

    lam is fixed by the first triple (canonical order) where rhs is nonzero
    and then enforced on every triple of the common truncation window. A
    zero multiple of a nonzero rhs is rejected at that first triple. When
    both sides vanish identically lam is undetermined and the check passes
    with ``scalar=None``.
    """
    trunc = min(lhs.trunc, rhs.trunc)
    lhs, rhs = lhs.truncated(trunc), rhs.truncated(trunc)
    keys = sorted(set(lhs.keys()) | set(rhs.keys()), key=canonical_key)
    lam: Optional[Fraction] = None
    for key in keys:
        left, right = Fraction(lhs[key]), Fraction(rhs[key])
        if lam is None:
            if right == 0:
                return SquareCheckResult(False, None, key, len(keys), trunc)
            lam = left / right
            if lam == 0:
                return SquareCheckResult(False, lam, key, len(keys), trunc)
            continue
        if left != lam * right:
            return SquareCheckResult(False, lam, key, len(keys), trunc)
    return SquareCheckResult(True, lam, None, len(keys), trunc)


@handle_service_errors("jacobian_services")
@log_operation("jacobian_square_check")
def jacobian_square_check(J: FourierSeries, relation: GradedPoly, gens) -> SquareCheckResult:
    """Check J^2 = lam * P_J(f1, f2, g1, g2) for a single rational lam.

    Args:
        J: The Jacobian of the basic generators.
        relation: The weight-18 polynomial P_J.
        gens: Generator set used to evaluate ``relation``.
    """
    from .polynomial_services import poly_eval

    square = J * J
    evaluated = poly_eval(relation, gens)
    result = compare_up_to_scalar(square, evaluated)
    if result.passed and result.scalar is None:
        logger.info(f"J^2 and P_J both vanish for a + c <= {result.trunc}; scalar undetermined")
    elif not result.passed:
        logger.warning(f"J^2 identity fails at {result.witness}")
    return result
