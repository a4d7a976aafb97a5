"""
Invariant theory of cyclic actions on C[F1, F2, G1, G2] and C[F1, F2, G1, G2, X_J].

Graded dimensions are computed two ways: by Molien's formula, averaging
1 / (det(1 - t g|weight 1) det(1 - t^2 g|weight 2)) over the group with
sympy roots of unity, and by the rank of Reynolds images of monomials.
Minimal generator degrees come from exact linear algebra on monomial
coordinates.
"""

from __future__ import annotations

import logging
from typing import Dict, List, Sequence, Tuple, Union

import sympy as sp

from .polynomial_services import reynolds
from ..error_handlers import handle_service_errors, log_operation
from ..exceptions import ToolkitError, ValidationError
from ..series import GradedPoly, GroupAction, RationalFunction
from ..series.graded import GRADING
from ..series.rational_function import poly_from_expr, t
from ..utils.linalg import SparseBasis
from ..utils.monomials import count_free_monomials, monomials_of_weight

logger = logging.getLogger(__name__)

Character = Union[str, int]

#: X_J is free up to this weight; X_J^2 (weight 18) would need the P_J relation.
FREE_XJ_LIMIT = 18


def character_index(action: GroupAction, character: Character) -> int:
    """Resolve ``'trivial'``, ``'det_J'`` or an integer m to m modulo the group order.

    ``det_J`` is the character by which the action multiplies X_J.
    """
    n = action.order
    if character == 'trivial':
        return 0
    if character == 'det_J':
        return 0 if action.j_sign == 1 else n // 2
    try:
        return int(character) % n
    except (TypeError, ValueError):
        raise ValidationError(f"Unknown character {character!r}; expected trivial, det_J or an integer")


def is_real_character(action: GroupAction, m: int) -> bool:
    return (2 * m) % action.order == 0


def _element_series(action: GroupAction, power: int, upto: int) -> List[int]:
    weight_one, weight_two = action.blocks(power)
    denominator = (
        (sp.eye(2) - t * sp.Matrix(weight_one.tolist())).det()
        * (sp.eye(2) - t**2 * sp.Matrix(weight_two.tolist())).det()
    )
    return RationalFunction([1], poly_from_expr(denominator)).expand(upto)


@handle_service_errors("invariant_services")
def molien_series(action: GroupAction, character: Character = 'trivial', upto: int = 15) -> List[int]:
    """Dimensions of the chi-isotypic part of C[F1, F2, G1, G2] in weights 0..upto.

    Raises:
        ValidationError: For a negative bound or an unknown character.
    """
    if upto < 0:
        raise ValidationError(f"Bound must be non-negative, got {upto}")
    m = character_index(action, character)
    n = action.order
    expansions = [_element_series(action, j, upto) for j in range(n)]
    dims = []
    for d in range(upto + 1):
        total = sum(
            sp.exp(-2 * sp.pi * sp.I * sp.Rational(j * m, n)) * expansions[j][d]
            for j in range(n)
        ) / n
        value = sp.nsimplify(sp.simplify(sp.expand_complex(total)))
        if not value.is_Integer:
            raise ToolkitError(f"Molien average in weight {d} is not an integer: {value}")
        dims.append(int(value))
    return dims


def _coordinates(poly: GradedPoly) -> Dict[Tuple[int, ...], object]:
    return dict(poly.terms)


def reynolds_dimensions(action: GroupAction, character: Character = 'trivial', upto: int = 15) -> List[int]:
    """Same dimensions as :func:`molien_series`, by ranks of Reynolds images (real characters only)."""
    m = character_index(action, character)
    if not is_real_character(action, m):
        raise ValidationError(f"Reynolds ranks need a real character; {character!r} is not")
    dims = []
    for d in range(upto + 1):
        basis = SparseBasis()
        for exponents in monomials_of_weight(GRADING[:4], d):
            image = reynolds(GradedPoly.monomial(exponents), action, m)
            basis.add(_coordinates(image))
        dims.append(len(basis))
    return dims


def character_sum_rule(action: GroupAction, upto: int = 15) -> List[Tuple[int, int]]:
    """(sum over all characters of the Molien dimensions, free monomial count) per weight."""
    per_character = [molien_series(action, m, upto) for m in range(action.order)]
    return [
        (sum(series[d] for series in per_character), count_free_monomials(d))
        for d in range(upto + 1)
    ]


def meromorphic_dimensions(action: GroupAction, upto: int = 15) -> List[int]:
    """Graded dimensions of the invariants of C[F1, F2, G1, G2] + X_J C[F1, F2, G1, G2].

    Equals trivial(d) + det_J(d - 9).
    """
    trivial = molien_series(action, 'trivial', upto)
    twisted = molien_series(action, 'det_J', upto)
    return [trivial[d] + (twisted[d - GRADING[4]] if d >= GRADING[4] else 0) for d in range(upto + 1)]


def _invariant_basis(action: GroupAction, d: int, reverse: bool) -> List[GradedPoly]:
    monomials = monomials_of_weight(GRADING, d)
    if reverse:
        monomials = monomials[::-1]
    basis = SparseBasis()
    chosen = []
    for exponents in monomials:
        image = reynolds(GradedPoly.monomial(exponents), action, 0)
        if image and basis.add(_coordinates(image)):
            chosen.append(image)
    return chosen


@handle_service_errors("invariant_services")
@log_operation("minimal_generator_degrees")
def minimal_generator_degrees(action: GroupAction, upto: int = 15, reverse: bool = False) -> List[int]:
    """Weights of a minimal generating set of the invariants, with multiplicity.

    Works in C[F1, F2, G1, G2, X_J] with X_J free, so ``upto`` must stay
    below 18.

    Raises:
        ValidationError: If ``upto`` reaches the weight of X_J^2.
    """
    if upto >= FREE_XJ_LIMIT:
        raise ValidationError(f"Weights >= {FREE_XJ_LIMIT} need the X_J^2 relation; got upto={upto}")
    bases: Dict[int, List[GradedPoly]] = {0: [GradedPoly.constant(1)]}
    generators: List[Tuple[int, GradedPoly]] = []
    degrees: List[int] = []
    for d in range(1, upto + 1):
        bases[d] = _invariant_basis(action, d, reverse)
        span = SparseBasis()
        for weight, generator in generators:
            for element in bases[d - weight]:
                span.add(_coordinates(generator * element))
        for element in bases[d]:
            if span.add(_coordinates(element)):
                generators.append((d, element))
                degrees.append(d)
        logger.debug(f"{action.name}: weight {d}, {len(bases[d])} invariants, {degrees.count(d)} new generators")
    return degrees


def generators_span_check(
    action: GroupAction,
    named: Sequence[Tuple[str, int, GradedPoly]],
    upto: int,
) -> Dict[int, Tuple[int, int]]:
    """Per weight, (rank of products of the named generators, dimension of invariants)."""
    result = {}
    products: Dict[int, List[GradedPoly]] = {0: [GradedPoly.constant(1)]}
    for d in range(1, upto + 1):
        span = SparseBasis()
        products[d] = []
        for _, weight, poly in named:
            if weight <= d:
                for lower in products[d - weight]:
                    candidate = poly * lower
                    if span.add(_coordinates(candidate)):
                        products[d].append(candidate)
        result[d] = (len(span), len(_invariant_basis(action, d, False)))
    return result
