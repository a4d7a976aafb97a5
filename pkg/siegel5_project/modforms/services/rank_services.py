"""
Exact rank counts of generator monomials on truncated Fourier expansions.

Each monomial in the 18 generators of the holomorphic ring is evaluated
to a Fourier expansion; the coefficient matrix (rows: monomials, columns:
exponent triples in canonical order) is reduced fraction-free over the
integers.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .hilbert_services import siegel_dim
from .polynomial_services import HOLOMORPHIC_GENERATORS, poly_eval
from ..error_handlers import handle_service_errors, log_operation
from ..exceptions import IdentityFailure, ValidationError
from ..series import FourierSeries, GradedPoly
from ..series.graded import GRADING, term_order_key
from ..series.base import canonical_key
from ..utils import linalg
from ..utils.monomials import monomials_of_weight as _weighted_monomials

logger = logging.getLogger(__name__)

MATCH = 'match'
TRUNCATION_ARTIFACT = 'truncation_artifact'
POLYNOMIAL_MATCH = 'polynomial_match'
IDENTITY_FAILURE = 'identity_failure'

#: Weights whose ranks are compared with the known dimensions.
CHECKED_WEIGHTS = (2, 4, 6, 8, 10, 11)


def generator_weights() -> Tuple[int, ...]:
    return tuple(weight for _, weight, _ in HOLOMORPHIC_GENERATORS)


def monomials_of_weight(weights: Sequence[int], k: int) -> List[Tuple[int, ...]]:
    """All exponent vectors over generators of the given weights with total weight k."""
    if k < 0:
        raise ValidationError(f"Weight must be non-negative, got {k}")
    return _weighted_monomials(tuple(weights), k)


@dataclass(frozen=True)
class CoefficientMatrix:
    """Rows indexed by monomials, columns by exponent triples in canonical order."""

    monomials: Tuple[Tuple[int, ...], ...]
    columns: Tuple[Tuple[int, int, int], ...]
    entries: Tuple[Tuple[object, ...], ...]

    @classmethod
    def from_series(cls, monomials, forms: Sequence[FourierSeries]) -> 'CoefficientMatrix':
        truncations = {form.trunc for form in forms}
        if len(truncations) > 1:
            raise ValidationError(f"Forms have different truncations {sorted(truncations)}")
        columns = sorted({key for form in forms for key in form.keys()}, key=canonical_key)
        entries = tuple(tuple(form[key] for key in columns) for form in forms)
        return cls(tuple(monomials), tuple(columns), entries)

    def rank(self) -> int:
        return linalg.rank(self.entries)


def span_rank(forms: Sequence[FourierSeries]) -> int:
    """Rank over Q of the coefficient vectors of ``forms``."""
    if not forms:
        return 0
    return CoefficientMatrix.from_series(range(len(forms)), forms).rank()


class MonomialEvaluator:
    """Evaluates generator monomials, reusing products of shared prefixes."""

    def __init__(self, gens, generators=HOLOMORPHIC_GENERATORS):
        self.gens = gens
        self.values: List[FourierSeries] = [poly_eval(poly, gens) for _, _, poly in generators]
        self._cache: Dict[Tuple[int, ...], FourierSeries] = {}

    def evaluate(self, exponents: Tuple[int, ...]) -> FourierSeries:
        if exponents in self._cache:
            return self._cache[exponents]
        nonzero = [i for i, e in enumerate(exponents) if e]
        if not nonzero:
            value = FourierSeries.one(self.gens.trunc)
        else:
            index = nonzero[-1]
            lower = tuple(e - (i == index) for i, e in enumerate(exponents))
            value = self.evaluate(lower) * self.values[index]
        self._cache[exponents] = value
        return value




def polynomial_rank(k: int, generators=HOLOMORPHIC_GENERATORS) -> int:
    """Rank of the weight-k generator monomials in the coordinates of C[F1, F2, G1, G2, X_J].

    Below weight 18 no monomial contains X_J^2, and evaluation at
    (f1, f2, g1, g2, J) is injective on these coordinates, so this is the
    exact dimension of the span, independent of any truncation.

    Raises:
        ValidationError: For weights of 18 and above.
    """
    if k >= 2 * GRADING[4]:
        raise ValidationError(f"Polynomial coordinates need the X_J^2 relation from weight {2 * GRADING[4]} on")
    polys = [poly for _, _, poly in generators]
    products: List[GradedPoly] = []
    for exponents in monomials_of_weight([weight for _, weight, _ in generators], k):
        product = GradedPoly.constant(1)
        for poly, e in zip(polys, exponents):
            if e:
                product = product * poly ** e
        products.append(product)
    columns = sorted({m for p in products for m in p.terms}, key=term_order_key)
    return linalg.rank([[p.coefficient(m) for m in columns] for p in products])


@dataclass(frozen=True)
class RankCheck:
    weight: int
    monomials: int
    rank: int
    target: int
    classification: str
    diagnostics: Dict[int, int] = field(default_factory=dict)
    columns: int = 0
    polynomial_rank: Optional[int] = None

    @property
    def status(self) -> str:
        return {MATCH: 'pass', POLYNOMIAL_MATCH: 'pass', TRUNCATION_ARTIFACT: 'skip'}.get(self.classification, 'fail')

    def raise_for_failure(self) -> 'RankCheck':
        """Raise :class:`IdentityFailure` with the diagnostics as witness when the check failed."""
        if self.status == 'fail':
            raise IdentityFailure(
                f"Weight {self.weight}: rank {self.rank} contradicts the target {self.target}",
                witness=self.diagnostics,
            )
        return self


def classify(target: int, ranks_by_trunc: Dict[int, int], polynomial: Optional[int] = None) -> str:
    """Classify a rank against its target given ranks at several truncations.

    Ranks that decrease as the truncation grows, or exceed the target, are
    an identity failure. Otherwise a shortfall is settled by the rank in
    polynomial coordinates when one is given, and is a truncation artifact
    when not.
    """
    ranks = [ranks_by_trunc[n] for n in sorted(ranks_by_trunc)]
    if ranks[-1] == target:
        return MATCH
    monotone = all(x <= y for x, y in zip(ranks, ranks[1:]))
    if not monotone or max(ranks) > target:
        return IDENTITY_FAILURE
    if polynomial is None:
        return TRUNCATION_ARTIFACT
    return POLYNOMIAL_MATCH if polynomial == target else IDENTITY_FAILURE


@handle_service_errors("rank_services")
@log_operation("rank_check")
def rank_check(gens, k: int, target: Optional[int] = None, evaluator: Optional[MonomialEvaluator] = None) -> RankCheck:
    """Span rank of the weight-k monomials, compared with ``target``.

    The target defaults to the dimension predicted by the Hilbert series.

    On a shortfall the rank is recomputed at truncations trunc - 1 and
    trunc - 2, and below weight 18 also in polynomial coordinates; the
    result is classified with :func:`classify`.
    """
    evaluator = evaluator or MonomialEvaluator(gens)
    monomials = monomials_of_weight(generator_weights(), k)
    forms = [evaluator.evaluate(m) for m in monomials]
    matrix = CoefficientMatrix.from_series(monomials, forms) if forms else None
    rank = matrix.rank() if matrix else 0
    columns = len(matrix.columns) if matrix else 0
    if target is None:
        target = siegel_dim(k)
    diagnostics = {gens.trunc: rank}
    polynomial = None
    if rank != target:
        for trunc in (gens.trunc - 1, gens.trunc - 2):
            if trunc >= 0:
                diagnostics[trunc] = span_rank([form.truncated(trunc) for form in forms])
        if k < 2 * GRADING[4]:
            polynomial = polynomial_rank(k)
        logger.warning(
            f"Weight {k}: rank {rank} differs from target {target}; "
            f"diagnostics {diagnostics}, polynomial rank {polynomial}"
        )
    classification = classify(target, diagnostics, polynomial)
    return RankCheck(
        k, len(monomials), rank, target, classification, dict(sorted(diagnostics.items())), columns, polynomial,
    )
