"""
Hilbert-Poincare series of the holomorphic ring and classical level-5 dimensions.

The series is (1 - t)^2 (1 + t^7) P(t) / ((1 - t^2)^2 (1 - t^3) (1 - t^4)^2 (1 - t^5))
with P the palindromic polynomial of degree 14 below.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List

from django.conf import settings

from ..error_handlers import handle_service_errors
from ..exceptions import ValidationError
from ..series import RationalFunction, is_palindromic
from ..series.rational_function import binomial_factor

logger = logging.getLogger(__name__)

#: P(t), constant term first.
PALINDROMIC_FACTOR = (1, 2, 2, 1, 3, 5, 8, 8, 8, 5, 3, 1, 2, 2, 1)

#: Known dimensions of M_k(Gamma_0^(2)(5)) for k = 1..19.
KNOWN_DIMENSIONS: Dict[int, int] = {
    1: 0, 2: 1, 3: 0, 4: 6, 5: 0, 6: 10, 7: 0, 8: 22, 9: 0, 10: 34,
    11: 3, 12: 57, 13: 6, 14: 79, 15: 16, 16: 117, 17: 25, 18: 153, 19: 45,
}

# Gamma_0(5): index 6 in SL_2(Z), genus 0, two elliptic points of order 2,
# none of order 3, two cusps.
GAMMA0_5_INDEX = 6
GAMMA0_5_GENUS = 0
GAMMA0_5_ELLIPTIC_2 = 2
GAMMA0_5_ELLIPTIC_3 = 0
GAMMA0_5_CUSPS = 2


def _max_order() -> int:
    return settings.SIEGEL5['MAX_SERIES_ORDER']


@handle_service_errors("hilbert_services")
def expand_rational(function: RationalFunction, upto: int) -> List:
    """Power-series coefficients c_0..c_upto of ``function``.

    Raises:
        ValidationError: If ``upto`` exceeds the configured cap or the
            denominator vanishes at 0.
    """
    if upto > _max_order():
        raise ValidationError(f"Expansion bound {upto} exceeds the maximum {_max_order()}")
    return function.expand(upto)


@lru_cache(maxsize=1)
def holomorphic_series() -> RationalFunction:
    return RationalFunction.from_factors(
        [
            binomial_factor(-1, 1), binomial_factor(-1, 1),
            binomial_factor(1, 7),
            PALINDROMIC_FACTOR,
        ],
        [
            binomial_factor(-1, 2), binomial_factor(-1, 2),
            binomial_factor(-1, 3),
            binomial_factor(-1, 4), binomial_factor(-1, 4),
            binomial_factor(-1, 5),
        ],
    )


def siegel_dims(upto: int) -> List[int]:
    return expand_rational(holomorphic_series(), upto)


def siegel_dim(k: int) -> int:
    """dim M_k(Gamma_0^(2)(5))."""
    if k < 0:
        raise ValidationError(f"Weight must be non-negative, got {k}")
    return siegel_dims(k)[k]


def _check_classical_weight(k: int) -> None:
    if k % 2 or k < 4:
        raise ValidationError(f"Classical dimension formula needs an even weight >= 4, got {k}")


def classical_cusp_dim(k: int) -> int:
    """dim S_k(Gamma_0(5)) for even k >= 4.

    (k - 1)(g - 1) + floor(k/4) e2 + floor(k/3) e3 + (k/2 - 1) cusps.
    """
    _check_classical_weight(k)
    return (
        (k - 1) * (GAMMA0_5_GENUS - 1)
        + (k // 4) * GAMMA0_5_ELLIPTIC_2
        + (k // 3) * GAMMA0_5_ELLIPTIC_3
        + (k // 2 - 1) * GAMMA0_5_CUSPS
    )


def classical_modular_dim(k: int) -> int:
    """dim M_k(Gamma_0(5)) for even k >= 4: cusp forms plus one Eisenstein series per cusp."""
    return classical_cusp_dim(k) + GAMMA0_5_CUSPS


@dataclass(frozen=True)
class ConsistencyRow:
    weight: int
    siegel: int
    classical_cusp: int
    implied_cusp: int

    @property
    def passed(self) -> bool:
        return self.implied_cusp >= 0


def bi_consistency(upto: int) -> List[ConsistencyRow]:
    """Implied Siegel cusp dimensions siegel_dim(k) - 2 dim S_k(Gamma_0(5)) - 3 for even 4 <= k <= upto."""
    if upto < 4:
        raise ValidationError(f"Consistency relation starts at weight 4, got upto={upto}")
    dims = siegel_dims(upto)
    rows = []
    for k in range(4, upto + 1, 2):
        cusp = classical_cusp_dim(k)
        rows.append(ConsistencyRow(k, dims[k], cusp, dims[k] - 2 * cusp - 3))
    return rows


def known_dimension_mismatches() -> Dict[int, tuple]:
    """{k: (expanded, known)} for every tabulated weight where they differ."""
    dims = siegel_dims(max(KNOWN_DIMENSIONS))
    return {k: (dims[k], v) for k, v in KNOWN_DIMENSIONS.items() if dims[k] != v}


def palindromic_factor_ok() -> bool:
    return is_palindromic(PALINDROMIC_FACTOR) and len(PALINDROMIC_FACTOR) - 1 == 14


def meromorphic_domination(upto: int = 15) -> Dict[int, tuple]:
    """Weights where the holomorphic dimension exceeds the epsilon_2-invariant meromorphic one.

    Returns {k: (holomorphic, meromorphic)} for the violations (empty when dominated).
    """
    from .invariant_services import meromorphic_dimensions
    from ..series import EPS2

    holomorphic = siegel_dims(upto)
    meromorphic = meromorphic_dimensions(EPS2, upto)
    return {
        k: (holomorphic[k], meromorphic[k])
        for k in range(upto + 1) if holomorphic[k] > meromorphic[k]
    }
