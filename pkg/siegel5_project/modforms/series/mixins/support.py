"""
Mixin for support queries on Fourier expansions.
"""

from __future__ import annotations

from typing import Iterator, List, Optional, Tuple

from ..base import Exponent, canonical_key, in_cone, order


class SupportMixin:
    """Mixin providing support, valuation and row-listing helpers."""

    def support(self) -> List[Exponent]:
        """Exponent triples with a nonzero coefficient, in canonical order."""
        return sorted(self.keys(), key=canonical_key)

    def rows(self, prec: Optional[int] = None) -> Iterator[Tuple[int, int, int, object]]:
        """Yield (a, b, c, value) for nonzero coefficients with a + c <= prec."""
        limit = self.trunc if prec is None else prec
        for key in self.support():
            if order(key) <= limit:
                yield (*key, self[key])

    def valuation(self) -> Optional[int]:
        """Least total order a + c carrying a nonzero coefficient, or None for zero."""
        if not self:
            return None
        return min(order(key) for key in self.keys())

    def homogeneous_part(self, total: int) -> dict:
        """Coefficients of total order ``total``."""
        return {key: value for key, value in self.items() if order(key) == total}

    def cone_violations(self) -> List[Exponent]:
        """Support triples with b^2 > 4ac."""
        return [key for key in self.support() if not in_cone(key)]

    def is_holomorphic_at_truncation(self) -> bool:
        """Every nonzero coefficient has a, c >= 0 and b^2 <= 4ac."""
        return all(key[0] >= 0 and key[2] >= 0 and in_cone(key) for key in self.keys())

    def is_cuspidal_at_truncation(self) -> bool:
        """Every nonzero coefficient has a > 0, c > 0 and 4ac - b^2 > 0."""
        return all(a > 0 and c > 0 and 4 * a * c - b * b > 0 for a, b, c in self.keys())

    def first_cusp_violation(self) -> Optional[Exponent]:
        for a, b, c in self.support():
            if not (a > 0 and c > 0 and 4 * a * c - b * b > 0):
                return (a, b, c)
        return None
