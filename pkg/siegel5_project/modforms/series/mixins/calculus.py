"""
Mixin for differential and substitution operators on Fourier expansions.

Derivatives are the normalized operators D = (2 pi i)^-1 d/dv, so D_tau,
D_z and D_w multiply the coefficient at (a, b, c) by a, b and c.
"""

from __future__ import annotations

from ..base import VARIABLES
from ...exceptions import ValidationError


class CalculusMixin:
    """Mixin providing derive, swap_qs and the Siegel Phi-operator."""

    def derive(self, var: str):
        """Apply the normalized derivative in ``tau``, ``z`` or ``w``.

        The weight field is carried over unchanged.

        Raises:
            ValidationError: If ``var`` is not one of the three variables.
        """
        try:
            index = VARIABLES.index(var)
        except ValueError:
            raise ValidationError(f"Unknown variable {var!r}; expected one of {', '.join(VARIABLES)}")
        return self._with_coeffs(
            {key: value * key[index] for key, value in self.items() if key[index]},
        )

    def swap_qs(self):
        """Exchange the roles of q and s: the coefficient at (a, b, c) moves to (c, b, a)."""
        return self._with_coeffs({(c, b, a): value for (a, b, c), value in self.items()})

    def restrict_s0(self) -> list:
        """Siegel Phi-operator: the q-series formed by the terms with c = 0.

        Returns a list of length ``trunc + 1`` with the coefficient of q^a at
        index a.
        """
        coefficients = [0] * (self.trunc + 1)
        for (a, b, c), value in self.items():
            if c == 0:
                coefficients[a] += value
        return coefficients
