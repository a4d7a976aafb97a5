"""
Cyclic linear actions on C[F1, F2, G1, G2, X_J].

A :class:`GroupAction` is given by a generator: a 4x4 integer matrix whose
rows are the images of F1, F2, G1, G2, together with the sign by which the
generator multiplies X_J.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Tuple

import numpy as np

from .graded import GRADING, GradedPoly
from ..exceptions import ValidationError

Matrix = Tuple[Tuple[int, ...], ...]

IDENTITY: Matrix = ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))

#: epsilon_2: F1 -> F2, F2 -> -F1, G1 -> G2, G2 -> G1, X_J -> -X_J.
EPS2_MATRIX: Matrix = ((0, 1, 0, 0), (-1, 0, 0, 0), (0, 0, 0, 1), (0, 0, 1, 0))


def _compose(x: Matrix, y: Matrix) -> Matrix:
    """Matrix of the substitution 'apply y, then x' in the row convention."""
    return tuple(tuple(int(v) for v in row) for row in (np.array(y) @ np.array(x)))


@dataclass(frozen=True)
class GroupAction:
    """Cyclic group generated by one weight-preserving substitution."""

    name: str
    generator: Matrix
    j_sign: int = 1
    _order: int = field(default=0, init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "generator", tuple(tuple(int(v) for v in row) for row in self.generator))
        m = np.array(self.generator)
        if m.shape != (4, 4):
            raise ValidationError(f"Action matrix must be 4x4, got shape {m.shape}")
        for i in range(4):
            for j in range(4):
                if m[i, j] and GRADING[i] != GRADING[j]:
                    raise ValidationError("Action matrix must preserve the weight decomposition")
        if self.j_sign not in (1, -1):
            raise ValidationError(f"Sign on X_J must be +1 or -1, got {self.j_sign}")
        object.__setattr__(self, "_order", self._find_order())

    @property
    def order(self) -> int:
        return self._order

    def _find_order(self) -> int:
        power, sign = self.generator, self.j_sign
        for n in range(1, 49):
            if power == IDENTITY and sign == 1:
                return n
            power, sign = _compose(power, self.generator), sign * self.j_sign
        raise ValidationError(f"Action {self.name} does not have finite order")

    def elements(self) -> List[Tuple[Matrix, int]]:
        """(matrix, sign on X_J) for g^0, g^1, ..., g^(n-1)."""
        out = []
        power, sign = IDENTITY, 1
        for _ in range(self.order):
            out.append((power, sign))
            power, sign = _compose(power, self.generator), sign * self.j_sign
        return out

    def apply(self, poly: GradedPoly, times: int = 1) -> GradedPoly:
        matrix, sign = self.elements()[times % self.order]
        return poly.apply_linear(matrix, sign)

    def blocks(self, power: int = 1) -> Tuple[np.ndarray, np.ndarray]:
        """Weight-1 and weight-2 blocks of g^power, as integer arrays."""
        matrix, _ = self.elements()[power % self.order]
        m = np.array(matrix, dtype=object)
        return m[:2, :2], m[2:, 2:]

    def squared(self, name: str = None) -> 'GroupAction':
        return GroupAction(name or f"{self.name}^2", _compose(self.generator, self.generator), self.j_sign * self.j_sign)


EPS2 = GroupAction('eps2', EPS2_MATRIX, -1)
EPS4 = EPS2.squared('eps4')
TRIVIAL = GroupAction('trivial', IDENTITY, 1)

ACTIONS = {
    'eps2': EPS2,
    'eps4': EPS4,
    'trivial': TRIVIAL,
}
