"""
Antisymmetric 4x4 matrices and rational sample points of the Siegel upper half-space.

An antisymmetric matrix is stored by its six entries above the diagonal:

    [[ 0,  a,  b,  c],
     [-a,  0,  d,  e],
     [-b, -d,  0,  f],
     [-c, -e, -f,  0]]
"""

from __future__ import annotations

from dataclasses import astuple, dataclass
from fractions import Fraction
from typing import Sequence, Tuple

import numpy as np

from modforms.exceptions import ValidationError

_POSITIONS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


@dataclass(frozen=True)
class AntisymMatrix:
    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)
    c: Fraction = Fraction(0)
    d: Fraction = Fraction(0)
    e: Fraction = Fraction(0)
    f: Fraction = Fraction(0)

    def __post_init__(self):
        for name in self.__dataclass_fields__:
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    @classmethod
    def from_matrix(cls, matrix) -> 'AntisymMatrix':
        m = np.array(matrix, dtype=object)
        if m.shape != (4, 4):
            raise ValidationError(f"Expected a 4x4 matrix, got shape {m.shape}")
        if any(m[i, i] != 0 for i in range(4)) or any(m[i, j] != -m[j, i] for i in range(4) for j in range(4)):
            raise ValidationError("Matrix is not antisymmetric")
        return cls(*(m[i, j] for i, j in _POSITIONS))

    def to_matrix(self) -> np.ndarray:
        m = np.full((4, 4), Fraction(0), dtype=object)
        for (i, j), value in zip(_POSITIONS, astuple(self)):
            m[i, j] = value
            m[j, i] = -value
        return m

    def __add__(self, other: 'AntisymMatrix') -> 'AntisymMatrix':
        return AntisymMatrix(*(x + y for x, y in zip(astuple(self), astuple(other))))

    def __sub__(self, other: 'AntisymMatrix') -> 'AntisymMatrix':
        return AntisymMatrix(*(x - y for x, y in zip(astuple(self), astuple(other))))

    def __mul__(self, scalar) -> 'AntisymMatrix':
        return AntisymMatrix(*(x * Fraction(scalar) for x in astuple(self)))

    __rmul__ = __mul__

    def pfaffian(self) -> Fraction:
        return self.a * self.f - self.b * self.e + self.c * self.d

    def conjugated(self, matrix: Sequence[Sequence[int]]) -> 'AntisymMatrix':
        """M^T X M."""
        m = np.array(matrix, dtype=object)
        return AntisymMatrix.from_matrix(m.T @ self.to_matrix() @ m)

    @property
    def in_lattice(self) -> bool:
        """Membership in L: integral entries, a divisible by 5 and b + e = 0."""
        entries = astuple(self)
        return (
            all(x.denominator == 1 for x in entries)
            and self.a % 5 == 0
            and self.b + self.e == 0
        )


#: The matrix preserved by the symplectic group under M -> M^T X M.
SYMPLECTIC_FORM = AntisymMatrix(b=-1, e=-1)


@dataclass(frozen=True)
class SiegelPoint:
    """Z = [[tau, z], [z, w]] with rational entries."""

    tau: Fraction
    z: Fraction
    w: Fraction

    def __post_init__(self):
        for name in ('tau', 'z', 'w'):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    @classmethod
    def from_matrix(cls, matrix) -> 'SiegelPoint':
        m = np.array(matrix, dtype=object)
        if m.shape != (2, 2) or m[0, 1] != m[1, 0]:
            raise ValidationError("A Siegel point is a symmetric 2x2 matrix")
        return cls(m[0, 0], m[0, 1], m[1, 1])

    def to_matrix(self) -> np.ndarray:
        return np.array([[self.tau, self.z], [self.z, self.w]], dtype=object)

    @property
    def det(self) -> Fraction:
        return self.tau * self.w - self.z * self.z

    def as_tuple(self) -> Tuple[Fraction, Fraction, Fraction]:
        return self.tau, self.z, self.w
