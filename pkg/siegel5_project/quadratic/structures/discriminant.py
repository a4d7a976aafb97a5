"""
Discriminant forms of even lattices.

Elements of L'/L are stored as tuples of rationals in [0, 1), the
coordinates of a representative of S^-1 Z^n modulo Z^n.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import lcm
from typing import Dict, Iterable, List, Sequence, Tuple

import numpy as np
import sympy as sp

from modforms.exceptions import ValidationError

Element = Tuple[Fraction, ...]


def _mod1(x: Fraction) -> Fraction:
    return x - (x.numerator // x.denominator)


class DiscriminantForm:
    """L'/L with its quadratic form Q(v) = v^T S v / 2 mod 1 and the pairing v^T S w mod 1."""

    def __init__(self, gram: Sequence[Sequence[int]]):
        self.gram = tuple(tuple(int(v) for v in row) for row in gram)
        n = len(self.gram)
        matrix = sp.Matrix(self.gram)
        if matrix.shape != (n, n) or matrix != matrix.T:
            raise ValidationError("Gram matrix must be square and symmetric")
        if any(self.gram[i][i] % 2 for i in range(n)):
            raise ValidationError("Gram matrix of an even lattice needs an even diagonal")
        if matrix.det() == 0:
            raise ValidationError("Gram matrix is degenerate")
        self.rank = n
        inverse = matrix.inv()
        self._generators = [
            tuple(_mod1(Fraction(int(inverse[i, j].p), int(inverse[i, j].q))) for i in range(n))
            for j in range(n)
        ]
        self.elements: List[Element] = self._enumerate()
        self._index: Dict[Element, int] = {g: i for i, g in enumerate(self.elements)}
        if len(self.elements) != abs(int(matrix.det())):
            raise ValidationError(f"Enumerated {len(self.elements)} elements, expected |det| = {abs(matrix.det())}")

    def _enumerate(self) -> List[Element]:
        zero = self.zero()
        seen = {zero}
        frontier = [zero]
        while frontier:
            current = frontier.pop()
            for generator in self._generators:
                image = self.add(current, generator)
                if image not in seen:
                    seen.add(image)
                    frontier.append(image)
        return sorted(seen)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def zero(self) -> Element:
        return (Fraction(0),) * self.rank

    def reduce(self, vector: Iterable) -> Element:
        """Representative in [0, 1)^n of a vector of L'.

        Raises:
            ValidationError: If the vector does not lie in L'.
        """
        vector = tuple(_mod1(Fraction(v)) for v in vector)
        if len(vector) != self.rank:
            raise ValidationError(f"Expected {self.rank} coordinates, got {len(vector)}")
        for row in self.gram:
            if sum(s * v for s, v in zip(row, vector)).denominator != 1:
                raise ValidationError(f"{vector} is not in the dual lattice")
        return vector

    def index(self, gamma: Element) -> int:
        try:
            return self._index[gamma]
        except KeyError:
            raise ValidationError(f"{gamma} is not a reduced element of the discriminant group")

    def add(self, gamma: Element, beta: Element) -> Element:
        return tuple(_mod1(g + b) for g, b in zip(gamma, beta))

    def neg(self, gamma: Element) -> Element:
        return tuple(_mod1(-g) for g in gamma)

    def scale(self, n: int, gamma: Element) -> Element:
        return tuple(_mod1(n * g) for g in gamma)

    def _bilinear(self, gamma: Element, beta: Element) -> Fraction:
        return sum(
            (self.gram[i][j] * gamma[i] * beta[j] for i in range(self.rank) for j in range(self.rank)),
            Fraction(0),
        )

    def q_value(self, gamma: Element) -> Fraction:
        """Q(gamma) in [0, 1)."""
        return _mod1(self._bilinear(gamma, gamma) / 2)

    def pairing(self, gamma: Element, beta: Element) -> Fraction:
        return _mod1(self._bilinear(gamma, beta))

    @property
    def level(self) -> int:
        """Least N with N Q(gamma) integral for all gamma."""
        return reduce(lcm, (self.q_value(g).denominator for g in self.elements), 1)

    def signature(self) -> int:
        """b+ - b- of the Gram matrix."""
        eigenvalues = np.linalg.eigvalsh(np.array(self.gram, dtype=float))
        return int(np.sum(eigenvalues > 0) - np.sum(eigenvalues < 0))

    def negation_permutation(self) -> List[int]:
        return [self.index(self.neg(g)) for g in self.elements]

    def permutation_of(self, mapping) -> List[int]:
        """Indices of mapping(gamma) for every element, checking that Q is preserved.

        Raises:
            ValidationError: If ``mapping`` is not a Q-preserving bijection.
        """
        images = []
        for gamma in self.elements:
            image = self.reduce(mapping(gamma))
            if self.q_value(image) != self.q_value(gamma):
                raise ValidationError(f"Map does not preserve Q at {gamma}")
            images.append(self.index(image))
        if len(set(images)) != len(images):
            raise ValidationError("Map is not a bijection of the discriminant group")
        return images
