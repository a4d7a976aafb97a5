"""
Square matrices over a cyclotomic field.

A matrix is stored as (1 / denominator) * sum_i slices[i] * zeta^i with
integer numpy slices, one per power-basis coordinate. Products run as
integer matrix products followed by reduction modulo the cyclotomic
polynomial, so they stay exact.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Sequence

import numpy as np

from modforms.exceptions import ValidationError

from .cyclotomic import CyclotomicField, CyclotomicNumber

# Above this bound on |entry| * |entry| * size * degree the int64 product could overflow.
_INT64_SAFE = 2 ** 62


def _as_ints(array: np.ndarray) -> np.ndarray:
    if array.dtype == object and array.size and int(np.abs(array).max()) < 2 ** 62:
        return array.astype(np.int64)
    return array


class WeilMatrix:
    """Exact n x n matrix with entries in ``field``."""

    def __init__(self, field: CyclotomicField, slices: np.ndarray, denominator: int = 1):
        if slices.ndim != 3 or slices.shape[0] != field.degree or slices.shape[1] != slices.shape[2]:
            raise ValidationError(f"Slices of shape {slices.shape} do not describe a square matrix over {field}")
        if denominator == 0:
            raise ValidationError("Zero denominator")
        self.field = field
        slices, denominator = self._normalize(slices, int(denominator))
        self.slices = slices
        self.denominator = denominator

    @staticmethod
    def _normalize(slices: np.ndarray, denominator: int):
        if denominator < 0:
            slices, denominator = -slices, -denominator
        content = reduce(gcd, (int(v) for v in np.unique(slices) if v), denominator)
        if content > 1:
            slices = slices // content
            denominator //= content
        return _as_ints(slices), denominator

    @property
    def size(self) -> int:
        return self.slices.shape[1]

    @classmethod
    def from_entries(cls, field: CyclotomicField, rows: Sequence[Sequence[CyclotomicNumber]]) -> 'WeilMatrix':
        n = len(rows)
        denominator = reduce(lcm, (c.denominator for row in rows for entry in row for c in entry.coords), 1)
        slices = np.zeros((field.degree, n, n), dtype=object)
        for i, row in enumerate(rows):
            if len(row) != n:
                raise ValidationError(f"Row {i} has {len(row)} entries, expected {n}")
            for j, entry in enumerate(row):
                for k, c in enumerate(entry.coords):
                    if c:
                        slices[k, i, j] = int(c * denominator)
        return cls(field, slices, denominator)

    @classmethod
    def identity(cls, field: CyclotomicField, n: int) -> 'WeilMatrix':
        slices = np.zeros((field.degree, n, n), dtype=np.int64)
        slices[0] = np.eye(n, dtype=np.int64)
        return cls(field, slices)

    @classmethod
    def permutation(cls, field: CyclotomicField, images: Sequence[int]) -> 'WeilMatrix':
        """Matrix sending basis vector j to basis vector images[j]."""
        n = len(images)
        if sorted(images) != list(range(n)):
            raise ValidationError("Not a permutation")
        slices = np.zeros((field.degree, n, n), dtype=np.int64)
        for j, i in enumerate(images):
            slices[0, i, j] = 1
        return cls(field, slices)

    def entry(self, i: int, j: int) -> CyclotomicNumber:
        return self.field.element(Fraction(int(v), self.denominator) for v in self.slices[:, i, j])

    def trace(self) -> CyclotomicNumber:
        return self.field.element(
            Fraction(int(np.trace(self.slices[k])), self.denominator) for k in range(self.field.degree)
        )

    def _product_dtype(self, other: 'WeilMatrix'):
        bound = (
            int(np.abs(self.slices).max(initial=0)) * int(np.abs(other.slices).max(initial=0))
            * self.size * self.field.degree
        )
        return np.int64 if bound < _INT64_SAFE else object

    def __matmul__(self, other: 'WeilMatrix') -> 'WeilMatrix':
        if not isinstance(other, WeilMatrix):
            return NotImplemented
        if other.field != self.field or other.size != self.size:
            raise ValidationError("Matrices over different fields or of different sizes")
        d = self.field.degree
        dtype = self._product_dtype(other)
        left, right = self.slices.astype(dtype), other.slices.astype(dtype)
        product = np.zeros((2 * d - 1, self.size, self.size), dtype=dtype)
        for i in range(d):
            if not left[i].any():
                continue
            for j in range(d):
                if right[j].any():
                    product[i + j] += left[i] @ right[j]
        reduced = product[:d].copy()
        for k in range(d, 2 * d - 1):
            if product[k].any():
                for i, c in enumerate(self.field.power_coordinates(k)):
                    if c:
                        reduced[i] += c * product[k]
        return WeilMatrix(self.field, reduced, self.denominator * other.denominator)

    def __pow__(self, exponent: int) -> 'WeilMatrix':
        if exponent < 0:
            raise ValidationError("Only non-negative powers are supported")
        result = WeilMatrix.identity(self.field, self.size)
        base = self
        while exponent:
            if exponent & 1:
                result = result @ base
            exponent >>= 1
            if exponent:
                base = base @ base
        return result

    def scaled(self, scalar: CyclotomicNumber) -> 'WeilMatrix':
        """scalar * self."""
        return WeilMatrix.identity(self.field, self.size)._diagonal(scalar) @ self

    def _diagonal(self, scalar: CyclotomicNumber) -> 'WeilMatrix':
        return WeilMatrix.from_entries(
            self.field,
            [[scalar if i == j else self.field.zero() for j in range(self.size)] for i in range(self.size)],
        )

    def conjugate_transpose(self) -> 'WeilMatrix':
        d = self.field.degree
        out = np.zeros_like(self.slices)
        for i in range(d):
            if self.slices[i].any():
                for j, c in enumerate(self.field.conjugate_coordinates([0] * i + [1])):
                    if c:
                        out[j] += c * self.slices[i].T
        return WeilMatrix(self.field, out, self.denominator)

    def first_difference(self, other: 'WeilMatrix'):
        """Index (i, j) of the first differing entry, or None."""
        left = self.slices.astype(object) * other.denominator
        right = other.slices.astype(object) * self.denominator
        differing = np.argwhere((left != right).any(axis=0))
        if len(differing) == 0:
            return None
        i, j = differing[0]
        return int(i), int(j)

    def __eq__(self, other):
        if not isinstance(other, WeilMatrix):
            return NotImplemented
        return (
            self.field == other.field
            and self.denominator == other.denominator
            and np.array_equal(self.slices, other.slices)
        )

    __hash__ = None

    def __repr__(self):
        return f"<WeilMatrix {self.size}x{self.size} over {self.field}>"
