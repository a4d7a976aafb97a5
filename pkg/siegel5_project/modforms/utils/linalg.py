"""Exact linear algebra helpers over the rationals.

Kept decoupled from the series types so they can be reused by services,
the invariant computations and tests with plain nested lists.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Sequence

import numpy as np


def integer_rows(rows: Sequence[Sequence]) -> np.ndarray:
    """Scale each rational row by the lcm of its denominators.

    Returns an object-dtype array of Python ints (row scaling never
    changes the rank).
    """
    out = []
    for row in rows:
        fractions = [Fraction(x) for x in row]
        scale = reduce(lcm, (f.denominator for f in fractions), 1)
        out.append([int(f * scale) for f in fractions])
    if not out:
        return np.zeros((0, 0), dtype=object)
    return np.array(out, dtype=object)


def _primitive(row: np.ndarray) -> np.ndarray:
    content = reduce(gcd, (int(x) for x in row if x), 0)
    if content > 1:
        return row // content
    return row


def echelon(matrix: np.ndarray) -> np.ndarray:
    """Fraction-free row echelon form.

    Each elimination step replaces row_i by (p/g) * row_i - (v/g) * pivot_row
    with g = gcd(p, v), then divides by the row content, so entries stay
    integral and small.
    """
    m = np.array(matrix, dtype=object, copy=True)
    if m.size == 0:
        return m
    rows, columns = m.shape
    row = 0
    for column in range(columns):
        if row >= rows:
            break
        candidates = [i for i in range(row, rows) if m[i, column] != 0]
        if not candidates:
            continue
        pivot = min(candidates, key=lambda i: abs(m[i, column]))
        if pivot != row:
            m[[pivot, row]] = m[[row, pivot]]
        p = m[row, column]
        for i in range(row + 1, rows):
            v = m[i, column]
            if v != 0:
                g = gcd(p, v)
                m[i] = _primitive(m[i] * (p // g) - m[row] * (v // g))
        row += 1
    return m


def rank(rows: Sequence[Sequence]) -> int:
    """Rank over Q of a list of rational rows."""
    matrix = integer_rows(rows)
    if matrix.size == 0:
        return 0
    reduced = echelon(matrix)
    return sum(1 for r in reduced if any(x != 0 for x in r))


class SparseBasis:
    """Incrementally built echelon basis of sparse rational vectors.

    Vectors are dicts {column: value}. Each stored row has a distinct pivot
    (its least column) with value 1, and no stored row has a nonzero entry
    in another row's pivot column.
    """

    def __init__(self):
        self._rows = {}

    def __len__(self) -> int:
        return len(self._rows)

    def reduce(self, vector) -> dict:
        """Residue of ``vector`` modulo the span."""
        residue = {k: Fraction(v) for k, v in vector.items() if v}
        for pivot, row in self._rows.items():
            factor = residue.get(pivot)
            if factor:
                for column, value in row.items():
                    updated = residue.get(column, 0) - factor * value
                    if updated:
                        residue[column] = updated
                    else:
                        residue.pop(column, None)
        return residue

    def contains(self, vector) -> bool:
        return not self.reduce(vector)

    def add(self, vector) -> bool:
        """Insert ``vector``; return True if it enlarged the span."""
        residue = self.reduce(vector)
        if not residue:
            return False
        pivot = min(residue)
        scale = residue[pivot]
        row = {column: value / scale for column, value in residue.items()}
        for other_pivot, other in list(self._rows.items()):
            factor = other.get(pivot)
            if factor:
                for column, value in row.items():
                    updated = other.get(column, 0) - factor * value
                    if updated:
                        other[column] = updated
                    else:
                        other.pop(column, None)
        self._rows[pivot] = row
        return True
