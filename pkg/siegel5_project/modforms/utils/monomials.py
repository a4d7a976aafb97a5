"""Enumeration of monomials in weighted variables."""

from __future__ import annotations

from typing import List, Sequence, Tuple


def monomials_of_weight(weights: Sequence[int], k: int) -> List[Tuple[int, ...]]:
    """All exponent vectors e with sum(e_i * weights[i]) == k.

    Vectors are listed lexicographically descending in e_1, e_2, ...
    """
    if k < 0:
        return []
    if not weights:
        return [()] if k == 0 else []
    head, tail = weights[0], weights[1:]
    out: List[Tuple[int, ...]] = []
    for e in range(k // head, -1, -1):
        for rest in monomials_of_weight(tail, k - e * head):
            out.append((e,) + rest)
    return out


def count_free_monomials(k: int) -> int:
    """Number of monomials of weight k in two variables of weight 1 and two of weight 2."""
    if k < 0:
        return 0
    return sum((k - 2 * j + 1) * (j + 1) for j in range(k // 2 + 1))
