"""
Exact algebraic structures for the orthogonal side.

- cyclotomic: cyclotomic fields and their elements
- weil_matrix: matrices over a cyclotomic field
- discriminant: discriminant forms of even lattices
- antisym: antisymmetric 4x4 matrices and Siegel sample points
"""

from .antisym import AntisymMatrix, SiegelPoint, SYMPLECTIC_FORM
from .cyclotomic import CyclotomicField, CyclotomicNumber, cyclotomic_field
from .discriminant import DiscriminantForm, Element
from .weil_matrix import WeilMatrix

__all__ = [
    # Lattice model
    'AntisymMatrix',
    'SiegelPoint',
    'SYMPLECTIC_FORM',

    # Cyclotomic arithmetic
    'CyclotomicField',
    'CyclotomicNumber',
    'cyclotomic_field',
    'WeilMatrix',

    # Discriminant forms
    'DiscriminantForm',
    'Element',
]
