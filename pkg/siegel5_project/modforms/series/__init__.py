"""
Value types for exact expansions.

- fourier: truncated three-variable Fourier expansions
- graded: weighted polynomials in the abstract generators
- group_action: cyclic linear actions on those polynomials
- rational_function: one-variable rational functions and their expansions
"""

from .fourier import FourierSeries, series_add, series_mul, assert_cone
from .graded import GradedPoly, GRADING, VARIABLE_NAMES, monomial_weight
from .group_action import GroupAction, EPS2, EPS4, TRIVIAL, ACTIONS
from .rational_function import RationalFunction, is_palindromic

__all__ = [
    # Fourier expansions
    'FourierSeries',
    'series_add',
    'series_mul',
    'assert_cone',

    # Graded polynomials
    'GradedPoly',
    'GRADING',
    'VARIABLE_NAMES',
    'monomial_weight',

    # Group actions
    'GroupAction',
    'EPS2',
    'EPS4',
    'TRIVIAL',
    'ACTIONS',

    # Rational functions
    'RationalFunction',
    'is_palindromic',
]
