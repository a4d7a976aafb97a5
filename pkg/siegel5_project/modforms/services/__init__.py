"""
Service layer for the Siegel modular forms toolkit.

Services are organized by domain:
- generator_services: loading and validating the generator table, derived forms
- jacobian_services: the modular Jacobian and the J^2 identity
- polynomial_services: weighted polynomials, evaluation and named generators
- invariant_services: Molien series, Reynolds ranks and minimal generators
- hilbert_services: the Hilbert-Poincare series and classical dimensions
- rank_services: monomial rank counts against predicted dimensions
- verification_services: suites and reports
"""

from .generator_services import (
    GeneratorSet,
    parse_generator_table,
    load_generators,
    derived_forms,
    validate_generators,
)

from .jacobian_services import (
    jacobian,
    jacobian_valuation,
    jacobian_square_check,
)

from .polynomial_services import (
    parse_jacobian_polynomial,
    poly_eval,
    apply_eps2,
    reynolds,
    poly_divide,
    HOLOMORPHIC_GENERATORS,
)

from .invariant_services import (
    molien_series,
    reynolds_dimensions,
    minimal_generator_degrees,
    meromorphic_dimensions,
)

from .hilbert_services import (
    expand_rational,
    siegel_dims,
    siegel_dim,
    classical_cusp_dim,
    classical_modular_dim,
    bi_consistency,
)

from .rank_services import (
    rank_check,
    span_rank,
)

from .verification_services import (
    CheckResult,
    VerificationReport,
    run_suite,
    SUITE_NAMES,
)

__all__ = [
    # Generator services
    'GeneratorSet',
    'parse_generator_table',
    'load_generators',
    'derived_forms',
    'validate_generators',

    # Jacobian services
    'jacobian',
    'jacobian_valuation',
    'jacobian_square_check',

    # Polynomial services
    'parse_jacobian_polynomial',
    'poly_eval',
    'apply_eps2',
    'reynolds',
    'poly_divide',
    'HOLOMORPHIC_GENERATORS',

    # Invariant services
    'molien_series',
    'reynolds_dimensions',
    'minimal_generator_degrees',
    'meromorphic_dimensions',

    # Hilbert series services
    'expand_rational',
    'siegel_dims',
    'siegel_dim',
    'classical_cusp_dim',
    'classical_modular_dim',
    'bi_consistency',

    # Rank services
    'rank_check',
    'span_rank',

    # Verification
    'CheckResult',
    'VerificationReport',
    'run_suite',
    'SUITE_NAMES',
]
