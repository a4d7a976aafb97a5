"""
Services for the orthogonal side of the level-5 theory.

- lattice_services: the Pfaffian model, embedding and Humbert surfaces
- weil_services: discriminant form, Weil representation and coset actions
- dimension_services: dimensions of vector-valued modular forms
"""

from .lattice_services import (
    pfaffian, bilinear, phi_embed, check_transform, epsilon_u, gram_of_L,
    humbert_equation, humbert_value, coset_of, is_symplectic, in_gamma0,
    random_transform_checks, LAMBDA_0,
)
from .weil_services import (
    discriminant_form, coset, named_cosets, q_value, eps_action, weil_T, weil_S,
    verify_mp2_relations, milgram_signature, intertwiner_check, L_GRAM, A1_GRAM,
)
from .dimension_services import vvmf_dimension, dimension_table

__all__ = [
    # Lattice model
    'pfaffian',
    'bilinear',
    'phi_embed',
    'check_transform',
    'epsilon_u',
    'gram_of_L',
    'humbert_equation',
    'humbert_value',
    'coset_of',
    'is_symplectic',
    'in_gamma0',
    'random_transform_checks',
    'LAMBDA_0',

    # Weil representation
    'discriminant_form',
    'coset',
    'named_cosets',
    'q_value',
    'eps_action',
    'weil_T',
    'weil_S',
    'verify_mp2_relations',
    'milgram_signature',
    'intertwiner_check',
    'L_GRAM',
    'A1_GRAM',

    # Dimensions
    'vvmf_dimension',
    'dimension_table',
]
