"""
Dimensions of vector-valued modular forms for a Weil representation.

For weight k >= 5/2 the space M_k(rho) is the image V of the projector
onto vectors fixed by Z = S^2 (acting by i^(2k + sig) e_gamma -> e_-gamma)
and by any chosen automorphisms of the discriminant form. Then

    dim M_k = d + d k / 12 - alpha(e(k/4) rho(S)) - alpha((e(k/6) rho(ST))^-1) - alpha(rho(T))

on V, where d = dim V and alpha(A) sums the arguments nu in [0, 1) of the
eigenvalues e(nu) of A. The three alpha terms are read off from exact
traces, since e(k/4) rho(S) has order 2 and e(k/6) rho(ST) order 3 on V.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from fractions import Fraction
from math import lcm
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from modforms.error_handlers import handle_service_errors
from modforms.exceptions import ToolkitError, UnsupportedWeightError, ValidationError

from ..structures import DiscriminantForm, cyclotomic_field
from .weil_services import discriminant_form, eps_permutation, milgram_signature, s_constant

logger = logging.getLogger(__name__)

MIN_WEIGHT = Fraction(5, 2)

Weight = Union[int, str, Fraction]
Permutation = Tuple[int, ...]


def _parse_weight(weight: Weight) -> Fraction:
    try:
        return Fraction(weight)
    except (TypeError, ValueError, ZeroDivisionError):
        raise ValidationError(f"Cannot read weight {weight!r}")


def z_eigenvalue(weight: Fraction, signature: int) -> int:
    """s with Z f = f forcing f_-gamma = s f_gamma; s = i^(-2k - sig).

    Raises:
        UnsupportedWeightError: If 2k + sig is odd, so that no nonzero
            forms exist in this parity.
    """
    exponent = -2 * weight - signature
    if exponent.denominator != 1 or exponent.numerator % 2:
        raise UnsupportedWeightError(f"Weight {weight} has the wrong parity for signature {signature}")
    return 1 if exponent.numerator % 4 == 0 else -1


def _compose(p: Permutation, q: Permutation) -> Permutation:
    """p after q."""
    return tuple(p[i] for i in q)


def symmetry_group(generators: Iterable[Tuple[Permutation, int]]) -> Optional[Dict[Permutation, int]]:
    """Close {(permutation, sign)} under composition.

    Returns None when one permutation is reached with both signs, in which
    case the fixed space is zero.
    """
    generators = list(generators)
    size = len(generators[0][0])
    identity = tuple(range(size))
    group = {identity: 1}
    frontier = [identity]
    while frontier:
        current = frontier.pop()
        for perm, sign in generators:
            image = _compose(perm, current)
            weight = group[current] * sign
            if image in group:
                if group[image] != weight:
                    return None
                continue
            group[image] = weight
            frontier.append(image)
    return group


def _alpha_S(d: int, trace: Fraction) -> Fraction:
    minus = (d - trace) / 2
    return minus / 2


def _alpha_Y_inverse(d: int, p: int, q: int) -> Fraction:
    omega2 = Fraction(d - p - q, 3)
    omega = q + omega2
    return Fraction(2, 3) * omega + Fraction(1, 3) * omega2


def _omega_coordinates(value: complex) -> Tuple[int, int]:
    """Nearest (p, q) with value = p + q e(1/3)."""
    q = round(value.imag / (3 ** 0.5 / 2))
    p = round(value.real + q / 2)
    return p, q


@handle_service_errors("dimension_services")
def vvmf_dimension(
    weight: Weight,
    cuspidal: bool = False,
    automorphisms: Sequence[int] = (),
    form: Optional[DiscriminantForm] = None,
) -> int:
    """dim M_k(rho) or dim S_k(rho), restricted to the vectors fixed by eps_u for u in ``automorphisms``.

    Automorphisms are only available for the level-5 form.

    Raises:
        UnsupportedWeightError: Below weight 5/2 or in the wrong parity.
        ValidationError: For an unreadable weight.
    """
    k = _parse_weight(weight)
    if k < MIN_WEIGHT:
        raise UnsupportedWeightError(f"Dimension formula needs weight >= {MIN_WEIGHT}, got {k}")
    form = form or discriminant_form()
    signature = milgram_signature(form)
    s = z_eigenvalue(k, signature)

    generators = [(tuple(form.negation_permutation()), s)]
    if automorphisms:
        if form is not discriminant_form():
            raise ValidationError("Automorphisms are only defined for the level-5 discriminant form")
        generators += [(tuple(eps_permutation(u)), 1) for u in automorphisms]
    group = symmetry_group(generators)
    if group is None:
        logger.debug(f"Weight {k}: conflicting signs, fixed space is zero")
        return 0
    order = len(group)

    field = cyclotomic_field(lcm(8, form.level, 24))
    c = s_constant(form, signature, field)

    d = Fraction(0)
    alpha_T = Fraction(0)
    trivial_T = Fraction(0)
    s_sum: Dict[Fraction, Fraction] = defaultdict(Fraction)
    st_sum: Dict[Fraction, Fraction] = defaultdict(Fraction)
    for perm, sign in group.items():
        weight_h = Fraction(sign, order)
        for i, gamma in enumerate(form.elements):
            image = form.elements[perm[i]]
            if perm[i] == i:
                d += weight_h
                q = form.q_value(gamma)
                alpha_T += weight_h * ((-q) % 1)
                if q == 0:
                    trivial_T += weight_h
            pairing = form.pairing(gamma, image)
            s_sum[pairing] += weight_h
            st_sum[(pairing - form.q_value(image)) % 1] += weight_h

    if d.denominator != 1:
        raise ToolkitError(f"Projector has non-integral trace {d}")
    d = int(d)
    if d == 0:
        return 0

    trace_s = field.root_of_unity(k / 4) * c * field.exponential_sum(s_sum)
    trace_y = field.root_of_unity(k / 6) * c * field.exponential_sum(st_sum)
    p, q = _omega_coordinates(trace_y.to_complex())
    if trace_y != field.rational(p) + field.root_of_unity(Fraction(1, 3)) * q:
        raise ToolkitError(f"Trace of e(k/6) rho(ST) is not in Z[e(1/3)]: {trace_y!r}")

    alpha_S = _alpha_S(d, trace_s.rational())
    alpha_Y = _alpha_Y_inverse(d, p, q)
    dimension = d + d * k / 12 - alpha_S - alpha_Y - alpha_T
    if dimension.denominator != 1:
        raise ToolkitError(f"Dimension formula gave a non-integer {dimension} at weight {k}")
    dimension = int(dimension)
    if cuspidal:
        dimension -= int(trivial_T)
    logger.debug(f"Weight {k}: d={d}, alpha_S={alpha_S}, alpha_Y={alpha_Y}, alpha_T={alpha_T} -> {dimension}")
    return dimension


def dimension_table(weights: Iterable[Weight], cuspidal: bool = False, automorphisms: Sequence[int] = ()) -> List[Tuple[Fraction, int]]:
    return [(Fraction(w), vvmf_dimension(w, cuspidal, automorphisms)) for w in weights]
