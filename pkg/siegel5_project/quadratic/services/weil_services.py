"""
The Weil representation of the level-5 discriminant form.

rho(T) e_gamma = e(-Q(gamma)) e_gamma and
rho(S) e_gamma = e(sig / 8) |D|^(-1/2) sum_beta e(<gamma, beta>) e_beta.

The constant e(sig / 8) |D|^(-1/2) is e(sig / 4) conj(G) / |D| with G the
Gauss sum, so every entry lies in Q(zeta_n) for n = lcm(8, level).
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Dict, List, Optional, Sequence, Tuple

from modforms.error_handlers import handle_service_errors, log_operation
from modforms.exceptions import ToolkitError, ValidationError

from ..structures import CyclotomicField, CyclotomicNumber, DiscriminantForm, Element, WeilMatrix, cyclotomic_field

logger = logging.getLogger(__name__)

#: U(5) + A_1 in the order (U(5) first coordinate, A_1, U(5) second coordinate).
L_GRAM = ((0, 0, 5), (0, 2, 0), (5, 0, 0))
A1_GRAM = ((2,),)

LEVEL = 5


@lru_cache(maxsize=None)
def discriminant_form(gram: Tuple[Tuple[int, ...], ...] = L_GRAM) -> DiscriminantForm:
    return DiscriminantForm(gram)


def coset(x1: int, x2: int, x3: int) -> Element:
    """The element (x1 / 5, x2 / 2, x3 / 5) of L'/L."""
    return discriminant_form().reduce((Fraction(x1, 5), Fraction(x2, 2), Fraction(x3, 5)))


def named_cosets() -> Dict[str, Element]:
    """gamma_n, alpha_n, beta_n and delta_n = 2 gamma_n for n = 1..4.

    gamma_n = (n, 1, n^-1 * 4) has norm 1/20; alpha_n = (n, 1, 0) and
    beta_n = (0, 1, n) have norm 1/4.
    """
    form = discriminant_form()
    names = {}
    for n in range(1, 5):
        gamma = coset(n, 1, (4 * pow(n, -1, LEVEL)) % LEVEL)
        names[f'gamma{n}'] = gamma
        names[f'alpha{n}'] = coset(n, 1, 0)
        names[f'beta{n}'] = coset(0, 1, n)
        names[f'delta{n}'] = form.scale(2, gamma)
    return names


def q_value(gamma: Element, form: Optional[DiscriminantForm] = None) -> Fraction:
    return (form or discriminant_form()).q_value(gamma)


def weil_field(form: DiscriminantForm) -> CyclotomicField:
    return cyclotomic_field(lcm(8, form.level))


def eps_action(u: int, gamma: Element) -> Element:
    """(x1, x2, x3) -> (u x1, x2, u^-1 x3) on the U(5) coordinates.

    Raises:
        ValidationError: If u is not a unit modulo 5.
    """
    if gcd(u, LEVEL) != 1:
        raise ValidationError(f"{u} is not a unit modulo {LEVEL}")
    u_inverse = pow(u, -1, LEVEL)
    return discriminant_form().reduce((u * gamma[0], gamma[1], u_inverse * gamma[2]))


def eps_permutation(u: int) -> List[int]:
    form = discriminant_form()
    return form.permutation_of(lambda gamma: eps_action(u, gamma))


def gauss_sum(form: DiscriminantForm, field: Optional[CyclotomicField] = None) -> CyclotomicNumber:
    """sum_gamma e(Q(gamma))."""
    field = field or weil_field(form)
    return field.exponential_sum(Counter(form.q_value(g) for g in form))


@handle_service_errors("weil_services")
def milgram_signature(form: Optional[DiscriminantForm] = None) -> int:
    """The signature modulo 8, read off from G = sqrt|D| e(sig / 8).

    Raises:
        ToolkitError: If |G|^2 differs from |D|.
    """
    form = form or discriminant_form()
    field = weil_field(form)
    g = gauss_sum(form, field)
    if g * g.conjugate() != len(form):
        raise ToolkitError(f"Gauss sum has squared modulus {g * g.conjugate()!r}, expected {len(form)}")
    for k in range(8):
        rotated = g * field.root_of_unity(Fraction(-k, 8))
        square = rotated * rotated
        if square == len(form) and rotated.to_complex().real > 0:
            return k
    raise ToolkitError("Gauss sum is not sqrt|D| times an eighth root of unity")


def s_constant(
    form: DiscriminantForm,
    signature: Optional[int] = None,
    field: Optional[CyclotomicField] = None,
) -> CyclotomicNumber:
    """e(sig / 8) / sqrt|D| = e(sig / 4) conj(G) / |D|, in ``field`` or the Weil field."""
    field = field or weil_field(form)
    if signature is None:
        signature = milgram_signature(form)
    return field.root_of_unity(Fraction(signature, 4)) * gauss_sum(form, field).conjugate() / len(form)


def weil_T(form: Optional[DiscriminantForm] = None) -> WeilMatrix:
    form = form or discriminant_form()
    field = weil_field(form)
    zero = field.zero()
    rows = [
        [field.root_of_unity(-form.q_value(gamma)) if i == j else zero for j in range(len(form))]
        for i, gamma in enumerate(form.elements)
    ]
    return WeilMatrix.from_entries(field, rows)


def weil_S(form: Optional[DiscriminantForm] = None) -> WeilMatrix:
    form = form or discriminant_form()
    field = weil_field(form)
    c = s_constant(form)
    rows = [
        [c * field.root_of_unity(form.pairing(gamma, beta)) for gamma in form.elements]
        for beta in form.elements
    ]
    return WeilMatrix.from_entries(field, rows)


def is_unitary(matrix: WeilMatrix) -> bool:
    return matrix @ matrix.conjugate_transpose() == WeilMatrix.identity(matrix.field, matrix.size)


@dataclass(frozen=True)
class Mp2Verdicts:
    s_squared_is_st_cubed: bool
    s_eighth_is_identity: bool
    s_unitary: bool
    t_unitary: bool
    witness: Optional[Tuple[int, int]] = None

    @property
    def passed(self) -> bool:
        return all((self.s_squared_is_st_cubed, self.s_eighth_is_identity, self.s_unitary, self.t_unitary))


@handle_service_errors("weil_services")
@log_operation("verify_mp2_relations")
def verify_mp2_relations(form: Optional[DiscriminantForm] = None) -> Mp2Verdicts:
    """rho(S)^2 = (rho(S) rho(T))^3, rho(S)^8 = I and unitarity, exactly."""
    form = form or discriminant_form()
    s, t = weil_S(form), weil_T(form)
    s2 = s @ s
    st3 = (s @ t) ** 3
    s8 = (s2 @ s2) @ (s2 @ s2)
    identity = WeilMatrix.identity(s.field, s.size)
    witness = s2.first_difference(st3)
    return Mp2Verdicts(
        s_squared_is_st_cubed=witness is None,
        s_eighth_is_identity=s8 == identity,
        s_unitary=is_unitary(s),
        t_unitary=is_unitary(t),
        witness=witness,
    )


def s_squared_action(form: Optional[DiscriminantForm] = None) -> bool:
    """rho(S)^2 e_gamma = i^sig e_-gamma."""
    form = form or discriminant_form()
    s = weil_S(form)
    field = s.field
    expected = WeilMatrix.permutation(field, form.negation_permutation())
    scalar = field.root_of_unity(Fraction(milgram_signature(form), 4))
    return s @ s == expected.scaled(scalar)


@dataclass(frozen=True)
class IntertwinerCheck:
    u: int
    commutes_with_T: bool
    commutes_with_S: bool

    @property
    def passed(self) -> bool:
        return self.commutes_with_T and self.commutes_with_S


def intertwiner_check(u: int) -> IntertwinerCheck:
    """Whether the permutation matrix of eps_action(u, .) commutes with rho(T) and rho(S)."""
    form = discriminant_form()
    field = weil_field(form)
    p = WeilMatrix.permutation(field, eps_permutation(u))
    s, t = weil_S(form), weil_T(form)
    return IntertwinerCheck(u, p @ t == t @ p, p @ s == s @ p)


def eps_composition_trivial(u: int, v: int) -> bool:
    """eps_u eps_v acts as eps_(uv mod 5) on L'/L."""
    form = discriminant_form()
    return all(
        eps_action(u, eps_action(v, gamma)) == eps_action((u * v) % LEVEL, gamma)
        for gamma in form
    )


def polarization_holds(form: Optional[DiscriminantForm] = None) -> bool:
    """Q(g + d) - Q(g) - Q(d) = <g, d> mod 1 for all pairs."""
    form = form or discriminant_form()
    for gamma in form:
        for delta in form:
            lhs = form.q_value(form.add(gamma, delta)) - form.q_value(gamma) - form.q_value(delta)
            if (lhs - form.pairing(gamma, delta)).denominator != 1:
                return False
    return True
