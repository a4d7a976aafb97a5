"""
The Pfaffian model of the level-5 lattice.

L sits in the antisymmetric 4x4 matrices with quadratic form pf. Its
points have integer entries with a divisible by 5 and b + e = 0, so
L = U + U(5) + A_1 has signature (3, 2) and discriminant 50.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import List, Optional, Sequence, Tuple

import numpy as np
import sympy as sp

from modforms.error_handlers import handle_service_errors
from modforms.exceptions import ValidationError

from ..structures import AntisymMatrix, SiegelPoint, SYMPLECTIC_FORM

logger = logging.getLogger(__name__)

LEVEL = 5

Matrix4 = Tuple[Tuple[int, ...], ...]

#: Basis of L: (5,0,0,0,0), (0,0,0,0,1), (0,0,1,0,0), (0,0,0,1,0), (0,1,0,0,0) in (a, b, c, d, f), e = -b.
L_BASIS: Tuple[AntisymMatrix, ...] = (
    AntisymMatrix(a=5),
    AntisymMatrix(f=1),
    AntisymMatrix(c=1),
    AntisymMatrix(d=1),
    AntisymMatrix(b=1, e=-1),
)

#: A vector of norm 1/20 in the coset gamma_1; its Humbert surface is 5 det(Z) = 1 - 5z.
LAMBDA_0 = AntisymMatrix(a=1, b=Fraction(1, 2), e=Fraction(-1, 2), f=Fraction(-1, 5))

#: A vector of norm 1 whose Humbert surface is tau = 2z.
LAMBDA_TAU_2Z = AntisymMatrix(b=1, c=1, e=-1)


def pfaffian(m: AntisymMatrix) -> Fraction:
    """af - be + cd."""
    return m.pfaffian()


def bilinear(x: AntisymMatrix, y: AntisymMatrix) -> Fraction:
    """<x, y> = pf(x + y) - pf(x) - pf(y)."""
    return pfaffian(x + y) - pfaffian(x) - pfaffian(y)


def phi_embed(point: SiegelPoint) -> AntisymMatrix:
    """Image of Z in L (x) C: entries 1, z, w, -tau, -z, tau w - z^2."""
    tau, z, w = point.as_tuple()
    return AntisymMatrix(a=1, b=z, c=w, d=-tau, e=-z, f=tau * w - z * z)


def pf_of_phi_symbolic() -> sp.Expr:
    """pf(phi(Z)) as an expanded polynomial in tau, z, w."""
    tau, z, w = sp.symbols('tau z w')
    a, b, c, d, e, f = 1, z, w, -tau, -z, tau * w - z**2
    return sp.expand(a * f - b * e + c * d)


def _blocks(matrix) -> Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    m = np.array(matrix, dtype=object)
    if m.shape != (4, 4):
        raise ValidationError(f"Expected a 4x4 matrix, got shape {m.shape}")
    return m[:2, :2], m[:2, 2:], m[2:, :2], m[2:, 2:]


def _det2(m: np.ndarray) -> Fraction:
    return Fraction(m[0, 0]) * m[1, 1] - Fraction(m[0, 1]) * m[1, 0]


def _inverse2(m: np.ndarray) -> np.ndarray:
    det = _det2(m)
    if det == 0:
        raise ValidationError("Singular automorphy factor")
    return np.array([[m[1, 1] / det, -m[0, 1] / det], [-m[1, 0] / det, m[0, 0] / det]], dtype=object)


def is_symplectic(matrix) -> bool:
    """M^T J M = J for the standard alternating form J."""
    return SYMPLECTIC_FORM.conjugated(matrix) == SYMPLECTIC_FORM


def in_gamma0(matrix, level: int = LEVEL) -> bool:
    m = np.array(matrix, dtype=object)
    integral = all(Fraction(v).denominator == 1 for v in m.flat)
    return integral and is_symplectic(m) and all(v % level == 0 for v in m[2:, :2].flat)


def automorphy(matrix, point: SiegelPoint) -> Fraction:
    """j(M; Z) = det(CZ + D)."""
    _, _, c, d = _blocks(matrix)
    return _det2(c @ point.to_matrix() + d)


def moebius(matrix, point: SiegelPoint) -> SiegelPoint:
    """M . Z = (AZ + B)(CZ + D)^-1."""
    a, b, c, d = _blocks(matrix)
    z = point.to_matrix()
    image = (a @ z + b) @ _inverse2(c @ z + d)
    return SiegelPoint.from_matrix(image)


def block_transpose(matrix) -> np.ndarray:
    """[[A, B], [C, D]] -> [[D^T, B^T], [C^T, A^T]]."""
    a, b, c, d = _blocks(matrix)
    return np.block([[d.T, b.T], [c.T, a.T]])


@dataclass(frozen=True)
class TransformCheck:
    """Both sides of M^T phi(Z) M = j phi(M' . Z).

    ``holds`` uses M' = block_transpose(M); ``literal_holds`` uses M' = M
    and is None when CZ + D is singular.
    """

    lhs: AntisymMatrix
    rhs: AntisymMatrix
    holds: bool
    literal_holds: Optional[bool]


@handle_service_errors("lattice_services")
def check_transform(matrix, point: SiegelPoint) -> TransformCheck:
    """Compare M^T phi(Z) M with j(M'; Z) phi(M' . Z) exactly.

    Raises:
        ValidationError: For a non-symplectic M or a singular automorphy
            factor at Z.
    """
    if not is_symplectic(matrix):
        raise ValidationError("Matrix does not preserve the alternating form")
    lhs = phi_embed(point).conjugated(matrix)
    adjoint = block_transpose(matrix)
    j = automorphy(adjoint, point)
    if j == 0:
        raise ValidationError(f"Singular automorphy factor at {point}")
    rhs = phi_embed(moebius(adjoint, point)) * j
    literal = None
    j_literal = automorphy(matrix, point)
    if j_literal != 0:
        literal = lhs == phi_embed(moebius(matrix, point)) * j_literal
    return TransformCheck(lhs, rhs, lhs == rhs, literal)


def epsilon_u(u: int, level: int = LEVEL) -> Matrix4:
    """[[u, 0, b, 0], [0, 1, 0, 0], [N, 0, u*, 0], [0, 0, 0, 1]] with u u* - N b = 1.

    u is taken in 1..N-1 and u* as the least positive inverse.

    Raises:
        ValidationError: If u is not a unit modulo N.
    """
    u = u % level
    if u == 0 or gcd(u, level) != 1:
        raise ValidationError(f"{u} is not a unit modulo {level}")
    u_star = pow(u, -1, level)
    b = (u * u_star - 1) // level
    return ((u, 0, b, 0), (0, 1, 0, 0), (level, 0, u_star, 0), (0, 0, 0, 1))


@dataclass(frozen=True)
class LatticeGram:
    matrix: Tuple[Tuple[int, ...], ...]
    determinant: int
    signature: Tuple[int, int]


def gram_of_L() -> LatticeGram:
    """Gram matrix of :data:`L_BASIS` under the bilinear form, with |det| and (b+, b-)."""
    rows = tuple(tuple(int(bilinear(x, y)) for y in L_BASIS) for x in L_BASIS)
    determinant = abs(int(sp.Matrix(rows).det()))
    eigenvalues = np.linalg.eigvalsh(np.array(rows, dtype=float))
    signature = (int(np.sum(eigenvalues > 0)), int(np.sum(eigenvalues < 0)))
    return LatticeGram(rows, determinant, signature)


def is_in_dual(vector: AntisymMatrix) -> bool:
    return vector.b + vector.e == 0 and all(bilinear(vector, v).denominator == 1 for v in L_BASIS)


def coset_of(vector: AntisymMatrix) -> Tuple[Fraction, Fraction, Fraction]:
    """Class of a vector of L' in L'/L, as (a/5, b, f) modulo 1.

    These are the coordinates of the discriminant form of
    [[0, 0, 5], [0, 2, 0], [5, 0, 0]] used by the Weil representation.

    Raises:
        ValidationError: If the vector is not in L'.
    """
    if not is_in_dual(vector):
        raise ValidationError(f"{vector} is not in the dual lattice")
    return tuple(x - (x.numerator // x.denominator) for x in (vector.a / LEVEL, vector.b, vector.f))


def humbert_equation(vector: AntisymMatrix) -> Tuple[Fraction, ...]:
    """Coefficients of (det Z, tau, z, w, 1) in <phi(Z), lambda> = a det Z - c tau + 2b z + d w + f.

    Raises:
        ValidationError: Unless b + e = 0.
    """
    if vector.b + vector.e != 0:
        raise ValidationError("Humbert equations are written for vectors with b + e = 0")
    return vector.a, -vector.c, 2 * vector.b, vector.d, vector.f


def humbert_value(vector: AntisymMatrix, point: SiegelPoint) -> Fraction:
    """<phi(Z), lambda>; zero exactly on the Humbert surface of lambda."""
    return bilinear(phi_embed(point), vector)


def pf_conjugation_holds(matrix, vector: AntisymMatrix) -> bool:
    """pf(A^T X A) = det(A) pf(X)."""
    det = int(sp.Matrix(np.array(matrix, dtype=object).tolist()).det())
    return pfaffian(vector.conjugated(matrix)) == det * pfaffian(vector)


def _unimodular(rng: random.Random) -> np.ndarray:
    a = np.eye(2, dtype=object)
    for _ in range(rng.randint(1, 3)):
        k = rng.randint(-2, 2)
        step = rng.choice((
            [[1, k], [0, 1]],
            [[1, 0], [k, 1]],
            [[0, 1], [1, 0]],
            [[-1, 0], [0, 1]],
        ))
        a = a @ np.array(step, dtype=object)
    return a


def _inverse_transpose_unimodular(a: np.ndarray) -> np.ndarray:
    det = a[0, 0] * a[1, 1] - a[0, 1] * a[1, 0]
    return np.array([[a[1, 1] * det, -a[1, 0] * det], [-a[0, 1] * det, a[0, 0] * det]], dtype=object)


def _symmetric(rng: random.Random, scale: int) -> np.ndarray:
    x, y, z = (rng.randint(-2, 2) * scale for _ in range(3))
    return np.array([[x, y], [y, z]], dtype=object)


def random_level_symplectic(rng: random.Random, level: int = LEVEL, length: int = 4) -> np.ndarray:
    """Product of random [[I, B], [0, I]], [[I, 0], [C, I]] (C = 0 mod level) and [[A, 0], [0, A^-T]]."""
    identity = np.eye(2, dtype=object)
    zero = np.zeros((2, 2), dtype=object)
    m = np.eye(4, dtype=object)
    for _ in range(length):
        kind = rng.randrange(3)
        if kind == 0:
            factor = np.block([[identity, _symmetric(rng, 1)], [zero, identity]])
        elif kind == 1:
            factor = np.block([[identity, zero], [_symmetric(rng, level), identity]])
        else:
            a = _unimodular(rng)
            factor = np.block([[a, zero], [zero, _inverse_transpose_unimodular(a)]])
        m = m @ factor
    return m


def random_point(rng: random.Random) -> SiegelPoint:
    return SiegelPoint(*(Fraction(rng.randint(-9, 9), rng.randint(1, 6)) for _ in range(3)))


def random_transform_checks(count: int = 20, seed: int = 5) -> List[TransformCheck]:
    """check_transform on ``count`` random level-5 matrices at random rational points."""
    rng = random.Random(seed)
    results = []
    while len(results) < count:
        matrix = random_level_symplectic(rng)
        point = random_point(rng)
        if automorphy(block_transpose(matrix), point) == 0:
            continue
        results.append(check_transform(matrix, point))
    logger.debug(f"{sum(r.holds for r in results)}/{count} random transform checks hold")
    return results
