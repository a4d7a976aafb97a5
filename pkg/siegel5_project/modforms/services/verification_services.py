"""
Verification suites and report assembly.

Each suite is a function returning a list of :class:`CheckResult` in a
fixed order. ``run_suite`` wraps them in a :class:`VerificationReport`
carrying the toolkit version and the data checksums, and runs the suites
of ``all`` in a thread pool when SIEGEL5['PARALLEL_SUITES'] is set.
"""

from __future__ import annotations

import logging
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from django.conf import settings

from .hilbert_services import (
    bi_consistency, meromorphic_domination, palindromic_factor_ok, siegel_dims, known_dimension_mismatches,
)
from .invariant_services import (
    character_sum_rule, generators_span_check, minimal_generator_degrees, molien_series, reynolds_dimensions,
)
from .jacobian_services import jacobian_square_check, jacobian_valuation
from .polynomial_services import (
    F1, F2, G1, G2, INVARIANT_GENERATORS, KERNEL_EPS4_GENERATORS, MAASS_POLYNOMIALS, HOLOMORPHIC_GENERATORS,
    check_invariance, poly_divide, poly_eval,
)
from .rank_services import CHECKED_WEIGHTS, MonomialEvaluator, rank_check, span_rank
from .generator_services import b_symmetry_violation, relation_checks, restriction_check, swap_checks
from ..error_handlers import log_operation
from ..exceptions import ValidationError
from ..series import EPS2, EPS4, TRIVIAL

logger = logging.getLogger(__name__)

PASS = 'pass'
FAIL = 'fail'
SKIP = 'skip'

SUITE_NAMES = ('data', 'relations', 'jacobian', 'molien', 'hilbert', 'rank', 'weilrep', 'lattice')

#: Minimal generator weights of the invariants of each action on C[F1, F2, G1, G2, X_J].
MINIMAL_DEGREES = {
    'eps2': [2, 2, 4, 4, 4, 4, 4, 11, 11, 11],
    'eps4': [2, 2, 2, 2, 2, 9],
    'trivial': [1, 1, 2, 2, 9],
}

#: Implied dimensions of Siegel cusp forms for k = 4, 6, 8, 10, 12.
IMPLIED_CUSP_DIMS = (1, 5, 13, 25, 44)


@dataclass(frozen=True)
class CheckResult:
    id: str
    status: str
    witness: Optional[object] = None
    detail: str = ''


@dataclass(frozen=True)
class VerificationReport:
    suite: str
    checks: Tuple[CheckResult, ...]
    version: str
    checksums: Dict[str, str] = field(default_factory=dict)

    @property
    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if c.status == FAIL]

    @property
    def passed(self) -> bool:
        return not self.failures


def check(check_id: str, ok: bool, witness=None, detail: str = '') -> CheckResult:
    """A pass/fail result; a failure always carries a witness."""
    if ok:
        return CheckResult(check_id, PASS, None, detail)
    return CheckResult(check_id, FAIL, witness if witness is not None else detail or check_id, detail)


def _witness_check(check_id: str, witness) -> CheckResult:
    return check(check_id, witness is None, witness)


def data_suite(data_dir: Optional[str] = None) -> List[CheckResult]:
    from ..selectors import get_generator_set, verify_checksums

    results = [check(f'checksum {name}', ok, name) for name, ok in verify_checksums(data_dir).items()]
    gens = get_generator_set(data_dir, verify=False)
    for name in ('f1', 'f2', 'g1', 'g2'):
        results.append(_witness_check(f'b-symmetry {name}', b_symmetry_violation(gens.form(name))))
    for label, witness in swap_checks(gens).items():
        results.append(_witness_check(label, witness))
    for name, index in restriction_check(gens).items():
        results.append(_witness_check(f'restriction {name}', index))
    return results


def relations_suite(data_dir: Optional[str] = None) -> List[CheckResult]:
    from ..selectors import get_generator_set

    gens = get_generator_set(data_dir)
    results = [_witness_check(label, witness) for label, witness in relation_checks(gens).items()]
    cone = gens.e2.cone_violations()
    results.append(check('e2 holomorphic', not cone, cone[0] if cone else None))
    results.append(_witness_check('phi4 cusp form', gens.phi4.first_cusp_violation()))
    for name in ('phi1', 'phi2', 'phi3'):
        results.append(check(f'{name} not cuspidal', gens.form(name).first_cusp_violation() is not None, name))
    for name, poly in MAASS_POLYNOMIALS:
        results.append(_witness_check(f'{name} polynomial', poly_eval(poly, gens).first_difference(gens.form(name))))
    maass_rank = span_rank([gens.phi1, gens.phi2, gens.phi3, gens.phi4])
    results.append(check('Maass forms rank 4', maass_rank == 4, maass_rank))
    kernel = check_invariance([poly for _, _, poly in KERNEL_EPS4_GENERATORS], EPS4)
    results.append(check(
        'eps4 fixes f1^2, f2^2, f1 f2, g1, g2, J', all(kernel),
        next((KERNEL_EPS4_GENERATORS[i][0] for i, ok in enumerate(kernel) if not ok), None),
    ))
    results.append(check('eps2 negates f1 f2', EPS2.apply(F1 * F2) == -(F1 * F2), 'f1 f2'))
    return results


def jacobian_suite(data_dir: Optional[str] = None) -> List[CheckResult]:
    from ..selectors import get_generator_set, get_jacobian_polynomial

    gens = get_generator_set(data_dir)
    relation = get_jacobian_polynomial(data_dir)
    J = gens.J
    valuation, leading = jacobian_valuation(J)
    results = [
        check('J nonzero', bool(J), 'J'),
        check('J valuation 4', valuation == 4, valuation),
        check('J(2, 1, 2) = -1 and J(2, -1, 2) = 1', J[(2, 1, 2)] == -1 and J[(2, -1, 2)] == 1, (2, 1, 2)),
    ]
    square = jacobian_square_check(J, relation, gens)
    detail = 'scalar undetermined at this truncation' if square.passed and square.scalar is None else ''
    results.append(check('J^2 = lambda P_J', square.passed, square.witness, detail))
    results.append(check('P_J weight 18', relation.is_homogeneous() and relation.weight() == 18, sorted(relation.weights())))
    results.append(check('P_J has 116 terms', len(relation) == 116, len(relation)))
    results.append(check('P_J eps2-invariant', check_invariance([relation], EPS2)[0], 'P_J'))
    division = poly_divide(relation, G1 + G2)
    results.append(check(
        'P_J divisible by G1 + G2', division.exact,
        division.remainder.leading_term()[0] if division.remainder else None,
    ))
    results.append(check('P_J / (G1 + G2) eps2-invariant', check_invariance([division.quotient], EPS2)[0], 'quotient'))
    return results


def molien_suite(data_dir: Optional[str] = None) -> List[CheckResult]:
    results = []
    for action in (EPS2, EPS4, TRIVIAL):
        degrees = minimal_generator_degrees(action, 15)
        expected = MINIMAL_DEGREES[action.name]
        results.append(check(f'minimal degrees {action.name}', degrees == expected, degrees))
    for action, character in ((EPS2, 'trivial'), (EPS2, 'det_J'), (EPS4, 'trivial'), (EPS4, 'det_J')):
        molien = molien_series(action, character, 15)
        reynolds = reynolds_dimensions(action, character, 15)
        mismatch = next((d for d in range(16) if molien[d] != reynolds[d]), None)
        results.append(_witness_check(f'Molien = Reynolds {action.name} {character}', mismatch))
    low = molien_series(EPS2, 'trivial', 4)
    results.append(check('eps2 invariants up to weight 4', low == [1, 0, 2, 0, 8], low))
    rule = character_sum_rule(EPS2, 15)
    results.append(_witness_check('character sum rule eps2', next((d for d, (x, y) in enumerate(rule) if x != y), None)))
    span = generators_span_check(EPS2, INVARIANT_GENERATORS, 15)
    results.append(_witness_check(
        'invariant generators span', next((d for d, (rank, dim) in span.items() if rank != dim), None),
    ))
    invariant = check_invariance([poly for _, _, poly in HOLOMORPHIC_GENERATORS], EPS2)
    results.append(check(
        'holomorphic generators eps2-invariant', all(invariant),
        next((HOLOMORPHIC_GENERATORS[i][0] for i, ok in enumerate(invariant) if not ok), None),
    ))
    return results


def hilbert_suite(data_dir: Optional[str] = None) -> List[CheckResult]:
    mismatches = known_dimension_mismatches()
    results = [
        check('dimensions k = 1..19', not mismatches, next(iter(mismatches.items()), None)),
        check('P(t) palindromic of degree 14', palindromic_factor_ok(), 'P(t)'),
    ]
    rows = bi_consistency(30)
    results.append(_witness_check('cusp dimensions non-negative', next((r.weight for r in rows if not r.passed), None)))
    implied = tuple(r.implied_cusp for r in rows if r.weight <= 12)
    results.append(check('implied cusp dimensions k = 4..12', implied == IMPLIED_CUSP_DIMS, implied))
    violations = meromorphic_domination(15)
    results.append(check('holomorphic <= meromorphic', not violations, next(iter(violations.items()), None)))
    dims = siegel_dims(15)
    results.append(check('weights 11, 13, 15', (dims[11], dims[13], dims[15]) == (3, 6, 16), (dims[11], dims[13], dims[15])))
    return results


def rank_suite(data_dir: Optional[str] = None) -> List[CheckResult]:
    from ..selectors import get_generator_set

    gens = get_generator_set(data_dir)
    evaluator = MonomialEvaluator(gens)
    results = []
    for k in CHECKED_WEIGHTS:
        outcome = rank_check(gens, k, evaluator=evaluator)
        detail = f'rank {outcome.rank} of {outcome.monomials} monomials, target {outcome.target}'
        if outcome.polynomial_rank is not None:
            detail += f', polynomial rank {outcome.polynomial_rank}'
        if outcome.status == SKIP:
            detail += f'; {outcome.classification} {outcome.diagnostics}'
            results.append(CheckResult(f'rank weight {k}', SKIP, None, detail))
        else:
            results.append(check(f'rank weight {k}', outcome.status == PASS, outcome.diagnostics, detail))
    return results


def weilrep_suite(data_dir: Optional[str] = None) -> List[CheckResult]:
    from quadratic.services import dimension_services, weil_services as weil

    verdicts = weil.verify_mp2_relations()
    results = [
        check('S^2 = (ST)^3', verdicts.s_squared_is_st_cubed, verdicts.witness),
        check('S^8 = 1', verdicts.s_eighth_is_identity, 'S^8'),
        check('S unitary', verdicts.s_unitary, 'S'),
        check('T unitary', verdicts.t_unitary, 'T'),
        check('S^2 = i^sig N', weil.s_squared_action(), 'S^2'),
    ]
    signature = weil.milgram_signature()
    results.append(check('Milgram signature 1', signature == 1, signature))
    a1_signature = weil.milgram_signature(weil.discriminant_form(weil.A1_GRAM))
    results.append(check('A1 Milgram signature 1', a1_signature == 1, a1_signature))
    results.append(check('polarization identity', weil.polarization_holds(), 'Q'))

    names = weil.named_cosets()
    norms = {'gamma': Fraction(1, 20), 'alpha': Fraction(1, 4), 'beta': Fraction(1, 4), 'delta': Fraction(1, 5)}
    wrong = next((n for n, g in names.items() if weil.q_value(g) != norms[n.rstrip('1234')]), None)
    results.append(_witness_check('coset norms', wrong))
    results.append(check('eps2(gamma1) = gamma2', weil.eps_action(2, names['gamma1']) == names['gamma2'], 'gamma1'))
    results.append(check('eps2(delta1) = delta2', weil.eps_action(2, names['delta1']) == names['delta2'], 'delta1'))
    results.append(check('eps2 eps3 = eps1', weil.eps_composition_trivial(2, 3), (2, 3)))
    intertwiner = weil.intertwiner_check(2)
    results.append(check('eps2 intertwines rho', intertwiner.passed, 'T' if not intertwiner.commutes_with_T else 'S'))

    dim = dimension_services.vvmf_dimension(Fraction(7, 2))
    results.append(check('dim M_7/2 = 7', dim == 7, dim))
    fixed = dimension_services.vvmf_dimension(Fraction(7, 2), automorphisms=(2,))
    results.append(check('eps2-fixed dim M_7/2 = 4', fixed == 4, fixed))
    a1 = weil.discriminant_form(weil.A1_GRAM)
    a1_dims = tuple(dimension_services.vvmf_dimension(Fraction(k, 2), form=a1) for k in (7, 11, 19))
    results.append(check('A1 dimensions 7/2, 11/2, 19/2', a1_dims == (1, 1, 2), a1_dims))
    results.append(CheckResult(
        'weight 3/2 nearly-holomorphic forms', SKIP, None, 'below the range of the dimension formula',
    ))
    return results


def lattice_suite(data_dir: Optional[str] = None) -> List[CheckResult]:
    from quadratic.services import lattice_services as lattice
    from quadratic.services import weil_services as weil
    from quadratic.structures import SYMPLECTIC_FORM, AntisymMatrix, SiegelPoint

    gram = lattice.gram_of_L()
    results = [
        check('|det Gram(L)| = 50', gram.determinant == 50, gram.determinant),
        check('signature (3, 2)', gram.signature == (3, 2), gram.signature),
        check('pf(J) = -1', lattice.pfaffian(SYMPLECTIC_FORM) == -1, lattice.pfaffian(SYMPLECTIC_FORM)),
        check('pf(phi(Z)) = 0', lattice.pf_of_phi_symbolic() == 0, str(lattice.pf_of_phi_symbolic())),
    ]
    bad = next((u for u in range(1, 5) if not lattice.in_gamma0(lattice.epsilon_u(u))), None)
    results.append(_witness_check('eps_u in Gamma_0(5)', bad))

    eps2 = lattice.epsilon_u(2)
    transform = lattice.check_transform(eps2, SiegelPoint(2, 1, 3))
    results.append(check('transform identity at eps2', transform.holds, str(transform.lhs)))
    if not transform.literal_holds:
        results.append(CheckResult(
            'transform identity with j(M; Z)', SKIP, None,
            'holds with the block-transposed matrix, whose automorphy factor is det(A + ZC)',
        ))
    random_checks = lattice.random_transform_checks(20)
    results.append(_witness_check('transform identity, 20 random matrices', next(
        (i for i, r in enumerate(random_checks) if not r.holds), None,
    )))

    rng = random.Random(50)
    failures = 0
    for _ in range(50):
        a = [[rng.randint(-3, 3) for _ in range(4)] for _ in range(4)]
        x = AntisymMatrix(*(rng.randint(-5, 5) for _ in range(6)))
        failures += not lattice.pf_conjugation_holds(a, x)
    results.append(check('pf(A^T X A) = det(A) pf(X)', failures == 0, failures))

    lam = lattice.LAMBDA_0
    results.append(check('lambda_0 has norm 1/20', lattice.pfaffian(lam) == Fraction(1, 20), lattice.pfaffian(lam)))
    results.append(check(
        'lambda_0 in gamma_1', weil.discriminant_form().reduce(lattice.coset_of(lam)) == weil.named_cosets()['gamma1'],
        lattice.coset_of(lam),
    ))
    off_surface = next((
        z for z in (Fraction(n, 7) for n in range(-5, 6))
        if lattice.humbert_value(lam, SiegelPoint(1, z, Fraction(1, 5) - z + z * z)) != 0
    ), None)
    results.append(_witness_check('Humbert surface 5 det(Z) = 1 - 5z', off_surface))
    image = lattice.coset_of(lam.conjugated(eps2))
    results.append(check(
        'sigma(eps2) maps gamma_1 to gamma_2',
        weil.discriminant_form().reduce(image) == weil.named_cosets()['gamma2'], image,
    ))
    return results


SUITES: Dict[str, Callable[[Optional[str]], List[CheckResult]]] = {
    'data': data_suite,
    'relations': relations_suite,
    'jacobian': jacobian_suite,
    'molien': molien_suite,
    'hilbert': hilbert_suite,
    'rank': rank_suite,
    'weilrep': weilrep_suite,
    'lattice': lattice_suite,
}


def _prefixed(name: str, results: Sequence[CheckResult]) -> List[CheckResult]:
    return [CheckResult(f'{name}: {r.id}', r.status, r.witness, r.detail) for r in results]


@log_operation("run_suite")
def run_suite(name: str, data_dir: Optional[str] = None, parallel: Optional[bool] = None) -> VerificationReport:
    """Run one suite, or every suite for ``'all'``, and assemble the report.

    Raises:
        ValidationError: For an unknown suite name.
    """
    from ..selectors import data_checksums

    if name != 'all' and name not in SUITES:
        raise ValidationError(f"Unknown suite {name!r}; expected all or one of {', '.join(SUITE_NAMES)}")
    if parallel is None:
        parallel = bool(settings.SIEGEL5['PARALLEL_SUITES'])
    names = SUITE_NAMES if name == 'all' else (name,)

    if parallel and len(names) > 1:
        with ThreadPoolExecutor(max_workers=len(names)) as pool:
            outcomes = list(pool.map(lambda n: SUITES[n](data_dir), names))
    else:
        outcomes = [SUITES[n](data_dir) for n in names]

    checks: List[CheckResult] = []
    for suite_name, results in zip(names, outcomes):
        checks.extend(_prefixed(suite_name, results) if name == 'all' else results)
    report = VerificationReport(name, tuple(checks), settings.SIEGEL5['VERSION'], data_checksums(data_dir))
    logger.info(f"Suite {name}: {len(checks)} checks, {len(report.failures)} failures")
    return report
