"""
Generator table loading, validation and derived modular forms.

This module owns the four basic forms f1, f2 (weight 1) and g1, g2
(weight 2), read from the embedded coefficient table, and everything
computed from them: h1, h2, e2, the weight-4 Maass forms phi1..phi4 and
the Jacobian J.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ..error_handlers import handle_service_errors, log_operation
from ..exceptions import (
    DataIntegrityError, PrecisionError, SupportConeError, ValidationError,
)
from ..series import FourierSeries
from ..series.base import TABLE_TRUNCATION

logger = logging.getLogger(__name__)

BASIC_NAMES = ('f1', 'f2', 'g1', 'g2')
BASIC_WEIGHTS = {'f1': 1, 'f2': 1, 'g1': 2, 'g2': 2}
FORM_NAMES = ('f1', 'f2', 'g1', 'g2', 'h1', 'h2', 'e2', 'phi1', 'phi2', 'phi3', 'phi4', 'J')

Row = Tuple[int, int, int, int, int, int, int]


@dataclass(frozen=True)
class GeneratorSet:
    """The basic generators and, once completed, every derived form."""

    f1: FourierSeries
    f2: FourierSeries
    g1: FourierSeries
    g2: FourierSeries
    h1: Optional[FourierSeries] = None
    h2: Optional[FourierSeries] = None
    e2: Optional[FourierSeries] = None
    phi1: Optional[FourierSeries] = None
    phi2: Optional[FourierSeries] = None
    phi3: Optional[FourierSeries] = None
    phi4: Optional[FourierSeries] = None
    J: Optional[FourierSeries] = None

    @property
    def trunc(self) -> int:
        return self.f1.trunc

    @property
    def is_complete(self) -> bool:
        return all(getattr(self, f.name) is not None for f in fields(self))

    def basic(self) -> Tuple[FourierSeries, FourierSeries, FourierSeries, FourierSeries]:
        return (self.f1, self.f2, self.g1, self.g2)

    def form(self, name: str) -> FourierSeries:
        """Look up a form by name.

        Raises:
            ValidationError: For an unknown name or a form not yet derived.
        """
        if name not in FORM_NAMES:
            raise ValidationError(f"Unknown form {name!r}; expected one of {', '.join(FORM_NAMES)}")
        value = getattr(self, name)
        if value is None:
            raise ValidationError(f"Form {name!r} has not been derived")
        return value

    def truncated(self, trunc: int) -> 'GeneratorSet':
        return GeneratorSet(**{
            f.name: (getattr(self, f.name).truncated(trunc) if getattr(self, f.name) is not None else None)
            for f in fields(self)
        })


def parse_generator_table(path: Path) -> List[Row]:
    """Read the tab-separated table ``a b c f1 f2 g1 g2``.

    Raises:
        DataIntegrityError: For a missing file or a malformed line.
    """
    rows: List[Row] = []
    try:
        handle = open(path, encoding='utf-8')
    except OSError as e:
        raise DataIntegrityError(f"Cannot read generator table {path}: {e}")
    with handle:
        for lineno, line in enumerate(handle, start=1):
            line = line.strip()
            if not line or line.startswith('#'):
                continue
            parts = line.split()
            if len(parts) != 7:
                raise DataIntegrityError(f"{path.name}:{lineno}: expected 7 columns, got {len(parts)}")
            try:
                rows.append(tuple(int(p) for p in parts))
            except ValueError:
                raise DataIntegrityError(f"{path.name}:{lineno}: non-integer entry in {line!r}")
    logger.debug(f"Parsed {len(rows)} rows from {path}")
    return rows


@handle_service_errors("generator_services")
def load_generators(rows: Iterable[Sequence[int]], trunc: int = TABLE_TRUNCATION) -> GeneratorSet:
    """Build f1, f2, g1, g2 from coefficient rows.

    Missing triples are zero. A row whose mirror (a, -b, c) is absent is
    mirrored; present mirrors must agree.

    Raises:
        PrecisionError: For a row with a + c > trunc.
        SupportConeError: For a row with b^2 > 4ac.
        DataIntegrityError: For negative exponents, conflicting duplicates
            or disagreeing mirror rows.
    """
    table: Dict[Tuple[int, int, int], Tuple[int, int, int, int]] = {}
    for row in rows:
        a, b, c, *values = row
        key = (a, b, c)
        if a < 0 or c < 0:
            raise DataIntegrityError(f"Row {key} has a negative exponent")
        if a + c > trunc:
            raise PrecisionError(f"Row {key} lies beyond truncation a + c <= {trunc}")
        if b * b > 4 * a * c:
            raise SupportConeError(f"Row {key} violates b^2 <= 4ac")
        values = tuple(values)
        if key in table and table[key] != values:
            raise DataIntegrityError(f"Conflicting rows for {key}: {table[key]} and {values}")
        table[key] = values

    completed = dict(table)
    for (a, b, c), values in table.items():
        mirror = (a, -b, c)
        if mirror not in table:
            completed[mirror] = values
        elif table[mirror] != values:
            raise DataIntegrityError(f"Rows {(a, b, c)} and {mirror} disagree: {values} vs {table[mirror]}")

    series = {}
    for index, name in enumerate(BASIC_NAMES):
        series[name] = FourierSeries(
            BASIC_WEIGHTS[name],
            trunc,
            {key: values[index] for key, values in completed.items()},
        )
    logger.info(f"Loaded generator table: {len(table)} rows, truncation {trunc}")
    return GeneratorSet(**series)


@handle_service_errors("generator_services")
@log_operation("derived_forms")
def derived_forms(gens: GeneratorSet) -> GeneratorSet:
    """Complete a generator set with h1, h2, e2, phi1..phi4 and J."""
    from .jacobian_services import jacobian

    f1, f2, g1, g2 = gens.basic()
    f1f2 = f1 * f2
    h1 = g1 - f1f2
    h2 = g2 + f1f2
    e2 = f1 * f1 + f2 * f2 - g1.scale(4) - g2.scale(4)
    phi1 = e2 * e2 + f1f2 * f1f2
    phi2 = f1 * f1 * g1 + f2 * f2 * g2 - (g1 * g2).scale(2)
    phi3 = f1f2 * (f1 * f1 - f1f2.scale(2) - f2 * f2 + g1.scale(2) - g2.scale(2))
    phi4 = (g1 * g2).scale(2) + f1f2 * (g1 - g2)
    J = jacobian([f1, f2, g1, g2], [1, 1, 2, 2])
    return replace(
        gens, h1=h1, h2=h2, e2=e2,
        phi1=phi1, phi2=phi2, phi3=phi3, phi4=phi4, J=J,
    )


def relation_checks(gens: GeneratorSet) -> Dict[str, Optional[Tuple[int, int, int]]]:
    """The defining relations, each mapped to its first offending triple (None if it holds)."""
    f1, f2, g1, g2 = gens.basic()
    f1f2 = f1 * f2
    e2 = f1 * f1 + f2 * f2 - (g1 + g2).scale(4)
    return {
        'g1 - h1 = f1 f2': (g1 - gens.h1).first_difference(f1f2),
        'h2 - g2 = f1 f2': (gens.h2 - g2).first_difference(f1f2),
        'e2 = f1^2 + f2^2 - 4(g1 + g2)': gens.e2.first_difference(e2),
    }


def b_symmetry_violation(series: FourierSeries) -> Optional[Tuple[int, int, int]]:
    """First triple with c(a, b, c) != c(a, -b, c), or None."""
    for a, b, c in series.support():
        if series[(a, b, c)] != series[(a, -b, c)]:
            return (a, b, c)
    return None


def swap_checks(gens: GeneratorSet) -> Dict[str, Optional[Tuple[int, int, int]]]:
    """swap_qs(f1) = f1, swap_qs(f2) = -f2, swap_qs(g1) = h1, swap_qs(g2) = h2."""
    f1, f2, g1, g2 = gens.basic()
    return {
        'swap(f1) = f1': f1.swap_qs().first_difference(f1),
        'swap(f2) = -f2': f2.swap_qs().first_difference(-f2),
        'swap(g1) = h1': g1.swap_qs().first_difference(gens.h1),
        'swap(g2) = h2': g2.swap_qs().first_difference(gens.h2),
    }


#: Expected leading q-coefficients of the Phi-operator images of f1 and f2.
PHI_F1 = (1, 3, 4)
PHI_F2 = (0, 1, -2, 4)


def restriction_check(gens: GeneratorSet) -> Dict[str, Optional[int]]:
    """Compare the s^0 restrictions of f1 and f2 with their known q-expansions.

    Returns, for each form, the first index a where they differ (or None).
    """
    out = {}
    for name, expected in (('f1', PHI_F1), ('f2', PHI_F2)):
        actual = gens.form(name).restrict_s0()
        limit = min(len(actual), len(expected))
        out[name] = next((a for a in range(limit) if actual[a] != expected[a]), None)
    return out


def validate_generators(gens: GeneratorSet) -> List[str]:
    """Names of the structural checks the generator set fails (empty when valid)."""
    failures = []
    for name in BASIC_NAMES:
        if b_symmetry_violation(gens.form(name)) is not None:
            failures.append(f"b-symmetry of {name}")
    for name, index in restriction_check(gens).items():
        if index is not None:
            failures.append(f"restriction of {name} at q^{index}")
    complete = gens if gens.h1 is not None else derived_forms(gens)
    for label, witness in swap_checks(complete).items():
        if witness is not None:
            failures.append(label)
    if failures:
        logger.warning(f"Generator validation failed: {', '.join(failures)}")
    return failures
