"""Read-only loaders (selectors) for the embedded data files.

Selectors resolve the data directory, check each table against the
SHA256SUMS manifest, parse and cache the generator table and the P_J
polynomial, and report checksums, keeping commands and views thin.
"""

from __future__ import annotations

from functools import lru_cache
from pathlib import Path
from typing import Dict, Optional

from django.conf import settings

from .exceptions import DataIntegrityError
from .services.generator_services import GeneratorSet, derived_forms, load_generators, parse_generator_table
from .services.polynomial_services import parse_jacobian_polynomial
from .series import GradedPoly
from .utils.checksums import read_manifest, sha256_of

GENERATOR_TABLE = 'generators.tsv'
JACOBIAN_TABLE = 'jacobian_square.tsv'
MANIFEST = 'SHA256SUMS'


def get_data_dir(override: Optional[str] = None) -> Path:
    """The directory holding the data files.

    An explicit override wins over SIEGEL5_DATA_DIR, which wins over the
    embedded copies.
    """
    path = Path(override) if override else Path(settings.SIEGEL5['DATA_DIR'])
    if not path.is_dir():
        raise DataIntegrityError(f"Data directory {path} does not exist")
    return path


@lru_cache(maxsize=4)
def _generator_set(data_dir: Path) -> GeneratorSet:
    rows = parse_generator_table(data_dir / GENERATOR_TABLE)
    return derived_forms(load_generators(rows, settings.SIEGEL5['TRUNCATION']))


def get_generator_set(data_dir: Optional[str] = None, verify: bool = True) -> GeneratorSet:
    """The complete generator set (basic and derived forms) for a data directory.

    Raises:
        DataIntegrityError: If ``verify`` and the table does not match the manifest.
    """
    path = get_data_dir(data_dir).resolve()
    if verify:
        _require_checksum(path, GENERATOR_TABLE)
    return _generator_set(path)


@lru_cache(maxsize=4)
def _jacobian_polynomial(data_dir: Path) -> GradedPoly:
    return parse_jacobian_polynomial(data_dir / JACOBIAN_TABLE)


def get_jacobian_polynomial(data_dir: Optional[str] = None, verify: bool = True) -> GradedPoly:
    path = get_data_dir(data_dir).resolve()
    if verify:
        _require_checksum(path, JACOBIAN_TABLE)
    return _jacobian_polynomial(path)


def _read_manifest(path: Path) -> Dict[str, str]:
    try:
        return read_manifest(path / MANIFEST)
    except OSError as e:
        raise DataIntegrityError(f"Cannot read checksum manifest: {e}")


def _digest(path: Path, name: str) -> str:
    try:
        return sha256_of(path / name)
    except OSError as e:
        raise DataIntegrityError(f"Cannot read {name}: {e}")


def _require_checksum(path: Path, name: str) -> None:
    expected = _read_manifest(path).get(name)
    if expected != _digest(path, name):
        raise DataIntegrityError(f"{name} in {path} does not match {MANIFEST}")


def data_checksums(data_dir: Optional[str] = None) -> Dict[str, str]:
    """{file name: sha256} for the two data tables."""
    path = get_data_dir(data_dir)
    return {name: _digest(path, name) for name in (GENERATOR_TABLE, JACOBIAN_TABLE)}


def verify_checksums(data_dir: Optional[str] = None) -> Dict[str, bool]:
    """Whether each data table matches the manifest shipped next to it."""
    manifest = _read_manifest(get_data_dir(data_dir))
    actual = data_checksums(data_dir)
    return {name: manifest.get(name) == digest for name, digest in actual.items()}


def clear_caches() -> None:
    _generator_set.cache_clear()
    _jacobian_polynomial.cache_clear()
