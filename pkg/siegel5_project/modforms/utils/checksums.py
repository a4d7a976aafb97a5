"""Checksum helpers for the embedded data files."""

from __future__ import annotations

import hashlib
from pathlib import Path
from typing import Dict


def sha256_of(path: Path) -> str:
    digest = hashlib.sha256()
    with open(path, 'rb') as handle:
        for chunk in iter(lambda: handle.read(65536), b''):
            digest.update(chunk)
    return digest.hexdigest()


def read_manifest(path: Path) -> Dict[str, str]:
    """Parse a ``sha256sum``-style manifest into {file name: hex digest}."""
    entries: Dict[str, str] = {}
    with open(path, encoding='utf-8') as handle:
        for line in handle:
            line = line.strip()
            if not line or line.startswith('#'):
                continue
            digest, name = line.split(None, 1)
            entries[name.lstrip('*')] = digest.lower()
    return entries
