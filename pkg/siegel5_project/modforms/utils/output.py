"""Text and JSON-lines rendering shared by the management commands."""

from __future__ import annotations

from typing import Iterable, List, Mapping, Sequence

from rest_framework.renderers import JSONRenderer

FORMATS = ('text', 'jsonl')


def render_jsonl(records: Iterable[Mapping]) -> str:
    renderer = JSONRenderer()
    return ''.join(renderer.render(dict(record)).decode('utf-8') + '\n' for record in records)


def render_table(headers: Sequence[str], rows: Iterable[Sequence]) -> str:
    """Right-aligned columns under a header line."""
    rows = [[str(cell) for cell in row] for row in rows]
    widths = [len(h) for h in headers]
    for row in rows:
        widths = [max(w, len(cell)) for w, cell in zip(widths, row)]
    lines: List[str] = ['  '.join(h.rjust(w) for h, w in zip(headers, widths))]
    lines.extend('  '.join(cell.rjust(w) for cell, w in zip(row, widths)) for row in rows)
    return '\n'.join(lines) + '\n'


def render(records: Sequence[Mapping], headers: Sequence[str], output_format: str) -> str:
    if output_format == 'jsonl':
        return render_jsonl(records)
    return render_table(headers, ([record[h] for h in headers] for record in records))
