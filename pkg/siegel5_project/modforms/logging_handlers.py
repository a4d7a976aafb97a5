"""
Console logging that survives terminals without Unicode support.
"""

import logging
import sys
from typing import TextIO

GREEK = {
    'α': 'alpha', 'β': 'beta', 'γ': 'gamma', 'δ': 'delta', 'ε': 'eps', 'ζ': 'zeta',
    'κ': 'kappa', 'λ': 'lambda', 'π': 'pi', 'ρ': 'rho', 'σ': 'sigma', 'τ': 'tau',
    'φ': 'phi', 'χ': 'chi', 'ψ': 'psi', 'ω': 'omega',
}

SYMBOLS = {
    '→': '->', '↦': '|->', '≠': '!=', '≤': '<=', '≥': '>=', '≡': '==',
    '±': '+/-', '∓': '-/+', '×': 'x', '·': '*', '√': 'sqrt', '′': "'",
    'ℚ': 'Q', 'ℤ': 'Z', 'ℝ': 'R', 'ℂ': 'C',
}

SUPERSCRIPTS = str.maketrans('⁰¹²³⁴⁵⁶⁷⁸⁹⁻', '0123456789-')
SUBSCRIPTS = str.maketrans('₀₁₂₃₄₅₆₇₈₉', '0123456789')


def asciify(text: str) -> str:
    """Spell mathematical notation in ASCII: 'ε₂ᵀλ₀ε₂' becomes 'eps2^Tlambda0eps2'."""
    out = []
    superscript = False
    for char in text:
        if char in GREEK:
            piece = GREEK[char]
        elif char in SYMBOLS:
            piece = SYMBOLS[char]
        elif char == 'ᵀ':
            piece = '^T'
        elif char.translate(SUPERSCRIPTS) != char:
            piece = ('' if superscript else '^') + char.translate(SUPERSCRIPTS)
            superscript = True
            out.append(piece)
            continue
        else:
            piece = char.translate(SUBSCRIPTS)
        superscript = False
        out.append(piece)
    return ''.join(out).encode('ascii', errors='replace').decode('ascii')


class SafeConsoleHandler(logging.StreamHandler):
    """
    A stderr handler that falls back to :func:`asciify` when the stream's
    encoding cannot represent a message. Reports go to stdout and are never
    touched.
    """

    def __init__(self, stream: TextIO = None):
        super().__init__(stream or sys.stderr)

    def _can_encode(self, msg: str) -> bool:
        try:
            msg.encode(getattr(self.stream, 'encoding', None) or 'utf-8')
        except (UnicodeEncodeError, LookupError):
            return False
        return True

    def format(self, record):
        msg = super().format(record)
        return msg if self._can_encode(msg) else asciify(msg)
