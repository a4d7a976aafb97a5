"""
Mixins for Fourier expansion functionality.

These mixins provide focused, reusable behaviour composed into
:class:`~modforms.series.fourier.FourierSeries`.
"""

from .calculus import CalculusMixin
from .support import SupportMixin

__all__ = [
    'CalculusMixin',
    'SupportMixin',
]
