import io
import logging

from django.test import SimpleTestCase

from modforms.logging_handlers import SafeConsoleHandler, asciify


class AsciifyTests(SimpleTestCase):
    def test_greek_subscripts_and_transpose(self):
        self.assertEqual(asciify('ε₂ᵀλ₀ε₂'), 'eps2^Tlambda0eps2')

    def test_superscripts_group(self):
        self.assertEqual(asciify('J² = λ·P_J'), 'J^2 = lambda*P_J')
        self.assertEqual(asciify('S⁻¹ℤ³'), 'S^-1Z^3')

    def test_relations(self):
        self.assertEqual(asciify('b² ≤ 4ac'), 'b^2 <= 4ac')

    def test_unknown_symbols_become_question_marks(self):
        self.assertEqual(asciify('Γ₀(5)'), '?0(5)')


class SafeConsoleHandlerTests(SimpleTestCase):
    def _emit(self, stream, message):
        handler = SafeConsoleHandler(stream)
        handler.setFormatter(logging.Formatter('%(message)s'))
        record = logging.LogRecord('modforms', logging.INFO, __file__, 1, message, None, None)
        handler.emit(record)
        stream.seek(0)
        return stream.read()

    def test_ascii_console(self):
        stream = io.TextIOWrapper(io.BytesIO(), encoding='ascii')
        self.assertEqual(self._emit(stream, 'rank at τ = 2z'), 'rank at tau = 2z\n')

    def test_unicode_console_is_untouched(self):
        stream = io.TextIOWrapper(io.BytesIO(), encoding='utf-8')
        self.assertEqual(self._emit(stream, 'rank at τ = 2z'), 'rank at τ = 2z\n')


class RequestLoggingTests(SimpleTestCase):
    def test_api_requests_are_logged(self):
        with self.assertLogs('modforms.middleware', level='INFO') as logs:
            self.client.get('/api/dims/', {'upto': 2})
        self.assertTrue(any('GET /api/dims/?upto=2 -> 200' in line for line in logs.output))
