"""
Middleware for the read-only API: timing logs and a JSON body for crashes.
"""

import logging
import time
import traceback

from django.conf import settings
from django.http import JsonResponse
from django.utils.deprecation import MiddlewareMixin

logger = logging.getLogger(__name__)

API_PREFIX = '/api/'


class ErrorLoggingMiddleware(MiddlewareMixin):
    """
    Logs exceptions that escaped the view decorators. API paths get a JSON
    500 body; other paths fall through to Django's handling.
    """

    def process_exception(self, request, exception):
        logger.error(f"{exception.__class__.__name__} escaped {request.method} {request.get_full_path()}: {exception}")
        logger.debug(traceback.format_exc())
        if not request.path.startswith(API_PREFIX):
            return None
        body = {'error': 'Internal server error'}
        if settings.DEBUG:
            body['type'] = exception.__class__.__name__
        return JsonResponse(body, status=500)


class RequestLoggingMiddleware(MiddlewareMixin):
    """
    One log line per API request with status and wall time. Requests
    slower than SLOW_SECONDS are logged as warnings.
    """

    SLOW_SECONDS = 30.0

    def process_request(self, request):
        request._siegel5_started = time.monotonic()

    def process_response(self, request, response):
        started = getattr(request, '_siegel5_started', None)
        if started is None or not request.path.startswith(API_PREFIX):
            return response
        elapsed = time.monotonic() - started
        level = logging.WARNING if elapsed >= self.SLOW_SECONDS else logging.INFO
        logger.log(level, f"{request.method} {request.get_full_path()} -> {response.status_code} in {elapsed:.2f}s")
        return response
