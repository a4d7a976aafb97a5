"""
Error handling utilities and decorators for the toolkit.
"""

import logging
import traceback
from functools import wraps

from django.http import JsonResponse

from .exceptions import (
    ToolkitError, WeightMismatchError, PrecisionError, SupportConeError,
    DataIntegrityError, ValidationError, UnsupportedWeightError, IdentityFailure,
)

logger = logging.getLogger(__name__)


def handle_api_errors(view_func):
    """
    Decorator translating toolkit errors raised by API views into JSON responses.
    """
    @wraps(view_func)
    def wrapper(request, *args, **kwargs):
        try:
            return view_func(request, *args, **kwargs)
        except (ValidationError, PrecisionError, UnsupportedWeightError) as e:
            logger.error(f"Validation error in {view_func.__name__}: {e}")
            return JsonResponse({'error': str(e), 'type': e.__class__.__name__}, status=400)
        except DataIntegrityError as e:
            logger.error(f"Data integrity error in {view_func.__name__}: {e}")
            return JsonResponse({'error': str(e), 'type': e.__class__.__name__}, status=500)
        except ToolkitError as e:
            logger.error(f"Toolkit error in {view_func.__name__}: {e}")
            return JsonResponse({'error': str(e), 'type': e.__class__.__name__}, status=500)
        except Exception as e:
            logger.error(f"Unexpected error in {view_func.__name__}: {e}")
            logger.error(f"Traceback: {traceback.format_exc()}")
            return JsonResponse({'error': 'Internal server error'}, status=500)

    return wrapper


def handle_service_errors(service_name):
    """
    Decorator to handle errors in service functions.
    """
    def decorator(func):
        @wraps(func)
        def wrapper(*args, **kwargs):
            try:
                return func(*args, **kwargs)
            except (WeightMismatchError, ValidationError) as e:
                logger.error(f"Validation error in {service_name}.{func.__name__}: {e}")
                raise
            except (PrecisionError, SupportConeError) as e:
                logger.error(f"Expansion error in {service_name}.{func.__name__}: {e}")
                raise
            except DataIntegrityError as e:
                logger.error(f"Data integrity error in {service_name}.{func.__name__}: {e}")
                raise
            except IdentityFailure as e:
                logger.error(f"Identity failure in {service_name}.{func.__name__}: {e} (witness {e.witness})")
                raise
            except ToolkitError as e:
                logger.error(f"Toolkit error in {service_name}.{func.__name__}: {e}")
                raise
            except Exception as e:
                logger.error(f"Unexpected error in {service_name}.{func.__name__}: {e}")
                logger.error(f"Traceback: {traceback.format_exc()}")
                raise ToolkitError(f"Unexpected error in {service_name}: {e}") from e

        return wrapper
    return decorator


def log_operation(operation_name):
    """
    Decorator to log long-running operations.
    """
    def decorator(func):
        @wraps(func)
        def wrapper(*args, **kwargs):
            logger.info(f"Starting operation: {operation_name}")
            try:
                result = func(*args, **kwargs)
                logger.info(f"Operation completed successfully: {operation_name}")
                return result
            except Exception as e:
                logger.error(f"Operation failed: {operation_name} - {e}")
                raise

        return wrapper
    return decorator
