"""
Read-only JSON endpoints over the expansions, dimension tables and verification suites.

GET /api/expand/<form>/?prec=7
GET /api/dims/?upto=19
GET /api/verify/<suite>/
"""

import logging

from django.http import JsonResponse
from django.views.decorators.http import require_http_methods

from .error_handlers import handle_api_errors
from .exceptions import PrecisionError, ValidationError
from .selectors import get_generator_set
from .serializers import (
    CoefficientRowSerializer, DimensionRowSerializer, DimsQuerySerializer,
    ExpandQuerySerializer, VerificationReportSerializer,
)
from .services.hilbert_services import siegel_dims
from .services.verification_services import run_suite

logger = logging.getLogger(__name__)


def _query(serializer_class, request):
    serializer = serializer_class(data=request.GET)
    if not serializer.is_valid():
        raise ValidationError(f"Invalid query: {dict(serializer.errors)}")
    return serializer.validated_data


@require_http_methods(["GET"])
@handle_api_errors
def expand_form(request, form):
    """
    Coefficients of one form with a + c <= prec.

    Returns:
    {"form": "f1", "prec": 7, "coefficients": [{"form": "f1", "a": 1, "b": 0, "c": 1, "value": "1"}, ...]}
    """
    query = _query(ExpandQuerySerializer, request)
    gens = get_generator_set()
    prec = query.get('prec', gens.trunc)
    if prec > gens.trunc:
        raise PrecisionError(f"Precision {prec} exceeds the table truncation {gens.trunc}")
    rows = [
        {'form': form, 'a': a, 'b': b, 'c': c, 'value': value}
        for a, b, c, value in gens.form(form).rows(prec)
    ]
    return JsonResponse({
        'form': form,
        'prec': prec,
        'coefficients': CoefficientRowSerializer(rows, many=True).data,
    })


@require_http_methods(["GET"])
@handle_api_errors
def siegel_dimensions(request):
    """
    dim M_k of the level-5 Siegel forms for k = 1..upto.

    Returns:
    {"dimensions": [{"weight": "1", "dimension": 0}, ...]}
    """
    upto = _query(DimsQuerySerializer, request)['upto']
    rows = [{'weight': k, 'dimension': d} for k, d in enumerate(siegel_dims(upto)) if k >= 1]
    return JsonResponse({'dimensions': DimensionRowSerializer(rows, many=True).data})


@require_http_methods(["GET"])
@handle_api_errors
def verify_suite(request, suite):
    """
    Run one suite; a failing report is still a 200 with "passed": false.
    """
    report = run_suite(suite)
    if not report.passed:
        logger.warning(f"Suite {suite} reported {len(report.failures)} failures")
    return JsonResponse(VerificationReportSerializer(report).data)
