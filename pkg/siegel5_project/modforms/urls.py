from django.urls import path

from . import api_views

urlpatterns = [
    path('expand/<str:form>/', api_views.expand_form, name='expand_form'),
    path('dims/', api_views.siegel_dimensions, name='siegel_dimensions'),
    path('verify/<str:suite>/', api_views.verify_suite, name='verify_suite'),
]
