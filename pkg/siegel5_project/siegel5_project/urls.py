"""
URL configuration for siegel5_project.

Only the read-only toolkit API is routed; there are no HTML pages.
"""
from django.urls import path, include

urlpatterns = [
    path('api/', include('modforms.urls')),
]
