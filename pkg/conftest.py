import os
import sys
from pathlib import Path

import django

sys.path.insert(0, str(Path(__file__).resolve().parent / "siegel5_project"))
os.environ.setdefault("DJANGO_SETTINGS_MODULE", "siegel5_project.settings")
django.setup()
