"""Pytest wiring: configure Django the way manage.py does before collection."""
import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'core.settings')
django.setup()
