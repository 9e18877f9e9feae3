"""Configure Django before test collection (the suite uses django.test.SimpleTestCase)."""
import os

import django

os.environ.setdefault("DJANGO_SETTINGS_MODULE", "hankel_inversion.settings")
django.setup()
