from fractions import Fraction

from django.apps import apps
from django.test import SimpleTestCase

from hankel.serializers import DetResultSerializer, render_json


class InstalledAppsTests(SimpleTestCase):
    def test_no_auth_or_contenttypes(self):
        self.assertFalse(apps.is_installed("django.contrib.auth"))
        self.assertFalse(apps.is_installed("django.contrib.contenttypes"))
        self.assertTrue(apps.is_installed("rest_framework"))

    def test_serializers_render_without_auth(self):
        data = {"family": "hermite", "n": 0, "params": {}, "result": Fraction(1), "det": Fraction(1)}
        self.assertIn("\"det\":\"1\"", render_json(DetResultSerializer(data).data))
