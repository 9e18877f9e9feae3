from fractions import Fraction

from django import forms
from django.conf import settings
from django.core.exceptions import NON_FIELD_ERRORS, ValidationError
from django.core.validators import MaxValueValidator, RegexValidator
from django.db import models

from .models import Family, FamilySpec

rational_validator = RegexValidator(
    r"^-?\d+(/\d+)?$",
    message="expected a rational such as 3, -1/2 or 7/3",
    code="malformed_rational",
)


class Command(models.TextChoices):
    GEN = "gen", "Moment matrix"
    DET = "det", "Determinant"
    INV = "inv", "Inverse"
    KERNEL = "kernel", "Kernel value"
    VERIFY = "verify", "Cross-check"
    ERRATA = "errata", "Printed determinant comparison"


class Method(models.TextChoices):
    EXPLICIT = "explicit", "Closed form"
    KERNEL = "kernel", "Kernel polynomial"
    ORACLE = "oracle", "Exact elimination"


class Output(models.TextChoices):
    JSON = "json", "JSON"
    CSV = "csv", "CSV"
    PRETTY = "pretty", "Pretty"


class RationalField(forms.CharField):
    """A "p" or "p/q" string, cleaned to a Fraction (None when blank)."""

    default_validators = [rational_validator]

    def clean(self, value):
        value = super().clean(value)
        if not value:
            return None
        try:
            return Fraction(value)
        except ZeroDivisionError:
            raise ValidationError("denominator must be nonzero", code="malformed_rational")


class CliRequestForm(forms.Form):
    command = forms.ChoiceField(choices=Command.choices)
    family = forms.ChoiceField(choices=Family.choices, required=False)
    n = forms.IntegerField(min_value=0)
    alpha = RationalField(required=False)
    beta = RationalField(required=False)
    lam = RationalField(required=False, label="lambda")
    method = forms.ChoiceField(choices=Method.choices, required=False)
    output = forms.ChoiceField(choices=Output.choices, required=False)
    use_float = forms.BooleanField(required=False, label="float")
    digits = forms.IntegerField(min_value=1, required=False)
    unnormalized = forms.BooleanField(required=False)
    x = RationalField(required=False)
    y = RationalField(required=False)
    grid = forms.BooleanField(required=False)

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.fields["digits"].validators.append(MaxValueValidator(settings.HANKEL_MAX_DIGITS))

    def clean(self):
        cleaned_data = super().clean()
        command = cleaned_data.get("command")
        cleaned_data["method"] = cleaned_data.get("method") or Method.EXPLICIT
        cleaned_data["output"] = cleaned_data.get("output") or Output.PRETTY

        if cleaned_data.get("unnormalized") and not cleaned_data.get("use_float"):
            raise ValidationError("--unnormalized requires --float", code="unnormalized_needs_float")

        if command == Command.KERNEL and (cleaned_data.get("x") is None or cleaned_data.get("y") is None):
            raise ValidationError("kernel requires both --x and --y", code="kernel_needs_points")

        if cleaned_data.get("grid"):
            if command != Command.VERIFY:
                raise ValidationError("--grid only applies to verify", code="grid_needs_verify")
            cleaned_data["spec"] = None
            return cleaned_data

        family = cleaned_data.get("family")
        if not family:
            if command and "family" not in self.errors:
                self.add_error("family", "This field is required.")
            return cleaned_data

        # a malformed parameter is already reported on its own field
        if any(name in self.errors for name in ("alpha", "beta", "lam")):
            return cleaned_data

        # InvalidFamilySpec is a ValidationError: it lands in non_field_errors()
        cleaned_data["spec"] = FamilySpec(
            family,
            alpha=cleaned_data.get("alpha"),
            beta=cleaned_data.get("beta"),
            lam=cleaned_data.get("lam"),
        )
        return cleaned_data


def error_message(form: CliRequestForm) -> str:
    """One line per violated constraint, field errors prefixed by the option name."""
    lines = []
    for name, errors in form.errors.items():
        if name == NON_FIELD_ERRORS:
            lines.extend(errors)
        else:
            label = form.fields[name].label or name
            lines.extend(f"--{label.replace('_', '-')}: {error}" for error in errors)
    return "\n".join(lines)

