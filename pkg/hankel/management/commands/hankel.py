"""
python manage.py hankel <command> --family F --n N [options]

Exact moment matrices of the classical weights, their determinants, inverses
and reproducing-kernel values; cross-checks against exact elimination; and the
floating comparison with the printed Barnes-G determinants.
"""
import logging
import re

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError
from mpmath import mp

from hankel import families, oracle
from hankel.forms import CliRequestForm, Command as Action, Method, Output, error_message
from hankel.gram_engine import (
    det_from_norms,
    gram_schmidt,
    kernel_eval,
    kernel_from_inverse,
    kernel_inverse,
    moment_matrix,
)
from hankel.models import Family
from hankel.opoly import gram_basis
from hankel.serializers import (
    DetResultSerializer,
    DiscrepancyNoteSerializer,
    KernelResultSerializer,
    MatrixResultSerializer,
    VerifyReportSerializer,
    format_scalar,
    render_csv,
    render_json,
    render_pretty_matrix,
)

logger = logging.getLogger("hankel")

FORM_FIELDS = (
    "command", "family", "n", "alpha", "beta", "lam", "method", "output",
    "use_float", "digits", "unnormalized", "x", "y", "grid",
)

NEGATIVE_RATIONAL = re.compile(r"^-\d+(/\d+)?$|^-\d*\.\d+$")


class Command(BaseCommand):
    help = "Exact Hankel moment matrices of the classical orthogonal-polynomial weights."

    def add_arguments(self, parser):
        parser.add_argument("command", choices=Action.values)
        parser.add_argument("--family", choices=Family.values)
        parser.add_argument("--n", type=int, help="matrix size is n+1 (verify --grid: largest n)")
        # "-1/2" is a value, not an option
        parser._negative_number_matcher = NEGATIVE_RATIONAL
        parser.add_argument("--alpha", help='rational "p" or "p/q"')
        parser.add_argument("--beta", help='rational "p" or "p/q"')
        parser.add_argument("--lambda", dest="lam", help='rational "p" or "p/q"')
        parser.add_argument("--method", choices=Method.values, default=Method.EXPLICIT)
        parser.add_argument("--output", choices=Output.values, default=Output.PRETTY)
        parser.add_argument("--float", dest="use_float", action="store_true")
        parser.add_argument("--digits", type=int,
                            help="significant digits in float mode (JSON gives strings above 17)")
        parser.add_argument("--unnormalized", action="store_true",
                            help="scale by the weight's total mass (float mode only)")
        parser.add_argument("--x")
        parser.add_argument("--y")
        parser.add_argument("--grid", action="store_true",
                            help="verify every family in the reference grid for n = 0..N")

    def handle(self, *args, **options):
        if options["verbosity"] > 1:
            logger.setLevel(logging.DEBUG)

        form = CliRequestForm(data={name: options.get(name) for name in FORM_FIELDS})
        if not form.is_valid():
            raise CommandError(error_message(form), returncode=2)
        request = form.cleaned_data
        logger.debug("request %s", {k: v for k, v in request.items() if v not in (None, False)})

        handler = getattr(self, f"handle_{request['command']}")
        handler(request)

    # ---------------------------
    # helpers
    # ---------------------------
    def _digits(self, request, default=None):
        return request["digits"] or default or settings.HANKEL_DEFAULT_DIGITS

    def _base(self, request, **extra):
        spec = request["spec"]
        data = {
            "family": spec.family.value,
            "n": request["n"],
            "params": spec.params,
            "normalized": not request["unnormalized"],
        }
        data.update(extra)
        return data

    def _to_float(self, request, value, power=0):
        """value * scale**power in float mode, unchanged in exact mode."""
        if not request["use_float"]:
            return value
        digits = self._digits(request)
        converted = families.as_float(value, digits)
        if request["unnormalized"] and power:
            scale = families.unnormalized_scale(request["spec"], digits)
            with mp.workdps(digits):
                converted = +(converted * scale ** power)
        return converted

    def _float_matrix(self, request, matrix, power):
        return [[self._to_float(request, x, power) for x in row] for row in matrix.rows()]

    def _emit_matrix(self, request, serializer_class, data):
        output = request["output"]
        digits = self._digits(request)
        if output == Output.JSON:
            self.stdout.write(render_json(serializer_class(data, context={"digits": digits}).data))
            return
        rows = [[format_scalar(x, digits) for x in row] for row in data["result"]]
        if output == Output.CSV:
            self.stdout.write(render_csv(rows))
        else:
            self.stdout.write(render_pretty_matrix(rows))

    def _emit_scalar(self, request, serializer_class, data):
        output = request["output"]
        digits = self._digits(request)
        if output == Output.JSON:
            self.stdout.write(render_json(serializer_class(data, context={"digits": digits}).data))
            return
        cell = format_scalar(data["result"], digits)
        self.stdout.write(render_csv([[cell]]) if output == Output.CSV else cell)

    # ---------------------------
    # commands
    # ---------------------------
    def handle_gen(self, request):
        matrix = moment_matrix(request["spec"], request["n"])
        self._emit_matrix(request, MatrixResultSerializer, self._base(
            request, result=self._float_matrix(request, matrix, 1),
        ))

    def handle_inv(self, request):
        spec, n, method = request["spec"], request["n"], request["method"]
        extra = {"method": method}
        if method == Method.EXPLICIT:
            explicit = families.explicit_result(spec, n, "inv")
            inverse = explicit.value
            extra["formula"] = explicit.formula_id.value
        elif method == Method.KERNEL:
            inverse = kernel_inverse(gram_schmidt(spec, n))
        else:
            inverse = oracle.gauss_inverse(moment_matrix(spec, n))
        self._emit_matrix(request, MatrixResultSerializer, self._base(
            request, result=self._float_matrix(request, inverse, -1), **extra,
        ))

    def handle_det(self, request):
        spec, n, method = request["spec"], request["n"], request["method"]
        extra = {"method": method}
        if method == Method.EXPLICIT:
            explicit = families.explicit_result(spec, n, "det")
            det = explicit.value
            extra["formula"] = explicit.formula_id.value
        elif method == Method.KERNEL:
            det = det_from_norms(gram_schmidt(spec, n))
        else:
            det = oracle.bareiss_det(moment_matrix(spec, n))
        det = self._to_float(request, det, n + 1)
        self._emit_scalar(request, DetResultSerializer, self._base(
            request, result=det, det=det, **extra,
        ))

    def handle_kernel(self, request):
        spec, n, method = request["spec"], request["n"], request["method"]
        x, y = request["x"], request["y"]
        basis = gram_basis(spec)
        if method == Method.EXPLICIT:
            value = kernel_from_inverse(families.explicit_inverse(spec, n), basis, x, y)
        elif method == Method.KERNEL:
            value = kernel_eval(gram_schmidt(spec, n), x, y)
        else:
            value = oracle.bordered_kernel(moment_matrix(spec, n), basis, x, y)
        value = self._to_float(request, value, -1)
        self._emit_scalar(request, KernelResultSerializer, self._base(
            request, method=method, x=x, y=y, result=value,
        ))

    def handle_verify(self, request):
        if request["grid"]:
            reports = oracle.verify_grid(request["n"])
        else:
            reports = [oracle.verify(request["spec"], request["n"])]

        output = request["output"]
        if output == Output.JSON:
            self.stdout.write(render_json(VerifyReportSerializer(reports, many=True).data))
        elif output == Output.CSV:
            rows = [["family", "params", "n", "check", "passed", "i", "j", "expected", "actual"]]
            for report in reports:
                params = " ".join(f"{k}={format_scalar(v)}" for k, v in report.spec.params.items())
                for check in report.checks:
                    rows.append([
                        report.spec.family.value, params, report.n, check.name, check.passed,
                        "" if check.i is None else check.i,
                        "" if check.j is None else check.j,
                        "" if check.expected is None else format_scalar(check.expected),
                        "" if check.actual is None else format_scalar(check.actual),
                    ])
            self.stdout.write(render_csv(rows))
        else:
            lines = []
            for report in reports:
                lines.append(f"{'PASS' if report.passed else 'FAIL'} {report.spec} n={report.n}")
                for check in report.failures:
                    where = "" if check.i is None else f" at ({check.i}, {check.j})"
                    expected = "" if check.expected is None else f" expected {format_scalar(check.expected)}"
                    lines.append(f"  {check.name}{where}:{expected} got {format_scalar(check.actual)}")
            self.stdout.write("\n".join(lines))

        failed = sum(not report.passed for report in reports)
        if failed:
            raise CommandError(f"{failed} of {len(reports)} verifications failed", returncode=1)

    def handle_errata(self, request):
        digits = self._digits(request, settings.HANKEL_ERRATA_DIGITS)
        note = families.as_printed_det(request["spec"], request["n"], digits)

        output = request["output"]
        if output == Output.JSON:
            self.stdout.write(render_json(DiscrepancyNoteSerializer(note, context={"digits": digits}).data))
            return

        def show(value):
            return "undefined" if value is None else format_scalar(value, digits)

        rows = [
            ["formula", note.formula_id],
            ["spec", str(note.spec)],
            ["n", note.n],
            ["printed", show(note.printed_value)],
            ["reference", show(note.reference_value)],
            ["exact", format_scalar(note.exact_value)],
            ["relative_error", show(note.relative_error)],
            ["verdict", "match" if note.agrees else "mismatch"],
        ]
        if note.printed_matrix_det is not None:
            rows.append(["printed_matrix_det", format_scalar(note.printed_matrix_det)])
        if note.note:
            rows.append(["note", note.note])

        if output == Output.CSV:
            self.stdout.write(render_csv(rows))
        else:
            width = max(len(key) for key, _ in rows)
            self.stdout.write("\n".join(f"{key.ljust(width)}  {value}" for key, value in rows))
