import json
import sys
from typing import Any, Callable, Dict, Mapping, Optional, TextIO, Tuple

from umbralab.components import functions, identities, polys
from umbralab.components.functions import FnEvalResult
from umbralab.components.identities import IdentityReport
from umbralab.components.sweep_manager import SweepManager, SweepSpec
from umbralab.components.table_builder import TableBuilder, nan_to_none
from umbralab.errors import DomainError
from umbralab.utils import special_core
from umbralab.utils.param_utils import format_value

# name -> (evaluator, argument names in call order)
FUNCTIONS: Dict[str, Tuple[Callable[..., Any], Tuple[str, ...]]] = {
    'gamma': (special_core.gamma, ('x',)),
    'log_gamma': (special_core.log_gamma, ('x',)),
    'recip_gamma1p': (special_core.recip_gamma1p, ('mu',)),
    'bessel_j': (functions.bessel_j, ('nu', 'x')),
    'bessel_j_scaled': (functions.bessel_j_scaled, ('nu', 'u')),
    'sph_bessel': (functions.sph_bessel, ('n', 'x')),
    'f_n_combo': (functions.f_n_combo, ('n', 'x', 'a', 'b')),
    'struve_h': (functions.struve_h, ('nu', 'x')),
    'wright': (functions.wright_w, ('alpha', 'beta', 'x')),
    'mittag_leffler': (functions.mittag_leffler, ('alpha', 'beta', 'x')),
    'hermite2': (polys.hermite2, ('n', 'x', 'y')),
    'bpoly': (polys.bpoly, ('n', 'x', 'y', 'nu')),
    'hermite_gf_coeff': (polys.hermite_gf_coeff, ('n', 'x', 'y')),
    'bpoly_gf_coeff': (polys.bpoly_gf_coeff, ('n', 'x', 'y', 'nu')),
}

COUNT_ARGS = {'n'}


class IdentityLabApp:
    """Runs the eval / verify / table / list commands and writes their output."""
    def __init__(self, out: Optional[TextIO] = None):
        self._out = out

    @property
    def out(self) -> TextIO:
        return self._out or sys.stdout

    def _print(self, text: str = "") -> None:
        print(text, file=self.out)

    # eval

    def evaluate(self, fn_name: str, args: Mapping[str, Any]) -> FnEvalResult:
        if fn_name not in FUNCTIONS:
            raise DomainError(f"unknown function {fn_name!r}; known: {', '.join(FUNCTIONS)}")
        fn, names = FUNCTIONS[fn_name]
        missing = [n for n in names if n not in args]
        extra = sorted(set(args) - set(names))
        if missing or extra:
            raise DomainError(f"{fn_name} takes {', '.join(names)}"
                              + (f"; missing {', '.join(missing)}" if missing else "")
                              + (f"; unexpected {', '.join(extra)}" if extra else ""))
        call_args = []
        for name in names:
            value = args[name]
            if isinstance(value, tuple):
                raise DomainError(f"argument {name} must be a single number")
            if name in COUNT_ARGS:
                if value != int(value) or value < 0:
                    raise DomainError(f"argument {name} must be a non-negative integer, got {value}")
                value = int(value)
            call_args.append(value)
        result = fn(*call_args)
        if isinstance(result, FnEvalResult):
            return result
        return FnEvalResult(value=float(result), terms_used=0, truncation_flag=False)

    def cmd_eval(self, fn_name: str, args: Mapping[str, Any]) -> int:
        result = self.evaluate(fn_name, args)
        self._print(f"{result.value:.15g}")
        self._print(f"terms_used={result.terms_used}")
        self._print(f"truncation_flag={format_value(result.truncation_flag)}")
        return 0

    # verify

    def _report_text(self, report: IdentityReport) -> str:
        lines = [f"identity: {report.id}",
                 "params: " + ", ".join(f"{k}={format_value(v)}" for k, v in report.params.items()),
                 f"status: {report.status}"]
        if report.status is not identities.ReportStatus.CONSTRAINT_VIOLATION:
            lines.append(f"closed_value: {format_value(report.closed_value)}")
        if report.oracle is not None:
            lines += [f"oracle_value: {format_value(report.oracle.value)}",
                      f"oracle_status: {report.oracle.status}",
                      f"abs_err: {report.abs_err:.3e}",
                      f"rel_err: {report.rel_err:.3e}",
                      f"tolerance_used: {report.tolerance_used:.3e}",
                      f"route: {report.route}",
                      f"evaluations: {report.oracle.evaluations}"]
        if report.message:
            lines.append(f"message: {report.message}")
        return "\n".join(lines)

    def _report_json(self, report: IdentityReport) -> str:
        record = {k: nan_to_none(v) for k, v in report.to_record().items()}
        record['passed'] = report.passed
        return json.dumps(record, indent=2)

    def cmd_verify(self, identity_id: str, params: Mapping[str, Any], tol_abs: Optional[float] = None,
                   tol_rel: Optional[float] = None, output_format: str = "text") -> int:
        report = identities.verify(identity_id, params, tol_abs, tol_rel)
        text = self._report_json(report) if output_format == "json" else self._report_text(report)
        self._print(text)
        if report.status is identities.ReportStatus.CONSTRAINT_VIOLATION:
            print(f"error: {report.id}: {report.message}", file=sys.stderr)
        return report.status.exit_code

    # table

    def cmd_table(self, spec: SweepSpec) -> int:
        reports = SweepManager(spec).run()
        builder = TableBuilder(reports)
        rendered = builder.render(spec.output_format, spec.out_path)
        if rendered is not None:
            self.out.write(rendered if rendered.endswith("\n") else rendered + "\n")
        return builder.exit_code()

    # list

    def cmd_list(self) -> int:
        for row in identities.list_identities():
            self._print(f"{row['id']}")
            self._print(f"    params: {row['params']}")
            self._print(f"    route: {row['route']}   umbral reduction: {row['umbral']}")
            self._print(f"    {row['description']}")
        return 0
