"""For converting verification reports and factors to text before output.

The Formatter class' callable renders each report as one
``key=value`` record line. It can also render the factors of a single
case and a YAML summary of a whole run.
"""
from typing import Any
from typing import Dict
from typing import Iterable
from typing import List
from typing import Sequence

import yaml  # https://pyyaml.org/wiki/PyYAMLDocumentation

from asai_local.factors import asai_L
from asai_local.factors import asai_epsilon
from asai_local.factors import asai_gamma
from asai_local.factors import pole_report
from asai_local.factors import root_number
from asai_local.repdata import LocalDatum
from asai_local.repdata import TauDatum
from asai_local.repdata import UnramifiedRep
from asai_local.report import VerifyReport


def format_complex(z: complex, digits: int = 10) -> str:
    """Renders a complex float without spaces, e.g. ``0.5+1.25i``."""
    z = complex(z)
    if z.imag == 0:
        return f"{z.real:.{digits}g}"
    return f"{z.real:.{digits}g}{z.imag:+.{digits}g}i"


def format_residual(residual: float) -> str:
    """Renders a residual in scientific notation with 3 significant digits."""
    return f"{residual:.2e}"


def _field(value: Any) -> str:
    if isinstance(value, complex):
        return format_complex(value)
    if isinstance(value, (list, tuple)):
        return ",".join(_field(v) for v in value)
    return str(value).replace(" ", "")


class Formatter:
    """Creates a Callable that converts reports to record lines."""

    def __call__(self, reports: Iterable[VerifyReport]) -> List[str]:
        """Formats reports for output.

        Parameters
        ----------
        reports : Iterable[VerifyReport]
            The reports to format, in output order.
        """
        return [self.format_record(report) for report in reports]

    def format_record(self, report: VerifyReport) -> str:
        """Renders ``case=.. <params> status=.. [mismatch_degree=.. lhs=.. rhs=..]``."""
        fields = [f"case={report.case}"]
        fields.extend(f"{key}={_field(value)}" for key, value in report.params.items())
        fields.append(f"status={report.status}")
        if report.mismatch_degree is not None:
            fields.append(f"mismatch_degree={report.mismatch_degree}")
            fields.append(f"lhs={_field(report.lhs)}")
            fields.append(f"rhs={_field(report.rhs)}")
        if report.note:
            fields.append(report.note)
        return " ".join(fields)

    def format_factors(
        self, name: str, rep: UnramifiedRep, datum: LocalDatum, tau: TauDatum
    ) -> List[str]:
        """Renders the L-, epsilon- and gamma-factors of one case.

        Returns
        -------
        List[str]
            A header record, then ``L = ..``, ``eps = ..``,
            ``gamma = ..``, ``eps(1/2) = ..`` and ``pole_real_parts = ..``.
        """
        tau = tau.for_datum(datum)
        L = asai_L(rep, datum)
        poles = pole_report(L, datum.q)
        real_parts = ", ".join(f"{pole.real:.6g}" for pole in poles) or "none"
        return [
            f"case={name} q={datum.q} ext={datum.ext} n={rep.n} d={tau.d} lam={tau.lam}",
            f"L = {L}",
            f"eps = {asai_epsilon(rep, datum, tau)}",
            f"gamma = {asai_gamma(rep, datum, tau)}",
            f"eps(1/2) = {root_number(rep, datum, tau)}",
            f"pole_real_parts = {real_parts}",
        ]

    def format_summary(self, reports_by_suite: Dict[str, Sequence[VerifyReport]]) -> str:
        """Dumps the pass and fail counts of each suite as YAML."""
        summary: Dict[str, Dict[str, int]] = {}
        total_passed = total_failed = 0
        for suite, reports in reports_by_suite.items():
            passed = sum(1 for report in reports if report.passed)
            failed = len(reports) - passed
            summary[suite] = {"cases": len(reports), "passed": passed, "failed": failed}
            total_passed += passed
            total_failed += failed
        summary["total"] = {
            "cases": total_passed + total_failed,
            "passed": total_passed,
            "failed": total_failed,
        }
        return yaml.safe_dump(summary, sort_keys=False)
