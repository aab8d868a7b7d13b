"""Verification outcomes.

A mismatch is never an exception: every check returns a ``VerifyReport``
and the CLI decides the exit code from the statuses.
"""
from typing import Any
from typing import Dict
from typing import Optional

from asai_local.laurent import SeriesTruncation
from asai_local.laurent import as_ratfunc
from asai_local.laurent import ratfunc_equal
from asai_local.scalars import Scalar


PASS = "pass"
FAIL = "fail"


class VerifyReport:
    """The outcome of one verification case.

    Attributes
    ----------
    case : str
        The name of the case.
    params : Dict[str, Any]
        The parameters echoed in the report record, in display order.
    status : str
        Either ``"pass"`` or ``"fail"``.
    mismatch_degree : int, None
        The first X-degree where the two sides differ.
    lhs : Scalar, None
        The left-hand coefficient at the mismatching degree.
    rhs : Scalar, None
        The right-hand coefficient at the mismatching degree.
    note : str, None
        Extra information shown at the end of the record.
    """

    def __init__(
        self,
        case: str,
        params: Optional[Dict[str, Any]] = None,
        status: str = PASS,
        mismatch_degree: Optional[int] = None,
        lhs: Optional[Scalar] = None,
        rhs: Optional[Scalar] = None,
        note: Optional[str] = None,
    ):
        self.case = case
        self.params: Dict[str, Any] = dict(params or {})
        self.status = status
        self.mismatch_degree = mismatch_degree
        self.lhs = lhs
        self.rhs = rhs
        self.note = note

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def __repr__(self) -> str:
        return f"VerifyReport(case={self.case!r}, status={self.status!r})"


def compare_series(
    case: str,
    params: Dict[str, Any],
    lhs: SeriesTruncation,
    rhs: SeriesTruncation,
    offset: int = 0,
) -> VerifyReport:
    """Compares two truncated series coefficient by coefficient.

    Parameters
    ----------
    case : str
        The name of the case.
    params : Dict[str, Any]
        The parameters to echo.
    lhs, rhs : SeriesTruncation
        The two sides. Only the common range of degrees is compared.
    offset : int, optional
        Added to the index to report the X-degree of a mismatch, for
        series that start at ``X^offset``.
    """
    for k in range(min(len(lhs), len(rhs))):
        if lhs[k] != rhs[k]:
            return VerifyReport(case, params, FAIL, k + offset, lhs[k], rhs[k])
    return VerifyReport(case, params)


def compare_ratfuncs(case: str, params: Dict[str, Any], f: Any, g: Any) -> VerifyReport:
    """Compares two rational functions exactly.

    On a mismatch the report holds the lowest degree where the
    cross-multiplied numerators ``f.num * g.den`` and ``g.num * f.den``
    differ, with their coefficients there.
    """
    if ratfunc_equal(f, g):
        return VerifyReport(case, params)
    f = as_ratfunc(f)
    g = as_ratfunc(g)
    left = f.num * g.den
    right = g.num * f.den
    degree = min(e for e in set(left.coeffs) | set(right.coeffs) if left.coefficient(e) != right.coefficient(e))
    return VerifyReport(case, params, FAIL, degree, left.coefficient(degree), right.coefficient(degree))


def case_params(datum: Any, rep: Any, **extra: Any) -> Dict[str, Any]:
    """Collects the ``q``, ``ext`` and ``n`` fields of a record, then any extras."""
    params: Dict[str, Any] = {"q": datum.q, "ext": str(datum.ext), "n": rep.n}
    params.update(extra)
    return params
