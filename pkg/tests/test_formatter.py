import yaml

from asai_local.formatter_ import Formatter
from asai_local.formatter_ import format_complex
from asai_local.formatter_ import format_residual
from asai_local.repdata import LocalDatum
from asai_local.repdata import TauDatum
from asai_local.repdata import UnramifiedRep
from asai_local.report import FAIL
from asai_local.report import VerifyReport
from asai_local.scalars import Scalar


####################
#  format_complex  #
####################


def test_format_complex():
    assert format_complex(complex(0.5, 1.25)) == "0.5+1.25i"
    assert format_complex(complex(2, -1)) == "2-1i"
    assert format_complex(3.0) == "3"


def test_format_residual():
    assert format_residual(0.000123456) == "1.23e-04"


###################
#  format_record  #
###################


def test_format_passing_records():
    format_ = Formatter()
    reports = [
        VerifyReport("unramified", {"q": 3, "ext": "split", "n": 2}),
        VerifyReport("tate", {"char": "R,1,0", "s": complex(0.5, 1.25)}),
    ]
    assert format_(reports) == [
        "case=unramified q=3 ext=split n=2 status=pass",
        "case=tate char=R,1,0 s=0.5+1.25i status=pass",
    ]


def test_format_failing_record():
    report = VerifyReport("fe", {"q": 3, "t": [1, 2]}, FAIL, 4, Scalar(1), Scalar(2), "note=extra")
    expected = "case=fe q=3 t=1,2 status=fail mismatch_degree=4 lhs=1 rhs=2 note=extra"
    assert Formatter().format_record(report) == expected


####################
#  format_factors  #
####################


def test_format_factors_rank_one_ramified():
    datum = LocalDatum(5, "inert_ramified")
    lines = Formatter().format_factors("rank-one", UnramifiedRep([2]), datum, TauDatum(1))
    assert lines[0] == "case=rank-one q=5 ext=inert_ramified n=1 d=1 lam=1"
    assert lines[1] == "L = prod (1 - 4 X^1)^-1"
    assert lines[2] == "eps = 1"
    assert lines[3].startswith("gamma = ")
    assert lines[4] == "eps(1/2) = 1"
    assert lines[5].startswith("pole_real_parts = 0.8613")


####################
#  format_summary  #
####################


def test_format_summary():
    reports = {
        "fe": [VerifyReport("fe"), VerifyReport("fe", status=FAIL)],
        "schur": [VerifyReport("schur")],
    }
    summary = yaml.safe_load(Formatter().format_summary(reports))
    assert list(summary) == ["fe", "schur", "total"]
    assert summary["fe"] == {"cases": 2, "passed": 1, "failed": 1}
    assert summary["total"] == {"cases": 3, "passed": 2, "failed": 1}
