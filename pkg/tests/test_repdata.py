from fractions import Fraction
from itertools import product

import pytest

from asai_local.repdata import ExtensionType
from asai_local.repdata import LocalDatum
from asai_local.repdata import RepresentationError
from asai_local.repdata import TauDatum
from asai_local.repdata import UnramifiedRep
from asai_local.repdata import central_char_at_scalar
from asai_local.repdata import central_char_value
from asai_local.repdata import contragredient
from asai_local.repdata import delta_exponent
from asai_local.repdata import delta_value
from asai_local.repdata import unramified_twist
from asai_local.scalars import GaussRational
from asai_local.scalars import Scalar


###################
#  ExtensionType  #
###################


def test_extension_type_numbers():
    assert ExtensionType.INERT_RAMIFIED.ramification == 2
    assert ExtensionType.INERT_RAMIFIED.residue_degree == 1
    assert ExtensionType.INERT_UNRAMIFIED.ramification == 1
    assert ExtensionType.INERT_UNRAMIFIED.residue_degree == 2
    assert not ExtensionType.SPLIT.is_inert
    assert str(ExtensionType.SPLIT) == "split"


################
#  LocalDatum  #
################


@pytest.mark.parametrize("q", [2, 4, 9, 25, 27])
def test_local_datum_prime_powers(q):
    assert LocalDatum(q, "split").q == q


@pytest.mark.parametrize("q", [0, 1, 6, 12, -3])
def test_local_datum_rejects(q):
    with pytest.raises(RepresentationError):
        LocalDatum(q, "split")


def test_local_datum_residue_field_of_e():
    assert LocalDatum(3, "inert_unramified").q_e == 9
    assert LocalDatum(3, "inert_ramified").q_e == 3


def test_local_datum_unknown_type():
    with pytest.raises(ValueError):
        LocalDatum(3, "quartic")


###################
#  UnramifiedRep  #
###################


def test_rep_rank():
    rep = UnramifiedRep([2, Fraction(1, 3)])
    assert rep.n == 2
    assert rep.t == (Scalar(2), Scalar(Fraction(1, 3)))


def test_rep_rejects_zero():
    with pytest.raises(RepresentationError):
        UnramifiedRep([1, 0])


def test_rep_rejects_empty():
    with pytest.raises(RepresentationError):
        UnramifiedRep([])


def test_rep_length_mismatch():
    with pytest.raises(RepresentationError):
        UnramifiedRep([1, 2], [3])


def test_rep_check():
    with pytest.raises(RepresentationError):
        UnramifiedRep([1], [2]).check(LocalDatum(3, "inert_ramified"))
    with pytest.raises(RepresentationError):
        UnramifiedRep([1]).check(LocalDatum(3, "split"))


##############
#  TauDatum  #
##############


def test_tau_validation():
    with pytest.raises(RepresentationError):
        TauDatum(-1)
    with pytest.raises(RepresentationError):
        TauDatum(0, 2)
    assert TauDatum(1, GaussRational(0, -1)).lam == GaussRational(0, -1)


def test_tau_defaults():
    assert TauDatum.default_for(LocalDatum(5, "inert_ramified")) == TauDatum(1)
    assert TauDatum.default_for(LocalDatum(5, "inert_unramified")) == TauDatum(0)


def test_tau_for_split_data():
    assert TauDatum(3, -1).for_datum(LocalDatum(5, "split")) == TauDatum(0, 1)


####################
#  contragredient  #
####################


def test_contragredient():
    rep = UnramifiedRep([2, GaussRational(1, 1)], [Fraction(1, 3), -1])
    dual = contragredient(rep)
    assert dual.t == (Scalar(Fraction(1, 2)), Scalar(GaussRational(Fraction(1, 2), Fraction(-1, 2))))
    assert dual.u == (Scalar(3), Scalar(-1))
    assert contragredient(dual) == rep


########################
#  central characters  #
########################


def test_central_char_value():
    rep = UnramifiedRep([2, 3])
    assert central_char_value(rep, LocalDatum(3, "inert_unramified"), 2) == 36
    assert central_char_value(rep, LocalDatum(3, "inert_unramified"), 0) == 1
    assert central_char_value(UnramifiedRep([2], [3]), LocalDatum(3, "split"), 4) == 1


def test_central_char_at_scalar():
    rep = UnramifiedRep([2, 3])
    assert central_char_at_scalar(rep, LocalDatum(3, "inert_unramified"), 1) == 6
    assert central_char_at_scalar(rep, LocalDatum(3, "inert_ramified"), 1) == 36
    assert central_char_at_scalar(UnramifiedRep([2], [5]), LocalDatum(3, "split"), -1) == Fraction(1, 10)


@pytest.mark.parametrize("ext", ["split", "inert_unramified", "inert_ramified"])
@pytest.mark.parametrize("v", [-3, 0, 1, 4])
def test_central_char_of_contragredient_is_inverse(ext, v):
    u = [5, -1, Fraction(2, 7)] if ext == "split" else None
    rep = UnramifiedRep([2, GaussRational(1, 1), Fraction(1, 3)], u)
    datum = LocalDatum(5, ext)
    dual = contragredient(rep)
    assert central_char_value(dual, datum, v) * central_char_value(rep, datum, v) == 1
    assert central_char_at_scalar(dual, datum, v) * central_char_at_scalar(rep, datum, v) == 1


#################
#  delta_value  #
#################


def test_delta_exponent():
    assert delta_exponent((1, 0)) == -1
    assert delta_exponent((0, 1)) == 1
    assert delta_exponent((2, 1, 0)) == -4
    assert delta_exponent((5,)) == 0


def test_delta_value():
    datum = LocalDatum(4, "inert_unramified")
    assert delta_value(datum, "F", (1, 0)) == Fraction(1, 4)
    assert delta_value(datum, "E", (1, 0)) == Fraction(1, 16)
    assert delta_value(datum, "E", (1, 0), half=True) == Fraction(1, 4)


def test_delta_value_half_power():
    datum = LocalDatum(5, "split")
    root = delta_value(datum, "F", (1, 0), half=True)
    assert root * root == Fraction(1, 5)
    assert not root.is_rational()


def test_delta_value_over_unknown_field():
    with pytest.raises(RepresentationError):
        delta_value(LocalDatum(5, "split"), "K", (1, 0))


@pytest.mark.parametrize("ext", ["split", "inert_unramified", "inert_ramified"])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_delta_over_e_is_square_of_delta_over_f(ext, n):
    datum = LocalDatum(3, ext)
    for lam in product(range(-3, 4), repeat=n):
        assert delta_value(datum, "E", lam) == delta_value(datum, "F", lam) ** 2
        assert delta_value(datum, "E", lam, half=True) == delta_value(datum, "F", lam)


######################
#  unramified_twist  #
######################


def test_unramified_twist_inert_unramified():
    twisted = unramified_twist(UnramifiedRep([2]), LocalDatum(3, "inert_unramified"), 1)
    assert twisted.t == (Scalar(Fraction(2, 3)),)


def test_unramified_twist_ramified_half_power():
    twisted = unramified_twist(UnramifiedRep([2]), LocalDatum(3, "inert_ramified"), 1)
    assert twisted.t[0] * twisted.t[0] == Fraction(4, 3)


def test_unramified_twist_split_both_lists():
    twisted = unramified_twist(UnramifiedRep([2], [5]), LocalDatum(4, "split"), 2)
    assert twisted.t == (Scalar(Fraction(1, 2)),)
    assert twisted.u == (Scalar(Fraction(5, 4)),)
