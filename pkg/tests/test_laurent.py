from fractions import Fraction

import pytest

from asai_local.laurent import EulerProduct
from asai_local.laurent import LaurentPoly
from asai_local.laurent import Monomial
from asai_local.laurent import RatFunc
from asai_local.laurent import SeriesError
from asai_local.laurent import SeriesTruncation
from asai_local.laurent import ratfunc_equal
from asai_local.laurent import series_expand
from asai_local.laurent import subst_one_minus_s
from asai_local.laurent import subst_scale
from asai_local.scalars import FieldMismatchError
from asai_local.scalars import GaussRational
from asai_local.scalars import Scalar


@pytest.fixture
def one_minus_x() -> LaurentPoly:
    return LaurentPoly({0: 1, 1: -1})


@pytest.fixture
def one_plus_x() -> LaurentPoly:
    return LaurentPoly({0: 1, 1: 1})


###################
#  series_expand  #
###################


def test_series_expand_geometric():
    expected = SeriesTruncation(3, [1, 2, 4, 8])
    assert series_expand(EulerProduct([(2, 1)]), 3) == expected
    assert series_expand(RatFunc(LaurentPoly.constant(1), LaurentPoly({0: 1, 1: -2})), 3) == expected


def test_series_expand_constant():
    assert series_expand(RatFunc(LaurentPoly.constant(1)), 2) == SeriesTruncation(2, [1, 0, 0])


def test_series_expand_two_factors():
    a = Scalar(GaussRational(1, 2))
    b = Scalar(Fraction(-1, 3))
    series = series_expand(EulerProduct([(a, 1), (b, 1)]), 2)
    assert list(series.coeffs) == [1, a + b, a * a + a * b + b * b]


def test_series_expand_negative_exponent():
    with pytest.raises(SeriesError, match="-1"):
        series_expand(RatFunc(LaurentPoly({-1: 1, 0: 1})), 2)


def test_series_expand_negative_bound():
    with pytest.raises(SeriesError):
        series_expand(EulerProduct(), -1)


def test_series_expand_of_product_is_convolution():
    f = EulerProduct([(2, 1), (Fraction(1, 3), 2)])
    g = RatFunc(LaurentPoly({0: 1, 3: 5}), LaurentPoly({0: 1, 1: GaussRational(0, 1)}))
    product = f.to_ratfunc() * g
    assert series_expand(product, 9) == series_expand(f, 9) * series_expand(g, 9)


def test_euler_product_series_matches_ratfunc_series():
    f = EulerProduct([(3, 1), (Scalar(1, 1, 5), 2), (Fraction(-1, 2), 3)])
    assert series_expand(f, 10) == series_expand(f.to_ratfunc(), 10)


def test_series_truncation_length():
    with pytest.raises(SeriesError):
        SeriesTruncation(2, [1, 2])


def test_series_expand_over_sqrt_q():
    root = Scalar(0, 1, 5)
    expected = SeriesTruncation(3, [1, root, 5, 5 * root])
    assert series_expand(EulerProduct([(root, 1)]), 3) == expected


def test_series_truncation_product():
    geometric = SeriesTruncation(3, [1, 1, 1, 1])
    assert geometric * SeriesTruncation(2, [1, -1, 0]) == SeriesTruncation(2, [1, 0, 0])


#######################
#  subst_one_minus_s  #
#######################


def test_subst_one_minus_s_on_euler_factor():
    t = Scalar(3)
    result = subst_one_minus_s(EulerProduct([(t, 1)]), 5)
    expected = RatFunc(LaurentPoly({1: 1}), LaurentPoly({0: -t / 5, 1: 1}))
    assert ratfunc_equal(result, expected)


def test_subst_one_minus_s_is_an_involution():
    f = RatFunc(LaurentPoly({0: 2, 2: Scalar(0, 1, 7)}), LaurentPoly({0: 1, 1: -3, 4: 1}))
    assert ratfunc_equal(subst_one_minus_s(subst_one_minus_s(f, 7), 7), f)


def test_subst_one_minus_s_on_monomial():
    assert subst_one_minus_s(Monomial(3, 2), 5) == Monomial(Fraction(3, 25), -2)
    assert subst_one_minus_s(Monomial(3, -1), 5) == Monomial(15, 1)


#################
#  subst_scale  #
#################


def test_subst_scale_euler_product():
    assert subst_scale(EulerProduct([(2, 1), (3, 2)]), Fraction(1, 5)) == EulerProduct(
        [(Fraction(2, 5), 1), (Fraction(3, 25), 2)]
    )


def test_subst_scale_ratfunc_matches_euler_product():
    f = EulerProduct([(2, 1), (3, 2)])
    c = Scalar(0, 1, 3)
    assert ratfunc_equal(subst_scale(f.to_ratfunc(), c), subst_scale(f, c).to_ratfunc())


###################
#  ratfunc_equal  #
###################


def test_ratfunc_equal_after_cancellation(one_minus_x, one_plus_x):
    f = RatFunc(LaurentPoly({0: 1, 2: -1}), one_minus_x)
    assert ratfunc_equal(f, RatFunc(one_plus_x))


def test_ratfunc_not_equal(one_minus_x, one_plus_x):
    assert not ratfunc_equal(RatFunc(one_minus_x), RatFunc(one_plus_x))


def test_ratfunc_equal_factor_order():
    t = [Scalar(2), Scalar(GaussRational(1, 1)), Scalar(Fraction(1, 3))]
    forward = EulerProduct((x, 1) for x in t)
    backward = EulerProduct((x, 1) for x in reversed(t))
    assert forward == backward
    assert ratfunc_equal(forward.to_ratfunc(), backward.to_ratfunc())


def test_ratfunc_equal_is_symmetric_and_transitive():
    f = RatFunc(LaurentPoly({0: 2, 1: 2}), LaurentPoly({0: 2, 2: -2}))
    g = RatFunc(LaurentPoly.constant(1), LaurentPoly({0: 1, 1: -1}))
    h = RatFunc(LaurentPoly({1: 3}), LaurentPoly({1: 3, 2: -3}))
    assert ratfunc_equal(f, g) and ratfunc_equal(g, f)
    assert ratfunc_equal(g, h) and ratfunc_equal(f, h)


def test_ratfunc_normalization():
    f = RatFunc(LaurentPoly({1: 2}), LaurentPoly({1: 2, 2: 4}))
    assert f.den == LaurentPoly({0: 1, 1: 2})
    assert f.num == LaurentPoly.constant(1)


def test_ratfunc_zero_denominator():
    with pytest.raises(SeriesError):
        RatFunc(LaurentPoly.constant(1), LaurentPoly())


#################
#  LaurentPoly  #
#################


def test_laurent_poly_joins_fields():
    product = LaurentPoly({0: GaussRational(0, 1)}) * LaurentPoly({1: Scalar(0, 1, 5)})
    assert product.field.q == 5
    assert product.coefficient(1) == Scalar(0, GaussRational(0, 1), 5)
    assert product.coefficient(0) == 0


def test_laurent_poly_field_mismatch():
    with pytest.raises(FieldMismatchError):
        LaurentPoly({0: Scalar(0, 1, 5)}) + LaurentPoly({0: Scalar(0, 1, 7)})


def test_laurent_poly_shift_and_substitute():
    assert LaurentPoly({0: 1}).shift(-2) == LaurentPoly({-2: 1})
    # X -> 2/X
    assert LaurentPoly({1: 3, -1: 1}).substitute(Scalar(2), -1) == LaurentPoly({-1: 6, 1: Fraction(1, 2)})


def test_laurent_poly_equality_across_fields():
    assert LaurentPoly({0: Scalar(2, 0, 5)}) == LaurentPoly.constant(2)
    assert hash(LaurentPoly({0: Scalar(2, 0, 5)})) == hash(LaurentPoly.constant(2))


def test_euler_product_ratfunc_is_shared():
    assert EulerProduct([(2, 1), (3, 2)]).to_ratfunc() is EulerProduct([(3, 2), (2, 1)]).to_ratfunc()


#################
#  as_monomial  #
#################


def test_as_monomial_after_cancellation(one_minus_x):
    f = RatFunc(LaurentPoly({2: 3, 3: -3}), one_minus_x)
    assert f.as_monomial() == Monomial(3, 2)


def test_as_monomial_of_non_monomial(one_minus_x, one_plus_x):
    assert RatFunc(one_plus_x, one_minus_x).as_monomial() is None
    assert RatFunc(LaurentPoly()).as_monomial() is None


##############
#  printing  #
##############


def test_euler_product_text():
    assert str(EulerProduct([(4, 1)])) == "prod (1 - 4 X^1)^-1"
    assert str(EulerProduct([(3, 2), (GaussRational(1, 1), 1)])) == "prod (1 - (1+i) X^1)^-1 (1 - 3 X^2)^-1"


def test_euler_product_drops_zero_factors():
    assert EulerProduct([(0, 1), (2, 1)]) == EulerProduct([(2, 1)])
    assert str(EulerProduct()) == "1"


def test_laurent_poly_text():
    assert str(LaurentPoly({0: 1, 1: -4})) == "1 - 4*X^1"
    assert str(LaurentPoly({-1: 1, 2: Fraction(1, 2)})) == "X^-1 + 1/2*X^2"
    assert str(LaurentPoly()) == "0"


def test_monomial_text():
    assert str(Monomial(1)) == "1"
    assert str(Monomial(Scalar(0, Fraction(1, 5), 5), -1)) == "1/5*sqrtq * X^-1"


def test_monomial_needs_nonzero_coefficient():
    with pytest.raises(SeriesError):
        Monomial(0, 3)
