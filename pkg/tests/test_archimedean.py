import cmath
import math

import numpy as np
import pytest

from asai_local.archimedean import ArchCharacter
from asai_local.archimedean import ArchimedeanError
from asai_local.archimedean import ConvergenceError
from asai_local.archimedean import GammaFactor
from asai_local.archimedean import arch_asai_L_n1
from asai_local.archimedean import contour_reconstruct
from asai_local.archimedean import demo_function
from asai_local.archimedean import fourier_scalar
from asai_local.archimedean import fourier_transform_numeric
from asai_local.archimedean import gamma_C
from asai_local.archimedean import gamma_R
from asai_local.archimedean import gamma_factor_eval
from asai_local.archimedean import restrict_to_real
from asai_local.archimedean import schwartz_function
from asai_local.archimedean import tate_L
from asai_local.archimedean import tate_epsilon
from asai_local.archimedean import tate_fe_residual
from asai_local.archimedean import tate_zeta_numeric


TRIVIAL = ArchCharacter("R")
SGN = ArchCharacter("R", 1)
GAMMA_R = GammaFactor([("R", 0)])


def reconstruct(s, x_max=None):
    return contour_reconstruct(2.0, demo_function, lambda z: demo_function(-z), s, x_max)


#######################
#  gamma_factor_eval  #
#######################


def test_gamma_R_values():
    assert gamma_factor_eval(GAMMA_R, 1) == pytest.approx(1, abs=1e-12)
    assert gamma_factor_eval(GAMMA_R, 2) == pytest.approx(1 / math.pi, abs=1e-12)


def test_gamma_C_value():
    assert gamma_factor_eval(GammaFactor([("C", 0)]), 1) == pytest.approx(1 / math.pi, abs=1e-12)


def test_gamma_duplication_grid():
    for a in np.linspace(0.2, 3.0, 10):
        for b in np.linspace(-5.0, 5.0, 10):
            s = complex(a, b)
            assert abs(gamma_C(s) - gamma_R(s) * gamma_R(s + 1)) <= 1e-10 * abs(gamma_C(s))


def test_gamma_factor_product():
    G = GammaFactor([("R", 0)]) * GammaFactor([("R", 1)])
    assert gamma_factor_eval(G, 0.7) == pytest.approx(gamma_C(0.7), rel=1e-12)


@pytest.mark.parametrize("s", [0, -2, -4 + 1e-10])
def test_gamma_R_poles(s):
    with pytest.raises(ArchimedeanError):
        gamma_factor_eval(GAMMA_R, s)


def test_gamma_R_between_poles():
    assert gamma_factor_eval(GAMMA_R, -1) == pytest.approx(gamma_R(-1))


def test_gamma_unknown_kind():
    with pytest.raises(ArchimedeanError):
        GammaFactor([("H", 0)])


###################
#  ArchCharacter  #
###################


def test_character_sign_over_R():
    with pytest.raises(ArchimedeanError):
        ArchCharacter("R", 2)
    assert ArchCharacter("C", -3).sign == -3


def test_character_parse():
    assert ArchCharacter.parse("trivial") == TRIVIAL
    assert ArchCharacter.parse("sgn") == SGN
    assert ArchCharacter.parse("C,1,0.25") == ArchCharacter("C", 1, 0.25)
    with pytest.raises(ArchimedeanError):
        ArchCharacter.parse("R")
    with pytest.raises(ArchimedeanError):
        ArchCharacter.parse("R,x,0")


def test_character_evaluation():
    chi = ArchCharacter("R", 1, 0.5)
    assert chi(-4.0) == pytest.approx(-2.0)
    assert chi(9.0) == pytest.approx(3.0)


def test_restrict_to_real():
    assert restrict_to_real(ArchCharacter("C", 3, 0.25)) == ArchCharacter("R", 1, 0.5)
    assert restrict_to_real(ArchCharacter("C", -2)) == TRIVIAL


#####################
#  arch_asai_L_n1  #
#####################


@pytest.mark.parametrize("k, shift", [(0, 0), (1, 1), (2, 0), (-1, 1)])
def test_arch_asai_L_n1(k, shift):
    assert arch_asai_L_n1(ArchCharacter("C", k)) == GammaFactor([("R", shift)])


def test_arch_asai_L_n1_exponent():
    assert arch_asai_L_n1(ArchCharacter("C", 0, 0.5)) == GammaFactor([("R", 1)])


def test_arch_asai_L_n1_real_character():
    with pytest.raises(ArchimedeanError):
        arch_asai_L_n1(TRIVIAL)


def test_tate_factors():
    assert tate_L(SGN) == GammaFactor([("R", 1)])
    assert tate_epsilon(SGN) == 1j
    assert tate_epsilon(TRIVIAL) == 1


#######################
#  tate_zeta_numeric  #
#######################


def test_tate_zeta_gaussian():
    assert tate_zeta_numeric(TRIVIAL, "gaussian", 2) == pytest.approx(1 / math.pi, abs=1e-9)
    assert tate_zeta_numeric(TRIVIAL, "gaussian", 1) == pytest.approx(1, abs=1e-9)


def test_tate_zeta_odd_integrand():
    assert abs(tate_zeta_numeric(SGN, "gaussian", 1.5)) < 1e-12


def test_tate_zeta_sign_character():
    s = complex(0.4, 0.3)
    assert abs(tate_zeta_numeric(SGN, "x_gaussian", s) - gamma_R(s + 1)) < 1e-8


def test_tate_zeta_matches_gamma_R():
    for a, b in zip(np.linspace(0.1, 0.9, 10), np.linspace(-2.0, 2.0, 10)):
        s = complex(a, b)
        assert abs(tate_zeta_numeric(TRIVIAL, "gaussian", s) - gamma_factor_eval(GAMMA_R, s)) < 1e-8


def test_tate_zeta_with_exponent():
    chi = ArchCharacter("R", 0, 0.5)
    assert abs(tate_zeta_numeric(chi, "gaussian", 0.5) - gamma_R(1)) < 1e-8


def test_tate_zeta_divergent():
    with pytest.raises(ConvergenceError):
        tate_zeta_numeric(TRIVIAL, "gaussian", -0.5)
    with pytest.raises(ConvergenceError):
        tate_zeta_numeric(SGN, "x_gaussian", -1.5)


def test_tate_zeta_complex_character():
    with pytest.raises(ArchimedeanError):
        tate_zeta_numeric(ArchCharacter("C", 1), "gaussian", 1)


def test_unknown_test_function():
    with pytest.raises(ArchimedeanError):
        schwartz_function("bump")


######################
#  tate_fe_residual  #
######################


@pytest.mark.parametrize("s", [0.5, complex(0.3, 0.2), complex(0.7, -1.5)])
def test_tate_fe_trivial(s):
    assert tate_fe_residual(TRIVIAL, "gaussian", s) < 1e-6


@pytest.mark.parametrize("s", [0.4, complex(0.2, 1.0), complex(0.9, -2.0)])
def test_tate_fe_sign(s):
    assert tate_fe_residual(SGN, "x_gaussian", s) < 1e-6


def test_tate_fe_with_exponent():
    assert tate_fe_residual(ArchCharacter("R", 1, 0.1), "x_gaussian", complex(0.4, 0.5)) < 1e-6


def test_tate_fe_wrong_epsilon_sign_detected():
    s = 0.4
    Z = tate_zeta_numeric(SGN, "x_gaussian", s)
    dual = fourier_scalar("x_gaussian") * tate_zeta_numeric(SGN, "x_gaussian", 1 - s)
    wrong_gamma = -1j * gamma_R(2 - s) / gamma_R(s + 1)
    assert abs(dual - wrong_gamma * Z) > 0.1


###############################
#  fourier_transform_numeric  #
###############################


@pytest.mark.parametrize("name", ["gaussian", "x_gaussian"])
@pytest.mark.parametrize("x", [-1.0, 0.0, 0.3, 1.2])
def test_fourier_transform(name, x):
    expected = fourier_scalar(name) * schwartz_function(name)(x)
    assert abs(fourier_transform_numeric(name, x) - expected) < 1e-8


#########################
#  contour_reconstruct  #
#########################


@pytest.mark.parametrize("s", [0, 0.5, complex(0.3, 0.1), complex(-1.2, 0.8)])
def test_contour_reconstruct(s):
    assert abs(reconstruct(s) - cmath.exp(complex(s) ** 2)) < 1e-6


def test_contour_interior_grid():
    for a, b in zip(np.linspace(-1.5, 1.5, 10), np.linspace(-1.0, 1.0, 10)):
        s = complex(a, b)
        assert abs(reconstruct(s) - demo_function(s)) < 1e-6


def test_contour_truncation_converges():
    s = complex(0.5, 0.25)
    errors = [abs(reconstruct(s, x_max) - demo_function(s)) for x_max in (2.0, 3.0, 4.0)]
    assert errors[0] > errors[1] > errors[2]


def test_contour_point_on_line():
    with pytest.raises(ArchimedeanError):
        reconstruct(complex(2.0, 1.0))


def test_contour_bad_abscissa():
    with pytest.raises(ArchimedeanError):
        contour_reconstruct(0.0, demo_function, demo_function, 0.5)
