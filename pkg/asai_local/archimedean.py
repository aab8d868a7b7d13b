"""The Archimedean side, in double precision.

Gamma factors ``Gamma_R(s) = pi^(-s/2) Gamma(s/2)`` and
``Gamma_C(s) = 2 (2 pi)^(-s) Gamma(s)``, Tate Zeta integrals of characters
of R^x computed by adaptive quadrature, and the reconstruction of a
function from its values on two vertical lines by Cauchy's formula.

The additive character is ``psi'(x) = exp(2 pi i x)`` with the self-dual
Lebesgue measure, so the Gaussian is its own Fourier transform.
"""
import cmath
import logging
import math
from typing import Callable
from typing import List
from typing import Optional
from typing import Sequence
from typing import Tuple

import numpy as np
from scipy.integrate import quad  # https://docs.scipy.org/doc/scipy/reference/generated/scipy.integrate.quad.html
from scipy.special import gamma as complex_gamma

from asai_local.settings import settings


logger = logging.getLogger(__name__)

POLE_DISTANCE = 1e-8
QUAD_TOLERANCE = 1e-9
TAIL_TOLERANCE = 1e-12
TEST_FUNCTIONS = ("gaussian", "x_gaussian")


class ArchimedeanError(ValueError):
    """Raised for invalid Archimedean data or evaluation points."""


class ConvergenceError(ArchimedeanError):
    """Raised when an integral does not converge for the given parameters."""


def gamma_R(s: complex) -> complex:
    """``pi^(-s/2) * Gamma(s/2)``."""
    return complex(np.exp(-s / 2 * math.log(math.pi)) * complex_gamma(s / 2))


def gamma_C(s: complex) -> complex:
    """``2 * (2 pi)^(-s) * Gamma(s)``."""
    return complex(2 * np.exp(-s * math.log(2 * math.pi)) * complex_gamma(s))


def _near_gamma_pole(z: complex) -> bool:
    """Whether z is within POLE_DISTANCE of 0, -1, -2, ..."""
    nearest = round(z.real)
    return nearest <= 0 and abs(z - nearest) < POLE_DISTANCE


class GammaFactor:
    """A product of shifted Archimedean gamma functions.

    Attributes
    ----------
    terms : Tuple[Tuple[str, complex], ...]
        ``(kind, shift)`` pairs with kind ``"R"`` or ``"C"``. The value at
        s is the product of ``Gamma_kind(s + shift)``.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Sequence[Tuple[str, complex]] = ()):
        checked: List[Tuple[str, complex]] = []
        for kind, shift in terms:
            if kind not in ("R", "C"):
                raise ArchimedeanError(f"gamma factors are of kind R or C, not {kind!r}")
            checked.append((kind, complex(shift)))
        self.terms = tuple(checked)

    def __mul__(self, other: "GammaFactor") -> "GammaFactor":
        return GammaFactor(self.terms + other.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GammaFactor):
            return NotImplemented
        return sorted(self.terms, key=repr) == sorted(other.terms, key=repr)

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.terms, key=repr)))

    def __str__(self) -> str:
        if not self.terms:
            return "1"
        return " * ".join(f"Gamma_{kind}(s + {_complex_text(shift)})" for kind, shift in self.terms)

    def __repr__(self) -> str:
        return f"GammaFactor({list(self.terms)!r})"


def gamma_factor_eval(G: GammaFactor, s: complex) -> complex:
    """Evaluates a gamma factor.

    Raises
    ------
    ArchimedeanError
        If ``s + shift`` is within 1e-8 of a pole of one of the terms.
    """
    value = complex(1)
    for kind, shift in G.terms:
        z = complex(s) + shift
        argument = z / 2 if kind == "R" else z
        if _near_gamma_pole(argument):
            raise ArchimedeanError(f"Gamma_{kind} has a pole at s + {_complex_text(shift)} = {_complex_text(z)}")
        value *= gamma_R(z) if kind == "R" else gamma_C(z)
    return value


class ArchCharacter:
    """A quasi-character of R^x or C^x.

    Over R it is ``sgn^a |x|^s0`` with a in {0, 1}; over C it is
    ``(z/|z|)^k |z|_C^s0`` with ``|z|_C = z conj(z)``.

    Attributes
    ----------
    field : str
        ``"R"`` or ``"C"``.
    sign : int
        The sign exponent a (over R) or the winding number k (over C).
    exponent : complex
        s0.
    """

    __slots__ = ("field", "sign", "exponent")

    def __init__(self, field: str, sign: int = 0, exponent: complex = 0):
        if field not in ("R", "C"):
            raise ArchimedeanError(f"characters live on R or C, not {field!r}")
        if field == "R" and sign not in (0, 1):
            raise ArchimedeanError(f"the sign of a character of R^x is 0 or 1, got {sign}")
        self.field = field
        self.sign = int(sign)
        self.exponent = complex(exponent)

    @classmethod
    def parse(cls, text: str) -> "ArchCharacter":
        """Reads ``trivial``, ``sgn`` or ``<field>,<sign>,<s0>``, e.g. ``C,1,0.25``."""
        text = text.strip()
        if text == "trivial":
            return cls("R")
        if text == "sgn":
            return cls("R", 1)
        pieces = [piece.strip() for piece in text.split(",")]
        if len(pieces) not in (2, 3):
            raise ArchimedeanError(f"cannot read the character {text!r}")
        try:
            sign = int(pieces[1])
            exponent = complex(pieces[2].replace(" ", "")) if len(pieces) == 3 else 0
        except ValueError as e:
            raise ArchimedeanError(f"cannot read the character {text!r}") from e
        return cls(pieces[0], sign, exponent)

    def inverse(self) -> "ArchCharacter":
        return ArchCharacter(self.field, self.sign if self.field == "R" else -self.sign, -self.exponent)

    def __call__(self, x: float) -> complex:
        """Evaluates the character at a nonzero real x (over R only)."""
        if self.field != "R":
            raise ArchimedeanError("only characters of R^x are evaluated pointwise")
        sign = -1 if x < 0 and self.sign else 1
        return sign * cmath.exp(self.exponent * math.log(abs(x)))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ArchCharacter):
            return NotImplemented
        return (self.field, self.sign, self.exponent) == (other.field, other.sign, other.exponent)

    def __hash__(self) -> int:
        return hash((self.field, self.sign, self.exponent))

    def __str__(self) -> str:
        return f"{self.field},{self.sign},{_complex_text(self.exponent)}"


def restrict_to_real(chi: ArchCharacter) -> ArchCharacter:
    """Restricts a character of C^x to R^x: ``sgn^(k mod 2) |x|^(2 s0)``."""
    if chi.field == "R":
        return chi
    return ArchCharacter("R", chi.sign % 2, 2 * chi.exponent)


def tate_L(chi: ArchCharacter) -> GammaFactor:
    """``L(s, sgn^a |.|^s0) = Gamma_R(s + s0 + a)``."""
    if chi.field != "R":
        raise ArchimedeanError("Tate's L-factor is taken for characters of R^x")
    return GammaFactor([("R", chi.exponent + chi.sign)])


def tate_epsilon(chi: ArchCharacter) -> complex:
    """``eps(s, sgn^a |.|^s0, psi') = i^a`` for ``psi'(x) = exp(2 pi i x)``."""
    return 1j**chi.sign


def arch_asai_L_n1(chi: ArchCharacter) -> GammaFactor:
    """The Asai L-factor of a character of C^x: Tate's factor of its restriction to R^x."""
    if chi.field != "C":
        raise ArchimedeanError("the Asai factor of GL_1 is taken for characters of C^x")
    return tate_L(restrict_to_real(chi))


def schwartz_function(name: str) -> Callable[[float], float]:
    """Returns ``exp(-pi x^2)`` (``gaussian``) or ``x exp(-pi x^2)`` (``x_gaussian``)."""
    if name == "gaussian":
        return lambda x: math.exp(-math.pi * x * x)
    if name == "x_gaussian":
        return lambda x: x * math.exp(-math.pi * x * x)
    raise ArchimedeanError(f"unknown test function {name!r}, expected one of {', '.join(TEST_FUNCTIONS)}")


def fourier_scalar(name: str) -> complex:
    """The c with ``phi^ = c * phi`` for the shipped test functions."""
    schwartz_function(name)
    return 1 if name == "gaussian" else 1j


def _complex_quad(f: Callable[[float], complex], a: float, b: float) -> complex:
    tolerance = settings.get("quad_tolerance", QUAD_TOLERANCE)
    value, error = quad(f, a, b, complex_func=True, epsabs=tolerance, epsrel=tolerance, limit=200)
    if abs(error) > 1e3 * tolerance:
        logger.warning("quadrature on [%s, %s] reports error %.2e", a, b, abs(error))
    return complex(value)


def fourier_transform_numeric(testfn: str, x: float) -> complex:
    """``phi^(x) = int phi(y) exp(2 pi i x y) dy`` by quadrature."""
    phi = schwartz_function(testfn)
    return _complex_quad(lambda y: phi(y) * cmath.exp(2j * math.pi * x * y), -math.inf, math.inf)


def _mellin_half_line(g: Callable[[float], float], w: complex) -> complex:
    """``int_0^inf g(x) x^(w - 1) dx``, splitting off ``g(0)`` near the origin."""
    g0 = g(0.0)
    if g0 != 0 and w.real <= 0:
        raise ConvergenceError(f"the integral converges for Re(s + s0) > 0, got {_complex_text(w)}")
    if w.real <= -1:
        raise ConvergenceError(f"the integral converges for Re(s + s0) > -1, got {_complex_text(w)}")

    def power(x: float) -> complex:
        return cmath.exp((w - 1) * math.log(x))

    near = _complex_quad(lambda x: (g(x) - g0) * power(x), 0.0, 1.0)
    far = _complex_quad(lambda x: g(x) * power(x), 1.0, math.inf)
    return near + (g0 / w if g0 else 0) + far


def tate_zeta_numeric(chi: ArchCharacter, testfn: str, s: complex) -> complex:
    """``int_{R^x} chi(x) phi(x) |x|^s d^x x`` by quadrature on ``(0, inf)``.

    The two half lines are folded together: the integrand on ``x > 0`` is
    ``(phi(x) + (-1)^a phi(-x)) x^(s + s0 - 1)``.

    Raises
    ------
    ConvergenceError
        Outside the half plane of absolute convergence.
    """
    if chi.field != "R":
        raise ArchimedeanError("Tate Zeta integrals are taken for characters of R^x")
    phi = schwartz_function(testfn)
    parity = -1 if chi.sign else 1

    def folded(x: float) -> float:
        return phi(x) + parity * phi(-x)

    return _mellin_half_line(folded, complex(s) + chi.exponent)


def tate_gamma(chi: ArchCharacter, s: complex) -> complex:
    """``eps(s) * L(1 - s, chi^-1) / L(s, chi)``."""
    dual = gamma_factor_eval(tate_L(chi.inverse()), 1 - complex(s))
    return tate_epsilon(chi) * dual / gamma_factor_eval(tate_L(chi), s)


def tate_fe_residual(chi: ArchCharacter, testfn: str, s: complex) -> float:
    """Returns ``|Z(1 - s, chi^-1, phi^) - gamma(s) Z(s, chi, phi)|``."""
    s = complex(s)
    lhs = fourier_scalar(testfn) * tate_zeta_numeric(chi.inverse(), testfn, 1 - s)
    rhs = tate_gamma(chi, s) * tate_zeta_numeric(chi, testfn, s)
    residual = abs(lhs - rhs)
    logger.debug("tate residual chi=%s testfn=%s s=%s: %.3e", chi, testfn, s, residual)
    return residual


def demo_function(s: complex) -> complex:
    """``exp(s^2)``, which decays like ``exp(-x^2)`` on vertical lines."""
    return cmath.exp(complex(s) ** 2)


def _choose_x_max(integrand: Callable[[float], complex], start: float = 4.0, limit: float = 4096.0) -> float:
    x_max = start
    while max(abs(integrand(x_max)), abs(integrand(-x_max))) >= TAIL_TOLERANCE:
        x_max *= 2
        if x_max > limit:
            raise ConvergenceError("the integrand does not decay on the contour")
    return x_max


def contour_reconstruct(
    D: float,
    fplus: Callable[[complex], complex],
    fminus: Callable[[complex], complex],
    s: complex,
    x_max: Optional[float] = None,
) -> complex:
    """Recovers ``fplus(s)`` from values on the line ``Re = D``.

    ``(1/2 pi) [int fplus(D+ix)/(D+ix-s) dx + int fminus(D+ix)/(D+ix+s) dx]``
    where ``fminus(z) = fplus(-z)``, valid for ``|Re(s)| < D``.

    Parameters
    ----------
    D : float
        The abscissa of the contour, positive.
    fplus, fminus : Callable[[complex], complex]
        Functions rapidly decreasing on the contour.
    s : complex
        The evaluation point.
    x_max : float, optional
        The truncation of the contour. By default it doubles from 4 until
        the integrand is below 1e-12 at both ends.

    Raises
    ------
    ArchimedeanError
        If s lies on the contour or D is not positive.
    """
    s = complex(s)
    if D <= 0:
        raise ArchimedeanError(f"the contour abscissa must be positive, got {D}")
    if abs(s.real - D) < POLE_DISTANCE or abs(s.real + D) < POLE_DISTANCE:
        raise ArchimedeanError(f"s = {_complex_text(s)} lies on the contour Re = {D}")

    def integrand(x: float) -> complex:
        z = complex(D, x)
        return fplus(z) / (z - s) + fminus(z) / (z + s)

    if x_max is None:
        x_max = _choose_x_max(integrand)
    logger.debug("contour D=%s s=%s truncated at |x| <= %s", D, s, x_max)
    return _complex_quad(integrand, -x_max, x_max) / (2 * math.pi)


def _complex_text(z: complex) -> str:
    z = complex(z)
    if z.imag == 0:
        return f"{z.real:g}"
    return f"{z.real:g}{z.imag:+g}j"
