"""Exact Laurent polynomials and rational functions in X = q^(-s).

Every p-adic L-, epsilon- and gamma-factor lives here. The variable
``s`` never appears on its own: it enters through ``X`` and through the
substitution ``s -> 1 - s``, which acts as ``X -> q^(-1) X^(-1)``.

The arithmetic runs in a sympy ring over the number field of the
coefficients (see ``numberfield``); power series come from sympy's
truncated series inversion.

Printing conventions
--------------------
 * Laurent polynomials print their terms by increasing exponent, e.g.
   ``1 - 4*X^1``.
 * Euler products print as ``prod (1 - <scalar> X^<m>)^-1`` with the
   factors sorted.
"""
from functools import lru_cache
from typing import Any
from typing import Dict
from typing import Iterable
from typing import List
from typing import Optional
from typing import Tuple
from typing import Union

from sympy.polys.ring_series import rs_mul
from sympy.polys.ring_series import rs_series_inversion

from asai_local.numberfield import NumberField
from asai_local.numberfield import field_of
from asai_local.numberfield import join
from asai_local.scalars import Scalar


class SeriesError(ValueError):
    """Raised when a rational function has no power series expansion."""


def _coefficient_text(c: Scalar) -> str:
    """Puts a coefficient in parentheses if it is a sum."""
    text = str(c)
    if any(sign in text[1:] for sign in "+-"):
        return f"({text})"
    return text


class LaurentPoly:
    """A finite sum of terms ``c * X^e`` with exact coefficients.

    Attributes
    ----------
    field : NumberField
        The smallest field holding the coefficients.
    poly : PolyElement
        The sympy ring element, with exponents of any sign.
    """

    __slots__ = ("field", "poly")

    def __init__(self, coeffs: Optional[Dict[int, Any]] = None):
        terms = {e: Scalar.coerce(c) for e, c in (coeffs or {}).items()}
        self.field: NumberField = field_of(terms.values())
        self.poly = self.field.ring.from_dict({(e,): self.field.element(c) for e, c in terms.items()})

    @classmethod
    def from_ring_element(cls, field: NumberField, poly: Any) -> "LaurentPoly":
        """Wraps a ring element of ``field`` without converting it."""
        result = cls.__new__(cls)
        result.field = field
        result.poly = poly
        return result

    @classmethod
    def constant(cls, c: Any) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, c: Any, e: int) -> "LaurentPoly":
        return cls({e: c})

    @property
    def coeffs(self) -> Dict[int, Scalar]:
        """Maps each exponent to its nonzero coefficient."""
        return {monom[0]: self.field.scalar(c) for monom, c in self.poly.items()}

    def lifted(self, field: NumberField) -> Any:
        """Returns the ring element over a field containing this one."""
        if field is self.field:
            return self.poly
        return field.ring.from_dict(
            {monom: field.element(self.field.scalar(c)) for monom, c in self.poly.items()}
        )

    def is_zero(self) -> bool:
        return not self.poly

    def min_exponent(self) -> int:
        if not self.poly:
            raise SeriesError("the zero polynomial has no exponents")
        return min(monom[0] for monom in self.poly)

    def max_exponent(self) -> int:
        if not self.poly:
            raise SeriesError("the zero polynomial has no exponents")
        return max(monom[0] for monom in self.poly)

    def coefficient(self, e: int) -> Scalar:
        return self.field.scalar(self.poly.get((e,), self.field.domain.zero))

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        field = join(self.field, other.field)
        return LaurentPoly.from_ring_element(field, self.lifted(field) + other.lifted(field))

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly.from_ring_element(self.field, -self.poly)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + -other

    def __mul__(self, other: Union["LaurentPoly", Scalar, int]) -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            factor = Scalar.coerce(other)
            field = join(self.field, field_of([factor]))
            return LaurentPoly.from_ring_element(field, self.lifted(field).mul_ground(field.element(factor)))
        field = join(self.field, other.field)
        return LaurentPoly.from_ring_element(field, self.lifted(field) * other.lifted(field))

    __rmul__ = __mul__

    def shift(self, k: int) -> "LaurentPoly":
        """Multiplies by ``X^k``."""
        return LaurentPoly.from_ring_element(self.field, self.poly.mul_monom((k,)))

    def substitute(self, c: Scalar, sign: int = 1) -> "LaurentPoly":
        """Substitutes ``X -> c * X^sign`` for sign in {1, -1}."""
        c = Scalar.coerce(c)
        field = join(self.field, field_of([c]))
        base = field.element(c)
        terms = {(sign * monom[0],): x * field.power(base, monom[0]) for monom, x in self.lifted(field).items()}
        return LaurentPoly.from_ring_element(field, field.ring.from_dict(terms))

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if self.field is other.field:
            return self.poly == other.poly
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def __str__(self) -> str:
        coeffs = self.coeffs
        if not coeffs:
            return "0"
        pieces: List[str] = []
        for e in sorted(coeffs):
            c = coeffs[e]
            negative = c.is_rational() and not c.a.im and c.a.re < 0
            if negative:
                c = -c
            if e == 0:
                term = _coefficient_text(c)
            elif c == 1:
                term = f"X^{e}"
            else:
                term = f"{_coefficient_text(c)}*X^{e}"
            if not pieces:
                pieces.append(f"-{term}" if negative else term)
            else:
                pieces.append(f" - {term}" if negative else f" + {term}")
        return "".join(pieces)


class Monomial:
    """A single term ``c * X^e`` with ``c`` nonzero.

    Epsilon factors take this form: ``q^(k(s - 1/2))`` is
    ``q^(-k/2) * X^(-k)``, so the half power of q lands in ``c``.
    """

    __slots__ = ("c", "e")

    def __init__(self, c: Any = 1, e: int = 0):
        self.c = Scalar.coerce(c)
        if self.c.is_zero():
            raise SeriesError("a monomial needs a nonzero coefficient")
        self.e = e

    def __mul__(self, other: Union["Monomial", Scalar, int]) -> "Monomial":
        if isinstance(other, Monomial):
            return Monomial(self.c * other.c, self.e + other.e)
        return Monomial(self.c * Scalar.coerce(other), self.e)

    __rmul__ = __mul__

    def inverse(self) -> "Monomial":
        return Monomial(self.c.inverse(), -self.e)

    def __pow__(self, k: int) -> "Monomial":
        return Monomial(self.c**k, self.e * k)

    def to_poly(self) -> LaurentPoly:
        return LaurentPoly.monomial(self.c, self.e)

    def to_ratfunc(self) -> "RatFunc":
        return RatFunc(self.to_poly())

    def evaluate(self, x: Scalar) -> Scalar:
        """Evaluates ``c * x^e`` exactly."""
        return self.c * Scalar.coerce(x) ** self.e

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, Monomial):
            return NotImplemented
        return self.c == other.c and self.e == other.e

    def __hash__(self) -> int:
        return hash((self.c, self.e))

    def __repr__(self) -> str:
        return f"Monomial({self})"

    def __str__(self) -> str:
        if self.e == 0:
            return str(self.c)
        if self.c == 1:
            return f"X^{self.e}"
        return f"{_coefficient_text(self.c)} * X^{self.e}"


class RatFunc:
    """A quotient ``num / den`` of Laurent polynomials.

    The denominator is kept normalized: its lowest exponent is 0 and its
    constant term is 1. Equality is decided by cross-multiplication.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: Optional[LaurentPoly] = None):
        if den is None:
            den = LaurentPoly.constant(1)
        if den.is_zero():
            raise SeriesError("a rational function needs a nonzero denominator")
        field = join(num.field, den.field)
        low = den.min_exponent()
        lowest = den.lifted(field)[(low,)]
        self.num = LaurentPoly.from_ring_element(field, num.lifted(field).quo_ground(lowest).mul_monom((-low,)))
        self.den = LaurentPoly.from_ring_element(field, den.lifted(field).quo_ground(lowest).mul_monom((-low,)))

    @classmethod
    def from_poly(cls, poly: LaurentPoly) -> "RatFunc":
        return cls(poly)

    def __mul__(self, other: Union["RatFunc", Monomial, LaurentPoly, Scalar, int]) -> "RatFunc":
        other = as_ratfunc(other)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.num.is_zero():
            raise SeriesError("cannot invert the zero rational function")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other: Union["RatFunc", Monomial, LaurentPoly, Scalar, int]) -> "RatFunc":
        return self * as_ratfunc(other).inverse()

    def __add__(self, other: "RatFunc") -> "RatFunc":
        other = as_ratfunc(other)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    def as_monomial(self) -> Optional[Monomial]:
        """Returns the monomial this function equals, or None if it is not one.

        Common factors of num and den are never cancelled, so this is how
        a quotient such as ``gamma * L / L~`` is recognized as a monomial.
        """
        if self.num.is_zero():
            return None
        low = self.num.min_exponent()
        # den has constant term 1, so c*X^e * den starts with c*X^e
        candidate = Monomial(self.num.coefficient(low), low)
        return candidate if ratfunc_equal(self, candidate) else None

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, RatFunc):
            return NotImplemented
        return ratfunc_equal(self, other)

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"RatFunc({self})"

    def __str__(self) -> str:
        if self.den == LaurentPoly.constant(1):
            return f"({self.num})"
        return f"({self.num}) / ({self.den})"


def as_ratfunc(value: Any) -> RatFunc:
    """Converts monomials, polynomials, Euler products and scalars."""
    if isinstance(value, RatFunc):
        return value
    if isinstance(value, Monomial):
        return value.to_ratfunc()
    if isinstance(value, EulerProduct):
        return value.to_ratfunc()
    if isinstance(value, LaurentPoly):
        return RatFunc(value)
    return RatFunc(LaurentPoly.constant(value))


class EulerProduct:
    """A product ``prod (1 - alpha * X^m)^-1`` of Euler factors.

    Attributes
    ----------
    factors : Tuple[Tuple[Scalar, int], ...]
        The pairs ``(alpha, m)``, sorted, with ``alpha = 0`` dropped.
    """

    __slots__ = ("factors",)

    def __init__(self, factors: Iterable[Tuple[Any, int]] = ()):
        kept: List[Tuple[Scalar, int]] = []
        for alpha, m in factors:
            alpha = Scalar.coerce(alpha)
            if m < 1:
                raise SeriesError(f"Euler factor degree must be positive, got {m}")
            if not alpha.is_zero():
                kept.append((alpha, m))
        kept.sort(key=lambda factor: (factor[1], factor[0].sort_key()))
        self.factors: Tuple[Tuple[Scalar, int], ...] = tuple(kept)

    def __mul__(self, other: "EulerProduct") -> "EulerProduct":
        return EulerProduct(self.factors + other.factors)

    def inverted(self) -> "EulerProduct":
        """Returns the product with every alpha inverted."""
        return EulerProduct((alpha.inverse(), m) for alpha, m in self.factors)

    def denominator(self) -> LaurentPoly:
        field = field_of(alpha for alpha, _ in self.factors)
        one = field.ring.one
        den = one
        for alpha, m in self.factors:
            den = den * (one - (field.X**m).mul_ground(field.element(alpha)))
        return LaurentPoly.from_ring_element(field, den)

    def to_ratfunc(self) -> RatFunc:
        """Returns ``1 / denominator``, computed once per product."""
        return _euler_ratfunc(self)

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, EulerProduct):
            return NotImplemented
        return self.factors == other.factors

    def __hash__(self) -> int:
        return hash(self.factors)

    def __repr__(self) -> str:
        return f"EulerProduct({self})"

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        pieces = [f"(1 - {_coefficient_text(alpha)} X^{m})^-1" for alpha, m in self.factors]
        return "prod " + " ".join(pieces)


@lru_cache(maxsize=4096)
def _euler_ratfunc(product: EulerProduct) -> RatFunc:
    return RatFunc(LaurentPoly.constant(1), product.denominator())


class SeriesTruncation:
    """The coefficients of ``X^0`` through ``X^bound`` of a power series.

    Attributes
    ----------
    bound : int
        The truncation degree N.
    coeffs : Tuple[Scalar, ...]
        Exactly ``bound + 1`` coefficients.
    """

    __slots__ = ("bound", "coeffs")

    def __init__(self, bound: int, coeffs: Iterable[Any]):
        self.bound = bound
        self.coeffs: Tuple[Scalar, ...] = tuple(Scalar.coerce(c) for c in coeffs)
        if len(self.coeffs) != bound + 1:
            raise SeriesError(
                f"a series truncated at degree {bound} needs {bound + 1} "
                f"coefficients, got {len(self.coeffs)}"
            )

    @classmethod
    def from_terms(cls, bound: int, terms: Dict[int, Scalar]) -> "SeriesTruncation":
        """Builds a truncation from a sparse map, ignoring degrees past the bound."""
        return cls(bound, [terms.get(k, Scalar(0)) for k in range(bound + 1)])

    @classmethod
    def from_ring_element(cls, bound: int, field: NumberField, series: Any) -> "SeriesTruncation":
        zero = field.domain.zero
        return cls(bound, [field.scalar(series.get((k,), zero)) for k in range(bound + 1)])

    def to_ring_element(self, field: NumberField) -> Any:
        return field.ring.from_dict({(k,): field.element(c) for k, c in enumerate(self.coeffs)})

    def __getitem__(self, k: int) -> Scalar:
        return self.coeffs[k]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __mul__(self, other: "SeriesTruncation") -> "SeriesTruncation":
        bound = min(self.bound, other.bound)
        field = field_of(self.coeffs + other.coeffs)
        product = rs_mul(self.to_ring_element(field), other.to_ring_element(field), field.X, bound + 1)
        return SeriesTruncation.from_ring_element(bound, field, product)

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, SeriesTruncation):
            return NotImplemented
        return self.bound == other.bound and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.bound, self.coeffs))

    def __repr__(self) -> str:
        return f"SeriesTruncation({self.bound}, [{', '.join(map(str, self.coeffs))}])"


def series_expand(f: Union[RatFunc, EulerProduct, LaurentPoly, Monomial], bound: int) -> SeriesTruncation:
    """Expands a rational function as a power series in X.

    Parameters
    ----------
    f : RatFunc, EulerProduct, LaurentPoly or Monomial
        The function to expand.
    bound : int
        The highest degree to keep.

    Returns
    -------
    SeriesTruncation
        The exact coefficients of ``X^0`` through ``X^bound``.

    Raises
    ------
    SeriesError
        If the expansion would need a negative power of X.
    """
    if bound < 0:
        raise SeriesError(f"truncation bound must be nonnegative, got {bound}")
    f = as_ratfunc(f)
    if not f.num.is_zero() and f.num.min_exponent() < 0:
        raise SeriesError(f"the numerator has a term of negative exponent {f.num.min_exponent()}")
    field = join(f.num.field, f.den.field)
    # the normalized denominator has constant term 1
    inverse = rs_series_inversion(f.den.lifted(field), field.X, bound + 1)
    series = rs_mul(f.num.lifted(field), inverse, field.X, bound + 1)
    return SeriesTruncation.from_ring_element(bound, field, series)


def subst_one_minus_s(f: Union[RatFunc, EulerProduct, Monomial], q: int) -> Union[RatFunc, Monomial]:
    """Applies ``s -> 1 - s``, which acts as ``X -> q^(-1) X^(-1)``.

    Monomials stay monomials: ``c*X^e`` becomes ``c*q^(-e)*X^(-e)``.
    Everything else comes back as a normalized RatFunc.
    """
    c = Scalar(1, 0, q) / q
    if isinstance(f, Monomial):
        return Monomial(f.c * c**f.e, -f.e)
    f = as_ratfunc(f)
    return RatFunc(f.num.substitute(c, -1), f.den.substitute(c, -1))


def subst_scale(f: Union[RatFunc, EulerProduct, Monomial, LaurentPoly], c: Any) -> Any:
    """Applies ``X -> c*X``, the shift ``s -> s + s0`` when ``c = q^(-s0)``.

    Returns the same kind of object it was given.
    """
    c = Scalar.coerce(c)
    if isinstance(f, EulerProduct):
        return EulerProduct((alpha * c**m, m) for alpha, m in f.factors)
    if isinstance(f, Monomial):
        return Monomial(f.c * c**f.e, f.e)
    if isinstance(f, LaurentPoly):
        return f.substitute(c)
    return RatFunc(f.num.substitute(c), f.den.substitute(c))


def ratfunc_equal(f: Any, g: Any) -> bool:
    """Decides ``f == g`` by comparing ``f.num * g.den`` with ``g.num * f.den``."""
    f = as_ratfunc(f)
    g = as_ratfunc(g)
    return f.num * g.den == g.num * f.den
