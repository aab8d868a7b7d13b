"""Sympy number fields holding the exact scalars.

Polynomials, series and determinants are computed by sympy over
``Q(i)`` or ``Q(i, sqrt(q))``. A ``NumberField`` owns that domain and
its polynomial ring in X, and converts ``Scalar`` values in and out.

Elements come back from sympy in the power basis of a primitive element.
They are read off in the basis ``1, i, sqrt(q), i*sqrt(q)`` through the
inverse of the change-of-basis matrix, computed once per field.
"""
from fractions import Fraction
from functools import lru_cache
from typing import Any
from typing import Dict
from typing import Iterable
from typing import List
from typing import Optional

from sympy import I
from sympy import Matrix
from sympy import Rational
from sympy import S
from sympy import sqrt
from sympy.polys.domains import QQ
from sympy.polys.rings import ring

from asai_local.scalars import FieldMismatchError
from asai_local.scalars import GaussRational
from asai_local.scalars import Scalar


def _fraction(c: Any) -> Fraction:
    return Fraction(int(c.numerator), int(c.denominator))


class NumberField:
    """``Q(i)`` when q is None, otherwise ``Q(i, sqrt(q))`` for a non-square q.

    Attributes
    ----------
    q : int or None
        The residue cardinality whose square root is adjoined.
    domain : AlgebraicField
        The sympy domain of coefficients.
    ring : PolyRing
        Polynomials in X over the domain. Negative exponents are allowed
        in its elements, which makes them Laurent polynomials.
    X : PolyElement
        The generator of the ring.
    """

    def __init__(self, q: Optional[int] = None):
        self.q = q
        if q is None:
            generators = [S.One, I]
            self.domain = QQ.algebraic_field(I)
        else:
            generators = [S.One, I, sqrt(q), I * sqrt(q)]
            self.domain = QQ.algebraic_field(I, sqrt(q))
        self.ring, self.X = ring("X", self.domain)
        self.__degree = len(generators)
        self.__basis = [self.domain.from_sympy(g) for g in generators]
        rows = [
            [Rational(int(c.numerator), int(c.denominator)) for c in self.__power_coordinates(b)]
            for b in self.__basis
        ]
        self.__inverse: List[List[Fraction]] = [
            [Fraction(int(x.p), int(x.q)) for x in row] for row in Matrix(rows).inv().tolist()
        ]
        self.__elements: Dict[Scalar, Any] = {}

    def __power_coordinates(self, element: Any) -> List[Any]:
        coeffs = list(element.to_list())
        return [QQ.zero] * (self.__degree - len(coeffs)) + coeffs

    def __rational(self, value: Fraction) -> Any:
        return self.domain.from_sympy(Rational(value.numerator, value.denominator))

    def element(self, value: Any) -> Any:
        """Converts a scalar to an element of the sympy domain.

        Raises
        ------
        FieldMismatchError
            If the scalar carries a sqrt(q) part for another q, or any
            sqrt(q) part when the field is Q(i).
        """
        value = Scalar.coerce(value)
        cached = self.__elements.get(value)
        if cached is not None:
            return cached
        parts = [value.a.re, value.a.im]
        if not value.b.is_zero():
            if value.q != self.q:
                raise FieldMismatchError(f"{value!r} does not lie in the field for q={self.q}")
            parts += [value.b.re, value.b.im]
        element = self.domain.zero
        for part, basis in zip(parts, self.__basis):
            if part:
                element = element + self.__rational(part) * basis
        self.__elements[value] = element
        return element

    def scalar(self, element: Any) -> Scalar:
        """Converts an element of the sympy domain back to a scalar."""
        coordinates = [_fraction(c) for c in self.__power_coordinates(element)]
        x = [
            sum((v * row[j] for v, row in zip(coordinates, self.__inverse)), Fraction(0))
            for j in range(self.__degree)
        ]
        if self.q is None:
            return Scalar(GaussRational(x[0], x[1]))
        return Scalar(GaussRational(x[0], x[1]), GaussRational(x[2], x[3]), self.q)

    def power(self, element: Any, k: int) -> Any:
        """Raises an element to an integer power."""
        if k < 0:
            element = self.domain.quo(self.domain.one, element)
            k = -k
        return element**k

    def __repr__(self) -> str:
        return f"NumberField(q={self.q})"


@lru_cache(maxsize=None)
def number_field(q: Optional[int] = None) -> NumberField:
    """Returns the shared field for q, built on first use."""
    return NumberField(q)


def field_of(values: Iterable[Any]) -> NumberField:
    """Returns the smallest field holding every value.

    Raises
    ------
    FieldMismatchError
        If the values have sqrt(q) parts for different q.
    """
    q_values = {v.q for v in map(Scalar.coerce, values) if not v.b.is_zero()}
    if len(q_values) > 1:
        raise FieldMismatchError(f"cannot combine scalars for q in {sorted(q_values)}")
    return number_field(q_values.pop() if q_values else None)


def join(f: NumberField, g: NumberField) -> NumberField:
    """Returns the field holding both f and g."""
    if f is g or g.q is None:
        return f
    if f.q is None:
        return g
    raise FieldMismatchError(f"cannot combine scalars for q={f.q} and q={g.q}")
