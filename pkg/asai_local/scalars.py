"""Exact arithmetic in the field Q(i)(sqrt(q)).

Every Satake parameter, Langlands constant and half-integral power of
the residue cardinality ``q`` used by the exact core lives here. A
``Scalar`` is ``a + b*sqrt(q)`` where ``a`` and ``b`` are Gaussian
rationals. Values are immutable and all operations are pure.

Textual forms (parsed exactly and printed canonically):

 * rational: ``a`` or ``a/b``
 * Gaussian rational: ``a/b+c/d*i`` (``i`` and ``-i`` for unit
   imaginary parts)
 * scalar: ``<gr>`` or ``<gr>+<gr>*sqrtq``; a Gaussian rational with
   both parts is put in parentheses before ``*sqrtq``.
"""
import math
from fractions import Fraction
from numbers import Rational
from typing import Any
from typing import List
from typing import Optional
from typing import Tuple
from typing import Union

from asai_local import patterns


class ScalarError(ArithmeticError):
    """Raised for invalid exact-arithmetic requests."""


class ScalarZeroDivisionError(ScalarError, ZeroDivisionError):
    """Raised when inverting zero or raising it to a negative power."""


class FieldMismatchError(ScalarError, TypeError):
    """Raised when scalars built for different values of q are mixed."""


def _format_fraction(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parses ``a`` or ``a/b`` (with an optional sign) exactly.

    Parameters
    ----------
    text : str
        The text to parse.

    Raises
    ------
    ScalarError
        If the text is not a rational number or has a zero denominator.
    """
    match = patterns.rational.match(text)
    if match is None:
        raise ScalarError(f"malformed rational: {text!r}")
    den = int(match["den"]) if match["den"] else 1
    if den == 0:
        raise ScalarZeroDivisionError(f"zero denominator in {text!r}")
    value = Fraction(int(match["num"]), den)
    return -value if match["sign"] == "-" else value


class GaussRational:
    """An exact element ``re + im*i`` of Q(i).

    Attributes
    ----------
    re : Fraction
        The real part, in lowest terms.
    im : Fraction
        The imaginary part, in lowest terms.
    """

    __slots__ = ("re", "im")

    def __init__(self, re: Any = 0, im: Any = 0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @classmethod
    def coerce(cls, value: Any) -> "GaussRational":
        """Converts ints, Fractions and Gaussian rationals."""
        if isinstance(value, GaussRational):
            return value
        if isinstance(value, (int, Rational)):
            return cls(value)
        if isinstance(value, Scalar) and value.b.is_zero():
            return value.a
        raise TypeError(f"cannot convert {value!r} to a Gaussian rational")

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def conjugate(self) -> "GaussRational":
        return GaussRational(self.re, -self.im)

    def norm(self) -> Fraction:
        """Returns ``re**2 + im**2``."""
        return self.re * self.re + self.im * self.im

    def __add__(self, other: Any) -> "GaussRational":
        try:
            other = GaussRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other: Any) -> "GaussRational":
        try:
            other = GaussRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other: Any) -> "GaussRational":
        return -self + other

    def __neg__(self) -> "GaussRational":
        return GaussRational(-self.re, -self.im)

    def __mul__(self, other: Any) -> "GaussRational":
        try:
            other = GaussRational.coerce(other)
        except TypeError:
            return NotImplemented
        if not self.im and not other.im:
            return GaussRational(self.re * other.re)
        return GaussRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def inverse(self) -> "GaussRational":
        if self.is_zero():
            raise ScalarZeroDivisionError("inverse of zero")
        if not self.im:
            return GaussRational(1 / self.re)
        norm = self.norm()
        return GaussRational(self.re / norm, -self.im / norm)

    def __truediv__(self, other: Any) -> "GaussRational":
        try:
            other = GaussRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: Any) -> "GaussRational":
        return GaussRational.coerce(other) * self.inverse()

    def __pow__(self, k: int) -> "GaussRational":
        return _power(self, k, GaussRational(1))

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, Scalar):
            return other == self
        try:
            other = GaussRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self) -> int:
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __repr__(self) -> str:
        return f"GaussRational({self})"

    def __str__(self) -> str:
        if not self.im:
            return _format_fraction(self.re)
        if self.im == 1:
            imag = "i"
        elif self.im == -1:
            imag = "-i"
        else:
            imag = f"{_format_fraction(self.im)}*i"
        if not self.re:
            return imag
        if imag.startswith("-"):
            return f"{_format_fraction(self.re)}{imag}"
        return f"{_format_fraction(self.re)}+{imag}"

    def has_both_parts(self) -> bool:
        return bool(self.re) and bool(self.im)


def _power(base: Any, k: int, one: Any) -> Any:
    """Raises base to an integer power by repeated squaring."""
    if k < 0:
        if base.is_zero():
            raise ScalarZeroDivisionError("zero raised to a negative power")
        base = base.inverse()
        k = -k
    result = one
    while k:
        if k & 1:
            result = result * base
        k >>= 1
        if k:
            base = base * base
    return result


def _square_root(q: int) -> Optional[int]:
    """Returns the integer square root of q if q is a perfect square."""
    root = math.isqrt(q)
    return root if root * root == q else None


class Scalar:
    """An exact element ``a + b*sqrt(q)`` of Q(i)(sqrt(q)).

    Scalars with ``b == 0`` may be built without a ``q`` and combine
    freely with scalars of any ``q``. Two scalars that both carry a
    ``q`` must carry the same one.

    Attributes
    ----------
    a : GaussRational
        The rational part.
    b : GaussRational
        The coefficient of sqrt(q). Always zero when q is a perfect
        square.
    q : int or None
        The residue cardinality whose square root is adjoined.
    """

    __slots__ = ("a", "b", "q")

    def __init__(self, a: Any = 0, b: Any = 0, q: Optional[int] = None):
        a = GaussRational.coerce(a)
        b = GaussRational.coerce(b)
        if q is not None:
            if q < 1:
                raise ScalarError(f"q must be a positive integer, got {q}")
            root = _square_root(q)
            if root is not None and not b.is_zero():
                a = a + b * root
                b = GaussRational()
        elif not b.is_zero():
            raise ScalarError("a sqrt(q) part needs a value of q")
        self.a = a
        self.b = b
        self.q = q

    @classmethod
    def coerce(cls, value: Any) -> "Scalar":
        if isinstance(value, Scalar):
            return value
        return cls(GaussRational.coerce(value))

    @classmethod
    def sqrt_q(cls, q: int) -> "Scalar":
        """Returns sqrt(q)."""
        return cls(0, 1, q)

    @classmethod
    def q_half_power(cls, q: int, k: int) -> "Scalar":
        """Returns ``q**(k/2)`` exactly."""
        whole = Fraction(q) ** (k // 2)
        if k % 2:
            return cls(0, whole, q)
        return cls(whole, 0, q)

    @classmethod
    def parse(cls, text: str, q: Optional[int] = None) -> "Scalar":
        """Parses the textual form of a scalar.

        Parameters
        ----------
        text : str
            The text, e.g. ``1/2``, ``3-i``, ``(1+i)*sqrtq`` or
            ``2+1/3*sqrtq``. Sums, differences, products and
            parentheses of these atoms are accepted.
        q : int, optional
            The value of q; required if ``sqrtq`` appears.

        Raises
        ------
        ScalarError
            If the text is malformed.
        """
        return _ScalarParser(text, q).parse()

    def _merge_q(self, other: "Scalar") -> Optional[int]:
        if self.q is None:
            return other.q
        if other.q is None or other.q == self.q:
            return self.q
        raise FieldMismatchError(f"cannot combine scalars for q={self.q} and q={other.q}")

    def is_zero(self) -> bool:
        return self.a.is_zero() and self.b.is_zero()

    def is_rational(self) -> bool:
        """Returns True if the scalar lies in Q(i)."""
        return self.b.is_zero()

    def conjugate_sqrt(self) -> "Scalar":
        """Returns ``a - b*sqrt(q)``."""
        return Scalar(self.a, -self.b, self.q)

    def __add__(self, other: Any) -> "Scalar":
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return Scalar(self.a + other.a, self.b + other.b, self._merge_q(other))

    __radd__ = __add__

    def __sub__(self, other: Any) -> "Scalar":
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return Scalar(self.a - other.a, self.b - other.b, self._merge_q(other))

    def __rsub__(self, other: Any) -> "Scalar":
        return -self + other

    def __neg__(self) -> "Scalar":
        return Scalar(-self.a, -self.b, self.q)

    def __mul__(self, other: Any) -> "Scalar":
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        q = self._merge_q(other)
        if self.b.is_zero() and other.b.is_zero():
            return Scalar(self.a * other.a, 0, q)
        return Scalar(
            self.a * other.a + self.b * other.b * q,
            self.a * other.b + self.b * other.a,
            q,
        )

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        """Returns ``(a - b*sqrt(q)) / (a**2 - q*b**2)``.

        Raises
        ------
        ScalarZeroDivisionError
            If the scalar is zero.
        """
        if self.is_zero():
            raise ScalarZeroDivisionError("inverse of zero")
        if self.b.is_zero():
            return Scalar(self.a.inverse(), 0, self.q)
        norm = self.a * self.a - self.b * self.b * self.q
        # nonzero since q is not a square in Q(i) here
        norm_inverse = norm.inverse()
        return Scalar(self.a * norm_inverse, -self.b * norm_inverse, self.q)

    def __truediv__(self, other: Any) -> "Scalar":
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: Any) -> "Scalar":
        return Scalar.coerce(other) * self.inverse()

    def __pow__(self, k: int) -> "Scalar":
        if not isinstance(k, int):
            raise ScalarError(f"only integer powers are exact, got {k!r}")
        return _power(self, k, Scalar(1, 0, self.q))

    def __eq__(self, other: Any) -> bool:
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        if not self.b.is_zero() or not other.b.is_zero():
            self._merge_q(other)
        return self.a == other.a and self.b == other.b

    def __hash__(self) -> int:
        if self.b.is_zero():
            return hash(self.a)
        return hash((self.a, self.b, self.q))

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __complex__(self) -> complex:
        value = complex(self.a)
        if not self.b.is_zero():
            value += complex(self.b) * math.sqrt(self.q)
        return value

    def __repr__(self) -> str:
        return f"Scalar({self}, q={self.q})"

    def __str__(self) -> str:
        if self.b.is_zero():
            return str(self.a)
        if self.b.has_both_parts():
            root = f"({self.b})*sqrtq"
        elif self.b == 1:
            root = "sqrtq"
        elif self.b == -1:
            root = "-sqrtq"
        else:
            root = f"{self.b}*sqrtq"
        if self.a.is_zero():
            return root
        if root.startswith("-"):
            return f"{self.a}{root}"
        return f"{self.a}+{root}"

    def sort_key(self) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
        """A total order used only to print lists canonically."""
        return (self.a.re, self.a.im, self.b.re, self.b.im)


ScalarLike = Union[Scalar, GaussRational, Fraction, int]


def product(values: List[Any]) -> Scalar:
    """Multiplies a list of scalars (1 for an empty list)."""
    result = Scalar(1)
    for value in values:
        result = result * value
    return result


class _ScalarParser:
    """Recursive-descent parser for the textual form of scalars.

    Grammar::

        expr   := ["+" | "-"] term (("+" | "-") term)*
        term   := factor ("*" factor)*
        factor := NUMBER | "i" | "sqrtq" | "(" expr ")" | "-" factor
    """

    def __init__(self, text: str, q: Optional[int]):
        self.__text = text
        self.__q = q
        self.__lexemes = self.__lex(text)
        self.__position = 0

    def __lex(self, text: str) -> List[Tuple[str, str]]:
        lexemes: List[Tuple[str, str]] = []
        position = 0
        stripped = text.rstrip()
        while position < len(stripped):
            match = patterns.scalar_lexeme.match(stripped, position)
            if match is None or match.end() == position:
                raise ScalarError(f"malformed scalar: {text!r}")
            kind = match.lastgroup
            assert kind is not None
            lexemes.append((kind, match[kind]))
            position = match.end()
        if not lexemes:
            raise ScalarError(f"empty scalar: {text!r}")
        return lexemes

    def __peek(self) -> Optional[Tuple[str, str]]:
        if self.__position < len(self.__lexemes):
            return self.__lexemes[self.__position]
        return None

    def __take(self) -> Tuple[str, str]:
        lexeme = self.__peek()
        if lexeme is None:
            raise ScalarError(f"unexpected end of scalar: {self.__text!r}")
        self.__position += 1
        return lexeme

    def parse(self) -> Scalar:
        value = self.__expr()
        if self.__peek() is not None:
            raise ScalarError(f"trailing input in scalar: {self.__text!r}")
        return value

    def __expr(self) -> Scalar:
        lexeme = self.__peek()
        negate = False
        if lexeme is not None and lexeme[0] == "op" and lexeme[1] in "+-":
            self.__take()
            negate = lexeme[1] == "-"
        value = self.__term()
        if negate:
            value = -value
        while True:
            lexeme = self.__peek()
            if lexeme is None or lexeme[0] != "op" or lexeme[1] == "*":
                return value
            self.__take()
            if lexeme[1] == "+":
                value = value + self.__term()
            else:
                value = value - self.__term()

    def __term(self) -> Scalar:
        value = self.__factor()
        while True:
            lexeme = self.__peek()
            if lexeme != ("op", "*"):
                return value
            self.__take()
            value = value * self.__factor()

    def __factor(self) -> Scalar:
        kind, text = self.__take()
        if kind == "number":
            return Scalar(parse_rational(text))
        if kind == "unit":
            return Scalar(GaussRational(0, 1))
        if kind == "sqrtq":
            if self.__q is None:
                raise ScalarError(f"{self.__text!r} uses sqrtq but q is unknown")
            return Scalar.sqrt_q(self.__q)
        if (kind, text) == ("op", "-"):
            return -self.__factor()
        if (kind, text) == ("paren", "("):
            value = self.__expr()
            if self.__take() != ("paren", ")"):
                raise ScalarError(f"unbalanced parentheses: {self.__text!r}")
            return value
        raise ScalarError(f"unexpected {text!r} in scalar {self.__text!r}")
