"""The local arithmetic setting.

A computation is pinned by a ``LocalDatum`` (the residue cardinality q
of F and the type of the quadratic algebra E), an ``UnramifiedRep``
(Satake parameters) and a ``TauDatum`` (the valuation of the trace-zero
element tau and the Langlands constant of E/F).

In the inert cases the Satake parameters are ``t_i = chi_i(uniformizer
of E)``. In the split case E = F x F and the representation is a pair
of representations of GL_n(F) with parameters ``t`` and ``u``.
"""
from enum import Enum
from typing import Any
from typing import Optional
from typing import Sequence
from typing import Tuple

from asai_local.scalars import GaussRational
from asai_local.scalars import Scalar
from asai_local.scalars import product


class RepresentationError(ValueError):
    """Raised for inconsistent local data."""


class ExtensionType(Enum):
    """The three kinds of quadratic etale algebra E over F."""

    SPLIT = "split"
    INERT_UNRAMIFIED = "inert_unramified"
    INERT_RAMIFIED = "inert_ramified"

    @property
    def is_inert(self) -> bool:
        return self is not ExtensionType.SPLIT

    @property
    def ramification(self) -> int:
        """The E-valuation of a uniformizer of F."""
        return 2 if self is ExtensionType.INERT_RAMIFIED else 1

    @property
    def residue_degree(self) -> int:
        """The exponent f with ``q_E = q^f``."""
        return 2 if self is ExtensionType.INERT_UNRAMIFIED else 1

    def __str__(self) -> str:
        return self.value


FOURTH_ROOTS_OF_UNITY = (
    GaussRational(1),
    GaussRational(0, 1),
    GaussRational(-1),
    GaussRational(0, -1),
)


def _is_prime_power(q: int) -> bool:
    p = 2
    while p * p <= q:
        if q % p == 0:
            while q % p == 0:
                q //= p
            return q == 1
        p += 1
    return q > 1


class LocalDatum:
    """The residue cardinality of F and the type of E.

    Attributes
    ----------
    q : int
        The residue cardinality of F, a prime power.
    ext : ExtensionType
        The type of E.
    """

    __slots__ = ("q", "ext")

    def __init__(self, q: int, ext: Any):
        if not isinstance(q, int) or q < 2 or not _is_prime_power(q):
            raise RepresentationError(f"q must be a prime power, got {q!r}")
        self.q = q
        self.ext = ExtensionType(ext)

    @property
    def q_e(self) -> int:
        """The residue cardinality of E."""
        return self.q**self.ext.residue_degree

    @property
    def x_per_q_e(self) -> int:
        """The power of X equal to ``q_E^(-s)`` (1 for split data)."""
        return self.ext.residue_degree

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, LocalDatum):
            return NotImplemented
        return (self.q, self.ext) == (other.q, other.ext)

    def __hash__(self) -> int:
        return hash((self.q, self.ext))

    def __repr__(self) -> str:
        return f"LocalDatum(q={self.q}, ext={self.ext})"


class UnramifiedRep:
    """An unramified representation given by its Satake parameters.

    Attributes
    ----------
    n : int
        The rank.
    t : Tuple[Scalar, ...]
        The Satake parameters. In the split case, those of the first
        factor.
    u : Tuple[Scalar, ...], None
        The Satake parameters of the second factor in the split case.
    """

    __slots__ = ("n", "t", "u")

    def __init__(self, t: Sequence[Any], u: Optional[Sequence[Any]] = None):
        self.t: Tuple[Scalar, ...] = tuple(Scalar.coerce(x) for x in t)
        self.u: Optional[Tuple[Scalar, ...]] = None if u is None else tuple(Scalar.coerce(x) for x in u)
        self.n = len(self.t)
        if self.n < 1:
            raise RepresentationError("a representation needs at least one Satake parameter")
        if self.u is not None and len(self.u) != self.n:
            raise RepresentationError(
                f"the two parameter lists have lengths {self.n} and {len(self.u)}"
            )
        if any(x.is_zero() for x in self.all_params()):
            raise RepresentationError("Satake parameters must be nonzero")

    def all_params(self) -> Tuple[Scalar, ...]:
        return self.t + (self.u or ())

    def check(self, datum: LocalDatum) -> None:
        """Raises if the parameter lists do not fit the extension type."""
        if datum.ext.is_inert and self.u is not None:
            raise RepresentationError(f"{datum.ext} data takes a single parameter list")
        if not datum.ext.is_inert and self.u is None:
            raise RepresentationError("split data needs a second parameter list")

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, UnramifiedRep):
            return NotImplemented
        return (self.t, self.u) == (other.t, other.u)

    def __hash__(self) -> int:
        return hash((self.t, self.u))

    def __repr__(self) -> str:
        t = ", ".join(map(str, self.t))
        if self.u is None:
            return f"UnramifiedRep(t=({t}))"
        u = ", ".join(map(str, self.u))
        return f"UnramifiedRep(t=({t}), u=({u}))"


class TauDatum:
    """The normalization datum of the functional equation.

    Attributes
    ----------
    d : int
        The E-valuation of tau. Ignored in the split case.
    lam : GaussRational
        The Langlands constant of E/F, a fourth root of unity. Equal to
        1 in the split case.
    """

    __slots__ = ("d", "lam")

    def __init__(self, d: int = 0, lam: Any = 1):
        if d < 0:
            raise RepresentationError(f"the valuation of tau must be nonnegative, got {d}")
        lam = GaussRational.coerce(lam)
        if lam not in FOURTH_ROOTS_OF_UNITY:
            raise RepresentationError(f"lambda_ef must be one of 1, i, -1, -i, got {lam}")
        self.d = d
        self.lam = lam

    @classmethod
    def default_for(cls, datum: LocalDatum) -> "TauDatum":
        """A unit tau for inert_unramified data, valuation 1 for inert_ramified."""
        if datum.ext is ExtensionType.INERT_RAMIFIED:
            return cls(1)
        return cls(0)

    def for_datum(self, datum: LocalDatum) -> "TauDatum":
        """Returns the datum actually used: tau = (1, -1) when E splits."""
        if datum.ext.is_inert:
            return self
        return TauDatum(0, 1)

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, TauDatum):
            return NotImplemented
        return (self.d, self.lam) == (other.d, other.lam)

    def __hash__(self) -> int:
        return hash((self.d, self.lam))

    def __repr__(self) -> str:
        return f"TauDatum(d={self.d}, lam={self.lam})"


def contragredient(rep: UnramifiedRep) -> UnramifiedRep:
    """Inverts every Satake parameter."""
    u = None if rep.u is None else [x.inverse() for x in rep.u]
    return UnramifiedRep([x.inverse() for x in rep.t], u)


def central_char_value(rep: UnramifiedRep, datum: LocalDatum, v: int) -> Scalar:
    """Returns the central character at an element of E-valuation v.

    This is ``prod t_i^v`` in the inert cases. In the split case tau is
    ``(1, -1)``, a unit, and the value is 1.
    """
    if not datum.ext.is_inert:
        return Scalar(1)
    return product([x**v for x in rep.t])


def central_char_at_scalar(rep: UnramifiedRep, datum: LocalDatum, val: int) -> Scalar:
    """Returns the central character at the F-scalar of F-valuation val."""
    if datum.ext.is_inert:
        return central_char_value(rep, datum, datum.ext.ramification * val)
    assert rep.u is not None
    return product([x**val for x in rep.t + rep.u])


def delta_exponent(lam: Sequence[int]) -> int:
    """Returns k with ``delta_n(a(lam)) = q^k`` over F."""
    n = len(lam)
    return -sum((n + 1 - 2 * i) * part for i, part in enumerate(lam, start=1))


def delta_value(datum: LocalDatum, over: str, lam: Sequence[int], half: bool = False) -> Scalar:
    """Evaluates the modular character at ``a(lam) = diag(w^lam_1, ..., w^lam_n)``.

    Parameters
    ----------
    datum : LocalDatum
        The local setting.
    over : str
        ``"F"`` for delta_n or ``"E"`` for delta_(n,E). On the diagonal
        of GL_n(F) the latter is the square of the former for all three
        types of E.
    lam : Sequence[int]
        The exponents of the uniformizer of F.
    half : bool, optional
        Whether to return the square root of the value.
    """
    if over not in ("F", "E"):
        raise RepresentationError(f"delta is taken over F or E, not {over!r}")
    exponent = delta_exponent(lam) * (2 if over == "E" else 1)
    return Scalar.q_half_power(datum.q, exponent if half else 2 * exponent)


def unramified_twist(rep: UnramifiedRep, datum: LocalDatum, k: int) -> UnramifiedRep:
    """Twists by ``|det|_E^(k/2)``, multiplying each parameter by ``q_E^(-k/2)``."""
    factor = Scalar.q_half_power(datum.q, -datum.ext.residue_degree * k)
    u = None if rep.u is None else [x * factor for x in rep.u]
    return UnramifiedRep([x * factor for x in rep.t], u)
