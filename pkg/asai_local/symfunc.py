"""Partitions and Schur polynomials evaluated at exact points.

Schur polynomials are computed by the Jacobi-Trudi determinant, which
handles repeated parameters. The bialternant formula is kept as an
independent cross-check for distinct parameters.

The three generating-series identities checked here are

 * Cauchy: ``sum s_l(t) s_l(u) X^|l| = prod (1 - t_i u_j X)^-1``
 * Littlewood: ``sum s_l(t) X^|l| = prod (1 - t_i X)^-1 prod_{i<j} (1 - t_i t_j X^2)^-1``
 * even Littlewood: ``sum s_2l(t) X^|l| = prod (1 - t_i^2 X)^-1 prod_{i<j} (1 - t_i t_j X)^-1``
"""
from functools import lru_cache
from itertools import combinations
from typing import Any
from typing import Iterator
from typing import List
from typing import Optional
from typing import Sequence
from typing import Tuple

from sympy.polys.matrices import DomainMatrix
from sympy.utilities.iterables import partitions as sympy_partitions

from asai_local.laurent import EulerProduct
from asai_local.laurent import SeriesTruncation
from asai_local.laurent import series_expand
from asai_local.numberfield import field_of
from asai_local.report import VerifyReport
from asai_local.report import compare_series
from asai_local.scalars import Scalar


IDENTITY_KINDS = ("cauchy", "littlewood", "littlewood_even")


class SchurError(ValueError):
    """Raised for invalid partitions or parameter lists."""


class Partition:
    """A weakly decreasing tuple of nonnegative integers.

    Trailing zeros are allowed and kept, so a partition can be padded to
    the number of variables it is evaluated at.

    Attributes
    ----------
    parts : Tuple[int, ...]
        The parts, largest first.
    """

    __slots__ = ("parts",)

    def __init__(self, parts: Sequence[int] = ()):
        parts = tuple(parts)
        if any(part < 0 for part in parts):
            raise SchurError(f"partition parts must be nonnegative: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise SchurError(f"partition parts must be weakly decreasing: {parts}")
        self.parts: Tuple[int, ...] = parts

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        """The number of nonzero parts."""
        return sum(1 for part in self.parts if part)

    def doubled(self) -> "Partition":
        return Partition(2 * part for part in self.parts)

    def padded(self, n: int) -> "Partition":
        if self.length > n:
            raise SchurError(f"{self} has more than {n} nonzero parts")
        nonzero = self.parts[: self.length]
        return Partition(nonzero + (0,) * (n - len(nonzero)))

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, Partition):
            return self.parts[: self.length] == other.parts[: other.length]
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.parts[: self.length])

    def __repr__(self) -> str:
        return f"Partition({self.parts})"


@lru_cache(maxsize=None)
def partitions(size: int, max_parts: int) -> Tuple[Partition, ...]:
    """Lists the partitions of ``size`` with at most ``max_parts`` parts.

    Each partition is padded with zeros to exactly ``max_parts`` parts.
    The list is in lexicographic order.
    """
    if max_parts < 1:
        return (Partition(),) if size == 0 else ()
    padded = []
    for multiplicities in sympy_partitions(size, m=max_parts):
        parts = sorted((part for part, count in multiplicities.items() for _ in range(count)), reverse=True)
        padded.append(tuple(parts) + (0,) * (max_parts - len(parts)))
    return tuple(Partition(parts) for parts in sorted(padded))


def partitions_up_to(bound: int, max_parts: int) -> Iterator[Partition]:
    """Yields the partitions of size 0 through ``bound``, by size."""
    for size in range(bound + 1):
        yield from partitions(size, max_parts)


@lru_cache(maxsize=4096)
def elementary_symmetric(t: Tuple[Scalar, ...]) -> Tuple[Scalar, ...]:
    """Returns ``(e_0, e_1, ..., e_n)`` of the parameters."""
    e: List[Scalar] = [Scalar(1)]
    for x in t:
        e = [Scalar(1)] + [e[j] + x * e[j - 1] for j in range(1, len(e))] + [x * e[-1]]
    return tuple(e)


@lru_cache(maxsize=65536)
def complete_symmetric(t: Tuple[Scalar, ...], k: int) -> Scalar:
    """Returns ``h_k(t)`` by ``h_k = sum_j (-1)^(j-1) e_j h_(k-j)``."""
    if k < 0:
        return Scalar(0)
    if k == 0:
        return Scalar(1)
    e = elementary_symmetric(t)
    value = Scalar(0)
    for j in range(1, min(k, len(t)) + 1):
        term = e[j] * complete_symmetric(t, k - j)
        value = value + term if j % 2 else value - term
    return value


def determinant(matrix: Sequence[Sequence[Any]]) -> Scalar:
    """Computes an exact determinant with a sympy DomainMatrix over the scalars' field."""
    if not matrix:
        return Scalar(1)
    rows = [[Scalar.coerce(x) for x in row] for row in matrix]
    field = field_of(x for row in rows for x in row)
    elements = [[field.element(x) for x in row] for row in rows]
    return field.scalar(DomainMatrix(elements, (len(rows), len(rows)), field.domain).det())


def _as_partition(lam: Any) -> Partition:
    return lam if isinstance(lam, Partition) else Partition(lam)


def schur_jacobi_trudi(lam: Any, t: Sequence[Any]) -> Scalar:
    """Evaluates the Schur polynomial ``s_lam(t)`` as ``det(h_(lam_i - i + j))``.

    Parameters
    ----------
    lam : Partition or Sequence[int]
        The partition.
    t : Sequence[Scalar]
        The parameters. Repeated values are allowed.

    Raises
    ------
    SchurError
        If the partition has more nonzero parts than there are
        parameters.
    """
    lam = _as_partition(lam)
    t = tuple(Scalar.coerce(x) for x in t)
    if lam.length > len(t):
        raise SchurError(f"{lam} has more nonzero parts than the {len(t)} parameters")
    size = lam.length
    matrix = [
        [complete_symmetric(t, lam[i] - i + j) for j in range(size)]
        for i in range(size)
    ]
    return determinant(matrix)


def schur_bialternant(lam: Any, t: Sequence[Any]) -> Scalar:
    """Evaluates ``s_lam(t)`` as ``det(t_i^(lam_j + n - j)) / det(t_i^(n - j))``.

    Raises
    ------
    SchurError
        If two parameters are equal, since the Vandermonde determinant
        vanishes. Use ``schur_jacobi_trudi`` for those.
    """
    lam = _as_partition(lam)
    t = tuple(Scalar.coerce(x) for x in t)
    n = len(t)
    if len(set(t)) < n:
        raise SchurError("the bialternant needs distinct parameters; use schur_jacobi_trudi")
    parts = lam.padded(n)
    numerator = determinant([[x ** (parts[j] + n - 1 - j) for j in range(n)] for x in t])
    vandermonde = determinant([[x ** (n - 1 - j) for j in range(n)] for x in t])
    return numerator / vandermonde


def cauchy_product(t: Sequence[Any], u: Sequence[Any]) -> EulerProduct:
    """``prod_{i,j} (1 - t_i u_j X)^-1``."""
    return EulerProduct((Scalar.coerce(a) * b, 1) for a in t for b in u)


def littlewood_product(t: Sequence[Any]) -> EulerProduct:
    """``prod_i (1 - t_i X)^-1 prod_{i<j} (1 - t_i t_j X^2)^-1``."""
    factors = [(Scalar.coerce(a), 1) for a in t]
    factors += [(Scalar.coerce(a) * b, 2) for a, b in combinations(t, 2)]
    return EulerProduct(factors)


def littlewood_even_product(t: Sequence[Any]) -> EulerProduct:
    """``prod_i (1 - t_i^2 X)^-1 prod_{i<j} (1 - t_i t_j X)^-1``."""
    factors = [(Scalar.coerce(a) * a, 1) for a in t]
    factors += [(Scalar.coerce(a) * b, 1) for a, b in combinations(t, 2)]
    return EulerProduct(factors)


def schur_series(kind: str, t: Sequence[Any], u: Optional[Sequence[Any]], bound: int) -> SeriesTruncation:
    """Sums the Schur side of an identity up to ``X^bound``."""
    if kind == "cauchy":
        assert u is not None
        max_parts = min(len(t), len(u))
    else:
        max_parts = len(t)
    coeffs: List[Scalar] = []
    for size in range(bound + 1):
        total = Scalar(0)
        for lam in partitions(size, max_parts):
            if kind == "cauchy":
                assert u is not None
                total = total + schur_jacobi_trudi(lam, t) * schur_jacobi_trudi(lam, u)
            elif kind == "littlewood":
                total = total + schur_jacobi_trudi(lam, t)
            else:
                total = total + schur_jacobi_trudi(lam.doubled(), t)
        coeffs.append(total)
    return SeriesTruncation(bound, coeffs)


def identity_check(
    kind: str, t: Sequence[Any], u: Optional[Sequence[Any]] = None, bound: int = 10
) -> VerifyReport:
    """Checks a generating-series identity for Schur polynomials.

    Parameters
    ----------
    kind : str
        One of ``cauchy``, ``littlewood`` or ``littlewood_even``.
    t : Sequence[Scalar]
        Nonzero parameters.
    u : Sequence[Scalar], optional
        The second list of nonzero parameters, for ``cauchy`` only.
    bound : int, optional
        The degree up to which both sides are compared.

    Returns
    -------
    VerifyReport
        A pass, or the first degree where the Schur sum and the
        expanded product differ.
    """
    if kind not in IDENTITY_KINDS:
        raise SchurError(f"unknown identity {kind!r}; expected one of {IDENTITY_KINDS}")
    if (u is not None) != (kind == "cauchy"):
        raise SchurError("a second parameter list is needed for cauchy and only for cauchy")
    t = [Scalar.coerce(x) for x in t]
    u = None if u is None else [Scalar.coerce(x) for x in u]
    if any(x.is_zero() for x in t + (u or [])):
        raise SchurError("identity parameters must be nonzero")
    if kind == "cauchy":
        assert u is not None
        closed_form = cauchy_product(t, u)
    elif kind == "littlewood":
        closed_form = littlewood_product(t)
    else:
        closed_form = littlewood_even_product(t)
    params = {"kind": kind, "n": len(t), "depth": bound}
    return compare_series(
        f"identity-{kind}",
        params,
        schur_series(kind, t, u, bound),
        series_expand(closed_form, bound),
    )
