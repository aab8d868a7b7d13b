"""Values of the normalized unramified Whittaker function on the torus.

For ``a(lam) = diag(w^lam_1, ..., w^lam_n)`` with w a uniformizer of F,
the Casselman-Shalika formula gives ``W(a(lam)) = 0`` unless lam is
weakly decreasing, and otherwise

 * inert_ramified: ``delta_E(a(lam))^(1/2) * s_2lam(t)``
 * inert_unramified: ``delta_E(a(lam))^(1/2) * s_lam(t)``
 * split: ``delta_F(a(lam)) * s_lam(t) * s_lam(u)``

Decreasing tuples with negative entries are reduced to partitions by the
central covariance ``W(a(lam + (c, ..., c))) = omega(w^c) W(a(lam))``.
"""
from typing import Callable
from typing import Dict
from typing import Sequence
from typing import Tuple

from asai_local.repdata import ExtensionType
from asai_local.repdata import LocalDatum
from asai_local.repdata import RepresentationError
from asai_local.repdata import UnramifiedRep
from asai_local.repdata import central_char_at_scalar
from asai_local.repdata import contragredient
from asai_local.repdata import delta_value
from asai_local.scalars import Scalar
from asai_local.symfunc import Partition
from asai_local.symfunc import schur_bialternant
from asai_local.symfunc import schur_jacobi_trudi


SCHUR_METHODS: Dict[str, Callable[[Partition, Sequence[Scalar]], Scalar]] = {
    "jacobi_trudi": schur_jacobi_trudi,
    "bialternant": schur_bialternant,
}


def is_decreasing(lam: Sequence[int]) -> bool:
    return all(a >= b for a, b in zip(lam, lam[1:]))


def cs_value(
    rep: UnramifiedRep, datum: LocalDatum, lam: Sequence[int], method: str = "jacobi_trudi"
) -> Scalar:
    """Evaluates ``W(a(lam))`` exactly.

    Parameters
    ----------
    rep : UnramifiedRep
        The representation.
    datum : LocalDatum
        The local setting.
    lam : Sequence[int]
        The exponents, one per diagonal entry. Any integers are
        accepted.
    method : str, optional
        The Schur polynomial algorithm, ``jacobi_trudi`` (default) or
        ``bialternant``. The latter needs distinct parameters.

    Returns
    -------
    Scalar
        0 if lam is not weakly decreasing.
    """
    lam = tuple(lam)
    if len(lam) != rep.n:
        raise RepresentationError(f"expected {rep.n} exponents, got {len(lam)}")
    if method not in SCHUR_METHODS:
        raise RepresentationError(f"unknown Schur method {method!r}")
    if not is_decreasing(lam):
        return Scalar(0)
    schur = SCHUR_METHODS[method]
    shift = lam[-1]
    mu = Partition(part - shift for part in lam)
    if datum.ext is ExtensionType.SPLIT:
        assert rep.u is not None
        value = delta_value(datum, "F", lam) * schur(mu, rep.t) * schur(mu, rep.u)
    elif datum.ext is ExtensionType.INERT_RAMIFIED:
        value = delta_value(datum, "E", lam, half=True) * schur(mu.doubled(), rep.t)
    else:
        value = delta_value(datum, "E", lam, half=True) * schur(mu, rep.t)
    if shift:
        value = value * central_char_at_scalar(rep, datum, shift)
    return value


def tilde_cs_value(
    rep: UnramifiedRep, datum: LocalDatum, lam: Sequence[int], method: str = "jacobi_trudi"
) -> Scalar:
    """Evaluates ``W~(a(lam))``, the normalized Whittaker function of the contragredient."""
    return cs_value(contragredient(rep), datum, lam, method)


def dual_lattice_point(lam: Sequence[int]) -> Tuple[int, ...]:
    """Returns ``(-lam_n, ..., -lam_1)``, the exponents of ``w_n ta(lam)^-1 w_n^-1``."""
    return tuple(-part for part in reversed(tuple(lam)))
