"""Local Asai L-, epsilon- and gamma-factors of unramified data.

With ``X = q^(-s)`` (q the residue cardinality of F) and ``P = n(n-1)/2``:

 * inert_ramified: ``L = prod_i (1 - t_i^2 X)^-1 prod_{i<j} (1 - t_i t_j X)^-1``
 * inert_unramified: ``L = prod_i (1 - t_i X)^-1 prod_{i<j} (1 - t_i t_j X^2)^-1``
 * split: ``L = prod_{i,j} (1 - t_i u_j X)^-1``, the Rankin-Selberg factor

and, for the inert types,
``eps = lam^P * |tau|_E^(P(1/2 - s)) * omega(tau)^(1-n)``. The split
epsilon factor of unramified data is 1.
"""
import cmath
import math
from functools import lru_cache
from itertools import combinations
from typing import Any
from typing import Iterable
from typing import List
from typing import Optional
from typing import Sequence
from typing import Tuple
from typing import Union

from asai_local.laurent import EulerProduct
from asai_local.laurent import Monomial
from asai_local.laurent import RatFunc
from asai_local.laurent import as_ratfunc
from asai_local.laurent import series_expand
from asai_local.laurent import subst_one_minus_s
from asai_local.laurent import subst_scale
from asai_local.repdata import ExtensionType
from asai_local.repdata import LocalDatum
from asai_local.repdata import RepresentationError
from asai_local.repdata import TauDatum
from asai_local.repdata import UnramifiedRep
from asai_local.repdata import central_char_value
from asai_local.repdata import contragredient
from asai_local.repdata import unramified_twist
from asai_local.report import VerifyReport
from asai_local.report import case_params
from asai_local.report import compare_series
from asai_local.scalars import Scalar


def pair_count(n: int) -> int:
    """Returns ``n(n-1)/2``."""
    return n * (n - 1) // 2


def asai_factor_shape(
    ext: ExtensionType, t: Sequence[Any], u: Sequence[Any] = ()
) -> List[Tuple[Any, int]]:
    """Lists the ``(alpha, m)`` pairs of the Asai L-factor.

    Works for exact scalars and for complex floats alike.

    Parameters
    ----------
    ext : ExtensionType
        The type of E.
    t : Sequence
        The Satake parameters.
    u : Sequence, optional
        The second parameter list, for split data.
    """
    if ext is ExtensionType.SPLIT:
        return [(a * b, 1) for a in t for b in u]
    if ext is ExtensionType.INERT_RAMIFIED:
        return [(a * a, 1) for a in t] + [(a * b, 1) for a, b in combinations(t, 2)]
    return [(a, 1) for a in t] + [(a * b, 2) for a, b in combinations(t, 2)]


def asai_L(rep: UnramifiedRep, datum: LocalDatum) -> EulerProduct:
    """Returns the Asai L-factor as an Euler product in X."""
    rep.check(datum)
    return EulerProduct(asai_factor_shape(datum.ext, rep.t, rep.u or ()))


def asai_epsilon(rep: UnramifiedRep, datum: LocalDatum, tau: TauDatum) -> Monomial:
    """Returns the Asai epsilon factor as a monomial in X.

    The split factor is the constant 1.
    """
    rep.check(datum)
    if not datum.ext.is_inert:
        return Monomial(1)
    pairs = pair_count(rep.n)
    f = datum.ext.residue_degree
    omega = central_char_value(rep, datum, tau.d)
    c = Scalar.coerce(tau.lam) ** pairs
    c = c * Scalar.q_half_power(datum.q, -f * tau.d * pairs) * omega ** (1 - rep.n)
    return Monomial(c, -tau.d * f * pairs)


@lru_cache(maxsize=1024)
def l_factor_pair(rep: UnramifiedRep, datum: LocalDatum) -> Tuple[RatFunc, RatFunc]:
    """Returns ``L(s, pi)`` and ``L(1 - s, contragredient)`` as rational functions.

    Neither depends on tau, so the checks over a grid of tau share them.
    """
    dual = asai_L(contragredient(rep), datum)
    return asai_L(rep, datum).to_ratfunc(), as_ratfunc(subst_one_minus_s(dual, datum.q))


def asai_gamma(rep: UnramifiedRep, datum: LocalDatum, tau: TauDatum) -> RatFunc:
    """Returns ``eps(s) * L(1 - s, contragredient) / L(s)``."""
    factor, dual_at_one_minus_s = l_factor_pair(rep, datum)
    return asai_epsilon(rep, datum, tau).to_ratfunc() * dual_at_one_minus_s / factor


def epsilon_scaling(
    eps: Monomial,
    n: int,
    omega_at_scale: Any,
    val_scale: int,
    eta_at_scale: int,
    q: Optional[int] = None,
) -> Monomial:
    """Changes the additive character from psi' to ``psi'(lambda x)``.

    Parameters
    ----------
    eps : Monomial
        The epsilon factor for psi'.
    n : int
        The rank.
    omega_at_scale : Scalar
        The central character at lambda.
    val_scale : int
        The F-valuation of lambda.
    eta_at_scale : int
        The quadratic character of E/F at lambda, +1 or -1.
    q : int, optional
        The residue cardinality of F. Needed when val_scale is nonzero
        and the coefficient of eps does not carry q.

    Returns
    -------
    Monomial
        ``eps * omega^n * |lambda|_F^(n^2 (s - 1/2)) * eta^(n(n-1)/2)``,
        where ``|lambda|_F^(s - 1/2) = q^(val/2) * X^val``.
    """
    if eta_at_scale not in (1, -1):
        raise RepresentationError(f"eta must be +1 or -1, got {eta_at_scale}")
    q = q if q is not None else eps.c.q
    scale = Scalar.coerce(omega_at_scale) ** n * eta_at_scale ** pair_count(n)
    return eps * Monomial(scale, 0) * _q_scaling(q, val_scale * n * n)


def _q_scaling(q: Any, k: int) -> Monomial:
    """``q^(k/2) * X^k``, which is ``q^(-k(s - 1/2))``."""
    if k == 0:
        return Monomial(1)
    if q is None:
        raise RepresentationError("scaling by a nonunit needs the value of q")
    return Monomial(Scalar.q_half_power(q, k), k)


def pole_report(
    L: Union[EulerProduct, Iterable[Tuple[Any, int]]], q: int
) -> List[complex]:
    """Finds the poles of an L-factor modulo ``2 pi i / log q``.

    Parameters
    ----------
    L : EulerProduct or Iterable[Tuple[complex, int]]
        The exact L-factor, or its ``(alpha, m)`` pairs with float
        parameters.
    q : int
        The residue cardinality of F.

    Returns
    -------
    List[complex]
        For each factor ``1 - alpha X^m`` the m values
        ``(log alpha + 2 pi i k) / (m log q)``, k = 0, ..., m - 1.
    """
    pairs = L.factors if isinstance(L, EulerProduct) else L
    log_q = math.log(q)
    poles: List[complex] = []
    for alpha, m in pairs:
        log_alpha = cmath.log(complex(alpha))
        for k in range(m):
            poles.append((log_alpha + 2j * math.pi * k) / (m * log_q))
    return poles


def root_number(rep: UnramifiedRep, datum: LocalDatum, tau: TauDatum) -> Scalar:
    """Evaluates the epsilon factor at ``s = 1/2``."""
    return asai_epsilon(rep, datum, tau).evaluate(Scalar.q_half_power(datum.q, -1))


def _block_parameters(blocks: Sequence[Sequence[Any]], datum: LocalDatum) -> List[Tuple[Scalar, ...]]:
    if not datum.ext.is_inert:
        raise RepresentationError("block decompositions are for inert data")
    if not blocks or any(not block for block in blocks):
        raise RepresentationError("every block needs at least one parameter")
    return [tuple(Scalar.coerce(x) for x in block) for block in blocks]


def asai_L_from_blocks(blocks: Sequence[Sequence[Any]], datum: LocalDatum) -> EulerProduct:
    """Assembles L from a block decomposition of the Satake parameters.

    ``L = prod_i L(sigma_i, As) prod_{i<j} L(sigma_i x sigma_j)``, where the
    Rankin-Selberg factors are over E, i.e. in ``q_E^(-s) = X^f``.
    """
    parts = _block_parameters(blocks, datum)
    f = datum.ext.residue_degree
    result = EulerProduct()
    for block in parts:
        result = result * asai_L(UnramifiedRep(block), datum)
    for left, right in combinations(parts, 2):
        result = result * EulerProduct((a * b, f) for a in left for b in right)
    return result


def asai_epsilon_from_blocks(
    blocks: Sequence[Sequence[Any]], datum: LocalDatum, tau: TauDatum
) -> Monomial:
    """Assembles epsilon from a block decomposition of the Satake parameters.

    Each pair of blocks of sizes ``n_i``, ``n_j`` contributes
    ``lam^(n_i n_j)`` and the Rankin-Selberg factor over E,
    ``prod_{a, b} |tau|_E^(1/2 - s) (ab)^(-d)``.
    """
    parts = _block_parameters(blocks, datum)
    f = datum.ext.residue_degree
    result = Monomial(1)
    for block in parts:
        result = result * asai_epsilon(UnramifiedRep(block), datum, tau)
    lam = Scalar.coerce(tau.lam)
    for left, right in combinations(parts, 2):
        result = result * lam ** (len(left) * len(right))
        for a in left:
            for b in right:
                pair = Monomial(Scalar.q_half_power(datum.q, -f * tau.d), -f * tau.d)
                result = result * pair * (a * b) ** -tau.d
    return result


def verify_twist_shift(rep: UnramifiedRep, datum: LocalDatum, k: int, bound: int) -> VerifyReport:
    """Checks ``L(s, pi x |det|_E^(k/2)) = L(s + k, pi)`` up to ``X^bound``."""
    twisted = asai_L(unramified_twist(rep, datum, k), datum)
    shifted = subst_scale(asai_L(rep, datum), Scalar(datum.q) ** -k)
    params = case_params(datum, rep, k=k)
    return compare_series("twist-shift", params, series_expand(twisted, bound), series_expand(shifted, bound))
