"""Local Zeta integrals of unramified data as lattice sums, and their checks.

By the Iwasawa decomposition, with ``phi`` the characteristic function of
``O_F^n`` and the volume of the maximal compact normalized to 1,

    Z(s, W, phi) = sum_{lam_n >= 0} W(a(lam)) delta_n(a(lam))^-1 X^|lam|,

where ``W(a(lam))`` vanishes unless lam is weakly decreasing. The dual
integral ``Z(1 - s, W~, phi^)`` is the same sum for the contragredient in
the variable ``Y = q^-(1-s)``.
"""
from itertools import product as cartesian
from typing import Dict
from typing import Iterator
from typing import List
from typing import Optional
from typing import Sequence
from typing import Tuple

from asai_local.factors import asai_L
from asai_local.factors import asai_epsilon
from asai_local.factors import asai_gamma
from asai_local.factors import epsilon_scaling
from asai_local.factors import l_factor_pair
from asai_local.factors import pair_count
from asai_local.laurent import Monomial
from asai_local.laurent import SeriesTruncation
from asai_local.laurent import series_expand
from asai_local.repdata import LocalDatum
from asai_local.repdata import RepresentationError
from asai_local.repdata import TauDatum
from asai_local.repdata import UnramifiedRep
from asai_local.repdata import central_char_at_scalar
from asai_local.repdata import central_char_value
from asai_local.repdata import contragredient
from asai_local.repdata import delta_value
from asai_local.report import VerifyReport
from asai_local.report import case_params
from asai_local.report import compare_ratfuncs
from asai_local.report import compare_series
from asai_local.scalars import Scalar
from asai_local.symfunc import partitions_up_to
from asai_local.whittaker import cs_value
from asai_local.whittaker import dual_lattice_point
from asai_local.whittaker import is_decreasing


def _summand(rep: UnramifiedRep, datum: LocalDatum, lam: Sequence[int]) -> Scalar:
    """``W(a(lam)) * delta_n(a(lam))^-1``."""
    value = cs_value(rep, datum, lam)
    if value.is_zero():
        return value
    return value * delta_value(datum, "F", lam).inverse()


def zeta_truncated(rep: UnramifiedRep, datum: LocalDatum, bound: int) -> SeriesTruncation:
    """Sums the Zeta integral over decreasing lam with ``lam_n >= 0``, ``|lam| <= bound``."""
    if bound < 0:
        raise RepresentationError(f"truncation bound must be nonnegative, got {bound}")
    rep.check(datum)
    terms: Dict[int, Scalar] = {}
    for lam in partitions_up_to(bound, rep.n):
        terms[lam.size] = terms.get(lam.size, Scalar(0)) + _summand(rep, datum, lam.parts)
    return SeriesTruncation.from_terms(bound, terms)


def zeta_truncated_naive(
    rep: UnramifiedRep, datum: LocalDatum, bound: int, box: Optional[int] = None
) -> SeriesTruncation:
    """Sums the Zeta integral over the whole box ``[-box, box]^n``.

    The support of W and of phi does the filtering. The box defaults to
    ``bound + 2``.
    """
    rep.check(datum)
    box = bound + 2 if box is None else box
    terms: Dict[int, Scalar] = {}
    for lam in cartesian(range(-box, box + 1), repeat=rep.n):
        size = sum(lam)
        if lam[-1] < 0 or not 0 <= size <= bound:
            continue
        terms[size] = terms.get(size, Scalar(0)) + _summand(rep, datum, lam)
    return SeriesTruncation.from_terms(bound, terms)


def verify_unramified_identity(rep: UnramifiedRep, datum: LocalDatum, bound: int) -> VerifyReport:
    """Checks ``Z(s, W, phi) = L(s, pi, As)`` coefficient by coefficient."""
    return compare_series(
        "unramified",
        case_params(datum, rep, depth=bound),
        zeta_truncated(rep, datum, bound),
        series_expand(asai_L(rep, datum), bound),
    )


def fe_prefactor(rep: UnramifiedRep, datum: LocalDatum, tau: TauDatum) -> Monomial:
    """``omega(tau)^(n-1) * |tau|_E^(P(s - 1/2)) * lam^-P`` with ``P = n(n-1)/2``.

    ``|tau|_E^(s - 1/2)`` is ``q_E^(d/2) * X^(d f)`` where ``q_E = q^f``.
    """
    tau = tau.for_datum(datum)
    pairs = pair_count(rep.n)
    f = datum.ext.residue_degree
    c = central_char_value(rep, datum, tau.d) ** (rep.n - 1)
    c = c * Scalar.q_half_power(datum.q, f * tau.d * pairs) * Scalar.coerce(tau.lam) ** -pairs
    return Monomial(c, tau.d * f * pairs)


def _fe_params(rep: UnramifiedRep, datum: LocalDatum, tau: TauDatum) -> Dict[str, object]:
    return case_params(datum, rep, d=tau.d, lam=tau.lam)


def verify_functional_equation(rep: UnramifiedRep, datum: LocalDatum, tau: TauDatum) -> VerifyReport:
    """Checks the functional equation of the unramified Zeta integrals.

    Both Zeta integrals equal L-factors here, so the check is the exact
    identity ``L(1 - s, pi~) = prefactor * gamma(s) * L(s, pi)``.
    """
    factor, dual_at_one_minus_s = l_factor_pair(rep, datum)
    rhs = fe_prefactor(rep, datum, tau).to_ratfunc() * asai_gamma(rep, datum, tau) * factor
    return compare_ratfuncs("fe", _fe_params(rep, datum, tau), dual_at_one_minus_s, rhs)


def verify_psi_independence(
    rep: UnramifiedRep, datum: LocalDatum, tau: TauDatum, val: int, eta: int
) -> VerifyReport:
    """Checks the functional equation after replacing psi' by ``psi'(lambda x)``.

    With ``v_F(lambda) = val`` and ``eta = eta_E/F(lambda)``, tau becomes
    ``lambda^-1 tau``, the Langlands constant is multiplied by eta, epsilon
    follows ``epsilon_scaling`` and the dual Zeta integral picks up
    ``omega(lambda) |lambda|_F^(n(s - 1/2))``.

    Raises
    ------
    RepresentationError
        For split data, or if ``lambda^-1 tau`` would have negative
        valuation.
    """
    if not datum.ext.is_inert:
        raise RepresentationError("changing psi' is checked for inert data")
    d = tau.d - datum.ext.ramification * val
    if d < 0:
        raise RepresentationError(f"the new tau would have valuation {d}")
    new_tau = TauDatum(d, tau.lam * eta)
    omega = central_char_at_scalar(rep, datum, val)
    eps = epsilon_scaling(asai_epsilon(rep, datum, tau), rep.n, omega, val, eta, datum.q)
    factor, dual_at_one_minus_s = l_factor_pair(rep, datum)
    lhs = Monomial(omega * Scalar.q_half_power(datum.q, val * rep.n), val * rep.n)
    lhs = lhs.to_ratfunc() * dual_at_one_minus_s
    gamma = eps.to_ratfunc() * dual_at_one_minus_s / factor
    rhs = fe_prefactor(rep, datum, new_tau).to_ratfunc() * gamma * factor
    params = case_params(datum, rep, d=tau.d, lam=tau.lam, val=val, eta=eta)
    return compare_ratfuncs("psi", params, lhs, rhs)


def twist_exponents(n: int, m: int) -> Tuple[int, ...]:
    """Returns ``(m(n-1), ..., m, 0)``, the exponents of ``a(w^m)``."""
    return tuple(m * (n - 1 - i) for i in range(n))


def _box(lower: List[int], total: int) -> Iterator[Tuple[int, ...]]:
    """Yields integer tuples above ``lower`` with sum at most ``total``."""
    slack = total - sum(lower)
    ranges = [range(low, low + slack + 1) for low in lower]
    for point in cartesian(*ranges):
        if sum(point) <= total:
            yield point


def twist_covariance_check(rep: UnramifiedRep, datum: LocalDatum, m: int, bound: int) -> VerifyReport:
    """Checks ``Z(s, W_l, phi) = delta_n(a(l)) |det a(l)|^-s Z(s, W, phi)`` for ``l = w^m``.

    ``W_l(g) = W(a(l) g)``. The left side is enumerated over a box of
    torus points; both sides are compared on ``X^-|nu| .. X^(bound - |nu|)``
    where ``nu = (m(n-1), ..., m, 0)``.
    """
    if m < 0:
        raise RepresentationError(f"the twist exponent must be nonnegative, got {m}")
    rep.check(datum)
    nu = twist_exponents(rep.n, m)
    shift = sum(nu)
    lower = [-part for part in nu]
    lower[-1] = 0
    terms: Dict[int, Scalar] = {}
    for mu in _box(lower, bound - shift):
        point = tuple(a + b for a, b in zip(nu, mu))
        if not is_decreasing(point):
            continue
        value = cs_value(rep, datum, point) * delta_value(datum, "F", mu).inverse()
        terms[sum(mu) + shift] = terms.get(sum(mu) + shift, Scalar(0)) + value
    lhs = SeriesTruncation.from_terms(bound, terms)
    scale = delta_value(datum, "F", nu)
    zeta = zeta_truncated(rep, datum, bound)
    rhs = SeriesTruncation(bound, [scale * c for c in zeta.coeffs])
    return compare_series("twist", case_params(datum, rep, m=m, depth=bound), lhs, rhs, -shift)


def dual_twist_covariance_check(rep: UnramifiedRep, datum: LocalDatum, m: int, bound: int) -> VerifyReport:
    """Checks the dual Zeta integral of ``W_l`` for ``l = w^m``.

    ``Z(1 - s, (W_l)~, phi^) = omega(l)^(n-1) delta_n(a(l)) |det a(l)|^(s-1) Z(1 - s, W~, phi^)``,
    as series in ``Y = q^-(1-s)``, with ``(W_l)~(a(mu)) = W(a(nu + mu*))``.
    The right side is the Zeta sum of the contragredient.
    """
    if m < 0:
        raise RepresentationError(f"the twist exponent must be nonnegative, got {m}")
    rep.check(datum)
    nu = twist_exponents(rep.n, m)
    shift = sum(nu)
    # nu + mu* decreasing with mu_n >= 0 forces mu_i >= -nu_1
    lower = [-nu[0]] * rep.n
    lower[-1] = 0
    terms: Dict[int, Scalar] = {}
    for mu in _box(lower, bound - shift):
        point = tuple(a + b for a, b in zip(nu, dual_lattice_point(mu)))
        if not is_decreasing(point):
            continue
        value = cs_value(rep, datum, point) * delta_value(datum, "F", mu).inverse()
        terms[sum(mu) + shift] = terms.get(sum(mu) + shift, Scalar(0)) + value
    lhs = SeriesTruncation.from_terms(bound, terms)
    omega = central_char_at_scalar(rep, datum, m) ** (rep.n - 1)
    scale = omega * delta_value(datum, "F", nu)
    zeta = zeta_truncated(contragredient(rep), datum, bound)
    rhs = SeriesTruncation(bound, [scale * c for c in zeta.coeffs])
    return compare_series("dual-twist", case_params(datum, rep, m=m, depth=bound), lhs, rhs, -shift)
