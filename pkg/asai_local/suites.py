"""Seeded verification suites.

Each suite draws its cases from its own generator,
``random.Random(f"{seed}:{suite}")``, so a suite's records do not depend
on which other suites run. Cases are produced and reported in a fixed
order; the same seed and flags give byte-identical output.
"""
import cmath
import logging
import math
import random
import time
from fractions import Fraction
from typing import Callable
from typing import Dict
from typing import List
from typing import Optional
from typing import Sequence
from typing import Tuple

import numpy as np

from asai_local import archimedean
from asai_local.config import Config
from asai_local.factors import asai_L
from asai_local.factors import asai_L_from_blocks
from asai_local.factors import asai_epsilon
from asai_local.factors import asai_epsilon_from_blocks
from asai_local.factors import asai_factor_shape
from asai_local.factors import epsilon_scaling
from asai_local.factors import pole_report
from asai_local.factors import verify_twist_shift
from asai_local.formatter_ import format_residual
from asai_local.laurent import Monomial
from asai_local.repdata import FOURTH_ROOTS_OF_UNITY
from asai_local.repdata import ExtensionType
from asai_local.repdata import LocalDatum
from asai_local.repdata import TauDatum
from asai_local.repdata import UnramifiedRep
from asai_local.repdata import contragredient
from asai_local.report import FAIL
from asai_local.report import PASS
from asai_local.report import VerifyReport
from asai_local.report import case_params
from asai_local.report import compare_ratfuncs
from asai_local.scalars import GaussRational
from asai_local.scalars import Scalar
from asai_local.settings import settings
from asai_local.symfunc import IDENTITY_KINDS
from asai_local.symfunc import identity_check
from asai_local.symfunc import partitions
from asai_local.symfunc import schur_bialternant
from asai_local.symfunc import schur_jacobi_trudi
from asai_local.zeta import dual_twist_covariance_check
from asai_local.zeta import twist_covariance_check
from asai_local.zeta import verify_functional_equation
from asai_local.zeta import verify_psi_independence
from asai_local.zeta import verify_unramified_identity


logger = logging.getLogger(__name__)

EXTENSION_TYPES = (ExtensionType.SPLIT, ExtensionType.INERT_UNRAMIFIED, ExtensionType.INERT_RAMIFIED)
INERT_TYPES = (ExtensionType.INERT_UNRAMIFIED, ExtensionType.INERT_RAMIFIED)

Case = Tuple[LocalDatum, UnramifiedRep, TauDatum]


class SuiteRun:
    """The parameters shared by every suite of one run.

    Attributes
    ----------
    seed : int
        The seed of the run.
    depth : int
        The truncation degree N.
    n_max : int
        The largest rank drawn.
    config : Config, None
        If given, the suites that take one case run on it alone instead
        of random cases.
    """

    def __init__(
        self,
        seed: Optional[int] = None,
        depth: Optional[int] = None,
        n_max: Optional[int] = None,
        config: Optional[Config] = None,
    ):
        self.seed = settings["seed"] if seed is None else seed
        self.depth = settings["depth"] if depth is None else depth
        self.n_max = settings["n_max"] if n_max is None else n_max
        self.config = config

    def rng(self, suite: str) -> random.Random:
        return random.Random(f"{self.seed}:{suite}")


def random_rational(rng: random.Random, bound: int) -> Fraction:
    """A nonzero ``a/b`` with ``1 <= |a|, b <= bound``."""
    return Fraction(rng.choice((-1, 1)) * rng.randint(1, bound), rng.randint(1, bound))


def random_scalar(rng: random.Random, bound: Optional[int] = None) -> Scalar:
    """A nonzero Gaussian rational; the imaginary part is drawn with probability 1/2."""
    bound = bound or settings["numerator_bound"]
    re = random_rational(rng, bound)
    im = random_rational(rng, bound) if rng.random() < 0.5 else Fraction(0)
    return Scalar(GaussRational(re, im))


def random_rep(rng: random.Random, ext: ExtensionType, n: int) -> UnramifiedRep:
    t = [random_scalar(rng) for _ in range(n)]
    u = [random_scalar(rng) for _ in range(n)] if ext is ExtensionType.SPLIT else None
    return UnramifiedRep(t, u)


def random_datum(rng: random.Random, ext: ExtensionType) -> LocalDatum:
    return LocalDatum(rng.choice(settings["q_choices"]), ext)


def random_cases(
    run: SuiteRun, rng: random.Random, types: Sequence[ExtensionType], ranks: Sequence[int], count: int
) -> List[Case]:
    """Draws ``count`` cases per extension type and rank, or returns the config's case."""
    if run.config is not None:
        config = run.config
        if config.datum.ext not in types:
            return []
        return [(config.datum, config.rep, config.tau)]
    cases: List[Case] = []
    for ext in types:
        for n in ranks:
            for _ in range(count):
                datum = random_datum(rng, ext)
                cases.append((datum, random_rep(rng, ext, n), TauDatum.default_for(datum)))
    return cases


def _ranks(run: SuiteRun, cap: Optional[int] = None) -> range:
    return range(1, min(run.n_max, cap or run.n_max) + 1)


def _float_report(case: str, params: Dict[str, object], residual: float, tolerance: float) -> VerifyReport:
    status = PASS if residual < tolerance else FAIL
    return VerifyReport(case, params, status, note=f"residual={format_residual(residual)}")


def unramified_suite(run: SuiteRun) -> List[VerifyReport]:
    """Zeta sums against L-factors, for each case and its contragredient."""
    rng = run.rng("unramified")
    reports: List[VerifyReport] = []
    for datum, rep, _ in random_cases(run, rng, EXTENSION_TYPES, _ranks(run), settings["cases_per_type"]):
        reports.append(verify_unramified_identity(rep, datum, run.depth))
        dual = verify_unramified_identity(contragredient(rep), datum, run.depth)
        dual.case = "unramified-dual"
        reports.append(dual)
    return reports


def fe_suite(run: SuiteRun) -> List[VerifyReport]:
    """The functional equation over the grid of tau valuations and Langlands constants.

    A case whose status changes across the grid gets an extra failing
    ``fe-cancellation`` record.
    """
    rng = run.rng("fe")
    reports: List[VerifyReport] = []
    for datum, rep, tau in random_cases(run, rng, EXTENSION_TYPES, _ranks(run), settings["cases_per_type"]):
        if run.config is not None:
            grid = [tau]
        else:
            # split data ignore tau, so every grid point must agree there too
            grid = [TauDatum(d, lam) for d in settings["tau_valuations"] for lam in FOURTH_ROOTS_OF_UNITY]
        case_reports = [verify_functional_equation(rep, datum, point) for point in grid]
        reports.extend(case_reports)
        if len({report.status for report in case_reports}) > 1:
            reports.append(VerifyReport("fe-cancellation", case_params(datum, rep), FAIL))
    return reports


def identities_suite(run: SuiteRun) -> List[VerifyReport]:
    """Cauchy, Littlewood and even Littlewood identities."""
    rng = run.rng("identities")
    reports: List[VerifyReport] = []
    for kind in IDENTITY_KINDS:
        for _ in range(settings["identity_cases"]):
            n = rng.randint(1, run.n_max)
            t = [random_scalar(rng) for _ in range(n)]
            u = [random_scalar(rng) for _ in range(n)] if kind == "cauchy" else None
            reports.append(identity_check(kind, t, u, settings["identity_depth"]))
    return reports


def schur_suite(run: SuiteRun) -> List[VerifyReport]:
    """Jacobi-Trudi against the bialternant formula, n <= 5 and |lam| <= 8."""
    rng = run.rng("schur")
    reports: List[VerifyReport] = []
    for _ in range(settings["schur_cases"]):
        n = rng.randint(1, 5)
        t: List[Scalar] = []
        while len(t) < n:
            x = random_scalar(rng)
            if x not in t:
                t.append(x)
        lam = rng.choice(partitions(rng.randint(0, 8), n))
        lhs = schur_jacobi_trudi(lam, t)
        rhs = schur_bialternant(lam, t)
        params = {"n": n, "lam": lam.parts}
        if lhs == rhs:
            reports.append(VerifyReport("schur", params))
        else:
            reports.append(VerifyReport("schur", params, FAIL, lam.size, lhs, rhs))
    return reports


def scaling_suite(run: SuiteRun) -> List[VerifyReport]:
    """Scaling psi' twice equals scaling once by the product; the n = 1 closed form."""
    rng = run.rng("scaling")
    reports: List[VerifyReport] = []
    for _ in range(settings["scaling_cases"]):
        ext = rng.choice(INERT_TYPES)
        datum = random_datum(rng, ext)
        n = rng.randint(1, run.n_max)
        rep = random_rep(rng, ext, n)
        tau = TauDatum(rng.choice(settings["tau_valuations"]), rng.choice(FOURTH_ROOTS_OF_UNITY))
        eps = asai_epsilon(rep, datum, tau)
        omega1, omega2 = random_scalar(rng), random_scalar(rng)
        val1, val2 = rng.randint(-2, 2), rng.randint(-2, 2)
        eta1, eta2 = rng.choice((1, -1)), rng.choice((1, -1))
        twice = epsilon_scaling(
            epsilon_scaling(eps, n, omega1, val1, eta1, datum.q), n, omega2, val2, eta2, datum.q
        )
        once = epsilon_scaling(eps, n, omega1 * omega2, val1 + val2, eta1 * eta2, datum.q)
        params = case_params(datum, rep, val=val1 + val2)
        reports.append(compare_ratfuncs("scaling", params, twice.to_ratfunc(), once.to_ratfunc()))

        character = UnramifiedRep([random_scalar(rng)])
        eps1 = asai_epsilon(character, datum, tau)
        closed_form = eps1 * Monomial(omega1 * Scalar.sqrt_q(datum.q), 1)
        scaled = epsilon_scaling(eps1, 1, omega1, 1, eta1, datum.q)
        params = case_params(datum, character, val=1)
        reports.append(compare_ratfuncs("scaling-n1", params, scaled.to_ratfunc(), closed_form.to_ratfunc()))
    return reports


def poles_suite(run: SuiteRun) -> List[VerifyReport]:
    """Unit-modulus parameters give poles on the line Re(s) = 0."""
    rng = run.rng("poles")
    tolerance = 1e-9
    reports: List[VerifyReport] = []
    for _ in range(settings["pole_cases"]):
        ext = rng.choice(EXTENSION_TYPES)
        q = rng.choice(settings["q_choices"])
        n = rng.randint(1, run.n_max)
        t = [cmath.exp(2j * math.pi * rng.random()) for _ in range(n)]
        u = [cmath.exp(2j * math.pi * rng.random()) for _ in range(n)] if ext is ExtensionType.SPLIT else ()
        poles = pole_report(asai_factor_shape(ext, t, u), q)
        largest = max(pole.real for pole in poles)
        status = PASS if largest <= tolerance else FAIL
        params = {"q": q, "ext": str(ext), "n": n}
        reports.append(VerifyReport("poles", params, status, note=f"max_re={format_residual(largest)}"))
    return reports


def twist_suite(run: SuiteRun) -> List[VerifyReport]:
    """Right translation by ``a(w^m)`` on both Zeta integrals, m = 0, 1, 2."""
    rng = run.rng("twist")
    depth = settings["twist_depth"]
    reports: List[VerifyReport] = []
    for datum, rep, _ in random_cases(run, rng, EXTENSION_TYPES, _ranks(run, 3), settings["twist_cases"]):
        for m in range(3):
            reports.append(twist_covariance_check(rep, datum, m, depth))
            reports.append(dual_twist_covariance_check(rep, datum, m, depth))
    return reports


def twist_shift_suite(run: SuiteRun) -> List[VerifyReport]:
    """Twisting by ``|det|_E^(k/2)`` shifts s by k."""
    rng = run.rng("twist-shift")
    reports: List[VerifyReport] = []
    for datum, rep, _ in random_cases(run, rng, EXTENSION_TYPES, _ranks(run), settings["twist_cases"]):
        reports.append(verify_twist_shift(rep, datum, rng.randint(-2, 2), run.depth))
    return reports


def _random_blocks(rng: random.Random, t: Sequence[Scalar]) -> List[List[Scalar]]:
    blocks: List[List[Scalar]] = [[t[0]]]
    for x in t[1:]:
        if rng.random() < 0.5:
            blocks[-1].append(x)
        else:
            blocks.append([x])
    return blocks


def blocks_suite(run: SuiteRun) -> List[VerifyReport]:
    """L and epsilon assembled from random block decompositions."""
    rng = run.rng("blocks")
    reports: List[VerifyReport] = []
    for datum, rep, tau in random_cases(run, rng, INERT_TYPES, _ranks(run), settings["twist_cases"]):
        if run.config is None:
            tau = TauDatum(rng.choice(settings["tau_valuations"]), rng.choice(FOURTH_ROOTS_OF_UNITY))
        blocks = _random_blocks(rng, rep.t)
        params = case_params(datum, rep, blocks=len(blocks), d=tau.d, lam=tau.lam)
        reports.append(
            compare_ratfuncs("blocks-L", params, asai_L_from_blocks(blocks, datum), asai_L(rep, datum))
        )
        reports.append(
            compare_ratfuncs(
                "blocks-eps", params, asai_epsilon_from_blocks(blocks, datum, tau), asai_epsilon(rep, datum, tau)
            )
        )
    return reports


def psi_suite(run: SuiteRun) -> List[VerifyReport]:
    """The functional equation after scaling psi'."""
    rng = run.rng("psi")
    reports: List[VerifyReport] = []
    for datum, rep, tau in random_cases(run, rng, INERT_TYPES, _ranks(run), settings["twist_cases"]):
        val = rng.randint(0, 2)
        if run.config is None:
            new_d = rng.choice(settings["tau_valuations"])
            tau = TauDatum(new_d + datum.ext.ramification * val, rng.choice(FOURTH_ROOTS_OF_UNITY))
        elif tau.d < datum.ext.ramification * val:
            val = 0
        reports.append(verify_psi_independence(rep, datum, tau, val, rng.choice((1, -1))))
    return reports


def tate_check(chi: archimedean.ArchCharacter, testfn: str, s: complex) -> VerifyReport:
    """The Tate functional equation residual at one point."""
    residual = archimedean.tate_fe_residual(chi, testfn, s)
    params = {"chi": chi, "testfn": testfn, "s": complex(s)}
    return _float_report("tate", params, residual, settings["acceptance_tolerance"])


def contour_check(D: float, s: complex, x_max: Optional[float] = None) -> VerifyReport:
    """Reconstructs ``exp(s^2)`` from the line ``Re = D``."""
    f = archimedean.demo_function
    value = archimedean.contour_reconstruct(D, f, lambda z: f(-z), s, x_max)
    params = {"D": D, "s": complex(s), "value": value}
    return _float_report("contour", params, abs(value - f(s)), settings["acceptance_tolerance"])


def archimedean_suite(run: SuiteRun) -> List[VerifyReport]:
    """Gamma factor consistency, Tate integrals and contour reconstruction on fixed grids."""
    reports: List[VerifyReport] = []
    tolerance = settings["acceptance_tolerance"]

    for s in _grid(0.2, 3.0, 5.0, 10):
        duplicated = archimedean.gamma_C(s)
        product = archimedean.gamma_R(s) * archimedean.gamma_R(s + 1)
        residual = abs(duplicated - product) / abs(duplicated)
        reports.append(_float_report("gamma-duplication", {"s": s}, residual, 1e-10))

    tate_grid = _grid(0.1, 0.9, 2.0, 10, diagonal=True)
    trivial = archimedean.ArchCharacter("R")
    gamma_r = archimedean.GammaFactor([("R", 0)])
    for s in tate_grid:
        residual = abs(archimedean.tate_zeta_numeric(trivial, "gaussian", s) - archimedean.gamma_factor_eval(gamma_r, s))
        reports.append(_float_report("tate-gamma", {"s": s}, residual, 1e-8))
    for chi, testfn in ((trivial, "gaussian"), (archimedean.ArchCharacter("R", 1), "x_gaussian")):
        for s in tate_grid:
            reports.append(tate_check(chi, testfn, s))

    for k in range(3):
        chi = archimedean.ArchCharacter("C", k)
        testfn = "x_gaussian" if k % 2 else "gaussian"
        s = complex(0.6, 0.5)
        value = archimedean.tate_zeta_numeric(archimedean.restrict_to_real(chi), testfn, s)
        expected = archimedean.gamma_factor_eval(archimedean.arch_asai_L_n1(chi), s)
        reports.append(_float_report("asai-n1", {"chi": chi, "s": s}, abs(value - expected), tolerance))

    for name in archimedean.TEST_FUNCTIONS:
        phi = archimedean.schwartz_function(name)
        for x in (-0.75, 0.0, 0.5, 1.25):
            numeric = archimedean.fourier_transform_numeric(name, x)
            residual = abs(numeric - archimedean.fourier_scalar(name) * phi(x))
            reports.append(_float_report("fourier", {"testfn": name, "x": x}, residual, tolerance))

    for s in _grid(-1.5, 1.5, 1.0, 10, diagonal=True):
        reports.append(contour_check(2.0, s))
    reports.append(_contour_convergence(2.0, complex(0.5, 0.25), (2.0, 3.0, 4.0)))
    return reports


def _contour_convergence(D: float, s: complex, levels: Sequence[float]) -> VerifyReport:
    f = archimedean.demo_function
    errors = [abs(archimedean.contour_reconstruct(D, f, lambda z: f(-z), s, level) - f(s)) for level in levels]
    decreasing = all(a > b for a, b in zip(errors, errors[1:]))
    params = {"D": D, "s": s, "x_max": list(levels)}
    note = "errors=" + ",".join(format_residual(error) for error in errors)
    return VerifyReport("contour-convergence", params, PASS if decreasing else FAIL, note=note)


def _grid(re_low: float, re_high: float, im_bound: float, size: int, diagonal: bool = False) -> List[complex]:
    """A size-by-size grid of the box, or its ``size`` points along the diagonal."""
    re = np.linspace(re_low, re_high, size)
    im = np.linspace(-im_bound, im_bound, size)
    if diagonal:
        return [complex(a, b) for a, b in zip(re, im)]
    return [complex(a, b) for a in re for b in im]


SUITES: Dict[str, Callable[[SuiteRun], List[VerifyReport]]] = {
    "unramified": unramified_suite,
    "fe": fe_suite,
    "identities": identities_suite,
    "twist": twist_suite,
    "schur": schur_suite,
    "scaling": scaling_suite,
    "poles": poles_suite,
    "twist-shift": twist_shift_suite,
    "blocks": blocks_suite,
    "psi": psi_suite,
    "archimedean": archimedean_suite,
}


def run_suites(names: Sequence[str], run: SuiteRun) -> Dict[str, List[VerifyReport]]:
    """Runs suites in the given order; ``all`` expands to every suite.

    Raises
    ------
    KeyError
        For an unknown suite name.
    """
    if "all" in names:
        names = list(SUITES)
    results: Dict[str, List[VerifyReport]] = {}
    for name in names:
        start = time.perf_counter()
        results[name] = SUITES[name](run)
        logger.debug("suite %s: %d cases in %.2fs", name, len(results[name]), time.perf_counter() - start)
    return results
