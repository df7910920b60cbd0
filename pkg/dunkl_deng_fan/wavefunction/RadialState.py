"""
Bound-state radial functions

    R(r) = N s^exp_s (1 - s)^exp_1ms P_n^(2 exp_s, 2 exp_1ms)(1 - 2s),  s = exp(-lambda r)

with exp_s = sqrt(alpha8) and exp_1ms = sqrt(alpha9). Under s = exp(-lambda r)
the s^exp_s factor controls the r -> infinity tail and (1 - s)^exp_1ms the
behaviour at the origin.
"""

import math
from dataclasses import dataclass, replace
from typing import Optional, Union

import logging
import numpy as np

from dunkl_deng_fan.errors import DomainError, NoBoundStateError
from dunkl_deng_fan.model.config import (
    NODE_COUNT_MIN_POINTS,
    QUADRATURE_R_MAX_SPAN,
    QUADRATURE_TAIL_RATIO,
)
from dunkl_deng_fan.model.params import DunklParams, MolecularParams, QuantumNumbers
from dunkl_deng_fan.nu_engine.AlphaChain import Alpha9Source, alpha9_value
from dunkl_deng_fan.nu_engine.PaperVerbatimSolver import closed_form_terms
from dunkl_deng_fan.nu_engine.SelfConsistentSolver import energy_self_consistent
from dunkl_deng_fan.nu_engine.table import SpectrumMode
from dunkl_deng_fan.pekeris.mapping import (
    CoefficientSet,
    PekerisCoefficients,
    map_to_hypergeometric,
)
from dunkl_deng_fan.wavefunction.jacobi import jacobi
from dunkl_deng_fan.wavefunction.quadrature import QuadratureSpec, integrate

logging.basicConfig(
    format="%(name)s: %(asctime)s | %(levelname)s | %(filename)s:%(lineno)s | %(process)d >>> %(message)s",
    datefmt="%Y-%m-%dT%H:%M:%SZ",
)
logger = logging.getLogger("RadialState")
logger.setLevel(logging.INFO)

ArrayLike = Union[float, np.ndarray]

TAIL_EXTENSION = 1.5
MAX_EXTENSIONS = 60
PEAK_SAMPLES = 8192


@dataclass(frozen=True)
class RadialState:
    """
    Attributes:
        n (int): Radial quantum number.
        ell (int): Orbital quantum number.
        mu (float): Dunkl parameter.
        exp_s (float): sqrt(alpha8).
        exp_1ms (float): sqrt(alpha9).
        jacobi_a (float): 2 exp_s.
        jacobi_b (float): 2 exp_1ms.
        lambda_ (float): Screening parameter (1/bohr).
        r_e (float): Equilibrium distance (bohr), sets the default r_max.
        norm (float): Normalization constant, 1 until normalized.
        eps (float): Dimensionless energy of the level.
        mode (SpectrumMode): Mode the exponents were taken from.
        weight_exponent (Optional[float]): Exponent of the measure r^w dr
            used by normalize, None before normalization.
        r_max (Optional[float]): Upper limit of the normalization integral.
    """

    n: int
    ell: int
    mu: float
    exp_s: float
    exp_1ms: float
    jacobi_a: float
    jacobi_b: float
    lambda_: float
    r_e: float
    norm: float = 1.0
    eps: float = math.nan
    mode: SpectrumMode = SpectrumMode.PAPER_VERBATIM
    weight_exponent: Optional[float] = None
    r_max: Optional[float] = None

    def default_r_max(self) -> float:
        return self.r_e + QUADRATURE_R_MAX_SPAN / self.lambda_


def radial_state(
    q: QuantumNumbers,
    p: MolecularParams,
    d: DunklParams,
    mode: SpectrumMode = SpectrumMode.PAPER_VERBATIM,
    C: Optional[PekerisCoefficients] = None,
    coefficient_set: CoefficientSet = CoefficientSet.SECTION_III_A,
    alpha9_source: Alpha9Source = Alpha9Source.CLOSED_FORM,
) -> RadialState:
    """
    Build the (unnormalized) state of level (n, ell) from an analytic mode.

    PAPER_VERBATIM takes sqrt(alpha8) = K of the closed form;
    SELF_CONSISTENT takes sqrt(alpha8) at the root of the quantization
    condition. Both take sqrt(alpha9) from alpha9_source.

    Raises:
        NoBoundStateError: If an exponent is not real and positive.
        ValueError: For the oracle mode, whose states are tabulated from
            eigenvectors instead.
    """
    d = d.model_copy(update={"ell": q.ell})
    mc = map_to_hypergeometric(p, d, C, coefficient_set)
    try:
        if mode == SpectrumMode.PAPER_VERBATIM:
            terms = closed_form_terms(q, p, d, mc.C)
            exp_s, eps = terms["K"], terms["eps"]
        elif mode == SpectrumMode.SELF_CONSISTENT:
            eps, _, diagnostics = energy_self_consistent(
                q, p, d, mc.C, coefficient_set, alpha9_source
            )
            exp_s = diagnostics["sqrt_alpha8"]
        else:
            raise ValueError(f"No analytic radial state in mode {mode.value}")
    except DomainError as error:
        raise NoBoundStateError(q.n, q.ell, d.mu, str(error)) from error

    alpha9 = alpha9_value(mc, eps, alpha9_source)
    if not exp_s > 0:
        raise NoBoundStateError(q.n, q.ell, d.mu, f"sqrt(alpha8) = {exp_s:.6g} <= 0")
    if alpha9 < 0:
        raise NoBoundStateError(q.n, q.ell, d.mu, f"alpha9 = {alpha9:.6g} < 0")
    exp_1ms = math.sqrt(alpha9)
    return RadialState(
        n=q.n,
        ell=q.ell,
        mu=d.mu,
        exp_s=exp_s,
        exp_1ms=exp_1ms,
        jacobi_a=2.0 * exp_s,
        jacobi_b=2.0 * exp_1ms,
        lambda_=p.lambda_,
        r_e=p.r_e,
        eps=eps,
        mode=mode,
    )


def radial_unnormalized(st: RadialState, r: ArrayLike) -> ArrayLike:
    """
    Evaluate s^exp_s (1 - s)^exp_1ms P_n(1 - 2s) at r >= 0.
    """
    r_arr = np.asarray(r, dtype=float)
    if np.any(r_arr < 0):
        raise DomainError("radial_unnormalized requires r >= 0", value=r)
    s = np.exp(-st.lambda_ * r_arr)
    one_minus_s = -np.expm1(-st.lambda_ * r_arr)
    value = (
        np.exp(-st.exp_s * st.lambda_ * r_arr)
        * one_minus_s**st.exp_1ms
        * jacobi(st.n, st.jacobi_a, st.jacobi_b, 1.0 - 2.0 * s)
    )
    return float(value) if value.ndim == 0 else value


def _integrand(st: RadialState, weight_exponent: float):
    def f(r: np.ndarray) -> np.ndarray:
        return radial_unnormalized(st, r) ** 2 * np.power(r, weight_exponent)

    return f


def _tail_r_max(st: RadialState, r_max: float, weight_exponent: float) -> float:
    f = _integrand(st, weight_exponent)
    for _ in range(MAX_EXTENSIONS):
        peak = np.max(f(np.linspace(0.0, r_max, PEAK_SAMPLES + 1)[1:]))
        if f(np.array([r_max]))[0] <= QUADRATURE_TAIL_RATIO * peak:
            return r_max
        r_max *= TAIL_EXTENSION
    logger.warning(f"Integrand tail still above threshold at r_max = {r_max:g}")
    return r_max


def normalize(
    st: RadialState,
    quad: Optional[QuadratureSpec] = None,
    weight_exponent: Optional[float] = None,
) -> RadialState:
    """
    Set the normalization constant so that the integral of |N R|^2 r^w over
    [0, r_max] is one.

    Args:
        st (RadialState): State to normalize; an existing norm is ignored.
        quad (Optional[QuadratureSpec]): Quadrature settings.
        weight_exponent (Optional[float]): w, defaults to 2 mu + 1.

    Returns:
        RadialState: A copy carrying the new norm and weight exponent.

    Raises:
        DomainError: If the exponents make the integral diverge.
    """
    if quad is None:
        quad = QuadratureSpec()
    if weight_exponent is None:
        weight_exponent = 2.0 * st.mu + 1.0
    if not st.exp_s > 0 or st.exp_1ms < 0 or 2.0 * st.exp_1ms + weight_exponent <= -1:
        raise DomainError(
            f"Divergent normalization integral for exponents "
            f"({st.exp_s:.6g}, {st.exp_1ms:.6g}) and weight r^{weight_exponent:g}",
            value=(st.exp_s, st.exp_1ms),
        )
    r_max = quad.r_max if quad.r_max is not None else st.default_r_max()
    r_max = _tail_r_max(st, r_max, weight_exponent)
    value = integrate(_integrand(st, weight_exponent), 0.0, r_max, quad)
    if not value > 0:
        raise DomainError(f"Normalization integral {value:g} is not positive", value=value)
    return replace(
        st, norm=1.0 / math.sqrt(value), weight_exponent=weight_exponent, r_max=r_max
    )


def probability_density(
    st: RadialState, r: ArrayLike, weighted: Optional[bool] = None
) -> ArrayLike:
    """
    |N R(r)|^2 times the weight of the measure.

    Args:
        st (RadialState): State, normalized or not.
        r (ArrayLike): Radii, r >= 0.
        weighted (Optional[bool]): True applies r^(2mu+1), False no weight.
            None applies r^w for the exponent w the state was normalized
            with (2mu+1 if it was not), so the result integrates to one under dr.

    Returns:
        ArrayLike: The density at r.
    """
    density = (st.norm * np.asarray(radial_unnormalized(st, r))) ** 2
    if weighted is None:
        exponent = st.weight_exponent
        if exponent is None:
            exponent = 2.0 * st.mu + 1.0
    else:
        exponent = 2.0 * st.mu + 1.0 if weighted else 0.0
    if exponent != 0.0:
        density = density * np.power(np.asarray(r, dtype=float), exponent)
    return float(density) if np.ndim(density) == 0 else density


def node_count(st: RadialState, grid: Optional[QuadratureSpec] = None) -> int:
    """
    Strict sign changes of R on (0, r_max).

    The scan is uniform in s on the image of (0, r_max), which resolves nodes
    crowding towards the origin; underflowed zeros are skipped.
    """
    if grid is None:
        grid = QuadratureSpec()
    r_max = grid.r_max if grid.r_max is not None else st.default_r_max()
    points = max(grid.node_count, NODE_COUNT_MIN_POINTS)
    s_min = math.exp(-st.lambda_ * r_max)
    s = np.linspace(s_min, 1.0, points + 2)[1:-1]
    values = radial_unnormalized(st, -np.log(s) / st.lambda_)
    signs = np.sign(values[values != 0.0])
    return int(np.count_nonzero(signs[:-1] * signs[1:] < 0))
