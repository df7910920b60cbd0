"""
Energies from a numerical root of the quantization condition.

The trial energy enters alpha6, alpha7 and alpha8, so the condition is solved
for eps directly instead of isolating it algebraically.
"""

import math
from typing import Any, Dict, Optional, Tuple

from scipy import optimize

from dunkl_deng_fan.base.SpectrumSolver import SpectrumSolver
from dunkl_deng_fan.errors import DomainError, NoBoundStateError
from dunkl_deng_fan.model.config import (
    RESIDUAL_TOLERANCE,
    ROOT_BRACKET_DELTA,
    SECANT_POLISH_STEPS,
)
from dunkl_deng_fan.model.params import DunklParams, MolecularParams, QuantumNumbers
from dunkl_deng_fan.model.potentials import eps_to_energy
from dunkl_deng_fan.nu_engine.AlphaChain import (
    Alpha9Source,
    alpha_chain,
    quantization_residual,
)
from dunkl_deng_fan.nu_engine.PaperVerbatimSolver import closed_form_terms
from dunkl_deng_fan.nu_engine.table import SpectrumMode
from dunkl_deng_fan.pekeris.mapping import (
    CoefficientSet,
    MappedCoefficients,
    PekerisCoefficients,
    map_to_hypergeometric,
)


def residual_bracket(mc: MappedCoefficients) -> Tuple[float, float]:
    """
    Trial-energy bracket (-beta, alpha8(0) - delta) keeping sqrt(alpha8) real.

    alpha8(eps) = alpha8(0) - eps, which is mu^2 + gamma C0 - eps for the
    section III.A constants.
    """
    upper = alpha_chain(mc, 0.0).alpha8 - ROOT_BRACKET_DELTA
    return -mc.beta, upper


def _secant_polish(
    f, x: float, fx: float, lower: float, upper: float, steps: int
) -> Tuple[float, float]:
    # start from a nearby point; keep the best iterate inside the bracket
    best_x, best_f = x, fx
    x_prev = x - max(1e-8, 1e-10 * abs(x))
    if x_prev <= lower:
        x_prev = x + max(1e-8, 1e-10 * abs(x))
    f_prev = f(x_prev)
    for _ in range(steps):
        if fx == f_prev:
            break
        x_new = x - fx * (x - x_prev) / (fx - f_prev)
        if not lower <= x_new <= upper:
            break
        x_prev, f_prev = x, fx
        x, fx = x_new, f(x_new)
        if abs(fx) < abs(best_f):
            best_x, best_f = x, fx
    return best_x, best_f


def energy_self_consistent(
    q: QuantumNumbers,
    p: MolecularParams,
    d: DunklParams,
    C: Optional[PekerisCoefficients] = None,
    coefficient_set: CoefficientSet = CoefficientSet.SECTION_III_A,
    alpha9_source: Alpha9Source = Alpha9Source.CLOSED_FORM,
) -> Tuple[float, float, Dict[str, Any]]:
    """
    Root-find the quantization condition for level n.

    Bisection on the bracket to within a few ulps, followed by secant polish
    steps. The residual decreases monotonically in eps on the bracket, so a
    sign change isolates a unique root.

    Args:
        q (QuantumNumbers): Level; q.ell overrides d.ell.
        p (MolecularParams): Molecular parameters.
        d (DunklParams): Dunkl parameters.
        C (Optional[PekerisCoefficients]): Pekeris coefficients.
        coefficient_set (CoefficientSet): Source of the drift constants.
        alpha9_source (Alpha9Source): alpha9 entering the condition.

    Returns:
        Tuple[float, float, Dict[str, Any]]: eps, E (hartree) and diagnostics
        (bracket, iterations, residual, closed-form eps and the gap to it).

    Raises:
        NoBoundStateError: If the bracket is empty or holds no sign change.
        DomainError: If alpha9 is negative for the selected source.
    """
    d = d.model_copy(update={"ell": q.ell})
    mc = map_to_hypergeometric(p, d, C, coefficient_set)
    n = q.n
    lower, upper = residual_bracket(mc)
    if not lower < upper:
        raise NoBoundStateError(
            n, q.ell, d.mu, f"empty trial-energy bracket ({lower:g}, {upper:g})"
        )

    def f(eps: float) -> float:
        return quantization_residual(n, eps, mc, alpha9_source)

    f_lower, f_upper = f(lower), f(upper)
    if f_lower == 0.0:
        root, iterations = lower, 0
    elif f_upper == 0.0:
        root, iterations = upper, 0
    elif math.copysign(1.0, f_lower) == math.copysign(1.0, f_upper):
        raise NoBoundStateError(
            n, q.ell, d.mu, "quantization residual has no sign change in the bracket"
        )
    else:
        root, info = optimize.bisect(
            f, lower, upper, xtol=1e-14, maxiter=200, full_output=True
        )
        iterations = info.iterations

    f_root = f(root)
    root, f_root = _secant_polish(
        f, root, f_root, lower, upper, SECANT_POLISH_STEPS
    )

    diagnostics: Dict[str, Any] = {
        "bracket": (lower, upper),
        "iterations": iterations,
        "residual": f_root,
        "converged": abs(f_root) < RESIDUAL_TOLERANCE,
        "sqrt_alpha8": math.sqrt(max(alpha_chain(mc, root).alpha8, 0.0)),
        # termination condition carries n(n-1), the closed-form numerator n(n+1)
        "quadratic_term_gap": 2 * n,
    }
    try:
        closed = closed_form_terms(q, p, d, mc.C)["eps"]
        diagnostics["closed_form_eps"] = closed
        diagnostics["gap_to_closed_form"] = root - closed
    except DomainError:
        diagnostics["closed_form_eps"] = math.nan
        diagnostics["gap_to_closed_form"] = math.nan

    return root, float(eps_to_energy(root, p)), diagnostics


class SelfConsistentSolver(SpectrumSolver):
    """
    Spectrum mode solving the quantization condition numerically.
    """

    def get_mode(self) -> SpectrumMode:
        return SpectrumMode.SELF_CONSISTENT

    def solve_level(self, q: QuantumNumbers) -> Tuple[float, Dict[str, Any]]:
        eps, _, diagnostics = energy_self_consistent(
            q, self.p, self.d, self.C, self.coefficient_set, self.alpha9_source
        )
        return eps, diagnostics
