"""
The printed closed-form spectrum, evaluated verbatim.
"""

import math
from typing import Any, Dict, Optional, Tuple

from dunkl_deng_fan.base.SpectrumSolver import SpectrumSolver
from dunkl_deng_fan.errors import DomainError
from dunkl_deng_fan.model.params import DunklParams, MolecularParams, QuantumNumbers
from dunkl_deng_fan.model.potentials import beta, centrifugal_eigenvalue, eps_to_energy
from dunkl_deng_fan.nu_engine.table import LevelFlag, SpectrumMode
from dunkl_deng_fan.pekeris.mapping import PekerisCoefficients, pekeris_coefficients


def closed_form_terms(
    q: QuantumNumbers,
    p: MolecularParams,
    d: DunklParams,
    C: Optional[PekerisCoefficients] = None,
) -> Dict[str, float]:
    """
    Intermediate quantities of the closed-form spectrum

        K = [beta - (2n+1)(mu + 1/2) - n(n+1)] / [2(n + mu + 1/2 + sqrt(mu^2 + gamma C0))]
        eps = mu^2 + gamma C0 - K^2

    Args:
        q (QuantumNumbers): Level; q.ell overrides d.ell.
        p (MolecularParams): Molecular parameters.
        d (DunklParams): Dunkl parameters.
        C (Optional[PekerisCoefficients]): Pekeris coefficients.

    Returns:
        Dict[str, float]: numerator, denominator, K, centrifugal root and eps.

    Raises:
        DomainError: If mu^2 + gamma C0 < 0 (complex exponent).
    """
    if C is None:
        C = pekeris_coefficients()
    d = d.model_copy(update={"ell": q.ell})
    n, mu = q.n, d.mu
    gamma = centrifugal_eigenvalue(d)
    radicand = mu**2 + gamma * C.C0
    if radicand < 0:
        raise DomainError(
            f"mu^2 + gamma C0 = {radicand:.6g} < 0 gives a complex exponent",
            value=radicand,
        )
    root = math.sqrt(radicand)
    numerator = beta(p) - (2 * n + 1) * (mu + 0.5) - n * (n + 1)
    denominator = 2.0 * (n + mu + 0.5 + root)
    K = numerator / denominator
    return {
        "numerator": numerator,
        "denominator": denominator,
        "K": K,
        "root": root,
        "eps": radicand - K**2,
    }


def energy_closed_form(
    q: QuantumNumbers,
    p: MolecularParams,
    d: DunklParams,
    C: Optional[PekerisCoefficients] = None,
) -> Tuple[float, float, LevelFlag]:
    """
    Evaluate the printed closed-form energy of level (n, ell).

    Args:
        q (QuantumNumbers): Level; q.ell overrides d.ell.
        p (MolecularParams): Molecular parameters.
        d (DunklParams): Dunkl parameters.
        C (Optional[PekerisCoefficients]): Pekeris coefficients.

    Returns:
        Tuple[float, float, LevelFlag]: eps, E (hartree) and the flag. The
        level is unbound when K <= 0 or E lies outside [0, D_e); a complex
        exponent gives nan energies.
    """
    try:
        terms = closed_form_terms(q, p, d, C)
    except DomainError:
        return math.nan, math.nan, LevelFlag.COMPLEX_EXPONENT
    eps = terms["eps"]
    energy = float(eps_to_energy(eps, p))
    if terms["K"] <= 0 or not 0.0 <= energy < p.D_e:
        return eps, energy, LevelFlag.UNBOUND
    return eps, energy, LevelFlag.BOUND


class PaperVerbatimSolver(SpectrumSolver):
    """
    Spectrum mode evaluating the closed form as printed.
    """

    def get_mode(self) -> SpectrumMode:
        return SpectrumMode.PAPER_VERBATIM

    def solve_level(self, q: QuantumNumbers) -> Tuple[float, Dict[str, Any]]:
        terms = closed_form_terms(q, self.p, self.d, self.C)
        diagnostics: Dict[str, Any] = dict(terms)
        diagnostics["unbound"] = terms["K"] <= 0
        return terms["eps"], diagnostics
