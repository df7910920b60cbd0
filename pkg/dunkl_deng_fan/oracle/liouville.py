"""
Liouville form of the radial equation and the exact levels of the
unapproximated problem.

With u = r^((2mu+1)/2) R the first-derivative term (2mu+1)/r d/dr drops out
and the radial equation becomes

    -hbar^2/(2m) u'' + [V(r) + hbar^2 (gamma + (4mu^2 - 1)/4) / (2m r^2)] u = E u
"""

import math
from enum import Enum
from typing import List, Optional, Union

import numpy as np

from dunkl_deng_fan.errors import DomainError, NoBoundStateError
from dunkl_deng_fan.model.params import DunklParams, MolecularParams
from dunkl_deng_fan.model.potentials import centrifugal_eigenvalue, deng_fan_potential
from dunkl_deng_fan.pekeris.mapping import PekerisCoefficients, inverse_square_approx

ArrayLike = Union[float, np.ndarray]


class OracleVariant(str, Enum):
    """
    EXACT_CENTRIFUGAL keeps gamma / r^2; PEKERIS_MAPPED replaces that term,
    and only that term, with the Pekeris approximation.
    """

    EXACT_CENTRIFUGAL = "exact-centrifugal"
    PEKERIS_MAPPED = "pekeris-mapped"


def liouville_transform_coefficient(d: DunklParams) -> float:
    """
    Extra inverse-square coefficient (4mu^2 - 1)/4 produced by the transform.
    """
    return (4.0 * d.mu**2 - 1.0) / 4.0


def effective_potential(
    r: ArrayLike,
    p: MolecularParams,
    d: DunklParams,
    variant: OracleVariant = OracleVariant.EXACT_CENTRIFUGAL,
    C: Optional[PekerisCoefficients] = None,
) -> ArrayLike:
    """
    Potential of the Liouville-transformed equation.

    Args:
        r (ArrayLike): Radii (bohr), strictly positive.
        p (MolecularParams): Molecular parameters.
        d (DunklParams): Dunkl parameters.
        variant (OracleVariant): Treatment of the centrifugal term.
        C (Optional[PekerisCoefficients]): Pekeris coefficients for PEKERIS_MAPPED.

    Returns:
        ArrayLike: V_eff(r) in hartree.
    """
    r_arr = np.asarray(r, dtype=float)
    if np.any(r_arr <= 0):
        raise DomainError("effective_potential requires r > 0", value=r)
    gamma = centrifugal_eigenvalue(d)
    kinetic = p.hbar**2 / (2.0 * p.mass)
    if variant == OracleVariant.PEKERIS_MAPPED:
        centrifugal = gamma * inverse_square_approx(r_arr, p.lambda_, C)
    else:
        centrifugal = gamma / r_arr**2
    transform = liouville_transform_coefficient(d) / r_arr**2
    return deng_fan_potential(r_arr, p) + kinetic * (centrifugal + transform)


def exact_centrifugal_levels(
    p: MolecularParams, d: DunklParams, count: int
) -> List[float]:
    """
    Closed-form levels of the unapproximated equation.

    The well is D_e - 2 D_e r_e / r + D_e r_e^2 / r^2, so the transformed
    problem is Coulomb-like:

        E_n = D_e - 2 m D_e^2 r_e^2 / (hbar^2 (n + 1/2 + sqrt(2 m D_e r_e^2 / hbar^2 + gamma + mu^2))^2)

    Args:
        p (MolecularParams): Molecular parameters, D_e > 0.
        d (DunklParams): Dunkl parameters.
        count (int): Number of levels.

    Returns:
        List[float]: E_0 ... E_{count-1} in hartree.

    Raises:
        NoBoundStateError: If the well has zero depth.
        DomainError: If the effective barrier is too attractive for a
            regular solution at the origin.
    """
    if p.D_e <= 0:
        raise NoBoundStateError(0, d.ell, d.mu, "zero-depth well")
    hbar2 = p.hbar**2
    radicand = 2.0 * p.mass * p.D_e * p.r_e**2 / hbar2 + centrifugal_eigenvalue(d) + d.mu**2
    if radicand < 0:
        raise DomainError(
            f"effective inverse-square coefficient {radicand:.6g} < 0", value=radicand
        )
    root = math.sqrt(radicand)
    scale = 2.0 * p.mass * p.D_e**2 * p.r_e**2 / hbar2
    return [p.D_e - scale / (n + 0.5 + root) ** 2 for n in range(count)]
