"""
Potential functions, the Dunkl centrifugal eigenvalue and the conversions
between hartree and the dimensionless energy eps = 2 m E / (hbar lambda)^2.

The well of the study is D_e (r_e/r - 1)^2. It is called a Deng-Fan potential
there, although the printed form is the modified-Kratzer one; it is used here
exactly as printed.
"""

from typing import Optional, Union

import numpy as np

from dunkl_deng_fan.errors import DomainError
from dunkl_deng_fan.model.params import (
    CentrifugalConvention,
    DunklParams,
    MolecularParams,
)

ArrayLike = Union[float, np.ndarray]


def deng_fan_potential(r: ArrayLike, p: MolecularParams) -> ArrayLike:
    """
    Evaluate V(r) = D_e (r_e/r - 1)^2.

    Args:
        r (ArrayLike): Radius or array of radii (bohr), strictly positive.
        p (MolecularParams): Molecular parameters.

    Returns:
        ArrayLike: Potential energy (hartree).

    Raises:
        DomainError: If any radius is not strictly positive.
    """
    r_arr = np.asarray(r, dtype=float)
    if np.any(r_arr <= 0):
        raise DomainError("deng_fan_potential requires r > 0", value=r)
    value = p.D_e * (p.r_e / r_arr - 1.0) ** 2
    return float(value) if value.ndim == 0 else value


def matched_morse_range(p: MolecularParams) -> float:
    """
    Morse range parameter giving the same curvature as the well at r_e.

    Both potentials have V''(r_e) = 2 D_e / r_e^2 when a = 1 / r_e.
    """
    return 1.0 / p.r_e


def morse_potential(
    r: ArrayLike, p: MolecularParams, a: Optional[float] = None
) -> ArrayLike:
    """
    Evaluate the Morse comparison curve D_e (1 - exp(-a (r - r_e)))^2.

    Args:
        r (ArrayLike): Radius or array of radii (bohr); finite at r = 0.
        p (MolecularParams): Molecular parameters.
        a (Optional[float]): Range parameter (1/bohr). Defaults to the
            curvature-matched value 1 / r_e.

    Returns:
        ArrayLike: Potential energy (hartree).

    Raises:
        DomainError: If a is not strictly positive.
    """
    if a is None:
        a = matched_morse_range(p)
    if not a > 0:
        raise DomainError("morse_potential requires a > 0", value=a)
    r_arr = np.asarray(r, dtype=float)
    value = p.D_e * (-np.expm1(-a * (r_arr - p.r_e))) ** 2
    return float(value) if value.ndim == 0 else value


def centrifugal_eigenvalue(d: DunklParams) -> float:
    """
    Dunkl centrifugal eigenvalue in the selected printed convention.

    The results-section form exceeds the radial-equation form by exactly mu.

    Args:
        d (DunklParams): Dunkl parameters.

    Returns:
        float: ell(ell + 2mu + 1) or mu(2ell + 1) + ell(ell + 1).
    """
    ell, mu = d.ell, d.mu
    if d.centrifugal_convention == CentrifugalConvention.RESULTS_SECTION:
        return mu * (2 * ell + 1) + ell * (ell + 1)
    return ell * (ell + 2 * mu + 1)


def beta(p: MolecularParams) -> float:
    """
    Dimensionless well depth 2 m D_e / (hbar lambda)^2.
    """
    return 2.0 * p.mass * p.D_e / (p.hbar**2 * p.lambda_**2)


def energy_scale(p: MolecularParams) -> float:
    """
    Hartree per unit of dimensionless energy, (hbar lambda)^2 / 2m.
    """
    return p.hbar**2 * p.lambda_**2 / (2.0 * p.mass)


def eps_to_energy(eps: ArrayLike, p: MolecularParams) -> ArrayLike:
    return energy_scale(p) * eps


def energy_to_eps(energy: ArrayLike, p: MolecularParams) -> ArrayLike:
    return energy / energy_scale(p)
