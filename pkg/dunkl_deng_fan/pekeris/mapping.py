"""
Pekeris approximation of 1/r^2 and the change of variable s = exp(-lambda r).

The radial equation is reduced to the parametric Nikiforov-Uvarov master form

    psi'' + (c1 - c2 s) / (s (1 - c3 s)) psi'
          + (-xi1 s^2 + xi2 s - xi3) / (s^2 (1 - c3 s)^2) psi = 0

with xi_i(eps) = xi_i_const + xi_i_eps * eps. The xi constants are the ones
quoted with the derivation; no attempt is made to re-derive them.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from dunkl_deng_fan.errors import DomainError
from dunkl_deng_fan.model.config import PEKERIS_C0, PEKERIS_C1, PEKERIS_C2
from dunkl_deng_fan.model.params import DunklParams, MolecularParams
from dunkl_deng_fan.model.potentials import beta, centrifugal_eigenvalue

ArrayLike = Union[float, np.ndarray]


class PekerisCoefficients(BaseModel):
    """
    Expansion coefficients of 1/r^2 ~ lambda^2 (C0 + C1 s + C2 s^2) / (1 - s)^2.
    """

    model_config = ConfigDict(frozen=True)

    C0: float = Field(PEKERIS_C0, ge=0, allow_inf_nan=False)
    C1: float = Field(PEKERIS_C1, ge=0, allow_inf_nan=False)
    C2: float = Field(PEKERIS_C2, ge=0, allow_inf_nan=False)


class CoefficientSet(str, Enum):
    """
    Source of the drift constants (c1, c2, c3).

    SECTION_III_A takes c1 = c2 = 1 - 2mu as listed with the xi coefficients.
    PRINTED_ODE reads them off the printed mapped equation, whose drift term
    (1 - s(1 + 2mu)) / (s(1 - s)) gives c1 = 1 and c2 = 1 + 2mu.
    """

    SECTION_III_A = "section-iii-a"
    PRINTED_ODE = "printed-ode"


@dataclass(frozen=True)
class MappedCoefficients:
    """
    Constants of the Nikiforov-Uvarov master form.

    Attributes:
        c1, c2, c3 (float): Drift constants.
        xi1_const, xi2_const, xi3_const (float): Energy-free parts of xi_i.
        xi1_eps, xi2_eps, xi3_eps (float): Slopes of xi_i with respect to eps.
        gamma (float): Centrifugal eigenvalue the xi constants were built from.
        mu (float): Dunkl parameter.
        beta (float): Dimensionless well depth.
        C (PekerisCoefficients): Pekeris coefficients used.
        coefficient_set (CoefficientSet): Source of (c1, c2, c3).
    """

    c1: float
    c2: float
    c3: float
    xi1_const: float
    xi2_const: float
    xi3_const: float
    xi1_eps: float
    xi2_eps: float
    xi3_eps: float
    gamma: float
    mu: float
    beta: float
    C: PekerisCoefficients
    coefficient_set: CoefficientSet = CoefficientSet.SECTION_III_A

    def xi1(self, eps: float) -> float:
        return self.xi1_const + self.xi1_eps * eps

    def xi2(self, eps: float) -> float:
        return self.xi2_const + self.xi2_eps * eps

    def xi3(self, eps: float) -> float:
        return self.xi3_const + self.xi3_eps * eps


def pekeris_coefficients() -> PekerisCoefficients:
    """
    Default Pekeris coefficients (1/12, 10/12, 1/12).
    """
    return PekerisCoefficients()


def inverse_square_approx(
    r: ArrayLike, lambda_: float, C: Optional[PekerisCoefficients] = None
) -> ArrayLike:
    """
    Pekeris replacement of 1/r^2.

    Args:
        r (ArrayLike): Radius or array of radii (bohr), strictly positive.
        lambda_ (float): Screening parameter (1/bohr).
        C (Optional[PekerisCoefficients]): Coefficients, defaults to (1/12, 10/12, 1/12).

    Returns:
        ArrayLike: lambda^2 (C0 + C1 s + C2 s^2) / (1 - s)^2 with s = exp(-lambda r).

    Raises:
        DomainError: If any radius is not strictly positive.
    """
    if C is None:
        C = pekeris_coefficients()
    r_arr = np.asarray(r, dtype=float)
    if np.any(r_arr <= 0):
        raise DomainError("inverse_square_approx requires r > 0", value=r)
    s = np.exp(-lambda_ * r_arr)
    # 1 - s without cancellation near the origin
    one_minus_s = -np.expm1(-lambda_ * r_arr)
    value = lambda_**2 * (C.C0 + C.C1 * s + C.C2 * s**2) / one_minus_s**2
    return float(value) if value.ndim == 0 else value


def map_to_hypergeometric(
    p: MolecularParams,
    d: DunklParams,
    C: Optional[PekerisCoefficients] = None,
    coefficient_set: CoefficientSet = CoefficientSet.SECTION_III_A,
) -> MappedCoefficients:
    """
    Build the master-form constants for the given well and Dunkl parameters.

    Args:
        p (MolecularParams): Molecular parameters.
        d (DunklParams): Dunkl parameters; enter only through gamma and mu.
        C (Optional[PekerisCoefficients]): Pekeris coefficients.
        coefficient_set (CoefficientSet): Source of (c1, c2, c3).

    Returns:
        MappedCoefficients: The drift constants and the affine xi coefficients.
    """
    if C is None:
        C = pekeris_coefficients()
    gamma = centrifugal_eigenvalue(d)
    b = beta(p)

    if coefficient_set == CoefficientSet.PRINTED_ODE:
        c1, c2 = 1.0, 1.0 + 2.0 * d.mu
    else:
        c1 = c2 = 1.0 - 2.0 * d.mu

    return MappedCoefficients(
        c1=c1,
        c2=c2,
        c3=1.0,
        xi1_const=b + gamma * (C.C1 + C.C2),
        xi2_const=2.0 * b + gamma * (2.0 * C.C0 + C.C1),
        xi3_const=gamma * C.C0,
        xi1_eps=-1.0,
        xi2_eps=-2.0,
        xi3_eps=-1.0,
        gamma=gamma,
        mu=d.mu,
        beta=b,
        C=C,
        coefficient_set=coefficient_set,
    )
