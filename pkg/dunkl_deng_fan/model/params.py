from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, field_validator

from dunkl_deng_fan.model.config import (
    DEFAULT_D_E,
    DEFAULT_LAMBDA,
    DEFAULT_MASS,
    DEFAULT_R_E,
    HBAR,
)


class CentrifugalConvention(str, Enum):
    """
    Which printed form of the Dunkl centrifugal eigenvalue to use.

    RADIAL_EQUATION is ell(ell + 2mu + 1), the coefficient of the radial operator.
    RESULTS_SECTION is mu(2ell + 1) + ell(ell + 1), the form quoted with the figures.
    """

    RADIAL_EQUATION = "radial-eq"
    RESULTS_SECTION = "results-sec"


class MolecularParams(BaseModel):
    """
    Parameters of the molecular well, in atomic units.

    Attributes:
        D_e (float): Dissociation energy (hartree), >= 0.
        lambda_ (float): Screening parameter of the mapping s = exp(-lambda r) (1/bohr).
        r_e (float): Equilibrium bond length (bohr).
        mass (float): Reduced mass (electron masses).
        hbar (float): Reduced Planck constant, fixed at 1.
    """

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    # zero depth is admitted as the free limit
    D_e: float = Field(DEFAULT_D_E, ge=0, allow_inf_nan=False)
    lambda_: float = Field(DEFAULT_LAMBDA, gt=0, alias="lambda", allow_inf_nan=False)
    r_e: float = Field(DEFAULT_R_E, gt=0, allow_inf_nan=False)
    mass: float = Field(DEFAULT_MASS, gt=0, allow_inf_nan=False)
    hbar: float = HBAR

    @field_validator("hbar")
    @classmethod
    def check_hbar(cls, value: float) -> float:
        if value != HBAR:
            raise ValueError("hbar is fixed at 1 in atomic units")
        return value


class DunklParams(BaseModel):
    """
    Dunkl deformation and orbital quantum number.

    Attributes:
        mu (float): Dunkl parameter, mu > -1/2.
        ell (int): Orbital quantum number, ell >= 0.
        centrifugal_convention (CentrifugalConvention): Printed form of the
            centrifugal eigenvalue.
    """

    model_config = ConfigDict(frozen=True)

    mu: float = Field(0.0, gt=-0.5, allow_inf_nan=False)
    ell: int = Field(0, ge=0)
    centrifugal_convention: CentrifugalConvention = (
        CentrifugalConvention.RADIAL_EQUATION
    )


class QuantumNumbers(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int = Field(0, ge=0)
    ell: int = Field(0, ge=0)
