"""
Finite-difference eigen-solver for the Liouville-transformed radial equation.

Central second differences with homogeneous boundary values at r_min and r_max
give a symmetric tridiagonal matrix. The lowest eigenvalues are computed on
three grids (N, 2N and 4N intervals); the two finest give a Richardson
estimate and all three an empirical convergence order.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import logging
import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator
from scipy.linalg import eigh_tridiagonal

from dunkl_deng_fan.errors import AccuracyError, DomainError
from dunkl_deng_fan.model.config import (
    ORACLE_EIGEN_TOL,
    ORACLE_MIN_RECOMMENDED_POINTS,
    ORACLE_ORDER_BOUNDS,
    ORACLE_POINTS,
    ORACLE_R_MAX_FACTOR,
    ORACLE_R_MIN_FACTOR,
)
from dunkl_deng_fan.model.params import DunklParams, MolecularParams
from dunkl_deng_fan.oracle.liouville import OracleVariant, effective_potential
from dunkl_deng_fan.pekeris.mapping import PekerisCoefficients

logging.basicConfig(
    format="%(name)s: %(asctime)s | %(levelname)s | %(filename)s:%(lineno)s | %(process)d >>> %(message)s",
    datefmt="%Y-%m-%dT%H:%M:%SZ",
)
logger = logging.getLogger("Oracle")
logger.setLevel(logging.INFO)

REFINEMENTS = (1, 2, 4)


class OracleGrid(BaseModel):
    """
    Radial interval and the number of intervals of the coarsest grid.

    Attributes:
        r_min (float): Inner boundary (bohr).
        r_max (float): Outer boundary (bohr).
        points (int): Intervals of the coarsest grid; refined 2x and 4x.
    """

    model_config = ConfigDict(frozen=True)

    r_min: float = Field(..., gt=0, allow_inf_nan=False)
    r_max: float = Field(..., gt=0, allow_inf_nan=False)
    points: int = Field(ORACLE_POINTS, ge=8)

    @field_validator("points")
    @classmethod
    def warn_coarse(cls, value: int) -> int:
        if value < ORACLE_MIN_RECOMMENDED_POINTS:
            logger.warning(
                f"Oracle grid with {value} points is below the recommended "
                f"{ORACLE_MIN_RECOMMENDED_POINTS}"
            )
        return value

    @classmethod
    def default(cls, p: MolecularParams, points: int = ORACLE_POINTS) -> "OracleGrid":
        return cls(
            r_min=ORACLE_R_MIN_FACTOR * p.r_e,
            r_max=ORACLE_R_MAX_FACTOR * p.r_e,
            points=points,
        )


class OracleProblem(BaseModel):
    """
    One radial eigenproblem.

    Attributes:
        p (MolecularParams): Molecular parameters.
        d (DunklParams): Dunkl parameters.
        variant (OracleVariant): Treatment of the centrifugal term.
        grid (OracleGrid): Discretization interval, r_min < r_e < r_max.
        C (Optional[PekerisCoefficients]): Pekeris coefficients for PEKERIS_MAPPED.
    """

    model_config = ConfigDict(frozen=True)

    p: MolecularParams
    d: DunklParams
    variant: OracleVariant = OracleVariant.EXACT_CENTRIFUGAL
    grid: OracleGrid
    C: Optional[PekerisCoefficients] = None

    @model_validator(mode="after")
    def check_interval(self) -> "OracleProblem":
        if not 0 < self.grid.r_min < self.p.r_e < self.grid.r_max:
            raise ValueError("oracle grid must satisfy 0 < r_min < r_e < r_max")
        return self

    @classmethod
    def default(
        cls,
        p: MolecularParams,
        d: DunklParams,
        variant: OracleVariant = OracleVariant.EXACT_CENTRIFUGAL,
        points: int = ORACLE_POINTS,
        C: Optional[PekerisCoefficients] = None,
    ) -> "OracleProblem":
        return cls(p=p, d=d, variant=variant, grid=OracleGrid.default(p, points), C=C)


@dataclass
class OracleResult:
    """
    Attributes:
        eigenvalues (np.ndarray): Richardson-extrapolated energies (hartree), index n.
        grid_spacings_used (List[float]): Spacing of each grid, coarsest first.
        per_grid_eigenvalues (List[np.ndarray]): Raw eigenvalues per grid.
        richardson_estimate (np.ndarray): Same as eigenvalues.
        convergence_order (np.ndarray): Empirical order per level.
        r (Optional[np.ndarray]): Interior nodes of the finest grid.
        vectors (Optional[np.ndarray]): u on the finest grid, one column per
            level, normalized so that sum(u^2) h = 1.
    """

    eigenvalues: np.ndarray
    grid_spacings_used: List[float]
    per_grid_eigenvalues: List[np.ndarray]
    richardson_estimate: np.ndarray
    convergence_order: np.ndarray
    r: Optional[np.ndarray] = None
    vectors: Optional[np.ndarray] = None
    diagnostics: Dict[str, Any] = field(default_factory=dict)


def _solve_grid(prob: OracleProblem, intervals: int, count: int, with_vectors: bool):
    grid = prob.grid
    nodes = np.linspace(grid.r_min, grid.r_max, intervals + 1)
    r = nodes[1:-1]
    h = (grid.r_max - grid.r_min) / intervals
    if count > r.size:
        raise DomainError(
            f"{count} levels requested from a grid with {r.size} interior nodes",
            value=count,
        )
    kinetic = prob.p.hbar**2 / (2.0 * prob.p.mass * h**2)
    diagonal = 2.0 * kinetic + effective_potential(r, prob.p, prob.d, prob.variant, prob.C)
    off_diagonal = np.full(r.size - 1, -kinetic)
    result = eigh_tridiagonal(
        diagonal,
        off_diagonal,
        eigvals_only=not with_vectors,
        select="i",
        select_range=(0, count - 1),
        tol=ORACLE_EIGEN_TOL,
    )
    if with_vectors:
        values, vectors = result
        return h, values, r, vectors
    return h, result, r, None


def fd_eigensolve(
    prob: OracleProblem,
    count: int,
    with_vectors: bool = False,
    check_order: bool = True,
) -> OracleResult:
    """
    Lowest `count` eigenvalues of the radial problem with Richardson extrapolation.

    Args:
        prob (OracleProblem): Problem to solve.
        count (int): Number of levels, >= 1.
        with_vectors (bool): Also return the finest-grid eigenvectors.
        check_order (bool): Raise when the convergence order is off.

    Returns:
        OracleResult: Extrapolated energies and convergence diagnostics.

    Raises:
        AccuracyError: If check_order and an empirical order lies outside
            [1.5, 2.5].
        DomainError: If count is not positive or exceeds the grid size.
    """
    if count < 1:
        raise DomainError("fd_eigensolve requires count >= 1", value=count)

    spacings, per_grid = [], []
    r, vectors = None, None
    for factor in REFINEMENTS:
        finest = factor == REFINEMENTS[-1]
        h, values, r_grid, vecs = _solve_grid(
            prob, prob.grid.points * factor, count, with_vectors and finest
        )
        spacings.append(h)
        per_grid.append(np.asarray(values))
        if finest:
            r, vectors = r_grid, vecs

    coarse, medium, fine = per_grid
    richardson = (4.0 * fine - medium) / 3.0
    with np.errstate(divide="ignore", invalid="ignore"):
        order = np.log2(np.abs(coarse - medium) / np.abs(medium - fine))

    if vectors is not None:
        h_fine = spacings[-1]
        vectors = vectors / np.sqrt(np.sum(vectors**2, axis=0) * h_fine)
        # sign convention: the largest lobe is positive
        peaks = vectors[np.argmax(np.abs(vectors), axis=0), np.arange(vectors.shape[1])]
        vectors = vectors * np.sign(peaks)

    result = OracleResult(
        eigenvalues=richardson,
        grid_spacings_used=spacings,
        per_grid_eigenvalues=per_grid,
        richardson_estimate=richardson,
        convergence_order=order,
        r=r,
        vectors=vectors,
        diagnostics={"variant": prob.variant.value, "intervals": prob.grid.points},
    )

    low, high = ORACLE_ORDER_BOUNDS
    bad = [k for k, value in enumerate(order) if not low <= value <= high]
    if bad:
        message = (
            f"Convergence order outside [{low}, {high}] for levels {bad}: "
            f"{[float(order[k]) for k in bad]}"
        )
        if check_order:
            raise AccuracyError(
                message,
                orders=[float(value) for value in order],
                diagnostics={
                    "grid_spacings": spacings,
                    "per_grid_eigenvalues": [v.tolist() for v in per_grid],
                },
            )
        logger.warning(message)
    if np.any(np.diff(richardson) <= 0):
        logger.warning("Oracle eigenvalues are not strictly increasing")
    return result
