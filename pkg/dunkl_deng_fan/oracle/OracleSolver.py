from typing import Any, Dict, Optional, Tuple

import logging

from dunkl_deng_fan.base.SpectrumSolver import SpectrumSolver
from dunkl_deng_fan.model.config import ORACLE_POINTS
from dunkl_deng_fan.model.params import DunklParams, MolecularParams, QuantumNumbers
from dunkl_deng_fan.model.potentials import energy_to_eps
from dunkl_deng_fan.nu_engine.AlphaChain import Alpha9Source
from dunkl_deng_fan.nu_engine.table import SpectrumMode
from dunkl_deng_fan.oracle.FiniteDifferenceOracle import (
    OracleGrid,
    OracleProblem,
    OracleResult,
    fd_eigensolve,
)
from dunkl_deng_fan.oracle.liouville import OracleVariant
from dunkl_deng_fan.pekeris.mapping import CoefficientSet, PekerisCoefficients

logging.basicConfig(
    format="%(name)s: %(asctime)s | %(levelname)s | %(filename)s:%(lineno)s | %(process)d >>> %(message)s",
    datefmt="%Y-%m-%dT%H:%M:%SZ",
)
logger = logging.getLogger("Oracle")
logger.setLevel(logging.INFO)


class OracleSolver(SpectrumSolver):
    """
    Spectrum mode backed by the finite-difference eigen-solver.

    One eigensolve per orbital quantum number is cached and grown on demand.

    Attributes:
        variant (OracleVariant): Treatment of the centrifugal term.
        grid (OracleGrid): Discretization interval.
    """

    def __init__(
        self,
        p: MolecularParams,
        d: DunklParams,
        C: Optional[PekerisCoefficients] = None,
        coefficient_set: CoefficientSet = CoefficientSet.SECTION_III_A,
        alpha9_source: Alpha9Source = Alpha9Source.CLOSED_FORM,
        variant: OracleVariant = OracleVariant.EXACT_CENTRIFUGAL,
        grid: Optional[OracleGrid] = None,
        points: int = ORACLE_POINTS,
    ) -> None:
        super().__init__(p, d, C, coefficient_set, alpha9_source)
        self.variant = variant
        self.grid = grid if grid is not None else OracleGrid.default(p, points)
        self._results: Dict[int, OracleResult] = {}

    def get_mode(self) -> SpectrumMode:
        return SpectrumMode.ORACLE

    def problem_for(self, ell: int) -> OracleProblem:
        return OracleProblem(
            p=self.p,
            d=self.dunkl_for(ell),
            variant=self.variant,
            grid=self.grid,
            C=self.C,
        )

    def result_for(self, ell: int, count: int) -> OracleResult:
        """
        Eigensolve for ell with at least `count` levels, reusing earlier solves.
        """
        cached = self._results.get(ell)
        if cached is None or cached.eigenvalues.size < count:
            logger.info(
                f"Eigensolve {self.variant.value} ell={ell} mu={self.d.mu:g} levels={count}"
            )
            cached = fd_eigensolve(self.problem_for(ell), count, check_order=False)
            self._results[ell] = cached
        return cached

    def solve_level(self, q: QuantumNumbers) -> Tuple[float, Dict[str, Any]]:
        result = self.result_for(q.ell, q.n + 1)
        energy = float(result.eigenvalues[q.n])
        diagnostics = {
            "variant": self.variant.value,
            "grid_spacings": list(result.grid_spacings_used),
            "per_grid": [float(values[q.n]) for values in result.per_grid_eigenvalues],
            "convergence_order": float(result.convergence_order[q.n]),
        }
        return float(energy_to_eps(energy, self.p)), diagnostics
