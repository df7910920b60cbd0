from typing import Dict, Iterable, List, Optional, Sequence, Type, Union

import logging

from dunkl_deng_fan.base.SpectrumSolver import SpectrumSolver
from dunkl_deng_fan.errors import DomainError
from dunkl_deng_fan.model.config import ORACLE_POINTS, SWEEP_LEVELS
from dunkl_deng_fan.model.params import DunklParams, MolecularParams, QuantumNumbers
from dunkl_deng_fan.nu_engine.AlphaChain import Alpha9Source
from dunkl_deng_fan.nu_engine.PaperVerbatimSolver import (
    PaperVerbatimSolver,
    closed_form_terms,
)
from dunkl_deng_fan.nu_engine.SelfConsistentSolver import SelfConsistentSolver
from dunkl_deng_fan.nu_engine.table import LevelFlag, SpectrumMode, SpectrumTable
from dunkl_deng_fan.oracle.liouville import OracleVariant
from dunkl_deng_fan.oracle.OracleSolver import OracleSolver
from dunkl_deng_fan.pekeris.mapping import CoefficientSet, PekerisCoefficients

logging.basicConfig(
    format="%(name)s: %(asctime)s | %(levelname)s | %(filename)s:%(lineno)s | %(process)d >>> %(message)s",
    datefmt="%Y-%m-%dT%H:%M:%SZ",
)
logger = logging.getLogger("SpectrumHelper")
logger.setLevel(logging.INFO)

SOLVERS: Dict[SpectrumMode, Type[SpectrumSolver]] = {
    SpectrumMode.PAPER_VERBATIM: PaperVerbatimSolver,
    SpectrumMode.SELF_CONSISTENT: SelfConsistentSolver,
    SpectrumMode.ORACLE: OracleSolver,
}

Modes = Union[SpectrumMode, Sequence[SpectrumMode]]


def _as_modes(mode: Modes) -> List[SpectrumMode]:
    if isinstance(mode, SpectrumMode):
        return [mode]
    return list(mode)


class SpectrumHelper:
    """
    Builds spectrum tables, mu sweeps and bound-state counts on top of the
    spectrum solvers.

    Attributes:
        p (MolecularParams): Molecular parameters shared by every query.
        C (Optional[PekerisCoefficients]): Pekeris coefficients.
        coefficient_set (CoefficientSet): Drift constants of the mapped equation.
        alpha9_source (Alpha9Source): alpha9 of the quantization condition.
        oracle_variant (OracleVariant): Centrifugal treatment of the oracle mode.
        oracle_points (int): Coarsest oracle grid size.
    """

    def __init__(
        self,
        p: MolecularParams,
        C: Optional[PekerisCoefficients] = None,
        coefficient_set: CoefficientSet = CoefficientSet.SECTION_III_A,
        alpha9_source: Alpha9Source = Alpha9Source.CLOSED_FORM,
        oracle_variant: OracleVariant = OracleVariant.EXACT_CENTRIFUGAL,
        oracle_points: int = ORACLE_POINTS,
    ) -> None:
        self.p = p
        self.C = C
        self.coefficient_set = coefficient_set
        self.alpha9_source = alpha9_source
        self.oracle_variant = oracle_variant
        self.oracle_points = oracle_points

    def solver_for_mode(self, d: DunklParams, mode: SpectrumMode) -> SpectrumSolver:
        """
        Instantiate the solver serving `mode` for the Dunkl parameters d.
        """
        if mode == SpectrumMode.ORACLE:
            return OracleSolver(
                self.p,
                d,
                self.C,
                self.coefficient_set,
                self.alpha9_source,
                variant=self.oracle_variant,
                points=self.oracle_points,
            )
        return SOLVERS[mode](self.p, d, self.C, self.coefficient_set, self.alpha9_source)

    def spectrum(
        self,
        d: DunklParams,
        n_max: int,
        ell_max: int,
        mode: Modes = SpectrumMode.PAPER_VERBATIM,
        mus: Optional[Iterable[float]] = None,
    ) -> SpectrumTable:
        """
        Tabulate every (n <= n_max, ell <= ell_max) level, one row per mu and mode.

        Missing levels become flagged rows; the table never aborts.

        Args:
            d (DunklParams): Dunkl parameters; ell is overridden per row.
            n_max (int): Highest radial quantum number, >= 0.
            ell_max (int): Highest orbital quantum number, >= 0.
            mode (Modes): One mode or several.
            mus (Optional[Iterable[float]]): Dunkl parameters; defaults to d.mu.

        Returns:
            SpectrumTable: Rows sorted by (ell, n, mu, mode).
        """
        if n_max < 0 or ell_max < 0:
            raise ValueError("n_max and ell_max must be non-negative")
        mu_values = [d.mu] if mus is None else list(mus)
        rows = []
        for current in _as_modes(mode):
            for mu in mu_values:
                solver = self.solver_for_mode(d.model_copy(update={"mu": mu}), current)
                for ell in range(ell_max + 1):
                    for n in range(n_max + 1):
                        rows.append(solver.level(QuantumNumbers(n=n, ell=ell)))
        logger.info(f"Tabulated {len(rows)} levels")
        return SpectrumTable(rows)

    def sweep_mu(
        self,
        d: DunklParams,
        mus: Iterable[float],
        mode: Modes = SpectrumMode.PAPER_VERBATIM,
        levels: Sequence[int] = SWEEP_LEVELS,
    ) -> SpectrumTable:
        """
        Energies of the given levels at fixed ell across a grid of mu values.
        """
        mu_values = list(mus)
        rows = []
        for current in _as_modes(mode):
            for mu in mu_values:
                solver = self.solver_for_mode(d.model_copy(update={"mu": mu}), current)
                for n in levels:
                    rows.append(solver.level(QuantumNumbers(n=n, ell=d.ell)))
        return SpectrumTable(rows)

    def bound_state_count(
        self,
        d: DunklParams,
        mode: SpectrumMode = SpectrumMode.PAPER_VERBATIM,
        require_energy_window: bool = True,
    ) -> int:
        """
        Largest N such that every n < N has a positive closed-form numerator
        and, when require_energy_window, a bound-flagged energy in `mode`.

        Args:
            d (DunklParams): Dunkl parameters.
            mode (SpectrumMode): PAPER_VERBATIM or SELF_CONSISTENT.
            require_energy_window (bool): Also demand E in [0, D_e).

        Returns:
            int: The count.

        Raises:
            ValueError: For the oracle mode; the unapproximated well binds
                infinitely many levels.
        """
        if mode == SpectrumMode.ORACLE:
            raise ValueError("bound_state_count is defined for the analytic modes only")
        solver = self.solver_for_mode(d, mode) if require_energy_window else None
        count = 0
        while True:
            q = QuantumNumbers(n=count, ell=d.ell)
            try:
                numerator = closed_form_terms(q, self.p, d, self.C)["numerator"]
            except DomainError:
                return count
            if numerator <= 0:
                return count
            if solver is not None and solver.level(q).flag != LevelFlag.BOUND:
                return count
            count += 1


def spectrum(
    p: MolecularParams,
    d: DunklParams,
    n_max: int,
    ell_max: int,
    mode: Modes = SpectrumMode.PAPER_VERBATIM,
    mus: Optional[Iterable[float]] = None,
    **kwargs,
) -> SpectrumTable:
    return SpectrumHelper(p, **kwargs).spectrum(d, n_max, ell_max, mode, mus)


def bound_state_count(
    p: MolecularParams,
    d: DunklParams,
    mode: SpectrumMode = SpectrumMode.PAPER_VERBATIM,
    require_energy_window: bool = True,
    **kwargs,
) -> int:
    return SpectrumHelper(p, **kwargs).bound_state_count(d, mode, require_energy_window)


def mu_grid(mu_min: float, mu_max: float, mu_step: float) -> List[float]:
    """
    Evenly spaced mu values from mu_min to mu_max inclusive.
    """
    if not mu_step > 0 or mu_max < mu_min:
        raise ValueError("mu grid needs mu_step > 0 and mu_max >= mu_min")
    steps = int(round((mu_max - mu_min) / mu_step))
    return [mu_min + k * mu_step for k in range(steps + 1)]
