"""
Side-by-side comparison of every spectrum mode and of the two oracle variants.
"""

import math
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional, Sequence

import logging

from dunkl_deng_fan.errors import DomainError, NoBoundStateError
from dunkl_deng_fan.model.config import ORACLE_POINTS
from dunkl_deng_fan.model.params import DunklParams, MolecularParams, QuantumNumbers
from dunkl_deng_fan.nu_engine.AlphaChain import Alpha9Source
from dunkl_deng_fan.nu_engine.PaperVerbatimSolver import PaperVerbatimSolver
from dunkl_deng_fan.nu_engine.SelfConsistentSolver import SelfConsistentSolver
from dunkl_deng_fan.nu_engine.table import LevelFlag
from dunkl_deng_fan.oracle.liouville import OracleVariant, exact_centrifugal_levels
from dunkl_deng_fan.oracle.OracleSolver import OracleSolver
from dunkl_deng_fan.pekeris.mapping import CoefficientSet, PekerisCoefficients

logging.basicConfig(
    format="%(name)s: %(asctime)s | %(levelname)s | %(filename)s:%(lineno)s | %(process)d >>> %(message)s",
    datefmt="%Y-%m-%dT%H:%M:%SZ",
)
logger = logging.getLogger("Compare")
logger.setLevel(logging.INFO)

PAPER = "paper"
SELF_CONSISTENT = "self-consistent"
ORACLE_EXACT = "oracle-exact-centrifugal"
ORACLE_PEKERIS = "oracle-pekeris-mapped"
REFERENCE = "exact-reference"

# (candidate, reference) pairs reported for every grid point
MODE_PAIRS = [
    (PAPER, SELF_CONSISTENT),
    (PAPER, ORACLE_EXACT),
    (SELF_CONSISTENT, ORACLE_EXACT),
    (SELF_CONSISTENT, ORACLE_PEKERIS),
    (ORACLE_EXACT, REFERENCE),
]

DISCREPANCY_COLUMNS = [
    "n", "ell", "mu", "mode_a", "mode_b", "E_a", "E_b",
    "abs_gap", "rel_gap", "flag_a", "flag_b",
]
PEKERIS_COLUMNS = [
    "n", "ell", "mu", "E_exact_centrifugal", "E_pekeris_mapped", "abs_gap", "rel_gap",
]
CONVERGENCE_COLUMNS = [
    "variant", "n", "ell", "mu", "h_coarse", "h_medium", "h_fine",
    "E_coarse", "E_medium", "E_fine", "E_richardson", "order",
]


def gaps(a: float, b: float) -> tuple:
    """
    Absolute and relative gap of a against the reference b; nan when undefined.
    """
    if math.isnan(a) or math.isnan(b):
        return math.nan, math.nan
    absolute = abs(a - b)
    relative = absolute / abs(b) if b != 0 else math.nan
    return absolute, relative


@dataclass
class DiscrepancyReport:
    """
    Attributes:
        rows (List[Dict[str, Any]]): One row per (grid point, mode pair).
        pekeris_rows (List[Dict[str, Any]]): Exact vs Pekeris-mapped oracle levels.
        convergence_rows (List[Dict[str, Any]]): Oracle grid diagnostics per level.
        energies (Dict[tuple, Dict[str, float]]): Energy per (n, ell, mu) and source.
        flags (Dict[tuple, Dict[str, str]]): Flag per (n, ell, mu) and source.
    """

    rows: List[Dict[str, Any]] = field(default_factory=list)
    pekeris_rows: List[Dict[str, Any]] = field(default_factory=list)
    convergence_rows: List[Dict[str, Any]] = field(default_factory=list)
    energies: Dict[tuple, Dict[str, float]] = field(default_factory=dict)
    flags: Dict[tuple, Dict[str, str]] = field(default_factory=dict)


def compare_modes(
    p: MolecularParams,
    d: DunklParams,
    n_range: Iterable[int],
    ell_range: Iterable[int],
    mus: Optional[Sequence[float]] = None,
    C: Optional[PekerisCoefficients] = None,
    coefficient_set: CoefficientSet = CoefficientSet.SECTION_III_A,
    alpha9_source: Alpha9Source = Alpha9Source.CLOSED_FORM,
    points: int = ORACLE_POINTS,
) -> DiscrepancyReport:
    """
    Compare the closed form, the self-consistent root, both oracle variants
    and the exact reference levels on a (n, ell, mu) grid.

    Args:
        p (MolecularParams): Molecular parameters.
        d (DunklParams): Dunkl parameters (convention; mu when mus is None).
        n_range (Iterable[int]): Radial quantum numbers.
        ell_range (Iterable[int]): Orbital quantum numbers.
        mus (Optional[Sequence[float]]): Dunkl parameters, defaults to d.mu.
        C (Optional[PekerisCoefficients]): Pekeris coefficients.
        coefficient_set (CoefficientSet): Drift constants of the mapped equation.
        alpha9_source (Alpha9Source): alpha9 of the quantization condition.
        points (int): Coarsest oracle grid size.

    Returns:
        DiscrepancyReport: Gap rows, the Pekeris table and convergence rows.
    """
    n_values = sorted(n_range)
    ell_values = sorted(ell_range)
    mu_values = [d.mu] if mus is None else list(mus)
    count = max(n_values) + 1
    report = DiscrepancyReport()

    for ell in ell_values:
        for mu in mu_values:
            dm = d.model_copy(update={"mu": mu, "ell": ell})
            args = (p, dm, C, coefficient_set, alpha9_source)
            paper = PaperVerbatimSolver(*args)
            self_consistent = SelfConsistentSolver(*args)
            oracles = {
                ORACLE_EXACT: OracleSolver(
                    *args, variant=OracleVariant.EXACT_CENTRIFUGAL, points=points
                ),
                ORACLE_PEKERIS: OracleSolver(
                    *args, variant=OracleVariant.PEKERIS_MAPPED, points=points
                ),
            }
            try:
                reference = exact_centrifugal_levels(p, dm, count)
            except (DomainError, NoBoundStateError) as error:
                logger.warning(f"No exact reference for ell={ell} mu={mu:g}: {error}")
                reference = [math.nan] * count

            for solver in oracles.values():
                result = solver.result_for(ell, count)
                for n in n_values:
                    report.convergence_rows.append(
                        {
                            "variant": solver.variant.value,
                            "n": n,
                            "ell": ell,
                            "mu": mu,
                            "h_coarse": result.grid_spacings_used[0],
                            "h_medium": result.grid_spacings_used[1],
                            "h_fine": result.grid_spacings_used[2],
                            "E_coarse": float(result.per_grid_eigenvalues[0][n]),
                            "E_medium": float(result.per_grid_eigenvalues[1][n]),
                            "E_fine": float(result.per_grid_eigenvalues[2][n]),
                            "E_richardson": float(result.richardson_estimate[n]),
                            "order": float(result.convergence_order[n]),
                        }
                    )

            for n in n_values:
                q = QuantumNumbers(n=n, ell=ell)
                energies: Dict[str, float] = {}
                flags: Dict[str, str] = {}
                for source, solver in [
                    (PAPER, paper),
                    (SELF_CONSISTENT, self_consistent),
                    *oracles.items(),
                ]:
                    row = solver.level(q)
                    energies[source] = row.energy
                    flags[source] = row.flag.value
                energies[REFERENCE] = reference[n]
                flags[REFERENCE] = (
                    LevelFlag.BOUND.value
                    if 0.0 <= reference[n] < p.D_e
                    else LevelFlag.UNBOUND.value
                )
                key = (n, ell, mu)
                report.energies[key] = energies
                report.flags[key] = flags

                for mode_a, mode_b in MODE_PAIRS:
                    absolute, relative = gaps(energies[mode_a], energies[mode_b])
                    report.rows.append(
                        {
                            "n": n,
                            "ell": ell,
                            "mu": mu,
                            "mode_a": mode_a,
                            "mode_b": mode_b,
                            "E_a": energies[mode_a],
                            "E_b": energies[mode_b],
                            "abs_gap": absolute,
                            "rel_gap": relative,
                            "flag_a": flags[mode_a],
                            "flag_b": flags[mode_b],
                        }
                    )

                absolute, relative = gaps(energies[ORACLE_PEKERIS], energies[ORACLE_EXACT])
                report.pekeris_rows.append(
                    {
                        "n": n,
                        "ell": ell,
                        "mu": mu,
                        "E_exact_centrifugal": energies[ORACLE_EXACT],
                        "E_pekeris_mapped": energies[ORACLE_PEKERIS],
                        "abs_gap": absolute,
                        "rel_gap": relative,
                    }
                )

    logger.info(
        f"Compared {len(report.energies)} grid points over {len(MODE_PAIRS)} mode pairs"
    )
    return report
