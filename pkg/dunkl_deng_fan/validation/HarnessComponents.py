import math
from typing import Any, Callable, Dict, List, Tuple

import logging
import numpy as np
from pydantic import BaseModel, ConfigDict, Field
from typing_extensions import TypedDict

from dunkl_deng_fan.errors import DunklDengFanError, NoBoundStateError
from dunkl_deng_fan.model.config import (
    ACCEPTANCE_ELLS,
    ACCEPTANCE_MUS,
    ACCEPTANCE_NS,
    ALPHA_DRAWS,
    DEFAULT_MU_MAX,
    DEFAULT_MU_MIN,
    DEFAULT_MU_STEP,
    DENSITY_MUS,
    HARNESS_SEED,
    ORACLE_ACCEPTANCE_ORDER_BOUNDS,
    ORACLE_POINTS,
    QUADRATURE_NODES,
    SWEEP_LEVELS,
)
from dunkl_deng_fan.model.params import (
    CentrifugalConvention,
    DunklParams,
    MolecularParams,
    QuantumNumbers,
)
from dunkl_deng_fan.model.potentials import centrifugal_eigenvalue
from dunkl_deng_fan.nu_engine.AlphaChain import (
    Alpha9Source,
    alpha_chain,
    chain_alpha9,
    closed_form_alpha9,
    quantization_residual,
)
from dunkl_deng_fan.nu_engine.PaperVerbatimSolver import energy_closed_form
from dunkl_deng_fan.nu_engine.SpectrumHelper import SpectrumHelper, mu_grid
from dunkl_deng_fan.nu_engine.table import SpectrumMode
from dunkl_deng_fan.oracle.compare import (
    MODE_PAIRS,
    ORACLE_PEKERIS,
    PAPER,
    SELF_CONSISTENT,
    DiscrepancyReport,
    compare_modes,
    gaps,
)
from dunkl_deng_fan.oracle.FiniteDifferenceOracle import OracleProblem, fd_eigensolve
from dunkl_deng_fan.oracle.liouville import OracleVariant, exact_centrifugal_levels
from dunkl_deng_fan.oracle.OracleSolver import OracleSolver
from dunkl_deng_fan.pekeris.mapping import (
    CoefficientSet,
    PekerisCoefficients,
    map_to_hypergeometric,
)
from dunkl_deng_fan.validation.criteria import criterion_result
from dunkl_deng_fan.wavefunction.jacobi import (
    jacobi_orthogonality_residual,
    jacobi_roots_in_s,
)
from dunkl_deng_fan.wavefunction.quadrature import (
    QuadratureScheme,
    QuadratureSpec,
    integrate,
)
from dunkl_deng_fan.wavefunction.RadialState import (
    RadialState,
    node_count,
    normalize,
    probability_density,
    radial_state,
)

logging.basicConfig(
    format="%(name)s: %(asctime)s | %(levelname)s | %(filename)s:%(lineno)s | %(process)d >>> %(message)s",
    datefmt="%Y-%m-%dT%H:%M:%SZ",
)
logger = logging.getLogger("HarnessNodes")
logger.setLevel(logging.INFO)

Check = Callable[[], Tuple[bool, str]]


class HarnessState(TypedDict):
    """
    State of the validation graph.

    Attributes:
        criteria (List[Dict[str, Any]]): Criterion outcomes in evaluation order.
        oracle_orders (List[float]): Convergence orders of the box and reference solves.
        discrepancy_rows (List[Dict[str, Any]]): Mode-pair comparison rows.
        pekeris_rows (List[Dict[str, Any]]): Exact vs Pekeris-mapped oracle rows.
        convergence_rows (List[Dict[str, Any]]): Oracle grid diagnostics.
        finalized_state (bool): True when every hard criterion passed.
    """

    criteria: List[Dict[str, Any]]
    oracle_orders: List[float]
    discrepancy_rows: List[Dict[str, Any]]
    pekeris_rows: List[Dict[str, Any]]
    convergence_rows: List[Dict[str, Any]]
    finalized_state: bool


class HarnessConfig(BaseModel):
    """
    Everything the validation run depends on.
    """

    model_config = ConfigDict(frozen=True)

    p: MolecularParams = Field(default_factory=MolecularParams)
    convention: CentrifugalConvention = CentrifugalConvention.RADIAL_EQUATION
    C: PekerisCoefficients = Field(default_factory=PekerisCoefficients)
    coefficient_set: CoefficientSet = CoefficientSet.SECTION_III_A
    alpha9_source: Alpha9Source = Alpha9Source.CLOSED_FORM
    points: int = Field(ORACLE_POINTS, ge=8)
    node_count: int = Field(QUADRATURE_NODES, ge=64)
    scheme: QuadratureScheme = QuadratureScheme.COMPOSITE_GAUSS_LEGENDRE
    seed: int = HARNESS_SEED
    draws: int = Field(ALPHA_DRAWS, ge=1)


def _guarded(key: str, check: Check) -> Dict[str, Any]:
    # a criterion whose computation raises counts as failed
    try:
        passed, detail = check()
    except (DunklDengFanError, ValueError, ArithmeticError, LookupError) as error:
        passed, detail = False, f"{type(error).__name__}: {error}"
    logger.info(f"{key}: {'pass' if passed else 'fail'} ({detail})")
    return criterion_result(key, passed, detail)


def _strictly_increasing(values: List[float]) -> bool:
    return all(
        not math.isnan(a) and not math.isnan(b) and b > a
        for a, b in zip(values[:-1], values[1:])
    )


def _rows_fingerprint(report: DiscrepancyReport) -> List[str]:
    # repr keeps nan comparable
    return [
        repr(sorted(row.items()))
        for rows in (report.rows, report.pekeris_rows, report.convergence_rows)
        for row in rows
    ]


class HarnessNodes:
    """
    Nodes of the validation graph; each returns a partial state update.

    Attributes:
        config (HarnessConfig): Run configuration.
        helper (SpectrumHelper): Spectrum builder for the configured parameters.
    """

    def __init__(self, config: HarnessConfig) -> None:
        self.config = config
        self.helper = SpectrumHelper(
            config.p,
            config.C,
            config.coefficient_set,
            config.alpha9_source,
            oracle_points=config.points,
        )

    def dunkl(self, mu: float = 0.0, ell: int = 0) -> DunklParams:
        return DunklParams(mu=mu, ell=ell, centrifugal_convention=self.config.convention)

    def quadrature(self, node_count: int) -> QuadratureSpec:
        return QuadratureSpec(node_count=node_count, scheme=self.config.scheme)

    def alpha_node(self, state: HarnessState) -> Dict[str, Any]:
        """
        alpha9 energy independence and its asserted closed-form value.
        """
        cfg = self.config
        rng = np.random.default_rng(cfg.seed)
        worst_drift, worst_value_gap = 0.0, 0.0
        for _ in range(cfg.draws):
            p = MolecularParams(
                D_e=rng.uniform(1.0, 20.0),
                lambda_=rng.uniform(0.5, 1.5),
                mass=rng.uniform(0.5, 1.5),
                r_e=cfg.p.r_e,
            )
            d = DunklParams(
                mu=rng.uniform(-0.49, 3.0),
                ell=int(rng.integers(0, 5)),
                centrifugal_convention=cfg.convention,
            )
            mc = map_to_hypergeometric(p, d, cfg.C, cfg.coefficient_set)
            eps = rng.uniform(-mc.beta, mc.beta)
            alpha9 = alpha_chain(mc, eps).alpha9
            scale = 1.0 + abs(mc.xi1(eps)) + abs(mc.xi2(eps)) + abs(mc.xi3(eps))
            worst_drift = max(worst_drift, abs(alpha9 - chain_alpha9(mc)) / scale)
            worst_value_gap = max(
                worst_value_gap, abs(alpha9 - closed_form_alpha9(mc.beta))
            )

        criteria = state.get("criteria", [])
        criteria.append(
            _guarded(
                "alpha9_energy_independence",
                lambda: (
                    worst_drift < 1e-12,
                    f"max scaled drift {worst_drift:.3e} over {cfg.draws} draws",
                ),
            )
        )
        criteria.append(
            _guarded(
                "alpha9_closed_form_value",
                lambda: (
                    worst_value_gap < 1e-12,
                    f"max |alpha9 - (1/4 + beta)| = {worst_value_gap:.6e}",
                ),
            )
        )
        return {"criteria": criteria}

    def limit_node(self, state: HarnessState) -> Dict[str, Any]:
        """
        mu -> 0 continuity of the closed form and coincidence of the conventions.
        """
        p, C = self.config.p, self.config.C

        def continuity() -> Tuple[bool, str]:
            worst = 0.0
            for ell in range(3):
                for n in range(6):
                    q = QuantumNumbers(n=n, ell=ell)
                    e0 = energy_closed_form(q, p, self.dunkl(0.0, ell), C)[1]
                    e1 = energy_closed_form(q, p, self.dunkl(1e-12, ell), C)[1]
                    worst = max(worst, abs(e1 - e0) / max(abs(e0), 1e-300))
            return worst < 1e-8, f"max relative change {worst:.3e}"

        def conventions() -> Tuple[bool, str]:
            worst = 0.0
            for ell in range(4):
                forms = [
                    DunklParams(mu=0.0, ell=ell, centrifugal_convention=convention)
                    for convention in CentrifugalConvention
                ]
                gammas = [centrifugal_eigenvalue(d) for d in forms]
                energies = [
                    energy_closed_form(QuantumNumbers(n=0, ell=ell), p, d, C)[1]
                    for d in forms
                ]
                if gammas[0] != ell * (ell + 1) or gammas[1] != ell * (ell + 1):
                    return False, f"gamma {gammas} differs from ell(ell+1) at ell={ell}"
                worst = max(worst, abs(energies[0] - energies[1]))
            return worst == 0.0, f"max energy difference {worst:.3e}"

        criteria = state.get("criteria", [])
        criteria.append(_guarded("mu_zero_continuity", continuity))
        criteria.append(_guarded("convention_coincidence", conventions))
        return {"criteria": criteria}

    def _trend(self, mode: SpectrumMode) -> Tuple[bool, str]:
        mus = mu_grid(DEFAULT_MU_MIN, DEFAULT_MU_MAX, DEFAULT_MU_STEP)
        table = self.helper.sweep_mu(self.dunkl(), mus, mode, SWEEP_LEVELS)
        failing = [
            n
            for n in SWEEP_LEVELS
            if not _strictly_increasing([row.energy for row in table.select(n=n)])
        ]
        return not failing, (
            f"increasing for n in {list(SWEEP_LEVELS)}"
            if not failing
            else f"not strictly increasing for n in {failing}"
        )

    def spectra_node(self, state: HarnessState) -> Dict[str, Any]:
        """
        mu-monotonicity of the analytic spectra.
        """
        criteria = state.get("criteria", [])
        criteria.append(
            _guarded(
                "energy_trend_paper", lambda: self._trend(SpectrumMode.PAPER_VERBATIM)
            )
        )
        criteria.append(
            _guarded(
                "energy_trend_self_consistent",
                lambda: self._trend(SpectrumMode.SELF_CONSISTENT),
            )
        )
        return {"criteria": criteria}

    def oracle_node(self, state: HarnessState) -> Dict[str, Any]:
        """
        Box sanity case, agreement with the exact levels and the oracle trend.
        """
        cfg = self.config
        orders = state.get("oracle_orders", [])

        def box() -> Tuple[bool, str]:
            p_box = cfg.p.model_copy(update={"D_e": 0.0})
            d_box = DunklParams(mu=0.5, ell=0)
            problem = OracleProblem.default(p_box, d_box, points=cfg.points)
            result = fd_eigensolve(problem, 3, check_order=False)
            orders.extend(float(order) for order in result.convergence_order)
            length = problem.grid.r_max - problem.grid.r_min
            worst = 0.0
            for k, energy in enumerate(result.eigenvalues, start=1):
                exact = (k * math.pi * p_box.hbar) ** 2 / (2.0 * p_box.mass * length**2)
                worst = max(worst, abs(energy - exact) / exact)
            return worst < 1e-6, f"max relative error {worst:.3e}"

        def reference() -> Tuple[bool, str]:
            worst = 0.0
            count = max(ACCEPTANCE_NS) + 1
            for ell in ACCEPTANCE_ELLS:
                for mu in ACCEPTANCE_MUS:
                    d = self.dunkl(mu, ell)
                    solver = OracleSolver(cfg.p, d, cfg.C, points=cfg.points)
                    result = solver.result_for(ell, count)
                    orders.extend(float(order) for order in result.convergence_order)
                    exact = exact_centrifugal_levels(cfg.p, d, count)
                    for n in ACCEPTANCE_NS:
                        worst = max(worst, abs(result.eigenvalues[n] - exact[n]) / abs(exact[n]))
            return worst < 1e-6, f"max relative error {worst:.3e}"

        criteria = state.get("criteria", [])
        criteria.append(_guarded("box_sanity", box))
        criteria.append(_guarded("oracle_reference", reference))
        criteria.append(
            _guarded("energy_trend_oracle", lambda: self._trend(SpectrumMode.ORACLE))
        )
        return {"criteria": criteria, "oracle_orders": orders}

    def _states(self) -> List[RadialState]:
        cfg = self.config
        states = []
        for mode in (SpectrumMode.PAPER_VERBATIM, SpectrumMode.SELF_CONSISTENT):
            for ell in ACCEPTANCE_ELLS:
                for mu in ACCEPTANCE_MUS:
                    for n in ACCEPTANCE_NS:
                        try:
                            states.append(
                                radial_state(
                                    QuantumNumbers(n=n, ell=ell),
                                    cfg.p,
                                    self.dunkl(mu, ell),
                                    mode,
                                    cfg.C,
                                    cfg.coefficient_set,
                                    cfg.alpha9_source,
                                )
                            )
                        except NoBoundStateError as error:
                            logger.info(f"Skipping state: {error}")
        return states

    def wavefunction_node(self, state: HarnessState) -> Dict[str, Any]:
        """
        Node counts, normalization, Jacobi orthogonality and the density trend.
        """
        cfg = self.config
        states = self._states()
        quad = self.quadrature(cfg.node_count)

        def nodes() -> Tuple[bool, str]:
            if not states:
                return False, "no analytic state could be built"
            # each Jacobi root in (0, 1) is one node of R on (0, infinity)
            wrong = [
                (st.mode.value, st.n, st.ell, st.mu)
                for st in states
                if node_count(st, quad) != st.n
                or len(jacobi_roots_in_s(st.n, st.jacobi_a, st.jacobi_b)) != st.n
            ]
            return not wrong, f"{len(states)} states, mismatches {wrong}"

        def normalization() -> Tuple[bool, str]:
            if not states:
                return False, "no analytic state could be built"
            worst_integral, worst_doubling, worst_repeat = 0.0, 0.0, 0.0
            doubled_quad = self.quadrature(2 * cfg.node_count)
            for st in states:
                normalized = normalize(st, quad)
                doubled = normalize(st, doubled_quad)
                repeated = normalize(normalized, quad)
                integral = integrate(
                    lambda r: probability_density(normalized, r, weighted=True),
                    0.0,
                    normalized.r_max,
                    quad,
                )
                worst_integral = max(worst_integral, abs(integral - 1.0))
                worst_doubling = max(
                    worst_doubling, abs(doubled.norm - normalized.norm) / normalized.norm
                )
                worst_repeat = max(
                    worst_repeat, abs(repeated.norm - normalized.norm) / normalized.norm
                )
            passed = worst_integral < 1e-8 and worst_doubling < 1e-8 and worst_repeat < 1e-10
            return passed, (
                f"|integral - 1| {worst_integral:.3e}, node doubling {worst_doubling:.3e}, "
                f"repeat {worst_repeat:.3e}"
            )

        def orthogonality() -> Tuple[bool, str]:
            pairs = sorted({(st.jacobi_a, st.jacobi_b) for st in states})
            if not pairs:
                return False, "no analytic state could be built"
            worst = 0.0
            for a, b in pairs:
                for m in range(6):
                    for n in range(m + 1, 6):
                        worst = max(worst, jacobi_orthogonality_residual(m, n, a, b))
            return worst < 1e-10, f"{len(pairs)} parameter pairs, max residual {worst:.3e}"

        def density() -> Tuple[bool, str]:
            peaks, origin = [], []
            for mu in DENSITY_MUS:
                st = normalize(
                    radial_state(
                        QuantumNumbers(n=0, ell=0),
                        cfg.p,
                        self.dunkl(mu, 0),
                        SpectrumMode.PAPER_VERBATIM,
                        cfg.C,
                        cfg.coefficient_set,
                        cfg.alpha9_source,
                    ),
                    quad,
                )
                r = np.linspace(1e-3 * cfg.p.r_e, st.default_r_max(), 40001)
                values = probability_density(st, r, weighted=True)
                peaks.append(float(r[np.argmax(values)]))
                origin.append(probability_density(st, 1e-3 * cfg.p.r_e, weighted=True))
            decreasing = all(b < a for a, b in zip(origin[:-1], origin[1:]))
            passed = _strictly_increasing(peaks) and decreasing
            return passed, (
                f"peaks {[round(value, 4) for value in peaks]}, "
                f"origin densities {[f'{value:.3e}' for value in origin]}"
            )

        criteria = state.get("criteria", [])
        criteria.append(_guarded("node_count", nodes))
        criteria.append(_guarded("normalization", normalization))
        criteria.append(_guarded("jacobi_orthogonality", orthogonality))
        criteria.append(_guarded("density_trend", density))
        return {"criteria": criteria}

    def _compare(self) -> DiscrepancyReport:
        cfg = self.config
        return compare_modes(
            cfg.p,
            self.dunkl(),
            ACCEPTANCE_NS,
            ACCEPTANCE_ELLS,
            ACCEPTANCE_MUS,
            cfg.C,
            cfg.coefficient_set,
            cfg.alpha9_source,
            cfg.points,
        )

    def compare_node(self, state: HarnessState) -> Dict[str, Any]:
        """
        Build the comparison ledger and evaluate the ledger criteria and claims.
        """
        cfg = self.config
        try:
            report = self._compare()
        except (DunklDengFanError, ValueError) as error:
            logger.warning(f"Comparison ledger could not be built: {error}")
            report = DiscrepancyReport()
        orders = list(state.get("oracle_orders", []))
        orders.extend(row["order"] for row in report.convergence_rows)

        def convergence() -> Tuple[bool, str]:
            low, high = ORACLE_ACCEPTANCE_ORDER_BOUNDS
            bad = [order for order in orders if not low <= order <= high]
            spread = (min(orders), max(orders)) if orders else (math.nan, math.nan)
            return bool(orders) and not bad, (
                f"{len(orders)} levels, orders in [{spread[0]:.4f}, {spread[1]:.4f}]"
            )

        def completeness() -> Tuple[bool, str]:
            expected = {
                (n, ell, mu, pair)
                for n in ACCEPTANCE_NS
                for ell in ACCEPTANCE_ELLS
                for mu in ACCEPTANCE_MUS
                for pair in MODE_PAIRS
            }
            present = {
                (row["n"], row["ell"], row["mu"], (row["mode_a"], row["mode_b"]))
                for row in report.rows
            }
            missing = expected - present
            misflagged = [
                (key, source)
                for key, energies in report.energies.items()
                for source, energy in energies.items()
                if report.flags[key][source] == "bound"
                and not (0.0 <= energy < cfg.p.D_e)
            ]
            passed = not missing and not misflagged and len(report.pekeris_rows) > 0
            return passed, (
                f"{len(report.rows)} rows, {len(missing)} missing, "
                f"{len(misflagged)} bound flags outside [0, D_e)"
            )

        def determinism() -> Tuple[bool, str]:
            again = self._compare()
            same = _rows_fingerprint(report) == _rows_fingerprint(again)
            return same, "identical" if same else "ledger changed between runs"

        def paper_vs_self() -> Tuple[bool, str]:
            worst = 0.0
            for n in ACCEPTANCE_NS:
                energies = report.energies[(n, 0, 0.0)]
                _, relative = gaps(energies[PAPER], energies[SELF_CONSISTENT])
                worst = max(worst, relative) if not math.isnan(relative) else math.inf
            return worst < 1e-9, f"max relative gap {worst:.6e}"

        def self_vs_pekeris() -> Tuple[bool, str]:
            worst = 0.0
            for energies in report.energies.values():
                _, relative = gaps(energies[SELF_CONSISTENT], energies[ORACLE_PEKERIS])
                worst = max(worst, relative) if not math.isnan(relative) else math.inf
            return worst < 1e-6, f"max relative gap {worst:.6e}"

        def closed_form_residual() -> Tuple[bool, str]:
            d = self.dunkl(0.0, 0)
            mc = map_to_hypergeometric(cfg.p, d, cfg.C, cfg.coefficient_set)
            worst = 0.0
            for n in ACCEPTANCE_NS:
                eps = energy_closed_form(QuantumNumbers(n=n, ell=0), cfg.p, d, cfg.C)[0]
                worst = max(worst, abs(quantization_residual(n, eps, mc, cfg.alpha9_source)))
            return worst < 1e-9, f"max |residual| {worst:.6e}"

        criteria = state.get("criteria", [])
        criteria.append(_guarded("convergence_order", convergence))
        criteria.append(_guarded("ledger_completeness", completeness))
        criteria.append(_guarded("determinism", determinism))
        criteria.append(_guarded("paper_vs_self_consistent", paper_vs_self))
        criteria.append(_guarded("self_consistent_vs_oracle_pekeris", self_vs_pekeris))
        criteria.append(_guarded("closed_form_residual", closed_form_residual))
        return {
            "criteria": criteria,
            "discrepancy_rows": report.rows,
            "pekeris_rows": report.pekeris_rows,
            "convergence_rows": report.convergence_rows,
        }

    def judge_node(self, state: HarnessState) -> Dict[str, bool]:
        """
        Decide the run: every hard criterion must pass.
        """
        hard = [c for c in state.get("criteria", []) if c["hard"]]
        failed = [c["key"] for c in hard if not c["passed"]]
        if failed:
            logger.info(f"Hard criteria failed: {failed}")
        return {"finalized_state": bool(hard) and not failed}

    def reject_node(self, state: HarnessState) -> Dict[str, bool]:
        return {"finalized_state": False}

    def accept_node(self, state: HarnessState) -> Dict[str, bool]:
        return {"finalized_state": True}


class HarnessEdges:

    @staticmethod
    def should_continue(state: HarnessState) -> str:
        """
        Route the judged state to acceptance or rejection.

        Returns:
            str: "accepted" or "rejected".
        """
        if state.get("finalized_state", False):
            return "accepted"
        return "rejected"
