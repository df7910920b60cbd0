import functools
from pathlib import Path
from typing import Any, Callable, Dict, List

import click
import logging
import numpy as np
from pydantic import ValidationError
from scipy.integrate import trapezoid

from dunkl_deng_fan.cli.config import RunConfig, build_run_config
from dunkl_deng_fan.cli.writers import write_csv, write_report
from dunkl_deng_fan.errors import ConfigurationError, NoBoundStateError
from dunkl_deng_fan.model.config import (
    DENSITY_MUS,
    QUADRATURE_R_MAX_SPAN,
    SWEEP_LEVELS,
)
from dunkl_deng_fan.model.params import QuantumNumbers
from dunkl_deng_fan.model.potentials import deng_fan_potential, morse_potential
from dunkl_deng_fan.nu_engine.SpectrumHelper import SpectrumHelper, mu_grid
from dunkl_deng_fan.nu_engine.table import SpectrumMode
from dunkl_deng_fan.oracle.compare import (
    CONVERGENCE_COLUMNS,
    DISCREPANCY_COLUMNS,
    PEKERIS_COLUMNS,
)
from dunkl_deng_fan.oracle.FiniteDifferenceOracle import OracleProblem, fd_eigensolve
from dunkl_deng_fan.validation.Harness import ValidationHarness
from dunkl_deng_fan.validation.HarnessComponents import HarnessConfig
from dunkl_deng_fan.wavefunction.quadrature import QuadratureSpec
from dunkl_deng_fan.wavefunction.RadialState import (
    normalize,
    probability_density,
    radial_state,
)

logging.basicConfig(
    format="%(name)s: %(asctime)s | %(levelname)s | %(filename)s:%(lineno)s | %(process)d >>> %(message)s",
    datefmt="%Y-%m-%dT%H:%M:%SZ",
)
logger = logging.getLogger("cli")
logger.setLevel(logging.INFO)

SPECTRUM_COLUMNS = ["n", "ell", "mu", "mode", "eps", "E", "flag"]
WAVEFUNCTION_POINTS = 8192
POTENTIAL_R_MIN_FACTOR = 0.1
POTENTIAL_R_MAX_FACTOR = 5.0
WAVEFUNCTION_R_MIN_FACTOR = 1e-3

MODE_CHOICE = click.Choice(["paper", "self-consistent", "oracle", "all"])


def shared_options(func: Callable) -> Callable:
    """
    Options common to every command. Defaults are None so that config-file
    entries can fill in whatever is not given on the command line.
    """
    options = [
        click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False), help="key = value config file."),
        click.option("--de", type=float, help="Dissociation energy D_e (hartree)."),
        click.option("--lambda", "lambda_", type=float, help="Screening parameter (1/bohr)."),
        click.option("--re", type=float, help="Equilibrium distance r_e (bohr)."),
        click.option("--mass", type=float, help="Reduced mass (electron masses)."),
        click.option("--mu", type=float, help="Dunkl parameter, > -1/2."),
        click.option("--ell", type=int, help="Orbital quantum number."),
        click.option("--n-max", "n_max", type=int, help="Highest radial quantum number."),
        click.option("--mode", type=MODE_CHOICE, help="Spectrum mode."),
        click.option("--convention", type=click.Choice(["radial-eq", "results-sec"]), help="Centrifugal convention."),
        click.option("--weighted/--unweighted", default=None, help="Density measure r^(2mu+1) dr or dr."),
        click.option("--coefficient-set", "coefficient_set", type=click.Choice(["section-iii-a", "printed-ode"]), help="Drift constants of the mapped equation."),
        click.option("--alpha9-source", "alpha9_source", type=click.Choice(["closed-form", "chain"]), help="alpha9 in the quantization condition."),
        click.option("--c0", type=float, help="Pekeris coefficient C0."),
        click.option("--c1", type=float, help="Pekeris coefficient C1."),
        click.option("--c2", type=float, help="Pekeris coefficient C2."),
        click.option("--points", type=int, help="Coarsest oracle grid size."),
        click.option("--out", type=str, help="Output CSV path."),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def exit_codes(func: Callable) -> Callable:
    """
    Map failures to exit codes: 1 missing bound state, 2 configuration, 3 I/O.
    """

    @functools.wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        try:
            return func(*args, **kwargs)
        except (ConfigurationError, ValidationError) as error:
            click.secho(f"Configuration error: {error}", fg="red", bold=True, err=True)
            raise SystemExit(2)
        except NoBoundStateError as error:
            click.secho(str(error), fg="red", bold=True, err=True)
            raise SystemExit(1)
        except OSError as error:
            click.secho(f"I/O error: {error}", fg="red", bold=True, err=True)
            raise SystemExit(3)

    return wrapper


def _configure(flags: Dict[str, Any]) -> RunConfig:
    config_path = flags.pop("config_path", None)
    return build_run_config(flags, config_path)


def _out(cfg: RunConfig, default: str) -> str:
    return cfg.out if cfg.out is not None else default


def _helper(cfg: RunConfig) -> SpectrumHelper:
    return SpectrumHelper(
        cfg.molecular(),
        cfg.pekeris(),
        cfg.coefficient_set,
        cfg.alpha9_source,
        oracle_points=cfg.points,
    )


def _mu_label(mu: float) -> str:
    return f"{mu:g}".replace("-", "m").replace(".", "p")


@click.group()
def cli():
    """Dunkl-Deng-Fan spectra, wavefunctions and validation."""


@cli.command()
@shared_options
@click.option("--r-min", "r_min", type=float, help="Smallest radius (bohr).")
@click.option("--r-max", "r_max", type=float, help="Largest radius (bohr).")
@click.option("--divisions", type=int, help="Grid points per r_e.")
@click.option("--morse-a", "morse_a", type=float, help="Morse range parameter, defaults to 1/r_e.")
@exit_codes
def potential(**flags):
    """Tabulate the molecular well next to a curvature-matched Morse curve."""
    cfg = _configure(flags)
    p = cfg.molecular()
    r_min = cfg.r_min if cfg.r_min is not None else POTENTIAL_R_MIN_FACTOR * p.r_e
    r_max = cfg.r_max if cfg.r_max is not None else POTENTIAL_R_MAX_FACTOR * p.r_e
    # r = r_e i / divisions so that r_e itself is a grid point
    first = int(np.ceil(r_min * cfg.divisions / p.r_e - 1e-9))
    last = int(np.floor(r_max * cfg.divisions / p.r_e + 1e-9))
    r = p.r_e * np.arange(max(first, 1), last + 1) / cfg.divisions
    if r.size == 0:
        raise ConfigurationError("Empty potential grid")
    v_df = deng_fan_potential(r, p)
    v_morse = morse_potential(r, p, cfg.morse_a)
    out = _out(cfg, "potential.csv")
    count = write_csv(
        out,
        ["r", "V_deng_fan", "V_morse"],
        ({"r": a, "V_deng_fan": b, "V_morse": c} for a, b, c in zip(r, v_df, v_morse)),
    )
    click.secho(f"Wrote {count} rows to {out}", fg="green", bold=True)


@cli.command()
@shared_options
@click.option("--ell-max", "ell_max", type=int, help="Highest orbital quantum number.")
@exit_codes
def spectrum(**flags):
    """Tabulate level energies over n <= n_max and ell <= ell_max."""
    cfg = _configure(flags)
    table = _helper(cfg).spectrum(cfg.dunkl(), cfg.n_max, cfg.ell_max, cfg.modes())
    out = _out(cfg, "spectrum.csv")
    count = write_csv(out, SPECTRUM_COLUMNS, table.records())
    bound = sum(1 for row in table.rows if row.flag.value == "bound")
    click.echo(f"{bound} of {count} levels inside [0, D_e)")
    click.secho(f"Wrote {count} rows to {out}", fg="green", bold=True)


@cli.command(name="sweep-mu")
@shared_options
@click.option("--mu-min", "mu_min", type=float, help="First mu of the sweep.")
@click.option("--mu-max", "mu_max", type=float, help="Last mu of the sweep.")
@click.option("--mu-step", "mu_step", type=float, help="Step of the sweep.")
@click.option("--mus", type=str, help="Comma-separated mu values, overrides the range.")
@exit_codes
def sweep_mu(**flags):
    """Energies E_n0, n = 0, 1, 2, across a grid of Dunkl parameters."""
    cfg = _configure(flags)
    mus = cfg.mus if cfg.mus is not None else mu_grid(cfg.mu_min, cfg.mu_max, cfg.mu_step)
    if len(mus) < 2:
        raise ConfigurationError("A mu sweep needs at least two points")
    modes = cfg.modes()
    d = cfg.dunkl()
    table = _helper(cfg).sweep_mu(d, mus, modes, SWEEP_LEVELS)

    def column(mode: SpectrumMode, n: int) -> str:
        name = f"E_{n}{d.ell}"
        return name if len(modes) == 1 else f"{mode.value}_{name}"

    columns = ["mu"] + [column(mode, n) for mode in modes for n in SWEEP_LEVELS]
    rows: List[Dict[str, Any]] = []
    for mu in mus:
        row: Dict[str, Any] = {"mu": mu}
        for mode in modes:
            for n in SWEEP_LEVELS:
                row[column(mode, n)] = table.select(mode=mode, n=n, mu=mu)[0].energy
        rows.append(row)
    out = _out(cfg, "sweep_mu.csv")
    count = write_csv(out, columns, rows)
    click.secho(f"Wrote {count} rows to {out}", fg="green", bold=True)


@cli.command()
@shared_options
@click.option("--n", type=int, help="Radial quantum number of the state.")
@click.option("--mus", type=str, help="Comma-separated mu values, one density column each.")
@click.option("--r-min", "r_min", type=float, help="Smallest radius (bohr).")
@click.option("--r-max", "r_max", type=float, help="Largest radius (bohr).")
@click.option("--node-count", "node_count", type=int, help="Quadrature nodes for normalization.")
@click.option("--scheme", type=click.Choice(["gauss-legendre", "adaptive"]), help="Quadrature scheme.")
@exit_codes
def wavefunction(**flags):
    """Radial probability densities for several Dunkl parameters."""
    cfg = _configure(flags)
    if cfg.mode == "all":
        raise ConfigurationError("wavefunction needs a single mode")
    p, mode = cfg.molecular(), cfg.modes()[0]
    mus = cfg.mus if cfg.mus is not None else list(DENSITY_MUS)
    r_min = cfg.r_min if cfg.r_min is not None else WAVEFUNCTION_R_MIN_FACTOR * p.r_e
    r_max = cfg.r_max if cfg.r_max is not None else p.r_e + QUADRATURE_R_MAX_SPAN / p.lambda_
    r = np.linspace(r_min, r_max, WAVEFUNCTION_POINTS)
    quad = QuadratureSpec(node_count=cfg.node_count, scheme=cfg.scheme)
    q = QuantumNumbers(n=cfg.n, ell=cfg.ell)

    columns, densities = ["r"], {}
    for mu in mus:
        d = cfg.dunkl().model_copy(update={"mu": mu})
        name = f"density_mu{_mu_label(mu)}"
        if mode == SpectrumMode.ORACLE:
            problem = OracleProblem.default(p, d, points=cfg.points, C=cfg.pekeris())
            result = fd_eigensolve(problem, cfg.n + 1, with_vectors=True, check_order=False)
            # u^2 integrates to one under dr; R^2 = u^2 / r^(2mu+1) is renormalized
            density = result.vectors[:, cfg.n] ** 2
            if not cfg.weighted:
                density = density / result.r ** (2.0 * mu + 1.0)
                density = density / trapezoid(density, result.r)
            densities[name] = np.interp(r, result.r, density, left=0.0, right=0.0)
        else:
            st = normalize(
                radial_state(
                    q, p, d, mode, cfg.pekeris(), cfg.coefficient_set, cfg.alpha9_source
                ),
                quad,
                weight_exponent=None if cfg.weighted else 0.0,
            )
            densities[name] = probability_density(st, r)
        columns.append(name)

    out = _out(cfg, "wavefunction.csv")
    rows = ({"r": value, **{k: v[i] for k, v in densities.items()}} for i, value in enumerate(r))
    count = write_csv(out, columns, rows)
    click.secho(f"Wrote {count} rows to {out}", fg="green", bold=True)


@cli.command()
@shared_options
@click.option("--node-count", "node_count", type=int, help="Quadrature nodes for normalization.")
@click.option("--scheme", type=click.Choice(["gauss-legendre", "adaptive"]), help="Quadrature scheme.")
@exit_codes
def validate(**flags):
    """Run the acceptance suite and write the discrepancy ledger and report."""
    cfg = _configure(flags)
    harness = ValidationHarness(
        HarnessConfig(
            p=cfg.molecular(),
            convention=cfg.convention,
            C=cfg.pekeris(),
            coefficient_set=cfg.coefficient_set,
            alpha9_source=cfg.alpha9_source,
            points=cfg.points,
            node_count=cfg.node_count,
            scheme=cfg.scheme,
        )
    )
    final = harness.run()

    out = Path(_out(cfg, "validation.csv"))
    write_csv(str(out), DISCREPANCY_COLUMNS, final.get("discrepancy_rows", []))
    write_csv(
        str(out.with_name(f"{out.stem}_pekeris.csv")),
        PEKERIS_COLUMNS,
        final.get("pekeris_rows", []),
    )
    write_csv(
        str(out.with_name(f"{out.stem}_convergence.csv")),
        CONVERGENCE_COLUMNS,
        final.get("convergence_rows", []),
    )
    accepted = bool(final.get("finalized_state", False))
    report_path = out.with_name(f"{out.stem}_report.txt")
    write_report(str(report_path), final.get("criteria", []), accepted)

    for criterion in final.get("criteria", []):
        if criterion["hard"] and not criterion["passed"]:
            click.secho(f"FAILED {criterion['key']}: {criterion['detail']}", fg="red", bold=True)
    if not accepted:
        click.secho(f"Validation rejected, see {report_path}", fg="red", bold=True)
        raise SystemExit(1)
    click.secho(f"Validation accepted, report in {report_path}", fg="green", bold=True)


if __name__ == "__main__":
    cli()
