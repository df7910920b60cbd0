"""Tests for the command-line front end, its config file and its exit codes."""

import csv

import numpy as np
import pytest
from click.testing import CliRunner
from scipy.integrate import trapezoid

from dunkl_deng_fan.cli.config import RunConfig, build_run_config, load_config
from dunkl_deng_fan.cli.main import cli
from dunkl_deng_fan.cli.writers import format_value, write_csv
from dunkl_deng_fan.errors import ConfigurationError
from dunkl_deng_fan.nu_engine.table import SpectrumMode


@pytest.fixture
def runner():
    return CliRunner()


def read_rows(path):
    with open(path, newline="", encoding="utf-8") as stream:
        return list(csv.reader(stream))


def test_format_value():
    assert format_value(1.0) == "1"
    assert format_value(-1785.03125) == "-1785.03125"
    assert format_value(1.0 / 3.0) == "0.333333333333"
    assert format_value(3) == "3"
    assert format_value(True) == "true"
    assert format_value(SpectrumMode.ORACLE) == "oracle"
    assert format_value(float("nan")) == "nan"


def test_write_csv_uses_line_feeds(tmp_path):
    path = tmp_path / "rows.csv"
    count = write_csv(str(path), ["a", "b"], [{"a": 1, "b": 0.5}, {"a": 2, "b": 0.25}])
    assert count == 2
    assert path.read_bytes() == b"a,b\n1,0.5\n2,0.25\n"


def test_config_precedence(tmp_path):
    path = tmp_path / "run.cfg"
    path.write_text("# well\nde = 10\nlambda = 0.25\nmode = oracle\nn-max = 4\n")
    assert load_config(str(path)) == {
        "de": "10",
        "lambda": "0.25",
        "mode": "oracle",
        "n_max": "4",
    }
    cfg = build_run_config({"mode": "paper", "mu": None}, str(path))
    assert cfg.de == 10.0
    assert cfg.lambda_ == 0.25
    assert cfg.mode == "paper"
    assert cfg.n_max == 4
    assert cfg.mu == 0.0
    assert cfg.molecular().lambda_ == 0.25


def test_config_errors(tmp_path):
    path = tmp_path / "bad.cfg"
    path.write_text("colour = blue\n")
    with pytest.raises(ConfigurationError):
        load_config(str(path))
    path.write_text("de\n")
    with pytest.raises(ConfigurationError):
        load_config(str(path))


def test_run_config_values():
    cfg = RunConfig(mus="0, 1.5,3")
    assert cfg.mus == [0.0, 1.5, 3.0]
    assert RunConfig(mode="all").modes() == list(SpectrumMode)
    with pytest.raises(ValueError):
        RunConfig(mu=-0.7)
    with pytest.raises(ValueError):
        RunConfig(mu_min=2.0, mu_max=1.0)


def test_potential(runner, tmp_path):
    out = tmp_path / "potential.csv"
    result = runner.invoke(cli, ["potential", "--out", str(out)])
    assert result.exit_code == 0, result.output
    rows = read_rows(out)
    assert rows[0] == ["r", "V_deng_fan", "V_morse"]
    assert len(rows) == 1 + 491
    assert ["1", "0", "0"] in rows
    assert rows[1][0] == "0.1"
    assert rows[-1][0] == "5"


def test_spectrum(runner, tmp_path):
    out = tmp_path / "spectrum.csv"
    result = runner.invoke(cli, ["spectrum", "--out", str(out)])
    assert result.exit_code == 0, result.output
    rows = read_rows(out)
    assert rows[0] == ["n", "ell", "mu", "mode", "eps", "E", "flag"]
    assert rows[1] == ["0", "0", "0", "paper", "-14280.25", "-1785.03125", "unbound"]
    assert len(rows) == 4


def test_spectrum_all_modes(runner, tmp_path):
    out = tmp_path / "spectrum.csv"
    result = runner.invoke(
        cli, ["spectrum", "--mode", "all", "--points", "1000", "--out", str(out)]
    )
    assert result.exit_code == 0, result.output
    rows = read_rows(out)[1:]
    assert len(rows) == 9
    assert [row[3] for row in rows[:3]] == ["paper", "self-consistent", "oracle"]
    assert {row[6] for row in rows if row[3] == "oracle"} == {"bound"}


def test_spectrum_from_config(runner, tmp_path):
    config = tmp_path / "run.cfg"
    config.write_text("mode = self-consistent\nn_max = 1\n")
    out = tmp_path / "spectrum.csv"
    result = runner.invoke(cli, ["spectrum", "--config", str(config), "--out", str(out)])
    assert result.exit_code == 0, result.output
    rows = read_rows(out)[1:]
    assert [row[3] for row in rows] == ["self-consistent", "self-consistent"]


def test_sweep_mu(runner, tmp_path):
    out = tmp_path / "sweep.csv"
    result = runner.invoke(cli, ["sweep-mu", "--out", str(out)])
    assert result.exit_code == 0, result.output
    rows = read_rows(out)
    assert rows[0] == ["mu", "E_00", "E_10", "E_20"]
    assert len(rows) == 1 + 13
    assert rows[1][0] == "0"
    assert rows[-1][0] == "3"
    ground = [float(row[1]) for row in rows[1:]]
    assert ground == sorted(ground)


def test_sweep_mu_several_modes(runner, tmp_path):
    out = tmp_path / "sweep.csv"
    result = runner.invoke(
        cli,
        ["sweep-mu", "--mode", "all", "--mus", "0,1", "--points", "1000", "--out", str(out)],
    )
    assert result.exit_code == 0, result.output
    header = read_rows(out)[0]
    assert header[:2] == ["mu", "paper_E_00"]
    assert "oracle_E_20" in header
    assert len(header) == 1 + 9


def test_sweep_mu_needs_two_points(runner, tmp_path):
    result = runner.invoke(
        cli, ["sweep-mu", "--mus", "0.5", "--out", str(tmp_path / "sweep.csv")]
    )
    assert result.exit_code == 2


def test_wavefunction(runner, tmp_path):
    out = tmp_path / "wavefunction.csv"
    result = runner.invoke(cli, ["wavefunction", "--out", str(out)])
    assert result.exit_code == 0, result.output
    rows = read_rows(out)
    assert rows[0] == ["r", "density_mu0", "density_mu1p5", "density_mu3"]
    assert len(rows) == 1 + 8192
    assert all(float(value) >= 0.0 for row in rows[1:] for value in row[1:])


def test_wavefunction_oracle(runner, tmp_path):
    out = tmp_path / "wavefunction.csv"
    result = runner.invoke(
        cli,
        ["wavefunction", "--mode", "oracle", "--mus", "0", "--points", "1000", "--out", str(out)],
    )
    assert result.exit_code == 0, result.output
    assert read_rows(out)[0] == ["r", "density_mu0"]


def integrate_columns(path):
    rows = read_rows(path)
    table = np.array(rows[1:], dtype=float)
    return [trapezoid(table[:, k], table[:, 0]) for k in range(1, table.shape[1])]


@pytest.mark.parametrize("measure", ["--weighted", "--unweighted"])
def test_wavefunction_columns_are_normalized(runner, tmp_path, measure):
    out = tmp_path / "wavefunction.csv"
    result = runner.invoke(cli, ["wavefunction", measure, "--r-max", "10", "--out", str(out)])
    assert result.exit_code == 0, result.output
    for integral in integrate_columns(out):
        assert integral == pytest.approx(1.0, rel=1e-4)


@pytest.mark.parametrize("measure", ["--weighted", "--unweighted"])
def test_oracle_wavefunction_columns_are_normalized(runner, tmp_path, measure):
    out = tmp_path / "wavefunction.csv"
    args = ["wavefunction", "--mode", "oracle", "--mus", "0,1.5", "--points", "2000"]
    result = runner.invoke(cli, args + [measure, "--r-max", "10", "--out", str(out)])
    assert result.exit_code == 0, result.output
    for integral in integrate_columns(out):
        assert integral == pytest.approx(1.0, rel=1e-3)


def test_missing_bound_state_exits_1(runner, tmp_path):
    result = runner.invoke(
        cli, ["wavefunction", "--n", "10", "--out", str(tmp_path / "wavefunction.csv")]
    )
    assert result.exit_code == 1


def test_configuration_errors_exit_2(runner, tmp_path):
    config = tmp_path / "bad.cfg"
    config.write_text("colour = blue\n")
    assert runner.invoke(cli, ["spectrum", "--config", str(config)]).exit_code == 2
    result = runner.invoke(cli, ["spectrum", "--mu", "-0.7", "--out", str(tmp_path / "s.csv")])
    assert result.exit_code == 2


def test_unwritable_output_exits_3(runner, tmp_path):
    out = tmp_path / "missing" / "spectrum.csv"
    assert runner.invoke(cli, ["spectrum", "--out", str(out)]).exit_code == 3


def test_validate_rejects_coarse_grid(runner, tmp_path):
    out = tmp_path / "validation.csv"
    result = runner.invoke(cli, ["validate", "--points", "8", "--out", str(out)])
    assert result.exit_code == 1
    report = (tmp_path / "validation_report.txt").read_text()
    assert "[FAIL] box_sanity" in report
    assert report.endswith("Result: REJECTED\n")


def test_validate_accepts_defaults(runner, tmp_path):
    out = tmp_path / "validation.csv"
    result = runner.invoke(cli, ["validate", "--out", str(out)])
    assert result.exit_code == 0, result.output
    assert len(read_rows(out)) == 1 + 27 * 5
    assert (tmp_path / "validation_pekeris.csv").exists()
    assert (tmp_path / "validation_convergence.csv").exists()
    report = (tmp_path / "validation_report.txt").read_text()
    assert report.endswith("Result: ACCEPTED\n")
