"""Tests for the alpha chain, the closed-form and self-consistent spectra and
the spectrum tables built on them."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dunkl_deng_fan.errors import DomainError, NoBoundStateError
from dunkl_deng_fan.model.params import DunklParams, MolecularParams, QuantumNumbers
from dunkl_deng_fan.nu_engine.AlphaChain import (
    Alpha9Source,
    alpha_chain,
    chain_alpha9,
    closed_form_alpha9,
    quantization_residual,
)
from dunkl_deng_fan.nu_engine.PaperVerbatimSolver import (
    PaperVerbatimSolver,
    closed_form_terms,
    energy_closed_form,
)
from dunkl_deng_fan.nu_engine.SelfConsistentSolver import (
    SelfConsistentSolver,
    energy_self_consistent,
    residual_bracket,
)
from dunkl_deng_fan.nu_engine.SpectrumHelper import (
    SpectrumHelper,
    bound_state_count,
    mu_grid,
    spectrum,
)
from dunkl_deng_fan.nu_engine.table import LevelFlag, SpectrumMode, SpectrumTable
from dunkl_deng_fan.pekeris.mapping import map_to_hypergeometric

# shallow well with two bound closed-form levels at ell = 8
SHALLOW = MolecularParams(D_e=1.0)


def self_consistent_sqrt_alpha8(n: int, b: float = 120.0) -> float:
    """sqrt(alpha8) solving the termination condition at gamma = 0 with alpha9 = 1/4 + beta."""
    root9 = math.sqrt(0.25 + b)
    return (2 * b - n * n - n - 0.5 - (2 * n + 1) * root9) / (2 * root9 - 2 * n - 1)


@settings(max_examples=100)
@given(
    D_e=st.floats(min_value=0.5, max_value=30.0),
    lambda_=st.floats(min_value=0.2, max_value=2.0),
    mu=st.floats(min_value=-0.45, max_value=3.0),
    ell=st.integers(min_value=0, max_value=4),
    eps=st.floats(min_value=-200.0, max_value=200.0),
)
def test_alpha9_does_not_depend_on_energy(D_e, lambda_, mu, ell, eps):
    mc = map_to_hypergeometric(
        MolecularParams(D_e=D_e, lambda_=lambda_), DunklParams(mu=mu, ell=ell)
    )
    assert alpha_chain(mc, eps).alpha9 == pytest.approx(chain_alpha9(mc), abs=1e-9)


def test_chain_alpha9_value(section_iv):
    mc = map_to_hypergeometric(section_iv, DunklParams(mu=0.0, ell=0))
    chain = alpha_chain(mc, -3.0)
    assert chain.alpha4 == 0.0
    assert chain.alpha5 == -0.5
    assert chain.alpha8 == 3.0
    # 1/4 - beta + gamma (C2 - C0), not the asserted 1/4 + beta
    assert chain.alpha9 == pytest.approx(-119.75)
    assert closed_form_alpha9(mc.beta) == 120.25


def test_alpha4_alpha5_follow_mu(section_iv):
    mc = map_to_hypergeometric(section_iv, DunklParams(mu=0.7, ell=0))
    chain = alpha_chain(mc, 0.0)
    assert chain.alpha4 == pytest.approx(0.7)
    assert chain.alpha5 == pytest.approx(-1.2)


def test_residual_domain_errors(section_iv, ground):
    mc = map_to_hypergeometric(section_iv, ground)
    with pytest.raises(DomainError) as info:
        quantization_residual(0, 1.0, mc)
    assert info.value.value == pytest.approx(-1.0)
    with pytest.raises(DomainError):
        quantization_residual(0, -1.0, mc, Alpha9Source.CHAIN)


def test_closed_form_ground_state(section_iv, ground):
    terms = closed_form_terms(QuantumNumbers(n=0, ell=0), section_iv, ground)
    assert terms["numerator"] == 119.5
    assert terms["denominator"] == 1.0
    assert terms["K"] == 119.5
    assert terms["eps"] == -14280.25
    eps, energy, flag = energy_closed_form(QuantumNumbers(n=0, ell=0), section_iv, ground)
    assert energy == -1785.03125
    assert flag == LevelFlag.UNBOUND


def test_closed_form_bound_levels():
    d = DunklParams(mu=0.0, ell=8)
    for n in (0, 1):
        eps, energy, flag = energy_closed_form(QuantumNumbers(n=n, ell=8), SHALLOW, d)
        assert flag == LevelFlag.BOUND
        assert 0.0 <= energy < SHALLOW.D_e
    K = 7.5 / (2.0 * (0.5 + math.sqrt(6.0)))
    eps, _, _ = energy_closed_form(QuantumNumbers(n=0, ell=8), SHALLOW, d)
    assert eps == pytest.approx(6.0 - K**2, rel=1e-14)


def test_quantum_numbers_override_ell(section_iv):
    a = closed_form_terms(QuantumNumbers(n=1, ell=2), section_iv, DunklParams(ell=0))
    b = closed_form_terms(QuantumNumbers(n=1, ell=2), section_iv, DunklParams(ell=2))
    assert a == b


@pytest.mark.parametrize("n", [0, 1, 2])
def test_self_consistent_matches_analytic_root(section_iv, ground, n):
    eps, energy, diagnostics = energy_self_consistent(
        QuantumNumbers(n=n, ell=0), section_iv, ground
    )
    a = self_consistent_sqrt_alpha8(n)
    np.testing.assert_allclose(eps, -(a**2), rtol=1e-10)
    np.testing.assert_allclose(energy, -(a**2) / 8.0, rtol=1e-10)
    assert abs(diagnostics["residual"]) < 1e-9
    np.testing.assert_allclose(diagnostics["sqrt_alpha8"], a, rtol=1e-10)
    assert diagnostics["quadratic_term_gap"] == 2 * n
    lower, upper = diagnostics["bracket"]
    assert lower < eps < upper


@pytest.mark.parametrize("mu", [0.0, 0.5, 1.5, 3.0])
def test_self_consistent_exponent_independent_of_mu(section_iv, mu):
    _, _, diagnostics = energy_self_consistent(
        QuantumNumbers(n=0, ell=0), section_iv, DunklParams(mu=mu)
    )
    np.testing.assert_allclose(
        diagnostics["sqrt_alpha8"], self_consistent_sqrt_alpha8(0), rtol=1e-9
    )


def test_residual_bracket(section_iv, ground):
    mc = map_to_hypergeometric(section_iv, ground)
    lower, upper = residual_bracket(mc)
    assert lower == -120.0
    assert upper == pytest.approx(0.0, abs=1e-13)
    assert upper < 0.0


def test_self_consistent_without_bound_state():
    # a zero-depth well leaves an empty trial-energy bracket
    with pytest.raises(NoBoundStateError):
        energy_self_consistent(
            QuantumNumbers(n=0, ell=0), MolecularParams(D_e=0.0), DunklParams()
        )


def test_chain_alpha9_gives_complex_exponent(section_iv, ground):
    solver = SelfConsistentSolver(section_iv, ground, alpha9_source=Alpha9Source.CHAIN)
    row = solver.level(QuantumNumbers(n=0, ell=0))
    assert row.flag == LevelFlag.COMPLEX_EXPONENT
    assert math.isnan(row.energy)
    assert "alpha9" in row.diagnostics["reason"]


def test_solver_rows(section_iv, ground):
    row = PaperVerbatimSolver(section_iv, ground).level(QuantumNumbers(n=0, ell=0))
    assert row.mode == SpectrumMode.PAPER_VERBATIM
    assert row.energy == -1785.03125
    assert row.flag == LevelFlag.UNBOUND
    assert row.as_record() == {
        "n": 0,
        "ell": 0,
        "mu": 0.0,
        "mode": "paper",
        "eps": -14280.25,
        "E": -1785.03125,
        "flag": "unbound",
    }
    row = SelfConsistentSolver(section_iv, ground).level(QuantumNumbers(n=0, ell=0))
    assert row.mode == SpectrumMode.SELF_CONSISTENT
    assert row.flag == LevelFlag.UNBOUND


def test_spectrum_table_is_sorted(section_iv, ground):
    table = spectrum(
        section_iv,
        ground,
        n_max=2,
        ell_max=1,
        mode=[SpectrumMode.SELF_CONSISTENT, SpectrumMode.PAPER_VERBATIM],
        mus=[0.5, 0.0],
    )
    assert len(table.rows) == 3 * 2 * 2 * 2
    keys = [row.sort_key() for row in table.rows]
    assert keys == sorted(keys)
    assert table.rows[0].mode == SpectrumMode.PAPER_VERBATIM
    assert table.rows[0].mu == 0.0
    assert len(table.select(n=1, ell=1)) == 4
    resorted = SpectrumTable(list(reversed(table.rows)))
    assert [row.sort_key() for row in resorted.rows] == keys


def test_spectrum_rejects_negative_bounds(section_iv, ground):
    with pytest.raises(ValueError):
        SpectrumHelper(section_iv).spectrum(ground, -1, 0)


def test_sweep_mu_energies_increase(section_iv, ground):
    mus = mu_grid(0.0, 3.0, 0.25)
    helper = SpectrumHelper(section_iv)
    for mode in (SpectrumMode.PAPER_VERBATIM, SpectrumMode.SELF_CONSISTENT):
        table = helper.sweep_mu(ground, mus, mode)
        for n in (0, 1, 2):
            energies = [row.energy for row in table.select(n=n)]
            assert len(energies) == 13
            assert np.all(np.diff(energies) > 0)


def test_bound_state_count(section_iv, ground):
    assert bound_state_count(section_iv, ground, require_energy_window=False) == 10
    assert bound_state_count(section_iv, ground) == 0
    assert bound_state_count(SHALLOW, DunklParams(mu=0.0, ell=8)) == 2
    with pytest.raises(ValueError):
        bound_state_count(section_iv, ground, SpectrumMode.ORACLE)


def test_mu_grid():
    grid = mu_grid(0.0, 3.0, 0.25)
    assert len(grid) == 13
    assert grid[0] == 0.0
    assert grid[-1] == 3.0
    with pytest.raises(ValueError):
        mu_grid(0.0, 1.0, 0.0)
    with pytest.raises(ValueError):
        mu_grid(1.0, 0.0, 0.1)


@pytest.mark.parametrize("n", range(6))
def test_closed_form_matches_hand_transcription(section_iv, ground, n):
    # mu = ell = 0: eps = -[(beta - (2n+1)/2 - n(n+1)) / (2n+1)]^2, E = eps lambda^2 / 2m
    b = 2.0 * 15.0 / 0.5**2
    expected = -(((b - (2 * n + 1) / 2 - n * (n + 1)) / (2 * n + 1)) ** 2)
    eps, energy, _ = energy_closed_form(QuantumNumbers(n=n, ell=0), section_iv, ground)
    assert eps == pytest.approx(expected, rel=1e-14)
    assert energy == pytest.approx(expected * 0.5**2 / 2.0, rel=1e-14)


def test_spectrum_is_continuous_at_mu_zero(section_iv, ground):
    helper = SpectrumHelper(section_iv)
    for mode, n_max in ((SpectrumMode.PAPER_VERBATIM, 5), (SpectrumMode.SELF_CONSISTENT, 2)):
        table = helper.spectrum(ground, n_max=n_max, ell_max=2, mode=mode, mus=[0.0, 1e-12])
        at_zero = [row.energy for row in table.rows if row.mu == 0.0]
        nearby = [row.energy for row in table.rows if row.mu == 1e-12]
        assert len(at_zero) == len(nearby) == 3 * (n_max + 1)
        np.testing.assert_allclose(nearby, at_zero, rtol=1e-8)


def test_spectrum_is_deterministic(section_iv, ground):
    def tabulate():
        table = spectrum(
            section_iv,
            ground,
            n_max=3,
            ell_max=2,
            mode=[SpectrumMode.PAPER_VERBATIM, SpectrumMode.SELF_CONSISTENT],
            mus=[0.0, 0.5, 1.0],
        )
        # repr keeps nan comparable
        return [repr(record) for record in table.records()]

    assert tabulate() == tabulate()


@pytest.mark.parametrize("p,ell", [(MolecularParams(), 0), (SHALLOW, 8)])
def test_bound_state_count_does_not_grow_with_mu(p, ell):
    counts = [
        bound_state_count(p, DunklParams(mu=mu, ell=ell), require_energy_window=False)
        for mu in mu_grid(0.0, 3.0, 0.5)
    ]
    assert all(b <= a for a, b in zip(counts[:-1], counts[1:]))
    assert counts[0] > counts[-1]
