"""Tests for the Jacobi polynomials, the quadrature and the radial states."""

import math

import numpy as np
import pytest
from pydantic import ValidationError
from scipy.special import eval_jacobi

from dunkl_deng_fan.errors import DomainError, NoBoundStateError
from dunkl_deng_fan.model.params import DunklParams, QuantumNumbers
from dunkl_deng_fan.nu_engine.AlphaChain import Alpha9Source
from dunkl_deng_fan.nu_engine.table import SpectrumMode
from dunkl_deng_fan.wavefunction.jacobi import (
    jacobi,
    jacobi_orthogonality_residual,
    jacobi_roots_in_s,
)
from dunkl_deng_fan.wavefunction.quadrature import (
    QuadratureScheme,
    QuadratureSpec,
    integrate,
)
from dunkl_deng_fan.wavefunction.RadialState import (
    node_count,
    normalize,
    probability_density,
    radial_state,
    radial_unnormalized,
)

X = np.linspace(-1.0, 1.0, 41)


@pytest.mark.parametrize("a,b", [(0.0, 0.0), (0.5, -0.5), (2.3, 7.1), (-0.9, 3.0)])
@pytest.mark.parametrize("n", range(7))
def test_jacobi_against_scipy(n, a, b):
    expected = eval_jacobi(n, a, b, X)
    scale = np.max(np.abs(expected))
    np.testing.assert_allclose(jacobi(n, a, b, X), expected, rtol=1e-10, atol=1e-12 * scale)


def test_jacobi_low_degrees():
    assert jacobi(0, 1.0, 2.0, 0.3) == 1.0
    assert jacobi(1, 1.0, 2.0, 0.3) == pytest.approx(0.5 * (1.0 - 2.0 + 5.0 * 0.3))
    assert isinstance(jacobi(2, 0.0, 0.0, 0.5), float)


def test_jacobi_domain():
    with pytest.raises(DomainError):
        jacobi(-1, 0.0, 0.0, 0.0)
    with pytest.raises(DomainError):
        jacobi(2, -1.0, 0.0, 0.0)


@pytest.mark.parametrize("a,b", [(0.0, 0.0), (3.0, 1.5), (20.0, 9.0)])
def test_jacobi_orthogonality(a, b):
    for m in range(6):
        for n in range(m + 1, 6):
            assert jacobi_orthogonality_residual(m, n, a, b) < 1e-10
    assert jacobi_orthogonality_residual(3, 3, a, b) == pytest.approx(1.0)


def test_jacobi_roots_in_s():
    roots = jacobi_roots_in_s(3, 0.0, 0.0)
    x = math.sqrt(0.6)
    np.testing.assert_allclose(roots, [0.5 * (1 - x), 0.5, 0.5 * (1 + x)], atol=1e-12)
    assert jacobi_roots_in_s(0, 1.0, 1.0) == []
    assert len(jacobi_roots_in_s(4, 40.0, 12.0)) == 4


@pytest.mark.parametrize("scheme", list(QuadratureScheme))
def test_integrate(scheme):
    spec = QuadratureSpec(node_count=1024, scheme=scheme)
    assert integrate(np.exp, 0.0, 1.0, spec) == pytest.approx(math.e - 1.0, rel=1e-12)
    value = integrate(lambda r: r**4 * np.exp(-r), 0.0, 60.0, spec)
    assert value == pytest.approx(24.0, rel=1e-10)


def test_quadrature_spec_validation():
    with pytest.raises(ValidationError):
        QuadratureSpec(node_count=16)
    with pytest.raises(ValidationError):
        QuadratureSpec(r_max=-1.0)


def test_verbatim_state_exponents(section_iv, ground):
    st = radial_state(QuantumNumbers(n=0, ell=0), section_iv, ground)
    assert st.exp_s == 119.5
    assert st.exp_1ms == pytest.approx(math.sqrt(120.25))
    assert st.jacobi_a == 239.0
    assert st.jacobi_b == pytest.approx(2.0 * math.sqrt(120.25))
    assert st.eps == -14280.25
    assert st.norm == 1.0


def test_self_consistent_state_exponents(section_iv, ground):
    st = radial_state(
        QuantumNumbers(n=0, ell=0), section_iv, ground, SpectrumMode.SELF_CONSISTENT
    )
    assert st.exp_s == pytest.approx(math.sqrt(-st.eps), rel=1e-12)
    assert st.mode == SpectrumMode.SELF_CONSISTENT


def test_state_errors(section_iv, ground):
    with pytest.raises(ValueError):
        radial_state(QuantumNumbers(n=0, ell=0), section_iv, ground, SpectrumMode.ORACLE)
    for mode in (SpectrumMode.PAPER_VERBATIM, SpectrumMode.SELF_CONSISTENT):
        with pytest.raises(NoBoundStateError):
            radial_state(
                QuantumNumbers(n=0, ell=0),
                section_iv,
                ground,
                mode,
                alpha9_source=Alpha9Source.CHAIN,
            )
    # numerator of the closed form is negative from n = 10 on
    with pytest.raises(NoBoundStateError):
        radial_state(QuantumNumbers(n=10, ell=0), section_iv, ground)


def test_radial_function_limits(section_iv, ground):
    st = radial_state(QuantumNumbers(n=1, ell=0), section_iv, ground)
    assert radial_unnormalized(st, 0.0) == 0.0
    assert radial_unnormalized(st, 50.0) == 0.0
    with pytest.raises(DomainError):
        radial_unnormalized(st, -1.0)


@pytest.mark.parametrize("mode", [SpectrumMode.PAPER_VERBATIM, SpectrumMode.SELF_CONSISTENT])
@pytest.mark.parametrize("mu,ell", [(0.0, 0), (0.5, 1), (1.0, 2)])
def test_normalization(section_iv, mode, mu, ell):
    st = radial_state(QuantumNumbers(n=1, ell=ell), section_iv, DunklParams(mu=mu, ell=ell), mode)
    quad = QuadratureSpec()
    normalized = normalize(st, quad)
    assert normalized.weight_exponent == 2.0 * mu + 1.0
    assert normalized.r_max >= st.default_r_max()
    integral = integrate(
        lambda r: probability_density(normalized, r), 0.0, normalized.r_max, quad
    )
    assert integral == pytest.approx(1.0, abs=1e-8)
    doubled = normalize(st, QuadratureSpec(node_count=2 * quad.node_count))
    assert doubled.norm == pytest.approx(normalized.norm, rel=1e-8)
    assert normalize(normalized, quad).norm == normalized.norm
    assert st.norm == 1.0


def test_unweighted_normalization(section_iv, ground):
    st = normalize(radial_state(QuantumNumbers(n=0, ell=0), section_iv, ground), weight_exponent=0.0)
    integral = integrate(
        lambda r: probability_density(st, r, weighted=False), 0.0, st.r_max, QuadratureSpec()
    )
    assert integral == pytest.approx(1.0, abs=1e-8)


def test_density_follows_normalization_measure(section_iv):
    q, d = QuantumNumbers(n=0, ell=0), DunklParams(mu=1.5)
    st = normalize(radial_state(q, section_iv, d), weight_exponent=0.0)
    integral = integrate(
        lambda r: probability_density(st, r), 0.0, st.r_max, QuadratureSpec()
    )
    assert integral == pytest.approx(1.0, abs=1e-8)
    r = np.array([0.5, 1.0, 2.0])
    np.testing.assert_allclose(probability_density(st, r), probability_density(st, r, weighted=False))
    np.testing.assert_allclose(
        probability_density(st, r, weighted=True), probability_density(st, r, weighted=False) * r**4
    )
    unnormalized = radial_state(q, section_iv, d)
    np.testing.assert_allclose(
        probability_density(unnormalized, r), probability_density(unnormalized, r, weighted=True)
    )


def test_adaptive_agrees_with_gauss_legendre(section_iv, ground):
    st = radial_state(
        QuantumNumbers(n=1, ell=0), section_iv, ground, SpectrumMode.SELF_CONSISTENT
    )
    gl = normalize(st, QuadratureSpec())
    adaptive = normalize(st, QuadratureSpec(scheme=QuadratureScheme.ADAPTIVE))
    assert adaptive.norm == pytest.approx(gl.norm, rel=1e-7)


@pytest.mark.parametrize("mode", [SpectrumMode.PAPER_VERBATIM, SpectrumMode.SELF_CONSISTENT])
@pytest.mark.parametrize("n", [0, 1, 2])
def test_node_count(section_iv, ground, mode, n):
    st = radial_state(QuantumNumbers(n=n, ell=0), section_iv, ground, mode)
    assert node_count(st) == n
    assert len(jacobi_roots_in_s(st.n, st.jacobi_a, st.jacobi_b)) == n


def test_ground_state_densities_move_outward(section_iv):
    r = np.linspace(1e-3, 81.0, 40001)
    peaks, origin = [], []
    for mu in (0.0, 1.5, 3.0):
        st = normalize(radial_state(QuantumNumbers(n=0, ell=0), section_iv, DunklParams(mu=mu)))
        peaks.append(r[np.argmax(probability_density(st, r))])
        origin.append(probability_density(st, 1e-3))
    assert 0.15 < peaks[0] < 0.22
    assert peaks[0] < peaks[1] < peaks[2]
    assert origin[0] > origin[1] > origin[2]
