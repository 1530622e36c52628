"""Spectra of the linearized operators and the companion-solution constant."""

import math
from dataclasses import replace

import numpy as np
import pytest

from cqnls import fourier, hill, waves
from cqnls.errors import (
    ConfigError,
    ContractError,
    DegenerateError,
    NumericError,
)
from cqnls.hill import HillOperatorSpec

from conftest import TWO_PI
from oracles import companion_by_ivp

# leading eigenvalues at (L, omega, N) = (2 pi, 2, 256), frozen
L1_LOW = [-11.391713037069591, 0.0, 2.143311806416148, 3.882714, 4.089495]
L2_LOW = [0.0, 2.4159414434692192, 2.692481, 5.265804]


def test_sym_eig_known_matrix():
    evals, evecs = hill.sym_eig([[2.0, 1.0], [1.0, 2.0]])
    assert evals == pytest.approx([1.0, 3.0], abs=1e-14)
    assert np.allclose(np.abs(evecs[:, 0]), [math.sqrt(0.5)] * 2, atol=1e-14)


def test_sym_eig_random_matrix():
    rng = np.random.default_rng(5)
    a = rng.standard_normal((40, 40))
    mat = 0.5 * (a + a.T)
    evals, evecs = hill.sym_eig(mat)
    assert np.all(np.diff(evals) >= 0)
    assert np.max(np.abs(evecs @ np.diag(evals) @ evecs.T - mat)) <= 1e-12 * 40


def test_sym_eig_rejects_bad_input():
    with pytest.raises(ContractError):
        hill.sym_eig([[0.0, 1.0], [0.0, 0.0]])
    with pytest.raises(ConfigError):
        hill.sym_eig(np.zeros((3, 2)))


def test_potential_values(ref_wave):
    wp, prof = ref_wave
    phi2 = prof.phi ** 2
    v1 = hill.potential_values(HillOperatorSpec("L1", wp, prof))
    v2 = hill.potential_values(HillOperatorSpec("L2", wp, prof))
    assert np.allclose(v1, wp.omega - 3.0 * phi2 - 5.0 * phi2 ** 2,
                       rtol=0, atol=1e-13)
    assert np.allclose(v2, wp.omega - phi2 - phi2 ** 2, rtol=0, atol=1e-13)
    with pytest.raises(ConfigError):
        hill.potential_values(HillOperatorSpec("L3", wp, prof))


def test_collocation_matrix_structure(ref_wave):
    wp, prof = ref_wave
    spec = HillOperatorSpec("L2", wp, prof)
    mat = hill.collocation_matrix(spec)
    assert np.array_equal(mat, mat.T)
    ref = -fourier.second_derivative_matrix(prof.L, prof.N)
    off = mat - np.diag(hill.potential_values(spec))
    assert np.array_equal(off, ref)


def test_constant_potential_shifts_spectrum():
    N, L, c = 32, TWO_PI, 1.7
    base = -fourier.second_derivative_matrix(L, N)
    shifted, _ = hill.sym_eig(base + c * np.eye(N))
    plain, _ = hill.sym_eig(base)
    assert np.max(np.abs(shifted - (plain + c))) <= 1e-10


def test_amplitude_channel_structure(ref_spectra):
    r1, _ = ref_spectra
    assert r1.kind == "L1"
    assert r1.n_negative == 1
    assert r1.zero_index == 1
    assert r1.zero_match_error <= 1e-10
    for frozen, got in zip(L1_LOW, r1.eigenvalues):
        assert got == pytest.approx(frozen, rel=1e-6, abs=1e-9)
    assert r1.eigenvalues[0] == pytest.approx(L1_LOW[0], rel=1e-12)
    assert r1.eigenvalues[2] == pytest.approx(L1_LOW[2], rel=1e-11)
    # even nodeless ground state; odd kernel with exactly two sign changes
    assert r1.parity[0] == "even"
    assert r1.parity[1] == "odd"
    assert hill.sign_changes(r1.eigenvectors[:, 0]) == 0
    assert hill.sign_changes(r1.eigenvectors[:, 1]) == 2


def test_phase_channel_structure(ref_spectra):
    _, r2 = ref_spectra
    assert r2.kind == "L2"
    assert r2.n_negative == 0
    assert r2.zero_index == 0
    assert r2.zero_match_error <= 1e-10
    for frozen, got in zip(L2_LOW, r2.eigenvalues):
        assert got == pytest.approx(frozen, rel=1e-6, abs=1e-9)
    assert r2.eigenvalues[1] == pytest.approx(L2_LOW[1], rel=1e-11)
    # ground state is the positive profile itself
    assert r2.parity[0] == "even"
    vec = r2.eigenvectors[:, 0]
    assert np.all(vec > 0) or np.all(vec < 0)
    # the rest of the spectrum stays bounded away from zero
    assert r2.eigenvalues[1] > 1e-3 * r2.wp.omega


def test_spectra_parity_is_pure(ref_spectra):
    for rep in ref_spectra:
        assert set(rep.parity) <= {"even", "odd"}
        # the reflection splits N grid points into N/2 + 1 even and
        # N/2 - 1 odd basis functions
        N = rep.eigenvectors.shape[0]
        assert rep.parity.count("even") == N // 2 + 1
        assert rep.parity.count("odd") == N // 2 - 1


def test_oscillation_counts_phase_channel(ref_spectra):
    _, r2 = ref_spectra
    for j in range(7):
        expected = 2 * ((j + 1) // 2)
        assert hill.sign_changes(r2.eigenvectors[:, j]) == expected


def test_eigenvectors_orthonormal_under_trapezoid(ref_spectra):
    r1, _ = ref_spectra
    L = r1.wp.L
    v = r1.eigenvectors
    for i, j in ((0, 0), (3, 3), (0, 2), (1, 4)):
        inner = fourier.trapezoid(v[:, i] * v[:, j], L)
        assert inner == pytest.approx(1.0 if i == j else 0.0, abs=1e-9)


def test_zero_tolerance_override(ref_wave):
    wp, prof = ref_wave
    rep = hill.spectrum_report(HillOperatorSpec("L1", wp, prof),
                               tol_zero=1e-15)
    # the discrete kernel eigenvalue is ~1e-13, outside this tolerance
    assert rep.zero_index is None
    assert math.isnan(rep.zero_match_error)
    assert rep.n_negative == 2


def test_combined_counts(ref_spectra):
    r1, r2 = ref_spectra
    counts = hill.combined_counts(r1, r2)
    assert counts.n_negative == 1
    assert counts.zero_multiplicity == 2
    assert counts.n_negative_even == 1
    assert counts.zero_multiplicity_even == 1


def test_combined_counts_contract_errors(ref_spectra):
    r1, r2 = ref_spectra
    with pytest.raises(ContractError):
        hill.combined_counts(r2, r1)
    other = waves.build_wave(TWO_PI, 1.0, 256)
    r2_other = hill.spectrum_report(HillOperatorSpec("L2", *other))
    with pytest.raises(ContractError):
        hill.combined_counts(r1, r2_other)


def test_spectrum_stability_under_refinement():
    coarse_wave = waves.build_wave(TWO_PI, 2.0, 128)
    fine_wave = waves.build_wave(TWO_PI, 2.0, 256)
    for kind in ("L1", "L2"):
        coarse = hill.spectrum_report(HillOperatorSpec(kind, *coarse_wave))
        fine = hill.spectrum_report(HillOperatorSpec(kind, *fine_wave))
        diff = np.abs(coarse.eigenvalues[:5] - fine.eigenvalues[:5])
        assert np.max(diff) <= 1e-8


def test_sign_changes_counter():
    assert hill.sign_changes([1.0, 1.0, 1.0]) == 0
    assert hill.sign_changes([1.0, -1.0, 1.0, -1.0]) == 4
    x = np.sin(2.0 * np.pi * np.arange(64) / 64)
    assert hill.sign_changes(x) == 2
    # near-zero samples do not flip the count
    assert hill.sign_changes([1.0, 1e-12, -1.0, 1.0]) == 2


def test_theta_reference_value(ref_wave):
    wp, prof = ref_wave
    theta = hill.theta_constant(wp, prof)
    assert theta == pytest.approx(-271.3542123500556, rel=1e-9)
    assert theta < 0.0


def test_theta_against_adaptive_oracle(ref_wave):
    wp, prof = ref_wave

    def potential(x):
        p2 = waves.profile_value(wp, x) ** 2
        return wp.omega - 3.0 * p2 - 5.0 * p2 * p2

    phi0 = math.sqrt(wp.alpha3)
    _, z_end = companion_by_ivp(wp.omega, wp.L, phi0, potential)
    ddphi0 = wp.omega * phi0 - phi0 ** 3 - phi0 ** 5
    assert hill.theta_constant(wp, prof) == pytest.approx(
        z_end / ddphi0, rel=1e-8)


def test_theta_slope_identity(ref_wave):
    # dT/dB = -theta/2 at the reference wave
    wp, prof = ref_wave
    theta = hill.theta_constant(wp, prof)
    hB = min(1e-6, 0.1 * abs(wp.B))
    slope = (waves.period_of_B(wp.B + hB, wp.omega)
             - waves.period_of_B(wp.B - hB, wp.omega)) / (2.0 * hB)
    assert abs(slope + 0.5 * theta) <= 1e-6 * abs(theta)


def test_theta_config_and_contract_errors(ref_wave):
    wp, prof = ref_wave
    with pytest.raises(ConfigError):
        hill.theta_constant(wp, prof, dt=wp.L / 100.0)
    with pytest.raises(ConfigError):
        hill.theta_constant(wp, prof, dt=-1.0)
    tampered = waves.Profile(L=prof.L, N=prof.N, x=prof.x,
                             phi=prof.phi * 1.01, dphi=prof.dphi)
    with pytest.raises(ContractError):
        hill.theta_constant(wp, tampered)


def test_theta_rejects_equilibrium(ref_wave):
    wp, prof = ref_wave
    lo, _ = waves.alpha_bounds(wp.omega)
    flat = replace(wp, alpha3=lo)
    phi = prof.phi.copy()
    phi[0] = math.sqrt(lo)
    fake = waves.Profile(L=prof.L, N=prof.N, x=prof.x, phi=phi,
                         dphi=prof.dphi)
    with pytest.raises(DegenerateError):
        hill.theta_constant(flat, fake)
