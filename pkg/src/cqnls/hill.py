"""Spectra of the linearized operators about a standing wave.

Writing a perturbed standing wave as e^{i omega t}(phi + v + i w) and
linearizing the flow decouples the real and imaginary parts into two
self-adjoint Hill operators on L-periodic functions,

    L1 v = -v'' + (omega - 3 phi^2 - 5 phi^4) v    (amplitude channel),
    L2 w = -w'' + (omega - phi^2 - phi^4) w        (phase channel).

Differentiating the profile equation once shows L1 phi' = 0, and the
profile equation itself says L2 phi = 0, so each operator carries an
explicit kernel element.  Both potentials are even, so eigenvectors split
into even and odd parity classes under the grid reflection
j -> (N - j) mod N, and oscillation theory pins the structure the
stability argument needs: L1 has exactly one negative eigenvalue (even,
nodeless ground state) with zero next, spanned by the odd function phi';
L2 is nonnegative with zero at the bottom, spanned by the positive
function phi.

Discretization is Fourier collocation (exact for trigonometric
polynomials below the Nyquist degree), which makes "zero is an
eigenvalue" sharp to near machine precision.  theta_constant integrates
the companion, linearly growing solution of the amplitude-channel Hill
equation over one period; its growth coefficient theta satisfies
dT/dB = -theta/2, tying the spectrum's zero position to the period's
dependence on the quadrature constant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConfigError, ContractError, DegenerateError, NumericError
from .fourier import second_derivative_matrix
from .waves import Profile, WaveParams, profile_derivative, profile_value

_KINDS = ("L1", "L2")
_SYMMETRY_TOL = 1e-10  # sym_eig rejects matrices less symmetric than this
_RESIDUAL_TOL = 1e-9  # eigenpair residual bound, relative to the spectral radius
_CLUSTER_GAP = 1e-8  # eigenvalue gap below which a parity rotation is applied
_PARITY_DEFECT = 1e-6  # max reflection defect for an even/odd label


@dataclass(frozen=True)
class HillOperatorSpec:
    """One of the two linearized operators, tied to a concrete wave.

    kind is "L1" (amplitude channel, potential omega - 3 phi^2 - 5 phi^4)
    or "L2" (phase channel, potential omega - phi^2 - phi^4).
    """

    kind: str
    wp: WaveParams
    prof: Profile


@dataclass(frozen=True, eq=False)
class SpectrumReport:
    """Full eigendecomposition of one operator with parity bookkeeping.

    eigenvalues are ascending; eigenvector columns are orthonormal in the
    discrete inner product sum_j f_j g_j (L/N).  zero_match_error compares
    the unit-normalized zero eigenvector against the analytic kernel
    element (phi' for L1, phi for L2), ignoring overall sign; it is NaN
    when no eigenvalue falls inside the zero tolerance.
    """

    kind: str
    wp: WaveParams
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    parity: tuple
    n_negative: int
    zero_index: int | None
    zero_match_error: float
    tol_zero: float


@dataclass(frozen=True)
class CombinedCounts:
    """Negative/zero counts of the block-diagonal linearization diag(L1, L2).

    The *_even fields restrict both operators to even grid functions,
    which drops the odd kernel element phi' of L1.
    """

    n_negative: int
    zero_multiplicity: int
    n_negative_even: int
    zero_multiplicity_even: int


def potential_values(spec: HillOperatorSpec) -> np.ndarray:
    """Grid samples of the potential selected by spec.kind."""
    phi2 = spec.prof.phi**2
    if spec.kind == "L1":
        return spec.wp.omega - 3.0 * phi2 - 5.0 * phi2 * phi2
    if spec.kind == "L2":
        return spec.wp.omega - phi2 - phi2 * phi2
    raise ConfigError(f"operator kind must be one of {_KINDS}, got {spec.kind!r}")


def collocation_matrix(spec: HillOperatorSpec) -> np.ndarray:
    """Dense symmetric discretization -D2 + diag(V) on the wave's grid."""
    mat = -second_derivative_matrix(spec.prof.L, spec.prof.N)
    mat[np.diag_indices_from(mat)] += potential_values(spec)
    return mat


def sym_eig(matrix):
    """Full spectrum of a real symmetric matrix.

    Returns (eigenvalues ascending, orthonormal eigenvector columns) and
    enforces a per-pair residual ||M v - lambda v|| <= 1e-9 ||M||.
    """
    mat = np.asarray(matrix, dtype=float)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise ConfigError(f"expected a square matrix, got shape {mat.shape}")
    defect = float(np.max(np.abs(mat - mat.T))) if mat.size else 0.0
    if defect > _SYMMETRY_TOL:
        raise ContractError(
            f"matrix symmetry defect {defect:.3e} exceeds {_SYMMETRY_TOL}"
        )
    evals, evecs = np.linalg.eigh(0.5 * (mat + mat.T))
    scale = max(float(np.max(np.abs(evals))), np.finfo(float).tiny)
    resid = mat @ evecs - evecs * evals
    worst = float(np.max(np.sqrt(np.sum(resid * resid, axis=0))))
    if worst > _RESIDUAL_TOL * scale:
        raise NumericError(
            f"eigenpair residual {worst:.3e} exceeds {_RESIDUAL_TOL} * ||M||"
        )
    return evals, evecs


def _purify_parity(evals, evecs):
    """Rotate near-degenerate eigenpairs into parity eigenvectors, label all.

    The operators commute with the grid reflection, so every eigenspace
    has a parity-pure basis; dense solvers return an arbitrary basis
    inside near-degenerate clusters, repaired here by diagonalizing the
    reflection restricted to each cluster.
    """
    n = evecs.shape[0]
    ref = (-np.arange(n)) % n
    out = evecs.copy()
    labels = []
    i = 0
    count = len(evals)
    while i < count:
        j = i + 1
        while j < count and evals[j] - evals[j - 1] < _CLUSTER_GAP * max(
            1.0, abs(evals[j])
        ):
            j += 1
        if j - i > 1:
            block = out[:, i:j]
            refl = block.T @ block[ref, :]
            _, rot = np.linalg.eigh(0.5 * (refl + refl.T))
            out[:, i:j] = block @ rot
        for c in range(i, j):
            vec = out[:, c]
            rvec = vec[ref]
            if np.linalg.norm(rvec - vec) <= _PARITY_DEFECT:
                labels.append("even")
            elif np.linalg.norm(rvec + vec) <= _PARITY_DEFECT:
                labels.append("odd")
            else:
                labels.append("mixed")
        i = j
    return out, tuple(labels)


def spectrum_report(spec: HillOperatorSpec, tol_zero: float | None = None) -> SpectrumReport:
    """Eigendecomposition with parity labels and zero-eigenvalue bookkeeping.

    Eigenvalues inside (-tol_zero, tol_zero) count as zero; the default
    tolerance 1e-6 max(1, omega) separates spectral discretization error
    from genuine negative modes.
    """
    wp, prof = spec.wp, spec.prof
    if tol_zero is None:
        tol_zero = 1e-6 * max(1.0, wp.omega)
    evals, evecs = sym_eig(collocation_matrix(spec))
    evecs, parity = _purify_parity(evals, evecs)
    gram = evecs.T @ evecs
    ortho = float(np.max(np.abs(gram - np.eye(prof.N))))
    if ortho > 1e-10:
        raise NumericError(f"eigenvector orthonormality defect {ortho:.3e}")

    n_negative = int(np.sum(evals < -tol_zero))
    near = np.flatnonzero(np.abs(evals) <= tol_zero)
    if near.size:
        zero_index = int(near[np.argmin(np.abs(evals[near]))])
        kernel = prof.dphi if spec.kind == "L1" else prof.phi
        khat = kernel / np.linalg.norm(kernel)
        vec = evecs[:, zero_index]
        zero_match = float(
            min(np.linalg.norm(vec - khat), np.linalg.norm(vec + khat))
        )
    else:
        zero_index = None
        zero_match = math.nan

    return SpectrumReport(
        kind=spec.kind,
        wp=wp,
        eigenvalues=evals,
        eigenvectors=evecs * math.sqrt(prof.N / prof.L),
        parity=parity,
        n_negative=n_negative,
        zero_index=zero_index,
        zero_match_error=zero_match,
        tol_zero=tol_zero,
    )


def combined_counts(r1: SpectrumReport, r2: SpectrumReport) -> CombinedCounts:
    """Merge the two channel spectra into full and even-restricted counts."""
    if r1.kind != "L1" or r2.kind != "L2":
        raise ContractError(
            f"expected reports for kinds ('L1', 'L2'), got ({r1.kind!r}, {r2.kind!r})"
        )
    if r1.wp != r2.wp:
        raise ContractError("spectrum reports come from different waves")
    n_negative = r1.n_negative + r2.n_negative
    zero_mult = int(
        np.sum(np.abs(r1.eigenvalues) <= r1.tol_zero)
        + np.sum(np.abs(r2.eigenvalues) <= r2.tol_zero)
    )
    n_neg_even = 0
    zero_even = 0
    for rep in (r1, r2):
        for idx, label in enumerate(rep.parity):
            if label != "even":
                continue
            lam = rep.eigenvalues[idx]
            if lam < -rep.tol_zero:
                n_neg_even += 1
            elif abs(lam) <= rep.tol_zero:
                zero_even += 1
    return CombinedCounts(int(n_negative), zero_mult, n_neg_even, zero_even)


def sign_changes(values, rel_floor: float = 1e-8) -> int:
    """Count sign alternations around the periodic grid, ignoring near-zeros."""
    vals = np.asarray(values, dtype=float)
    keep = vals[np.abs(vals) > rel_floor * np.max(np.abs(vals))]
    if keep.size < 2:
        return 0
    circ = np.append(keep, keep[0])
    return int(np.sum(circ[1:] * circ[:-1] < 0.0))


def theta_constant(wp: WaveParams, prof: Profile, dt: float | None = None) -> float:
    """Growth coefficient of the companion amplitude-channel Hill solution.

    The equation y'' = (omega - 3 phi^2 - 5 phi^4) y has the L-periodic
    solution phi'.  The companion solution fixed by y(0) = -1/phi''(0),
    y'(0) = 0 has unit Wronskian against phi' and returns after one
    period with its slope shifted by a multiple of phi''(0); that
    multiple is theta = y'(L)/phi''(0).  Since phi'(0) = 0 the value
    y(L) equals y(0), so the slope alone carries the growth.

    Classical 4th-order Runge-Kutta, with the potential evaluated
    off-grid through the closed-form profile (no interpolation); the
    unit Wronskian is monitored at every step.
    """
    L = wp.L
    if dt is None:
        dt = L / 1e5
    if not (0.0 < dt <= L / 1e5):
        raise ConfigError(f"integration step dt={dt} must lie in (0, L/1e5]")
    phi0 = math.sqrt(wp.alpha3)
    if abs(prof.phi[0] - phi0) > 1e-8 * max(1.0, phi0):
        raise ContractError("profile does not match the wave parameters at x=0")
    ddphi0 = wp.omega * phi0 - phi0**3 - phi0**5
    if abs(ddphi0) < 1e-12:
        raise DegenerateError(
            "wave is an equilibrium: |phi''(0)| below 1e-12, no growth direction"
        )

    steps = max(int(math.ceil(L / dt - 1e-9)), 1)
    h = L / steps
    xs = np.arange(2 * steps + 1) * (0.5 * h)
    phi2 = profile_value(wp, xs) ** 2
    pot = (wp.omega - 3.0 * phi2 - 5.0 * phi2 * phi2).tolist()

    y = -1.0 / ddphi0
    z = 0.0
    ys = np.empty(steps + 1)
    zs = np.empty(steps + 1)
    ys[0] = y
    zs[0] = z
    for i in range(steps):
        v0 = pot[2 * i]
        vh = pot[2 * i + 1]
        v1 = pot[2 * i + 2]
        k1y = z
        k1z = v0 * y
        k2y = z + 0.5 * h * k1z
        k2z = vh * (y + 0.5 * h * k1y)
        k3y = z + 0.5 * h * k2z
        k3z = vh * (y + 0.5 * h * k2y)
        k4y = z + h * k3z
        k4z = v1 * (y + h * k3y)
        y += (h / 6.0) * (k1y + 2.0 * (k2y + k3y) + k4y)
        z += (h / 6.0) * (k1z + 2.0 * (k2z + k3z) + k4z)
        ys[i + 1] = y
        zs[i + 1] = z

    # W(phi', y) = phi' y' - phi'' y equals 1 at x = 0 by construction;
    # near the solitary limit the companion solution swings through huge
    # values before returning, so the drift is measured against the
    # largest flow magnitude rather than against W itself
    full2 = phi2[::2]
    phif = np.sqrt(full2)
    ddphi = phif * (wp.omega - full2 - full2 * full2)
    dphi = profile_derivative(wp, xs[::2])
    term_a = dphi * zs
    term_b = ddphi * ys
    scale = max(1.0, float(np.max(np.abs(term_a))), float(np.max(np.abs(term_b))))
    drift = float(np.max(np.abs(term_a - term_b - 1.0)))
    if drift > 1e-6 * scale:
        raise NumericError(
            f"Wronskian drift {drift:.3e} exceeds 1e-6 of the flow scale {scale:.3e}"
        )
    return float(zs[-1] / ddphi0)
