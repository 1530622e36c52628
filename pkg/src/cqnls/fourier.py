"""Fourier pseudospectral utilities on uniform periodic grids.

All routines assume N equispaced samples x_j = j L / N of an L-periodic
function (right endpoint excluded).  Differentiation acts by multiplying
Fourier coefficients by (i k)^order; the dense second-derivative matrix
uses the closed-form entries of trigonometric interpolation (Trefethen,
Spectral Methods in MATLAB, ch. 3) and is exactly symmetric.
"""

from __future__ import annotations

import numpy as np

from .errors import ConfigError

__all__ = [
    "grid",
    "wavenumbers",
    "spectral_derivative",
    "second_derivative_matrix",
    "trapezoid",
]


def grid(L: float, N: int) -> np.ndarray:
    """Uniform periodic grid x_j = j L / N, j = 0 .. N-1."""
    return (L / N) * np.arange(N)


def wavenumbers(L: float, N: int) -> np.ndarray:
    """Signed wavenumbers 2 pi j / L in FFT ordering."""
    return 2.0 * np.pi * np.fft.fftfreq(N, d=L / N)


def spectral_derivative(values, L: float, order: int = 1) -> np.ndarray:
    """Differentiate periodic samples through the FFT.

    Real input stays real (rfft path).  For odd orders on an even grid the
    Nyquist mode is zeroed: its sawtooth derivative is not representable.
    """
    v = np.asarray(values)
    N = v.shape[-1]
    if np.isrealobj(v):
        k = 2.0 * np.pi * np.fft.rfftfreq(N, d=L / N)
        mult = (1j * k) ** order
        if order % 2 == 1 and N % 2 == 0:
            mult[-1] = 0.0
        return np.fft.irfft(np.fft.rfft(v) * mult, n=N)
    k = wavenumbers(L, N)
    mult = (1j * k) ** order
    if order % 2 == 1 and N % 2 == 0:
        mult[N // 2] = 0.0
    return np.fft.ifft(np.fft.fft(v) * mult)


def second_derivative_matrix(L: float, N: int) -> np.ndarray:
    """Dense spectral second-derivative matrix (exactly symmetric).

    Eigenvalues are -(2 pi j / L)^2, each nonzero one doubled; for L = 2 pi
    they are {0, -1, -1, -4, -4, ..., -(N/2)^2}.
    """
    if N % 2 != 0 or N <= 0:
        raise ConfigError(f"differentiation matrix needs even positive N, got {N}")
    h = 2.0 * np.pi / N
    d = np.arange(N)[:, None] - np.arange(N)[None, :]
    out = np.empty((N, N))
    off = d != 0
    # sin is odd and (-1)^d even in d, so (i, j) and (j, i) round identically
    out[off] = -((-1.0) ** d[off]) / (2.0 * np.sin(0.5 * h * d[off]) ** 2)
    out[~off] = -np.pi**2 / (3.0 * h**2) - 1.0 / 6.0
    return (2.0 * np.pi / L) ** 2 * out


def trapezoid(values, L: float) -> float | complex:
    """Periodic trapezoid rule h * sum(values), spectrally accurate for smooth data."""
    v = np.asarray(values)
    total = v.sum(axis=-1) * (L / v.shape[-1])
    return complex(total) if np.iscomplexobj(v) else float(total)
