"""Brute-force observables from raw Fourier modes.

Everything here is recomputed from the coefficients
c_j = exp(-j^2/2 + j l - i j alpha) on a window of ``n_modes`` modes
centred on ``l``, without touching the theta-function or coherent-state
code.  It exists to cross-check the closed forms, so it favours a wide
window and plain sums over speed.
"""

import numpy as np

from .params import CoherentParams

__all__ = [
    "DEFAULT_N_MODES",
    "oracle_coefficients",
    "oracle_density",
    "oracle_expectation_U",
    "oracle_expectation_J",
    "oracle_overlap",
    "oracle_wavefunction",
]

DEFAULT_N_MODES = 41
MIN_N_MODES = 25


def oracle_coefficients(p: CoherentParams, n_modes: int = DEFAULT_N_MODES):
    """Return ``(js, c)`` for ``n_modes`` consecutive modes around ``l``."""
    if n_modes < MIN_N_MODES:
        raise ValueError(f"n_modes must be >= {MIN_N_MODES}, got {n_modes}")
    k_centre = int(round(p.l - p.case.lam))
    k_lo = k_centre - n_modes // 2
    js = np.arange(k_lo, k_lo + n_modes) + p.case.lam
    c = np.exp(-0.5 * js**2 + js * p.l - 1j * js * p.alpha)
    return js, c


def oracle_wavefunction(p: CoherentParams, phi, t: float = 0.0, n_modes: int = DEFAULT_N_MODES):
    js, c = oracle_coefficients(p, n_modes)
    phases = np.exp(1j * (np.multiply.outer(np.asarray(phi, dtype=float), js) - 0.5 * js**2 * t))
    return phases @ c


def oracle_density(p: CoherentParams, phi, t: float, n_modes: int = DEFAULT_N_MODES):
    js, c = oracle_coefficients(p, n_modes)
    f = oracle_wavefunction(p, phi, t, n_modes)
    return np.abs(f) ** 2 / np.sum(np.abs(c) ** 2)


def oracle_expectation_U(p: CoherentParams, t, n_modes: int = DEFAULT_N_MODES):
    """<f(t), U f(t)> / <f, f> = sum_j conj(c_{j+1}) c_j exp(i (2j+1) t / 2) / sum |c_j|^2."""
    js, c = oracle_coefficients(p, n_modes)
    weights = np.conj(c[1:]) * c[:-1]
    phases = np.exp(0.5j * np.multiply.outer(np.asarray(t, dtype=float), 2 * js[:-1] + 1))
    return phases @ weights / np.sum(np.abs(c) ** 2)


def oracle_expectation_J(p: CoherentParams, n_modes: int = DEFAULT_N_MODES, t: float = 0.0) -> float:
    js, c = oracle_coefficients(p, n_modes)
    c = c * np.exp(-0.5j * js**2 * t)
    w = np.abs(c) ** 2
    return float(np.sum(js * w) / np.sum(w))


def oracle_overlap(p1: CoherentParams, p2: CoherentParams, n_modes: int = DEFAULT_N_MODES) -> complex:
    """sum_j conj(c_j(p1)) c_j(p2) over a window wide enough for both."""
    if p1.case is not p2.case:
        raise ValueError("overlap needs states of the same case")
    centre = 0.5 * (p1.l + p2.l)
    span = int(np.ceil(abs(p1.l - p2.l))) + n_modes
    k_lo = int(round(centre - p1.case.lam)) - span // 2
    js = np.arange(k_lo, k_lo + span) + p1.case.lam

    def coeffs(p):
        return np.exp(-0.5 * js**2 + js * p.l - 1j * js * p.alpha)

    return complex(np.vdot(coeffs(p1), coeffs(p2)))
