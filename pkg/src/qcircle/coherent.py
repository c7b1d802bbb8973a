"""Coherent states of a particle on a circle.

The (unnormalized) coherent state labelled by xi = exp(-l + i alpha) is

    boson:    f(phi) = theta_3((phi - alpha - i l) / 2pi | i / 2pi)
    fermion:  f(phi) = theta_2((phi - alpha - i l) / 2pi | i / 2pi)

whose Fourier coefficients are c_j = exp(-j^2/2 + j l - i j alpha).
Expectation values always divide by the squared norm, which is the
diagonal of the overlap theta_{3,2}(i l / pi | i / pi).
"""

import math

import numpy as np

from .params import CoherentParams, LambdaCase, TWO_PI
from .states import ModeState, apply_J, apply_U, inner_product
from .theta import DEFAULT_TOL, ThetaArgs, theta2, theta3

__all__ = [
    "CoherentParams",
    "LambdaCase",
    "DEFAULT_HALF_WIDTH",
    "coherent_wavefunction",
    "coherent_modes",
    "overlap",
    "norm_squared",
    "expectation_J",
    "expectation_U",
]

# |c_j| ~ exp(-(j - l)^2 / 2): 12 modes past l leaves a relative tail ~ e^-72.
DEFAULT_HALF_WIDTH = 12

TAU_STATE = 1j / TWO_PI
TAU_OVERLAP = 1j / math.pi


def theta_for(case: LambdaCase):
    """theta_3 for bosons, theta_2 for fermions."""
    return theta3 if LambdaCase.parse(case) is LambdaCase.BOSON else theta2


def coherent_wavefunction(p: CoherentParams, phi, tol: float = DEFAULT_TOL):
    v = (np.asarray(phi, dtype=float) - p.alpha - 1j * p.l) / TWO_PI
    return theta_for(p.case)(ThetaArgs(v, TAU_STATE, tol))


def coherent_modes(p: CoherentParams, half_width: int = DEFAULT_HALF_WIDTH) -> ModeState:
    """Termwise expansion of the coherent state on ``k`` in
    ``[floor(l) - half_width, ceil(l) + half_width]``."""
    k_min = math.floor(p.l) - half_width
    k_max = math.ceil(p.l) + half_width
    js = np.arange(k_min, k_max + 1) + p.lam
    coeffs = np.exp(-0.5 * js * js + js * p.l - 1j * js * p.alpha)
    return ModeState(p.case, k_min, coeffs)


def _check_same_case(p1: CoherentParams, p2: CoherentParams):
    if p1.case is not p2.case:
        raise ValueError(f"overlap between {p1.case.name} and {p2.case.name} states is undefined")


def overlap(p1: CoherentParams, p2: CoherentParams, tol: float = DEFAULT_TOL) -> complex:
    """<f_xi1, f_xi2> in closed form."""
    _check_same_case(p1, p2)
    v = (p1.alpha - p2.alpha) / TWO_PI - 1j * (p1.l + p2.l) / TWO_PI
    return theta_for(p1.case)(ThetaArgs(v, TAU_OVERLAP, tol))


def norm_squared(p: CoherentParams, tol: float = DEFAULT_TOL) -> float:
    """||f_xi||^2 = theta(i l / pi | i / pi); real and positive."""
    return theta_for(p.case)(ThetaArgs(1j * p.l / math.pi, TAU_OVERLAP, tol)).real


def expectation_J(p: CoherentParams) -> float:
    """<J> in the normalized coherent state, summed exactly over modes."""
    s = coherent_modes(p)
    return (inner_product(s, apply_J(s)) / inner_product(s, s)).real


def expectation_U(p: CoherentParams) -> complex:
    """<U> = <f, U f> / <f, f> in mode space."""
    s = coherent_modes(p)
    return inner_product(s, apply_U(s)) / inner_product(s, s).real
