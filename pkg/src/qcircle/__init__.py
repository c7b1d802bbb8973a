"""Coherent states, free evolution and quantum jumps of a particle on a circle."""

from .coherent import coherent_modes, coherent_wavefunction, expectation_J, expectation_U, overlap
from .evolution import (
    AngleGrid,
    AngleUndefinedError,
    JumpEvent,
    classical_angle,
    detect_jumps,
    evolved_wavefunction,
    expectation_angle_t,
    expectation_U_t,
    find_density_maxima,
    probability_density,
)
from .params import CoherentParams, LambdaCase
from .states import ModeState
from .theta import ThetaArgs, theta2, theta3

__version__ = "0.1.0"
