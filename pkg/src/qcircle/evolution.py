"""Free time evolution of coherent states and the observables built on it.

Under H = J^2 / 2 the coherent state stays a theta function, with the
modular parameter moving along Re(tau):

    f(phi, t) = theta((phi - alpha - i l) / 2pi | (i - t) / 2pi).

From it follow the probability density, the mean of the sawtooth angle
operator, <U(t)> and its argument (the classical angle), and the
detection of the discontinuities of that argument.
"""

import math
from dataclasses import dataclass
from typing import List, Tuple

import numpy as np
from scipy.optimize import minimize_scalar

from .coherent import TAU_OVERLAP, norm_squared, theta_for
from .params import CoherentParams, LambdaCase, TWO_PI
from .theta import DEFAULT_TOL, ThetaArgs, theta2, theta3

__all__ = [
    "AngleGrid",
    "JumpEvent",
    "AngleUndefinedError",
    "ANGLE_FLOOR",
    "JUMP_THRESHOLD",
    "evolved_wavefunction",
    "probability_density",
    "expectation_U_t",
    "classical_angle",
    "classical_angle_series",
    "expectation_angle_t",
    "find_density_maxima",
    "detect_jumps",
    "time_grid",
    "wrapped_gap",
    "matches_odd_pi_pattern",
]

ANGLE_FLOOR = 1e-12
JUMP_THRESHOLD = 1.0
DEFAULT_DT = 1e-3
BISECTION_TOL = 1e-8
MAXIMA_XTOL = 1e-8


class AngleUndefinedError(ArithmeticError):
    """|<U(t)>| is too small for its argument to mean anything."""


@dataclass(frozen=True)
class AngleGrid:
    """Uniform grid phi_m = 2 pi m / n_points on [0, 2 pi)."""

    n_points: int = 2048

    def __post_init__(self):
        if int(self.n_points) != self.n_points or self.n_points < 8:
            raise ValueError(f"n_points must be an integer >= 8, got {self.n_points!r}")
        object.__setattr__(self, "n_points", int(self.n_points))

    @property
    def spacing(self) -> float:
        return TWO_PI / self.n_points

    @property
    def points(self) -> np.ndarray:
        return self.spacing * np.arange(self.n_points)

    @property
    def midpoints(self) -> np.ndarray:
        return self.spacing * (np.arange(self.n_points) + 0.5)


@dataclass(frozen=True)
class JumpEvent:
    t_star: float
    left_angle: float
    right_angle: float
    gap: float


def wrapped_gap(a, b):
    """Distance between angles on the circle, in [0, pi]."""
    d = np.abs(np.asarray(a) - np.asarray(b)) % TWO_PI
    return np.minimum(d, TWO_PI - d)


def time_grid(t_start: float, t_end: float, dt: float) -> np.ndarray:
    """t_start + k dt for k = 0..floor((t_end - t_start) / dt), end inclusive."""
    if dt <= 0:
        raise ValueError("dt must be positive")
    if t_end < t_start:
        raise ValueError("t_end must not precede t_start")
    n = int(math.floor((t_end - t_start) / dt + 1e-9)) + 1
    return t_start + dt * np.arange(n)


def evolved_wavefunction(p: CoherentParams, phi, t: float, tol: float = DEFAULT_TOL):
    v = (np.asarray(phi, dtype=float) - p.alpha - 1j * p.l) / TWO_PI
    tau = (1j - t) / TWO_PI
    return theta_for(p.case)(ThetaArgs(v, tau, tol))


def probability_density(p: CoherentParams, phi, t: float, tol: float = DEFAULT_TOL):
    """|f(phi, t)|^2 / ||f||^2, normalized so that (1/2pi) int p dphi = 1."""
    f = evolved_wavefunction(p, phi, t, tol)
    dens = np.abs(f) ** 2 / norm_squared(p, tol)
    if np.ndim(dens) == 0:
        return float(dens)
    return dens


def expectation_U_t(p: CoherentParams, t, tol: float = DEFAULT_TOL):
    """<U(t)> in the normalized coherent state, vectorized over ``t``.

    The boson case carries theta_2 / theta_3 and the fermion case
    theta_3 / theta_2, both at tau = i / pi.
    """
    v = np.asarray(t, dtype=float) / TWO_PI - 1j * p.l / math.pi
    if p.case is LambdaCase.BOSON:
        numerator = theta2(ThetaArgs(v, TAU_OVERLAP, tol))
    else:
        numerator = theta3(ThetaArgs(v, TAU_OVERLAP, tol))
    prefactor = math.exp(-0.25) * complex(math.cos(p.alpha), math.sin(p.alpha))
    return prefactor * numerator / norm_squared(p, tol)


def _angle_of(u: np.ndarray) -> np.ndarray:
    angle = np.angle(u) % TWO_PI
    return np.where(angle >= TWO_PI, 0.0, angle)


def classical_angle(p: CoherentParams, t: float, tol: float = DEFAULT_TOL) -> float:
    """Arg <U(t)> reduced to [0, 2 pi).

    Raises
    ------
    AngleUndefinedError
        When ``|<U(t)>| <= ANGLE_FLOOR``.
    """
    u = expectation_U_t(p, float(t), tol)
    if abs(u) <= ANGLE_FLOOR:
        raise AngleUndefinedError(f"|<U(t)>| = {abs(u):.3g} at t = {t}")
    return float(_angle_of(np.asarray(u)))


def classical_angle_series(p: CoherentParams, ts, tol: float = DEFAULT_TOL) -> Tuple[np.ndarray, np.ndarray]:
    """(angle, magnitude) over ``ts``; the angle is NaN where it is undefined."""
    u = np.atleast_1d(expectation_U_t(p, np.asarray(ts, dtype=float), tol))
    mag = np.abs(u)
    angle = np.where(mag > ANGLE_FLOOR, _angle_of(u), np.nan)
    return angle, mag


def expectation_angle_t(p: CoherentParams, t: float, grid: AngleGrid = AngleGrid(), tol: float = DEFAULT_TOL) -> float:
    """<phi_hat(t)> = (1/2pi) int_0^{2pi} phi p(phi, t) dphi by the midpoint rule.

    The sawtooth weight jumps only at 0 = 2 pi, which the midpoints avoid.
    """
    phi = grid.midpoints
    return float(np.mean(phi * probability_density(p, phi, t, tol)))


def find_density_maxima(
    p: CoherentParams, t: float, grid: AngleGrid = AngleGrid(), tol: float = DEFAULT_TOL
) -> List[Tuple[float, float]]:
    """Local maxima of the density as ``(phi, value)``, largest first.

    Grid maxima are located cyclically and each is polished by golden-section
    search on its bracketing triple.  Near-equal maxima are all reported.
    """
    if grid.n_points < 64:
        raise ValueError("find_density_maxima needs at least 64 grid points")
    phi = grid.points
    dens = probability_density(p, phi, t, tol)
    before, after = np.roll(dens, 1), np.roll(dens, -1)
    candidates = np.nonzero((dens >= before) & (dens > after))[0]

    h = grid.spacing

    def neg_density(x):
        return -probability_density(p, x, t, tol)

    maxima = []
    for m in candidates:
        centre = phi[m]
        try:
            res = minimize_scalar(
                neg_density,
                bracket=(centre - h, centre, centre + h),
                method="golden",
                options={"xtol": MAXIMA_XTOL / (abs(centre) + h)},
            )
        except ValueError:
            # flat top: the bracket is not strict, keep the grid point
            maxima.append((float(centre), float(dens[m])))
            continue
        maxima.append((float(res.x) % TWO_PI, float(-res.fun)))
    maxima.sort(key=lambda item: -item[1])
    return maxima


def _bisect_jump(p: CoherentParams, ta: float, tb: float, left: float, right: float, tol: float) -> JumpEvent:
    while tb - ta > BISECTION_TOL:
        tm = 0.5 * (ta + tb)
        try:
            am = classical_angle(p, tm, tol)
        except AngleUndefinedError:
            break
        if wrapped_gap(am, left) <= wrapped_gap(am, right):
            ta, left = tm, am
        else:
            tb, right = tm, am
    return JumpEvent(float(0.5 * (ta + tb)), float(left), float(right), float(wrapped_gap(left, right)))


def detect_jumps(
    p: CoherentParams,
    t_range: Tuple[float, float],
    dt: float = DEFAULT_DT,
    threshold: float = JUMP_THRESHOLD,
    tol: float = DEFAULT_TOL,
) -> List[JumpEvent]:
    """Discontinuities of the classical angle on the half-open ``t_range``.

    The angle is sampled every ``dt``; a wrap-aware change above
    ``threshold`` between neighbouring defined samples marks a jump, whose
    time is then refined by bisection to ``BISECTION_TOL``.
    """
    t0, t1 = t_range
    if dt <= 0:
        raise ValueError("dt must be positive")
    if not t1 > t0:
        raise ValueError("t_range must satisfy t_start < t_end")
    ts = t0 + dt * np.arange(int(math.ceil((t1 - t0) / dt)))
    ts = ts[ts < t1]
    angles, _ = classical_angle_series(p, ts, tol)
    defined = np.nonzero(~np.isnan(angles))[0]

    events = []
    for a, b in zip(defined[:-1], defined[1:]):
        if wrapped_gap(angles[a], angles[b]) > threshold:
            events.append(_bisect_jump(p, ts[a], ts[b], angles[a], angles[b], tol))
    return events


def matches_odd_pi_pattern(events: List[JumpEvent], t_range: Tuple[float, float], atol: float = 1e-6) -> bool:
    """True when the jumps sit exactly at the odd multiples of pi inside ``t_range``."""
    t0, t1 = t_range
    k_lo = math.ceil((t0 / math.pi - 1.0) / 2.0)
    expected = [(2 * k + 1) * math.pi for k in range(k_lo, k_lo + int((t1 - t0) / math.pi) + 2)]
    expected = [t for t in expected if t0 <= t < t1]
    if not expected or len(events) != len(expected):
        return False
    return all(abs(e.t_star - t) <= atol for e, t in zip(sorted(events, key=lambda e: e.t_star), expected))
