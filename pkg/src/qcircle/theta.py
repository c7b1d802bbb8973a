"""Jacobi theta functions theta_2 and theta_3 by truncated lattice sums.

Conventions follow the nome form

    theta_3(v|tau) = sum_n q^(n^2) exp(2 pi i n v)
    theta_2(v|tau) = sum_n q^((n - 1/2)^2) exp(i pi v (2n - 1))

with q = exp(i pi tau) and Im(tau) > 0.  The number of retained terms is
chosen from an analytic bound on the discarded tail, so the absolute
truncation error is below the requested tolerance.  Terms are summed in
symmetric pairs, which makes both functions exactly even in ``v``.

``v`` may be a scalar or a numpy array; ``tau`` is a scalar.
"""

from dataclasses import dataclass
from typing import Union

import numpy as np

__all__ = [
    "ThetaArgs",
    "theta2",
    "theta3",
    "truncation_order",
    "DEFAULT_TOL",
    "MAX_ORDER",
]

DEFAULT_TOL = 1e-14
MAX_ORDER = 100_000

ArrayLike = Union[complex, float, np.ndarray]


@dataclass(frozen=True)
class ThetaArgs:
    """Arguments of a theta function evaluation.

    Parameters
    ----------
    v : complex or ndarray
        Theta argument.  Arrays are evaluated elementwise.
    tau : complex
        Modular parameter, ``Im(tau) > 0``.
    tol : float
        Absolute bound on the discarded tail of the series.
    """

    v: ArrayLike
    tau: complex
    tol: float = DEFAULT_TOL

    def __post_init__(self):
        tau = complex(self.tau)
        if not np.isfinite(tau.real) or not np.isfinite(tau.imag):
            raise ValueError(f"tau must be finite, got {self.tau!r}")
        if tau.imag <= 0.0:
            raise ValueError(f"tau {tau} is not in the upper half-plane")
        if not (np.isfinite(self.tol) and self.tol > 0.0):
            raise ValueError(f"tol must be a positive finite number, got {self.tol!r}")
        v = np.asarray(self.v, dtype=complex)
        if not np.all(np.isfinite(v)):
            raise ValueError("v must be finite")
        object.__setattr__(self, "tau", tau)


def _log_tail_bound(n: int, log_q: float, growth: float) -> float:
    """log of 2 * |q|^((n - 1/2)^2) * exp(growth * n)."""
    return np.log(2.0) + (n - 0.5) ** 2 * log_q + growth * n


def truncation_order(tau: complex, v: ArrayLike, tol: float) -> int:
    """Smallest ``N`` whose discarded tail is provably below ``tol``.

    The bound used is ``2 * sum_{n > N} |q|^((n-1/2)^2) exp(2 pi n |Im v|)``,
    which dominates the tail of both theta_2 and theta_3 as summed here.
    The summand is log-concave in ``n``, so once consecutive terms shrink
    the rest of the tail is bounded by a geometric series.

    Raises
    ------
    ValueError
        If ``Im(tau) <= 0``, ``tol <= 0``, or no ``N <= MAX_ORDER`` works.
    """
    tau = complex(tau)
    if tau.imag <= 0.0:
        raise ValueError(f"tau {tau} is not in the upper half-plane")
    if not tol > 0.0:
        raise ValueError(f"tol must be positive, got {tol!r}")
    log_q = -np.pi * tau.imag
    im_v = float(np.max(np.abs(np.imag(np.asarray(v, dtype=complex))), initial=0.0))
    growth = 2.0 * np.pi * im_v
    log_tol = np.log(tol)

    for n in range(MAX_ORDER + 1):
        first = _log_tail_bound(n + 1, log_q, growth)
        log_ratio = _log_tail_bound(n + 2, log_q, growth) - first
        if log_ratio >= 0.0:
            continue
        if first - np.log1p(-np.exp(log_ratio)) < log_tol:
            return n
    raise ValueError(
        f"no truncation order up to {MAX_ORDER} reaches tol={tol} "
        f"(|Im v|={im_v} too large for Im tau={tau.imag})"
    )


def _finish(total: np.ndarray):
    if not np.all(np.isfinite(total)):
        raise OverflowError("theta series produced a non-finite value")
    if total.ndim == 0:
        return complex(total)
    return total


def theta3(args: ThetaArgs):
    """theta_3(v|tau) as a complex scalar, or an array matching ``v``.

    >>> round(theta3(ThetaArgs(0.0, 1j / np.pi)).real, 4)
    1.7726
    """
    v = np.asarray(args.v, dtype=complex)
    n_max = truncation_order(args.tau, v, args.tol)
    itau = 1j * np.pi * args.tau
    total = np.ones_like(v)
    for n in range(1, n_max + 1):
        # one exp per term: split factors overflow when |Im v| is large
        e_q, e_v = itau * n * n, 2j * np.pi * n * v
        total = total + (np.exp(e_q + e_v) + np.exp(e_q - e_v))
    return _finish(total)


def theta2(args: ThetaArgs):
    """theta_2(v|tau), summed over the pairs n and 1 - n for n = 1..N."""
    v = np.asarray(args.v, dtype=complex)
    n_max = truncation_order(args.tau, v, args.tol)
    itau = 1j * np.pi * args.tau
    total = np.zeros_like(v)
    for n in range(1, n_max + 1):
        m = n - 0.5
        e_q, e_v = itau * m * m, 2j * np.pi * m * v
        total = total + (np.exp(e_q + e_v) + np.exp(e_q - e_v))
    return _finish(total)
