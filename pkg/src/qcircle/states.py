"""Truncated Fourier-mode states on the circle and the operators J, U, U^dagger.

A state is stored by its coefficients ``c_j`` in the angular-momentum
eigenbasis ``e_j(phi) = exp(i j phi)`` with ``j = k + lam`` for integer
``k`` in a finite window ``[k_min, k_max]``.  With the normalized scalar
product ``<f, g> = (1/2pi) int conj(f) g dphi`` the basis is orthonormal,
so inner products reduce to coefficient sums.

States are immutable; every operation returns a new state.
"""

from dataclasses import dataclass

import numpy as np

from .params import LambdaCase

__all__ = [
    "LambdaCase",
    "ModeState",
    "basis_state",
    "apply_J",
    "apply_U",
    "apply_U_dagger",
    "apply_Z",
    "inner_product",
    "norm",
    "wavefunction_at",
    "evolve_phase",
]


@dataclass(frozen=True, eq=False)
class ModeState:
    case: LambdaCase
    k_min: int
    coeffs: np.ndarray

    def __post_init__(self):
        coeffs = np.array(self.coeffs, dtype=complex, copy=True).reshape(-1)
        if coeffs.size == 0:
            raise ValueError("a ModeState needs at least one mode")
        coeffs.setflags(write=False)
        object.__setattr__(self, "case", LambdaCase.parse(self.case))
        object.__setattr__(self, "k_min", int(self.k_min))
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def k_max(self) -> int:
        return self.k_min + self.coeffs.size - 1

    @property
    def ks(self) -> np.ndarray:
        return np.arange(self.k_min, self.k_max + 1)

    @property
    def js(self) -> np.ndarray:
        """Angular momentum eigenvalues j = k + lam of the window."""
        return self.ks + self.case.lam

    def coefficient(self, k: int) -> complex:
        """Coefficient of mode ``j = k + lam``; zero outside the window."""
        if self.k_min <= k <= self.k_max:
            return complex(self.coeffs[k - self.k_min])
        return 0j

    def on_window(self, k_min: int, k_max: int) -> np.ndarray:
        """Coefficients on ``[k_min, k_max]``, zero-padded or cut as needed."""
        out = np.zeros(k_max - k_min + 1, dtype=complex)
        lo, hi = max(k_min, self.k_min), min(k_max, self.k_max)
        if lo <= hi:
            out[lo - k_min : hi - k_min + 1] = self.coeffs[lo - self.k_min : hi - self.k_min + 1]
        return out

    def with_coeffs(self, coeffs) -> "ModeState":
        return ModeState(self.case, self.k_min, coeffs)


def basis_state(case, k: int) -> ModeState:
    """The eigenvector e_j with j = k + lam."""
    return ModeState(case, k, [1.0])


def apply_J(s: ModeState) -> ModeState:
    return s.with_coeffs(s.js * s.coeffs)


def apply_U(s: ModeState) -> ModeState:
    """Raise every mode by one, U e_j = e_{j+1}.

    The window moves up with the coefficients, so the result is exact and
    nothing is clipped or wrapped.
    """
    return ModeState(s.case, s.k_min + 1, s.coeffs)


def apply_U_dagger(s: ModeState) -> ModeState:
    return ModeState(s.case, s.k_min - 1, s.coeffs)


def apply_Z(s: ModeState) -> ModeState:
    """Z = exp(-J + 1/2) U, the operator whose eigenvectors are coherent states."""
    raised = apply_U(s)
    return raised.with_coeffs(np.exp(-raised.js + 0.5) * raised.coeffs)


def _check_case(a: ModeState, b: ModeState):
    if a.case is not b.case:
        raise ValueError(f"cannot combine {a.case.name} and {b.case.name} states")


def inner_product(a: ModeState, b: ModeState) -> complex:
    """<a, b> = sum_j conj(a_j) b_j over the union of both windows."""
    _check_case(a, b)
    lo, hi = min(a.k_min, b.k_min), max(a.k_max, b.k_max)
    return complex(np.vdot(a.on_window(lo, hi), b.on_window(lo, hi)))


def norm(s: ModeState) -> float:
    return float(np.sqrt(np.sum(np.abs(s.coeffs) ** 2)))


def wavefunction_at(s: ModeState, phi):
    """Fourier synthesis sum_j c_j exp(i j phi); ``phi`` scalar or array."""
    phi_arr = np.asarray(phi, dtype=float)
    values = np.exp(1j * np.multiply.outer(phi_arr, s.js)) @ s.coeffs
    if values.ndim == 0:
        return complex(values)
    return values


def evolve_phase(s: ModeState, t: float) -> ModeState:
    """Free evolution exp(-i t J^2 / 2): c_j -> exp(-i j^2 t / 2) c_j."""
    js = s.js
    return s.with_coeffs(np.exp(-0.5j * js * js * t) * s.coeffs)
