"""Parameter types shared by the closed-form and brute-force code paths."""

import enum
import math
from dataclasses import dataclass

TWO_PI = 2.0 * math.pi


class LambdaCase(enum.Enum):
    """Periodicity class of the wavefunctions, f(phi + 2 pi) = exp(2 pi i lam) f(phi).

    BOSON has integer angular momenta (periodic functions), FERMION
    half-integer ones (anti-periodic functions).
    """

    BOSON = 0.0
    FERMION = 0.5

    @property
    def lam(self) -> float:
        return self.value

    @classmethod
    def parse(cls, value) -> "LambdaCase":
        """Accept a LambdaCase, its name ('boson'/'fermion'), or 0 / 0.5."""
        if isinstance(value, cls):
            return value
        if isinstance(value, str):
            try:
                return cls[value.strip().upper()]
            except KeyError:
                raise ValueError(f"unknown case {value!r}; expected 'boson' or 'fermion'") from None
        try:
            return cls(float(value))
        except (TypeError, ValueError):
            raise ValueError(f"lambda must be 0 or 1/2, got {value!r}") from None


@dataclass(frozen=True)
class CoherentParams:
    """Point xi = exp(-l + i alpha) of the cylinder phase space.

    ``l`` plays the role of the classical angular momentum and ``alpha`` of
    the classical angle; ``alpha`` is reduced to [0, 2 pi).
    """

    case: LambdaCase = LambdaCase.BOSON
    l: float = 0.0
    alpha: float = 0.0

    def __post_init__(self):
        case = LambdaCase.parse(self.case)
        l = float(self.l)
        alpha = float(self.alpha)
        if not math.isfinite(l) or not math.isfinite(alpha):
            raise ValueError(f"l and alpha must be finite, got l={self.l!r}, alpha={self.alpha!r}")
        alpha = alpha % TWO_PI
        if alpha >= TWO_PI:  # -tiny % 2pi rounds up to 2pi
            alpha = 0.0
        object.__setattr__(self, "case", case)
        object.__setattr__(self, "l", l)
        object.__setattr__(self, "alpha", alpha)

    @property
    def xi(self) -> complex:
        return complex(math.exp(-self.l) * math.cos(self.alpha), math.exp(-self.l) * math.sin(self.alpha))

    @property
    def lam(self) -> float:
        return self.case.lam
