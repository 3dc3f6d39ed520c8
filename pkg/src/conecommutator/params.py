"""Parameter and result containers shared by all modules."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import InvalidParameters

#: Denominators with modulus below this raise instead of returning huge floats.
EPS_SING = 1e-9
#: Below this k the closed forms lose digits to the 0/0 at k = 0.
K_SMALL = 1e-6

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class ConeParams:
    """Cone opening ``sigma`` (radians) and weight exponent ``alpha``."""

    sigma: float
    alpha: float

    def __post_init__(self) -> None:
        s, a = float(self.sigma), float(self.alpha)
        if not (math.isfinite(s) and math.isfinite(a)):
            raise InvalidParameters(f"non-finite parameters sigma={s!r}, alpha={a!r}")
        if not 0.0 < s < TWO_PI:
            raise InvalidParameters(f"sigma must lie in (0, 2*pi), got {s!r}")
        if a == 1.0:
            raise InvalidParameters("alpha = 1 is excluded")
        object.__setattr__(self, "sigma", s)
        object.__setattr__(self, "alpha", a)

    @classmethod
    def from_pi(cls, sigma_over_pi: float, alpha: float) -> ConeParams:
        return cls(sigma_over_pi * math.pi, alpha)


@dataclass(frozen=True)
class ModePoint:
    """A cone together with one Mellin frequency ``k``."""

    params: ConeParams
    k: float

    def __post_init__(self) -> None:
        k = float(self.k)
        if not math.isfinite(k):
            raise InvalidParameters(f"k must be finite, got {k!r}")
        object.__setattr__(self, "k", k)

    @classmethod
    def of(cls, sigma: float, alpha: float, k: float) -> ModePoint:
        return cls(ConeParams(sigma, alpha), k)

    @property
    def sigma(self) -> float:
        return self.params.sigma

    @property
    def alpha(self) -> float:
        return self.params.alpha


class Status(str, enum.Enum):
    FINITE = "finite"
    DIVERGENT = "divergent"


@dataclass(frozen=True)
class ModeBetas:
    """The two per-mode constants.

    ``beta_plus`` belongs to the even reflection parity, boundary amplitudes
    (1, 1); ``beta_minus`` to the odd parity (1, -1).  Divergent values are
    stored as ``math.inf`` and flagged through ``status``; callers should test
    ``status`` rather than do arithmetic on them.
    """

    beta_plus: float
    beta_minus: float
    status: Status = Status.FINITE

    @property
    def finite(self) -> bool:
        return self.status is Status.FINITE

    @property
    def max(self) -> float:
        return max(self.beta_plus, self.beta_minus)

    @classmethod
    def divergent(cls) -> ModeBetas:
        return cls(math.inf, math.inf, Status.DIVERGENT)
