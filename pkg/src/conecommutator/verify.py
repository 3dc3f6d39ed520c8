"""Seeded self-check: closed forms against each other, the extremal path,
and the brute-force oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .extremal import mode_beta
from .modes import beta_modes_complex, blowup_distance, real_form_arrays
from .oracle import oracle_beta
from .params import ModePoint

DEFAULT_SEED = 20240611
DEFAULT_CASES = 100

CROSS_RTOL = 1e-9
ORACLE_ATOL = 1e-6  # scaled by (1 + beta)
ORACLE_MODES = 48

RealForm = Callable[[float, float, float], tuple[float, float]]


@dataclass(frozen=True)
class Check:
    name: str
    worst: float
    bound: float
    where: tuple[float, float, float] | None

    @property
    def passed(self) -> bool:
        return self.worst <= self.bound


@dataclass
class VerificationReport:
    seed: int
    n_cases: int
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def render(self) -> str:
        lines = [f"verify seed={self.seed} cases={self.n_cases}"]
        for c in self.checks:
            at = "" if c.where is None else " at sigma/pi=%.6f alpha=%.6f k=%.6f" % (c.where[0] / math.pi, *c.where[1:])
            verdict = "PASS" if c.passed else "FAIL"
            lines.append(f"{verdict} {c.name}: worst {c.worst:.3e} (bound {c.bound:.1e}){at}")
        lines.append("all checks passed" if self.passed else "verification FAILED")
        return "\n".join(lines)


def sample_points(
    rng: np.random.Generator,
    n: int,
    *,
    k_range: tuple[float, float] = (0.05, 20.0),
    min_gap: float = 1e-3,
) -> list[tuple[float, float, float]]:
    """Random ``(sigma, alpha, k)`` kept at least ``min_gap`` away from the blowup set."""
    out: list[tuple[float, float, float]] = []
    while len(out) < n:
        sigma = rng.uniform(0.05, 1.95) * math.pi
        alpha = rng.uniform(-1.0, 0.95)
        k = math.exp(rng.uniform(math.log(k_range[0]), math.log(k_range[1])))
        if blowup_distance(sigma, alpha) < min_gap:
            continue
        out.append((sigma, alpha, k))
    return out


def _default_real_form(sigma: float, alpha: float, k: float) -> tuple[float, float]:
    p, m = real_form_arrays(sigma, alpha, k)
    return float(p), float(m)


def _rel(a: float, b: float) -> float:
    return abs(a - b) / max(abs(a), abs(b), 1e-300)


def _worst(name: str, bound: float, samples) -> Check:
    worst, where = 0.0, None
    for value, point in samples:
        if not value <= worst:  # catches nan as a failure too
            worst, where = value, point
            if math.isnan(value):
                worst = math.inf
    return Check(name, worst, bound, where)


def run_verification(
    seed: int = DEFAULT_SEED,
    n_cases: int = DEFAULT_CASES,
    *,
    real_form: RealForm | None = None,
    n_modes: int = ORACLE_MODES,
) -> VerificationReport:
    """Run all three suites on ``n_cases`` points drawn from ``seed``.

    ``real_form`` replaces the hyperbolic form under test; it exists so a
    deliberately broken formula can be shown to be caught.
    """
    real_form = real_form or _default_real_form
    rng = np.random.default_rng(seed)
    points = sample_points(rng, n_cases)
    cross, path, orc = [], [], []
    for sigma, alpha, k in points:
        mp = ModePoint.of(sigma, alpha, k)
        cx = beta_modes_complex(mp)
        rp, rm = real_form(sigma, alpha, k)
        ep, em = mode_beta(mp)
        cross.append((max(_rel(cx.beta_plus, rp), _rel(cx.beta_minus, rm)), (sigma, alpha, k)))
        path.append((max(_rel(ep, rp), _rel(em, rm)), (sigma, alpha, k)))
        closed = max(rp, rm)
        gap = abs(oracle_beta(mp, n_modes) - closed) / (1.0 + abs(closed))
        orc.append((gap, (sigma, alpha, k)))
    report = VerificationReport(seed, n_cases)
    report.checks.append(_worst("complex vs hyperbolic form (rel)", CROSS_RTOL, cross))
    report.checks.append(_worst("extremal path vs hyperbolic form (rel)", CROSS_RTOL, path))
    report.checks.append(_worst("oracle vs closed form (abs/(1+beta))", ORACLE_ATOL, orc))
    return report
