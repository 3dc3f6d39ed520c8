"""Supremum over frequency, blowup set, critical angle and alpha scans."""

from __future__ import annotations

import enum
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy.optimize import brentq

from .modes import beta_limit_k0, beta_limit_kinf, blowup_distance, real_form_arrays
from .params import ConeParams

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


class Attainment(str, enum.Enum):
    INTERIOR = "interior"
    AT_K0_LIMIT = "at_k0_limit"
    AT_KINF_LIMIT = "at_kinf_limit"
    DIVERGENT = "divergent"


class Cause(str, enum.Enum):
    NEUMANN = "neumann"  # alpha sigma = n pi
    RESONANCE = "resonance"  # (1 - alpha) sigma = n pi


class SmallAlphaClass(str, enum.Enum):
    IMPROVES_RIGHT = "improves_right"
    IMPROVES_LEFT = "improves_left"
    NO_IMPROVEMENT = "no_improvement"


@dataclass(frozen=True)
class SupConfig:
    k_min: float = 1e-3
    k_max: float = 1e3
    n_grid: int = 240
    # golden-section stops once the log-k bracket is this narrow
    refine_tol: float = 1e-10
    singular_tol: float = 1e-6
    # relative slack for preferring a limit over an interior maximum
    tie_rtol: float = 1e-9
    workers: int = 1
    small_alpha_window: float = 0.15
    small_alpha_points: int = 30
    improvement_margin: float = 1e-4

    def grid(self) -> np.ndarray:
        return np.logspace(math.log10(self.k_min), math.log10(self.k_max), self.n_grid)


@dataclass(frozen=True)
class SupResult:
    beta: float
    k_star: float | None
    attainment: Attainment

    @property
    def divergent(self) -> bool:
        return self.attainment is Attainment.DIVERGENT


@dataclass(frozen=True)
class SingularEntry:
    alpha: float
    cause: Cause
    n: int


@dataclass(frozen=True)
class SingularityReport:
    sigma: float
    entries: tuple[SingularEntry, ...]

    @property
    def alphas(self) -> list[float]:
        return [e.alpha for e in self.entries]


@dataclass(frozen=True)
class ScanRow:
    sigma: float
    alpha: float
    beta: float
    log10_beta: float
    k_star: float | None
    status: str


def _mode_max(sigma: float, alpha: float, k):
    plus, minus = real_form_arrays(sigma, alpha, k)
    return np.maximum(plus, minus)


def _golden_max(f, lo: float, hi: float, tol: float) -> tuple[float, float]:
    """Maximise a unimodal ``f`` on ``[lo, hi]``; returns ``(x, f(x))``."""
    a, b = lo, hi
    c = b - INV_PHI * (b - a)
    d = a + INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + INV_PHI * (b - a)
            fd = f(d)
    return (c, fc) if fc >= fd else (d, fd)


def beta_sup(params: ConeParams, cfg: SupConfig | None = None) -> SupResult:
    """``sup_k max(beta_plus, beta_minus)`` including the k -> 0 and k -> inf limits."""
    cfg = cfg or SupConfig()
    s, a = params.sigma, params.alpha
    if blowup_distance(s, a) < cfg.singular_tol:
        return SupResult(math.inf, None, Attainment.DIVERGENT)
    lim0 = beta_limit_k0(params)
    if not lim0.finite:
        return SupResult(math.inf, None, Attainment.DIVERGENT)

    ks = cfg.grid()
    vals = _mode_max(s, a, ks)
    i = int(np.argmax(vals))
    logk = np.log(ks)
    lo, hi = logk[max(i - 1, 0)], logk[min(i + 1, ks.size - 1)]

    def f(t: float) -> float:
        return float(_mode_max(s, a, math.exp(t)))

    t_star, g_star = _golden_max(f, lo, hi, cfg.refine_tol)
    if vals[i] > g_star:
        t_star, g_star = logk[i], float(vals[i])

    k0_val = lim0.max
    kinf_val = beta_limit_kinf()
    best = max(g_star, k0_val, kinf_val)
    slack = cfg.tie_rtol * (1.0 + abs(best))
    if k0_val >= best - slack:
        return SupResult(best, None, Attainment.AT_K0_LIMIT)
    if kinf_val >= best - slack:
        return SupResult(best, None, Attainment.AT_KINF_LIMIT)
    return SupResult(best, math.exp(t_star), Attainment.INTERIOR)


def singular_alphas(sigma: float, alpha_range: tuple[float, float]) -> SingularityReport:
    """All alpha in ``alpha_range`` with ``alpha sigma`` or ``(1 - alpha) sigma``
    an integer multiple of pi, alpha = 0 and alpha = 1 excluded, ascending.
    """
    lo, hi = alpha_range
    if not lo <= hi:
        raise ValueError(f"empty alpha range {alpha_range!r}")
    step = math.pi / sigma
    entries = []
    # Neumann: alpha = n pi / sigma
    for n in range(math.ceil(lo / step), math.floor(hi / step) + 1):
        a = n * step
        if n != 0 and lo <= a <= hi:
            entries.append(SingularEntry(a, Cause.NEUMANN, n))
    # resonance: alpha = 1 - n pi / sigma
    for n in range(math.ceil((1.0 - hi) / step), math.floor((1.0 - lo) / step) + 1):
        a = 1.0 - n * step
        if n != 0 and lo <= a <= hi and abs(a) > 1e-14:
            entries.append(SingularEntry(a, Cause.RESONANCE, n))
    entries.sort(key=lambda e: e.alpha)
    return SingularityReport(sigma, tuple(entries))


def sigma_cot_sigma_minus_one(sigma: float) -> float:
    return sigma * math.cos(sigma) / math.sin(sigma) - 1.0


def critical_sigma(tol: float = 1e-12) -> float:
    """Root of ``sigma cot sigma = 1`` in (pi, 2 pi)."""
    if not tol > 0:
        raise ValueError("tol must be positive")
    # f -> -inf just above pi and +inf just below 2 pi
    lo, hi = math.pi + 1e-3, 2.0 * math.pi - 1e-3
    root = brentq(sigma_cot_sigma_minus_one, lo, hi, xtol=1e-15, rtol=4 * np.finfo(float).eps)
    if abs(sigma_cot_sigma_minus_one(root)) >= tol:
        raise ArithmeticError(f"root residual {sigma_cot_sigma_minus_one(root):.3g} exceeds tol")
    return root


def _scan_one(job: tuple[float, float, SupConfig, bool]) -> ScanRow:
    sigma, alpha, cfg, forced = job
    if forced:
        return ScanRow(sigma, alpha, math.inf, math.inf, None, Attainment.DIVERGENT.value)
    res = beta_sup(ConeParams(sigma, alpha), cfg)
    if res.divergent:
        return ScanRow(sigma, alpha, math.inf, math.inf, None, res.attainment.value)
    return ScanRow(sigma, alpha, res.beta, math.log10(res.beta), res.k_star, res.attainment.value)


def alpha_scan(sigma: float, alphas: Sequence[float], cfg: SupConfig | None = None) -> list[ScanRow]:
    """One row per alpha, in input order.

    Besides rows within ``cfg.singular_tol`` of the blowup set, the row
    nearest to each singular alpha inside the scanned range is flagged as
    divergent, so every spike is visible at the scan's resolution.
    """
    cfg = cfg or SupConfig()
    alphas = [float(a) for a in alphas]
    if any(a == 1.0 for a in alphas):
        raise ValueError("alpha = 1 is excluded")
    forced = [False] * len(alphas)
    if alphas:
        arr = np.asarray(alphas)
        order = np.argsort(arr)
        srt = arr[order]
        for entry in singular_alphas(sigma, (float(srt[0]), float(srt[-1]))).entries:
            pos = int(np.searchsorted(srt, entry.alpha))
            cands = [j for j in (pos - 1, pos) if 0 <= j < srt.size]
            nearest = min(cands, key=lambda j: abs(srt[j] - entry.alpha))
            forced[int(order[nearest])] = True
    jobs = [(sigma, a, cfg, f) for a, f in zip(alphas, forced)]
    if cfg.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            return list(pool.map(_scan_one, jobs, chunksize=16))
    return [_scan_one(job) for job in jobs]


def classify_small_alpha(sigma: float, cfg: SupConfig | None = None) -> SmallAlphaClass:
    """Which side of alpha = 0 brings the optimal constant below one."""
    cfg = cfg or SupConfig()
    if sigma == math.pi:
        raise ValueError("sigma = pi is the half-plane; no corner to classify")
    w, n = cfg.small_alpha_window, cfg.small_alpha_points
    right = np.linspace(w / n, w, n)

    def side_min(alphas) -> float:
        vals = [beta_sup(ConeParams(sigma, float(a)), cfg).beta for a in alphas]
        return min(vals)

    if side_min(right) < 1.0 - cfg.improvement_margin:
        return SmallAlphaClass.IMPROVES_RIGHT
    if side_min(-right) < 1.0 - cfg.improvement_margin:
        return SmallAlphaClass.IMPROVES_LEFT
    return SmallAlphaClass.NO_IMPROVEMENT
