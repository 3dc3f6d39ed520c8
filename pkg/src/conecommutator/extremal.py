"""Explicit extremal profiles for one Mellin mode.

The maximiser of the pressure/energy ratio at frequency k has an angular
profile ``y1`` that is a combination of four exponentials.  This module builds
its coefficients for each reflection parity, recovers beta from them, and
exposes the pressure mode ``q_hat`` it induces.  It is a second evaluation
path, structurally independent of :mod:`conecommutator.modes`.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidParameters, NeumannDegenerate, NonRealResult, ResonantMode
from .modes import omega
from .params import EPS_SING, ModePoint

IMAG_RTOL = 1e-10


class Parity(enum.Enum):
    PLUS = "plus"
    MINUS = "minus"

    @property
    def amplitudes(self) -> tuple[complex, complex]:
        return (1.0 + 0j, 1.0 + 0j) if self is Parity.PLUS else (1.0 + 0j, -1.0 + 0j)

    @property
    def sign(self) -> int:
        return 1 if self is Parity.PLUS else -1


@dataclass(frozen=True)
class BoundaryAmplitudes:
    alpha_plus: complex
    alpha_minus: complex


@dataclass(frozen=True)
class ExtremalSolution:
    """Coefficients ``a1..a4`` of the extremal ``y1`` for one parity."""

    a: np.ndarray
    parity: Parity
    beta: float
    mp: ModePoint

    @property
    def amplitudes(self) -> BoundaryAmplitudes:
        return BoundaryAmplitudes(*self.parity.amplitudes)


def _khat(mp: ModePoint) -> complex:
    return complex(mp.k, mp.alpha)


def _common(mp: ModePoint):
    w = omega(mp)
    wb = w.conjugate()
    e2 = cmath.exp(2j * mp.sigma)
    return w, wb, e2


def _phi(mp: ModePoint, parity: Parity) -> complex:
    w, wb, _ = _common(mp)
    k, a = mp.k, mp.alpha
    numer = (k * k + a * a) * (1.0 - abs(w) ** 2) * (1.0 + parity.sign * wb)
    return numer / (8j * k * k * (1.0 - a) * (1.0 - wb * wb))


def _check_resonance(mp: ModePoint) -> None:
    w, _, e2 = _common(mp)
    gap = abs(1.0 - w * w * e2)
    if gap < EPS_SING:
        raise ResonantMode(
            f"|1 - w^2 e^(2i sigma)| = {gap:.3g} at sigma={mp.sigma!r}, "
            f"alpha={mp.alpha!r}, k={mp.k!r}"
        )


def _scaled_coefficients(mp: ModePoint, parity: Parity) -> np.ndarray:
    """Return ``beta * a_j`` for j = 1..4 (the right-hand sides are explicit)."""
    w, wb, e2 = _common(mp)
    phi = _phi(mp, parity)
    r = 1.0 - w * w * e2
    rb = 1.0 - wb * wb / e2
    if parity is Parity.PLUS:
        return np.array(
            [
                -phi * (1.0 - w * e2) / r,
                -phi * (1.0 - w) / r,
                phi * (1.0 - wb / e2) / rb,
                phi * (1.0 - wb) / rb,
            ]
        )
    return np.array(
        [
            -phi * (1.0 + w * e2) / r,
            phi * (1.0 + w) / r,
            -phi * (1.0 + wb / e2) / rb,
            phi * (1.0 + wb) / rb,
        ]
    )


def _slope_weights(mp: ModePoint, parity: Parity) -> np.ndarray:
    """Weights c_j with ``dy1(sigma) -/+ dy1(0) = sum_j a_j c_j``."""
    w, wb, e2 = _common(mp)
    kh = _khat(mp)
    kb = kh.conjugate()
    s = -parity.sign  # plus parity: dy1(sigma) - dy1(0)
    return np.array(
        [
            kh * (1.0 + s * w),
            (2j - kh) * (w * e2 + s),
            -kb * (wb + s),
            (2j + kb) * (1.0 + s * wb / e2),
        ]
    )


def _real_or_raise(value: complex, what: str) -> float:
    if abs(value.imag) > IMAG_RTOL * (1.0 + abs(value.real)):
        raise NonRealResult(f"{what} has imaginary part {value.imag:.3g} (real {value.real:.6g})")
    return float(value.real)


def solve_coefficients(mp: ModePoint, parity: Parity) -> ExtremalSolution:
    """Extremal coefficients for one parity at ``k > 0``.

    ``beta * a_j`` is known in closed form; substituting into the slope
    condition ``dy1(sigma) -/+ dy1(0) = 1 -/+ omega`` fixes beta, after which
    the ``a_j`` themselves follow.
    """
    if not mp.k > 0.0:
        raise InvalidParameters(f"k must be positive, got {mp.k!r}")
    _check_resonance(mp)
    scaled = _scaled_coefficients(mp, parity)
    w = omega(mp)
    target = 1.0 - parity.sign * w
    beta = _real_or_raise(complex(scaled @ _slope_weights(mp, parity)) / target, "beta")
    return ExtremalSolution(a=scaled / beta, parity=parity, beta=beta, mp=mp)


def beta_from_coefficients(sol: ExtremalSolution) -> float:
    """Recover beta from the coefficients through the natural boundary
    condition at ``theta = sigma``.

    Only ``a3`` and ``a4`` enter, since ``L1`` annihilates the other two
    exponentials.
    """
    mp = sol.mp
    k, a = mp.k, mp.alpha
    w = omega(mp)
    wb = w.conjugate()
    ap, am = sol.parity.amplitudes
    rhs = (k * k + a * a) / k * (1.0 - abs(w) ** 2) / (1.0 - wb * wb) * (ap + am * wb)
    lhs = 8.0 * (1.0 - a) * 1j * k * (sol.a[2] * wb + sol.a[3])
    return _real_or_raise(rhs / lhs, "beta")


def beta_closed_display(mp: ModePoint, parity: Parity) -> float:
    """Beta from the simplified closed expression in terms of ``phi``."""
    if not mp.k > 0.0:
        raise InvalidParameters(f"k must be positive, got {mp.k!r}")
    _check_resonance(mp)
    w, wb, e2 = _common(mp)
    kh = _khat(mp)
    kb = kh.conjugate()
    s = -parity.sign  # plus parity pairs with (1 - w), minus with (1 + w)
    first = (1.0 + s * w) * (1.0 + s * w * e2) / (1.0 - w * w * e2) * (2j - 2.0 * kh)
    second = (1.0 + s * wb) * (1.0 + s * wb / e2) / (1.0 - wb * wb / e2) * (2j + 2.0 * kb)
    return _real_or_raise(_phi(mp, parity) / (1.0 + s * w) * (first + second), "beta")


def mode_beta(mp: ModePoint) -> tuple[float, float]:
    """``(beta_plus, beta_minus)`` along the extremal path."""
    return (
        solve_coefficients(mp, Parity.PLUS).beta,
        solve_coefficients(mp, Parity.MINUS).beta,
    )


def _exponents(mp: ModePoint) -> tuple[complex, complex, complex, complex]:
    kh = _khat(mp)
    kb = kh.conjugate()
    return kh, 2j - kh, -kb, kb + 2j


def profile(sol: ExtremalSolution, theta, derivative: int = 0):
    """``y1`` (or its ``derivative``-th theta-derivative) at ``theta``."""
    mp = sol.mp
    theta = np.asarray(theta, dtype=float)
    m1, m2, m3, m4 = _exponents(mp)
    s = mp.sigma
    # shifts keep every exponential bounded by one on [0, sigma]
    terms = (
        (sol.a[0], m1, theta - s),
        (sol.a[1], m2, theta),
        (sol.a[2], m3, theta),
        (sol.a[3], m4, theta - s),
    )
    return sum(c * mu**derivative * np.exp(mu * t) for c, mu, t in terms)


def apply_l1(sol: ExtremalSolution, theta):
    """``L1 y1`` evaluated from the a3, a4 terms only."""
    mp = sol.mp
    theta = np.asarray(theta, dtype=float)
    _, _, m3, m4 = _exponents(mp)
    factor = 4.0 * (1.0 - mp.alpha) * 1j * mp.k
    return factor * (sol.a[2] * np.exp(m3 * theta) + sol.a[3] * np.exp(m4 * (theta - mp.sigma)))


def l_constant(mp: ModePoint) -> complex:
    """Zeroth-order coefficient shared by L1 and L2: ``(ik + 1 - alpha)^2 - 1``."""
    return (1j * mp.k + 1.0 - mp.alpha) ** 2 - 1.0


def boundary_residuals(sol: ExtremalSolution) -> dict[str, float]:
    """Residuals of the no-slip and natural boundary conditions."""
    mp = sol.mp
    k, a = mp.k, mp.alpha
    w = omega(mp)
    wb = w.conjugate()
    ap, am = sol.parity.amplitudes
    y = profile(sol, np.array([0.0, mp.sigma]))
    scale = (k * k + a * a) / k * (1.0 - abs(w) ** 2) / (1.0 - wb * wb)
    lhs = 2.0 * sol.beta * apply_l1(sol, np.array([mp.sigma, 0.0]))
    rhs = scale * np.array([ap + am * wb, ap * wb + am])
    norm = float(np.max(np.abs(sol.a)))
    return {
        "noslip": float(np.max(np.abs(y))) / norm,
        "natural": float(np.max(np.abs(lhs - rhs)) / np.max(np.abs(rhs))),
    }


def amplitudes_from_boundary(g0: complex, gsigma: complex, om: complex) -> BoundaryAmplitudes:
    """Invert ``alpha_+ - alpha_- w = g_sigma``, ``alpha_+ w - alpha_- = g_0``."""
    det = 1.0 - om * om
    if abs(det) <= EPS_SING:
        raise NeumannDegenerate(f"|1 - w^2| = {abs(det):.3g}")
    return BoundaryAmplitudes((gsigma - om * g0) / det, (om * gsigma - g0) / det)


def pressure_mode(amps: BoundaryAmplitudes, mp: ModePoint, theta: float) -> tuple[complex, complex]:
    """``(q_hat, d q_hat / d theta)`` at one angle."""
    if not 0.0 <= theta <= mp.sigma:
        raise InvalidParameters(f"theta must lie in [0, sigma], got {theta!r}")
    kh = _khat(mp)
    up = amps.alpha_plus * cmath.exp(kh * (theta - mp.sigma))
    down = amps.alpha_minus * cmath.exp(-kh * theta)
    return up + down, kh * (up - down)


def ipk_value(amps: BoundaryAmplitudes, mp: ModePoint) -> float:
    """Pressure form ``((k^2 + alpha^2)/k)(|a+|^2 + |a-|^2)(1 - |w|^2)``."""
    k, a = mp.k, mp.alpha
    if k == 0.0:
        raise InvalidParameters("k must be nonzero")
    # 1 - |w|^2 without cancellation at small k
    return (
        (k * k + a * a)
        / k
        * (abs(amps.alpha_plus) ** 2 + abs(amps.alpha_minus) ** 2)
        * -math.expm1(-2.0 * k * mp.sigma)
    )


def rayleigh_quotient(sol: ExtremalSolution, *, reflect: bool = False, nodes: int = 200) -> float:
    """Pressure/energy ratio of the full extremal pair ``(y1, y2)``.

    ``y2(theta) = +/- y1(sigma - theta)`` according to parity.  With
    ``reflect=True`` the roles are exchanged (``theta -> sigma - theta``,
    ``y1 <-> y2``) before evaluating, which must leave the ratio unchanged.
    Energy integrals use Gauss-Legendre quadrature with ``nodes`` points.
    """
    mp = sol.mp
    s = mp.sigma
    sgn = sol.parity.sign

    def y1(t, d=0):
        return profile(sol, t, d)

    def y2(t, d=0):
        return sgn * (-1) ** d * profile(sol, s - t, d)

    def l1y1(t):
        return apply_l1(sol, t)

    def l2y2(t):
        # reflecting theta turns L2 into L1
        return sgn * apply_l1(sol, s - t)

    if reflect:
        # new y1(theta) = old y2(sigma - theta), new y2(theta) = old y1(sigma - theta)
        old_y1, old_y2, old_l1, old_l2 = y1, y2, l1y1, l2y2

        def y1(t, d=0):
            return (-1) ** d * old_y2(s - t, d)

        def y2(t, d=0):
            return (-1) ** d * old_y1(s - t, d)

        def l1y1(t):
            return old_l2(s - t)

        def l2y2(t):
            return old_l1(s - t)

    x, wq = np.polynomial.legendre.leggauss(nodes)
    t = s * (1.0 + x) / 2.0
    wq = wq * s / 2.0
    energy = 2.0 * float(np.sum(wq * (np.abs(l1y1(t)) ** 2 + np.abs(l2y2(t)) ** 2)))
    ends = np.array([0.0, s])
    g = y1(ends, 1) + y2(ends, 1)
    amps = amplitudes_from_boundary(complex(g[0]), complex(g[1]), omega(mp))
    return ipk_value(amps, mp) / energy
