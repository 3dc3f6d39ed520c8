"""Closed-form per-mode constants and their limits.

Conventions
-----------
``beta_plus`` is always the even-parity branch, boundary amplitudes
``(alpha_+, alpha_-) = (1, 1)``, and ``beta_minus`` the odd branch ``(1, -1)``.
In the complex quotient form the even branch is the one whose denominator is
``1 - exp(-(k - i alpha) sigma)``; in the hyperbolic form it is the one with
``cosh(k sigma) - cos(alpha sigma)``.  With this labelling the even branch
tends to 1 as ``k -> 0`` when ``alpha = 0`` and ``sigma != pi``.

All hyperbolic quantities are carried pre-multiplied by ``exp(-|k| sigma)``
(or its square/cube), so nothing overflows for large ``k`` and the functions
are exactly even in ``k``.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from .errors import DenominatorNearZero, InvalidParameters, SigmaOnCotPole
from .params import EPS_SING, TWO_PI, ConeParams, ModeBetas, ModePoint, Status

__all__ = [
    "omega",
    "beta_modes_complex",
    "beta_modes_real",
    "real_form_arrays",
    "beta_modes_alpha0",
    "beta_limit_k0",
    "beta_limit_kinf",
    "dbeta_plus_dalpha_at0",
    "blowup_distance",
]


def omega(mp: ModePoint) -> complex:
    """``exp(-(k + i alpha) sigma)`` in polar form."""
    return cmath.rect(math.exp(-mp.k * mp.sigma), -mp.alpha * mp.sigma)


def _complex_branch(sigma: float, alpha: float, k: float, parity: int) -> float:
    # parity +1 -> even branch, which takes the minus sign inside the quotient
    e = -float(parity)
    z = math.exp(-k * sigma)
    num = (1.0 - alpha + 1j * k) * (1.0 + e * cmath.rect(z, (2.0 - alpha) * sigma))
    d1 = 1.0 + e * cmath.rect(z, alpha * sigma)
    d2 = 1.0 - cmath.rect(z * z, 2.0 * (1.0 - alpha) * sigma)
    if abs(d1) < EPS_SING or abs(d2) < EPS_SING:
        raise DenominatorNearZero(
            f"|1 {'+' if e > 0 else '-'} w| = {abs(d1):.3g}, |1 - w^2 e^(2i sigma)| = "
            f"{abs(d2):.3g} at sigma={sigma!r}, alpha={alpha!r}, k={k!r}"
        )
    pre = (k * k + alpha * alpha) * (-math.expm1(-2.0 * k * sigma)) / (2.0 * k * k * (1.0 - alpha))
    return pre * (num / (d1 * d2)).real


def beta_modes_complex(mp: ModePoint) -> ModeBetas:
    """Per-mode constants from the complex quotient form (requires ``k > 0``)."""
    if not mp.k > 0.0:
        raise InvalidParameters(f"complex form needs k > 0, got {mp.k!r}")
    s, a, k = mp.sigma, mp.alpha, mp.k
    return ModeBetas(_complex_branch(s, a, k, +1), _complex_branch(s, a, k, -1))


def _scaled_hyperbolics(x):
    ax = np.abs(x)
    z = np.exp(-ax)
    sh = np.sign(x) * (-np.expm1(-2.0 * ax)) / 2.0  # sinh(x) e^-|x|
    ch = (1.0 + z * z) / 2.0  # cosh(x) e^-|x|
    sh2 = np.sign(x) * (-np.expm1(-4.0 * ax)) / 2.0  # sinh(2x) e^-2|x|
    em1 = np.expm1(-ax)
    em2 = np.expm1(-2.0 * ax)
    return z, sh, ch, sh2, em1, em2


def real_form_arrays(sigma, alpha, k, *, with_denominators=False):
    """Vectorised hyperbolic form; returns ``(beta_plus, beta_minus)`` arrays.

    No singularity checks are made.  With ``with_denominators=True`` the
    smallest scaled denominator of each branch is returned as well.
    """
    sigma = np.asarray(sigma, dtype=float)
    alpha = np.asarray(alpha, dtype=float)
    k = np.asarray(k, dtype=float)
    x = k * sigma
    z, sh, ch, sh2, em1, em2 = _scaled_hyperbolics(x)
    # phi = (1 - alpha) sigma, reflected about pi for accuracy near sigma = pi
    delta = (np.pi - sigma) + alpha * sigma
    cs, cp, sp = np.cos(sigma), -np.cos(delta), np.sin(delta)
    kk = k * k + alpha * alpha

    # (cosh 2x - cos 2phi) e^-2|x|, written without cancellation
    d2 = em2 * em2 / 2.0 + 2.0 * z * z * sp * sp
    out = []
    dens = []
    for m, half in ((-1.0, np.sin(alpha * sigma / 2.0)), (1.0, np.cos(alpha * sigma / 2.0))):
        # (cosh x + m cos(alpha sigma)) e^-|x|
        d1 = em1 * em1 / 2.0 + 2.0 * z * half * half
        psi1 = kk * sh * (sh2 + m * 2.0 * z * sh * cs * cp)
        psi2 = -k * kk * sh / (1.0 - alpha) * (z * z * 2.0 * sp * cp + m * 2.0 * z * ch * sp * cs)
        out.append((psi1 + psi2) / (2.0 * k * k * d1 * d2))
        dens.append(np.minimum(d1, d2))
    if with_denominators:
        return out[0], out[1], dens[0], dens[1]
    return out[0], out[1]


def beta_modes_real(mp: ModePoint) -> ModeBetas:
    """Per-mode constants from the hyperbolic/trigonometric form (``k != 0``).

    Even in ``k``.  For ``0 < |k| < K_SMALL`` digits are lost to the 0/0
    structure at ``k = 0``; use :func:`beta_limit_k0` there.
    """
    if mp.k == 0.0:
        raise InvalidParameters("hyperbolic form needs k != 0; use beta_limit_k0")
    bp, bm, dp, dm = real_form_arrays(mp.sigma, mp.alpha, mp.k, with_denominators=True)
    if min(float(dp), float(dm)) < EPS_SING:
        raise DenominatorNearZero(
            f"hyperbolic denominator {min(float(dp), float(dm)):.3g} at "
            f"sigma={mp.sigma!r}, alpha={mp.alpha!r}, k={mp.k!r}"
        )
    return ModeBetas(float(bp), float(bm))


def beta_modes_alpha0(sigma: float, k: float) -> ModeBetas:
    """Unweighted (alpha = 0) specialisation, depending on sigma and k only."""
    if not 0.0 < sigma < TWO_PI:
        raise InvalidParameters(f"sigma must lie in (0, 2*pi), got {sigma!r}")
    if k == 0.0:
        raise InvalidParameters("k must be nonzero")
    x = k * sigma
    z, sh, ch, _, _, _ = _scaled_hyperbolics(x)
    s, c = math.sin(sigma), math.cos(sigma)
    # (cosh^2 x - cos^2 sigma) = sinh^2 x + sin^2 sigma, scaled by e^-2|x|
    den = sh * sh + z * z * s * s
    dev = 0.5 * z * (ch * s * s + k * s * c * sh) / den
    return ModeBetas(float(0.5 + dev), float(0.5 - dev))


def blowup_distance(sigma: float, alpha: float) -> float:
    """Distance in alpha to the nearest point with ``alpha*sigma = n*pi`` or
    ``(1 - alpha)*sigma = n*pi``, excluding alpha = 0 and alpha = 1.
    """
    step = math.pi / sigma
    best = math.inf
    for offset in (0.0, 1.0):
        # alpha_n = offset + n*step, with offset 0 (Neumann) or 1 (resonance)
        t = (alpha - offset) / step
        for n in (math.floor(t), math.ceil(t)):
            for cand in (n - 1, n, n + 1):
                value = offset + cand * step
                if abs(value) < 1e-14 or abs(value - 1.0) < 1e-14:
                    continue
                best = min(best, abs(alpha - value))
    return best


def beta_limit_k0(params: ConeParams) -> ModeBetas:
    """Limits of the per-mode constants as k -> 0.

    Reported as divergent when (sigma, alpha) lies within ``EPS_SING`` of the
    blowup set.  The half-angle rewrite keeps full relative accuracy near
    (sigma, alpha) = (pi, 0), where both numerator and denominator vanish.
    """
    s, a = params.sigma, params.alpha
    if blowup_distance(s, a) < EPS_SING:
        return ModeBetas.divergent()
    if a == 0.0 and s == math.pi:
        return ModeBetas(0.5, 0.5)
    # Angles are reflected about pi so that every factor keeps full relative
    # accuracy when sigma ~ pi and alpha ~ 0.
    delta = (math.pi - s) + a * s
    sp = math.sin(delta)  # sin((1 - a) s)
    hs, hc = math.sin(a * s / 2.0), math.cos(a * s / 2.0)
    ts = math.sin(delta - a * s / 2.0)  # sin((2 - a) s / 2)
    tc = -math.cos(delta - a * s / 2.0)  # cos((2 - a) s / 2)
    psi3_plus = 2.0 * s * s * (hs * hs + ts * ts) - 4.0 * s * sp * ts * hs / (1.0 - a)
    psi3_minus = 2.0 * s * s * (hc * hc + tc * tc) - 4.0 * s * sp * tc * hc / (1.0 - a)
    # a^2 / (4 sin^2(a s / 2)) -> 1 / s^2 at a = 0
    ratio_plus = 1.0 / (s * s * np.sinc(a * s / TWO_PI) ** 2)
    plus = ratio_plus * psi3_plus / (2.0 * sp * sp)
    minus = (a / sp) ** 2 * psi3_minus / (8.0 * hc * hc)
    return ModeBetas(float(plus), float(minus), Status.FINITE)


def beta_limit_kinf() -> float:
    """Common limit of both branches as k -> infinity."""
    return 0.5


def dbeta_plus_dalpha_at0(sigma: float) -> float:
    """Alpha-derivative of the even k -> 0 limit at alpha = 0: ``sigma cot sigma - 1``."""
    if not 0.0 < sigma < TWO_PI:
        raise InvalidParameters(f"sigma must lie in (0, 2*pi), got {sigma!r}")
    s = math.sin(sigma)
    if abs(s) < EPS_SING:
        raise SigmaOnCotPole(f"sin(sigma) = {s:.3g}")
    return sigma * math.cos(sigma) / s - 1.0
