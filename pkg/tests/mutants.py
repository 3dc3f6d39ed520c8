"""Deliberately broken formulas used to show the self-check catches them."""

from __future__ import annotations

import numpy as np

from conecommutator.modes import _scaled_hyperbolics


def real_form_psi2_flipped(sigma: float, alpha: float, k: float) -> tuple[float, float]:
    """Hyperbolic form with the overall sign of psi2 reversed."""
    z, sh, ch, sh2, em1, em2 = _scaled_hyperbolics(k * sigma)
    delta = (np.pi - sigma) + alpha * sigma
    cs, cp, sp = np.cos(sigma), -np.cos(delta), np.sin(delta)
    kk = k * k + alpha * alpha
    d2 = em2 * em2 / 2.0 + 2.0 * z * z * sp * sp
    out = []
    for m, half in ((-1.0, np.sin(alpha * sigma / 2.0)), (1.0, np.cos(alpha * sigma / 2.0))):
        d1 = em1 * em1 / 2.0 + 2.0 * z * half * half
        psi1 = kk * sh * (sh2 + m * 2.0 * z * sh * cs * cp)
        psi2 = +k * kk * sh / (1.0 - alpha) * (z * z * 2.0 * sp * cp + m * 2.0 * z * ch * sp * cs)
        out.append(float((psi1 + psi2) / (2.0 * k * k * d1 * d2)))
    return out[0], out[1]
