"""Brute-force maximisation of the pressure/energy ratio for one mode.

The no-slip angular profiles ``(y1, y2)`` are expanded in
``theta (sigma - theta) P_m(2 theta / sigma - 1)``, the energy form is
assembled by Gauss-Legendre quadrature with the differential operators
applied exactly to the polynomials, and the pressure form is the rank-two
form that depends only on the boundary slopes ``d(y1 + y2)/d theta`` at
``theta = 0`` and ``theta = sigma``.  The largest eigenvalue of the pencil is
found through the rank-two structure with two linear solves.

Nothing here uses the closed-form constants; it is the independent check.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg
from numpy.polynomial import legendre

from .errors import EnergyFormSingular, InvalidParameters, NeumannDegenerate
from .modes import omega
from .params import EPS_SING, ModePoint

DEFAULT_N_MODES = 32
QUADRATURE_EXTRA = 6


@dataclass(frozen=True)
class AngularBasis:
    """Polynomial basis vanishing at both walls, tabulated at quadrature nodes.

    ``values[d]`` holds the ``d``-th theta-derivative of every basis function
    (columns) at every node (rows); ``end_slopes`` the first derivatives at
    ``theta = 0`` and ``theta = sigma``.
    """

    sigma: float
    n_modes: int
    nodes: np.ndarray
    weights: np.ndarray
    values: np.ndarray
    end_slopes: np.ndarray

    def evaluate(self, coeffs: np.ndarray, theta, derivative: int = 0) -> np.ndarray:
        """Evaluate ``sum_m coeffs[m] * phi_m^(derivative)`` at arbitrary ``theta``."""
        x = 2.0 * np.asarray(theta, dtype=float) / self.sigma - 1.0
        series = _basis_series(self.sigma, self.n_modes)
        out = np.zeros(np.shape(x), dtype=complex)
        for c, ser in zip(coeffs, series):
            out = out + c * legendre.legval(x, legendre.legder(ser, derivative) * (2.0 / self.sigma) ** derivative)
        return out


def _basis_series(sigma: float, n_modes: int) -> list[np.ndarray]:
    # theta (sigma - theta) = sigma^2 (1 - x^2) / 4
    bubble = legendre.poly2leg([1.0, 0.0, -1.0]) * sigma * sigma / 4.0
    series = []
    for m in range(n_modes):
        pm = np.zeros(m + 1)
        pm[m] = 1.0
        series.append(legendre.legmul(bubble, pm))
    return series


def build_basis(sigma: float, n_modes: int = DEFAULT_N_MODES) -> AngularBasis:
    if n_modes < 4:
        raise InvalidParameters(f"need at least 4 basis functions, got {n_modes}")
    x, w = legendre.leggauss(n_modes + QUADRATURE_EXTRA)
    nodes = sigma * (1.0 + x) / 2.0
    weights = w * sigma / 2.0
    values = np.empty((3, x.size, n_modes))
    end_slopes = np.empty((2, n_modes))
    scale = 2.0 / sigma
    for m, ser in enumerate(_basis_series(sigma, n_modes)):
        d1 = legendre.legder(ser) * scale
        d2 = legendre.legder(ser, 2) * scale**2
        values[0, :, m] = legendre.legval(x, ser)
        values[1, :, m] = legendre.legval(x, d1)
        values[2, :, m] = legendre.legval(x, d2)
        end_slopes[:, m] = legendre.legval([-1.0, 1.0], d1)
    return AngularBasis(sigma, n_modes, nodes, weights, values, end_slopes)


@dataclass(frozen=True)
class QuadraticFormPair:
    """Pencil ``(A, B)`` on coefficient vectors ``c = (c_y1, c_y2)``.

    ``A = F^H M F`` where ``F`` maps ``c`` to the wall slopes ``(g0, g_sigma)``
    and ``M`` is the 2x2 pressure form on those slopes.
    """

    A: np.ndarray
    B: np.ndarray
    boundary_map: np.ndarray
    pressure_form: np.ndarray

    @classmethod
    def from_factors(cls, B: np.ndarray, boundary_map: np.ndarray, pressure_form: np.ndarray) -> QuadraticFormPair:
        F = np.asarray(boundary_map, dtype=complex)
        M = np.asarray(pressure_form, dtype=complex)
        return cls(F.conj().T @ M @ F, np.asarray(B, dtype=complex), F, M)


@dataclass(frozen=True)
class OracleResult:
    lambda_max: float
    coeffs: np.ndarray
    residual: float


def _energy_rows(mp: ModePoint, basis: AngularBasis) -> np.ndarray:
    """Square root of the energy form: weighted ``L_j phi_m`` at the nodes."""
    c0 = (1j * mp.k + 1.0 - mp.alpha) ** 2 - 1.0
    v0, v1, v2 = basis.values
    l1 = v2 - 2j * v1 + c0 * v0
    l2 = v2 + 2j * v1 + c0 * v0
    sw = np.sqrt(2.0 * basis.weights)[:, None]
    zero = np.zeros_like(l1)
    return np.block([[sw * l1, zero], [zero, sw * l2]])


def pressure_form(mp: ModePoint) -> np.ndarray:
    """2x2 Hermitian form giving ``I_p`` in terms of ``(g0, g_sigma)``."""
    w = omega(mp)
    det = 1.0 - w * w
    if abs(det) <= EPS_SING:
        raise NeumannDegenerate(f"|1 - w^2| = {abs(det):.3g}")
    # (alpha_+, alpha_-) = T (g0, g_sigma)
    T = np.array([[-w, 1.0], [-1.0, w]]) / det
    k, a = mp.k, mp.alpha
    # (k^2 + a^2)/k (1 - |w|^2) is positive for either sign of k
    scale = (k * k + a * a) / k * (-np.expm1(-2.0 * k * mp.sigma))
    return scale * (T.conj().T @ T)


def assemble_forms(mp: ModePoint, basis: AngularBasis) -> QuadraticFormPair:
    """Pressure and energy forms for the mode ``mp`` (any ``k != 0``)."""
    if mp.k == 0.0:
        raise InvalidParameters("k must be nonzero")
    if abs(mp.sigma - basis.sigma) > 1e-15 * mp.sigma:
        raise InvalidParameters("basis was built for a different sigma")
    G = _energy_rows(mp, basis)
    F = np.hstack([basis.end_slopes, basis.end_slopes]).astype(complex)
    return QuadraticFormPair.from_factors(G.conj().T @ G, F, pressure_form(mp))


def _psd_sqrt(M: np.ndarray) -> np.ndarray:
    vals, vecs = np.linalg.eigh(M)
    return (vecs * np.sqrt(np.clip(vals, 0.0, None))) @ vecs.conj().T


def solve_rayleigh_max(forms: QuadraticFormPair, *, resonance_gap: float | None = None) -> OracleResult:
    """Largest ``lambda`` with ``A c = lambda B c``.

    With ``A = (R F)^H (R F)`` and ``R = M^(1/2)``, solve ``B Z = (R F)^H``
    (two right-hand sides) and take the top eigenpair of the 2x2 matrix
    ``(R F) Z``.
    """
    try:
        chol = scipy.linalg.cho_factor(forms.B)
    except np.linalg.LinAlgError as exc:
        hint = "" if resonance_gap is None else f" (|1 - w^2 e^(2i sigma)| = {resonance_gap:.3g})"
        raise EnergyFormSingular(f"energy form is not positive definite{hint}") from exc
    RF = _psd_sqrt(forms.pressure_form) @ forms.boundary_map
    Z = scipy.linalg.cho_solve(chol, RF.conj().T)
    H = RF @ Z
    H = (H + H.conj().T) / 2.0
    vals, vecs = np.linalg.eigh(H)
    lam = float(vals[-1])
    c = Z @ vecs[:, -1]
    Bc = forms.B @ c
    nb = np.linalg.norm(Bc)
    residual = float(np.linalg.norm(forms.A @ c - lam * Bc) / nb) if nb > 0 else 0.0
    return OracleResult(lam, c, residual)


def oracle_beta(mp: ModePoint, n_modes: int = DEFAULT_N_MODES) -> float:
    """Discrete maximum of ``I_p / I_u`` over ``2 * n_modes`` profile coefficients."""
    basis = build_basis(mp.sigma, n_modes)
    forms = assemble_forms(mp, basis)
    w = omega(mp)
    gap = abs(1.0 - w * w * np.exp(2j * mp.sigma))
    return solve_rayleigh_max(forms, resonance_gap=gap).lambda_max
