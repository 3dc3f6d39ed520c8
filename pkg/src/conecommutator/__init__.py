"""Optimal constants for the Laplace-Leray commutator on planar cones.

For a cone of opening ``sigma`` and weight exponent ``alpha`` the package
evaluates the per-frequency constants in closed form, recovers them from the
explicit extremal profiles and from a brute-force Galerkin maximisation, and
takes the supremum over frequency.
"""

from .errors import (
    ConeError,
    DenominatorNearZero,
    EnergyFormSingular,
    InvalidParameters,
    NeumannDegenerate,
    NonRealResult,
    ResonantMode,
    SigmaOnCotPole,
    SingularPoint,
)
from .extremal import (
    BoundaryAmplitudes,
    ExtremalSolution,
    Parity,
    amplitudes_from_boundary,
    beta_from_coefficients,
    ipk_value,
    pressure_mode,
    solve_coefficients,
)
from .modes import (
    beta_limit_k0,
    beta_limit_kinf,
    beta_modes_alpha0,
    beta_modes_complex,
    beta_modes_real,
    blowup_distance,
    dbeta_plus_dalpha_at0,
    omega,
)
from .oracle import AngularBasis, OracleResult, QuadraticFormPair, assemble_forms, build_basis, oracle_beta, solve_rayleigh_max
from .params import ConeParams, ModeBetas, ModePoint, Status
from .sup import (
    Attainment,
    ScanRow,
    SingularityReport,
    SmallAlphaClass,
    SupConfig,
    SupResult,
    alpha_scan,
    beta_sup,
    classify_small_alpha,
    critical_sigma,
    singular_alphas,
)
from .verify import run_verification

__version__ = "0.1.0"
