"""Command-line entry point.

Exit codes: 0 success, 1 verification failure, 2 invalid parameters,
3 singular point, 4 output I/O failure.
"""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path
from typing import Sequence

import numpy as np

from .errors import InvalidParameters, SingularPoint
from .extremal import mode_beta
from .modes import beta_modes_complex, beta_modes_real
from .oracle import DEFAULT_N_MODES, assemble_forms, build_basis, solve_rayleigh_max
from .params import ConeParams, ModePoint
from .sup import ScanRow, SupConfig, alpha_scan, beta_sup, critical_sigma
from .verify import DEFAULT_CASES, DEFAULT_SEED, run_verification

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_INVALID = 2
EXIT_SINGULAR = 3
EXIT_IO = 4

CSV_HEADER = "sigma,alpha,beta,log10_beta,k_star,status"
FIGURE1_RATIOS = (0.2, 0.4, 0.5, 0.65, 0.85, 0.95, 1.0, 1.05, 1.2, 1.4, 1.6, 1.8)
FIGURE1_POINTS = 401


def _fmt(x: float | None, precision: int) -> str:
    if x is None:
        return ""
    if math.isnan(x):
        return "nan"
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return format(x, f".{precision}g")


def format_row(row: ScanRow, precision: int) -> str:
    return ",".join(
        [
            repr(float(row.sigma)),
            _fmt(row.alpha, precision),
            _fmt(row.beta, precision),
            _fmt(row.log10_beta, precision),
            _fmt(row.k_star, precision),
            row.status,
        ]
    )


def render_csv(rows: Sequence[ScanRow], precision: int) -> str:
    return "\n".join([CSV_HEADER, *(format_row(r, precision) for r in rows)]) + "\n"


def _sigma(args: argparse.Namespace) -> float:
    if args.sigma is not None:
        return float(args.sigma)
    if args.sigma_pi is not None:
        return float(args.sigma_pi) * math.pi
    raise InvalidParameters("one of --sigma or --sigma-pi is required")


def _add_sigma(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group()
    g.add_argument("--sigma", type=float, help="opening angle in radians")
    g.add_argument("--sigma-pi", type=float, help="opening angle in units of pi")


def _add_precision(p: argparse.ArgumentParser) -> None:
    p.add_argument("--precision", type=int, default=12, help="significant digits for floats (default 12)")


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def cmd_eval(args: argparse.Namespace) -> int:
    mp = ModePoint(ConeParams(_sigma(args), args.alpha), args.k)
    if mp.k == 0.0:
        raise InvalidParameters("k must be nonzero")
    p = args.precision
    real = beta_modes_real(mp)
    # the complex form and the extremal path are written for k > 0; both
    # constants are even in k
    mpos = ModePoint(mp.params, abs(mp.k))
    cplx = beta_modes_complex(mpos)
    ext_plus, ext_minus = mode_beta(mpos)
    lines = [
        f"complex   beta_plus={_fmt(cplx.beta_plus, p)} beta_minus={_fmt(cplx.beta_minus, p)}",
        f"real      beta_plus={_fmt(real.beta_plus, p)} beta_minus={_fmt(real.beta_minus, p)}",
        f"extremal  beta_plus={_fmt(ext_plus, p)} beta_minus={_fmt(ext_minus, p)}",
        f"max       {_fmt(real.max, p)}",
    ]
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_sup(args: argparse.Namespace) -> int:
    res = beta_sup(ConeParams(_sigma(args), args.alpha))
    p = args.precision
    text = f"beta={_fmt(res.beta, p)}\nk_star={_fmt(res.k_star, p) or 'none'}\nattainment={res.attainment.value}\n"
    _emit(text, args.out)
    return EXIT_OK


def _alpha_grid(lo: float, hi: float, n: int) -> np.ndarray:
    if not (math.isfinite(lo) and math.isfinite(hi)) or lo > hi:
        raise InvalidParameters(f"bad alpha range [{lo!r}, {hi!r}]")
    if n < 1 or (n == 1 and lo != hi):
        raise InvalidParameters(f"--points must be >= 2 for a proper range, got {n}")
    return np.linspace(lo, hi, n)


def cmd_scan(args: argparse.Namespace) -> int:
    sigma = _sigma(args)
    ConeParams(sigma, 0.0)
    alphas = _alpha_grid(args.alpha_min, args.alpha_max, args.points)
    if np.any(alphas == 1.0):
        raise InvalidParameters("alpha grid contains the excluded value 1")
    rows = alpha_scan(sigma, alphas, SupConfig(workers=args.workers))
    _emit(render_csv(rows, args.precision), args.out)
    return EXIT_OK


def figure1_rows(ratio: float, workers: int = 1) -> list[ScanRow]:
    """401-point scan over [-1, 1]; the excluded alpha = 1 row is kept as ``excluded``."""
    sigma = ratio * math.pi
    alphas = np.linspace(-1.0, 1.0, FIGURE1_POINTS)
    keep = alphas != 1.0
    scanned = iter(alpha_scan(sigma, alphas[keep], SupConfig(workers=workers)))
    return [
        next(scanned) if ok else ScanRow(sigma, float(a), math.nan, math.nan, None, "excluded")
        for a, ok in zip(alphas, keep)
    ]


def figure1_filename(ratio: float) -> str:
    return f"fig1_sigma_{ratio:g}.csv"


def cmd_figure1(args: argparse.Namespace) -> int:
    outdir = Path(args.out or ".")
    outdir.mkdir(parents=True, exist_ok=True)
    # every panel is computed before the first file is written
    files = {figure1_filename(r): render_csv(figure1_rows(r, args.workers), args.precision) for r in FIGURE1_RATIOS}
    for name, text in files.items():
        (outdir / name).write_text(text)
    print(f"wrote {len(files)} files to {outdir}")
    return EXIT_OK


def cmd_critical(args: argparse.Namespace) -> int:
    s = critical_sigma(args.tol)
    p = args.precision
    _emit(f"sigma_c={_fmt(s, p)}\nsigma_c_over_pi={_fmt(s / math.pi, p)}\n", args.out)
    return EXIT_OK


def cmd_oracle(args: argparse.Namespace) -> int:
    mp = ModePoint(ConeParams(_sigma(args), args.alpha), args.k)
    if mp.k == 0.0:
        raise InvalidParameters("k must be nonzero")
    if args.n_modes < 4:
        raise InvalidParameters(f"--n-modes must be at least 4, got {args.n_modes}")
    res = solve_rayleigh_max(assemble_forms(mp, build_basis(mp.sigma, args.n_modes)))
    closed = beta_modes_real(mp).max
    p = args.precision
    lines = [
        f"oracle_beta={_fmt(res.lambda_max, p)}",
        f"closed_form={_fmt(closed, p)}",
        f"abs_diff={abs(res.lambda_max - closed):.3e}",
        f"residual={res.residual:.3e}",
    ]
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    if args.cases < 1:
        raise InvalidParameters("--cases must be positive")
    report = run_verification(args.seed, args.cases)
    _emit(report.render() + "\n", args.out)
    return EXIT_OK if report.passed else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="conecommutator", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="per-mode constants at one (sigma, alpha, k)")
    _add_sigma(p)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--k", type=float, required=True)
    p.add_argument("--out")
    _add_precision(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("sup", help="supremum over k at one (sigma, alpha)")
    _add_sigma(p)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--out")
    _add_precision(p)
    p.set_defaults(func=cmd_sup)

    p = sub.add_parser("scan", help="CSV of the supremum along an alpha grid")
    _add_sigma(p)
    p.add_argument("--alpha-min", type=float, default=-1.0)
    p.add_argument("--alpha-max", type=float, default=0.99)
    p.add_argument("--points", type=int, default=200)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out")
    _add_precision(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("figure1", help="the twelve alpha scans, one CSV per opening angle")
    p.add_argument("--out", help="output directory (default: current)")
    p.add_argument("--workers", type=int, default=1)
    _add_precision(p)
    p.set_defaults(func=cmd_figure1)

    p = sub.add_parser("critical", help="root of sigma cot sigma = 1 in (pi, 2 pi)")
    p.add_argument("--tol", type=float, default=1e-12)
    p.add_argument("--out")
    _add_precision(p)
    p.set_defaults(func=cmd_critical)

    p = sub.add_parser("oracle", help="brute-force Galerkin maximum at one mode")
    _add_sigma(p)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--k", type=float, required=True)
    p.add_argument("--n-modes", type=int, default=DEFAULT_N_MODES)
    p.add_argument("--out")
    _add_precision(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="seeded cross-checks of all evaluation paths")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--cases", type=int, default=DEFAULT_CASES)
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "precision", 12) < 1:
        print("error: --precision must be positive", file=sys.stderr)
        return EXIT_INVALID
    try:
        return args.func(args)
    except (InvalidParameters, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except SingularPoint as exc:
        print(f"singular: {exc}", file=sys.stderr)
        return EXIT_SINGULAR
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
