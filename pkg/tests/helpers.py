from __future__ import annotations

import math

import numpy as np
from conecommutator.modes import blowup_distance


def random_points(seed: int, n: int, *, k_range=(0.05, 50.0), sigma_range=(0.05, 1.95), gap=1e-3):
    """Seeded ``(sigma, alpha, k)`` at distance > ``gap`` from the blowup set."""
    rng = np.random.default_rng(seed)
    pts = []
    while len(pts) < n:
        sigma = rng.uniform(*sigma_range) * math.pi
        alpha = rng.uniform(-1.0, 1.0)
        k = math.exp(rng.uniform(math.log(k_range[0]), math.log(k_range[1])))
        if alpha == 1.0 or blowup_distance(sigma, alpha) <= gap:
            continue
        pts.append((sigma, alpha, k))
    return pts
