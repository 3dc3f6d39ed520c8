from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conecommutator import (
    Attainment,
    ConeParams,
    ModePoint,
    SmallAlphaClass,
    SupConfig,
    alpha_scan,
    beta_limit_k0,
    beta_modes_real,
    beta_sup,
    classify_small_alpha,
    critical_sigma,
    singular_alphas,
)
from conecommutator.sup import Cause, _golden_max

CORNERS = (0.2, 0.4, 0.5, 0.65, 0.85, 0.95, 1.05, 1.2, 1.4, 1.6, 1.8)


class TestGolden:
    def test_parabola(self):
        x, fx = _golden_max(lambda t: -(t - 0.3) ** 2, -1.0, 2.0, 1e-10)
        assert x == pytest.approx(0.3, abs=1e-9) and fx == pytest.approx(0.0, abs=1e-18)

    def test_edge_maximum(self):
        x, _ = _golden_max(lambda t: t, 0.0, 1.0, 1e-10)
        assert x == pytest.approx(1.0, abs=1e-9)


class TestBetaSup:
    def test_half_plane(self):
        r = beta_sup(ConeParams(math.pi, 0.0))
        assert r.beta == pytest.approx(0.5, abs=1e-9)
        # the k-profile is flat; the k -> 0 candidate wins the tie
        assert r.attainment is Attainment.AT_K0_LIMIT

    def test_corner(self):
        r = beta_sup(ConeParams.from_pi(0.6, 0.0))
        assert r.beta == pytest.approx(1.0, abs=1e-6)
        assert r.attainment is Attainment.AT_K0_LIMIT and r.k_star is None

    @pytest.mark.parametrize("ratio", CORNERS)
    def test_corner_penalty(self, ratio):
        assert beta_sup(ConeParams.from_pi(ratio, 0.0)).beta == pytest.approx(1.0, abs=1e-6)

    def test_divergent(self):
        r = beta_sup(ConeParams(math.pi / 2, -1.0))
        assert r.attainment is Attainment.DIVERGENT and r.divergent and math.isinf(r.beta)

    def test_interior_maximum(self):
        # at this point the per-mode curve peaks at finite k
        found = None
        for ratio in np.linspace(0.1, 1.9, 37):
            for a in np.linspace(-0.9, 0.9, 19):
                r = beta_sup(ConeParams.from_pi(float(ratio), float(a)))
                if r.attainment is Attainment.INTERIOR:
                    found = (float(ratio) * math.pi, float(a), r)
                    break
            if found:
                break
        assert found is not None
        s, a, r = found
        assert r.k_star > 0
        assert r.beta == pytest.approx(beta_modes_real(ModePoint.of(s, a, r.k_star)).max, rel=1e-14)

    @settings(max_examples=40, deadline=None)
    @given(st.floats(0.05, 1.95), st.floats(-1.0, 0.98))
    def test_envelope(self, ratio, a):
        p = ConeParams.from_pi(ratio, a)
        r = beta_sup(p)
        if r.divergent:
            return
        assert r.beta >= 0.5 - 1e-9
        lim = beta_limit_k0(p)
        assert r.beta >= lim.max - 1e-9 * (1 + lim.max)

    @pytest.mark.parametrize("ratio,a", [(0.3, 0.4), (0.7, -0.3), (1.25, 0.2), (1.5, -0.7), (1.9, 0.05), (1.1, -0.5)])
    def test_refinement_consistency(self, ratio, a):
        p = ConeParams.from_pi(ratio, a)
        r1 = beta_sup(p)
        r2 = beta_sup(p, SupConfig(n_grid=480))
        assert r2.beta == pytest.approx(r1.beta, rel=1e-7)


class TestSingularAlphas:
    def test_reentrant(self):
        rep = singular_alphas(1.8 * math.pi, (-1.0, 1.0))
        by_alpha = {round(e.alpha, 12): e for e in rep.entries}
        assert by_alpha[round(5 / 9, 12)].cause is Cause.NEUMANN
        assert by_alpha[round(-1 / 9, 12)].cause is Cause.RESONANCE
        assert rep.alphas == sorted(rep.alphas)

    def test_quarter_plane(self):
        rep = singular_alphas(math.pi / 2, (-1.0, 1.0))
        assert [(e.alpha, e.cause, e.n) for e in rep.entries] == [(-1.0, Cause.RESONANCE, 1)]

    def test_narrow_sector(self):
        assert singular_alphas(0.2 * math.pi, (-1.0, 1.0)).entries == ()

    @settings(max_examples=60, deadline=None)
    @given(st.floats(0.05, 1.99), st.floats(-3, 0), st.floats(0, 3))
    def test_relations_hold(self, ratio, lo, hi):
        s = ratio * math.pi
        rep = singular_alphas(s, (lo, hi))
        for e in rep.entries:
            assert lo <= e.alpha <= hi and e.alpha not in (0.0, 1.0) and e.n != 0
            lhs = e.alpha * s if e.cause is Cause.NEUMANN else (1 - e.alpha) * s
            assert abs(lhs - e.n * math.pi) < 1e-12 * max(1, abs(e.n))
        assert rep.alphas == sorted(rep.alphas)

    def test_empty_range(self):
        with pytest.raises(ValueError):
            singular_alphas(1.0, (1.0, -1.0))


class TestCritical:
    def test_root(self):
        s = critical_sigma(1e-12)
        assert 1.42 < s / math.pi < 1.44
        assert s == pytest.approx(4.49341, abs=1e-5)
        assert abs(s / math.tan(s) - 1) < 1e-12

    def test_bad_tol(self):
        with pytest.raises(ValueError):
            critical_sigma(0.0)


class TestScan:
    def test_unweighted_row(self):
        (row,) = alpha_scan(0.5 * math.pi, [0.0])
        assert row.log10_beta == pytest.approx(0.0, abs=1e-9)

    def test_improvement_right(self):
        rows = alpha_scan(0.5 * math.pi, np.linspace(0.01, 0.15, 8))
        assert min(r.beta for r in rows) < 1

    def test_improvement_left(self):
        rows = alpha_scan(1.2 * math.pi, np.linspace(-0.15, -0.01, 8))
        assert min(r.beta for r in rows) < 1

    def test_input_order_and_log(self):
        alphas = [0.3, -0.2, 0.1, -0.7]
        rows = alpha_scan(1.1, alphas)
        assert [r.alpha for r in rows] == alphas
        for r in rows:
            if r.status != "divergent":
                assert r.log10_beta == pytest.approx(math.log10(r.beta), rel=1e-15)

    def test_spike_alignment(self):
        s = 1.8 * math.pi
        grid = np.linspace(-1, 0.99, 200)
        rows = alpha_scan(s, grid)
        step = grid[1] - grid[0]
        sing = singular_alphas(s, (grid[0], grid[-1])).alphas
        div = [r.alpha for r in rows if r.status == "divergent"]
        for a in div:
            assert min(abs(a - x) for x in sing) <= step / 2 + 1e-12
        for x in sing:
            assert min(abs(a - x) for a in div) <= step / 2 + 1e-12

    def test_exact_singular_row(self):
        (row,) = alpha_scan(1.8 * math.pi, [5 / 9])
        assert row.status == "divergent" and math.isinf(row.beta) and math.isinf(row.log10_beta)

    def test_workers_match_serial(self):
        grid = list(np.linspace(-0.5, 0.5, 24))
        a = alpha_scan(1.3 * math.pi, grid)
        b = alpha_scan(1.3 * math.pi, grid, SupConfig(workers=2))
        assert a == b

    def test_rejects_alpha_one(self):
        with pytest.raises(ValueError):
            alpha_scan(1.0, [0.5, 1.0])


class TestClassify:
    @pytest.mark.parametrize("ratio", [0.4, 0.9, 1.7])
    def test_right(self, ratio):
        assert classify_small_alpha(ratio * math.pi) is SmallAlphaClass.IMPROVES_RIGHT

    @pytest.mark.parametrize("ratio", [1.1, 1.3])
    def test_left(self, ratio):
        assert classify_small_alpha(ratio * math.pi) is SmallAlphaClass.IMPROVES_LEFT

    def test_critical(self):
        assert classify_small_alpha(critical_sigma()) is SmallAlphaClass.NO_IMPROVEMENT

    def test_half_plane_rejected(self):
        with pytest.raises(ValueError):
            classify_small_alpha(math.pi)
