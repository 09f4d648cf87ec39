import numpy as np
import pytest

from taildep.datagen import MixtureSpec, example1, example2, generate
from taildep.support_fit import SupportFitOptions, estimate_support, support_objective
from taildep.tail_core import AngularCone, radial_order

RAY_SPEC = MixtureSpec(
    alpha_main=2.0, alpha_hidden=4.0, cone=AngularCone(0.5, 0.5),
    z_p=1.0, z_q=1.0, mix_prob=1.0,
)


class TestObjective:
    def test_full_interval_is_one(self):
        # (b - a) = 1 and the penalty vanishes by the D* = H identity
        o = radial_order(example1(2000, 0))
        assert support_objective(o, 50, 0.0, 1.0, 1.0) == 1.0

    def test_validation(self):
        o = radial_order(example1(100, 0))
        with pytest.raises(ValueError):
            support_objective(o, 10, 0.6, 0.4, 1.0)
        with pytest.raises(ValueError):
            support_objective(o, 10, 0.2, 0.8, 0.0)

    def test_true_support_beats_wider(self):
        wins = 0
        for seed in range(10):
            o = radial_order(example1(30000, seed))
            wins += support_objective(o, 100, 0.25, 0.75, 1.0) < support_objective(
                o, 100, 0.05, 0.95, 1.0
            )
        assert wins >= 8

    def test_ray_point_beats_wide_interval(self):
        hits = 0
        for seed in range(10):
            o = radial_order(generate(RAY_SPEC, 10000, seed))
            hits += support_objective(o, 100, 0.5, 0.5, 1.0) < support_objective(
                o, 100, 0.3, 0.7, 1.0
            )
        assert hits >= 8


class TestEstimateSupport:
    def test_bimodal_recovery_all_lambdas(self):
        # narrow-spread support [0.25, 0.75] recovered for every tuning value
        o = radial_order(example1(30000, 0))
        for lam in (1.0, 2.0, 4.0, 8.0, 16.0):
            est = estimate_support(o, 100, SupportFitOptions(lam=lam))
            assert est.a_hat == pytest.approx(0.25, abs=0.01)
            assert est.b_hat == pytest.approx(0.75, abs=0.01)

    def test_low_spread_large_lambda(self):
        # Beta(1,2)-spread angles put little mass near b: the fit trims the
        # top of the interval toward ~0.67 at the largest tuning value
        hits = 0
        for seed in range(5):
            o = radial_order(example2(30000, seed))
            est = estimate_support(o, 100, SupportFitOptions(lam=16.0))
            hits += abs(est.a_hat - 0.251) <= 0.03 and abs(est.b_hat - 0.670) <= 0.03
        assert hits >= 3

    def test_ray_data_degenerates(self):
        for seed in range(3):
            o = radial_order(generate(RAY_SPEC, 10000, seed))
            est = estimate_support(o, 100, SupportFitOptions())
            assert est.a_hat == pytest.approx(0.5, abs=0.02)
            assert est.b_hat == pytest.approx(0.5, abs=0.02)
            assert est.a_hat <= est.b_hat

    def test_feasibility_of_every_iterate(self):
        o = radial_order(example1(3000, 1))
        est = estimate_support(o, 50, SupportFitOptions(grid_size=21))
        assert 0.0 <= est.a_hat <= est.b_hat <= 1.0
        for a, b, _ in est.trace:
            assert 0.0 <= a <= b <= 1.0

    def test_refinement_never_loses_to_grid(self):
        o = radial_order(example1(3000, 2))
        opts = SupportFitOptions(grid_size=21)
        est = estimate_support(o, 50, opts)
        n_grid = opts.grid_size * (opts.grid_size + 1) // 2
        grid_vals = [v for _, _, v in est.trace[:n_grid]]
        assert est.objective_value <= min(grid_vals)

    def test_deterministic(self):
        o = radial_order(example1(3000, 3))
        e1 = estimate_support(o, 50, SupportFitOptions())
        e2 = estimate_support(o, 50, SupportFitOptions())
        assert (e1.a_hat, e1.b_hat, e1.objective_value) == (
            e2.a_hat, e2.b_hat, e2.objective_value,
        )

    def test_consistency_over_n(self):
        meds = []
        for n, k in ((3000, 50), (10000, 100), (30000, 100)):
            errs = []
            for seed in range(15):
                o = radial_order(example1(n, seed))
                est = estimate_support(o, k, SupportFitOptions())
                errs.append(abs(est.a_hat - 0.25) + abs(est.b_hat - 0.75))
            meds.append(float(np.median(errs)))
        assert meds[0] >= meds[1] >= meds[2]

    def test_options_validation(self):
        with pytest.raises(ValueError):
            SupportFitOptions(lam=0.0)
        with pytest.raises(ValueError):
            SupportFitOptions(grid_size=5)
        with pytest.raises(ValueError):
            SupportFitOptions(tol=0.0)
