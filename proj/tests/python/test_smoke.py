"""End-to-end checks that the compiled module exposes the library faithfully."""

import pytest

import policy_game_lab as pgl


def test_discounting_and_present_value():
    exp = pgl.DiscountSpec.exponential(0.25)
    assert pgl.eval_discount(exp, 0) == 1.0
    assert pgl.eval_discount(exp, 1) == pytest.approx(0.8, abs=1e-15)

    qh = pgl.DiscountSpec.quasi_hyperbolic(0.5, 0.9)
    assert pgl.eval_discount(qh, 2) == pytest.approx(0.405, abs=1e-15)

    assert pgl.present_value([1.0, 1.0, 1.0],
                             pgl.DiscountSpec.quasi_hyperbolic(0.5, 0.5)) == \
        pytest.approx(1.375, abs=1e-15)


def test_equilibrium_report_worked_example():
    params = pgl.GameParams(a=1.0, b_bar=1.0)
    report = pgl.equilibrium_report(
        params, pgl.DiscountSpec.quasi_hyperbolic(0.7, 0.9))
    assert report.mode == pgl.ReportMode.BEHAVIORAL
    assert report.pi_discretion == 1.0
    assert report.pi_ideal == 0.0
    assert report.pi_best_enforceable == pytest.approx(0.22699386503067487,
                                                       abs=1e-9)
    assert report.range_lo == report.pi_best_enforceable
    assert report.range_hi == report.pi_discretion
    assert '"pi_best_enforceable"' in report.to_json()


def test_beta_one_reduction_is_exact():
    params = pgl.GameParams(a=2.0, b_bar=1.5)
    behavioral = pgl.equilibrium_report(
        params, pgl.DiscountSpec.quasi_hyperbolic(1.0, 0.8))
    baseline = pgl.equilibrium_report(
        params, pgl.DiscountSpec.exponential_from_factor(0.8))
    assert behavioral.pi_best_enforceable == baseline.pi_best_enforceable
    assert behavioral.range_width == baseline.range_width
    assert behavioral.discount_factor == baseline.discount_factor


def test_classification_and_decisions():
    assert pgl.classify(pgl.PolicymakerProfile(0.6, 1.0, 0.9)) == \
        pgl.PolicymakerType.NAIVE
    assert pgl.classify(pgl.PolicymakerProfile(0.6, 0.6, 0.9)) == \
        pgl.PolicymakerType.SOPHISTICATED

    profile = pgl.PolicymakerProfile(0.4, 1.0, 0.9)
    params = pgl.GameParams()
    actual = pgl.decide(profile, params, 0.4, pgl.DiscountBasis.ACTUAL_BETA)
    believed = pgl.decide(profile, params, 0.4, pgl.DiscountBasis.BELIEVED_BETA)
    assert actual.action == pgl.Action.CHEAT
    assert believed.action == pgl.Action.COMPLY
    assert pgl.detect_reversal(profile, params, 0.4)


def test_simulate_naive_reversal_and_csv():
    traj = pgl.simulate(
        pgl.PolicymakerProfile(0.4, 1.0, 0.9), pgl.GameParams(),
        pgl.DiscountSpec.quasi_hyperbolic(0.4, 0.9), 0.4, 6, seed=1)
    assert traj.periods[0].reversal
    assert traj.periods[0].planned_action == pgl.Action.COMPLY
    assert traj.periods[0].action == pgl.Action.CHEAT
    assert traj.summary.cheat_count == 3
    csv = traj.to_csv()
    assert csv.splitlines()[0] == ("t,announced_target,expected_inflation,"
                                   "realized_inflation,period_loss,action,"
                                   "planned_action,reversal")
    assert ",CHEAT,COMPLY,1" in csv


def test_sweep_rows_and_ratios():
    spec = pgl.SweepSpec()
    spec.beta_grid = [0.5, 1.0]
    spec.delta_grid = [0.8, 0.9]
    rows = pgl.run_sweep(spec)
    assert len(rows) == 4
    for row in rows:
        if row.beta < 1.0:
            assert row.width_ratio_vs_beta1 < 1.0
        else:
            assert row.width_ratio_vs_beta1 == 1.0
    report = pgl.narrowing_report(spec)
    assert report.monotone
    assert 0.0 < report.min_ratio < 1.0
    assert pgl.sweep_csv(rows).startswith("beta,delta,discount_factor")


def test_validation_maps_to_value_error():
    with pytest.raises(ValueError):
        pgl.GameParams(a=-1.0)
    with pytest.raises(ValueError):
        pgl.DiscountSpec.quasi_hyperbolic(1.5, 0.9)
    with pytest.raises(ValueError):
        pgl.PolicymakerProfile(0.8, 0.5, 0.9)


def test_run_verify_passes():
    report = pgl.run_verify(trials=50, seed=42)
    assert report.all_passed()
    assert all(check.failed == 0 for check in report.checks)
