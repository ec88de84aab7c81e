import numpy as np
import pytest

from neil_algebra.errors import AliasingWindowError
from neil_algebra.szego import (
    Constraint, Variant, Verdict, adjudicate_lambda, classical_closed_form, explicit_minimizer,
    lambda_remark_check, neil_closed_forms, oracle_distance,
)
from neil_algebra.trig_core import TrigPoly, multiply, reciprocal_analytic, synthesize
from neil_algebra.weights import BUILTIN_WEIGHTS, Weight, analyze_weight, outer_factor


def test_trivial_weight():
    weight = Weight.builtin("one")
    analysis = analyze_weight(weight)
    closed = neil_closed_forms(analysis)
    assert classical_closed_form(analysis) == pytest.approx(1.0, abs=1e-12)
    assert closed.paper_variant == pytest.approx(1.0, abs=1e-12)
    assert closed.log_variant == pytest.approx(1.0, abs=1e-12)
    for constraint in Constraint:
        assert oracle_distance(weight, constraint, 8) == pytest.approx(1.0, abs=1e-12)


def test_abs1pz2_both_forms_agree():
    weight = Weight.builtin("abs1pz2")
    closed = neil_closed_forms(analyze_weight(weight))
    assert closed.paper_variant == pytest.approx(1.25, abs=1e-12)
    assert closed.log_variant == pytest.approx(1.25, abs=1e-12)
    for n in (2, 8, 32):
        assert oracle_distance(weight, Constraint.NEIL, n) == pytest.approx(1.25, abs=1e-10)
    report = adjudicate_lambda(weight, 16)
    assert report.verdict is Verdict.BOTH
    assert report.stabilized
    assert report.minimizer_objective == pytest.approx(1.25, abs=1e-10)
    assert np.max(np.abs(report.minimizer.coeffs)) < 1e-10


def test_abs1pz2sq_adjudicates_log_form():
    weight = Weight.builtin("abs1pz2sq")
    analysis = analyze_weight(weight)
    closed = neil_closed_forms(analysis)
    assert closed.paper_variant == pytest.approx(2.5625, abs=1e-10)
    assert closed.log_variant == pytest.approx(2.0, abs=1e-10)
    assert oracle_distance(weight, Constraint.NEIL, 32) == pytest.approx(2.0, abs=1e-10)

    log_min = explicit_minimizer(analysis, Variant.LOG)
    assert log_min.valid
    assert log_min.objective == pytest.approx(2.0, abs=1e-10)
    assert log_min.f.coefficient(2) == pytest.approx(0.25, abs=1e-10)
    assert np.max(np.abs(log_min.f.window(3, 64))) < 1e-10

    paper_min = explicit_minimizer(analysis, Variant.PAPER)
    assert not paper_min.valid
    assert paper_min.f.coefficient(1) == pytest.approx(-0.25, abs=1e-10)

    report = adjudicate_lambda(weight, 64)
    assert report.verdict is Verdict.LOG_FORM
    assert report.minimizer_variant is Variant.LOG
    assert report.oracle == pytest.approx(2.0, abs=1e-10)


def test_classical_oracle_matches_closed_form():
    for name in BUILTIN_WEIGHTS:
        weight = Weight.builtin(name)
        expected = classical_closed_form(analyze_weight(weight))
        assert oracle_distance(weight, Constraint.CLASSICAL, 64) == pytest.approx(expected, abs=1e-6)


def test_classical_oracle_error_for_abs1pz2():
    weight = Weight.builtin("abs1pz2")
    value = oracle_distance(weight, Constraint.CLASSICAL, 8)
    assert 1.0 < value < 1.0 + 1e-5


def test_oracle_monotone_in_degree():
    weight = Weight.builtin("exp2cos")
    for constraint in Constraint:
        values = [oracle_distance(weight, constraint, n) for n in range(2, 20)]
        assert all(b <= a + 1e-12 for a, b in zip(values, values[1:]))


def test_homogeneity(rng):
    weight = Weight.builtin("abs1pz2sq")
    base = oracle_distance(weight, Constraint.NEIL, 16)
    for c in rng.uniform(0.5, 2.0, size=20):
        scaled = weight.scaled(c)
        assert oracle_distance(scaled, Constraint.NEIL, 16) == pytest.approx(c * base, rel=1e-8)
        closed = neil_closed_forms(analyze_weight(scaled))
        assert closed.log_variant == pytest.approx(c * 2.0, rel=1e-8)


def test_rotation_invariance(rng):
    weight = Weight.builtin("exp2cos")
    base = oracle_distance(weight, Constraint.NEIL, 16)
    base_closed = neil_closed_forms(analyze_weight(weight))
    for steps in rng.integers(1, weight.size, size=20):
        rotated = weight.rotated(int(steps))
        assert oracle_distance(rotated, Constraint.NEIL, 16) == pytest.approx(base, abs=1e-8)
        closed = neil_closed_forms(analyze_weight(rotated))
        assert closed.paper_variant == pytest.approx(base_closed.paper_variant, abs=1e-8)
        assert closed.log_variant == pytest.approx(base_closed.log_variant, abs=1e-8)


def test_lambda_remark():
    lam, gap = lambda_remark_check(Weight.builtin("twopcos2"), 32)
    assert abs(lam) < 1e-14
    assert abs(gap) < 1e-10
    lam, gap = lambda_remark_check(Weight.builtin("abs1pz2"), 32)
    assert lam == pytest.approx(0.5, abs=1e-14)
    assert gap == pytest.approx(0.25, abs=1e-10)


def test_oracle_limits():
    weight = Weight.builtin("one", 64)
    with pytest.raises(AliasingWindowError):
        oracle_distance(weight, Constraint.NEIL, 40)
    with pytest.raises(ValueError):
        oracle_distance(weight, Constraint.NEIL, 1)
    with pytest.raises(ValueError):
        adjudicate_lambda(weight, 4)


def test_report_record():
    payload, tables = adjudicate_lambda(Weight.builtin("abs1pz2sq"), 32).to_record()
    assert payload["verdict"] == "log-form-matches"
    assert payload["weight"] == "abs1pz2sq"
    columns, rows = tables["oracle_values"]
    assert columns == ["N", "value"]
    assert [row[0] for row in rows] == [2, 4, 8, 16, 32]


def test_valid_minimizer_attains_weighted_objective():
    weight = Weight.builtin("abs1pz2sq")
    analysis = analyze_weight(weight)
    minimizer = explicit_minimizer(analysis, Variant.LOG)
    outer = outer_factor(analysis, 64, normalized=True)
    assert (outer - minimizer.f).allclose(TrigPoly(0, [1.0, minimizer.lam]), 1e-12)

    # 1 - f/E лежит в 1 + z^2 H^2, а |1 - f/E|^2 rho = e^C |E - f|^2
    quotient = multiply(minimizer.f, reciprocal_analytic(outer, 200)).truncate(200)
    assert abs(quotient.coefficient(0)) < 1e-12 and abs(quotient.coefficient(1)) < 1e-12
    values = synthesize(TrigPoly.constant(1.0) - quotient, weight.size).samples
    attained = float(np.mean(np.abs(values) ** 2 * weight.values))
    assert attained == pytest.approx(minimizer.objective, abs=1e-10)
    assert attained == pytest.approx(oracle_distance(weight, Constraint.NEIL, 32), abs=1e-10)


def test_oracle_stops_below_nyquist():
    weight = Weight.builtin("one", 64)
    assert oracle_distance(weight, Constraint.NEIL, 31) == pytest.approx(1.0, abs=1e-12)
    with pytest.raises(AliasingWindowError):
        oracle_distance(weight, Constraint.NEIL, 32)
