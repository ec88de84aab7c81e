import numpy as np
import pytest

from neil_algebra.errors import (
    AliasingWindowError, BoundaryZeroError, EmptyWitnessError, ReportFormatError,
    SymbolNotInNeilAlgebraError, SymbolNotUnimodularError,
)
from neil_algebra.hardy_alpha import Alpha
from neil_algebra.symbols import load_symbol
from neil_algebra.trig_core import TrigPoly, mean_and_norms, multiply, random_poly
from neil_algebra.widom import (
    ClassifyOptions, MElement, blaschke_series, classify_symbol, distance_bracket,
    dual_lower_bound, epsilon_alpha, neil_invertibility, perturbation_bound, primal_upper_bound,
    riesz_factor, scan_alpha,
)

Z = TrigPoly.monomial(1)
Z2 = TrigPoly.monomial(2)
ZBAR2 = TrigPoly.monomial(-2)


def _witness(*terms, name="h"):
    return MElement(TrigPoly.from_terms(terms), name)


def test_melement_window():
    with pytest.raises(ReportFormatError):
        _witness((0, 1.0))
    with pytest.raises(ReportFormatError):
        _witness((-2, 1.0), (1, 1.0))
    h = _witness((-1, 1.0), (3, 0.5j))
    assert h.poly.coefficient(3) == 0.5j
    assert MElement(TrigPoly.zero()).is_zero()


def test_shift_is_degenerate_at_alpha_one_zero():
    for n in (4, 8, 16):
        assert epsilon_alpha(Alpha(1 + 0j, 0j), Z, n) <= 1e-12
    assert epsilon_alpha(Alpha(0j, 1 + 0j), Z, 8) == pytest.approx(1.0, abs=1e-12)


def test_z2_left_scan_isometric_and_adjoint_degenerate():
    left = scan_alpha(Z2, 4, 4, 8)
    for values in left.eps_table.values():
        assert all(eps == pytest.approx(1.0, abs=1e-10) for _, eps in values)
    assert not left.some_alpha_degenerate
    adjoint = scan_alpha(ZBAR2, 4, 4, 8)
    assert adjoint.min_eps <= 1e-12
    assert adjoint.some_alpha_degenerate
    assert adjoint.argmin_alpha in adjoint.alpha_grid


def test_scan_eps_nonincreasing_in_degree(rng):
    symbol = random_poly(rng, -2, 2)
    scan = scan_alpha(symbol, 4, 4, 32)
    for values in scan.eps_table.values():
        assert [n for n, _ in values] == [8, 16, 32]
        eps = [e for _, e in values]
        assert all(b <= a + 1e-12 for a, b in zip(eps, eps[1:]))


def test_scan_workers_do_not_change_table():
    symbol = TrigPoly(-1, [0.3, 0.0, 1.0])
    serial = scan_alpha(symbol, 4, 4, 12)
    threaded = scan_alpha(symbol, 4, 4, 12, workers=3)
    assert serial.alpha_grid == threaded.alpha_grid
    for alpha in serial.alpha_grid:
        assert np.allclose(serial.eps_table[alpha], threaded.eps_table[alpha], rtol=0, atol=1e-14)


def test_scan_verdict_mode_requires_unimodular():
    with pytest.raises(SymbolNotUnimodularError):
        scan_alpha(Z.scale(2.0), 4, 4, 8, verdict_mode=True)
    with pytest.raises(ValueError):
        scan_alpha(Z, 3, 4, 8)


def test_dual_lower_bound():
    assert dual_lower_bound(Z, _witness((-1, 1.0))) == pytest.approx(1.0, abs=1e-12)
    assert dual_lower_bound(Z, _witness((1, 1.0))) == pytest.approx(0.0, abs=1e-15)
    with pytest.raises(EmptyWitnessError):
        dual_lower_bound(Z, MElement(TrigPoly.zero()))


def test_primal_upper_bound_for_shift():
    bound = primal_upper_bound(Z, 4, 64)
    assert 1.0 - 1e-6 <= bound.value <= 1.0 + 1e-4
    assert bound.refined is not None
    assert bound.p.coefficient(1) == 0


def test_primal_limits():
    with pytest.raises(ValueError):
        primal_upper_bound(Z, 1)
    with pytest.raises(AliasingWindowError):
        primal_upper_bound(Z, 16, 64)


def test_dual_below_primal(rng):
    for _ in range(3):
        symbol = random_poly(rng, -2, 3, scale=0.3)
        report = distance_bracket(symbol, 6)
        assert report.dual_lower <= report.primal_upper + 1e-6
        assert not report.theorem_inconsistency


def test_blaschke_series_of_origin_and_inner_zero():
    assert blaschke_series([0j, 0j], 5).allclose(Z2, 1e-15)
    b = blaschke_series([0.5], 40)
    z = 0.3 + 0.2j
    assert b.evaluate(z) == pytest.approx((z - 0.5) / (1 - 0.5 * z), abs=1e-12)


@pytest.mark.parametrize("terms", [
    ((-1, 1.0), (1, 0.5)),
    ((-1, 0.25), (1, 1.0)),
    ((1, 1.0),),
    ((-1, 1.0),),
    ((-1, 0.1), (1, 1.0), (2, 0.5)),
])
def test_riesz_factor_residuals(terms):
    result = riesz_factor(_witness(*terms), 128)
    assert result.residuals.worst() <= 1e-6


def test_riesz_factor_alpha_choice():
    one_zero = Alpha(1 + 0j, 0j)
    assert riesz_factor(_witness((-1, 1.0), (1, 0.5)), 128).alpha.distance(one_zero) < 1e-10
    inner = riesz_factor(_witness((-1, 0.25), (1, 1.0)), 128)
    assert inner.alpha.distance(one_zero) < 1e-10
    assert len(inner.blaschke_zeros) == 2
    degenerate = riesz_factor(_witness((1, 1.0)), 128)
    assert degenerate.alpha.distance(one_zero) < 1e-12
    assert degenerate.f.allclose(Z2, 1e-12)


def test_riesz_factor_boundary_zero():
    with pytest.raises(BoundaryZeroError) as info:
        riesz_factor(_witness((-1, 1.0), (1, 1.0)))
    assert info.value.exit_code == 3


def test_neil_invertibility():
    assert not neil_invertibility(Z2).invertible
    result = neil_invertibility(TrigPoly(0, [2.0, 0.0, 1.0]))
    assert result.invertible
    assert result.inf_modulus == pytest.approx(1.0, abs=1e-12)
    assert neil_invertibility(TrigPoly(0, [1.0, 0.0, 0.5])).invertible
    assert not neil_invertibility(TrigPoly(0, [0.25, 0.0, 1.0])).invertible
    with pytest.raises(SymbolNotInNeilAlgebraError):
        neil_invertibility(TrigPoly(0, [1.0, 1.0]))
    with pytest.raises(SymbolNotInNeilAlgebraError):
        neil_invertibility(TrigPoly.monomial(-1))


def test_perturbation_bound_lower_bounds_scan():
    symbol = load_symbol("builtin:expisin").poly
    bound = perturbation_bound(symbol, TrigPoly.constant(1.0))
    assert bound == pytest.approx(1 - 2 * np.sin(0.25), abs=1e-10)
    assert scan_alpha(symbol, 4, 8, 16).min_eps >= bound - 1e-10
    assert perturbation_bound(Z, TrigPoly.constant(1.0)) == 0.0


def test_classify_positive_case():
    symbol = load_symbol("builtin:expisin")
    options = ClassifyOptions(theta_steps=16, phi_steps=16, degree=64)
    report = classify_symbol(symbol.poly, options, symbol.name, symbol.tail)
    assert report.unimodular
    assert report.scan.min_eps > 0.3
    assert report.adjoint_scan.min_eps > 0.3
    assert report.primal.value <= 0.496
    assert report.distance_lt_one_certified
    assert not report.some_alpha_degenerate
    assert not report.adjoint_degenerate
    assert report.invertible_family_plausible
    assert not report.theorem_inconsistency
    assert report.dual_lower <= report.primal_upper + 1e-6


def test_classify_negative_case():
    options = ClassifyOptions(theta_steps=4, phi_steps=4, degree=16, minimax_degree=4)
    report = classify_symbol(Z, options, "z")
    assert report.some_alpha_degenerate
    assert report.distance_ge_one_certified
    assert not report.distance_lt_one_certified
    assert not report.invertible_family_plausible
    assert not report.theorem_inconsistency
    assert report.dual_bounds["e^{-it}"] == pytest.approx(1.0, abs=1e-12)


def test_classify_non_unimodular_symbol_has_no_verdicts():
    options = ClassifyOptions(theta_steps=4, phi_steps=4, degree=8, minimax_degree=4)
    report = classify_symbol(Z.scale(0.5), options, "z/2")
    assert not report.unimodular
    assert not report.some_alpha_degenerate
    assert not report.distance_ge_one_certified
    assert not report.distance_lt_one_certified
    assert not report.theorem_inconsistency


def test_widom_report_record():
    options = ClassifyOptions(theta_steps=4, phi_steps=4, degree=8, minimax_degree=4)
    payload, tables = classify_symbol(Z2, options, "z2").to_record()
    assert payload["symbol"] == "z2"
    assert payload["dual_ceiling"] == pytest.approx(0.0, abs=1e-6)
    columns, rows = tables["eps_table"]
    assert columns == ["a", "b_re", "b_im", "N", "eps"]
    assert len(rows) == 10 * 3
    assert "adjoint_eps_table" in tables and "dual_bounds" in tables


def test_neil_elements_annihilate_witnesses(rng):
    for _ in range(20):
        psi = TrigPoly(0, rng.standard_normal(6) + 1j * rng.standard_normal(6))
        psi = psi - TrigPoly.monomial(1, psi.coefficient(1))
        h = MElement(TrigPoly.from_terms(
            [(-1, complex(*rng.standard_normal(2)))]
            + [(j, complex(*rng.standard_normal(2))) for j in range(1, 5)]))
        assert abs(mean_and_norms(multiply(psi, h.poly)).mean) <= 1e-12
        assert dual_lower_bound(psi, h) <= 1e-12


def test_distance_bracket_uses_quadrature_grid():
    assert distance_bracket(Z, 4, 256).primal.grid_size == 256
    assert distance_bracket(Z, 4, 16).primal.grid_size >= 32
