import numpy as np
import pytest

from neil_algebra.hardy_alpha import Alpha, alpha_coordinates, kernel_poly, project_alpha
from neil_algebra.toeplitz_alpha import (
    assemble, basis_polys, classical_compare, inverse_residual, operator_norm_estimate,
    square_compression,
)
from neil_algebra.trig_core import TrigPoly, conjugate, multiply, random_poly
from tests.conftest import random_alpha

ZPZBAR = TrigPoly(-1, [1.0, 0.0, 1.0])


def _neil_element(rng, degree=4):
    """Случайный многочлен из алгебры Нейла: нулевой коэффициент при z"""
    coeffs = rng.standard_normal(degree + 1) + 1j * rng.standard_normal(degree + 1)
    coeffs[1] = 0
    return TrigPoly(0, coeffs)


def test_shape_and_exactness(rng):
    rep = assemble(random_alpha(rng), random_poly(rng, -1, 1), 10)
    assert rep.range_degree == 12
    assert rep.shape == (12, 10)
    assert rep.exact


def test_columns_are_projected_images(rng):
    alpha = random_alpha(rng)
    symbol = random_poly(rng, -2, 3)
    rep = assemble(alpha, symbol, 8)
    for j, basis in enumerate(basis_polys(alpha, 8)):
        image = project_alpha(alpha, multiply(symbol, basis))
        assert np.allclose(rep.matrix[:, j], alpha_coordinates(alpha, image, rep.range_degree),
                           atol=1e-12)


def test_adjoint_identity(rng):
    for _ in range(10):
        alpha = random_alpha(rng)
        symbol = random_poly(rng, -3, 3)
        forward = square_compression(assemble(alpha, symbol, 12))
        adjoint = square_compression(assemble(alpha, conjugate(symbol), 12))
        assert np.allclose(adjoint, forward.conj().T, atol=1e-12)


def test_product_law_for_neil_elements(rng):
    for _ in range(50):
        alpha = random_alpha(rng)
        phi = random_poly(rng, -2, 2)
        psi = _neil_element(rng)
        small = assemble(alpha, psi, 6)
        big = assemble(alpha, phi, small.range_degree)
        composed = big.matrix @ small.matrix
        direct = assemble(alpha, multiply(phi, psi), 6).matrix
        rows = direct.shape[0]
        assert np.max(np.abs(composed[:rows] - direct)) <= 1e-10
        assert np.max(np.abs(composed[rows:]), initial=0.0) <= 1e-10


def test_kernel_eigenrelation(rng):
    for _ in range(10):
        alpha = random_alpha(rng)
        psi = _neil_element(rng, 3)
        w = 0.9 * np.sqrt(rng.uniform()) * np.exp(2j * np.pi * rng.uniform())
        k = kernel_poly(alpha, w, 200).poly
        image = project_alpha(alpha, multiply(conjugate(psi), k))
        expected = k.scale(np.conj(psi.evaluate(w)))
        top = 200 - psi.hi
        assert np.allclose(image.window(0, top), expected.window(0, top), atol=1e-10)


def test_classical_compare(rng):
    for _ in range(20):
        assert classical_compare(random_poly(rng, -2, 2), 12, random_alpha(rng)) <= 1e-12


def test_square_section_of_z_plus_zbar():
    rep = assemble(Alpha(1 + 0j, 0j), ZPZBAR, 20)
    section = square_compression(rep)
    assert np.allclose(section[:, 0], 0.0)
    sv = np.linalg.svd(section, compute_uv=False)
    assert sv[0] == pytest.approx(2 * np.cos(np.pi / 20), abs=1e-12)


def test_operator_norm_sweep():
    sweep = operator_norm_estimate(Alpha(1 + 0j, 0j), ZPZBAR, [10, 25, 50, 100])
    values = [value for _, value in sweep.points]
    assert all(b >= a - 1e-12 for a, b in zip(values, values[1:]))
    assert sweep.sup_norm == pytest.approx(2.0, abs=1e-12)
    assert abs(values[-1] - 2.0) <= 0.002 * 2.0
    assert values[-1] <= 2.0 + 1e-12


def test_shift_rectangular_section_is_isometric():
    rep = assemble(Alpha(0j, 1 + 0j), TrigPoly.monomial(1), 16)
    sv = rep.singular_values()
    assert np.allclose(sv, 1.0, atol=1e-12)


def test_inverse_residual():
    psi = TrigPoly(0, [2.0, 0.0, 1.0])
    for alpha in (Alpha(1 + 0j, 0j), Alpha(0j, 1 + 0j), Alpha.from_angles(0.7, 1.3)):
        assert inverse_residual(alpha, psi, 10) <= 1e-10


def test_degree_limits():
    with pytest.raises(ValueError):
        assemble(Alpha(1 + 0j, 0j), ZPZBAR, 1)


def test_conjugate_neil_symbol_factors_through_projection(rng):
    for _ in range(50):
        alpha = random_alpha(rng)
        psi = _neil_element(rng, 3)
        phi = random_poly(rng, -3, 3)
        f = alpha.unit_poly().scale(complex(rng.standard_normal(), rng.standard_normal()))
        f = f + random_poly(rng, 2, 6)
        inner = project_alpha(alpha, multiply(phi, f))
        nested = project_alpha(alpha, multiply(conjugate(psi), inner))
        direct = project_alpha(alpha, multiply(multiply(conjugate(psi), phi), f))
        assert nested.allclose(direct, 1e-10)
