"""
Модуль конечных представлений операторов Теплица T^alpha_phi
"""

import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np
import scipy.linalg

from neil_algebra.hardy_alpha import Alpha
from neil_algebra.trig_core import (
    DEFAULT_GRID, TrigPoly, mean_and_norms, next_pow2, min_grid, reciprocal_analytic,
)

logger = logging.getLogger(__name__)

MAX_DEGREE = 1024


@dataclass(frozen=True, eq=False)
class ToeplitzRep:
    """
    Матрица T^alpha_phi: столбцы - базис (a+bz, z^2, ..., z^N),
    строки - базис (a+bz, z^2, ..., z^R) с R = N + max(phi.hi, 0) + 1
    """

    alpha: Alpha
    symbol: TrigPoly
    domain_degree: int
    range_degree: int
    matrix: np.ndarray
    exact: bool = True

    @property
    def shape(self) -> Tuple[int, int]:
        return self.matrix.shape

    def singular_values(self) -> np.ndarray:
        return np.linalg.svd(self.matrix, compute_uv=False)

    def columns(self, degree: int) -> np.ndarray:
        """Подматрица для меньшей степени области определения (столбцы вложены)"""
        return self.matrix[:, :degree]


def basis_polys(alpha: Alpha, degree: int) -> List[TrigPoly]:
    """Базис (a+bz, z^2, ..., z^N)"""
    return [alpha.unit_poly()] + [TrigPoly.monomial(n) for n in range(2, degree + 1)]


def assemble(alpha: Alpha, symbol: TrigPoly, degree: int) -> ToeplitzRep:
    """
    Точная прямоугольная матрица T^alpha_phi на усеченном базисе

    Args:
        alpha: параметр
        symbol: тригонометрический многочлен phi
        degree: N >= 2

    Returns:
        ToeplitzRep; ни один столбец не приближен
    """
    if degree < 2:
        raise ValueError(f"assemble: N={degree} < 2")
    if degree > MAX_DEGREE:
        raise ValueError(f"assemble: N={degree} > {MAX_DEGREE}")
    range_degree = degree + max(symbol.hi, 0) + 1

    # умножение на phi: мономы z^0..z^N -> z^0..z^R, элемент (k, n) = phi^(k - n)
    column = symbol.window(0, range_degree)
    row = symbol.window(-degree, 0)[::-1]
    mult = scipy.linalg.toeplitz(column, row)

    domain = np.zeros((degree + 1, degree), dtype=np.complex128)
    domain[0, 0] = alpha.a
    domain[1, 0] = alpha.b
    domain[2:, 1:] = np.eye(degree - 1)
    images = mult @ domain

    head = np.conj(alpha.a) * images[0] + np.conj(alpha.b) * images[1]
    matrix = np.vstack([head[None, :], images[2:]])
    return ToeplitzRep(alpha=alpha, symbol=symbol, domain_degree=degree,
                       range_degree=range_degree, matrix=matrix)


def square_compression(rep: ToeplitzRep) -> np.ndarray:
    """Конечное сечение: только строки базиса области определения"""
    return rep.matrix[:rep.domain_degree, :]


@dataclass(frozen=True)
class NormSweep:
    points: List[Tuple[int, float]]
    sup_norm: float


def operator_norm_estimate(alpha: Alpha, symbol: TrigPoly, degrees: Sequence[int],
                           grid_size: int = DEFAULT_GRID) -> NormSweep:
    """
    Наибольшее сингулярное число прямоугольного представления для каждого N

    Args:
        alpha: параметр
        symbol: символ
        degrees: возрастающий набор N
        grid_size: сетка для оценки ||phi||_inf

    Returns:
        NormSweep; значения не убывают по N и стремятся к ||phi||_inf
    """
    degrees = sorted(degrees)
    rep = assemble(alpha, symbol, degrees[-1])
    points = []
    for n in degrees:
        sv = np.linalg.svd(rep.columns(n), compute_uv=False)
        points.append((n, float(sv[0])))
    size = next_pow2(max(grid_size, min_grid(symbol)))
    return NormSweep(points=points, sup_norm=mean_and_norms(symbol, size).linf)


def classical_compare(symbol: TrigPoly, degree: int, alpha: Alpha) -> float:
    """
    Сравнить сжатие T^alpha_phi на {z^2..z^N} с классическим сечением T_phi на {1..z^(N-2)}

    Args:
        symbol: символ
        degree: N >= 2
        alpha: параметр

    Returns:
        максимум модуля разности матриц (должен быть <= 1e-12)
    """
    rep = assemble(alpha, symbol, degree)
    shifted = rep.matrix[1:degree, 1:degree]
    size = degree - 1
    classical = scipy.linalg.toeplitz(symbol.window(0, size - 1),
                                      symbol.window(-(size - 1), 0)[::-1])
    return float(np.max(np.abs(shifted - classical)))


def inverse_residual(alpha: Alpha, psi: TrigPoly, degree: int, series_degree: int = 256) -> float:
    """
    Невязка T^alpha_{1/psi} T^alpha_psi = I на усеченном базисе для обратимого psi

    Args:
        alpha: параметр
        psi: аналитический многочлен с psi'(0) = 0 и psi(0) != 0
        degree: N
        series_degree: степень усечения ряда 1/psi

    Returns:
        максимум модуля отклонения от единичной матрицы
    """
    inverse = reciprocal_analytic(psi, series_degree)
    forward = assemble(alpha, psi, degree)
    backward = assemble(alpha, inverse, forward.range_degree)
    product = backward.matrix[:, :forward.matrix.shape[0]] @ forward.matrix
    target = np.zeros_like(product)
    target[:degree, :degree] = np.eye(degree)
    return float(np.max(np.abs(product - target)))
