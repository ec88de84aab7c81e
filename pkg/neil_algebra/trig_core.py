"""
Модуль арифметики тригонометрических многочленов и равномерных сеток на окружности
"""

import enum
import logging
from dataclasses import dataclass
from typing import Iterable, Tuple

import numpy as np

from neil_algebra.errors import AliasingWindowError, NotAnalyticError

logger = logging.getLogger(__name__)

DEFAULT_GRID = 1024
DEFAULT_TOL = 1e-10
# до этой степени exp(g) считается точной рекуррентой, дальше через сетку
EXP_RECURRENCE_MAX_DEGREE = 64


def next_pow2(n: int) -> int:
    """Наименьшая степень двойки, не меньшая n (и не меньшая 2)"""
    m = 2
    while m < n:
        m *= 2
    return m


def _as_readonly(values) -> np.ndarray:
    arr = np.array(values, dtype=np.complex128).ravel()
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class TrigPoly:
    """
    Конечный двусторонний ряд Фурье sum_{j=lo}^{hi} c_j e^{ijt}

    coeffs[k] - коэффициент при частоте lo + k.
    """

    lo: int
    coeffs: np.ndarray

    def __post_init__(self):
        arr = _as_readonly(self.coeffs)
        if arr.size == 0:
            raise ValueError("TrigPoly: пустой список коэффициентов")
        object.__setattr__(self, "lo", int(self.lo))
        object.__setattr__(self, "coeffs", arr)

    @property
    def hi(self) -> int:
        return self.lo + self.coeffs.size - 1

    @classmethod
    def zero(cls) -> "TrigPoly":
        return cls(0, [0.0])

    @classmethod
    def constant(cls, value: complex) -> "TrigPoly":
        return cls(0, [value])

    @classmethod
    def monomial(cls, j: int, value: complex = 1.0) -> "TrigPoly":
        return cls(j, [value])

    @classmethod
    def from_terms(cls, terms: Iterable[Tuple[int, complex]]) -> "TrigPoly":
        """
        Собрать многочлен из пар (частота, коэффициент); повторы суммируются

        Args:
            terms: итерируемое пар (j, c_j)

        Returns:
            TrigPoly с минимальным окном, покрывающим все частоты
        """
        terms = [(int(j), complex(c)) for j, c in terms]
        if not terms:
            return cls.zero()
        lo = min(j for j, _ in terms)
        hi = max(j for j, _ in terms)
        coeffs = np.zeros(hi - lo + 1, dtype=np.complex128)
        for j, c in terms:
            coeffs[j - lo] += c
        return cls(lo, coeffs)

    def coefficient(self, j: int) -> complex:
        """Коэффициент при частоте j (ноль вне окна)"""
        if j < self.lo or j > self.hi:
            return 0j
        return complex(self.coeffs[j - self.lo])

    def window(self, lo: int, hi: int) -> np.ndarray:
        """
        Коэффициенты на окне [lo, hi] с нулями вне носителя

        Args:
            lo: нижняя частота окна
            hi: верхняя частота окна

        Returns:
            массив длины hi - lo + 1
        """
        out = np.zeros(max(hi - lo + 1, 0), dtype=np.complex128)
        a = max(lo, self.lo)
        b = min(hi, self.hi)
        if a <= b:
            out[a - lo:b - lo + 1] = self.coeffs[a - self.lo:b - self.lo + 1]
        return out

    def normalize(self, tol: float = 0.0) -> "TrigPoly":
        """Отбросить нулевые (по модулю <= tol) хвосты слева и справа"""
        nonzero = np.flatnonzero(np.abs(self.coeffs) > tol)
        if nonzero.size == 0:
            return TrigPoly.zero()
        first, last = nonzero[0], nonzero[-1]
        return TrigPoly(self.lo + first, self.coeffs[first:last + 1])

    def truncate(self, hi: int) -> "TrigPoly":
        """Отбросить частоты выше hi"""
        if hi < self.lo:
            return TrigPoly.zero()
        return TrigPoly(self.lo, self.coeffs[:hi - self.lo + 1])

    def is_analytic(self, tol: float = 0.0) -> bool:
        return self.lo >= 0 or bool(np.all(np.abs(self.window(self.lo, -1)) <= tol))

    def evaluate(self, z) -> np.ndarray:
        """
        Значение sum c_j z^j в точках z (z != 0, если есть отрицательные частоты)

        Args:
            z: комплексное число или массив

        Returns:
            значения ряда в тех же точках
        """
        z = np.asarray(z, dtype=np.complex128)
        powers = np.arange(self.lo, self.hi + 1)
        return np.sum(self.coeffs * z[..., None] ** powers, axis=-1)

    def l2(self) -> float:
        """Норма L^2(dt/2pi) по равенству Парсеваля"""
        return float(np.sqrt(np.sum(np.abs(self.coeffs) ** 2)))

    def scale(self, value: complex) -> "TrigPoly":
        return TrigPoly(self.lo, self.coeffs * value)

    def __add__(self, other: "TrigPoly") -> "TrigPoly":
        lo = min(self.lo, other.lo)
        hi = max(self.hi, other.hi)
        return TrigPoly(lo, self.window(lo, hi) + other.window(lo, hi))

    def __sub__(self, other: "TrigPoly") -> "TrigPoly":
        return self + other.scale(-1.0)

    def __neg__(self) -> "TrigPoly":
        return self.scale(-1.0)

    def distance(self, other: "TrigPoly") -> float:
        """Максимум модуля разности коэффициентов"""
        diff = (self - other).coeffs
        return float(np.max(np.abs(diff)))

    def allclose(self, other: "TrigPoly", atol: float = DEFAULT_TOL) -> bool:
        return self.distance(other) <= atol

    def terms(self):
        """Пары (j, c_j) с ненулевыми коэффициентами"""
        return [(self.lo + k, complex(c)) for k, c in enumerate(self.coeffs) if c != 0]

    def __repr__(self) -> str:
        return f"TrigPoly(lo={self.lo}, coeffs={np.round(self.coeffs, 12).tolist()})"


@dataclass(frozen=True, eq=False)
class GridFn:
    """Комплексные отсчеты в узлах t_k = 2 pi k / M, k = 0..M-1"""

    samples: np.ndarray

    def __post_init__(self):
        arr = _as_readonly(self.samples)
        m = arr.size
        if m < 2 or m & (m - 1):
            raise AliasingWindowError(f"размер сетки {m} не является степенью двойки >= 2",
                                      operation="GridFn")
        object.__setattr__(self, "samples", arr)

    @property
    def size(self) -> int:
        return self.samples.size

    @classmethod
    def from_function(cls, func, size: int = DEFAULT_GRID) -> "GridFn":
        """Отсчеты функции func(t) на сетке из size узлов"""
        return cls(func(grid_nodes(size)))

    def map(self, func) -> "GridFn":
        return GridFn(func(self.samples))


def grid_nodes(size: int) -> np.ndarray:
    """Узлы t_k = 2 pi k / M"""
    return 2.0 * np.pi * np.arange(size) / size


class Window(enum.Enum):
    """Именованные частотные окна для проекций Рисса"""

    ANALYTIC = "analytic"  # j >= 0
    STRICT = "strictly-analytic"  # j >= 1
    SHIFTED = "shifted"  # j >= 2
    M_WINDOW = "m-window"  # j = -1 или j >= 1

    def keeps(self, freqs: np.ndarray) -> np.ndarray:
        if self is Window.ANALYTIC:
            return freqs >= 0
        if self is Window.STRICT:
            return freqs >= 1
        if self is Window.SHIFTED:
            return freqs >= 2
        return (freqs == -1) | (freqs >= 1)


def analyze(g: GridFn, lo: int, hi: int) -> TrigPoly:
    """
    Коэффициенты Фурье отсчетов на окне частот [lo, hi]

    Args:
        g: отсчеты на сетке
        lo: нижняя частота
        hi: верхняя частота

    Returns:
        TrigPoly с коэффициентами (1/M) sum_k g(t_k) e^{-ij t_k}
    """
    if hi < lo:
        raise ValueError(f"пустое окно [{lo}, {hi}]")
    m = g.size
    # |j| = M/2 совпадает с -M/2
    if hi - lo + 1 > m or max(abs(lo), abs(hi)) > m // 2 - 1:
        raise AliasingWindowError(f"окно [{lo}, {hi}] не помещается в сетку M={m}",
                                  operation="analyze")
    spectrum = np.fft.fft(g.samples) / m
    return TrigPoly(lo, spectrum[np.arange(lo, hi + 1) % m])


def min_grid(p: TrigPoly) -> int:
    """Минимальный безопасный размер сетки для многочлена p"""
    return 2 * (max(abs(p.lo), abs(p.hi)) + 1)


def synthesize(p: TrigPoly, size: int) -> GridFn:
    """
    Значения многочлена в узлах сетки

    Args:
        p: тригонометрический многочлен
        size: число узлов M

    Returns:
        GridFn с отсчетами p(t_k)
    """
    if size < min_grid(p):
        raise AliasingWindowError(f"M={size} меньше {min_grid(p)} для окна [{p.lo}, {p.hi}]",
                                  operation="synthesize")
    buf = np.zeros(size, dtype=np.complex128)
    np.add.at(buf, np.arange(p.lo, p.hi + 1) % size, p.coeffs)
    return GridFn(np.fft.ifft(buf) * size)


def multiply(p: TrigPoly, q: TrigPoly) -> TrigPoly:
    """Точное произведение (свертка коэффициентов)"""
    return TrigPoly(p.lo + q.lo, np.convolve(p.coeffs, q.coeffs))


def conjugate(p: TrigPoly) -> TrigPoly:
    """Комплексное сопряжение на окружности: коэффициент при -j равен conj(c_j)"""
    return TrigPoly(-p.hi, np.conj(p.coeffs[::-1]))


def riesz_project(p: TrigPoly, keep: Window) -> TrigPoly:
    """
    Обнулить коэффициенты вне именованного окна частот

    Args:
        p: многочлен
        keep: одно из окон Window

    Returns:
        проекция p (идемпотентна и не увеличивает норму l2)
    """
    if not isinstance(keep, Window):
        raise TypeError("допускаются только именованные окна Window")
    freqs = np.arange(p.lo, p.hi + 1)
    return TrigPoly(p.lo, np.where(keep.keeps(freqs), p.coeffs, 0))


@dataclass(frozen=True)
class Norms:
    mean: complex
    l1: float
    l2: float
    linf: float


def mean_and_norms(p: TrigPoly, size: int = DEFAULT_GRID) -> Norms:
    """
    Среднее и нормы L^1, L^2, L^inf многочлена

    Args:
        p: многочлен
        size: размер сетки для квадратуры L^1 и максимума L^inf

    Returns:
        Norms; mean и l2 точные (по коэффициентам), l1 и linf по сетке
    """
    values = np.abs(synthesize(p, size).samples)
    return Norms(mean=p.coefficient(0), l1=float(np.mean(values)),
                 l2=p.l2(), linf=float(np.max(values)))


def _analytic_part(g: TrigPoly, degree: int, operation: str) -> np.ndarray:
    if not g.is_analytic():
        raise NotAnalyticError(f"частоты от {g.lo}", operation=operation)
    return g.window(0, degree)


def exp_analytic(g: TrigPoly, degree: int) -> TrigPoly:
    """
    Коэффициенты 0..K функции exp(g) для аналитического многочлена g

    Частоты g выше K не влияют на коэффициенты 0..K и отбрасываются.

    Args:
        g: многочлен с носителем j >= 0
        degree: степень усечения K

    Returns:
        TrigPoly на окне [0, K]
    """
    coeffs = _analytic_part(g, degree, "exp_analytic")
    nonzero = np.flatnonzero(coeffs[1:])
    g_degree = int(nonzero[-1]) + 1 if nonzero.size else 0

    if g_degree <= EXP_RECURRENCE_MAX_DEGREE:
        # E' = g' E:  n e_n = sum_k k g_k e_{n-k}
        kg = np.arange(g_degree + 1) * coeffs[:g_degree + 1]
        out = np.zeros(degree + 1, dtype=np.complex128)
        out[0] = np.exp(coeffs[0])
        for n in range(1, degree + 1):
            m = min(n, g_degree)
            out[n] = np.dot(kg[1:m + 1], out[n - 1::-1][:m]) / n
        return TrigPoly(0, out)

    size = next_pow2(4 * (degree + 1))
    logger.debug("exp_analytic: степень %d, сетка M=%d", g_degree, size)
    samples = synthesize(TrigPoly(0, coeffs), size).map(np.exp)
    return analyze(samples, 0, degree)


def exp_residual(g: TrigPoly, exp_g: TrigPoly, size: int = DEFAULT_GRID) -> float:
    """Максимум по сетке |exp(g) - E| (хвост усечения exp_analytic)"""
    size = max(size, min_grid(g), min_grid(exp_g))
    size = next_pow2(size)
    exact = np.exp(synthesize(g, size).samples)
    return float(np.max(np.abs(exact - synthesize(exp_g, size).samples)))


def reciprocal_analytic(p: TrigPoly, degree: int) -> TrigPoly:
    """
    Коэффициенты 0..K ряда 1/p для аналитического многочлена с p(0) != 0

    Args:
        p: аналитический многочлен
        degree: степень усечения K

    Returns:
        TrigPoly на окне [0, K]
    """
    coeffs = _analytic_part(p, max(degree, p.hi), "reciprocal_analytic")
    if coeffs[0] == 0:
        raise ZeroDivisionError("reciprocal_analytic: p(0) = 0")
    out = np.zeros(degree + 1, dtype=np.complex128)
    out[0] = 1.0 / coeffs[0]
    for n in range(1, degree + 1):
        m = min(n, coeffs.size - 1)
        out[n] = -np.dot(coeffs[1:m + 1], out[n - 1::-1][:m]) / coeffs[0]
    return TrigPoly(0, out)


def random_poly(rng: np.random.Generator, lo: int, hi: int,
                scale: float = 1.0) -> TrigPoly:
    """Случайный многочлен с нормальными комплексными коэффициентами на [lo, hi]"""
    n = hi - lo + 1
    return TrigPoly(lo, scale * (rng.standard_normal(n) + 1j * rng.standard_normal(n)))
