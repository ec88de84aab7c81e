"""
Модуль пространств Харди H^2_alpha: параметры, ядро, проекция P_alpha
"""

import logging
from dataclasses import dataclass
from typing import List

import numpy as np

from neil_algebra.errors import DegenerateParameterError, KernelPoleError, NotAnalyticError
from neil_algebra.trig_core import TrigPoly, Window, riesz_project

logger = logging.getLogger(__name__)

SPHERE_TOL = 1e-12
# |a| ниже порога считается нулем при канонизации
ZERO_A = 1e-14
DEFAULT_KERNEL_DEGREE = 200


@dataclass(frozen=True)
class Alpha:
    """
    Канонический параметр (a, b) на единичной сфере C^2: a >= 0, при a = 0 b = 1

    H^2_alpha = {f in H^2 : f(0) b = f'(0) a}, ортонормированный базис {a + bz, z^2, z^3, ...}.
    """

    a: complex
    b: complex

    def __post_init__(self):
        norm2 = abs(self.a) ** 2 + abs(self.b) ** 2
        if abs(norm2 - 1.0) > SPHERE_TOL:
            raise DegenerateParameterError(f"|a|^2 + |b|^2 = {norm2!r}", operation="Alpha")
        a = complex(self.a)
        if a.imag != 0 or a.real < 0 or (a.real == 0 and abs(self.b - 1) > SPHERE_TOL):
            raise DegenerateParameterError(f"неканонический представитель ({self.a}, {self.b}); "
                                           "используйте canonicalize_alpha", operation="Alpha")

    @classmethod
    def from_angles(cls, theta: float, phase: float) -> "Alpha":
        """Параметр a = cos(theta), b = sin(theta) e^{i phase}"""
        return canonicalize_alpha(np.cos(theta), np.sin(theta) * np.exp(1j * phase))

    def vector(self) -> np.ndarray:
        return np.array([self.a, self.b], dtype=np.complex128)

    def distance(self, other: "Alpha") -> float:
        return float(np.linalg.norm(self.vector() - other.vector()))

    def unit_poly(self) -> TrigPoly:
        """Единичный вектор F_alpha = a + bz"""
        return TrigPoly(0, [self.a, self.b])

    def key(self, digits: int = 12):
        return (round(float(np.real(self.a)), digits), round(self.b.real, digits),
                round(self.b.imag, digits))

    def __str__(self) -> str:
        return f"({self.a.real:.6g}, {self.b.real:.6g}{self.b.imag:+.6g}j)"


def canonicalize_alpha(a: complex, b: complex) -> Alpha:
    """
    Канонический представитель класса (a, b) ~ (ua, ub), |u| = 1

    Args:
        a: первая координата
        b: вторая координата

    Returns:
        Alpha с единичной нормой и вещественным a >= 0 (при a = 0 b = 1)
    """
    a, b = complex(a), complex(b)
    norm = np.hypot(abs(a), abs(b))
    if norm == 0 or not np.isfinite(norm):
        raise DegenerateParameterError(f"({a}, {b})", operation="canonicalize_alpha")
    a, b = a / norm, b / norm
    if abs(a) <= ZERO_A:
        return Alpha(0j, 1 + 0j)
    phase = abs(a) / a
    return Alpha(complex(abs(a)), b * phase)


def alpha_grid(theta_steps: int, phase_steps: int) -> List[Alpha]:
    """
    Каноническая сетка a = cos(theta), b = sin(theta) e^{i phase} без повторов

    Args:
        theta_steps: число значений theta на [0, pi/2]
        phase_steps: число фаз на [0, 2 pi)

    Returns:
        список различных Alpha
    """
    seen = {}
    for theta in np.linspace(0.0, np.pi / 2, theta_steps):
        for k in range(phase_steps):
            alpha = Alpha.from_angles(theta, 2 * np.pi * k / phase_steps)
            seen.setdefault(alpha.key(), alpha)
    return list(seen.values())


def membership_defect(f: TrigPoly, alpha: Alpha) -> float:
    """
    Невязка условия f(0) b = f'(0) a

    Args:
        f: аналитический многочлен
        alpha: параметр

    Returns:
        |f(0) b - f'(0) a|
    """
    if not f.is_analytic():
        raise NotAnalyticError(f"частоты от {f.lo}", operation="membership_defect")
    return abs(f.coefficient(0) * alpha.b - f.coefficient(1) * alpha.a)


@dataclass(frozen=True)
class KernelEval:
    value: complex
    z: complex
    w: complex


def kernel_eval(alpha: Alpha, z: complex, w: complex) -> KernelEval:
    """
    Воспроизводящее ядро k(z, w) = (a+bz) conj(a+bw) + z^2 conj(w)^2 / (1 - z conj(w))

    Args:
        alpha: параметр пространства
        z: точка круга
        w: точка круга

    Returns:
        KernelEval
    """
    z, w = complex(z), complex(w)
    if abs(z) >= 1 or abs(w) >= 1 or abs(z * w.conjugate()) >= 1:
        raise KernelPoleError(f"z={z}, w={w}", operation="kernel_eval")
    a, b = alpha.a, alpha.b
    value = (a + b * z) * (a + b * w).conjugate() + z ** 2 * w.conjugate() ** 2 / (1 - z * w.conjugate())
    return KernelEval(value=complex(value), z=z, w=w)


@dataclass(frozen=True, eq=False)
class KernelPoly:
    """Усеченное до степени K ядро k^alpha_w; is_zero для пары ((0,1), 0)"""

    poly: TrigPoly
    w: complex
    is_zero: bool


def kernel_poly(alpha: Alpha, w: complex, degree: int = DEFAULT_KERNEL_DEGREE) -> KernelPoly:
    """
    Коэффициенты k^alpha_w до степени K

    Args:
        alpha: параметр
        w: точка круга
        degree: степень усечения K >= 1

    Returns:
        KernelPoly
    """
    w = complex(w)
    if abs(w) >= 1:
        raise KernelPoleError(f"w={w}", operation="kernel_poly")
    head = (alpha.a + alpha.b * w).conjugate()
    coeffs = np.zeros(max(degree, 1) + 1, dtype=np.complex128)
    coeffs[0] = alpha.a * head
    coeffs[1] = alpha.b * head
    n = np.arange(2, coeffs.size)
    coeffs[2:] = w.conjugate() ** n
    is_zero = alpha.a == 0 and w == 0
    return KernelPoly(poly=TrigPoly(0, coeffs), w=w, is_zero=bool(is_zero))


def pairing(f: TrigPoly, g: TrigPoly) -> complex:
    """Скалярное произведение <f, g> в L^2 (по коэффициентам)"""
    lo, hi = min(f.lo, g.lo), max(f.hi, g.hi)
    return complex(np.vdot(g.window(lo, hi), f.window(lo, hi)))


def project_alpha(alpha: Alpha, F: TrigPoly) -> TrigPoly:
    """
    Ортогональная проекция P_alpha = F_alpha F_alpha^* + Q

    Args:
        alpha: параметр
        F: двусторонний ряд

    Returns:
        <F, a+bz> (a+bz) + проекция F на z^2 H^2
    """
    head = F.coefficient(0) * alpha.a.conjugate() + F.coefficient(1) * alpha.b.conjugate()
    return alpha.unit_poly().scale(head) + riesz_project(F, Window.SHIFTED)


def alpha_coordinates(alpha: Alpha, F: TrigPoly, degree: int) -> np.ndarray:
    """
    Координаты P_alpha F в базисе (a+bz, z^2, ..., z^R)

    Args:
        alpha: параметр
        F: ряд
        degree: старшая степень R

    Returns:
        вектор длины R
    """
    coeffs = F.window(0, degree)
    head = coeffs[0] * alpha.a.conjugate() + coeffs[1] * alpha.b.conjugate()
    return np.concatenate([[head], coeffs[2:]])


def projection_matrix(alpha: Alpha, degree: int) -> np.ndarray:
    """Матрица P_alpha на мономах z^0..z^degree"""
    matrix = np.eye(degree + 1, dtype=np.complex128)
    v = alpha.vector()
    matrix[:2, :2] = np.outer(v, v.conj())
    return matrix


def projection_gap(alpha: Alpha, beta: Alpha, testband: int = 4) -> float:
    """
    Норма P_alpha - P_beta на многочленах степени <= testband

    Args:
        alpha: первый параметр
        beta: второй параметр
        testband: степень подпространства (>= 1)

    Returns:
        наибольшее сингулярное число разности (не больше 2 ||alpha - beta||)
    """
    degree = max(testband, 1)
    diff = projection_matrix(alpha, degree) - projection_matrix(beta, degree)
    return float(np.linalg.norm(diff, 2))
