"""
Модуль анализа строго положительных непрерывных весов на окружности
"""

import logging
from dataclasses import dataclass, replace
from typing import Dict, Iterable, Optional, Tuple

import numpy as np

from neil_algebra.errors import AliasingWindowError, ReportFormatError, WeightNotPositiveError
from neil_algebra.trig_core import (
    DEFAULT_GRID, GridFn, TrigPoly, analyze, exp_analytic, exp_residual, grid_nodes,
    min_grid, next_pow2, synthesize,
)

logger = logging.getLogger(__name__)

DEFAULT_FLOOR = 1e-12
# отбрасываемые при построении exp(gamma) коэффициенты log(rho) (шум БПФ)
GAMMA_NOISE = 1e-15

BUILTIN_WEIGHTS = {
    "one": lambda t: np.ones_like(t),
    "e": lambda t: np.full_like(t, np.e),
    "abs1pz2": lambda t: np.abs(1 + np.exp(1j * t) / 2) ** 2,
    "abs1pz2sq": lambda t: np.abs(1 + np.exp(1j * t) / 2) ** 4,
    "exp2cos": lambda t: np.exp(2 * np.cos(t)),
    "twopcos2": lambda t: 2 + np.cos(2 * t),
}


@dataclass(frozen=True, eq=False)
class Weight:
    """Вес rho > 0, заданный отсчетами на сетке"""

    rho: GridFn
    floor: float = DEFAULT_FLOOR
    name: str = "grid"

    def __post_init__(self):
        samples = self.rho.samples
        scale = max(float(np.max(np.abs(samples))), 1.0)
        if np.max(np.abs(samples.imag)) > 1e-12 * scale:
            raise WeightNotPositiveError("вес имеет мнимую часть", operation="Weight")
        if self.floor <= 0:
            raise WeightNotPositiveError(f"нижняя граница {self.floor} <= 0", operation="Weight")
        low = float(np.min(samples.real))
        if low < self.floor:
            raise WeightNotPositiveError(f"min rho = {low:.3e} < {self.floor:.1e}",
                                         operation="Weight")
        object.__setattr__(self, "rho", GridFn(samples.real))

    @property
    def size(self) -> int:
        return self.rho.size

    @property
    def values(self) -> np.ndarray:
        return self.rho.samples.real

    @classmethod
    def from_samples(cls, samples: Iterable[float], floor: float = DEFAULT_FLOOR,
                     name: str = "grid") -> "Weight":
        return cls(GridFn(np.asarray(list(samples), dtype=float)), floor, name)

    @classmethod
    def from_fourier(cls, triples: Iterable[Tuple[int, float, float]], size: int = DEFAULT_GRID,
                     floor: float = DEFAULT_FLOOR, name: str = "fourier") -> "Weight":
        """
        Вес по коэффициентам Фурье (j, re, im); эрмитова симметрия достраивается

        Args:
            triples: тройки (частота, вещественная часть, мнимая часть)
            size: размер сетки
            floor: нижняя граница положительности
            name: имя веса в отчетах

        Returns:
            Weight с отсчетами на сетке
        """
        terms: Dict[int, complex] = {}
        for j, re, im in triples:
            j = int(j)
            c = complex(re, im)
            if j == 0:
                terms[0] = complex(c.real, 0.0)
                continue
            # пара j, -j задается значением с положительной частотой
            key, value = (j, c) if j > 0 else (-j, c.conjugate())
            if key in terms and abs(terms[key] - value) > 1e-12:
                raise ReportFormatError(f"несогласованные коэффициенты при j = +-{key}",
                                        operation="Weight.from_fourier")
            terms[key] = value
        pairs = [(0, terms.get(0, 0j))]
        for j, c in terms.items():
            if j > 0:
                pairs += [(j, c), (-j, c.conjugate())]
        poly = TrigPoly.from_terms(pairs)
        return cls(GridFn(synthesize(poly, size).samples.real), floor, name)

    @classmethod
    def builtin(cls, name: str, size: int = DEFAULT_GRID,
                floor: float = DEFAULT_FLOOR) -> "Weight":
        """Встроенный вес по имени (one, e, abs1pz2, abs1pz2sq, exp2cos, twopcos2)"""
        try:
            func = BUILTIN_WEIGHTS[name]
        except KeyError:
            raise ReportFormatError(f"неизвестный встроенный вес '{name}'",
                                    operation="Weight.builtin") from None
        return cls(GridFn(func(grid_nodes(size))), floor, name)

    @classmethod
    def from_record(cls, record: dict, size: int = DEFAULT_GRID,
                    floor: float = DEFAULT_FLOOR) -> "Weight":
        """
        Вес из записи {"kind": "grid"|"fourier"|"expr", "data": ...}

        Args:
            record: разобранная запись файла веса
            size: размер сетки для kind = fourier/expr
            floor: нижняя граница положительности

        Returns:
            Weight
        """
        kind = record.get("kind")
        data = record.get("data")
        if kind == "grid":
            return cls.from_samples(data, floor)
        if kind == "fourier":
            return cls.from_fourier([tuple(item) for item in data], size, floor)
        if kind == "expr":
            return cls.builtin(str(data), size, floor)
        raise ReportFormatError(f"неизвестный вид записи '{kind}'", operation="Weight.from_record")

    def scaled(self, factor: float) -> "Weight":
        """Вес factor * rho"""
        return Weight(GridFn(self.values * factor), self.floor * factor, f"{self.name}*{factor:g}")

    def rotated(self, steps: int) -> "Weight":
        """Вес rho(t - s) при сдвиге s = 2 pi steps / M"""
        return replace(self, rho=GridFn(np.roll(self.values, steps)),
                       name=f"{self.name}@{steps}")


@dataclass(frozen=True, eq=False)
class WeightAnalysis:
    """Данные Фурье log(rho) и константы C_rho, lambda"""

    C_rho: float
    lambda_moment: complex
    c1_log: complex
    gamma: TrigPoly
    c0: float
    band: int
    log_coeffs: TrigPoly
    log_tail_energy: float
    weight_name: str = "grid"


def default_band(size: int) -> int:
    return min(256, size // 4)


def analyze_weight(weight: Weight, band: Optional[int] = None) -> WeightAnalysis:
    """
    Константы Сеге и аналитическое дополнение gamma для веса

    Args:
        weight: строго положительный вес
        band: число сохраняемых коэффициентов log(rho) (по умолчанию min(256, M/4))

    Returns:
        WeightAnalysis; lambda_moment = rho^(1), c1_log = коэффициент log(rho) при j = 1
    """
    size = weight.size
    if band is None:
        band = default_band(size)
    if band < 1 or band > size // 2 - 1:
        raise AliasingWindowError(f"полоса {band} вне [1, {size // 2 - 1}]",
                                  operation="analyze_weight")

    log_grid = GridFn(np.log(weight.values))
    log_coeffs = analyze(log_grid, -band, band)
    c0 = float(log_coeffs.coefficient(0).real)
    gamma = TrigPoly(1, log_coeffs.window(1, band))
    lambda_moment = analyze(weight.rho, 1, 1).coefficient(1)

    total = float(np.mean(np.abs(log_grid.samples) ** 2))
    tail = max(total - log_coeffs.l2() ** 2, 0.0)
    logger.debug("analyze_weight(%s): C=%.6g, c1=%s, lambda=%s, хвост log=%.2e",
                 weight.name, c0, gamma.coefficient(1), lambda_moment, tail)

    return WeightAnalysis(C_rho=c0, lambda_moment=lambda_moment,
                          c1_log=gamma.coefficient(1), gamma=gamma, c0=c0, band=band,
                          log_coeffs=log_coeffs, log_tail_energy=tail,
                          weight_name=weight.name)


def outer_factor(analysis: WeightAnalysis, degree: int, normalized: bool = False) -> TrigPoly:
    """
    Внешний множитель E = exp(c0/2 + gamma) с |E|^2 = rho на окружности

    Args:
        analysis: результат analyze_weight
        degree: степень усечения K
        normalized: вернуть внешний множитель веса rho * exp(-C_rho), т.е. exp(gamma)

    Returns:
        TrigPoly на окне [0, K]; E(0) = exp(c0/2) > 0
    """
    shift = 0.0 if normalized else analysis.c0 / 2
    gamma = analysis.gamma.truncate(degree).normalize(GAMMA_NOISE)
    g = TrigPoly.constant(shift) + gamma
    outer = exp_analytic(g, degree)
    if logger.isEnabledFor(logging.DEBUG):
        logger.debug("outer_factor(%s): K=%d, хвост exp=%.2e", analysis.weight_name, degree,
                     exp_residual(g, outer))
    return outer


def outer_defect(weight: Weight, outer: TrigPoly) -> float:
    """Максимум по сетке веса ||E|^2 - rho|"""
    values = synthesize(outer, next_pow2(max(weight.size, min_grid(outer))))
    samples = np.abs(values.samples) ** 2
    if values.size != weight.size:
        samples = samples[::values.size // weight.size]
    return float(np.max(np.abs(samples - weight.values)))
