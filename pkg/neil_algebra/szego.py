"""
Модуль расстояний Сеге: замкнутые формулы, явный минимизатор и оракул наименьших квадратов
"""

import enum
import logging
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np
import scipy.linalg

from neil_algebra.errors import AliasingWindowError, DegenerateWeightError
from neil_algebra.trig_core import TrigPoly, analyze
from neil_algebra.weights import Weight, WeightAnalysis, analyze_weight, outer_factor

logger = logging.getLogger(__name__)

MAX_ORACLE_DEGREE = 512
VALID_TOL = 1e-10
VERDICT_TOL = 1e-6
STABLE_TOL = 1e-8


class Constraint(enum.Enum):
    NEIL = "neil"  # span z^2..z^N
    CLASSICAL = "classical"  # span z^1..z^N

    @property
    def first_degree(self) -> int:
        return 2 if self is Constraint.NEIL else 1


class Variant(enum.Enum):
    PAPER = "paper"  # lambda = rho^(1)
    LOG = "log"  # lambda = c1(log rho)


class Verdict(enum.Enum):
    PAPER_FORM = "paper-form-matches"
    LOG_FORM = "log-form-matches"
    BOTH = "both-match"
    NEITHER = "neither-matches"


def classical_closed_form(analysis: WeightAnalysis) -> float:
    """exp(C_rho) - расстояние от 1 до многочленов без свободного члена"""
    return float(np.exp(analysis.C_rho))


@dataclass(frozen=True)
class NeilClosedForms:
    paper_variant: float
    log_variant: float


def neil_closed_forms(analysis: WeightAnalysis) -> NeilClosedForms:
    """
    Оба варианта формулы exp(C) + exp(-C) |lambda|^2

    Args:
        analysis: результат analyze_weight

    Returns:
        NeilClosedForms: paper_variant с lambda = rho^(1), log_variant = exp(C)(1 + |c1|^2)
    """
    c = analysis.C_rho
    paper = np.exp(c) + np.exp(-c) * abs(analysis.lambda_moment) ** 2
    log_form = np.exp(c) * (1 + abs(analysis.c1_log) ** 2)
    return NeilClosedForms(paper_variant=float(paper), log_variant=float(log_form))


def oracle_distance(weight: Weight, constraint: Constraint, degree: int) -> float:
    """
    min ||1 - p||^2 в L^2(rho) по p из span{z^k : first <= k <= N}

    Нормальные уравнения с матрицей Грама G_{kj} = rho^(k - j) и правой частью rho^(k).

    Args:
        weight: строго положительный вес
        constraint: NEIL (z^2..z^N) или CLASSICAL (z..z^N)
        degree: N

    Returns:
        минимальное значение
    """
    first = constraint.first_degree
    if degree < first:
        raise ValueError(f"oracle_distance: N={degree} < {first}")
    if degree > MAX_ORACLE_DEGREE:
        raise AliasingWindowError(f"N={degree} > {MAX_ORACLE_DEGREE}", operation="oracle_distance")
    if degree > weight.size // 2 - 1:
        raise AliasingWindowError(f"N={degree} > M/2-1={weight.size // 2 - 1}",
                                  operation="oracle_distance")

    moments = analyze(weight.rho, 0, degree).coeffs
    column = moments[:degree - first + 1]
    gram = scipy.linalg.toeplitz(column)
    load = moments[first:degree + 1]
    try:
        factor = scipy.linalg.cho_factor(gram, lower=True)
    except np.linalg.LinAlgError as e:
        raise DegenerateWeightError(str(e), operation="oracle_distance") from e
    solution = scipy.linalg.cho_solve(factor, load)
    return float(moments[0].real - np.vdot(load, solution).real)


@dataclass(frozen=True, eq=False)
class Minimizer:
    f: TrigPoly
    objective: float
    valid: bool
    variant: Variant
    lam: complex
    residual: TrigPoly  # E_normalized - f = 1 + lam z


def explicit_minimizer(analysis: WeightAnalysis, variant: Variant, degree: int = 64) -> Minimizer:
    """
    Кандидат f = exp(gamma) - (1 + |lambda|^2) k_0^sigma в z^2 H^2

    Args:
        analysis: результат analyze_weight
        variant: PAPER (lambda = rho^(1)) или LOG (lambda = c1 log rho)
        degree: степень усечения внешнего множителя K

    Returns:
        Minimizer; valid = коэффициенты f при j = 0, 1 нулевые
    """
    lam = analysis.lambda_moment if variant is Variant.PAPER else analysis.c1_log
    outer = outer_factor(analysis, degree, normalized=True)
    # (1 + |lam|^2) k_0^sigma = 1 + lam z
    residual = TrigPoly(0, [1.0, lam])
    f = outer - residual
    valid = abs(f.coefficient(0)) <= VALID_TOL and abs(f.coefficient(1)) <= VALID_TOL
    objective = float(np.exp(analysis.C_rho) * residual.l2() ** 2)
    if not valid:
        logger.debug("explicit_minimizer(%s): f(0)=%s, f'(0)=%s", variant.value,
                     f.coefficient(0), f.coefficient(1))
    return Minimizer(f=f, objective=objective, valid=valid, variant=variant, lam=complex(lam),
                     residual=residual)


def _sweep(start: int, stop: int) -> List[int]:
    degrees = []
    n = start
    while n < stop:
        degrees.append(n)
        n *= 2
    degrees.append(stop)
    return degrees


@dataclass(eq=False)
class SzegoReport:
    """Отчет сравнения оракула с обеими замкнутыми формулами"""

    weight_name: str
    C_rho: float
    lambda_moment: complex
    c1_log: complex
    classical_closed: float
    neil_closed_paper: float
    neil_closed_log: float
    oracle_values: List[Tuple[int, float]]
    classical_oracle_values: List[Tuple[int, float]]
    stabilized: bool
    minimizer: TrigPoly
    minimizer_variant: Variant
    minimizer_objective: float
    verdict: Verdict
    log_tail_energy: float = 0.0
    extra: dict = field(default_factory=dict)

    @property
    def oracle(self) -> float:
        return self.oracle_values[-1][1]

    def to_record(self):
        """Плоская запись (payload, tables) для отчетов"""
        payload = {
            "weight": self.weight_name,
            "C_rho": self.C_rho,
            "lambda_moment": self.lambda_moment,
            "c1_log": self.c1_log,
            "classical_closed": self.classical_closed,
            "neil_closed_paper": self.neil_closed_paper,
            "neil_closed_log": self.neil_closed_log,
            "oracle": self.oracle,
            "stabilized": self.stabilized,
            "minimizer_variant": self.minimizer_variant.value,
            "minimizer_objective": self.minimizer_objective,
            "verdict": self.verdict.value,
            "log_tail_energy": self.log_tail_energy,
        }
        tables = {
            "oracle_values": (["N", "value"], [list(row) for row in self.oracle_values]),
            "classical_oracle_values": (["N", "value"],
                                        [list(row) for row in self.classical_oracle_values]),
            "minimizer": (["j", "re", "im"],
                          [[j, c.real, c.imag] for j, c in self.minimizer.normalize(1e-14).terms()]),
        }
        return payload, tables


def _matches(value: float, target: float) -> bool:
    return abs(value - target) <= VERDICT_TOL * (1 + abs(value))


def adjudicate_lambda(weight: Weight, n_max: int = 64, band: Optional[int] = None,
                      degree: int = 64) -> SzegoReport:
    """
    Решить эмпирически, какая из формул согласуется с оракулом

    Args:
        weight: вес
        n_max: наибольшая степень в переборе N = 2, 4, 8, ..., n_max (>= 8)
        band: полоса log(rho) для analyze_weight
        degree: степень усечения внешнего множителя

    Returns:
        SzegoReport
    """
    if n_max < 8:
        raise ValueError(f"adjudicate_lambda: n_max={n_max} < 8")
    analysis = analyze_weight(weight, band)
    closed = neil_closed_forms(analysis)

    degrees = _sweep(2, n_max)
    oracle_values = [(n, oracle_distance(weight, Constraint.NEIL, n)) for n in degrees]
    classical_values = [(n, oracle_distance(weight, Constraint.CLASSICAL, n)) for n in degrees]

    value = oracle_values[-1][1]
    previous = oracle_values[-2][1]
    stabilized = abs(value - previous) <= STABLE_TOL * (1 + value)
    if not stabilized:
        logger.warning("adjudicate_lambda(%s): оракул не стабилизировался (%.3e)",
                       weight.name, abs(value - previous))

    paper_ok = _matches(value, closed.paper_variant)
    log_ok = _matches(value, closed.log_variant)
    if paper_ok and log_ok:
        verdict = Verdict.BOTH
    elif paper_ok:
        verdict = Verdict.PAPER_FORM
    elif log_ok:
        verdict = Verdict.LOG_FORM
    else:
        verdict = Verdict.NEITHER

    candidates = [explicit_minimizer(analysis, v, degree) for v in (Variant.PAPER, Variant.LOG)]
    valid = [m for m in candidates if m.valid] or candidates[-1:]
    chosen = valid[0]

    return SzegoReport(
        weight_name=weight.name,
        C_rho=analysis.C_rho,
        lambda_moment=analysis.lambda_moment,
        c1_log=analysis.c1_log,
        classical_closed=classical_closed_form(analysis),
        neil_closed_paper=closed.paper_variant,
        neil_closed_log=closed.log_variant,
        oracle_values=oracle_values,
        classical_oracle_values=classical_values,
        stabilized=stabilized,
        minimizer=chosen.f,
        minimizer_variant=chosen.variant,
        minimizer_objective=chosen.objective,
        verdict=verdict,
        log_tail_energy=analysis.log_tail_energy,
    )


def lambda_remark_check(weight: Weight, degree: int = 64) -> Tuple[complex, float]:
    """
    Сравнить классический оракул и оракул для z^2 H^2

    Args:
        weight: вес
        degree: степень N

    Returns:
        (lambda = rho^(1), разность оракулов neil - classical >= 0)
    """
    lam = analyze(weight.rho, 1, 1).coefficient(1)
    gap = oracle_distance(weight, Constraint.NEIL, degree) - oracle_distance(
        weight, Constraint.CLASSICAL, degree)
    return lam, gap
