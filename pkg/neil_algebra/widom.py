"""
Модуль анализа типа Видома: константы eps_N(alpha), двусторонние оценки dist(phi, A),
факторизация в M и обратимость в алгебре Нейла
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple, Union

import cvxpy as cp
import numpy as np
from numpy.polynomial import polynomial as P
from tqdm import tqdm
from tqdm.contrib.concurrent import thread_map

from neil_algebra.errors import (
    AliasingWindowError, BoundaryZeroError, EmptyWitnessError, MinimaxNotConvergedError,
    ReportFormatError, SymbolNotInNeilAlgebraError, SymbolNotUnimodularError,
)
from neil_algebra.hardy_alpha import (
    Alpha, alpha_grid, canonicalize_alpha, membership_defect, project_alpha,
)
from neil_algebra.toeplitz_alpha import assemble
from neil_algebra.trig_core import (
    DEFAULT_GRID, GridFn, TrigPoly, conjugate, grid_nodes, mean_and_norms, min_grid, multiply,
    next_pow2, synthesize,
)
from neil_algebra.weights import Weight, analyze_weight, outer_factor

logger = logging.getLogger(__name__)

DEGENERATE_EPS = 1e-8
ROOT_MARGIN = 1e-8
DISTANCE_MARGIN = 1e-4
DUAL_MARGIN = 1e-8
BRACKET_TOL = 1e-6


@dataclass(frozen=True, eq=False)
class MElement:
    """Элемент M: носитель в {-1} U {1, 2, ...}"""

    poly: TrigPoly
    name: str = "h"

    def __post_init__(self):
        poly = self.poly.normalize()
        scale = max(float(np.max(np.abs(poly.coeffs))), 1.0)
        low = poly.window(poly.lo, -2) if poly.lo <= -2 else np.zeros(0)
        if np.any(np.abs(low) > 1e-14 * scale) or abs(poly.coefficient(0)) > 1e-14 * scale:
            raise ReportFormatError(f"носитель вне окна M: [{poly.lo}, {poly.hi}]",
                                    operation="MElement")
        freqs = np.arange(poly.lo, poly.hi + 1)
        cleaned = np.where((freqs == -1) | (freqs >= 1), poly.coeffs, 0)
        object.__setattr__(self, "poly", TrigPoly(poly.lo, cleaned).normalize())

    @classmethod
    def from_triples(cls, triples, name: str = "h") -> "MElement":
        return cls(TrigPoly.from_terms((j, complex(re, im)) for j, re, im in triples), name)

    def is_zero(self) -> bool:
        return not np.any(self.poly.coeffs)


def default_witnesses() -> List[MElement]:
    """Фиксированная библиотека свидетелей {e^{-it}, e^{it}, e^{2it}}"""
    return [MElement(TrigPoly.monomial(-1), "e^{-it}"), MElement(TrigPoly.monomial(1), "e^{it}"),
            MElement(TrigPoly.monomial(2), "e^{2it}")]


def epsilon_alpha(alpha: Alpha, symbol: TrigPoly, degree: int) -> float:
    """
    Наименьшее сингулярное число точного прямоугольного представления

    Args:
        alpha: параметр
        symbol: символ
        degree: N >= 2

    Returns:
        eps_N(alpha) - верхняя оценка для константы ограниченности снизу
    """
    rep = assemble(alpha, symbol, degree)
    return float(np.linalg.svd(rep.matrix, compute_uv=False)[-1])


def unimodular_defect(symbol: TrigPoly, grid_size: int = DEFAULT_GRID) -> float:
    """max | |phi| - 1 | по сетке"""
    size = next_pow2(max(grid_size, min_grid(symbol)))
    return float(np.max(np.abs(np.abs(synthesize(symbol, size).samples) - 1.0)))


def _degree_sweep(degree: int) -> List[int]:
    return sorted({max(2, degree // 4), max(2, degree // 2), degree})


@dataclass(eq=False)
class AlphaScan:
    """Результат сканирования eps_N(alpha) по сетке параметров"""

    alpha_grid: List[Alpha]
    eps_table: Dict[Alpha, List[Tuple[int, float]]]
    min_eps: float
    argmin_alpha: Alpha
    some_alpha_degenerate: bool
    unimodular_defect: float


def _eps_profile(symbol: TrigPoly, degree: int, degrees: List[int]):
    def profile(alpha: Alpha) -> List[Tuple[int, float]]:
        rep = assemble(alpha, symbol, degree)
        return [(n, float(np.linalg.svd(rep.columns(n), compute_uv=False)[-1])) for n in degrees]
    return profile


def scan_alpha(symbol: TrigPoly, theta_steps: int, phi_steps: int, degree: int,
               verdict_mode: bool = False, grid_size: int = DEFAULT_GRID,
               unimodular_tol: float = 1e-6, tail: float = 0.0,
               show_progress: bool = False, workers: int = 1) -> AlphaScan:
    """
    Вычислить eps_N(alpha) на канонической сетке a = cos(theta), b = sin(theta) e^{i phase}

    Args:
        symbol: символ phi
        theta_steps: число значений theta (>= 4)
        phi_steps: число фаз (>= 4)
        degree: N
        verdict_mode: требовать унимодулярность символа
        grid_size: сетка проверки унимодулярности
        unimodular_tol: допуск унимодулярности
        tail: оценка хвоста усечения символа (добавляется к допускам)
        show_progress: показывать прогресс-бар
        workers: число потоков

    Returns:
        AlphaScan
    """
    if theta_steps < 4 or phi_steps < 4:
        raise ValueError("scan_alpha: шаги сетки должны быть >= 4")
    defect = unimodular_defect(symbol, grid_size)
    if verdict_mode and defect > unimodular_tol + tail:
        raise SymbolNotUnimodularError(f"max||phi|-1| = {defect:.3e}", operation="scan_alpha")

    grid = alpha_grid(theta_steps, phi_steps)
    degrees = _degree_sweep(degree)
    profile = _eps_profile(symbol, degree, degrees)
    if workers > 1:
        profiles = thread_map(profile, grid, max_workers=workers, desc="Сканирование alpha",
                              disable=not show_progress)
    else:
        profiles = [profile(alpha) for alpha in tqdm(grid, desc="Сканирование alpha",
                                                     disable=not show_progress)]

    eps_table = dict(zip(grid, profiles))
    final = [values[-1][1] for values in profiles]
    best = int(np.argmin(final))
    min_eps = final[best]
    degenerate = min_eps <= DEGENERATE_EPS + tail
    logger.debug("scan_alpha: %d точек, min eps=%.3e при alpha=%s", len(grid), min_eps, grid[best])
    return AlphaScan(alpha_grid=grid, eps_table=eps_table, min_eps=min_eps,
                     argmin_alpha=grid[best], some_alpha_degenerate=degenerate,
                     unimodular_defect=defect)


def dual_lower_bound(symbol: TrigPoly, h: MElement, grid_size: int = DEFAULT_GRID) -> float:
    """
    Сертифицированная нижняя оценка dist(phi, A) >= |mean(phi h)| / ||h||_1

    Args:
        symbol: символ
        h: свидетель из M
        grid_size: сетка для квадратуры ||h||_1

    Returns:
        значение оценки
    """
    if h.is_zero():
        raise EmptyWitnessError(h.name, operation="dual_lower_bound")
    pairing = multiply(symbol, h.poly).coefficient(0)
    size = next_pow2(max(grid_size, min_grid(h.poly)))
    return float(abs(pairing) / mean_and_norms(h.poly, size).l1)


@dataclass(frozen=True, eq=False)
class PrimalBound:
    value: float  # достигнутый дискретный максимум
    refined: Optional[float]  # максимум невязки на сетке в 8 раз мельче
    p: TrigPoly
    status: str
    grid_size: int


def primal_upper_bound(symbol: Union[TrigPoly, GridFn], degree: int = 16,
                       grid_size: Optional[int] = None) -> PrimalBound:
    """
    Минимакс max_k |phi(t_k) - p(t_k)| по p = c_0 + sum_{j=2}^K c_j z^j

    Args:
        symbol: многочлен или отсчеты на сетке
        degree: K >= 2
        grid_size: M >= 8K (для GridFn берется размер сетки)

    Returns:
        PrimalBound
    """
    if degree < 2:
        raise ValueError(f"primal_upper_bound: K={degree} < 2")
    poly = symbol if isinstance(symbol, TrigPoly) else None
    if poly is None:
        samples = symbol.samples
        size = symbol.size
    else:
        size = grid_size or next_pow2(max(8 * degree, 4 * min_grid(poly)))
        samples = synthesize(poly, size).samples
    if size < 8 * degree:
        raise AliasingWindowError(f"M={size} < 8K={8 * degree}", operation="primal_upper_bound")

    freqs = np.array([0] + list(range(2, degree + 1)))
    basis = np.exp(1j * np.outer(grid_nodes(size), freqs))
    c = cp.Variable(freqs.size, complex=True)
    problem = cp.Problem(cp.Minimize(cp.max(cp.abs(samples - basis @ c))))
    try:
        problem.solve()
    except cp.error.SolverError:
        problem.solve(solver=cp.SCS)
    if problem.status not in (cp.OPTIMAL, cp.OPTIMAL_INACCURATE) or c.value is None:
        raise MinimaxNotConvergedError(f"статус {problem.status}", operation="primal_upper_bound")

    coeffs = np.asarray(c.value)
    value = float(np.max(np.abs(samples - basis @ coeffs)))
    p = TrigPoly.from_terms(zip(freqs.tolist(), coeffs))
    refined = None
    if poly is not None:
        fine = next_pow2(max(8 * size, min_grid(poly - p)))
        refined = float(np.max(np.abs(synthesize(poly - p, fine).samples)))
    logger.debug("primal_upper_bound: K=%d, M=%d, статус=%s, значение=%.6g, уточнение=%s",
                 degree, size, problem.status, value, refined)
    return PrimalBound(value=value, refined=refined, p=p, status=problem.status, grid_size=size)


@dataclass(frozen=True)
class FactorResiduals:
    factorization: float  # ||h - f g||_1
    norm_split: float  # | ||h||_1 - ||f||_2 ||g||_2 |
    ortho: float  # ||P_alpha conj(g)||_2
    membership: float  # membership_defect(f, alpha)

    def worst(self) -> float:
        return max(self.factorization, self.norm_split, self.ortho, self.membership)


@dataclass(frozen=True, eq=False)
class RieszFactorization:
    alpha: Alpha
    f: TrigPoly
    g: TrigPoly
    residuals: FactorResiduals
    blaschke_zeros: Tuple[complex, ...]

    def to_record(self):
        payload = {
            "alpha_a": self.alpha.a,
            "alpha_b": self.alpha.b,
            "f_norm": self.f.l2(),
            "g_norm": self.g.l2(),
            "residual_factorization": self.residuals.factorization,
            "residual_norm_split": self.residuals.norm_split,
            "residual_ortho": self.residuals.ortho,
            "residual_membership": self.residuals.membership,
        }
        tables = {
            name: (["j", "re", "im"], [[j, c.real, c.imag] for j, c in poly.normalize(1e-15).terms()])
            for name, poly in (("f", self.f), ("g", self.g))
        }
        tables["blaschke_zeros"] = (["re", "im"], [[r.real, r.imag] for r in self.blaschke_zeros])
        return payload, tables


def blaschke_series(zeros: Sequence[complex], degree: int) -> TrigPoly:
    """Коэффициенты 0..K произведения Бляшке prod (z - r) / (1 - conj(r) z)"""
    series = TrigPoly.constant(1.0)
    for r in zeros:
        factor = TrigPoly(0, [-r, 1.0])
        if r != 0:
            factor = multiply(factor, TrigPoly(0, np.conj(r) ** np.arange(degree + 1)))
        series = multiply(series, factor).truncate(degree)
    return series


def riesz_factor(h: MElement, degree: int = 128) -> RieszFactorization:
    """
    Факторизация h = f g с f в H^2_alpha, conj(g) ортогональной H^2_alpha и ||h||_1 = ||f|| ||g||

    Args:
        h: ненулевой многочлен из M
        degree: степень усечения K

    Returns:
        RieszFactorization с невязками
    """
    if h.is_zero():
        raise EmptyWitnessError(h.name, operation="riesz_factor")
    psi = multiply(TrigPoly.monomial(1), h.poly).normalize()
    coeffs = psi.window(0, psi.hi)
    order = int(np.flatnonzero(coeffs)[0])
    core = coeffs[order:]
    roots = P.polyroots(core) if core.size > 1 else np.zeros(0, dtype=np.complex128)
    roots = np.asarray(roots, dtype=np.complex128)

    near = roots[np.abs(np.abs(roots) - 1.0) < ROOT_MARGIN]
    if near.size:
        raise BoundaryZeroError(f"корни {near.tolist()}", operation="riesz_factor")
    inside = roots[np.abs(roots) < 1.0]
    outside = roots[np.abs(roots) > 1.0]
    logger.debug("riesz_factor: psi степени %d, нули внутри %s, вне %s",
                 psi.hi, inside.tolist(), outside.tolist())

    # O = lead * prod_in (1 - conj(r) z) * prod_out (z - s), B O = psi
    outer_poly = TrigPoly.constant(core[-1])
    for r in inside:
        outer_poly = multiply(outer_poly, TrigPoly(0, [1.0, -np.conj(r)]))
    for s in outside:
        outer_poly = multiply(outer_poly, TrigPoly(0, [-s, 1.0]))
    zeros = tuple([0j] * order + [complex(r) for r in inside])
    blaschke = blaschke_series(zeros, degree)

    size = next_pow2(max(4 * (degree + 1), DEFAULT_GRID, min_grid(outer_poly)))
    modulus = np.abs(synthesize(outer_poly, size).samples)
    analysis = analyze_weight(Weight(GridFn(modulus), floor=np.finfo(float).tiny, name="|O|"),
                              band=degree)
    root = outer_factor(analysis, degree)
    o0 = outer_poly.coefficient(0)
    unit = np.sqrt(o0 / abs(o0))

    big_f = multiply(blaschke, root).truncate(degree).scale(unit)
    big_g = root.scale(unit)

    f0, f1 = big_f.coefficient(0), big_f.coefficient(1)
    g0, g1 = big_g.coefficient(0), big_g.coefficient(1)
    if abs(f0) + abs(f1) > 1e-12 * max(big_f.l2(), 1e-300):
        alpha = canonicalize_alpha(f0, f1)
    elif abs(g0) + abs(g1) > 0:
        alpha = canonicalize_alpha(g0, -g1)
    else:
        alpha = Alpha(1 + 0j, 0j)

    f = big_f
    g = TrigPoly(-1, big_g.coeffs)
    product = multiply(f, g)
    res_size = next_pow2(max(DEFAULT_GRID, min_grid(product), min_grid(h.poly)))
    h_l1 = mean_and_norms(h.poly, res_size).l1
    residuals = FactorResiduals(
        factorization=mean_and_norms(h.poly - product, res_size).l1,
        norm_split=abs(h_l1 - f.l2() * g.l2()),
        ortho=project_alpha(alpha, conjugate(g)).l2(),
        membership=membership_defect(f, alpha),
    )
    return RieszFactorization(alpha=alpha, f=f, g=g, residuals=residuals, blaschke_zeros=zeros)


@dataclass(frozen=True)
class NeilInvertibility:
    invertible: bool
    inf_modulus: float
    roots: Tuple[complex, ...]


def neil_invertibility(psi: TrigPoly, grid_size: int = DEFAULT_GRID) -> NeilInvertibility:
    """
    Обратимость многочлена psi в алгебре Нейла

    Args:
        psi: аналитический многочлен с psi'(0) = 0
        grid_size: сетка для inf |psi|

    Returns:
        NeilInvertibility: invertible = нет корней в замкнутом круге
    """
    scale = max(float(np.max(np.abs(psi.coeffs))), 1.0)
    if not psi.is_analytic(1e-14 * scale) or abs(psi.coefficient(1)) > 1e-12 * scale:
        raise SymbolNotInNeilAlgebraError(f"psi'(0) = {psi.coefficient(1)}",
                                          operation="neil_invertibility")
    coeffs = psi.window(0, max(psi.hi, 0))
    nonzero = np.flatnonzero(np.abs(coeffs) > 0)
    if nonzero.size == 0:
        return NeilInvertibility(invertible=False, inf_modulus=0.0, roots=())
    coeffs = coeffs[:nonzero[-1] + 1]
    roots = P.polyroots(coeffs) if coeffs.size > 1 else np.zeros(0)
    invertible = bool(np.all(np.abs(roots) > 1.0 + ROOT_MARGIN))
    analytic = TrigPoly(0, coeffs)
    size = next_pow2(max(grid_size, min_grid(analytic)))
    inf_modulus = float(np.min(np.abs(synthesize(analytic, size).samples)))
    return NeilInvertibility(invertible=invertible, inf_modulus=inf_modulus,
                             roots=tuple(complex(r) for r in roots))


def perturbation_bound(symbol: TrigPoly, psi: TrigPoly, grid_size: int = DEFAULT_GRID) -> float:
    """
    Оценка (1 - ||1 - psi conj(phi)||_inf) / ||psi||_inf снизу для eps(alpha)

    Args:
        symbol: унимодулярный символ phi
        psi: элемент A
        grid_size: сетка для супремумов

    Returns:
        значение оценки (0, если ||1 - psi conj(phi)|| >= 1)
    """
    gap = TrigPoly.constant(1.0) - multiply(psi, conjugate(symbol))
    size = next_pow2(max(grid_size, min_grid(gap)))
    delta = mean_and_norms(gap, size).linf
    if delta >= 1.0:
        return 0.0
    return (1.0 - delta) / mean_and_norms(psi, size).linf


@dataclass
class ClassifyOptions:
    theta_steps: int = 33
    phi_steps: int = 64
    degree: int = 64
    minimax_degree: int = 16
    grid_size: int = DEFAULT_GRID
    unimodular_tol: float = 1e-6
    eps_threshold: float = 1e-4
    witnesses: Sequence[MElement] = ()
    show_progress: bool = False
    workers: int = 1


@dataclass(eq=False)
class WidomReport:
    """Отчет сканирования eps_N(alpha) и двусторонней оценки расстояния"""

    symbol_id: str
    tail: float = 0.0
    unimodular: bool = True
    scan: Optional[AlphaScan] = None
    adjoint_scan: Optional[AlphaScan] = None
    primal: Optional[PrimalBound] = None
    dual_bounds: Dict[str, float] = field(default_factory=dict)
    some_alpha_degenerate: bool = False
    adjoint_degenerate: bool = False
    distance_lt_one_certified: bool = False
    distance_ge_one_certified: bool = False
    invertible_family_plausible: bool = False
    theorem_inconsistency: bool = False

    @property
    def alpha_grid(self) -> List[Alpha]:
        return self.scan.alpha_grid if self.scan else []

    @property
    def eps_table(self) -> Dict[Alpha, List[Tuple[int, float]]]:
        return self.scan.eps_table if self.scan else {}

    @property
    def min_eps(self) -> Optional[float]:
        return self.scan.min_eps if self.scan else None

    @property
    def primal_upper(self) -> Optional[float]:
        if self.primal is None:
            return None
        if self.primal.refined is None:
            return self.primal.value
        return max(self.primal.value, self.primal.refined)

    @property
    def dual_lower(self) -> Optional[float]:
        return max(self.dual_bounds.values()) if self.dual_bounds else None

    @property
    def dual_ceiling(self) -> Optional[float]:
        """sqrt(1 - eps^2) из неравенства для равномерного eps (без утверждения о скорости)"""
        if self.scan is None:
            return None
        return float(np.sqrt(max(1.0 - min(self.scan.min_eps, 1.0) ** 2, 0.0)))

    def to_record(self):
        """Плоская запись (payload, tables) для отчетов"""
        payload = {
            "symbol": self.symbol_id,
            "tail": self.tail,
            "unimodular": self.unimodular,
            "min_eps": self.min_eps,
            "adjoint_min_eps": self.adjoint_scan.min_eps if self.adjoint_scan else None,
            "argmin_alpha": str(self.scan.argmin_alpha) if self.scan else None,
            "primal_upper": self.primal_upper,
            "dual_lower": self.dual_lower,
            "dual_ceiling": self.dual_ceiling,
            "some_alpha_degenerate": self.some_alpha_degenerate,
            "adjoint_degenerate": self.adjoint_degenerate,
            "distance_lt_one_certified": self.distance_lt_one_certified,
            "distance_ge_one_certified": self.distance_ge_one_certified,
            "invertible_family_plausible": self.invertible_family_plausible,
            "theorem_inconsistency": self.theorem_inconsistency,
        }
        tables = {}
        for name, scan in (("eps_table", self.scan), ("adjoint_eps_table", self.adjoint_scan)):
            if scan is None:
                continue
            rows = []
            for alpha in scan.alpha_grid:
                for n, eps in scan.eps_table[alpha]:
                    rows.append([float(np.real(alpha.a)), alpha.b.real, alpha.b.imag, n, eps])
            tables[name] = (["a", "b_re", "b_im", "N", "eps"], rows)
        if self.dual_bounds:
            tables["dual_bounds"] = (["witness", "value"],
                                     [[k, v] for k, v in self.dual_bounds.items()])
        if self.primal is not None:
            tables["primal_poly"] = (["j", "re", "im"],
                                     [[j, c.real, c.imag] for j, c in self.primal.p.terms()])
        return payload, tables


def distance_bracket(symbol: TrigPoly, degree: int = 16, grid_size: int = DEFAULT_GRID,
                     witnesses: Sequence[MElement] = (), symbol_id: str = "phi",
                     tail: float = 0.0) -> WidomReport:
    """
    Прямая и двойственная оценки dist(phi, A)

    Args:
        symbol: символ
        degree: степень K минимакса
        grid_size: сетка квадратур
        witnesses: дополнительные свидетели из M
        symbol_id: имя символа
        tail: хвост усечения символа

    Returns:
        WidomReport с заполненными primal и dual_bounds
    """
    # сетка квадратур годится и для минимакса, если M >= 8K
    minimax_grid = grid_size if grid_size and grid_size >= 8 * degree else None
    primal = primal_upper_bound(symbol, degree, minimax_grid)
    dual_bounds = {}
    for h in list(default_witnesses()) + list(witnesses):
        dual_bounds[h.name] = dual_lower_bound(symbol, h, grid_size)
    report = WidomReport(symbol_id=symbol_id, tail=tail, primal=primal, dual_bounds=dual_bounds)
    report.distance_lt_one_certified = report.primal_upper + tail < 1.0 - DISTANCE_MARGIN
    report.distance_ge_one_certified = report.dual_lower - tail >= 1.0 - DUAL_MARGIN
    if report.dual_lower > report.primal_upper + BRACKET_TOL + 2 * tail:
        logger.warning("distance_bracket(%s): двойственная оценка %.6g больше прямой %.6g",
                       symbol_id, report.dual_lower, report.primal_upper)
        report.theorem_inconsistency = True
    return report


def classify_symbol(symbol: TrigPoly, options: Optional[ClassifyOptions] = None,
                    symbol_id: str = "phi", tail: float = 0.0) -> WidomReport:
    """
    Полный анализ символа: сканы для phi и conj(phi), оценки расстояния, флаги

    Args:
        symbol: символ phi (унимодулярный на сетке)
        options: параметры анализа
        symbol_id: имя символа
        tail: хвост усечения символа

    Returns:
        WidomReport; theorem_inconsistency поднимается, а не сглаживается
    """
    options = options or ClassifyOptions()
    scan_kwargs = dict(grid_size=options.grid_size, unimodular_tol=options.unimodular_tol,
                       tail=tail, show_progress=options.show_progress, workers=options.workers)
    left = scan_alpha(symbol, options.theta_steps, options.phi_steps, options.degree, **scan_kwargs)
    adjoint = scan_alpha(conjugate(symbol), options.theta_steps, options.phi_steps,
                         options.degree, **scan_kwargs)

    report = distance_bracket(symbol, options.minimax_degree, options.grid_size,
                              options.witnesses, symbol_id, tail)
    report.scan = left
    report.adjoint_scan = adjoint
    report.unimodular = left.unimodular_defect <= options.unimodular_tol + tail

    if not report.unimodular:
        logger.warning("classify_symbol(%s): символ не унимодулярен (%.3e), флаги не выставляются",
                       symbol_id, left.unimodular_defect)
        report.distance_lt_one_certified = False
        report.distance_ge_one_certified = False
        report.theorem_inconsistency = False
        return report

    threshold = options.eps_threshold + tail
    report.some_alpha_degenerate = left.some_alpha_degenerate
    report.adjoint_degenerate = adjoint.some_alpha_degenerate
    report.invertible_family_plausible = left.min_eps > threshold and adjoint.min_eps > threshold

    if report.distance_lt_one_certified and report.some_alpha_degenerate:
        logger.warning("classify_symbol(%s): dist < 1, но eps вырождается при alpha=%s",
                       symbol_id, left.argmin_alpha)
        report.theorem_inconsistency = True
    if report.distance_lt_one_certified and report.distance_ge_one_certified:
        report.theorem_inconsistency = True
    return report
