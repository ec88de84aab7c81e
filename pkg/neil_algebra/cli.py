"""
CLI интерфейс для neil_algebra
"""

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Optional, Tuple

import click
import numpy as np

from neil_algebra import __version__
from neil_algebra.config import Config
from neil_algebra.errors import NeilAlgebraError, ReportFormatError
from neil_algebra.hardy_alpha import canonicalize_alpha
from neil_algebra.reports import Report, write_report
from neil_algebra.symbols import load_symbol, load_weight, load_witness
from neil_algebra.szego import adjudicate_lambda
from neil_algebra.toeplitz_alpha import assemble
from neil_algebra.widom import (
    WidomReport, classify_symbol, distance_bracket, riesz_factor, scan_alpha,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_ALARM = 4

COMMANDS = ("szego", "widom-scan", "dist", "factor", "toeplitz", "classify")


@dataclass
class RunConfig:
    """Параметры одного запуска команды"""

    command: str
    source: Optional[str] = None  # вес, символ или h
    witnesses: Tuple[str, ...] = ()
    degree: Optional[int] = None  # N или K в зависимости от команды
    grid: Optional[int] = None
    alpha_grid: Optional[Tuple[int, int]] = None
    alpha: Optional[str] = None
    band: Optional[int] = None
    out: Optional[str] = None
    as_json: bool = False
    show_progress: bool = True

    def params(self) -> Dict[str, Any]:
        """Параметры для метаданных отчета (без пути вывода)"""
        values = {
            "source": self.source,
            "witnesses": ";".join(self.witnesses) if self.witnesses else None,
            "degree": self.degree,
            "grid": self.grid,
            "alpha_grid": "x".join(map(str, self.alpha_grid)) if self.alpha_grid else None,
            "alpha": self.alpha,
            "band": self.band,
        }
        return {k: v for k, v in values.items() if v is not None}


def parse_alpha_grid(text: str) -> Tuple[int, int]:
    """Сетка вида AxB"""
    try:
        theta, phase = text.lower().split("x")
        return int(theta), int(phase)
    except ValueError:
        raise ReportFormatError(f"ожидалось AxB, получено '{text}'", operation="alpha-grid") from None


def parse_alpha(text: str):
    """Параметр вида "a;b" с комплексными координатами"""
    try:
        a, b = (complex(part.strip().replace(" ", "")) for part in text.split(";"))
    except ValueError:
        raise ReportFormatError(f"ожидалось 'a;b', получено '{text}'", operation="alpha") from None
    return canonicalize_alpha(a, b)


def _grid(config: Config, run_config: RunConfig) -> int:
    grid = run_config.grid or int(config.get("grid_size"))
    return config.check_cap("max_grid", grid)


def _szego(config: Config, run_config: RunConfig) -> Tuple[Any, bool]:
    grid = _grid(config, run_config)
    weight = load_weight(run_config.source, grid, float(config.get("weight_floor")))
    nmax = config.check_cap("max_szego_degree", run_config.degree or int(config.get("oracle_nmax")))
    band = run_config.band or config.log_band(weight.size)
    report = adjudicate_lambda(weight, nmax, band, int(config.get("outer_degree")))
    return report.to_record(), False


def _widom_scan(config: Config, run_config: RunConfig) -> Tuple[Any, bool]:
    options = config.classify_options(degree=run_config.degree, grid_size=run_config.grid)
    theta_steps, phi_steps = run_config.alpha_grid or (options.theta_steps, options.phi_steps)
    symbol = load_symbol(run_config.source)
    scan = scan_alpha(symbol.poly, theta_steps, phi_steps, options.degree,
                      grid_size=options.grid_size, unimodular_tol=options.unimodular_tol,
                      tail=symbol.tail, show_progress=run_config.show_progress,
                      workers=options.workers)
    report = WidomReport(symbol_id=symbol.name, tail=symbol.tail, scan=scan,
                         unimodular=scan.unimodular_defect <= options.unimodular_tol + symbol.tail,
                         some_alpha_degenerate=scan.some_alpha_degenerate)
    return report.to_record(), False


def _dist(config: Config, run_config: RunConfig) -> Tuple[Any, bool]:
    symbol = load_symbol(run_config.source)
    witnesses = [load_witness(text, f"h{i}") for i, text in enumerate(run_config.witnesses, 1)]
    report = distance_bracket(symbol.poly, run_config.degree or int(config.get("minimax_degree")),
                              _grid(config, run_config), witnesses, symbol.name, symbol.tail)
    return report.to_record(), report.theorem_inconsistency


def _factor(config: Config, run_config: RunConfig) -> Tuple[Any, bool]:
    h = load_witness(run_config.source)
    result = riesz_factor(h, run_config.degree or int(config.get("factor_degree")))
    return result.to_record(), False


def _toeplitz(config: Config, run_config: RunConfig) -> Tuple[Any, bool]:
    symbol = load_symbol(run_config.source)
    alpha = parse_alpha(run_config.alpha or "1;0")
    degree = config.check_cap("max_toeplitz_degree", run_config.degree or 16)
    rep = assemble(alpha, symbol.poly, degree)
    sv = rep.singular_values()
    payload = {
        "symbol": symbol.name,
        "alpha_a": alpha.a,
        "alpha_b": alpha.b,
        "domain_degree": rep.domain_degree,
        "range_degree": rep.range_degree,
        "rows": rep.shape[0],
        "columns": rep.shape[1],
        "exact": rep.exact,
        "sigma_max": float(sv[0]),
        "sigma_min": float(sv[-1]),
    }
    rows, cols = np.nonzero(rep.matrix)
    tables = {
        "singular_values": (["k", "sigma"], [[k, float(s)] for k, s in enumerate(sv)]),
        "matrix": (["row", "col", "re", "im"],
                   [[int(i), int(j), rep.matrix[i, j].real, rep.matrix[i, j].imag]
                    for i, j in zip(rows, cols)]),
    }
    return (payload, tables), False


def _classify(config: Config, run_config: RunConfig) -> Tuple[Any, bool]:
    symbol = load_symbol(run_config.source)
    witnesses = [load_witness(text, f"h{i}") for i, text in enumerate(run_config.witnesses, 1)]
    theta_steps, phi_steps = run_config.alpha_grid or (None, None)
    options = config.classify_options(theta_steps=theta_steps, phi_steps=phi_steps,
                                      degree=run_config.degree, grid_size=run_config.grid,
                                      witnesses=witnesses or None,
                                      show_progress=run_config.show_progress)
    report = classify_symbol(symbol.poly, options, symbol.name, symbol.tail)
    return report.to_record(), report.theorem_inconsistency


HANDLERS = {
    "szego": _szego,
    "widom-scan": _widom_scan,
    "dist": _dist,
    "factor": _factor,
    "toeplitz": _toeplitz,
    "classify": _classify,
}


def run(run_config: RunConfig, config: Optional[Config] = None) -> int:
    """
    Выполнить команду и записать отчет

    Args:
        run_config: параметры запуска
        config: объект конфигурации

    Returns:
        код выхода: 0 успех, 2 ошибка входа, 3 численный отказ, 4 тревога несогласованности
    """
    config = config or Config()
    try:
        record, alarm = HANDLERS[run_config.command](config, run_config)
    except NeilAlgebraError as e:
        click.echo(f"Ошибка: {e}", err=True)
        return e.exit_code
    except ValueError as e:
        click.echo(f"Ошибка: {run_config.command}: bad input: {e}", err=True)
        return EXIT_INPUT

    report = Report.from_record(run_config.command, __version__, run_config.params(), record)
    text = report.render(as_json=run_config.as_json)
    if run_config.out:
        write_report(Path(run_config.out), text)
    else:
        click.echo(text, nl=False)
    if alarm:
        click.echo(f"Тревога: {run_config.command}: theorem inconsistency", err=True)
        return EXIT_ALARM
    return EXIT_OK


def _output_options(func):
    func = click.option('--json', 'as_json', is_flag=True, help='Отчет в формате JSON')(func)
    func = click.option('--out', type=click.Path(), help='Записать отчет в файл')(func)
    return func


def _finish(ctx, run_config: RunConfig) -> None:
    ctx.exit(run(run_config, ctx.obj['config']))


@click.group()
@click.option('--config', type=click.Path(exists=True), help='Путь к файлу конфигурации')
@click.option('--verbose', '-v', is_flag=True, help='Подробный журнал (DEBUG)')
@click.version_option(__version__)
@click.pass_context
def cli(ctx, config, verbose):
    """Neil Algebra - расстояния Сеге и анализ Видома для алгебры Нейла"""
    ctx.ensure_object(dict)
    try:
        ctx.obj['config'] = Config(config_path=config)
    except NeilAlgebraError as e:
        click.echo(f"Ошибка: {e}", err=True)
        ctx.exit(e.exit_code)
    level = logging.DEBUG if verbose else ctx.obj['config'].get("log_level", "WARNING")
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")


@cli.command()
@click.option('--weight', required=True, help='builtin:<id>, тройки (j,re,im);... или файл')
@click.option('--nmax', type=int, help='Наибольшая степень N в переборе оракула')
@click.option('--grid', type=int, help='Размер сетки M')
@click.option('--band', type=int, help='Полоса коэффициентов log(rho)')
@_output_options
@click.pass_context
def szego(ctx, weight, nmax, grid, band, out, as_json):
    """Сравнить оракул Сеге с обеими замкнутыми формулами"""
    _finish(ctx, RunConfig("szego", source=weight, degree=nmax, grid=grid, band=band,
                           out=out, as_json=as_json))


@cli.command('widom-scan')
@click.option('--symbol', required=True, help='builtin:<id>, тройки (j,re,im);... или файл')
@click.option('--alpha-grid', 'alpha_grid', help='Сетка параметров AxB (theta x фаза)')
@click.option('--degree', type=int, help='Степень усечения N')
@click.option('--grid', type=int, help='Размер сетки M')
@click.option('--no-progress', is_flag=True, help='Не показывать прогресс-бар')
@_output_options
@click.pass_context
def widom_scan(ctx, symbol, alpha_grid, degree, grid, no_progress, out, as_json):
    """Вычислить eps_N(alpha) на сетке параметров"""
    try:
        steps = parse_alpha_grid(alpha_grid) if alpha_grid else None
    except ReportFormatError as e:
        click.echo(f"Ошибка: {e}", err=True)
        ctx.exit(e.exit_code)
    _finish(ctx, RunConfig("widom-scan", source=symbol, alpha_grid=steps, degree=degree, grid=grid,
                           out=out, as_json=as_json, show_progress=not no_progress))


@cli.command()
@click.option('--symbol', required=True, help='builtin:<id>, тройки (j,re,im);... или файл')
@click.option('--h', 'witnesses', multiple=True, help='Дополнительный свидетель из M (тройки)')
@click.option('--K', 'k_degree', type=int, help='Степень многочлена минимакса')
@click.option('--grid', type=int, help='Размер сетки M')
@_output_options
@click.pass_context
def dist(ctx, symbol, witnesses, k_degree, grid, out, as_json):
    """Двусторонняя оценка расстояния от символа до алгебры Нейла"""
    _finish(ctx, RunConfig("dist", source=symbol, witnesses=tuple(witnesses), degree=k_degree,
                           grid=grid, out=out, as_json=as_json))


@cli.command()
@click.option('--h', 'h', required=True, help='Элемент M тройками (j,re,im);...')
@click.option('--K', 'k_degree', type=int, help='Степень усечения рядов')
@_output_options
@click.pass_context
def factor(ctx, h, k_degree, out, as_json):
    """Факторизация h = f g с f в H^2_alpha"""
    _finish(ctx, RunConfig("factor", source=h, degree=k_degree, out=out, as_json=as_json))


@cli.command()
@click.option('--symbol', required=True, help='builtin:<id>, тройки (j,re,im);... или файл')
@click.option('--alpha', help='Параметр "a;b" (по умолчанию 1;0)')
@click.option('--degree', type=int, help='Степень N области определения')
@_output_options
@click.pass_context
def toeplitz(ctx, symbol, alpha, degree, out, as_json):
    """Матрица T^alpha_phi и ее сингулярные числа"""
    _finish(ctx, RunConfig("toeplitz", source=symbol, alpha=alpha, degree=degree,
                           out=out, as_json=as_json))


@cli.command()
@click.option('--symbol', required=True, help='builtin:<id>, тройки (j,re,im);... или файл')
@click.option('--h', 'witnesses', multiple=True, help='Дополнительный свидетель из M (тройки)')
@click.option('--alpha-grid', 'alpha_grid', help='Сетка параметров AxB (theta x фаза)')
@click.option('--degree', type=int, help='Степень усечения N')
@click.option('--grid', type=int, help='Размер сетки M')
@click.option('--no-progress', is_flag=True, help='Не показывать прогресс-бар')
@_output_options
@click.pass_context
def classify(ctx, symbol, witnesses, alpha_grid, degree, grid, no_progress, out, as_json):
    """Полный анализ символа; код выхода 4 при несогласованности"""
    try:
        steps = parse_alpha_grid(alpha_grid) if alpha_grid else None
    except ReportFormatError as e:
        click.echo(f"Ошибка: {e}", err=True)
        ctx.exit(e.exit_code)
    _finish(ctx, RunConfig("classify", source=symbol, witnesses=tuple(witnesses), alpha_grid=steps,
                           degree=degree, grid=grid, out=out, as_json=as_json,
                           show_progress=not no_progress))


if __name__ == '__main__':
    cli()
