"""
Модуль загрузки входных данных: веса, символы и свидетели из M
"""

import json
import logging
import re
from dataclasses import dataclass
from pathlib import Path
from typing import List, Tuple

import numpy as np

from neil_algebra.errors import ReportFormatError
from neil_algebra.trig_core import DEFAULT_GRID, GridFn, TrigPoly, analyze, synthesize
from neil_algebra.weights import DEFAULT_FLOOR, Weight
from neil_algebra.widom import MElement

logger = logging.getLogger(__name__)

BUILTIN_PREFIX = "builtin:"
TRIPLE_PATTERN = re.compile(r"\(\s*([^,()]+)\s*,\s*([^,()]+)\s*,\s*([^,()]+)\s*\)")


@dataclass(frozen=True, eq=False)
class Symbol:
    """Символ phi: многочлен и sup-норма отброшенного хвоста (0 для точных многочленов)"""

    name: str
    poly: TrigPoly
    tail: float = 0.0


def _grid_symbol(name: str, samples, band=None) -> Symbol:
    grid = GridFn(samples)
    band = grid.size // 4 if band is None else band
    poly = analyze(grid, -band, band)
    tail = float(np.max(np.abs(grid.samples - synthesize(poly, grid.size).samples)))
    logger.debug("символ %s: полоса %d, хвост %.3e", name, band, tail)
    return Symbol(name, poly, tail)


def _expisin() -> Symbol:
    return _grid_symbol("expisin",
                        GridFn.from_function(lambda t: np.exp(0.5j * np.sin(t)), DEFAULT_GRID).samples,
                        band=24)


BUILTIN_SYMBOLS = {
    "one": lambda: Symbol("one", TrigPoly.constant(1.0)),
    "z": lambda: Symbol("z", TrigPoly.monomial(1)),
    "z2": lambda: Symbol("z2", TrigPoly.monomial(2)),
    "zbar": lambda: Symbol("zbar", TrigPoly.monomial(-1)),
    "zpzbar": lambda: Symbol("zpzbar", TrigPoly(-1, [1.0, 0.0, 1.0])),
    "expisin": _expisin,
}


def parse_triples(text: str) -> List[Tuple[int, float, float]]:
    """
    Разбор строки вида "(j,re,im);(j,re,im);..."

    Args:
        text: строка с тройками

    Returns:
        список троек (частота, вещественная часть, мнимая часть)
    """
    items = [item.strip() for item in text.split(";") if item.strip()]
    if not items:
        raise ReportFormatError("пустой список коэффициентов", operation="parse_triples")
    triples = []
    for item in items:
        match = TRIPLE_PATTERN.fullmatch(item)
        if not match:
            raise ReportFormatError(f"не тройка (j,re,im): '{item}'", operation="parse_triples")
        try:
            j = int(match.group(1))
            triples.append((j, float(match.group(2)), float(match.group(3))))
        except ValueError as e:
            raise ReportFormatError(f"'{item}': {e}", operation="parse_triples") from e
    return triples


def _triples_poly(triples) -> TrigPoly:
    return TrigPoly.from_terms((j, complex(re_, im)) for j, re_, im in triples)


def _read_columns(path: Path) -> np.ndarray:
    """Текстовый файл: одно или два вещественных числа в строке"""
    rows = []
    with open(path, 'r', encoding='utf-8') as f:
        for lineno, line in enumerate(f, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.replace(",", " ").split()
            if len(parts) not in (1, 2):
                raise ReportFormatError(f"{path}:{lineno}: ожидалось 1 или 2 числа",
                                        operation="read_grid")
            try:
                values = [float(p) for p in parts]
            except ValueError as e:
                raise ReportFormatError(f"{path}:{lineno}: {e}", operation="read_grid") from e
            rows.append(complex(values[0], values[1] if len(values) == 2 else 0.0))
    if not rows:
        raise ReportFormatError(f"{path}: нет отсчетов", operation="read_grid")
    return np.array(rows, dtype=np.complex128)


def _read_record(path: Path) -> dict:
    try:
        with open(path, 'r', encoding='utf-8') as f:
            record = json.load(f)
    except (json.JSONDecodeError, IOError) as e:
        raise ReportFormatError(f"{path}: {e}", operation="read_record") from e
    if not isinstance(record, dict) or "kind" not in record:
        raise ReportFormatError(f"{path}: нет поля kind", operation="read_record")
    return record


def load_weight(source: str, size: int = DEFAULT_GRID, floor: float = DEFAULT_FLOOR) -> Weight:
    """
    Вес из builtin:<id>, строки троек или файла (JSON-запись либо столбец отсчетов)

    Args:
        source: описание источника
        size: размер сетки для весов, заданных коэффициентами или именем
        floor: нижняя граница положительности

    Returns:
        Weight
    """
    if source.startswith(BUILTIN_PREFIX):
        return Weight.builtin(source[len(BUILTIN_PREFIX):], size, floor)
    if source.lstrip().startswith("("):
        return Weight.from_fourier(parse_triples(source), size, floor)
    path = Path(source)
    if not path.exists():
        raise ReportFormatError(f"файл не найден: {source}", operation="load_weight")
    if path.suffix == ".json":
        return Weight.from_record(_read_record(path), size, floor)
    samples = _read_columns(path)
    return Weight(GridFn(samples), floor, path.stem)


def load_symbol(source: str) -> Symbol:
    """
    Символ из builtin:<id>, строки троек или файла

    Сеточные символы усекаются до полосы M/4; sup-норма хвоста сохраняется в Symbol.tail.

    Args:
        source: описание источника

    Returns:
        Symbol
    """
    if source.startswith(BUILTIN_PREFIX):
        key = source[len(BUILTIN_PREFIX):]
        try:
            return BUILTIN_SYMBOLS[key]()
        except KeyError:
            raise ReportFormatError(f"неизвестный встроенный символ '{key}'",
                                    operation="load_symbol") from None
    if source.lstrip().startswith("("):
        return Symbol("phi", _triples_poly(parse_triples(source)))
    path = Path(source)
    if not path.exists():
        raise ReportFormatError(f"файл не найден: {source}", operation="load_symbol")
    if path.suffix != ".json":
        return _grid_symbol(path.stem, _read_columns(path))

    record = _read_record(path)
    kind, data = record["kind"], record.get("data")
    if kind == "fourier":
        return Symbol(path.stem, _triples_poly(tuple(item) for item in data))
    if kind == "grid":
        samples = [complex(*item) if isinstance(item, (list, tuple)) else complex(item)
                   for item in data]
        return _grid_symbol(path.stem, samples)
    if kind == "expr":
        return load_symbol(BUILTIN_PREFIX + str(data))
    raise ReportFormatError(f"неизвестный вид записи '{kind}'", operation="load_symbol")


def load_witness(text: str, name: str = "h") -> MElement:
    """Свидетель из M по строке троек (j,re,im)"""
    return MElement(_triples_poly(parse_triples(text)), name)
