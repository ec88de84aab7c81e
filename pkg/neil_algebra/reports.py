"""
Модуль отчетов: плоский текстовый формат и JSON, разбор и атомарная запись
"""

import csv
import io
import json
import logging
import os
import tempfile
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Tuple

import numpy as np

from neil_algebra.errors import ReportFormatError

logger = logging.getLogger(__name__)

Table = Tuple[List[str], List[List[Any]]]


@dataclass
class Report:
    """Отчет: метаданные запуска, плоские поля и таблицы"""

    command: str
    version: str
    params: Dict[str, Any] = field(default_factory=dict)
    payload: Dict[str, Any] = field(default_factory=dict)
    tables: Dict[str, Table] = field(default_factory=dict)

    @classmethod
    def from_record(cls, command: str, version: str, params: Dict[str, Any],
                    record: Tuple[Dict[str, Any], Dict[str, Table]]) -> "Report":
        payload, tables = record
        return cls(command=command, version=version, params=dict(params),
                   payload={k: _plain(v) for k, v in payload.items()},
                   tables={name: (list(cols), [[_plain(v) for v in row] for row in rows])
                           for name, (cols, rows) in tables.items()})

    def metadata(self) -> Dict[str, Any]:
        meta = {"version": self.version, "command": self.command}
        for key, value in self.params.items():
            meta[f"param.{key}"] = _plain(value)
        return meta

    def render(self, as_json: bool = False) -> str:
        """Текст отчета; одинаковые входные данные дают одинаковые байты"""
        if as_json:
            return _render_json(self)
        return _render_text(self)


def _plain(value: Any) -> Any:
    """Привести скаляры numpy к встроенным типам"""
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return float(value)
    if isinstance(value, (complex, np.complexfloating)):
        return complex(value)
    return value


def encode_value(value: Any) -> str:
    """Значение поля в плоском формате"""
    value = _plain(value)
    if value is None:
        return "none"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, float, complex)):
        return repr(value)
    return json.dumps(str(value), ensure_ascii=False)


def decode_value(text: str) -> Any:
    """Обратное преобразование к encode_value"""
    text = text.strip()
    if text == "none":
        return None
    if text in ("true", "false"):
        return text == "true"
    if text.startswith('"'):
        try:
            return json.loads(text)
        except json.JSONDecodeError as e:
            raise ReportFormatError(f"строка {text!r}: {e}", operation="parse_report") from e
    for kind in (int, float, complex):
        try:
            return kind(text)
        except ValueError:
            continue
    raise ReportFormatError(f"нераспознанное значение {text!r}", operation="parse_report")


def _render_text(report: Report) -> str:
    out = io.StringIO()
    for section, values in (("metadata", report.metadata()), ("payload", report.payload)):
        out.write(f"[{section}]\n")
        for key, value in values.items():
            out.write(f"{key} = {encode_value(value)}\n")
        out.write("\n")
    for name, (columns, rows) in report.tables.items():
        out.write(f"[table {name}]\n")
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([encode_value(v) for v in row])
        out.write("\n")
    return out.getvalue()


def _to_json(value: Any) -> Any:
    value = _plain(value)
    if isinstance(value, complex):
        return {"re": value.real, "im": value.imag}
    return value


def _from_json(value: Any) -> Any:
    if isinstance(value, dict) and set(value) == {"re", "im"}:
        return complex(value["re"], value["im"])
    return value


def _render_json(report: Report) -> str:
    data = {
        "metadata": {k: _to_json(v) for k, v in report.metadata().items()},
        "payload": {k: _to_json(v) for k, v in report.payload.items()},
        "tables": {name: {"columns": list(cols), "rows": [[_to_json(v) for v in row] for row in rows]}
                   for name, (cols, rows) in report.tables.items()},
    }
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def _split_metadata(meta: Dict[str, Any]) -> Tuple[str, str, Dict[str, Any]]:
    try:
        command, version = meta["command"], meta["version"]
    except KeyError as e:
        raise ReportFormatError(f"нет поля метаданных {e}", operation="parse_report") from None
    params = {k[len("param."):]: v for k, v in meta.items() if k.startswith("param.")}
    return command, version, params


def _parse_json(text: str) -> Report:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ReportFormatError(str(e), operation="parse_report") from e
    meta = {k: _from_json(v) for k, v in data.get("metadata", {}).items()}
    command, version, params = _split_metadata(meta)
    tables = {}
    for name, table in data.get("tables", {}).items():
        rows = [[_from_json(v) for v in row] for row in table["rows"]]
        tables[name] = (list(table["columns"]), rows)
    payload = {k: _from_json(v) for k, v in data.get("payload", {}).items()}
    return Report(command=command, version=version, params=params, payload=payload, tables=tables)


def _parse_text(text: str) -> Report:
    sections: Dict[str, List[str]] = {}
    current = None
    for lineno, line in enumerate(text.splitlines(), 1):
        if line.startswith("[") and line.endswith("]"):
            current = line[1:-1]
            if current in sections:
                raise ReportFormatError(f"строка {lineno}: повтор секции [{current}]",
                                        operation="parse_report")
            sections[current] = []
        elif line.strip():
            if current is None:
                raise ReportFormatError(f"строка {lineno}: данные вне секции",
                                        operation="parse_report")
            sections[current].append(line)

    def key_values(name: str) -> Dict[str, Any]:
        values = {}
        for line in sections.get(name, []):
            key, sep, value = line.partition(" = ")
            if not sep:
                raise ReportFormatError(f"[{name}]: нет ' = ' в {line!r}", operation="parse_report")
            values[key] = decode_value(value)
        return values

    command, version, params = _split_metadata(key_values("metadata"))
    tables = {}
    for name, lines in sections.items():
        if not name.startswith("table "):
            continue
        rows = list(csv.reader(lines))
        if not rows:
            raise ReportFormatError(f"[{name}]: нет заголовка", operation="parse_report")
        tables[name[len("table "):]] = (rows[0], [[decode_value(v) for v in row] for row in rows[1:]])
    return Report(command=command, version=version, params=params,
                  payload=key_values("payload"), tables=tables)


def parse_report(text: str) -> Report:
    """
    Разобрать отчет в любом из двух форматов

    Args:
        text: содержимое отчета

    Returns:
        Report
    """
    if text.lstrip().startswith("{"):
        return _parse_json(text)
    return _parse_text(text)


def write_report(path: Path, text: str) -> None:
    """
    Атомарно записать отчет: временный файл в том же каталоге и os.replace

    Args:
        path: путь назначения
        text: содержимое
    """
    path = Path(path)
    directory = path.parent if str(path.parent) else Path(".")
    fd, tmp_name = tempfile.mkstemp(prefix=f".{path.name}.", dir=directory)
    try:
        with os.fdopen(fd, 'w', encoding='utf-8', newline="") as f:
            f.write(text)
        os.replace(tmp_name, path)
    except BaseException:
        if os.path.exists(tmp_name):
            os.unlink(tmp_name)
        raise
    logger.info("Отчет записан: %s", path)
