"""
Модуль конфигурации численных параметров
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, Optional

from neil_algebra.errors import ReportFormatError
from neil_algebra.widom import ClassifyOptions

logger = logging.getLogger(__name__)


class Config:
    """Класс для управления конфигурацией"""

    DEFAULT_CONFIG = {
        "grid_size": 1024,  # число узлов сетки на окружности (степень двойки)
        "log_band": None,  # полоса коэффициентов log(rho) (None = min(256, M/4))
        "weight_floor": 1e-12,  # нижняя граница положительности веса
        "tolerance": 1e-10,  # абсолютный допуск по умолчанию
        "kernel_degree": 200,  # степень усечения воспроизводящего ядра
        "outer_degree": 64,  # степень усечения внешнего множителя
        "oracle_nmax": 64,  # максимальная степень в переборе оракула Сеге
        "alpha_grid": [33, 64],  # сетка параметров alpha (theta x фаза)
        "scan_degree": 64,  # степень усечения при сканировании eps_N(alpha)
        "minimax_degree": 16,  # степень многочлена в прямой оценке расстояния
        "factor_degree": 128,  # степень усечения при факторизации Рисса
        "unimodular_tol": 1e-6,  # допуск унимодулярности символа
        "eps_threshold": 1e-4,  # порог "правдоподобной" обратимости
        "workers": 1,  # число потоков при сканировании
        "log_level": "WARNING",
    }

    CAPS = {
        "max_grid": 2 ** 16,
        "max_szego_degree": 512,
        "max_scan_degree": 256,
        "max_toeplitz_degree": 1024,
    }

    def __init__(self, config_path: Optional[str] = None):
        """
        Инициализация конфигурации

        Args:
            config_path: путь к JSON-файлу конфигурации (по умолчанию только встроенные значения)
        """
        self.config_path = Path(config_path) if config_path else None
        self.config: Dict[str, Any] = dict(self.DEFAULT_CONFIG)

        if self.config_path is not None and self.config_path.exists():
            self.load()

    def load(self) -> None:
        """Загрузка конфигурации из файла"""
        try:
            with open(self.config_path, 'r', encoding='utf-8') as f:
                loaded_config = json.load(f)
        except (json.JSONDecodeError, IOError) as e:
            raise ReportFormatError(f"ошибка загрузки конфигурации {self.config_path}: {e}",
                                    operation="config") from e

        unknown = set(loaded_config) - set(self.DEFAULT_CONFIG)
        if unknown:
            logger.warning("Неизвестные ключи конфигурации игнорируются: %s", sorted(unknown))
        for key in set(loaded_config) & set(self.DEFAULT_CONFIG):
            self.config[key] = loaded_config[key]

    def save(self, config_path: Optional[str] = None) -> None:
        """Сохранение конфигурации в файл"""
        path = Path(config_path) if config_path else self.config_path
        if path is None:
            raise ReportFormatError("не задан путь для сохранения конфигурации", operation="config")
        with open(path, 'w', encoding='utf-8') as f:
            json.dump(self.config, f, indent=2, ensure_ascii=False)

    def get(self, key: str, default: Any = None) -> Any:
        """Получить значение конфигурации"""
        return self.config.get(key, default)

    def set(self, key: str, value: Any) -> None:
        """Установить значение конфигурации"""
        self.config[key] = value

    def log_band(self, grid_size: int) -> int:
        """
        Полоса коэффициентов log(rho) для сетки заданного размера

        Args:
            grid_size: число узлов сетки

        Returns:
            явно заданная полоса или min(256, M/4)
        """
        band = self.config.get("log_band")
        if band is None:
            return min(256, grid_size // 4)
        return int(band)

    def check_cap(self, name: str, value: int) -> int:
        """
        Проверить параметр против документированного ограничения

        Args:
            name: ключ из CAPS
            value: проверяемое значение

        Returns:
            то же значение, если оно допустимо
        """
        cap = self.CAPS[name]
        if value > cap:
            raise ReportFormatError(f"{name}: {value} > {cap}", operation="config")
        return value

    def classify_options(self, **overrides) -> ClassifyOptions:
        """
        Параметры classify_symbol из конфигурации

        Args:
            overrides: значения, заданные явно (None игнорируется)

        Returns:
            ClassifyOptions
        """
        theta_steps, phi_steps = self.config["alpha_grid"]
        options = ClassifyOptions(
            theta_steps=int(theta_steps),
            phi_steps=int(phi_steps),
            degree=int(self.config["scan_degree"]),
            minimax_degree=int(self.config["minimax_degree"]),
            grid_size=int(self.config["grid_size"]),
            unimodular_tol=float(self.config["unimodular_tol"]),
            eps_threshold=float(self.config["eps_threshold"]),
            workers=int(self.config["workers"]),
        )
        for key, value in overrides.items():
            if value is not None:
                setattr(options, key, value)
        self.check_cap("max_scan_degree", options.degree)
        self.check_cap("max_grid", options.grid_size)
        return options
