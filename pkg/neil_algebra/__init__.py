"""
Neil Algebra - расстояния Сеге и анализ Видома для алгебры Нейла C + z^2 H^inf
"""

__version__ = "1.0.0"
