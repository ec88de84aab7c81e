"""
Иерархия исключений пакета
"""

from typing import Optional


class NeilAlgebraError(Exception):
    """Базовое исключение; несет имя операции и код выхода CLI"""

    exit_code = 1
    reason = "error"

    def __init__(self, message: str = "", operation: Optional[str] = None):
        self.operation = operation
        self.detail = message
        text = self.reason if not message else f"{self.reason}: {message}"
        if operation:
            text = f"{operation}: {text}"
        super().__init__(text)


class InputError(NeilAlgebraError):
    """Некорректные входные данные (код выхода 2)"""

    exit_code = 2
    reason = "input error"


class NumericalError(NeilAlgebraError):
    """Численный отказ (код выхода 3)"""

    exit_code = 3
    reason = "numerical failure"


class AliasingWindowError(InputError):
    reason = "aliasing window"


class DegenerateParameterError(InputError):
    reason = "degenerate parameter"


class NotAnalyticError(InputError):
    reason = "not analytic"


class KernelPoleError(InputError):
    reason = "kernel pole"


class WeightNotPositiveError(InputError):
    reason = "weight not strictly positive"


class SymbolNotUnimodularError(InputError):
    reason = "symbol not unimodular"


class SymbolNotInNeilAlgebraError(InputError):
    reason = "symbol not in Neil algebra"


class EmptyWitnessError(InputError):
    reason = "empty witness"


class ReportFormatError(InputError):
    reason = "bad input"


class DegenerateWeightError(NumericalError):
    reason = "degenerate weight"


class BoundaryZeroError(NumericalError):
    reason = "boundary zero: factorization ill-conditioned"


class MinimaxNotConvergedError(NumericalError):
    reason = "minimax not converged"
