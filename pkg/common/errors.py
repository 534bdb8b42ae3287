# -*- coding: utf-8 -*-
"""
Иерархия ошибок вычислительного ядра

Каждая ошибка несет стабильный машинный код, код выхода CLI
и словарь деталей для структурированного вывода.
"""
from typing import Any, Dict, Optional


class AlgebraError(Exception):
    """Базовая ошибка предметной области"""

    code = "algebra_error"
    exit_code = 1

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.details: Dict[str, Any] = dict(details or {})

    def to_dict(self) -> Dict[str, Any]:
        """Объект ошибки для JSON-отчета"""
        return {
            "error": {
                "code": self.code,
                "message": self.message,
                "details": self.details,
            }
        }


class NonDivisible(AlgebraError):
    """Точное деление многочленов Лорана невозможно"""
    code = "non_divisible"


class NegativeMultiplicity(AlgebraError):
    """Класс разложения содержит отрицательную кратность"""
    code = "negative_multiplicity"


class NegativeDimension(AlgebraError):
    """Итоговая размерность Hom получилась отрицательной"""
    code = "negative_dimension"


class NotAdjacent(AlgebraError):
    """Вершины не соединены ребром"""
    code = "not_adjacent"


class WindowTooNarrow(AlgebraError):
    """Окно степеней недостаточно для обратной свертки"""
    code = "window_too_narrow"


class NonTermination(AlgebraError):
    """Исчерпан бюджет шагов переписывания"""
    code = "non_termination"


class OracleUnverified(AlgebraError):
    """Оракул nilHecke не прошел самопроверку"""
    code = "oracle_unverified"


class ClaimFailure(AlgebraError):
    """Не найден шаг канонического пути"""
    code = "claim_failure"


class InvalidMove(AlgebraError):
    """Ход switch/drop/insert неприменим"""
    code = "invalid_move"


class NotClosed(AlgebraError):
    """Сумма шагов последовательности не равна нулю"""
    code = "not_closed"


class EndpointMismatch(AlgebraError):
    """Пути имеют разные начала или концы"""
    code = "endpoint_mismatch"


class NotFound(AlgebraError):
    """Поиск не нашел результат в пределах бюджета"""
    code = "not_found"


class EmptySupport(AlgebraError):
    """Носитель пуст"""
    code = "empty_support"


class InvalidDatum(AlgebraError):
    """Некорректные данные Картана"""
    code = "invalid_datum"


class NonFiniteSupport(AlgebraError):
    """Носитель объявлен бесконечным"""
    code = "non_finite_support"


class IncomparableWeights(AlgebraError):
    """Веса лежат в разных смежных классах"""
    code = "incomparable_weights"


class PreconditionError(AlgebraError):
    """Нарушено предусловие операции"""
    code = "precondition"


class ParseError(AlgebraError):
    """Синтаксическая ошибка во входных данных"""
    code = "parse_error"
    exit_code = 2
