# -*- coding: utf-8 -*-
"""
Многочлены Лорана с целыми коэффициентами

LaurentInt хранит разреженное отображение степень -> коэффициент
в виде отсортированного кортежа, поэтому значения неизменяемы и хешируемы.
Точное деление выполняется через sympy после сдвига степеней.
"""
import logging
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Tuple, Union

import sympy

from common.errors import NegativeMultiplicity, NonDivisible, ParseError

logger = logging.getLogger(__name__)

_Q = sympy.Symbol("q")

Scalar = Union[int, "LaurentInt"]


class LaurentInt:
    """Элемент кольца Z[q, q^-1]"""

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[int, int]] = None):
        cleaned = {int(d): int(c) for d, c in (terms or {}).items() if c != 0}
        self._terms: Tuple[Tuple[int, int], ...] = tuple(sorted(cleaned.items()))

    # --- конструкторы ---

    @classmethod
    def zero(cls) -> "LaurentInt":
        return LaurentInt()

    @classmethod
    def one(cls) -> "LaurentInt":
        return LaurentInt({0: 1})

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "LaurentInt":
        """coeff * q^degree"""
        return LaurentInt({degree: coeff})

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[int, int]]) -> "LaurentInt":
        """Собирает многочлен из пар (степень, коэффициент), суммируя повторы"""
        acc: Dict[int, int] = {}
        for degree, coeff in pairs:
            acc[degree] = acc.get(degree, 0) + coeff
        return LaurentInt(acc)

    @classmethod
    def from_json(cls, data: List[List[int]]) -> "LaurentInt":
        """Разбирает JSON-массив пар [степень, коэффициент]"""
        try:
            return cls.from_pairs((int(d), int(c)) for d, c in data)
        except (TypeError, ValueError) as e:
            raise ParseError(f"Некорректный многочлен Лорана: {data!r}", {"reason": str(e)})

    # --- доступ ---

    def items(self) -> Iterator[Tuple[int, int]]:
        return iter(self._terms)

    def as_dict(self) -> Dict[int, int]:
        return dict(self._terms)

    def coefficient(self, degree: int) -> int:
        for d, c in self._terms:
            if d == degree:
                return c
        return 0

    @property
    def min_degree(self) -> int:
        if not self._terms:
            raise ValueError("У нулевого многочлена нет степеней")
        return self._terms[0][0]

    @property
    def max_degree(self) -> int:
        if not self._terms:
            raise ValueError("У нулевого многочлена нет степеней")
        return self._terms[-1][0]

    def is_zero(self) -> bool:
        return not self._terms

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for _, c in self._terms)

    def at_one(self) -> int:
        """Специализация q = 1"""
        return sum(c for _, c in self._terms)

    # --- кольцевые операции ---

    @staticmethod
    def _coerce(other: Scalar) -> "LaurentInt":
        if isinstance(other, LaurentInt):
            return other
        if isinstance(other, int):
            return LaurentInt({0: other})
        return NotImplemented

    def __add__(self, other: Scalar) -> "LaurentInt":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc = dict(self._terms)
        for d, c in other._terms:
            acc[d] = acc.get(d, 0) + c
        return LaurentInt(acc)

    __radd__ = __add__

    def __neg__(self) -> "LaurentInt":
        return LaurentInt({d: -c for d, c in self._terms})

    def __sub__(self, other: Scalar) -> "LaurentInt":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "LaurentInt":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other: Scalar) -> "LaurentInt":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc: Dict[int, int] = {}
        for d1, c1 in self._terms:
            for d2, c2 in other._terms:
                acc[d1 + d2] = acc.get(d1 + d2, 0) + c1 * c2
        return LaurentInt(acc)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "LaurentInt":
        if exponent < 0:
            raise ValueError("Отрицательная степень не поддерживается")
        result = LaurentInt.one()
        for _ in range(exponent):
            result = result * self
        return result

    def shift(self, degree: int) -> "LaurentInt":
        """Умножение на q^degree (сдвиг градуировки)"""
        return LaurentInt({d + degree: c for d, c in self._terms})

    def bar(self) -> "LaurentInt":
        """Инволюция q -> q^-1"""
        return LaurentInt({-d: c for d, c in self._terms})

    def exact_divide(self, divisor: "LaurentInt") -> "LaurentInt":
        """
        Точное деление в Z[q, q^-1]

        Args:
            divisor: Ненулевой делитель

        Returns:
            Частное с целыми коэффициентами

        Raises:
            NonDivisible: если остаток ненулевой или частное не целое
        """
        if divisor.is_zero():
            raise NonDivisible("Деление на нулевой многочлен", {"dividend": self.to_json()})
        if self.is_zero():
            return LaurentInt()

        a0, b0 = self.min_degree, divisor.min_degree
        num = sympy.Poly.from_dict({(d - a0,): c for d, c in self._terms}, _Q, domain="QQ")
        den = sympy.Poly.from_dict({(d - b0,): c for d, c in divisor._terms}, _Q, domain="QQ")
        quotient, remainder = num.div(den)
        if not remainder.is_zero:
            raise NonDivisible(
                f"{self} не делится на {divisor}",
                {"dividend": self.to_json(), "divisor": divisor.to_json()},
            )

        acc: Dict[int, int] = {}
        for (k,), coeff in quotient.terms():
            if not coeff.is_Integer:
                raise NonDivisible(
                    f"Частное {self} / {divisor} имеет нецелые коэффициенты",
                    {"dividend": self.to_json(), "divisor": divisor.to_json()},
                )
            acc[k + a0 - b0] = int(coeff)
        return LaurentInt(acc)

    # --- сравнение и вывод ---

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentInt({0: other})
        if not isinstance(other, LaurentInt):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def to_json(self) -> List[List[int]]:
        return [[d, c] for d, c in self._terms]

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: List[str] = []
        for d, c in reversed(self._terms):
            if d == 0:
                mono = str(abs(c))
            else:
                power = "q" if d == 1 else f"q^{d}"
                mono = power if abs(c) == 1 else f"{abs(c)}{power}"
            sign = "-" if c < 0 else "+"
            if not parts:
                parts.append(mono if c > 0 else f"-{mono}")
            else:
                parts.append(f"{sign} {mono}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentInt({self})"


class GradedMult(LaurentInt):
    """Кратность с неотрицательными коэффициентами (запись ⊕_f A)"""

    __slots__ = ()

    def __init__(self, terms: Optional[Mapping[int, int]] = None):
        super().__init__(terms)
        negative = [(d, c) for d, c in self._terms if c < 0]
        if negative:
            raise NegativeMultiplicity(
                f"Отрицательные коэффициенты в кратности: {negative}",
                {"terms": [[d, c] for d, c in negative]},
            )

    @classmethod
    def of(cls, value: LaurentInt) -> "GradedMult":
        """Проверяет неотрицательность и возвращает кратность"""
        if isinstance(value, GradedMult):
            return value
        return cls(value.as_dict())

    def __repr__(self) -> str:
        return f"GradedMult({self})"
