# -*- coding: utf-8 -*-
"""
Таблицы размерностей Hom по степеням

Значение в каждой степени: Exactly(n) либо Unknown (отказ движка).
Вне окна таблица всегда возвращает Unknown.
"""
from dataclasses import dataclass
from typing import Callable, Iterator, List, Dict, Tuple, Union

from common.errors import PreconditionError
from qgrade.laurent import LaurentInt


@dataclass(frozen=True)
class Exactly:
    """Точно известная размерность"""
    n: int

    def to_json(self) -> int:
        return self.n


@dataclass(frozen=True)
class Unknown:
    """Размерность не определена"""

    def to_json(self) -> str:
        return "unknown"


UNKNOWN = Unknown()
ZERO = Exactly(0)

DimValue = Union[Exactly, Unknown]


def value_add(a: DimValue, b: DimValue) -> DimValue:
    if isinstance(a, Unknown) or isinstance(b, Unknown):
        return UNKNOWN
    return Exactly(a.n + b.n)


def value_scale(coeff: int, value: DimValue) -> DimValue:
    """Нулевой коэффициент поглощает даже Unknown"""
    if coeff == 0:
        return ZERO
    if isinstance(value, Unknown):
        return UNKNOWN
    return Exactly(coeff * value.n)


@dataclass(frozen=True)
class DimTable:
    """Значения размерностей на окне степеней [lo, hi]"""
    lo: int
    hi: int
    values: Tuple[DimValue, ...]

    def __post_init__(self):
        if self.hi < self.lo:
            raise PreconditionError(f"Пустое окно степеней [{self.lo}, {self.hi}]")
        if len(self.values) != self.hi - self.lo + 1:
            raise PreconditionError("Число значений не совпадает с шириной окна")

    @classmethod
    def from_function(cls, lo: int, hi: int, fn: Callable[[int], DimValue]) -> "DimTable":
        return cls(lo, hi, tuple(fn(d) for d in range(lo, hi + 1)))

    @classmethod
    def zeros(cls, lo: int, hi: int) -> "DimTable":
        return cls(lo, hi, (ZERO,) * (hi - lo + 1))

    @classmethod
    def unknown(cls, lo: int, hi: int) -> "DimTable":
        return cls(lo, hi, (UNKNOWN,) * (hi - lo + 1))

    @property
    def window(self) -> Tuple[int, int]:
        return self.lo, self.hi

    def at(self, degree: int) -> DimValue:
        if degree < self.lo or degree > self.hi:
            return UNKNOWN
        return self.values[degree - self.lo]

    def items(self) -> Iterator[Tuple[int, DimValue]]:
        for offset, value in enumerate(self.values):
            yield self.lo + offset, value

    def exact(self, degree: int) -> bool:
        return isinstance(self.at(degree), Exactly)

    def negative_degrees(self) -> List[int]:
        return [d for d, v in self.items() if isinstance(v, Exactly) and v.n < 0]

    def to_json(self) -> List[Dict[str, object]]:
        return [{"degree": d, "value": v.to_json()} for d, v in self.items()]

    def __str__(self) -> str:
        return ", ".join(f"{d}:{v.to_json()}" for d, v in self.items())


def dim_add(acc: DimTable, table: DimTable, coeff: LaurentInt) -> DimTable:
    """
    acc(d) + sum_e coeff_e * table(d - e)

    Свертка с коэффициентом; значения table вне окна считаются Unknown.
    Нулевой коэффициент оставляет acc без изменений.
    """
    if acc.window != table.window:
        raise PreconditionError(
            f"Окна не совпадают: {acc.window} и {table.window}",
            {"left": list(acc.window), "right": list(table.window)},
        )

    def at(d: int) -> DimValue:
        value = acc.at(d)
        for e, c in coeff.items():
            value = value_add(value, value_scale(c, table.at(d - e)))
        return value

    return DimTable.from_function(acc.lo, acc.hi, at)
