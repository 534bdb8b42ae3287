# -*- coding: utf-8 -*-
"""
Веса: точка смежного класса плюс координаты в корневой решетке

λ = μ0 + sum_i a_i α_i, где для μ0 известны только спаривания <μ0, α_j>.
"""
from dataclasses import dataclass, field
from typing import Iterable, List, Sequence, Tuple

import sympy

from cartan.datum import CartanDatum
from common.errors import IncomparableWeights, InvalidDatum, PreconditionError

Coords = Tuple[int, ...]


def pairing_of(datum: CartanDatum, base: Sequence[int], coords: Sequence[int], i: int) -> int:
    """<λ, α_i> = base_i + sum_j a_j C_ji"""
    total = base[i]
    for j, a in enumerate(coords):
        if a:
            total += a * datum.c(j, i)
    return total


@dataclass(frozen=True)
class Weight:
    """Вес в фиксированном смежном классе X / Y"""
    base: Tuple[int, ...]
    coords: Coords
    datum: CartanDatum = field(compare=False, hash=False, repr=False)

    def __post_init__(self):
        n = self.datum.vertex_count
        if len(self.base) != n or len(self.coords) != n:
            raise InvalidDatum(
                f"Длины векторов веса должны равняться {n}",
                {"base": list(self.base), "coords": list(self.coords)},
            )

    @classmethod
    def at(cls, datum: CartanDatum, base: Iterable[int], coords: Iterable[int]) -> "Weight":
        return cls(tuple(int(x) for x in base), tuple(int(x) for x in coords), datum)

    def pairing(self, i: int) -> int:
        if not 0 <= i < self.datum.vertex_count:
            raise InvalidDatum(f"Вершина {i} вне диапазона", {"vertex": i})
        return pairing_of(self.datum, self.base, self.coords, i)

    def pairings(self) -> Tuple[int, ...]:
        return tuple(pairing_of(self.datum, self.base, self.coords, i) for i in self.datum.vertices)

    def shifted(self, i: int, r: int = 1) -> "Weight":
        """λ + r α_i"""
        coords = list(self.coords)
        coords[i] += r
        return Weight(self.base, tuple(coords), self.datum)

    def plus(self, delta: Sequence[int]) -> "Weight":
        return Weight(self.base, tuple(a + b for a, b in zip(self.coords, delta)), self.datum)

    def same_coset(self, other: "Weight") -> bool:
        return self.base == other.base

    def difference(self, other: "Weight") -> Coords:
        """Координаты λ - μ в корневой решетке"""
        if not self.same_coset(other):
            raise IncomparableWeights(
                "Веса из разных смежных классов несравнимы",
                {"left": list(self.base), "right": list(other.base)},
            )
        return tuple(a - b for a, b in zip(self.coords, other.coords))

    def to_json(self) -> dict:
        return {"coords": list(self.coords), "pairings": list(self.pairings())}

    def __str__(self) -> str:
        return f"λ{list(self.pairings())}"


def solve_root_coords(datum: CartanDatum, delta_pairings: Sequence[int]) -> Coords:
    """
    Целочисленное решение C a = delta

    Для вырожденной матрицы свободные параметры полагаются равными нулю.

    Raises:
        PreconditionError: если целого решения нет
    """
    matrix = sympy.Matrix(datum.matrix())
    rhs = sympy.Matrix([int(x) for x in delta_pairings])
    try:
        solution, params = matrix.gauss_jordan_solve(rhs)
    except ValueError:
        raise PreconditionError(
            "Разность спариваний не лежит в образе матрицы Картана",
            {"delta": list(delta_pairings)},
        )
    if params.shape[0]:
        solution = solution.subs({p: 0 for p in params})
    coords: List[int] = []
    for value in solution:
        if not value.is_Integer:
            raise PreconditionError(
                "Разность спариваний не является целой комбинацией корней",
                {"delta": list(delta_pairings)},
            )
        coords.append(int(value))
    return tuple(coords)
