# -*- coding: utf-8 -*-
"""
Носители аффинных грассманианов

Вес задается набором k = (k_1, ..., k_n), 0 <= k_i <= m, sum k_i = N,
со спариваниями λ_i = k_{i+1} - k_i.
"""
import logging
from itertools import product
from typing import Dict, Optional, Tuple

from cartan.datum import CartanDatum, type_a
from cartan.support import Support
from cartan.weight import Coords, Weight, solve_root_coords
from common.errors import EmptySupport, InvalidDatum, PreconditionError

logger = logging.getLogger(__name__)

KTuple = Tuple[int, ...]


def tuple_pairings(k: KTuple) -> Tuple[int, ...]:
    return tuple(k[i + 1] - k[i] for i in range(len(k) - 1))


def balanced_tuple(n: int, N: int) -> KTuple:
    """Неубывающий набор из floor(N/n) и ceil(N/n)"""
    quotient, remainder = divmod(N, n)
    return (quotient,) * (n - remainder) + (quotient + 1,) * remainder


class GrassmannianSupport(Support):
    """Носитель со сведениями о наборах k для каждого веса"""

    def __init__(self, datum: CartanDatum, m: int, n: int, N: int, base: KTuple, tuples: Dict[Coords, KTuple]):
        super().__init__(datum, tuple_pairings(base), tuples.keys())
        self.m = m
        self.n = n
        self.N = N
        self.base_tuple = base
        self._tuples = dict(tuples)

    def tuple_of(self, weight: Weight) -> Optional[KTuple]:
        return self._tuples.get(weight.coords) if self.contains(weight) else None

    def tuple_at(self, coords: Coords) -> Optional[KTuple]:
        return self._tuples.get(coords)

    def middle(self) -> Weight:
        """Вес сбалансированного набора: фундаментальный вес или 0"""
        return self.weight((0,) * self.datum.vertex_count)


def grassmannian_support(m: int, n: int, N: int, datum: Optional[CartanDatum] = None) -> GrassmannianSupport:
    """
    Строит носитель Λ^N(C^m ⊗ C^n) для sl_n

    Args:
        m: Верхняя граница k_i
        n: Число компонент набора (ранг n - 1)
        N: Сумма компонент
        datum: Данные типа A ранга n - 1 (по умолчанию строятся)

    Raises:
        EmptySupport: если подходящих наборов нет
    """
    if m < 1 or n < 2 or N < 0:
        raise PreconditionError(f"Ожидается m >= 1, n >= 2, N >= 0; получено m={m}, n={n}, N={N}")
    if datum is None:
        datum = type_a(n - 1)
    if datum.vertex_count != n - 1 or not datum.is_type_a():
        raise InvalidDatum(f"Нужны данные типа A ранга {n - 1}")
    if N > m * n:
        raise EmptySupport(f"Нет наборов при N={N} > m*n={m * n}", {"m": m, "n": n, "N": N})

    base = balanced_tuple(n, N)
    base_pairings = tuple_pairings(base)
    tuples: Dict[Coords, KTuple] = {}
    for k in product(range(m + 1), repeat=n):
        if sum(k) != N:
            continue
        delta = [p - b for p, b in zip(tuple_pairings(k), base_pairings)]
        tuples[solve_root_coords(datum, delta)] = k

    if not tuples:
        raise EmptySupport(f"Нет наборов для m={m}, n={n}, N={N}", {"m": m, "n": n, "N": N})
    logger.debug(f"Грассманиан m={m}, n={n}, N={N}: {len(tuples)} весов")
    return GrassmannianSupport(datum, m, n, N, base, tuples)
