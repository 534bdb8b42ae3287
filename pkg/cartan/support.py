# -*- coding: utf-8 -*-
"""
Носители: конечные множества весов с ненулевыми 1_λ
"""
import logging
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

from cartan.datum import CartanDatum
from cartan.weight import Coords, Weight, pairing_of, solve_root_coords
from common.errors import EmptySupport, IncomparableWeights, InvalidDatum

logger = logging.getLogger(__name__)


class Support:
    """Конечное множество ненулевых весов одного смежного класса"""

    def __init__(self, datum: CartanDatum, base: Sequence[int], coords: Iterable[Sequence[int]]):
        self.datum = datum
        self.base: Tuple[int, ...] = tuple(int(x) for x in base)
        if len(self.base) != datum.vertex_count:
            raise InvalidDatum(
                f"Ожидалось {datum.vertex_count} базовых спариваний, получено {len(self.base)}"
            )
        members = set()
        for vector in coords:
            point = tuple(int(x) for x in vector)
            if len(point) != datum.vertex_count:
                raise InvalidDatum(f"Вес {list(point)} имеет неверную длину")
            members.add(point)
        self._coords: FrozenSet[Coords] = frozenset(members)
        self._pairing_cache: Dict[Coords, Tuple[int, ...]] = {}

    @classmethod
    def from_pairings(cls, datum: CartanDatum, vectors: Sequence[Sequence[int]]) -> "Support":
        """
        Строит носитель по векторам спариваний

        Первый вектор становится базовой точкой, остальные выражаются
        через корневые координаты целочисленным решением.
        """
        if not vectors:
            raise EmptySupport("Пустой список весов")
        base = tuple(int(x) for x in vectors[0])
        coords = [solve_root_coords(datum, [p - b for p, b in zip(vector, base)]) for vector in vectors]
        return cls(datum, base, coords)

    # --- запросы ---

    def pairing(self, coords: Coords, i: int) -> int:
        return self.pairings(coords)[i]

    def pairings(self, coords: Coords) -> Tuple[int, ...]:
        cached = self._pairing_cache.get(coords)
        if cached is None:
            cached = tuple(pairing_of(self.datum, self.base, coords, i) for i in self.datum.vertices)
            self._pairing_cache[coords] = cached
        return cached

    def contains_coords(self, coords: Coords) -> bool:
        return coords in self._coords

    def contains(self, weight: Weight) -> bool:
        if weight.base != self.base:
            raise IncomparableWeights(
                "Вес принадлежит другому смежному классу",
                {"weight_base": list(weight.base), "support_base": list(self.base)},
            )
        return weight.coords in self._coords

    def __contains__(self, weight: object) -> bool:
        return isinstance(weight, Weight) and self.contains(weight)

    def weight(self, coords: Iterable[int]) -> Weight:
        return Weight(self.base, tuple(int(x) for x in coords), self.datum)

    def weights(self) -> List[Weight]:
        return [self.weight(c) for c in sorted(self._coords)]

    def coords(self) -> List[Coords]:
        return sorted(self._coords)

    def weight_with_pairings(self, pairings: Sequence[int]) -> Optional[Weight]:
        target = tuple(int(x) for x in pairings)
        for coords in sorted(self._coords):
            if self.pairings(coords) == target:
                return self.weight(coords)
        return None

    def __len__(self) -> int:
        return len(self._coords)

    def __iter__(self) -> Iterator[Weight]:
        return iter(self.weights())

    def to_dict(self) -> Dict[str, object]:
        return {"base_pairings": list(self.base), "weights": [list(c) for c in sorted(self._coords)]}

    def __repr__(self) -> str:
        return f"Support({len(self)} weights, base={list(self.base)})"
