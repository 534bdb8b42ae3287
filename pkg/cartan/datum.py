# -*- coding: utf-8 -*-
"""
Данные Картана для односвязных (simply-laced) графов

Матрица Картана C_ij = <α_i, α_j>: 2 на диагонали, -1 для ребер, иначе 0.
Скаляры t_ij берутся из поля рациональных чисел, по умолчанию равны 1.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Tuple

import networkx as nx
import sympy

from common.errors import InvalidDatum, ParseError

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


def _normalize_edge(i: int, j: int) -> Edge:
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True)
class CartanDatum:
    """Связный граф без петель и кратных ребер плюс выбор скаляров Q = {t_ij}"""
    vertex_count: int
    edges: FrozenSet[Edge]
    scalars: Tuple[Tuple[Edge, Fraction], ...] = ()
    _t: Dict[Edge, Fraction] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "_t", dict(self.scalars))
        self._validate()

    @classmethod
    def build(
        cls,
        vertex_count: int,
        edges: Iterable[Iterable[int]],
        t: Optional[Mapping[Edge, object]] = None,
    ) -> "CartanDatum":
        """
        Создает данные Картана с нормализацией ребер и скаляров

        Args:
            vertex_count: Число вершин
            edges: Пары вершин (нумерация с нуля)
            t: Необязательные скаляры t_ij для упорядоченных пар i != j

        Returns:
            Проверенный CartanDatum
        """
        normalized = set()
        for edge in edges:
            pair = tuple(int(v) for v in edge)
            if len(pair) != 2:
                raise InvalidDatum(f"Ребро должно содержать две вершины: {edge!r}")
            i, j = pair
            if i == j:
                raise InvalidDatum(f"Петля в вершине {i} недопустима", {"vertex": i})
            normalized.add(_normalize_edge(i, j))

        scalars = []
        for (i, j), value in (t or {}).items():
            try:
                scalars.append(((int(i), int(j)), Fraction(value)))
            except (TypeError, ValueError, ZeroDivisionError) as e:
                raise InvalidDatum(f"Некорректный скаляр t_{i}{j}={value!r}", {"reason": str(e)})
        return cls(int(vertex_count), frozenset(normalized), tuple(sorted(scalars)))

    def _validate(self) -> None:
        if self.vertex_count < 1:
            raise InvalidDatum(f"Число вершин должно быть положительным: {self.vertex_count}")
        for i, j in self.edges:
            if not (0 <= i < self.vertex_count and 0 <= j < self.vertex_count):
                raise InvalidDatum(f"Ребро ({i}, {j}) вне диапазона вершин", {"edge": [i, j]})
            if i == j:
                raise InvalidDatum(f"Петля в вершине {i} недопустима", {"vertex": i})
        if not nx.is_connected(self.graph()):
            raise InvalidDatum("Граф Дынкина должен быть связным")

        for (i, j), value in self._t.items():
            if i == j or not (0 <= i < self.vertex_count and 0 <= j < self.vertex_count):
                raise InvalidDatum(f"Скаляр t_{i}{j} задан для недопустимой пары", {"pair": [i, j]})
            if value == 0:
                raise InvalidDatum(f"Скаляр t_{i}{j} должен быть ненулевым", {"pair": [i, j]})
        for i, j in combinations(range(self.vertex_count), 2):
            if self.c(i, j) == 0 and self.t(i, j) != self.t(j, i):
                raise InvalidDatum(
                    f"Для несмежных вершин требуется t_{i}{j} = t_{j}{i}",
                    {"pair": [i, j], "t_ij": str(self.t(i, j)), "t_ji": str(self.t(j, i))},
                )

    # --- матрица Картана ---

    @property
    def vertices(self) -> range:
        return range(self.vertex_count)

    def adjacent(self, i: int, j: int) -> bool:
        return _normalize_edge(i, j) in self.edges

    def c(self, i: int, j: int) -> int:
        """Элемент матрицы Картана <α_i, α_j>"""
        if i == j:
            return 2
        return -1 if self.adjacent(i, j) else 0

    def matrix(self) -> List[List[int]]:
        return [[self.c(i, j) for j in self.vertices] for i in self.vertices]

    def t(self, i: int, j: int) -> Fraction:
        return self._t.get((i, j), Fraction(1))

    def neighbors(self, i: int) -> List[int]:
        return sorted(j for j in self.vertices if self.adjacent(i, j))

    # --- граф ---

    def graph(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.vertex_count))
        graph.add_edges_from(self.edges)
        return graph

    def is_type_a(self) -> bool:
        """Граф является путем (тип A)"""
        graph = self.graph()
        return (
            len(self.edges) == self.vertex_count - 1
            and all(degree <= 2 for _, degree in graph.degree())
        )

    def short_cycles(self) -> List[Tuple[int, ...]]:
        """Треугольники и квадраты графа (как отсортированные наборы вершин)"""
        graph = self.graph()
        found = set()
        for cycle in nx.simple_cycles(graph, length_bound=4):
            if len(cycle) in (3, 4):
                found.add(tuple(sorted(cycle)))
        return sorted(found)

    def radical_basis(self) -> List[Tuple[Fraction, ...]]:
        """Базис ядра матрицы Картана (над Q)"""
        kernel = sympy.Matrix(self.matrix()).nullspace()
        basis = []
        for vector in kernel:
            basis.append(tuple(Fraction(int(x.p), int(x.q)) for x in vector))
        return basis

    def form_on_roots(self, theta: Iterable[object], i: int) -> Fraction:
        """
        sum_j θ_j C_ji

        Это же значение дает естественное спаривание (θ, α_i)_λ для любого λ.
        """
        values = [Fraction(x) for x in theta]
        if len(values) != self.vertex_count:
            raise InvalidDatum(f"Ожидался вектор длины {self.vertex_count}, получено {len(values)}")
        return sum((values[j] * self.c(j, i) for j in self.vertices), Fraction(0))

    # --- сериализация ---

    def to_dict(self) -> Dict[str, object]:
        data: Dict[str, object] = {
            "vertices": self.vertex_count,
            "edges": [list(edge) for edge in sorted(self.edges)],
        }
        if self.scalars:
            data["t"] = [{"i": i, "j": j, "value": str(value)} for (i, j), value in self.scalars]
        return data

    @classmethod
    def from_dict(cls, data: Mapping[str, object]) -> "CartanDatum":
        try:
            vertex_count = int(data["vertices"])
            edges = [tuple(edge) for edge in data.get("edges", [])]
            t = {(int(item["i"]), int(item["j"])): item["value"] for item in data.get("t", [])}
        except (KeyError, TypeError, ValueError) as e:
            raise ParseError(f"Некорректное описание данных Картана: {e}", {"reason": str(e)})
        return cls.build(vertex_count, edges, t)


def type_a(rank: int, t: Optional[Mapping[Edge, object]] = None) -> CartanDatum:
    """sl_{rank+1}: путь из rank вершин"""
    return CartanDatum.build(rank, [(i, i + 1) for i in range(rank - 1)], t)


def d4(t: Optional[Mapping[Edge, object]] = None) -> CartanDatum:
    """D_4 с центральной вершиной 1"""
    return CartanDatum.build(4, [(0, 1), (1, 2), (1, 3)], t)


def triangle(t: Optional[Mapping[Edge, object]] = None) -> CartanDatum:
    """Аффинный граф A_2^(1)"""
    return CartanDatum.build(3, [(0, 1), (1, 2), (0, 2)], t)
