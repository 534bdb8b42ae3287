# -*- coding: utf-8 -*-
"""
Допустимые сдвиги весов, средние веса и канонический путь

Сдвиг λ -> λ + α_k допустим при <λ, α_k> >= -1, сдвиг λ -> λ - α_k
при <λ, α_k> <= 1; оба конца должны лежать в носителе.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from cartan.support import Support
from cartan.weight import Weight
from common.errors import ClaimFailure, ParseError, PreconditionError

logger = logging.getLogger(__name__)

Step = Tuple[int, int]


def is_valid_slide(weight: Weight, k: int, c: int, support: Support) -> bool:
    """
    Проверяет сдвиг weight -> weight + c·α_k

    Args:
        weight: Начальный вес
        k: Вершина
        c: Знак +1 или -1
        support: Носитель

    Returns:
        True если выполнено неравенство на спаривание и оба конца ненулевые
    """
    pairing = weight.pairing(k)
    allowed = pairing >= -1 if c > 0 else pairing <= 1
    return allowed and support.contains(weight) and support.contains(weight.shifted(k, c))


def _check_step(step: Sequence[int]) -> Step:
    if len(step) != 2:
        raise ParseError(f"Шаг должен иметь вид [знак, вершина], получено {list(step)}")
    c, k = int(step[0]), int(step[1])
    if c not in (1, -1):
        raise ParseError(f"Знак шага должен быть +1 или -1, получено {c}", {"step": [c, k]})
    return c, k


@dataclass(frozen=True)
class SlideSeq:
    """
    Последовательность шагов (c, k) от веса base

    Для последовательностей перемасштабирования base может отсутствовать:
    там важны только сами шаги.
    """
    base: Optional[Weight]
    steps: Tuple[Step, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(_check_step(s) for s in self.steps))
        if self.base is not None:
            n = self.base.datum.vertex_count
            for c, k in self.steps:
                if not 0 <= k < n:
                    raise ParseError(f"Вершина {k} вне графа", {"step": [c, k]})

    def __len__(self) -> int:
        return len(self.steps)

    def with_steps(self, steps: Iterable[Step]) -> "SlideSeq":
        return SlideSeq(self.base, tuple(steps))

    def step_sum(self) -> Dict[int, int]:
        """Коэффициенты sum c_l α_{k_l}, нулевые опущены"""
        total: Dict[int, int] = {}
        for c, k in self.steps:
            total[k] = total.get(k, 0) + c
        return {k: v for k, v in sorted(total.items()) if v}

    def weights(self) -> List[Weight]:
        """Концы всех префиксов, начиная с base"""
        if self.base is None:
            raise PreconditionError("У последовательности нет начального веса")
        current = self.base
        out = [current]
        for c, k in self.steps:
            current = current.shifted(k, c)
            out.append(current)
        return out

    def endpoint(self) -> Weight:
        return self.weights()[-1]

    def to_json(self) -> List[List[int]]:
        return [[c, k] for c, k in self.steps]

    def __str__(self) -> str:
        return "(" + ", ".join(f"{'+' if c > 0 else '-'}{k}" for c, k in self.steps) + ")"


def endpoint(seq: SlideSeq) -> Weight:
    return seq.endpoint()


def is_valid_path(seq: SlideSeq, support: Support) -> bool:
    """Каждый шаг - допустимый сдвиг из конца предыдущего префикса"""
    if seq.base is None:
        return False
    current = seq.base
    if not support.contains(current):
        return False
    for c, k in seq.steps:
        if not is_valid_slide(current, k, c, support):
            return False
        current = current.shifted(k, c)
    return True


def first_invalid_step(seq: SlideSeq, support: Support) -> Optional[int]:
    """Номер (с единицы) первого недопустимого шага или None"""
    if seq.base is None:
        raise PreconditionError("У последовательности нет начального веса")
    current = seq.base
    for position, (c, k) in enumerate(seq.steps, start=1):
        if not is_valid_slide(current, k, c, support):
            return position
        current = current.shifted(k, c)
    return None


# --- средние веса ---

def slide_graph(support: Support) -> nx.DiGraph:
    """Ориентированный граф допустимых сдвигов на весах носителя"""
    graph = nx.DiGraph()
    for weight in support.weights():
        graph.add_node(weight.coords)
        for k in support.datum.vertices:
            for c in (1, -1):
                if is_valid_slide(weight, k, c, support):
                    graph.add_edge(weight.coords, weight.shifted(k, c).coords, step=(c, k))
    return graph


def is_middle_weight(weight: Weight, support: Support, graph: Optional[nx.DiGraph] = None) -> bool:
    """Из weight допустимыми сдвигами достижим весь носитель"""
    if not support.contains(weight):
        return False
    graph = graph if graph is not None else slide_graph(support)
    reached = nx.descendants(graph, weight.coords) | {weight.coords}
    return len(reached) == graph.number_of_nodes()


def middle_weights(support: Support) -> List[Weight]:
    graph = slide_graph(support)
    found = [w for w in support.weights() if is_middle_weight(w, support, graph)]
    logger.info(f"Средних весов: {len(found)} из {len(support)}")
    return found


# --- канонический путь ---

def canonical_path(mu: Weight, lam: Weight, support: Support) -> SlideSeq:
    """
    Канонический путь от среднего веса mu до lam

    Путь строится с конца: при λ = μ + sum a_j α_j выбирается наименьшее i
    с a_i, λ_i >= 1 (последний шаг +i) или a_i, λ_i <= -1 (последний шаг -i),
    затем то же повторяется для λ ∓ α_i.

    Raises:
        ClaimFailure: данные не типа A, либо подходящего i нет, либо
            промежуточный вес вне носителя
    """
    datum = support.datum
    if not datum.is_type_a():
        raise ClaimFailure("Канонический путь определен только для типа A", {"vertices": datum.vertex_count})
    for weight in (mu, lam):
        if not support.contains(weight):
            raise PreconditionError(f"Вес {weight} вне носителя", {"coords": list(weight.coords)})

    a = list(lam.difference(mu))
    current = lam
    backward: List[Step] = []
    while any(a):
        pairings = current.pairings()
        chosen: Optional[Step] = None
        for i, (ai, li) in enumerate(zip(a, pairings)):
            if ai >= 1 and li >= 1:
                chosen = (1, i)
                break
            if ai <= -1 and li <= -1:
                chosen = (-1, i)
                break
        if chosen is None:
            raise ClaimFailure(
                f"Нет вершины для шага канонического пути в {current}",
                {"coords": list(current.coords), "remaining": a},
            )
        c, i = chosen
        previous = current.shifted(i, -c)
        if not support.contains(previous):
            raise ClaimFailure(
                f"Промежуточный вес {previous} вне носителя",
                {"coords": list(previous.coords)},
            )
        backward.append(chosen)
        a[i] -= c
        current = previous

    path = SlideSeq(mu, tuple(reversed(backward)))
    logger.debug(f"Канонический путь {mu} -> {lam}: {path}")
    return path


def parse_steps(data: Sequence[Sequence[int]]) -> Tuple[Step, ...]:
    """Шаги из JSON-массива [[знак, вершина], ...]"""
    if not isinstance(data, (list, tuple)):
        raise ParseError("Ожидался массив шагов [[знак, вершина], ...]")
    return tuple(_check_step(step) for step in data)

