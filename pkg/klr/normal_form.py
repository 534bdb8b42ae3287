# -*- coding: utf-8 -*-
"""
Нормальная форма элементов R_Q

Базисные слова: точки внизу, над ними пересечения вдоль лексикографически
наименьшего приведенного слова перестановки. Произведение вычисляется
домножением сверху по одной образующей:
    x_k поверх пересечения опускается вниз (соотношения 1-2),
    t_j поверх слова либо удлиняет его (далее braid-ходы к каноническому
    слову, соотношения 1, 3, 5), либо дает квадрат t_j^2 (соотношения 1, 3, 4).
Коммутация далеких пересечений (соотношение 6) - ребро графа приведенных слов.
"""
import logging
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Tuple

import networkx as nx

from cartan.datum import CartanDatum
from common.errors import NonTermination
from klr.element import KlrElement
from klr.words import CROSS, DOT, Gen, KlrWord, Labels, cross, dot, swap_labels

logger = logging.getLogger(__name__)

DEFAULT_STEP_BUDGET = 1_000_000

Dots = Tuple[int, ...]
Crossings = Tuple[int, ...]
Basis = Tuple[Dots, Crossings]
Combo = Dict[Basis, Fraction]


# --- перестановки и приведенные слова ---

def arrangement(word: Crossings, strands: int) -> Tuple[int, ...]:
    """Какая исходная нить стоит на каждой позиции после слова"""
    return swap_all(tuple(range(strands)), word)


def swap_all(labels: Tuple[int, ...], word: Crossings) -> Tuple[int, ...]:
    for k in word:
        labels = swap_labels(labels, k)
    return labels


def inversions(arr: Tuple[int, ...]) -> int:
    return sum(1 for a in range(len(arr)) for b in range(a + 1, len(arr)) if arr[a] > arr[b])


def reduced_word(arr: Tuple[int, ...]) -> Crossings:
    """Некоторое приведенное слово перестановки (снизу вверх)"""
    current = list(arr)
    reversed_word = []
    while True:
        for k in range(len(current) - 1):
            if current[k] > current[k + 1]:
                current[k], current[k + 1] = current[k + 1], current[k]
                reversed_word.append(k + 1)
                break
        else:
            break
    return tuple(reversed(reversed_word))


def _moves(word: Crossings):
    for p in range(len(word) - 1):
        a, b = word[p], word[p + 1]
        if abs(a - b) >= 2:
            yield word[:p] + (b, a) + word[p + 2:], ("swap", p)
        if p + 2 < len(word) and abs(a - b) == 1 and word[p + 2] == a:
            yield word[:p] + (b, a, b) + word[p + 3:], ("braid", p)


@lru_cache(maxsize=None)
def word_graph(arr: Tuple[int, ...]) -> nx.Graph:
    """Граф приведенных слов перестановки; ребра - swap и braid ходы"""
    start = reduced_word(arr)
    graph = nx.Graph()
    graph.add_node(start)
    frontier = [start]
    while frontier:
        word = frontier.pop()
        for other, move in _moves(word):
            if other not in graph:
                graph.add_node(other)
                frontier.append(other)
            graph.add_edge(word, other, move=move)
    return graph


@lru_cache(maxsize=None)
def canonical_word(arr: Tuple[int, ...]) -> Crossings:
    return min(word_graph(arr).nodes)


def basis_word(bottom: Labels, basis: Basis) -> KlrWord:
    dots, crossings = basis
    gens = []
    for k, count in enumerate(dots, start=1):
        gens.extend([dot(k)] * count)
    gens.extend(cross(j) for j in crossings)
    return KlrWord(tuple(bottom), tuple(gens))


def _add_into(target: Combo, source: Combo, factor: Fraction) -> None:
    if factor == 0:
        return
    for basis, coeff in source.items():
        total = target.get(basis, Fraction(0)) + coeff * factor
        if total == 0:
            target.pop(basis, None)
        else:
            target[basis] = total


class KlrRewriter:
    """
    Приведение к нормальной форме над фиксированным графом и скалярами t_ij

    Кэш произведений хранится в экземпляре: один экземпляр на поток.
    """

    def __init__(self, datum: CartanDatum, budget: int = DEFAULT_STEP_BUDGET):
        self.datum = datum
        self.budget = budget
        self.steps = 0
        self._cache: Dict[Tuple[Labels, Basis, Gen], Combo] = {}

    def _tick(self) -> None:
        self.steps += 1
        if self.steps > self.budget:
            raise NonTermination(
                f"Исчерпан бюджет {self.budget} шагов переписывания",
                {"budget": self.budget},
            )

    # --- домножение сверху ---

    def _times_gen(self, bottom: Labels, combo: Combo, gen: Gen) -> Combo:
        result: Combo = {}
        for basis, coeff in combo.items():
            _add_into(result, self._gen_on_basis(bottom, basis, gen), coeff)
        return result

    def _gen_on_basis(self, bottom: Labels, basis: Basis, gen: Gen) -> Combo:
        key = (bottom, basis, gen)
        cached = self._cache.get(key)
        if cached is not None:
            return cached
        self._tick()
        if gen.kind == DOT:
            value = self._dot_on_basis(bottom, basis, gen.pos)
        else:
            value = self._cross_on_basis(bottom, basis, gen.pos)
        self._cache[key] = value
        return value

    def _dot_on_basis(self, bottom: Labels, basis: Basis, k: int) -> Combo:
        dots, crossings = basis
        if not crossings:
            raised = list(dots)
            raised[k - 1] += 1
            return {(tuple(raised), ()): Fraction(1)}

        j = crossings[-1]
        rest: Basis = (dots, crossings[:-1])
        labels = swap_all(bottom, rest[1])
        equal = labels[j - 1] == labels[j]
        # x_j t_j = t_j x_{j+1} + e,  x_{j+1} t_j = t_j x_j - e при равных метках
        if k == j:
            lowered, correction = j + 1, 1
        elif k == j + 1:
            lowered, correction = j, -1
        else:
            lowered, correction = k, 0

        below = self._gen_on_basis(bottom, rest, dot(lowered))
        result = self._times_gen(bottom, below, cross(j))
        if equal and correction:
            _add_into(result, {rest: Fraction(1)}, Fraction(correction))
        return result

    def _cross_on_basis(self, bottom: Labels, basis: Basis, j: int) -> Combo:
        dots, crossings = basis
        arr = arrangement(crossings, len(bottom))
        if inversions(swap_labels(arr, j)) > len(crossings):
            return self._canonicalize(bottom, dots, crossings + (j,))

        # слово перестановки, оканчивающееся на t_j, затем t_j^2
        graph = word_graph(arr)
        target = min(w for w in graph.nodes if w[-1] == j)
        result: Combo = {}
        for low_basis, coeff in self._braid_corrections(bottom, dots, crossings, target).items():
            _add_into(result, self._gen_on_basis(bottom, low_basis, cross(j)), coeff)

        shorter = target[:-1]
        labels = swap_all(bottom, shorter)
        p, q = labels[j - 1], labels[j]
        if p == q:
            return result
        base = self._canonicalize(bottom, dots, shorter)
        c = self.datum.c(p, q)
        if c == 0:
            _add_into(result, base, self.datum.t(p, q))
        else:
            _add_into(result, self._times_gen(bottom, base, dot(j)), self.datum.t(p, q))
            _add_into(result, self._times_gen(bottom, base, dot(j + 1)), self.datum.t(q, p))
        return result

    # --- braid-ходы ---

    def _braid_corrections(self, bottom: Labels, dots: Dots, word: Crossings, target: Crossings) -> Combo:
        """
        Поправки при переходе от word к target: t_word x^a = t_target x^a + поправки

        Поправка возникает только на тройке меток (i, j, i) с <i, j> = -1:
            t_1 t_2 t_1 e(iji) = t_2 t_1 t_2 e(iji) + t_ij e(iji)
        """
        corrections: Combo = {}
        if word == target:
            return corrections
        graph = word_graph(arrangement(word, len(bottom)))
        path = nx.shortest_path(graph, word, target)
        for before, after in zip(path, path[1:]):
            kind, p = graph.edges[before, after]["move"]
            if kind != "braid":
                continue
            lo = min(before[p], before[p + 1])
            labels = swap_all(bottom, before[:p])
            i, j, k = labels[lo - 1], labels[lo], labels[lo + 1]
            if i != k or i == j or self.datum.c(i, j) != -1:
                continue
            sign = 1 if before[p] == lo else -1
            remainder = self._evaluate_crossings(bottom, dots, before[:p] + before[p + 3:])
            _add_into(corrections, remainder, sign * self.datum.t(i, j))
            logger.debug(f"Braid-поправка на e{list(labels)} в позиции {p}")
        return corrections

    def _canonicalize(self, bottom: Labels, dots: Dots, word: Crossings) -> Combo:
        target = canonical_word(arrangement(word, len(bottom)))
        result = self._braid_corrections(bottom, dots, word, target)
        _add_into(result, {(dots, target): Fraction(1)}, Fraction(1))
        return result

    def _evaluate_crossings(self, bottom: Labels, dots: Dots, crossings: Crossings) -> Combo:
        combo: Combo = {(dots, ()): Fraction(1)}
        for j in crossings:
            combo = self._times_gen(bottom, combo, cross(j))
        return combo

    # --- публичный интерфейс ---

    def evaluate(self, word: KlrWord) -> Combo:
        bottom = word.bottom
        combo: Combo = {(tuple([0] * len(bottom)), ()): Fraction(1)}
        for gen in word.gens:
            combo = self._times_gen(bottom, combo, gen)
        return combo

    def normalize(self, element: KlrElement) -> KlrElement:
        """
        Единственный представитель в базисе {t_w · точки снизу · e(ν)}

        Raises:
            NonTermination: исчерпан бюджет шагов
        """
        self.steps = 0
        total: Combo = {}
        for word, coeff in element.items():
            _add_into(total, self.evaluate(word), coeff)
        result = KlrElement(
            element.bottom,
            element.top,
            {basis_word(element.bottom, basis): coeff for basis, coeff in total.items()},
        )
        logger.debug(f"Нормальная форма {element} = {result} за {self.steps} шагов")
        return result

    def clear(self) -> None:
        self._cache.clear()


def normalize(element: KlrElement, datum: CartanDatum, budget: int = DEFAULT_STEP_BUDGET) -> KlrElement:
    return KlrRewriter(datum, budget).normalize(element)


def is_normal(word: KlrWord) -> bool:
    """Слово уже имеет вид точки-внизу и каноническое приведенное слово"""
    gens = word.gens
    split = 0
    while split < len(gens) and gens[split].kind == DOT:
        split += 1
    dot_positions = [g.pos for g in gens[:split]]
    if dot_positions != sorted(dot_positions):
        return False
    crossings = tuple(g.pos for g in gens[split:])
    if any(g.kind != CROSS for g in gens[split:]):
        return False
    arr = arrangement(crossings, word.strands)
    return inversions(arr) == len(crossings) and canonical_word(arr) == crossings
