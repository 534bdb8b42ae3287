# -*- coding: utf-8 -*-
"""
Проверка определяющих соотношений R_Q в окружающих контекстах

Каждое соотношение задается парой элементов на своих нитях; контекст
добавляет нити слева и справа и образующие снизу и сверху. Обе стороны
приводятся к нормальной форме и сравниваются.
"""
import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from cartan.datum import CartanDatum
from klr.element import KlrElement
from klr.normal_form import DEFAULT_STEP_BUDGET, KlrRewriter
from klr.words import CROSS, Gen, KlrWord, Labels, cross, dot

logger = logging.getLogger(__name__)

Side = Sequence[Tuple[Sequence[Gen], object]]


@dataclass(frozen=True)
class RelationInstance:
    name: str
    labels: Labels
    lhs: Tuple[Tuple[Tuple[Gen, ...], Fraction], ...]
    rhs: Tuple[Tuple[Tuple[Gen, ...], Fraction], ...]


@dataclass
class RelationReport:
    checked: int = 0
    failures: List[Dict[str, object]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> Dict[str, object]:
        return {"checked": self.checked, "passed": self.passed, "failures": self.failures}


def _instance(name: str, labels: Sequence[int], lhs: Side, rhs: Side) -> RelationInstance:
    def freeze(side: Side):
        return tuple((tuple(gens), Fraction(coeff)) for gens, coeff in side)
    return RelationInstance(name, tuple(labels), freeze(lhs), freeze(rhs))


def relation_instances(datum: CartanDatum) -> Iterator[RelationInstance]:
    """Все соотношения 1-6 на минимальном числе нитей"""
    vertices = list(datum.vertices)
    x1, x2, x3 = dot(1), dot(2), dot(3)
    t1, t2 = cross(1), cross(2)

    for i in vertices:
        ii = (i, i)
        yield _instance("nilhecke-dot-below", ii, [((x1, t1), 1)], [((t1, x2), 1), ((), 1)])
        yield _instance("nilhecke-dot-above", ii, [((t1, x1), 1)], [((x2, t1), 1), ((), 1)])
        yield _instance("nilhecke-square", ii, [((t1, t1), 1)], [])
        yield _instance("nilhecke-braid", (i, i, i), [((t1, t2, t1), 1)], [((t2, t1, t2), 1)])

    for i, j in product(vertices, vertices):
        if i == j:
            continue
        ij = (i, j)
        yield _instance("dot-slide-left", ij, [((t1, x2), 1)], [((x1, t1), 1)])
        yield _instance("dot-slide-right", ij, [((t1, x1), 1)], [((x2, t1), 1)])
        c = datum.c(i, j)
        if c == -1:
            yield _instance(
                "braid-iji",
                (i, j, i),
                [((t1, t2, t1), 1)],
                [((t2, t1, t2), 1), ((), datum.t(i, j))],
            )
            yield _instance(
                "square-adjacent",
                ij,
                [((t1, t1), 1)],
                [((x1,), datum.t(i, j)), ((x2,), datum.t(j, i))],
            )
        else:
            yield _instance("square-distant", ij, [((t1, t1), 1)], [((), datum.t(i, j))])
            yield _instance("braid-iji-distant", (i, j, i), [((t1, t2, t1), 1)], [((t2, t1, t2), 1)])

    for i, j, k in product(vertices, vertices, vertices):
        if i == k:
            continue
        yield _instance("braid", (i, j, k), [((t1, t2, t1), 1)], [((t2, t1, t2), 1)])

    for i, j in product(vertices, vertices):
        yield _instance("far-dots", (i, j), [((x1, x2), 1)], [((x2, x1), 1)])
    for i, j, k in product(vertices, vertices, vertices):
        yield _instance("far-dot-crossing", (i, j, k), [((x3, t1), 1)], [((t1, x3), 1)])
        yield _instance("far-crossing-dot", (i, j, k), [((x1, t2), 1)], [((t2, x1), 1)])


def _shift(gens: Sequence[Gen], offset: int) -> Tuple[Gen, ...]:
    return tuple(Gen(g.kind, g.pos + offset) for g in gens)


def _side_element(labels: Labels, side, offset: int, top: Labels) -> KlrElement:
    element = KlrElement(labels, top)
    for gens, coeff in side:
        element = element + KlrElement.of_word(KlrWord(labels, _shift(gens, offset)), coeff)
    return element


def _all_gens(strands: int) -> List[Gen]:
    return [dot(k) for k in range(1, strands + 1)] + [cross(k) for k in range(1, strands)]


def _contexts(
    strands: int,
    ambient: int,
    samples: Optional[int],
    rng: random.Random,
) -> List[Tuple[Tuple[Gen, ...], Tuple[Gen, ...]]]:
    """
    Пары (снизу, сверху) из не более чем ambient образующих

    По умолчанию перебираются все пары. При заданном samples контексты из
    двух и более образующих выбираются случайно, samples штук на вложение.
    """
    gens = _all_gens(strands)
    exhaustive = samples is None or ambient <= 1
    longest = ambient if exhaustive else min(ambient, 1)
    contexts = []
    for total in range(longest + 1):
        for below in range(total + 1):
            for low in product(gens, repeat=below):
                for high in product(gens, repeat=total - below):
                    contexts.append((low, high))
    if exhaustive:
        return contexts
    for _ in range(samples):
        total = rng.randint(2, ambient)
        below = rng.randint(0, total)
        contexts.append((
            tuple(rng.choice(gens) for _ in range(below)),
            tuple(rng.choice(gens) for _ in range(total - below)),
        ))
    return contexts


def relation_check(
    datum: CartanDatum,
    max_len: int = 3,
    ambient: int = 1,
    samples: Optional[int] = None,
    seed: int = 0,
    budget: int = DEFAULT_STEP_BUDGET,
    names: Optional[Sequence[str]] = None,
) -> RelationReport:
    """
    Проверяет все соотношения во всех вложениях до max_len нитей

    Args:
        datum: Граф со скалярами t_ij
        max_len: Наибольшее число нитей
        ambient: Наибольшее число окружающих образующих
        samples: Число случайных контекстов на вложение; None - полный перебор
        seed: Зерно генератора контекстов
        budget: Бюджет шагов переписывания на одно приведение
        names: Подмножество соотношений по имени

    Returns:
        RelationReport со списком несовпадений
    """
    rng = random.Random(seed)
    rewriter = KlrRewriter(datum, budget)
    report = RelationReport()
    vertices = list(datum.vertices)

    for instance in relation_instances(datum):
        if names and instance.name not in names:
            continue
        width = len(instance.labels)
        for strands in range(width, max_len + 1):
            for offset in range(strands - width + 1):
                for extra in product(vertices, repeat=strands - width):
                    labels = tuple(extra[:offset]) + instance.labels + tuple(extra[offset:])
                    frame = KlrWord(labels, _shift(instance.lhs[0][0], offset))
                    lhs = _side_element(labels, instance.lhs, offset, frame.top)
                    rhs = _side_element(labels, instance.rhs, offset, frame.top)
                    for below, above in _contexts(strands, ambient, samples, rng):
                        report.checked += 1
                        left, right = _embed(lhs, rhs, below, above)
                        if rewriter.normalize(left) != rewriter.normalize(right):
                            report.failures.append({
                                "relation": instance.name,
                                "labels": list(labels),
                                "below": " ".join(str(g) for g in below),
                                "above": " ".join(str(g) for g in above),
                            })
                            logger.warning(f"Соотношение {instance.name} нарушено на e{list(labels)}")

    logger.info(f"Проверено {report.checked} вложений соотношений, несовпадений {len(report.failures)}")
    return report


def _embed(lhs: KlrElement, rhs: KlrElement, below: Tuple[Gen, ...], above: Tuple[Gen, ...]) -> Tuple[KlrElement, KlrElement]:
    start = lhs.bottom
    low_word = KlrWord(_preimage(start, below), below)
    low = KlrElement.of_word(low_word)
    high = KlrElement.of_word(KlrWord(lhs.top, above))
    return low.compose(lhs).compose(high), low.compose(rhs).compose(high)


def _preimage(labels: Labels, gens: Tuple[Gen, ...]) -> Labels:
    """Нижние метки слова gens, верх которого равен labels"""
    out = list(labels)
    for g in reversed(gens):
        if g.kind == CROSS:
            out[g.pos - 1], out[g.pos] = out[g.pos], out[g.pos - 1]
    return tuple(out)


def triple_crossing(labels: Sequence[int], primed: bool = False) -> KlrElement:
    """
    T_ijk = (T_jk I)(I T_ik)(T_ij I) или T'_ijk = (I T_ij)(T_ik I)(I T_jk) на e(ijk)

    Степень равна -(<i,j> + <i,k> + <j,k>).
    """
    labels = tuple(labels)
    gens = (cross(2), cross(1), cross(2)) if primed else (cross(1), cross(2), cross(1))
    return KlrElement.of_word(KlrWord(labels, gens))

