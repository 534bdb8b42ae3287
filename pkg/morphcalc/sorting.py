# -*- coding: utf-8 -*-
"""
Коммутационное переписывание слов в отсортированную нормальную форму

Правила при локальном весе μ (вес справа от пары):
    E_i F_i 1_μ -> F_i E_i 1_μ + [μ_i] 1_μ
    F_i E_i 1_μ -> E_i F_i 1_μ + [-μ_i] 1_μ
    E_i^(2) F_i 1_μ -> F_i E_i^(2) 1_μ + [μ_i + 1] E_i 1_μ
    F_i E_i^(2) 1_μ -> E_i^(2) F_i 1_μ + [-μ_i - 1] E_i 1_μ
    E_i F_j <-> F_j E_i при i != j

Ориентация выбирает направление переписывания:
    F_LEFT    - все F левее всех E (нормальная форма классов);
    E_LEFT    - все E левее всех F;
    EFFECTIVE - направление по знаку μ_i + μ_j (плюс 2 при E^(2)),
                поправки всегда неотрицательны.
"""
import logging
import random
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

from cartan.support import Support
from cartan.weight import Coords
from common.errors import NonTermination
from morphcalc.graded_class import GradedClass
from morphcalc.words import (
    Codes,
    Letter,
    MorphWord,
    code_letter,
    code_vertex,
    is_divided_code,
    letter_codes,
    weights_along,
)
from qgrade.laurent import LaurentInt
from qgrade.quantum import qint

logger = logging.getLogger(__name__)

DEFAULT_BUDGET = 1_000_000

Terms = Dict[Codes, LaurentInt]


class DropRule(Enum):
    """Когда отбрасывать слова, проходящие через веса вне носителя"""
    OFF = "off"
    FINAL = "final"
    EAGER = "eager"


class Orientation(Enum):
    F_LEFT = "f_left"
    E_LEFT = "e_left"
    EFFECTIVE = "effective"


def is_supported_word(codes: Codes, coords: Coords, support: Support) -> bool:
    return all(support.contains_coords(w) for w in weights_along(codes, coords))


def _redexes(codes: Codes, coords: Coords, support: Support, orientation: Orientation) -> List[int]:
    length = len(codes)
    if length < 2:
        return []
    path = weights_along(codes, coords)
    found = []
    for p in range(length - 1):
        left, right = codes[p], codes[p + 1]
        if (left > 0) == (right > 0):
            continue
        if orientation is Orientation.F_LEFT:
            applies = left > 0
        elif orientation is Orientation.E_LEFT:
            applies = left < 0
        else:
            nu = support.pairings(path[length - p - 2])
            total = nu[code_vertex(left)] + nu[code_vertex(right)]
            if is_divided_code(left) or is_divided_code(right):
                total += 2
            applies = total >= 0 if left > 0 else total < 0
        if applies:
            found.append(p)
    return found


def _rewrite_at(codes: Codes, p: int, coords: Coords, support: Support) -> List[Tuple[Codes, LaurentInt]]:
    left, right = codes[p], codes[p + 1]
    swapped = codes[:p] + (right, left) + codes[p + 2:]
    result = [(swapped, LaurentInt.one())]
    i = code_vertex(left)
    if i != code_vertex(right):
        return result
    path = weights_along(codes, coords)
    nu = support.pairing(path[len(codes) - p - 2], i)
    if is_divided_code(left) or is_divided_code(right):
        # E^(2) F 1_μ = F E^(2) 1_μ + [μ_i + 1] E 1_μ
        correction = qint(nu + 1) if left > 0 else qint(-nu - 1)
        replacement: Codes = (i + 1,)
    else:
        correction = qint(nu) if left > 0 else qint(-nu)
        replacement = ()
    if not correction.is_zero():
        result.append((codes[:p] + replacement + codes[p + 2:], correction))
    return result


def rewrite_terms(
    terms: Terms,
    coords: Coords,
    support: Support,
    orientation: Orientation = Orientation.F_LEFT,
    drop: DropRule = DropRule.OFF,
    budget: int = DEFAULT_BUDGET,
    strategy: str = "leftmost",
    rng: Optional[random.Random] = None,
) -> Terms:
    """
    Переписывает линейную комбинацию слов (в кодах) до нормальной формы

    Args:
        terms: Слово -> коэффициент, все слова с доменом coords
        coords: Корневые координаты общего домена
        support: Носитель (спаривания и правило отбрасывания)
        orientation: Направление переписывания
        drop: Правило отбрасывания слов вне носителя
        budget: Максимальное число шагов
        strategy: 'leftmost', 'rightmost' или 'random' (нужен rng)

    Raises:
        NonTermination: если бюджет исчерпан
    """
    pending: Terms = {}
    for word, coeff in terms.items():
        if not coeff.is_zero():
            pending[word] = pending.get(word, LaurentInt()) + coeff
    result: Terms = {}
    steps = 0

    while pending:
        word, coeff = pending.popitem()
        if coeff.is_zero():
            continue
        if drop is DropRule.EAGER and not is_supported_word(word, coords, support):
            continue
        positions = _redexes(word, coords, support, orientation)
        if not positions:
            result[word] = result.get(word, LaurentInt()) + coeff
            continue

        steps += 1
        if steps > budget:
            raise NonTermination(
                f"Исчерпан бюджет переписывания ({budget} шагов)",
                {"budget": budget, "orientation": orientation.value},
            )
        if strategy == "rightmost":
            p = positions[-1]
        elif strategy == "random":
            p = (rng or random).choice(positions)
        else:
            p = positions[0]
        for new_word, factor in _rewrite_at(word, p, coords, support):
            pending[new_word] = pending.get(new_word, LaurentInt()) + coeff * factor

    if drop is DropRule.FINAL:
        result = {w: c for w, c in result.items() if is_supported_word(w, coords, support)}
    cleaned = {w: c for w, c in result.items() if not c.is_zero()}
    logger.debug(f"Переписывание ({orientation.value}, {drop.value}): {steps} шагов, {len(cleaned)} слов")
    return cleaned


def sort_class(
    cls: GradedClass,
    support: Support,
    drop: DropRule = DropRule.OFF,
    orientation: Orientation = Orientation.F_LEFT,
    assert_effective: bool = False,
    budget: int = DEFAULT_BUDGET,
    strategy: str = "leftmost",
    rng: Optional[random.Random] = None,
) -> GradedClass:
    """
    Сортирует класс: все F левее всех E и E^(2) (для ориентации F_LEFT)

    E_i^(2) остается отдельной буквой и коммутирует с F_i с поправкой
    [μ_i + 1] E_i, поэтому коэффициенты остаются целыми.

    Raises:
        NegativeMultiplicity: если запрошена эффективность и она нарушена
    """
    coords = cls.domain.coords
    terms: Terms = {}
    for word, coeff in cls.items():
        codes = letter_codes(word.letters)
        terms[codes] = terms.get(codes, LaurentInt()) + coeff

    rewritten = rewrite_terms(terms, coords, support, orientation, drop, budget, strategy, rng)

    result = GradedClass(cls.domain, cls.codomain)
    for codes, coeff in rewritten.items():
        letters = tuple(code_letter(code) for code in codes)
        result = result + GradedClass(cls.domain, cls.codomain, {MorphWord(letters, cls.domain): coeff})
    if assert_effective:
        result.assert_effective()
    return result


def decompose(word: MorphWord, support: Support, budget: int = DEFAULT_BUDGET) -> GradedClass:
    """
    Разложение слова в расщепленной группе Гротендика

    Слова, проходящие через нулевые веса, отбрасываются сразу; переписывание
    ориентировано по знаку локального веса, поэтому кратности неотрицательны.

    Raises:
        NegativeMultiplicity: носитель не удовлетворяет структурным условиям
    """
    if not support.contains(word.domain):
        return GradedClass.zero_like(word)
    result = sort_class(
        GradedClass.of_word(word),
        support,
        drop=DropRule.EAGER,
        orientation=Orientation.EFFECTIVE,
        budget=budget,
    )
    return result.assert_effective()


def sorted_by_kind(letters: Sequence[Letter]) -> bool:
    """Все F стоят левее всех E"""
    seen_e = False
    for letter in letters:
        if letter.kind.value.startswith("E"):
            seen_e = True
        elif seen_e:
            return False
    return True
