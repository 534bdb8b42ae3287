# -*- coding: utf-8 -*-
"""
Разложение Серра: E_i E_j E_i = E_i^(2) E_j + E_j E_i^(2) при <i, j> = -1
"""
import logging
from itertools import permutations
from typing import List, Optional, Tuple

from cartan.support import Support
from common.errors import NotAdjacent, PreconditionError
from morphcalc.graded_class import GradedClass
from morphcalc.sorting import DropRule, Orientation, Terms, rewrite_terms
from morphcalc.words import Codes, E, Ed2, LetterKind, MorphWord, expand_letters
from qgrade.laurent import LaurentInt
from qgrade.quantum import qint

logger = logging.getLogger(__name__)


def find_serre_factor(word: MorphWord) -> Tuple[int, int, int]:
    """
    Ищет первый множитель E_i E_j E_i с <i, j> = -1

    Returns:
        (позиция, i, j)

    Raises:
        NotAdjacent: найден только множитель с несмежными i, j
        PreconditionError: множителя вида E_i E_j E_i нет
    """
    datum = word.domain.datum
    letters = word.letters
    non_adjacent: Optional[Tuple[int, int, int]] = None
    for p in range(len(letters) - 2):
        a, b, c = letters[p], letters[p + 1], letters[p + 2]
        if not all(x.kind is LetterKind.E for x in (a, b, c)):
            continue
        if a.vertex != c.vertex or a.vertex == b.vertex:
            continue
        if datum.c(a.vertex, b.vertex) == -1:
            return p, a.vertex, b.vertex
        if non_adjacent is None:
            non_adjacent = (p, a.vertex, b.vertex)
    if non_adjacent is not None:
        _, i, j = non_adjacent
        raise NotAdjacent(f"Вершины {i + 1} и {j + 1} не смежны", {"i": i, "j": j})
    raise PreconditionError(f"В слове {word} нет множителя E_i E_j E_i", {"word": str(word)})


def serre_rewrite(word: MorphWord) -> GradedClass:
    """Заменяет первый множитель E_i E_j E_i на E_i^(2) E_j + E_j E_i^(2)"""
    p, i, j = find_serre_factor(word)
    prefix, suffix = word.letters[:p], word.letters[p + 3:]
    first = MorphWord(prefix + (Ed2(i), E(j)) + suffix, word.domain)
    second = MorphWord(prefix + (E(j), Ed2(i)) + suffix, word.domain)
    return GradedClass.of_word(first) + GradedClass.of_word(second)


def _tail_words(codes: Codes) -> List[Codes]:
    """Все расстановки F-букв, компенсирующих E-буквы слова"""
    f_codes = [-c for c in codes if c > 0]
    return sorted(set(permutations(f_codes)))


def _e_free(terms: Terms) -> Terms:
    return {w: c for w, c in terms.items() if all(code < 0 for code in w)}


def verify_serre(word: MorphWord, support: Support) -> bool:
    """
    Проверяет разложение Серра на уровне классов

    Для каждой пробы F_J сравниваются части без E-букв у отсортированных
    [2]·X·F_J и [2]·(разложение)·F_J. Элемент Серра коммутирует со всеми F,
    поэтому эти части обязаны совпасть.
    """
    original_codes, original_divided = expand_letters(word.letters)
    rewritten = serre_rewrite(word)
    top = max([original_divided] + [expand_letters(w.letters)[1] for w in rewritten.words()])
    for tail in _tail_words(original_codes):
        domain = word.domain
        for code in tail:
            domain = domain.shifted(abs(code) - 1, 1)
        coords = domain.coords

        # обе стороны домножены на [2]^top, E_i^(2) раскрыто как [2]^-1 E_i E_i
        left: Terms = {original_codes + tail: qint(2) ** (top - original_divided)}
        right: Terms = {}
        for summand, coeff in rewritten.items():
            codes, divided = expand_letters(summand.letters)
            key = codes + tail
            right[key] = right.get(key, LaurentInt()) + coeff * qint(2) ** (top - divided)

        left_sorted = _e_free(rewrite_terms(left, coords, support, Orientation.F_LEFT, DropRule.OFF))
        right_sorted = _e_free(rewrite_terms(right, coords, support, Orientation.F_LEFT, DropRule.OFF))
        if left_sorted != right_sorted:
            logger.warning(f"Хвост {tail} различает стороны разложения Серра для {word}")
            return False
    logger.debug(f"Разложение Серра для {word} проверено")
    return True
