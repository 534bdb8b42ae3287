# -*- coding: utf-8 -*-
"""
Критерии ненулевости 1-морфизмов по носителю
"""
import logging
from typing import Iterable

from cartan.support import Support
from cartan.weight import Weight
from morphcalc.divided import expand_divided
from morphcalc.sorting import decompose
from morphcalc.words import LetterKind, MorphWord

logger = logging.getLogger(__name__)


def _all_supported(support: Support, weights: Iterable[Weight]) -> bool:
    return all(support.contains(w) for w in weights)


def is_nonzero(word: MorphWord, support: Support) -> bool:
    """
    Ненулевость слова

    Точные критерии для форм E_i, E_j E_i, E_i F_j и E_i E_i F_j (i != j);
    для остальных слов - ненулевое эффективное разложение (достаточное условие).
    E_i^(2) ненулева тогда и только тогда, когда ненулево E_i E_i.
    """
    if word.has_divided:
        word, _ = expand_divided(word)
    lam = word.domain
    if not support.contains(lam):
        return False

    letters = word.letters
    kinds = tuple(letter.kind for letter in letters)
    E, F = LetterKind.E, LetterKind.F

    if kinds == (E,):
        i = letters[0].vertex
        return _all_supported(support, [lam, lam.shifted(i)])

    if kinds == (E, E):
        j, i = letters[0].vertex, letters[1].vertex
        return _all_supported(support, [lam, lam.shifted(i), lam.shifted(i).shifted(j)])

    if kinds == (E, F) and letters[0].vertex != letters[1].vertex:
        i, j = letters[0].vertex, letters[1].vertex
        middle = lam.shifted(j, -1)
        return _all_supported(support, [
            middle,
            middle.shifted(i),
            middle.shifted(j),
            middle.shifted(i).shifted(j),
        ])

    if (kinds == (E, E, F) and letters[0].vertex == letters[1].vertex
            and letters[0].vertex != letters[2].vertex):
        i, j = letters[0].vertex, letters[2].vertex
        middle = lam.shifted(j, -1).shifted(i)
        return _all_supported(
            support,
            [middle.shifted(i, r) for r in (-1, 0, 1)]
            + [middle.shifted(j).shifted(i, r) for r in (-1, 0, 1)],
        )

    result = not decompose(word, support).is_zero()
    logger.debug(f"Ненулевость {word} по разложению: {result}")
    return result
