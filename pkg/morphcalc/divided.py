# -*- coding: utf-8 -*-
"""
Hom-пространства со словами, содержащими E_i^(2)

E_i E_i = E_i^(2)<1> ⊕ E_i^(2)<-1>, поэтому для каждой разделенной степени
    f(d) = g(d - 1) + g(d + 1),
где f - ответ для раскрытого слова, g - искомый. Обратная свертка идет
снизу вверх: g(d) = f(d - 1) - g(d - 2).
"""
import logging
from typing import Tuple

from common.errors import WindowTooNarrow
from morphcalc.words import E, LetterKind, MorphWord
from qgrade.dimtable import UNKNOWN, ZERO, DimTable, DimValue, Exactly, Unknown

logger = logging.getLogger(__name__)


def expand_divided(word: MorphWord) -> Tuple[MorphWord, int]:
    """Заменяет каждую E_i^(2) на E_i E_i"""
    letters = []
    count = 0
    for letter in word.letters:
        if letter.kind is LetterKind.ED2:
            letters.extend((E(letter.vertex), E(letter.vertex)))
            count += 1
        else:
            letters.append(letter)
    return MorphWord(tuple(letters), word.domain), count


def deconvolve(table: DimTable) -> DimTable:
    """
    Решает f(d) = g(d - 1) + g(d + 1) относительно g на том же окне

    Raises:
        WindowTooNarrow: если f не равна Exactly(0) в двух нижних степенях окна
    """
    lo, hi = table.window
    if hi - lo < 1 or table.at(lo) != ZERO or table.at(lo + 1) != ZERO:
        raise WindowTooNarrow(
            f"Для обратной свертки нужны нули в степенях {lo} и {lo + 1}",
            {"window": [lo, hi], "bottom": [table.at(lo).to_json(), table.at(lo + 1).to_json()]},
        )

    # f(lo) = 0 и f(lo + 1) = 0 дают g = 0 в степенях lo - 1 .. lo + 2
    g = {lo - 1: ZERO, lo: ZERO, lo + 1: ZERO, lo + 2: ZERO}
    for d in range(lo + 3, hi + 1):
        f_value = table.at(d - 1)
        below = g[d - 2]
        if isinstance(f_value, Unknown) or isinstance(below, Unknown):
            g[d] = UNKNOWN
        else:
            g[d] = Exactly(f_value.n - below.n)
    return DimTable.from_function(lo, hi, lambda d: g[d])


def hom_dim_divided(engine, source: MorphWord, target: MorphWord, window: Tuple[int, int], adjoint: bool = False) -> DimTable:
    """
    dim Hom для слов с E^(2): ответ для раскрытых слов и обратная свертка

    Args:
        engine: HomEngine над нужным носителем
        source: Источник (может содержать E^(2))
        target: Цель (может содержать E^(2))
        window: Окно степеней
        adjoint: Вычислять раскрытый ответ переносом букв цели
    """
    expanded_source, source_count = expand_divided(source)
    expanded_target, target_count = expand_divided(target)
    if adjoint:
        table = engine.hom_dim_adjoint(expanded_source, expanded_target, window)
    else:
        table = engine.hom_dim(expanded_source, expanded_target, window)
    for _ in range(source_count + target_count):
        table = deconvolve(table)
    logger.debug(f"Hom({source}, {target}) после обратной свертки: {table}")
    return engine._validated(table, source, target)
