# -*- coding: utf-8 -*-
"""
Подсчет слов нормальной формы по степеням

Число базисных слов степени d - лишь оценка сверху для dim R_Q(ν)_d:
линейная независимость нормальных форм здесь не используется.
"""
from itertools import permutations
from typing import Dict, Sequence, Tuple

import sympy

from cartan.datum import CartanDatum
from klr.normal_form import canonical_word
from klr.words import KlrWord, cross


def graded_dim_count(datum: CartanDatum, labels: Sequence[int], window: Tuple[int, int]) -> Dict[int, int]:
    """
    Число слов вида t_w · x^a · e(ν) в каждой степени окна

    Args:
        datum: Граф
        labels: Нижние метки ν
        window: Отрезок степеней [lo, hi]
    """
    labels = tuple(labels)
    m = len(labels)
    lo, hi = window
    counts = {d: 0 for d in range(lo, hi + 1)}
    for arr in permutations(range(m)):
        word = KlrWord(labels, tuple(cross(j) for j in canonical_word(tuple(arr))))
        base = word.degree(datum)
        for d in counts:
            excess = d - base
            if excess < 0 or excess % 2:
                continue
            # распределения excess / 2 точек по m нитям
            counts[d] += int(sympy.binomial(excess // 2 + m - 1, m - 1)) if m else int(excess == 0)
    return counts
