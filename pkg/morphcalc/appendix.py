# -*- coding: utf-8 -*-
"""
Прогон лемм о градуированных Hom-пространствах по всем весам носителя

Каждая лемма дает оценку сверху: ноль ниже пороговой степени и не больше
единицы на пороге, а при ненулевых словах - равенство на пороге.
Движок сверяется с этими оценками; противоречие означает ошибку движка
или носителя, не удовлетворяющего условиям действия.
"""
import logging
from dataclasses import dataclass, field
from itertools import product
from typing import Dict, Iterator, List, Optional, Sequence

from cartan.support import Support
from cartan.weight import Weight
from morphcalc.divided import expand_divided
from morphcalc.engine import HomEngine, default_window
from morphcalc.nonzero import is_nonzero
from morphcalc.sorting import is_supported_word
from morphcalc.words import E, Ed2, F, Letter, MorphWord
from qgrade.dimtable import DimTable, Unknown

logger = logging.getLogger(__name__)

LEMMAS = (
    "end-E",
    "end-EE",
    "end-EEE",
    "swap-adjacent",
    "swap-distant",
    "ef-fe-unit",
    "end-E2",
    "e-e2-order",
    "e2-vs-eje",
    "eje-bound",
    "reverse-ijk",
    "reverse-fij",
)


@dataclass(frozen=True)
class LemmaCase:
    """Один экземпляр оценки dim Hom(source, target<d>)"""
    lemma: str
    source: MorphWord
    target: MorphWord
    threshold: int
    expected: Optional[int]


@dataclass
class LemmaTally:
    lemma: str
    instances: int = 0
    exact: int = 0
    refusals: int = 0
    contradictions: List[Dict[str, object]] = field(default_factory=list)

    def to_dict(self) -> Dict[str, object]:
        return {
            "instances": self.instances,
            "exact_matches": self.exact,
            "refusals": self.refusals,
            "contradictions": self.contradictions,
        }


@dataclass
class AppendixReport:
    tallies: Dict[str, LemmaTally]

    @property
    def consistent(self) -> bool:
        """Нет противоречий и нет отказов: каждая оценка проверена точно"""
        return all(not tally.contradictions and not tally.refusals for tally in self.tallies.values())

    def to_dict(self) -> Dict[str, object]:
        return {
            "consistent": self.consistent,
            "lemmas": {name: tally.to_dict() for name, tally in self.tallies.items()},
        }


def _word(letters: Sequence[Letter], domain: Weight) -> MorphWord:
    return MorphWord(tuple(letters), domain)


def _surely_zero(word: MorphWord, support: Support) -> bool:
    expanded, _ = expand_divided(word)
    return not is_supported_word(expanded.codes(), expanded.domain.coords, support)


def _expectation(support: Support, required: Sequence[MorphWord], source: MorphWord, target: MorphWord) -> Optional[int]:
    """1 если все слова гипотезы ненулевы, 0 если источник или цель заведомо нулевы"""
    if _surely_zero(source, support) or _surely_zero(target, support):
        return 0
    if all(is_nonzero(word, support) for word in required):
        return 1
    return None


def _iff_expectation(support: Support, weights: Sequence[Weight]) -> int:
    return int(all(support.contains(w) for w in weights))


def _cases(support: Support) -> Iterator[LemmaCase]:
    datum = support.datum
    vertices = list(datum.vertices)
    for lam in support.weights():
        for i in vertices:
            lam_i = lam.pairing(i)

            w = _word([E(i)], lam)
            yield LemmaCase("end-E", w, w, 0, _expectation(support, [w], w, w))
            w = _word([E(i), E(i)], lam)
            yield LemmaCase("end-EE", w, w, -2, _expectation(support, [w], w, w))
            w = _word([E(i), E(i), E(i)], lam)
            yield LemmaCase("end-EEE", w, w, -6, _expectation(support, [w], w, w))

            fe = _word([F(i), E(i)], lam)
            unit = _word([], lam)
            e_nonzero = is_nonzero(_word([E(i)], lam), support)
            yield LemmaCase("ef-fe-unit", fe, unit, lam_i + 1, int(e_nonzero))
            yield LemmaCase("ef-fe-unit", unit, fe, lam_i + 1, int(e_nonzero))
            ef = _word([E(i), F(i)], lam)
            f_nonzero = support.contains(lam) and support.contains(lam.shifted(i, -1))
            yield LemmaCase("ef-fe-unit", ef, unit, -lam_i + 1, int(f_nonzero))
            yield LemmaCase("ef-fe-unit", unit, ef, -lam_i + 1, int(f_nonzero))

            w = _word([Ed2(i)], lam)
            yield LemmaCase("end-E2", w, w, 0, _expectation(support, [w], w, w))

        for i, j in product(vertices, vertices):
            if i == j:
                continue
            c = datum.c(i, j)
            ij = _word([E(i), E(j)], lam)
            ji = _word([E(j), E(i)], lam)
            if c == -1:
                yield LemmaCase("swap-adjacent", ij, ji, 1, _expectation(support, [ij, ji], ij, ji))
                yield LemmaCase("swap-adjacent", ij, ij, 0, _expectation(support, [ij], ij, ij))
            elif c == 0:
                yield LemmaCase("swap-distant", ij, ji, 0, _expectation(support, [ij, ji], ij, ji))
                yield LemmaCase("swap-distant", ij, ij, 0, _expectation(support, [ij], ij, ij))

            fe = _word([F(j), E(i)], lam)
            ef = _word([E(i), F(j)], lam)
            expected = int(is_nonzero(ef, support))
            yield LemmaCase("ef-fe-unit", fe, ef, 0, expected)
            yield LemmaCase("ef-fe-unit", ef, fe, 0, expected)

            if c != -1:
                continue
            left = _word([E(i), Ed2(j)], lam)
            right = _word([Ed2(j), E(i)], lam)
            yield LemmaCase("e-e2-order", left, right, 2, _expectation(support, [left, right], left, right))
            yield LemmaCase("e-e2-order", right, right, 0, _expectation(support, [right], right, right))

            first = _word([Ed2(i), E(j)], lam)
            second = _word([E(j), Ed2(i)], lam)
            middle = _word([E(i), E(j), E(i)], lam)
            hypothesis = [first, second, middle]
            for source, target in ((first, middle), (second, middle), (middle, first), (middle, second)):
                expected = 1 if all(is_nonzero(x, support) for x in hypothesis) else None
                yield LemmaCase("e2-vs-eje", source, target, 0, expected)

        for i, j, k in product(vertices, vertices, vertices):
            if len({i, j, k}) < 3:
                continue
            ell = datum.c(i, j) + datum.c(i, k) + datum.c(j, k)
            source = _word([E(i), E(j), E(k)], lam)
            target = _word([E(k), E(j), E(i)], lam)
            corners = [
                lam.shifted(i, a).shifted(j, b).shifted(k, c)
                for a, b, c in product((0, 1), repeat=3)
            ]
            yield LemmaCase("reverse-ijk", source, target, -ell, _iff_expectation(support, corners))

            source = _word([F(k), E(i), E(j)], lam)
            target = _word([E(j), E(i), F(k)], lam)
            corners = [
                lam.shifted(i, a).shifted(j, b).shifted(k, -c)
                for a, b, c in product((0, 1), repeat=3)
            ]
            yield LemmaCase("reverse-fij", source, target, -datum.c(i, j), _iff_expectation(support, corners))


def _case_window(case: LemmaCase, factor: int) -> tuple:
    lo, _ = default_window(case.source, case.target, factor)
    return min(lo, case.threshold - 2), case.threshold


def _judge(case: LemmaCase, table: DimTable, tally: LemmaTally) -> None:
    lo, hi = table.window
    refused = False
    seen = len(tally.contradictions)
    for degree in range(lo, hi + 1):
        value = table.at(degree)
        if isinstance(value, Unknown):
            refused = True
            continue
        bound = 0 if degree < case.threshold else 1
        wrong = value.n > bound
        if degree == case.threshold and case.expected is not None and value.n != case.expected:
            wrong = True
        if wrong:
            tally.contradictions.append({
                "source": str(case.source),
                "target": str(case.target),
                "degree": degree,
                "value": value.n,
                "expected": case.expected if degree == case.threshold else 0,
            })
            logger.error(f"Лемма {case.lemma}: Hom({case.source}, {case.target}) = {value.n} в степени {degree}")
    if refused:
        tally.refusals += 1
    elif len(tally.contradictions) == seen:
        tally.exact += 1


def _check_eje_bound(engine: HomEngine, support: Support, tally: LemmaTally) -> None:
    """dim End^d(E_i E_j E_i) <= dim End^d(E_i^(2) E_j) + dim End^d(E_j E_i^(2)) при d <= 0"""
    datum = support.datum
    for lam in support.weights():
        for i, j in product(datum.vertices, datum.vertices):
            if i == j or datum.c(i, j) != -1:
                continue
            middle = _word([E(i), E(j), E(i)], lam)
            first = _word([Ed2(i), E(j)], lam)
            second = _word([E(j), Ed2(i)], lam)
            lo, _ = default_window(first, first, engine.window_factor)
            window = (lo, 0)
            tally.instances += 1
            tables = [engine.end_dim(w, window) for w in (middle, first, second)]
            refused = False
            for degree in range(lo, 1):
                values = [t.at(degree) for t in tables]
                if any(isinstance(v, Unknown) for v in values):
                    refused = True
                    continue
                whole, a, b = (v.n for v in values)
                if whole > a + b:
                    tally.contradictions.append({
                        "source": str(middle),
                        "target": str(middle),
                        "degree": degree,
                        "value": whole,
                        "expected": a + b,
                    })
            if refused:
                tally.refusals += 1
            else:
                tally.exact += 1


def appendix_check(support: Support, engine: Optional[HomEngine] = None, lemmas: Optional[Sequence[str]] = None) -> AppendixReport:
    """
    Сверяет движок со всеми леммами на всех весах носителя

    Args:
        support: Носитель
        engine: Готовый движок (по умолчанию создается новый)
        lemmas: Подмножество лемм (по умолчанию все)

    Returns:
        AppendixReport с числом экземпляров, точных совпадений, отказов
        и списком противоречий по каждой лемме
    """
    engine = engine or HomEngine(support)
    selected = tuple(lemmas) if lemmas else LEMMAS
    tallies = {name: LemmaTally(name) for name in selected}

    for case in _cases(support):
        tally = tallies.get(case.lemma)
        if tally is None:
            continue
        tally.instances += 1
        table = engine.hom_dim(case.source, case.target, _case_window(case, engine.window_factor))
        _judge(case, table, tally)

    if "eje-bound" in tallies:
        _check_eje_bound(engine, support, tallies["eje-bound"])

    report = AppendixReport(tallies)
    for name, tally in tallies.items():
        logger.info(
            f"Лемма {name}: экземпляров {tally.instances}, точно {tally.exact}, "
            f"отказов {tally.refusals}, противоречий {len(tally.contradictions)}"
        )
    return report
