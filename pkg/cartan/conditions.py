# -*- coding: utf-8 -*-
"""
Проверка структурных условий на носитель

vanish1: 1_{λ + rα} = 0 при r >> 0 или r << 0 для α = α_i и α_i + α_j (ребро);
vanish2: для треугольника или квадрата δ: 1_{λ + rδ} = 0 при r >> 0
         и <λ, δ> > 0 при 1_λ != 0;
closure: если 1_{λ+α_i} и 1_{λ+α_j} ненулевые (i != j), то 1_λ и 1_{λ+α_i+α_j} тоже.
"""
import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Tuple

from cartan.support import Support
from cartan.weight import Coords

logger = logging.getLogger(__name__)


def _add(coords: Coords, delta: Dict[int, int]) -> Coords:
    result = list(coords)
    for i, r in delta.items():
        result[i] += r
    return tuple(result)


@dataclass
class ConditionReport:
    """Нарушения по каждому условию (пустой список означает выполнение)"""
    vanish1: List[Dict[str, object]] = field(default_factory=list)
    vanish2: List[Dict[str, object]] = field(default_factory=list)
    closure: List[Dict[str, object]] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not (self.vanish1 or self.vanish2 or self.closure)

    def to_dict(self) -> Dict[str, object]:
        def section(violations: List[Dict[str, object]]) -> Dict[str, object]:
            return {"holds": not violations, "violations": violations}

        return {
            "holds": self.holds,
            "vanish1": section(self.vanish1),
            "vanish2": section(self.vanish2),
            "closure": section(self.closure),
        }


def _line_directions(support: Support) -> List[Tuple[str, Dict[int, int]]]:
    datum = support.datum
    directions = [(f"a{i}", {i: 1}) for i in datum.vertices]
    for i, j in sorted(datum.edges):
        directions.append((f"a{i}+a{j}", {i: 1, j: 1}))
    return directions


def _check_vanish1(support: Support, report: ConditionReport) -> None:
    # Конечный носитель: каждая прямая λ + rα пересекает его в конечном множестве.
    # Проверяем, что проход по прямой действительно выходит за носитель в обе стороны.
    bound = len(support) + 1
    for name, delta in _line_directions(support):
        for coords in support.coords():
            for sign in (1, -1):
                step = {i: sign * r for i, r in delta.items()}
                point = coords
                for _ in range(bound):
                    point = _add(point, step)
                    if not support.contains_coords(point):
                        break
                else:
                    report.vanish1.append({"weight": list(coords), "direction": name, "sign": sign})


def _check_vanish2(support: Support, report: ConditionReport) -> None:
    datum = support.datum
    for cycle in datum.short_cycles():
        for coords in support.coords():
            value = sum(support.pairing(coords, i) for i in cycle)
            if value <= 0:
                report.vanish2.append({
                    "weight": list(coords),
                    "pairings": list(support.pairings(coords)),
                    "cycle": list(cycle),
                    "value": value,
                })


def _check_closure(support: Support, report: ConditionReport) -> None:
    datum = support.datum
    candidates = set()
    for coords in support.coords():
        for i in datum.vertices:
            candidates.add(_add(coords, {i: -1}))
    for coords in sorted(candidates):
        for i, j in combinations(datum.vertices, 2):
            if not (support.contains_coords(_add(coords, {i: 1}))
                    and support.contains_coords(_add(coords, {j: 1}))):
                continue
            missing = []
            if not support.contains_coords(coords):
                missing.append(list(coords))
            top = _add(coords, {i: 1, j: 1})
            if not support.contains_coords(top):
                missing.append(list(top))
            if missing:
                report.closure.append({
                    "weight": list(coords),
                    "pair": [i, j],
                    "missing": missing,
                })


def check_conditions(support: Support) -> ConditionReport:
    """
    Проверяет условия vanish1, vanish2 и условие замыкания на конечном носителе

    Args:
        support: Конечный носитель

    Returns:
        Отчет с перечнем нарушений
    """
    report = ConditionReport()
    _check_vanish1(support, report)
    _check_vanish2(support, report)
    _check_closure(support, report)
    logger.info(
        f"Проверка условий: vanish1={len(report.vanish1)}, "
        f"vanish2={len(report.vanish2)}, closure={len(report.closure)} нарушений"
    )
    return report
