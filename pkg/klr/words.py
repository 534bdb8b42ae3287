# -*- coding: utf-8 -*-
"""
Диаграммные слова алгебры R_Q: образующие читаются снизу вверх

x_k - точка на нити k, t_k - пересечение нитей k и k + 1 (позиции с единицы).
Метки нитей - вершины графа, нумерация с нуля.
"""
import re
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from cartan.datum import CartanDatum
from common.errors import ParseError

Labels = Tuple[int, ...]

DOT = "x"
CROSS = "t"


@dataclass(frozen=True, order=True)
class Gen:
    """Образующая: точка ('x', k) или пересечение ('t', k)"""
    kind: str
    pos: int

    def __str__(self) -> str:
        return f"{self.kind}{self.pos}"


def dot(k: int) -> Gen:
    return Gen(DOT, k)


def cross(k: int) -> Gen:
    return Gen(CROSS, k)


def swap_labels(labels: Sequence[int], k: int) -> Labels:
    """Метки после пересечения t_k"""
    out = list(labels)
    out[k - 1], out[k] = out[k], out[k - 1]
    return tuple(out)


@dataclass(frozen=True)
class KlrWord:
    bottom: Labels
    gens: Tuple[Gen, ...] = ()

    def __post_init__(self):
        m = len(self.bottom)
        for g in self.gens:
            limit = m if g.kind == DOT else m - 1
            if g.kind not in (DOT, CROSS) or not 1 <= g.pos <= limit:
                raise ParseError(
                    f"Образующая {g} вне диапазона для {m} нитей",
                    {"generator": str(g), "strands": m},
                )

    @property
    def strands(self) -> int:
        return len(self.bottom)

    def labels_along(self) -> List[Labels]:
        """Метки до каждой образующей и после последней"""
        labels = self.bottom
        out = [labels]
        for g in self.gens:
            if g.kind == CROSS:
                labels = swap_labels(labels, g.pos)
            out.append(labels)
        return out

    @property
    def top(self) -> Labels:
        return self.labels_along()[-1]

    def degree(self, datum: CartanDatum) -> int:
        """2 за каждую точку, -<i, j> за каждое пересечение меток i, j"""
        total = 0
        for g, labels in zip(self.gens, self.labels_along()):
            if g.kind == DOT:
                total += 2
            else:
                total -= datum.c(labels[g.pos - 1], labels[g.pos])
        return total

    def crossing_count(self) -> int:
        return sum(1 for g in self.gens if g.kind == CROSS)

    def then(self, other: "KlrWord") -> "KlrWord":
        """Ставит other сверху"""
        return KlrWord(self.bottom, self.gens + other.gens)

    def text(self) -> str:
        head = f"e({','.join(str(i) for i in self.bottom)})"
        if not self.gens:
            return head
        return f"{head}; {' '.join(str(g) for g in self.gens)}"

    def __str__(self) -> str:
        return self.text()


_IDEMPOTENT_RE = re.compile(r"^e\(\s*([0-9,\s]*)\)$")
_GEN_RE = re.compile(r"^([xt])(\d+)$")


def parse_klr_word(text: str, datum: CartanDatum) -> KlrWord:
    """
    Разбирает `e(0,1,0); t1 x2 t1`

    Raises:
        ParseError: при ошибке синтаксиса или неизвестной вершине
    """
    head, _, tail = text.strip().partition(";")
    match = _IDEMPOTENT_RE.match(head.strip())
    if not match:
        raise ParseError(f"Ожидался идемпотент e(...), получено '{head.strip()}'", {"text": text})
    body = match.group(1).strip()
    try:
        labels = tuple(int(part) for part in body.split(",")) if body else ()
    except ValueError:
        raise ParseError(f"Метки идемпотента должны быть целыми: '{body}'", {"text": text})
    for label in labels:
        if not 0 <= label < datum.vertex_count:
            raise ParseError(f"Вершина {label} вне графа", {"text": text, "vertex": label})
    gens = []
    for token in tail.split():
        gm = _GEN_RE.match(token)
        if not gm:
            raise ParseError(f"Неизвестная образующая '{token}'", {"text": text})
        gens.append(Gen(gm.group(1), int(gm.group(2))))
    return KlrWord(labels, tuple(gens))
