# -*- coding: utf-8 -*-
"""
Ходы switch / drop / insert над последовательностями шагов

Позиции нумеруются с единицы. Switch(a) меняет местами шаги a и a + 1,
Drop(a) удаляет пару (c, k), (-c, k) на позициях a, a + 1, Insert(a, (c, k))
вставляет такую пару перед позицией a.

Режим rescale: switch требует c_a + c_{a+1} = 0 и k_a != k_{a+1}.
Режим path: результат любого хода обязан оставаться путем.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from cartan.support import Support
from common.errors import InvalidMove, ParseError, PreconditionError
from paths.slides import SlideSeq, Step, first_invalid_step, is_valid_path

logger = logging.getLogger(__name__)


class Mode(str, Enum):
    PATH = "path"
    RESCALE = "rescale"


@dataclass(frozen=True)
class Switch:
    at: int

    def to_json(self) -> Dict[str, object]:
        return {"move": "switch", "at": self.at}


@dataclass(frozen=True)
class Drop:
    at: int

    def to_json(self) -> Dict[str, object]:
        return {"move": "drop", "at": self.at}


@dataclass(frozen=True)
class Insert:
    at: int
    step: Step

    def to_json(self) -> Dict[str, object]:
        return {"move": "insert", "at": self.at, "step": list(self.step)}


Move = Union[Switch, Drop, Insert]


@dataclass(frozen=True)
class MoveCert:
    """Сертификат: последовательность ходов от начала к концу"""
    moves: Tuple[Move, ...] = ()

    def __len__(self) -> int:
        return len(self.moves)

    def to_json(self) -> List[Dict[str, object]]:
        return [move.to_json() for move in self.moves]

    @classmethod
    def from_json(cls, data: Sequence[Mapping[str, object]]) -> "MoveCert":
        moves: List[Move] = []
        for item in data:
            kind = item.get("move")
            try:
                at = int(item["at"])
                if kind == "switch":
                    moves.append(Switch(at))
                elif kind == "drop":
                    moves.append(Drop(at))
                elif kind == "insert":
                    c, k = item["step"]
                    moves.append(Insert(at, (int(c), int(k))))
                else:
                    raise ParseError(f"Неизвестный ход '{kind}'", {"move": dict(item)})
            except (KeyError, TypeError, ValueError):
                raise ParseError("Некорректная запись хода", {"move": dict(item)})
        return cls(tuple(moves))


def _require_support(mode: Mode, support: Optional[Support]) -> None:
    if mode == Mode.PATH and support is None:
        raise PreconditionError("Для режима path нужен носитель")


def _check_position(seq: SlideSeq, a: int, span: int) -> None:
    if not 1 <= a <= len(seq) - span + 1:
        raise InvalidMove(f"Позиция {a} вне последовательности длины {len(seq)}", {"at": a, "steps": seq.to_json()})


def _check_path(result: SlideSeq, a: int, support: Support, move: str) -> None:
    bad = first_invalid_step(result, support)
    if bad is not None:
        raise InvalidMove(
            f"{move} в позиции {a} дает недопустимый шаг {bad}",
            {"at": a, "invalid_step": bad, "steps": result.to_json()},
        )


def switch_move(seq: SlideSeq, a: int, mode: Mode, support: Optional[Support] = None) -> SlideSeq:
    """
    Меняет местами шаги a и a + 1

    Raises:
        InvalidMove: нарушено условие режима
    """
    _require_support(mode, support)
    _check_position(seq, a, 2)
    steps = list(seq.steps)
    (c1, k1), (c2, k2) = steps[a - 1], steps[a]
    if mode == Mode.RESCALE and (c1 + c2 != 0 or k1 == k2):
        raise InvalidMove(
            f"Switch в позиции {a} требует противоположных знаков и разных вершин",
            {"at": a, "pair": [[c1, k1], [c2, k2]]},
        )
    steps[a - 1], steps[a] = steps[a], steps[a - 1]
    result = seq.with_steps(steps)
    if mode == Mode.PATH:
        _check_path(result, a, support, "Switch")
    return result


def drop_move(seq: SlideSeq, a: int, mode: Mode = Mode.RESCALE, support: Optional[Support] = None) -> SlideSeq:
    """
    Удаляет пару (c, k), (-c, k) на позициях a, a + 1

    Raises:
        InvalidMove: пара не взаимно обратна
    """
    _require_support(mode, support)
    _check_position(seq, a, 2)
    (c1, k1), (c2, k2) = seq.steps[a - 1], seq.steps[a]
    if k1 != k2 or c1 + c2 != 0:
        raise InvalidMove(
            f"Drop в позиции {a} требует пары (c, k), (-c, k)",
            {"at": a, "pair": [[c1, k1], [c2, k2]]},
        )
    result = seq.with_steps(seq.steps[: a - 1] + seq.steps[a + 1:])
    if mode == Mode.PATH:
        _check_path(result, a, support, "Drop")
    return result


def insert_move(seq: SlideSeq, a: int, step: Step, mode: Mode = Mode.PATH, support: Optional[Support] = None) -> SlideSeq:
    """Вставляет (c, k), (-c, k) перед позицией a; обратен drop_move"""
    _require_support(mode, support)
    if not 1 <= a <= len(seq) + 1:
        raise InvalidMove(f"Позиция {a} вне последовательности длины {len(seq)}", {"at": a})
    c, k = step
    result = seq.with_steps(seq.steps[: a - 1] + ((c, k), (-c, k)) + seq.steps[a - 1:])
    if mode == Mode.PATH:
        _check_path(result, a, support, "Insert")
    return result


def apply_move(seq: SlideSeq, move: Move, mode: Mode, support: Optional[Support] = None) -> SlideSeq:
    if isinstance(move, Switch):
        return switch_move(seq, move.at, mode, support)
    if isinstance(move, Drop):
        return drop_move(seq, move.at, mode, support)
    return insert_move(seq, move.at, move.step, mode, support)


def replay(start: SlideSeq, cert: MoveCert, mode: Mode, support: Optional[Support] = None) -> SlideSeq:
    """
    Повторно применяет ходы сертификата

    Raises:
        InvalidMove: начало не является путем (режим path) или ход неприменим
    """
    _require_support(mode, support)
    if mode == Mode.PATH and not is_valid_path(start, support):
        raise InvalidMove("Начальная последовательность не является путем", {"steps": start.to_json()})
    current = start
    for move in cert.moves:
        current = apply_move(current, move, mode, support)
    return current
