# -*- coding: utf-8 -*-
"""
Сертификаты эквивалентности последовательностей шагов

reduce_to_empty сводит замкнутую последовательность к пустой ходами
режима rescale; slide_equivalent и reduce_appended ищут цепочку ходов
режима path обходом в ширину с ограничением длины и числа состояний.
"""
import logging
from collections import deque
from dataclasses import dataclass
from typing import Callable, Dict, Iterator, List, Optional, Tuple, Union

from cartan.support import Support
from cartan.weight import Coords
from common.errors import EndpointMismatch, InvalidMove, NotClosed, NotFound, PreconditionError
from paths.moves import Drop, Insert, Mode, Move, MoveCert, Switch, replay
from paths.slides import SlideSeq, Step, canonical_path, is_valid_path, is_valid_slide, parse_steps

logger = logging.getLogger(__name__)

DEFAULT_SEARCH_BUDGET = 200_000
DEFAULT_SLACK = 2

Steps = Tuple[Step, ...]


@dataclass(frozen=True)
class Undecided:
    """Поиск исчерпал бюджет или границу длины без ответа"""
    reason: str
    visited: int

    def to_json(self) -> Dict[str, object]:
        return {"undecided": True, "reason": self.reason, "visited": self.visited}


# --- rescale: сведение к пустой последовательности ---

def _closest_pair(steps: List[Step]) -> Tuple[int, int]:
    """Ближайшая пара (c, k) ... (-c, k); при равенстве - с наименьшим началом"""
    best: Optional[Tuple[int, int]] = None
    for p, (c, k) in enumerate(steps):
        for q in range(p + 1, len(steps)):
            if steps[q] == (-c, k):
                if best is None or q - p < best[1] - best[0]:
                    best = (p, q)
                break
    return best


def reduce_to_empty(seq: SlideSeq) -> MoveCert:
    """
    Сертификат сведения замкнутой последовательности к пустой

    Берется ближайшая пара A = (c, k), B = (-c, k). Между ними нет шагов
    с вершиной k и нет взаимно обратных пар, поэтому шаги со знаком -c
    переносятся левее A, затем B подводится к A и пара удаляется.

    Raises:
        NotClosed: sum c_l α_{k_l} != 0
    """
    total = seq.step_sum()
    if total:
        raise NotClosed(
            f"Сумма шагов {seq} не равна нулю",
            {"steps": seq.to_json(), "sum": {str(k): v for k, v in total.items()}},
        )

    current = list(seq.steps)
    moves: List[Move] = []

    def switch(a: int) -> None:
        moves.append(Switch(a))
        current[a - 1], current[a] = current[a], current[a - 1]

    while current:
        p, q = _closest_pair(current)
        c = current[p][0]
        while True:
            r = next((r for r in range(p + 1, q) if current[r][0] == -c), None)
            if r is None:
                break
            for a in range(r, p, -1):
                switch(a)
            p += 1
        for a in range(q, p + 1, -1):
            switch(a)
        moves.append(Drop(p + 1))
        del current[p:p + 2]

    cert = MoveCert(tuple(moves))
    rest = replay(seq, cert, Mode.RESCALE)
    if rest.steps:
        raise InvalidMove("Сертификат не приводит к пустой последовательности", {"rest": rest.to_json()})
    logger.debug(f"Последовательность {seq} сведена к пустой за {len(cert)} ходов")
    return cert


# --- path: обход в ширину ---

def _slide_ok(support: Support, coords: Coords, c: int, k: int) -> bool:
    if not support.contains_coords(coords):
        return False
    pairing = support.pairing(coords, k)
    if (c > 0 and pairing < -1) or (c < 0 and pairing > 1):
        return False
    shifted = list(coords)
    shifted[k] += c
    return support.contains_coords(tuple(shifted))


def _prefixes(base: Coords, steps: Steps) -> List[Coords]:
    out = [base]
    current = list(base)
    for c, k in steps:
        current[k] += c
        out.append(tuple(current))
    return out


def _neighbors(state: Steps, base: Coords, support: Support, max_len: int) -> Iterator[Tuple[Move, Steps]]:
    """Все результаты ходов режима path; проверка допустимости локальна"""
    prefixes = _prefixes(base, state)
    for a in range(1, len(state)):
        first, second = state[a - 1], state[a]
        if first == second:
            continue
        before = prefixes[a - 1]
        if not _slide_ok(support, before, second[0], second[1]):
            continue
        middle = list(before)
        middle[second[1]] += second[0]
        if not _slide_ok(support, tuple(middle), first[0], first[1]):
            continue
        yield Switch(a), state[:a - 1] + (second, first) + state[a + 1:]
    for a in range(1, len(state)):
        (c1, k1), (c2, k2) = state[a - 1], state[a]
        if k1 == k2 and c1 + c2 == 0:
            yield Drop(a), state[:a - 1] + state[a + 1:]
    if len(state) + 2 > max_len:
        return
    for a in range(1, len(state) + 2):
        at = prefixes[a - 1]
        for k in support.datum.vertices:
            for c in (1, -1):
                if not _slide_ok(support, at, c, k):
                    continue
                shifted = list(at)
                shifted[k] += c
                if not _slide_ok(support, tuple(shifted), -c, k):
                    continue
                yield Insert(a, (c, k)), state[:a - 1] + ((c, k), (-c, k)) + state[a - 1:]


def _bfs(
    start: Steps,
    base: Coords,
    is_goal: Callable[[Steps], bool],
    support: Support,
    max_len: int,
    budget: int,
) -> Union[Tuple[Steps, MoveCert], Undecided]:
    parents: Dict[Steps, Optional[Tuple[Steps, Move]]] = {start: None}
    queue = deque([start])
    while queue:
        state = queue.popleft()
        if is_goal(state):
            moves: List[Move] = []
            node = state
            while parents[node] is not None:
                node, move = parents[node]
                moves.append(move)
            return state, MoveCert(tuple(reversed(moves)))
        for move, nxt in _neighbors(state, base, support, max_len):
            if nxt in parents:
                continue
            if len(parents) >= budget:
                logger.warning(f"Поиск остановлен: исчерпан бюджет {budget} состояний")
                return Undecided("budget", len(parents))
            parents[nxt] = (state, move)
            queue.append(nxt)
    return Undecided("length_bound", len(parents))


def slide_equivalent(
    p: SlideSeq,
    q: SlideSeq,
    support: Support,
    budget: int = DEFAULT_SEARCH_BUDGET,
    slack: int = DEFAULT_SLACK,
) -> Union[MoveCert, Undecided]:
    """
    Ищет цепочку ходов switch / drop / insert от пути p к пути q

    Args:
        p: Первый путь
        q: Второй путь
        support: Носитель
        budget: Наибольшее число посещенных состояний
        slack: На сколько шагов промежуточные пути могут быть длиннее
            большего из p и q

    Returns:
        MoveCert, проверенный повторным применением, или Undecided

    Raises:
        EndpointMismatch: у путей разные начала или концы
        PreconditionError: p или q не является путем
    """
    if p.base is None or q.base is None or p.base != q.base or p.endpoint() != q.endpoint():
        raise EndpointMismatch(
            "Пути должны иметь общие начало и конец",
            {"p": p.to_json(), "q": q.to_json()},
        )
    for seq in (p, q):
        if not is_valid_path(seq, support):
            raise PreconditionError(f"{seq} не является путем", {"steps": seq.to_json()})

    target = q.steps
    found = _bfs(p.steps, p.base.coords, lambda s: s == target, support, max(len(p), len(q)) + slack, budget)
    if isinstance(found, Undecided):
        logger.warning(f"Эквивалентность {p} ~ {q} не установлена ({found.reason}, состояний {found.visited})")
        return found
    _, cert = found
    if replay(p, cert, Mode.PATH, support).steps != target:
        raise InvalidMove("Сертификат эквивалентности не воспроизводится", {"moves": cert.to_json()})
    logger.info(f"Эквивалентность {p} ~ {q}: {len(cert)} ходов")
    return cert


def reduce_appended(
    canon: SlideSeq,
    extra: Step,
    support: Support,
    budget: int = DEFAULT_SEARCH_BUDGET,
    slack: int = DEFAULT_SLACK,
) -> Tuple[SlideSeq, MoveCert]:
    """
    Укорачивает канонический путь с добавленным шагом

    При λ = μ + sum a_j α_j шаг +i допускается при a_i <= -1, шаг -i при
    a_i >= 1; тогда (canon, extra) эквивалентен пути на единицу короче canon.

    Returns:
        Короткий путь и сертификат от (canon, extra) к нему

    Raises:
        PreconditionError: canon не канонический, шаг недопустим или
            нарушено условие на знак a_i
        NotFound: путь не найден в пределах бюджета
    """
    if canon.base is None:
        raise PreconditionError("У пути нет начального веса")
    lam = canon.endpoint()
    if canonical_path(canon.base, lam, support).steps != canon.steps:
        raise PreconditionError(f"{canon} не является каноническим путем", {"steps": canon.to_json()})

    c, i = parse_steps([extra])[0]
    a = lam.difference(canon.base)
    if (c > 0 and a[i] > -1) or (c < 0 and a[i] < 1):
        raise PreconditionError(
            f"Шаг {'+' if c > 0 else '-'}{i} требует a_{i} {'<= -1' if c > 0 else '>= 1'}, получено {a[i]}",
            {"coords": list(a), "extra": [c, i]},
        )
    if not is_valid_slide(lam, i, c, support):
        raise PreconditionError(f"Сдвиг {lam} на {c}·α_{i} недопустим", {"extra": [c, i]})

    appended = canon.with_steps(canon.steps + ((c, i),))
    wanted = len(canon) - 1
    found = _bfs(appended.steps, canon.base.coords, lambda s: len(s) == wanted, support, len(appended) + slack, budget)
    if isinstance(found, Undecided):
        raise NotFound(
            f"Не найден путь длины {wanted} для {appended}",
            {"steps": appended.to_json(), "visited": found.visited, "reason": found.reason},
        )
    steps, cert = found
    shorter = canon.with_steps(steps)
    if replay(appended, cert, Mode.PATH, support) != shorter:
        raise InvalidMove("Сертификат укорочения не воспроизводится", {"moves": cert.to_json()})
    logger.info(f"Путь {appended} укорочен до {shorter} за {len(cert)} ходов")
    return shorter, cert
