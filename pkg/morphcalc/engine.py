# -*- coding: utf-8 -*-
"""
Движок размерностей градуированных Hom-пространств

Основная величина: h(W, λ, l) = dim Hom(1_λ, W 1_λ <l>) для петли W.
Исходный Hom(A, B<d>) сводится к ней переносом букв A через сопряжения:
    (E_i 1_ν)_R = F_i <ν_i + 1>,   (F_i 1_ν)_R = E_i <1 - ν_i>.

Поворот последней буквы в начало слова и обратный ему:
    h(Y x, λ, l) = h(x Y, λ + wt(x), l + s(x, λ))
    h(x Y, μ, m) = h(Y x, μ - wt(x), m - s(x, μ - wt(x)))
где s(E_i, λ) = -2λ_i - 2, s(F_i, λ) = 2λ_i - 2.

Поворот зафиксирован режимом Turn: слово сортируется в ориентации режима,
и поворачивается буква одного типа с одного конца. Основной член сохраняет
режим, база меняется монотонно, и цепочка обрывается на границе конечного
носителя. Поправки короче; для них перебираются все циклические сдвиги и все
режимы, первый точный ответ принимается. Циклов в рекурсии нет.

Ответ Unknown означает отказ, а не ошибку: значение точно только там,
где его вывод опирается на базовый случай dim End^l(1_λ).
"""
import logging
from enum import Enum
from typing import Dict, List, Optional, Tuple

from cartan.support import Support
from cartan.weight import Coords
from common.errors import NegativeDimension
from morphcalc.divided import hom_dim_divided
from morphcalc.graded_class import GradedClass
from morphcalc.sorting import DEFAULT_BUDGET, DropRule, Orientation, is_supported_word, rewrite_terms
from morphcalc.words import Code, Codes, MorphWord, shift_coords, weight_after, weights_along
from qgrade.dimtable import (
    UNKNOWN,
    ZERO,
    DimTable,
    DimValue,
    Exactly,
    Unknown,
    dim_add,
    value_add,
    value_scale,
)
from qgrade.laurent import LaurentInt

logger = logging.getLogger(__name__)

DEFAULT_DEPTH_BOUND = 64
DEFAULT_WINDOW_FACTOR = 2

Window = Tuple[int, int]
MemoKey = Tuple[Codes, Coords, int, Optional[str], bool]
Rotation = Tuple[Codes, Coords, int]


class Turn(Enum):
    """Режим поворота: какая буква уходит на другой конец петли"""
    LAST_E = "last_e"
    LAST_F = "last_f"
    FIRST_E = "first_e"
    FIRST_F = "first_f"

    @property
    def orientation(self) -> Orientation:
        if self in (Turn.LAST_E, Turn.FIRST_F):
            return Orientation.F_LEFT
        return Orientation.E_LEFT

    @property
    def from_end(self) -> bool:
        return self in (Turn.LAST_E, Turn.LAST_F)


def default_window(source: MorphWord, target: MorphWord, factor: int = DEFAULT_WINDOW_FACTOR) -> Window:
    """[-factor·L, factor·L], где L - суммарная длина слов"""
    total = max(source.length + target.length, 1)
    return -factor * total, factor * total


def _base_value(degree: int) -> DimValue:
    if degree < 0:
        return ZERO
    if degree == 0:
        return Exactly(1)
    return UNKNOWN


def turn_shift(code: Code, pairing: int) -> int:
    """Сдвиг степени s(x, λ) при повороте буквы x, примененной в весе λ"""
    if code > 0:
        return -2 * pairing - 2
    return 2 * pairing - 2


class HomEngine:
    """
    Вычислитель размерностей Hom над фиксированным носителем

    Таблица мемоизации не синхронизирована: один экземпляр на поток.
    """

    def __init__(
        self,
        support: Support,
        depth_bound: int = DEFAULT_DEPTH_BOUND,
        budget: int = DEFAULT_BUDGET,
        window_factor: int = DEFAULT_WINDOW_FACTOR,
    ):
        self.support = support
        self.depth_bound = depth_bound
        self.budget = budget
        self.window_factor = window_factor
        self._memo: Dict[MemoKey, DimValue] = {}
        self._cuts = 0
        self.refusals = 0

    # --- петли ---

    def loop_dim(
        self,
        codes: Codes,
        coords: Coords,
        degree: int,
        turn: Optional[Turn] = None,
        dual: bool = False,
        depth: int = 0,
    ) -> DimValue:
        """
        dim Hom(1_λ, W 1_λ <l>) (или dim Hom(W 1_λ, 1_λ <l>) при dual)

        Args:
            codes: Петля в кодах букв
            coords: Корневые координаты λ
            degree: Степень l
            turn: Зафиксированный режим поворота или None (перебор)
            dual: Вычислять Hom из петли в 1_λ
            depth: Текущая глубина рекурсии
        """
        value = self._loop_value(codes, coords, degree, turn, dual, depth)
        if depth == 0 and isinstance(value, Unknown):
            self.refusals += 1
        return value

    def _loop_value(
        self,
        codes: Codes,
        coords: Coords,
        degree: int,
        turn: Optional[Turn],
        dual: bool,
        depth: int,
    ) -> DimValue:
        support = self.support
        if not support.contains_coords(coords):
            return ZERO
        if not codes:
            return _base_value(degree)
        if not is_supported_word(codes, coords, support):
            return ZERO

        rotations = self._rotations(codes, coords, degree) if turn is None else [(codes, coords, degree)]
        head = min(rotations)
        key: MemoKey = (head[0], head[1], head[2], turn.value if turn else None, dual)
        cached = self._memo.get(key)
        if cached is not None:
            return cached
        if depth > self.depth_bound:
            logger.debug(f"Превышена глубина {self.depth_bound} для {key}")
            self._cuts += 1
            return UNKNOWN

        cuts = self._cuts
        if turn is None:
            value = self._search(rotations, dual, depth)
        else:
            value = self._step(codes, coords, degree, turn, dual, depth)
        # отказ из-за глубины зависит от пути и не запоминается
        if not isinstance(value, Unknown) or self._cuts == cuts:
            self._memo[key] = value
        return value

    def _rotations(self, codes: Codes, coords: Coords, degree: int) -> List[Rotation]:
        """Все циклические сдвиги петли с пересчитанными базой и степенью"""
        result = [(codes, coords, degree)]
        for _ in range(len(codes) - 1):
            last = codes[-1]
            pairing = self.support.pairing(coords, abs(last) - 1)
            degree += turn_shift(last, pairing)
            coords = shift_coords(coords, last)
            codes = (last,) + codes[:-1]
            result.append((codes, coords, degree))
        return result

    def _first_shift(self, codes: Codes, coords: Coords, turn: Turn) -> Optional[int]:
        """Сдвиг степени первого поворота в режиме turn; None если буквы нужного типа нет"""
        wants_e = turn in (Turn.LAST_E, Turn.FIRST_E)
        wanted = [c for c in codes if (c > 0) == wants_e]
        if not wanted:
            return None
        if turn.from_end:
            code = wanted[-1]
            # после сортировки буква стоит последней и применяется в базе
            return turn_shift(code, self.support.pairing(coords, abs(code) - 1))
        code = wanted[0]
        before = shift_coords(coords, -code)
        return -turn_shift(code, self.support.pairing(before, abs(code) - 1))

    def _search(self, rotations: List[Rotation], dual: bool, depth: int) -> DimValue:
        options = []
        for rank, (codes, coords, degree) in enumerate(rotations):
            for turn in Turn:
                shift = self._first_shift(codes, coords, turn)
                if shift is not None:
                    options.append((shift, rank, turn, codes, coords, degree))
        # сначала режимы, понижающие степень
        options.sort(key=lambda option: (option[0], option[1], option[2].value))
        for _, _, turn, codes, coords, degree in options:
            value = self._loop_value(codes, coords, degree, turn, dual, depth + 1)
            if not isinstance(value, Unknown):
                return value
        return UNKNOWN

    def _step(
        self,
        codes: Codes,
        coords: Coords,
        degree: int,
        turn: Turn,
        dual: bool,
        depth: int,
    ) -> DimValue:
        terms = rewrite_terms(
            {codes: LaurentInt.one()},
            coords,
            self.support,
            turn.orientation,
            DropRule.EAGER,
            self.budget,
        )
        total: DimValue = ZERO
        for word in sorted(terms, key=lambda w: (-len(w), w)):
            sub_turn = turn if len(word) == len(codes) else None
            for shift, coeff in terms[word].items():
                # класс q^a w дает вклад w<a>
                target_degree = degree - shift if dual else degree + shift
                value = self._rotate(word, coords, target_degree, turn, sub_turn, dual, depth)
                total = value_add(total, value_scale(coeff, value))
                if isinstance(total, Unknown):
                    return total
        return total

    def _rotate(
        self,
        word: Codes,
        coords: Coords,
        degree: int,
        turn: Turn,
        sub_turn: Optional[Turn],
        dual: bool,
        depth: int,
    ) -> DimValue:
        if not word:
            return _base_value(degree)
        if sub_turn is None:
            return self._loop_value(word, coords, degree, None, dual, depth + 1)
        if turn.from_end:
            code = word[-1]
            pairing = self.support.pairing(coords, abs(code) - 1)
            rotated = (code,) + word[:-1]
            return self._loop_value(
                rotated, shift_coords(coords, code), degree + turn_shift(code, pairing), sub_turn, dual, depth + 1
            )
        code = word[0]
        before = shift_coords(coords, -code)
        pairing = self.support.pairing(before, abs(code) - 1)
        rotated = word[1:] + (code,)
        return self._loop_value(rotated, before, degree - turn_shift(code, pairing), sub_turn, dual, depth + 1)

    # --- общие запросы ---

    def _check_endpoints(self, source: MorphWord, target: MorphWord) -> bool:
        """Общие концы внутри носителя; иначе Hom тождественно нулевой"""
        if source.domain != target.domain or weight_after(source) != weight_after(target):
            return False
        return self.support.contains(source.domain) and self.support.contains(weight_after(source))

    def _window(self, source: MorphWord, target: MorphWord, window: Optional[Window]) -> Window:
        return window if window is not None else default_window(source, target, self.window_factor)

    @staticmethod
    def _validated(table: DimTable, source: MorphWord, target: MorphWord) -> DimTable:
        bad = table.negative_degrees()
        if bad:
            raise NegativeDimension(
                f"Отрицательная размерность Hom({source}, {target}) в степенях {bad}",
                {"source": str(source), "target": str(target), "degrees": bad},
            )
        return table

    def hom_dim(self, source: MorphWord, target: MorphWord, window: Optional[Window] = None) -> DimTable:
        """
        Таблица dim Hom(source, target <d>) по степеням окна

        Буквы источника переносятся в цель через правые сопряженные.
        Слова с E^(2) обрабатываются обратной сверткой.
        """
        lo, hi = self._window(source, target, window)
        if not self._check_endpoints(source, target):
            return DimTable.zeros(lo, hi)
        if source.has_divided or target.has_divided:
            return hom_dim_divided(self, source, target, (lo, hi))

        loop, total_shift = self._peel_source(source, target)
        coords = source.domain.coords
        table = DimTable.from_function(
            lo, hi, lambda d: self.loop_dim(loop, coords, d + total_shift)
        )
        logger.debug(f"Hom({source}, {target}): {table}")
        return self._validated(table, source, target)

    def _peel_source(self, source: MorphWord, target: MorphWord) -> Tuple[Codes, int]:
        rest = source.codes()
        peeled = []
        total_shift = 0
        coords = source.domain.coords
        while rest:
            head, rest = rest[0], rest[1:]
            nu = weights_along(rest, coords)[-1]
            i = abs(head) - 1
            nu_i = self.support.pairing(nu, i)
            if head > 0:
                total_shift += nu_i + 1
            else:
                total_shift += 1 - nu_i
            peeled.insert(0, -head)
        return tuple(peeled) + target.codes(), total_shift

    def hom_dim_adjoint(self, source: MorphWord, target: MorphWord, window: Optional[Window] = None) -> DimTable:
        """
        Та же таблица, вычисленная переносом букв цели в источник

        Hom(A, L Y<d>) = Hom(L' A, Y<d + s'>), где L' = (L)_L.
        """
        lo, hi = self._window(source, target, window)
        if not self._check_endpoints(source, target):
            return DimTable.zeros(lo, hi)
        if source.has_divided or target.has_divided:
            return hom_dim_divided(self, source, target, (lo, hi), adjoint=True)

        rest = target.codes()
        peeled = []
        total_shift = 0
        coords = target.domain.coords
        while rest:
            head, rest = rest[0], rest[1:]
            nu = weights_along(rest, coords)[-1]
            i = abs(head) - 1
            nu_i = self.support.pairing(nu, i)
            if head > 0:
                total_shift += nu_i + 1
            else:
                total_shift += 1 - nu_i
            peeled.insert(0, -head)
        loop = tuple(peeled) + source.codes()
        table = DimTable.from_function(
            lo, hi, lambda d: self.loop_dim(loop, coords, d + total_shift, dual=True)
        )
        return self._validated(table, source, target)

    def hom_dim_class(
        self,
        source: GradedClass,
        target: GradedClass,
        window: Window,
    ) -> DimTable:
        """
        dim Hom между классами: линейность по обоим аргументам

        Коэффициент источника q^a дает вклад table(d - a), цели - table(d + a).
        """
        lo, hi = window
        acc = DimTable.zeros(lo, hi)
        for s_word, s_coeff in source.items():
            for t_word, t_coeff in target.items():
                table = self.hom_dim(s_word, t_word, window)
                acc = dim_add(acc, table, s_coeff * t_coeff.bar())
        return acc

    def end_dim(self, word: MorphWord, window: Optional[Window] = None) -> DimTable:
        return self.hom_dim(word, word, window)

    def clear(self) -> None:
        self._memo.clear()
        self._cuts = 0
        self.refusals = 0


def hom_dim(
    source: MorphWord,
    target: MorphWord,
    support: Support,
    window: Optional[Window] = None,
    depth_bound: int = DEFAULT_DEPTH_BOUND,
) -> DimTable:
    """Однократный запрос с собственным движком"""
    return HomEngine(support, depth_bound=depth_bound).hom_dim(source, target, window)
