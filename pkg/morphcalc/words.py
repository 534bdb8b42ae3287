# -*- coding: utf-8 -*-
"""
Слова из E_i, F_i, E_i^(2), действующие на весах

Самая левая буква применяется последней: E_j E_i 1_λ сначала применяет E_i.
Внутри движка слова кодируются кортежами целых: E_i -> i + 1, F_i -> -(i + 1).
"""
import re
from dataclasses import dataclass
from enum import Enum
from typing import List, Sequence, Tuple

from cartan.datum import CartanDatum
from cartan.weight import Coords, Weight
from common.errors import ParseError

Code = int
Codes = Tuple[Code, ...]


class LetterKind(Enum):
    E = "E"
    F = "F"
    ED2 = "E^2"


_KIND_ORDER = {LetterKind.F: 0, LetterKind.E: 1, LetterKind.ED2: 2}


@dataclass(frozen=True)
class Letter:
    """Одна буква слова: E_i, F_i или E_i^(2)"""
    kind: LetterKind
    vertex: int

    @property
    def root_multiple(self) -> int:
        """Коэффициент при α_i, на который буква сдвигает вес"""
        return {LetterKind.E: 1, LetterKind.F: -1, LetterKind.ED2: 2}[self.kind]

    def sort_key(self) -> Tuple[int, int]:
        return _KIND_ORDER[self.kind], self.vertex

    def __str__(self) -> str:
        if self.kind is LetterKind.ED2:
            return f"E{self.vertex + 1}^2"
        return f"{self.kind.value}{self.vertex + 1}"


def E(i: int) -> Letter:
    return Letter(LetterKind.E, i)


def F(i: int) -> Letter:
    return Letter(LetterKind.F, i)


def Ed2(i: int) -> Letter:
    return Letter(LetterKind.ED2, i)


# --- кодирование для движка ---

# E_i^(2) кодируется как DIVIDED + i + 1; в движок Hom такие коды не попадают
DIVIDED = 1000


def letter_code(letter: Letter) -> Code:
    if letter.kind is LetterKind.E:
        return letter.vertex + 1
    if letter.kind is LetterKind.F:
        return -(letter.vertex + 1)
    return DIVIDED + letter.vertex + 1


def letter_codes(letters: Sequence[Letter]) -> Codes:
    """Коды без раскрытия E^(2)"""
    return tuple(letter_code(letter) for letter in letters)


def code_letter(code: Code) -> Letter:
    if code > DIVIDED:
        return Ed2(code - DIVIDED - 1)
    return E(code - 1) if code > 0 else F(-code - 1)


def is_divided_code(code: Code) -> bool:
    return abs(code) > DIVIDED


def code_vertex(code: Code) -> int:
    return abs(code) % DIVIDED - 1


def shift_coords(coords: Coords, code: Code) -> Coords:
    """Вес после применения буквы с данным кодом"""
    i = code_vertex(code)
    step = 2 if is_divided_code(code) else 1
    if code < 0:
        step = -step
    return coords[:i] + (coords[i] + step,) + coords[i + 1:]


def weights_along(codes: Codes, coords: Coords) -> List[Coords]:
    """Веса, проходимые словом: [домен, ..., кодомен] (справа налево)"""
    path = [coords]
    for code in reversed(codes):
        coords = shift_coords(coords, code)
        path.append(coords)
    return path


def expand_letters(letters: Sequence[Letter]) -> Tuple[Codes, int]:
    """Разворачивает E^(2) в E E; возвращает коды и число разделенных степеней"""
    codes: List[Code] = []
    divided = 0
    for letter in letters:
        if letter.kind is LetterKind.ED2:
            codes.extend((letter.vertex + 1, letter.vertex + 1))
            divided += 1
        else:
            codes.append(letter_code(letter))
    return tuple(codes), divided


@dataclass(frozen=True)
class MorphWord:
    """Композиция букв с указанным доменом"""
    letters: Tuple[Letter, ...]
    domain: Weight

    @classmethod
    def of(cls, letters: Sequence[Letter], domain: Weight) -> "MorphWord":
        return cls(tuple(letters), domain)

    @classmethod
    def from_codes(cls, codes: Codes, domain: Weight) -> "MorphWord":
        return cls(tuple(code_letter(c) for c in codes), domain)

    @property
    def length(self) -> int:
        """Длина с учетом того, что E^(2) считается за две буквы"""
        return sum(2 if letter.kind is LetterKind.ED2 else 1 for letter in self.letters)

    @property
    def has_divided(self) -> bool:
        return any(letter.kind is LetterKind.ED2 for letter in self.letters)

    def codes(self) -> Codes:
        codes, _ = expand_letters(self.letters)
        return codes

    def codomain(self) -> Weight:
        return weight_after(self)

    def weights(self) -> List[Weight]:
        """Все промежуточные веса, включая домен и кодомен"""
        path = [self.domain]
        current = self.domain
        for letter in reversed(self.letters):
            current = current.shifted(letter.vertex, letter.root_multiple)
            path.append(current)
        return path

    def sort_key(self) -> Tuple[int, Tuple[Tuple[int, int], ...]]:
        return len(self.letters), tuple(letter.sort_key() for letter in self.letters)

    def text(self) -> str:
        return " ".join(str(letter) for letter in self.letters) or "1"

    def __str__(self) -> str:
        return f"{self.text()} @ {list(self.domain.coords)}"


def weight_after(word: MorphWord) -> Weight:
    """Домен плюс знаковая сумма корней слова"""
    result = word.domain
    for letter in word.letters:
        result = result.shifted(letter.vertex, letter.root_multiple)
    return result


_LETTER_RE = re.compile(r"^([EF])(\d+)(\^2)?$")


def parse_letters(text: str, datum: CartanDatum) -> Tuple[Letter, ...]:
    """Разбирает 'E1 F2 E1^2' (номера вершин с единицы)"""
    letters: List[Letter] = []
    for token in text.split():
        if token == "1":
            continue
        match = _LETTER_RE.match(token)
        if not match:
            raise ParseError(f"Неизвестная буква '{token}'", {"token": token})
        kind, number, divided = match.groups()
        vertex = int(number) - 1
        if not 0 <= vertex < datum.vertex_count:
            raise ParseError(f"Вершина {number} вне диапазона 1..{datum.vertex_count}", {"token": token})
        if divided and kind == "F":
            raise ParseError("Разделенные степени F не поддерживаются", {"token": token})
        letters.append(Ed2(vertex) if divided else Letter(LetterKind(kind), vertex))
    return tuple(letters)


def parse_coords(text: str, datum: CartanDatum) -> Coords:
    """Разбирает '[a1,a2,...]'"""
    stripped = text.strip()
    if not (stripped.startswith("[") and stripped.endswith("]")):
        raise ParseError(f"Ожидался список координат в скобках: '{text}'")
    body = stripped[1:-1].strip()
    try:
        coords = tuple(int(x) for x in body.split(",")) if body else ()
    except ValueError:
        raise ParseError(f"Координаты должны быть целыми: '{text}'")
    if len(coords) != datum.vertex_count:
        raise ParseError(f"Ожидалось {datum.vertex_count} координат, получено {len(coords)}")
    return coords


def parse_word(text: str, base: Sequence[int], datum: CartanDatum) -> MorphWord:
    """
    Разбирает слово в синтаксисе 'E1 F2 E1^2 @ [a1,...]'

    Args:
        text: Текст слова; часть после '@' задает корневые координаты домена
        base: Базовые спаривания смежного класса
        datum: Данные Картана
    """
    if "@" not in text:
        raise ParseError(f"В слове '{text}' отсутствует домен '@ [...]'")
    letters_text, coords_text = text.split("@", 1)
    letters = parse_letters(letters_text, datum)
    domain = Weight.at(datum, base, parse_coords(coords_text, datum))
    return MorphWord(letters, domain)
