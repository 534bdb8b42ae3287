# -*- coding: utf-8 -*-
"""
Элементы R_Q: линейные комбинации слов с общими нижней и верхней метками
"""
import re
from fractions import Fraction
from typing import Dict, Iterator, List, Mapping, Optional, Tuple

from cartan.datum import CartanDatum
from common.errors import ParseError, PreconditionError
from klr.words import Labels, KlrWord, parse_klr_word

Scalar = Fraction

_TERM_RE = re.compile(r"^\s*(?:([+-]?\d+(?:/\d+)?)\s*\*\s*|(-)\s*)?(e\(.*)$")


class KlrElement:
    """Отображение KlrWord -> скаляр, нулевые коэффициенты не хранятся"""

    def __init__(self, bottom: Labels, top: Labels, terms: Optional[Mapping[KlrWord, object]] = None):
        self.bottom = tuple(bottom)
        self.top = tuple(top)
        self._terms: Dict[KlrWord, Scalar] = {}
        for word, coeff in (terms or {}).items():
            self._accumulate(word, Fraction(coeff))

    @classmethod
    def of_word(cls, word: KlrWord, coeff: object = 1) -> "KlrElement":
        return cls(word.bottom, word.top, {word: Fraction(coeff)})

    @classmethod
    def idempotent(cls, labels: Labels) -> "KlrElement":
        return cls.of_word(KlrWord(tuple(labels)))

    @classmethod
    def zero(cls, bottom: Labels, top: Labels) -> "KlrElement":
        return cls(bottom, top)

    def _accumulate(self, word: KlrWord, coeff: Scalar) -> None:
        if word.bottom != self.bottom or word.top != self.top:
            raise PreconditionError(
                f"Слово {word} не согласовано с метками {list(self.bottom)} -> {list(self.top)}",
                {"word": str(word)},
            )
        total = self._terms.get(word, Fraction(0)) + coeff
        if total == 0:
            self._terms.pop(word, None)
        else:
            self._terms[word] = total

    # --- доступ ---

    def items(self) -> Iterator[Tuple[KlrWord, Scalar]]:
        for word in sorted(self._terms, key=lambda w: (w.crossing_count(), len(w.gens), w.gens)):
            yield word, self._terms[word]

    def words(self) -> List[KlrWord]:
        return [w for w, _ in self.items()]

    def coefficient(self, word: KlrWord) -> Scalar:
        return self._terms.get(word, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def degrees(self, datum: CartanDatum) -> List[int]:
        return sorted({w.degree(datum) for w in self._terms})

    def degree(self, datum: CartanDatum) -> Optional[int]:
        """Степень однородного элемента; None для нуля"""
        degrees = self.degrees(datum)
        if not degrees:
            return None
        if len(degrees) > 1:
            raise PreconditionError(f"Элемент {self} неоднороден: степени {degrees}", {"degrees": degrees})
        return degrees[0]

    # --- арифметика ---

    def _check_compatible(self, other: "KlrElement") -> None:
        if self.bottom != other.bottom or self.top != other.top:
            raise PreconditionError("Складываются элементы с разными метками")

    def __add__(self, other: "KlrElement") -> "KlrElement":
        self._check_compatible(other)
        result = KlrElement(self.bottom, self.top, self._terms)
        for word, coeff in other._terms.items():
            result._accumulate(word, coeff)
        return result

    def __neg__(self) -> "KlrElement":
        return self.scale(-1)

    def __sub__(self, other: "KlrElement") -> "KlrElement":
        return self + (-other)

    def scale(self, factor: object) -> "KlrElement":
        factor = Fraction(factor)
        return KlrElement(self.bottom, self.top, {w: c * factor for w, c in self._terms.items()})

    def compose(self, upper: "KlrElement") -> "KlrElement":
        """
        Ставит upper над self

        Если верх self не совпадает с низом upper, результат нулевой.
        """
        if self.top != upper.bottom:
            return KlrElement(self.bottom, upper.top)
        result = KlrElement(self.bottom, upper.top)
        for low, a in self._terms.items():
            for high, b in upper._terms.items():
                result._accumulate(KlrWord(low.bottom, low.gens + high.gens), a * b)
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, KlrElement):
            return NotImplemented
        return self.bottom == other.bottom and self.top == other.top and self._terms == other._terms

    def __hash__(self):
        return hash((self.bottom, self.top, frozenset(self._terms.items())))

    def to_json(self) -> Dict[str, object]:
        return {
            "bottom": list(self.bottom),
            "top": list(self.top),
            "terms": [{"word": w.text(), "coefficient": str(c)} for w, c in self.items()],
        }

    def __str__(self) -> str:
        return format_element(self)

    def __repr__(self) -> str:
        return f"KlrElement({self})"


def format_element(element: KlrElement) -> str:
    """`e(0,1); t1 + 3/2*e(0,1); x1 t1`, ноль печатается как 0"""
    if element.is_zero():
        return "0"
    parts = []
    for word, coeff in element.items():
        parts.append(word.text() if coeff == 1 else f"{coeff}*{word.text()}")
    return " + ".join(parts)


def parse_element(text: str, datum: CartanDatum) -> KlrElement:
    """
    Разбирает сумму слов с необязательными рациональными коэффициентами

    Raises:
        ParseError: при ошибке синтаксиса или несогласованных метках
    """
    chunks = [chunk for chunk in text.split(" + ") if chunk.strip()]
    if not chunks:
        raise ParseError("Пустой элемент", {"text": text})
    terms: List[Tuple[KlrWord, Fraction]] = []
    for chunk in chunks:
        match = _TERM_RE.match(chunk)
        if not match:
            raise ParseError(f"Не удалось разобрать слагаемое '{chunk.strip()}'", {"text": text})
        raw, minus, body = match.groups()
        try:
            coeff = Fraction(raw) if raw else Fraction(-1 if minus else 1)
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"Некорректный коэффициент '{raw}'", {"text": text})
        terms.append((parse_klr_word(body, datum), coeff))

    first = terms[0][0]
    element = KlrElement(first.bottom, first.top)
    for word, coeff in terms:
        if word.bottom != element.bottom or word.top != element.top:
            raise ParseError(f"Слагаемое {word} имеет другие метки", {"text": text})
        element._accumulate(word, coeff)
    return element
