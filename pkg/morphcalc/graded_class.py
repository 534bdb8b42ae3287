# -*- coding: utf-8 -*-
"""
Классы в расщепленной группе Гротендика

Формальная сумма слов с коэффициентами из Z[q, q^-1] при общих домене
и кодомене. Класс эффективен, когда все коэффициенты неотрицательны.
"""
from typing import Dict, Iterator, List, Mapping, Optional, Tuple

from cartan.weight import Weight
from common.errors import NegativeMultiplicity, PreconditionError
from morphcalc.words import MorphWord, weight_after
from qgrade.laurent import GradedMult, LaurentInt


class GradedClass:
    """Отображение слово -> многочлен Лорана"""

    def __init__(
        self,
        domain: Weight,
        codomain: Weight,
        terms: Optional[Mapping[MorphWord, LaurentInt]] = None,
    ):
        self.domain = domain
        self.codomain = codomain
        self._terms: Dict[MorphWord, LaurentInt] = {}
        for word, coeff in (terms or {}).items():
            self._accumulate(word, coeff)

    @classmethod
    def of_word(cls, word: MorphWord, coeff: Optional[LaurentInt] = None) -> "GradedClass":
        return cls(word.domain, weight_after(word), {word: coeff if coeff is not None else LaurentInt.one()})

    @classmethod
    def zero_like(cls, word: MorphWord) -> "GradedClass":
        return cls(word.domain, weight_after(word))

    def _accumulate(self, word: MorphWord, coeff: LaurentInt) -> None:
        if word.domain != self.domain or weight_after(word) != self.codomain:
            raise PreconditionError(
                f"Слово {word} не согласовано с доменом и кодоменом класса",
                {"word": str(word)},
            )
        total = self._terms.get(word, LaurentInt()) + coeff
        if total.is_zero():
            self._terms.pop(word, None)
        else:
            self._terms[word] = total

    # --- доступ ---

    def items(self) -> Iterator[Tuple[MorphWord, LaurentInt]]:
        for word in sorted(self._terms, key=MorphWord.sort_key):
            yield word, self._terms[word]

    def coefficient(self, word: MorphWord) -> LaurentInt:
        return self._terms.get(word, LaurentInt())

    def words(self) -> List[MorphWord]:
        return [word for word, _ in self.items()]

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def is_effective(self) -> bool:
        return all(coeff.is_nonnegative() for coeff in self._terms.values())

    def assert_effective(self) -> "GradedClass":
        """Проверяет неотрицательность всех кратностей"""
        for word, coeff in self.items():
            if not coeff.is_nonnegative():
                raise NegativeMultiplicity(
                    f"Отрицательная кратность {coeff} при слове {word}",
                    {"word": str(word), "laurent": coeff.to_json()},
                )
        return self

    def multiplicities(self) -> Dict[MorphWord, GradedMult]:
        self.assert_effective()
        return {word: GradedMult.of(coeff) for word, coeff in self.items()}

    # --- арифметика ---

    def _check_compatible(self, other: "GradedClass") -> None:
        if other.domain != self.domain or other.codomain != self.codomain:
            raise PreconditionError("Классы имеют разные домены или кодомены")

    def __add__(self, other: "GradedClass") -> "GradedClass":
        self._check_compatible(other)
        result = GradedClass(self.domain, self.codomain, self._terms)
        for word, coeff in other._terms.items():
            result._accumulate(word, coeff)
        return result

    def __neg__(self) -> "GradedClass":
        return self.scale(LaurentInt.monomial(0, -1))

    def __sub__(self, other: "GradedClass") -> "GradedClass":
        return self + (-other)

    def scale(self, factor: LaurentInt) -> "GradedClass":
        return GradedClass(self.domain, self.codomain, {w: c * factor for w, c in self._terms.items()})

    def shift(self, degree: int) -> "GradedClass":
        return self.scale(LaurentInt.monomial(degree))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GradedClass):
            return NotImplemented
        return (
            self.domain == other.domain
            and self.codomain == other.codomain
            and self._terms == other._terms
        )

    def __hash__(self):
        return hash((self.domain, self.codomain, frozenset(self._terms.items())))

    def to_json(self) -> List[Dict[str, object]]:
        return [{"word": word.text(), "laurent": coeff.to_json()} for word, coeff in self.items()]

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"({coeff})·{word.text()}" for word, coeff in self.items())

    def __repr__(self) -> str:
        return f"GradedClass({self})"
