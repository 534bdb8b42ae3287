# -*- coding: utf-8 -*-
"""
Полиномиальное представление R_Q

x_k действует умножением, t_k на равных метках - разделенной разностью
    ∂_k f = (f - s_k f) / (x_k - x_{k+1}),
на различных метках p, q - перестановкой s_k с множителем: 1 при p < q,
t_qp x_k + t_pq x_{k+1} (или t_qp при <p, q> = 0) при p > q.
Перед первым использованием представление проверяется на общих многочленах.
"""
import logging
from itertools import combinations_with_replacement
from typing import List, Optional

import sympy

from cartan.datum import CartanDatum
from common.errors import OracleUnverified, PreconditionError
from klr.element import KlrElement
from klr.words import DOT, KlrWord, cross, swap_labels

logger = logging.getLogger(__name__)


class PolynomialOracle:
    """Действие элементов R_Q на многочленах от x_1..x_m"""

    def __init__(self, datum: CartanDatum, strands: int = 3):
        self.datum = datum
        self.strands = strands
        self.symbols: List[sympy.Symbol] = list(sympy.symbols(f"x1:{strands + 1}"))
        self.verified = False

    def x(self, k: int) -> sympy.Symbol:
        return self.symbols[k - 1]

    def _swap(self, f: sympy.Expr, k: int) -> sympy.Expr:
        a, b = self.x(k), self.x(k + 1)
        return f.subs({a: b, b: a}, simultaneous=True)

    def demazure(self, f: sympy.Expr, k: int) -> sympy.Expr:
        quotient = sympy.cancel((f - self._swap(f, k)) / (self.x(k) - self.x(k + 1)))
        return sympy.expand(quotient)

    def _crossing(self, f: sympy.Expr, k: int, p: int, q: int) -> sympy.Expr:
        if p == q:
            return self.demazure(f, k)
        swapped = self._swap(f, k)
        if p < q:
            return swapped
        if self.datum.c(p, q) == 0:
            factor = sympy.Rational(self.datum.t(q, p))
        else:
            factor = sympy.Rational(self.datum.t(q, p)) * self.x(k) + sympy.Rational(self.datum.t(p, q)) * self.x(k + 1)
        return sympy.expand(factor * swapped)

    def _act_word(self, word: KlrWord, f: sympy.Expr) -> sympy.Expr:
        labels = word.bottom
        for g in word.gens:
            if g.kind == DOT:
                f = sympy.expand(self.x(g.pos) * f)
            else:
                f = self._crossing(f, g.pos, labels[g.pos - 1], labels[g.pos])
                labels = swap_labels(labels, g.pos)
        return f

    def generic_polynomial(self, degree: int = 3, variables: Optional[int] = None) -> sympy.Expr:
        """Многочлен степени <= degree с независимыми символьными коэффициентами"""
        used = self.symbols[: variables or self.strands]
        terms = [sympy.Integer(1)]
        for d in range(1, degree + 1):
            for combo in combinations_with_replacement(used, d):
                terms.append(sympy.Mul(*combo))
        coefficients = sympy.symbols(f"c0:{len(terms)}")
        return sympy.expand(sum(c * t for c, t in zip(coefficients, terms)))

    def verify(self) -> bool:
        """
        Проверяет четыре тождества аффинной алгебры nilHecke на общем
        многочлене степени <= 3:
            t_1 x_1 - x_2 t_1 = 1,  x_1 t_1 - t_1 x_2 = 1,  t_1^2 = 0,
            t_1 t_2 t_1 = t_2 t_1 t_2
        """
        f = self.generic_polynomial(3, min(self.strands, 3))
        d = self.demazure
        x1, x2 = self.x(1), self.x(2)
        checks = [
            sympy.expand(d(x1 * f, 1) - x2 * d(f, 1) - f) == 0,
            sympy.expand(x1 * d(f, 1) - d(x2 * f, 1) - f) == 0,
            sympy.expand(d(d(f, 1), 1)) == 0,
        ]
        if self.strands >= 3:
            checks.append(sympy.expand(d(d(d(f, 1), 2), 1) - d(d(d(f, 2), 1), 2)) == 0)
        self.verified = all(checks)
        if self.verified:
            logger.info("Полиномиальное представление прошло проверку тождеств nilHecke")
        else:
            logger.error(f"Проверка тождеств nilHecke не пройдена: {checks}")
        return self.verified

    def act(self, element: KlrElement, f: sympy.Expr) -> sympy.Expr:
        """
        Действие элемента на многочлене

        Raises:
            OracleUnverified: verify() не вызывался или не прошел
        """
        if not self.verified:
            raise OracleUnverified("Представление не проверено: вызовите verify()")
        total = sympy.Integer(0)
        for word, coeff in element.items():
            total += sympy.Rational(coeff) * self._act_word(word, f)
        return sympy.expand(total)


def nil_hecke_oracle(element: KlrElement, f: sympy.Expr, oracle: PolynomialOracle) -> sympy.Expr:
    """Действие элемента с постоянными метками через разделенные разности"""
    if len(set(element.bottom)) > 1:
        raise PreconditionError("Ожидались постоянные метки e(i,...,i)", {"bottom": list(element.bottom)})
    return oracle.act(element, f)


def check_oracle() -> bool:
    """Ручной прогон проверки представления"""
    from cartan.datum import type_a

    print("🧪 Проверка полиномиального представления nilHecke")
    print("=" * 50)
    oracle = PolynomialOracle(type_a(1), strands=3)
    ok = oracle.verify()
    print(f"{'✅' if ok else '❌'} Тождества на общем многочлене степени 3")
    if ok:
        x1 = oracle.x(1)
        crossing = KlrElement.of_word(KlrWord((0, 0), (cross(1),)))
        print(f"   t1 · x1 = {oracle.act(crossing, x1)}")
    return ok


if __name__ == "__main__":
    check_oracle()
