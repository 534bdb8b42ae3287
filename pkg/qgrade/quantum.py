# -*- coding: utf-8 -*-
"""
Квантовые целые, факториалы и биномиальные коэффициенты
"""
from functools import lru_cache

from qgrade.laurent import GradedMult, LaurentInt


@lru_cache(maxsize=None)
def qint(n: int) -> LaurentInt:
    """
    Квантовое целое [n] = q^(n-1) + q^(n-3) + ... + q^(-n+1)

    По соглашению [0] = 0 и [-n] = -[n].
    """
    if n == 0:
        return LaurentInt()
    if n < 0:
        return -qint(-n)
    return LaurentInt({n - 1 - 2 * k: 1 for k in range(n)})


@lru_cache(maxsize=None)
def qfactorial(n: int) -> LaurentInt:
    """[n]! = [n][n-1]...[1], [0]! = 1"""
    if n < 0:
        raise ValueError(f"Факториал отрицательного числа: {n}")
    result = LaurentInt.one()
    for k in range(1, n + 1):
        result = result * qint(k)
    return result


@lru_cache(maxsize=None)
def qbinom(n: int, k: int) -> GradedMult:
    """
    Квантовый биномиальный коэффициент [n над k]

    Args:
        n: Неотрицательное целое
        k: 0 <= k <= n

    Returns:
        Многочлен Лорана с неотрицательными коэффициентами
    """
    if n < 0 or k < 0 or k > n:
        raise ValueError(f"Ожидается 0 <= k <= n, получено n={n}, k={k}")
    quotient = qfactorial(n).exact_divide(qfactorial(k) * qfactorial(n - k))
    return GradedMult.of(quotient)
