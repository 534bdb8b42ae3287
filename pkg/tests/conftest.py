# -*- coding: utf-8 -*-
"""
Общие фикстуры: стандартные данные Картана и носители
"""
import pytest

from cartan import Support, d4, grassmannian_support, triangle, type_a
from config import reset_settings


@pytest.fixture
def a1():
    return type_a(1)


@pytest.fixture
def a2():
    return type_a(2)


@pytest.fixture
def a3():
    return type_a(3)


@pytest.fixture
def d4_datum():
    return d4()


@pytest.fixture
def triangle_datum():
    return triangle()


@pytest.fixture
def sl2_support(a1):
    """Спаривания -2, 0, 2; базовая точка - вес 0"""
    return Support.from_pairings(a1, [[0], [2], [-2]])


@pytest.fixture
def gr_222():
    """sl2, Λ^2(C^2 ⊗ C^2)"""
    return grassmannian_support(2, 2, 2)


@pytest.fixture
def gr_232():
    """sl3, Λ^2(C^2 ⊗ C^3)"""
    return grassmannian_support(2, 3, 2)


@pytest.fixture
def gr_133():
    """sl3, Λ^3(C^1 ⊗ C^3): один вес"""
    return grassmannian_support(1, 3, 3)


@pytest.fixture(autouse=True)
def clean_settings(monkeypatch):
    """Каждый тест читает окружение заново"""
    for name in (
        "LOG_LEVEL",
        "LOG_FILE",
        "HOMDIM_DEPTH_BOUND",
        "HOMDIM_WINDOW_FACTOR",
        "KLR_STEP_BUDGET",
        "SORT_STEP_BUDGET",
        "SEARCH_BUDGET",
        "SEARCH_SLACK",
    ):
        monkeypatch.delenv(name, raising=False)
    reset_settings()
    yield
    reset_settings()
