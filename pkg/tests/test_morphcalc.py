# -*- coding: utf-8 -*-
"""
Тесты слов в E/F: разбор, разложение, Серр, ненулевость, движок Hom

Разложения сверяются с фермионной моделью Λ^N(C^m ⊗ C^n) при q = 1:
оператор слова на весовом пространстве домена совпадает с суммой
операторов слов разложения с коэффициентами, специализированными в 1.
"""
import random
from functools import lru_cache
from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cartan import grassmannian_support
from common.errors import NotAdjacent, ParseError, PreconditionError, WindowTooNarrow
from morphcalc import (
    DropRule,
    GradedClass,
    HomEngine,
    MorphWord,
    Orientation,
    appendix_check,
    decompose,
    deconvolve,
    hom_dim,
    is_nonzero,
    parse_word,
    serre_rewrite,
    sort_class,
    verify_serre,
    weight_after,
)
from morphcalc.appendix import LEMMAS
from morphcalc.engine import default_window
from morphcalc.words import E, Ed2, F, LetterKind
from qgrade import ZERO, DimTable, Exactly, qint


def word(text, support):
    return parse_word(text, support.base, support.datum)


# --- фермионная модель ---

def _hop(target: int, source: int, modes: int) -> np.ndarray:
    """c†_target c_source на внешней алгебре с modes модами"""
    size = 2 ** modes
    matrix = np.zeros((size, size), dtype=np.int64)
    for state in range(size):
        if not state >> source & 1:
            continue
        sign = (-1) ** bin(state & ((1 << source) - 1)).count("1")
        middle = state ^ (1 << source)
        if middle >> target & 1:
            continue
        sign *= (-1) ** bin(middle & ((1 << target) - 1)).count("1")
        matrix[middle | (1 << target), state] += sign
    return matrix


@lru_cache(maxsize=None)
def _model(m: int, n: int):
    modes = m * n

    def mode(a: int, b: int) -> int:
        return a * n + b

    raising = []
    lowering = []
    for i in range(n - 1):
        raising.append(sum(_hop(mode(a, i + 1), mode(a, i), modes) for a in range(m)))
        lowering.append(sum(_hop(mode(a, i), mode(a, i + 1), modes) for a in range(m)))
    squares = []
    for matrix in raising:
        square = matrix @ matrix
        assert not (square % 2).any()
        squares.append(square // 2)
    columns = [
        tuple(sum(state >> mode(a, b) & 1 for a in range(m)) for b in range(n))
        for state in range(2 ** modes)
    ]
    return raising, lowering, squares, columns


def _letter_matrix(letter, support) -> np.ndarray:
    raising, lowering, squares, _ = _model(support.m, support.n)
    if letter.kind is LetterKind.E:
        return raising[letter.vertex]
    if letter.kind is LetterKind.F:
        return lowering[letter.vertex]
    return squares[letter.vertex]


def _operator(letters, support, coords) -> np.ndarray:
    """Столбцы оператора слова на весовом пространстве домена"""
    _, _, _, columns = _model(support.m, support.n)
    k = support.tuple_at(coords)
    states = [s for s, c in enumerate(columns) if c == k]
    result = np.eye(len(columns), dtype=np.int64)[:, states]
    for letter in reversed(letters):
        result = _letter_matrix(letter, support) @ result
    return result


def _assert_matches_model(w: MorphWord, cls: GradedClass, support) -> None:
    coords = w.domain.coords
    expected = _operator(w.letters, support, coords)
    total = np.zeros_like(expected)
    for summand, coeff in cls.items():
        total = total + coeff.at_one() * _operator(summand.letters, support, coords)
    assert np.array_equal(total, expected), str(w)


# --- разбор слов ---

def test_parse_word(gr_232):
    w = word("E1 F2 E1^2 @ [0,0]", gr_232)
    assert w.text() == "E1 F2 E1^2"
    assert w.length == 4
    assert w.has_divided
    assert w.codes() == (1, -2, 1, 1)
    assert str(w) == "E1 F2 E1^2 @ [0, 0]"


def test_parse_empty_word(gr_232):
    w = word("1 @ [0,0]", gr_232)
    assert w.letters == ()
    assert w.text() == "1"


@pytest.mark.parametrize("text", [
    "E1 F2",
    "G1 @ [0,0]",
    "E3 @ [0,0]",
    "F1^2 @ [0,0]",
    "E1 @ [0]",
    "E1 @ 0,0",
    "E1 @ [a,0]",
])
def test_parse_word_errors(gr_232, text):
    with pytest.raises(ParseError):
        word(text, gr_232)


def test_weight_after(gr_232):
    w = word("E1 E1 F2 @ [0,0]", gr_232)
    assert weight_after(w).coords == (2, -1)
    assert [x.coords for x in w.weights()] == [(0, 0), (0, -1), (1, -1), (2, -1)]


# --- разложение ---

def test_decompose_ef_at_highest(sl2_support):
    result = decompose(word("E1 F1 @ [1]", sl2_support), sl2_support)
    assert result.to_json() == [{"word": "1", "laurent": [[-1, 1], [1, 1]]}]


def test_decompose_fe_at_lowest(sl2_support):
    result = decompose(word("F1 E1 @ [-1]", sl2_support), sl2_support)
    assert result.to_json() == [{"word": "1", "laurent": [[-1, 1], [1, 1]]}]


def test_decompose_ef_at_zero(sl2_support):
    result = decompose(word("E1 F1 @ [0]", sl2_support), sl2_support)
    assert result.to_json() == [{"word": "F1 E1", "laurent": [[0, 1]]}]


def test_decompose_drops_unsupported(sl2_support):
    assert decompose(word("E1 F1 @ [-1]", sl2_support), sl2_support).is_zero()
    assert decompose(word("E1 @ [5]", sl2_support), sl2_support).is_zero()


def test_decompose_divided_power(sl2_support):
    result = decompose(word("E1^2 @ [-1]", sl2_support), sl2_support)
    assert result.to_json() == [{"word": "E1^2", "laurent": [[0, 1]]}]
    result = decompose(word("E1 E1 @ [-1]", sl2_support), sl2_support)
    assert result.to_json() == [{"word": "E1 E1", "laurent": [[0, 1]]}]


def test_sort_class_f_left(sl2_support):
    cls = GradedClass.of_word(word("E1 F1 @ [1]", sl2_support))
    result = sort_class(cls, sl2_support)
    assert result.to_json() == [
        {"word": "1", "laurent": [[-1, 1], [1, 1]]},
        {"word": "F1 E1", "laurent": [[0, 1]]},
    ]


def test_sort_class_e_left(sl2_support):
    cls = GradedClass.of_word(word("F1 E1 @ [0]", sl2_support))
    result = sort_class(cls, sl2_support, orientation=Orientation.E_LEFT)
    # F E 1_0 = E F 1_0 + [0] 1_0
    assert result.to_json() == [{"word": "E1 F1", "laurent": [[0, 1]]}]


def test_class_arithmetic(sl2_support):
    w = word("E1 F1 @ [1]", sl2_support)
    cls = GradedClass.of_word(w)
    assert (cls - cls).is_zero()
    assert cls.shift(2).coefficient(w).to_json() == [[2, 1]]
    with pytest.raises(PreconditionError):
        cls + GradedClass.of_word(word("1 @ [0]", sl2_support))


letters_a2 = st.lists(st.sampled_from([E(0), E(1), F(0), F(1), Ed2(0), Ed2(1)]), max_size=6)


@pytest.mark.slow
@given(letters_a2, st.integers(0, 5), st.integers(0, 1000))
@settings(max_examples=1000, deadline=None)
def test_sorting_is_confluent(letters, index, seed):
    support = grassmannian_support(2, 3, 2)
    domain = support.weights()[index]
    cls = GradedClass.of_word(MorphWord(tuple(letters), domain))
    leftmost = sort_class(cls, support, drop=DropRule.FINAL)
    rightmost = sort_class(cls, support, drop=DropRule.FINAL, strategy="rightmost")
    shuffled = sort_class(cls, support, drop=DropRule.FINAL, strategy="random", rng=random.Random(seed))
    assert leftmost == rightmost == shuffled


@pytest.mark.parametrize("m, n, N", [
    (2, 2, 2),
    (2, 3, 2),
    (1, 4, 2),
    pytest.param(3, 3, 3, marks=pytest.mark.slow),
    pytest.param(3, 3, 4, marks=pytest.mark.slow),
])
def test_decompose_matches_fermion_model(m, n, N):
    support = grassmannian_support(m, n, N)
    alphabet = [E(i) for i in support.datum.vertices] + [F(i) for i in support.datum.vertices]
    for length in range(4):
        for letters in product(alphabet, repeat=length):
            for domain in support.weights():
                w = MorphWord(letters, domain)
                cls = decompose(w, support)
                assert cls.is_effective()
                _assert_matches_model(w, cls, support)


@given(st.data())
@settings(max_examples=40, deadline=None)
def test_long_words_match_fermion_model(data):
    support = grassmannian_support(2, 3, 3)
    alphabet = [E(0), E(1), F(0), F(1)]
    letters = tuple(data.draw(st.lists(st.sampled_from(alphabet), min_size=4, max_size=7)))
    domain = data.draw(st.sampled_from(support.weights()))
    w = MorphWord(letters, domain)
    _assert_matches_model(w, decompose(w, support), support)
    _assert_matches_model(w, sort_class(GradedClass.of_word(w), support), support)


@pytest.mark.parametrize("m, n, N", [
    (2, 3, 2),
    pytest.param(3, 3, 3, marks=pytest.mark.slow),
])
def test_divided_power_words_match_fermion_model(m, n, N):
    support = grassmannian_support(m, n, N)
    vertices = support.datum.vertices
    alphabet = [E(i) for i in vertices] + [F(i) for i in vertices] + [Ed2(i) for i in vertices]
    for length in range(1, 4):
        for letters in product(alphabet, repeat=length):
            if all(letter.kind is not LetterKind.ED2 for letter in letters):
                continue
            for domain in support.weights():
                w = MorphWord(letters, domain)
                cls = decompose(w, support)
                assert cls.is_effective()
                _assert_matches_model(w, cls, support)
                _assert_matches_model(w, sort_class(GradedClass.of_word(w), support), support)


def test_divided_power_with_mixed_vertices(gr_232):
    for domain in gr_232.weights():
        for text in ("E1^2 E2 F1", "E1^2 F1 E2 F2", "F1 E2^2 E1 F2"):
            w = word(f"{text} @ {list(domain.coords)}", gr_232)
            _assert_matches_model(w, decompose(w, gr_232), gr_232)


def test_divided_power_commutation(sl2_support):
    # E^(2) F 1_0 = F E^(2) 1_0 + [1] E 1_0
    result = sort_class(GradedClass.of_word(word("E1^2 F1 @ [0]", sl2_support)), sl2_support)
    assert result.to_json() == [
        {"word": "E1", "laurent": [[0, 1]]},
        {"word": "F1 E1^2", "laurent": [[0, 1]]},
    ]


# --- Серр ---

def test_serre_rewrite(gr_232):
    result = serre_rewrite(word("F1 E1 E2 E1 @ [0,0]", gr_232))
    assert {w.text() for w in result.words()} == {"F1 E1^2 E2", "F1 E2 E1^2"}
    assert all(coeff == 1 for _, coeff in result.items())


def test_serre_errors(a3, gr_232):
    with pytest.raises(PreconditionError):
        serre_rewrite(word("E1 E1 E1 @ [0,0]", gr_232))
    w = parse_word("E1 E3 E1 @ [0,0,0]", (0, 0, 0), a3)
    with pytest.raises(NotAdjacent):
        serre_rewrite(w)


def test_verify_serre(gr_232):
    for domain in gr_232.weights():
        for text in ("E1 E2 E1", "E2 E1 E2"):
            assert verify_serre(word(f"{text} @ {list(domain.coords)}", gr_232), gr_232)


def test_serre_matches_fermion_model(gr_232):
    for domain in gr_232.weights():
        w = word(f"E1 E2 E1 @ {list(domain.coords)}", gr_232)
        _assert_matches_model(w, serre_rewrite(w), gr_232)


# --- ненулевость ---

@pytest.mark.parametrize("text, expected", [
    ("E1 @ [0]", True),
    ("E1 @ [1]", False),
    ("F1 @ [-1]", False),
    ("E1 E1 @ [-1]", True),
    ("E1 E1 @ [0]", False),
    ("E1^2 @ [-1]", True),
    ("E1 F1 @ [0]", True),
    ("F1 E1 @ [1]", False),
    ("E1 @ [4]", False),
])
def test_is_nonzero_sl2(sl2_support, text, expected):
    assert is_nonzero(word(text, sl2_support), sl2_support) is expected


def test_is_nonzero_mixed(gr_232):
    # E1 F2 1_λ: нужны все четыре угла квадрата
    for domain in gr_232.weights():
        w = word(f"E1 F2 @ {list(domain.coords)}", gr_232)
        model = _operator(w.letters, gr_232, domain.coords)
        assert is_nonzero(w, gr_232) is bool(model.any())


# --- движок Hom ---

def test_default_window(sl2_support):
    w = word("E1 F1 @ [1]", sl2_support)
    assert default_window(w, w) == (-8, 8)
    unit = word("1 @ [0]", sl2_support)
    assert default_window(unit, unit, 3) == (-3, 3)


def test_end_of_identity(sl2_support):
    unit = word("1 @ [0]", sl2_support)
    table = hom_dim(unit, unit, sl2_support, (-2, 0))
    assert [v for _, v in table.items()] == [ZERO, ZERO, Exactly(1)]


def test_end_of_e(sl2_support):
    engine = HomEngine(sl2_support)
    w = word("E1 @ [0]", sl2_support)
    expected = [ZERO, ZERO, ZERO, Exactly(1)]
    assert [v for _, v in engine.end_dim(w, (-3, 0)).items()] == expected
    assert [v for _, v in engine.hom_dim_adjoint(w, w, (-3, 0)).items()] == expected


def test_hom_of_zero_morphism(sl2_support):
    w = word("E1 @ [1]", sl2_support)
    table = HomEngine(sl2_support).hom_dim(w, w, (-2, 2))
    assert table == DimTable.zeros(-2, 2)


def test_hom_between_different_endpoints(sl2_support):
    e = word("E1 @ [0]", sl2_support)
    f = word("F1 @ [0]", sl2_support)
    assert HomEngine(sl2_support).hom_dim(e, f, (-1, 1)) == DimTable.zeros(-1, 1)


def test_hom_class_agrees_with_word(sl2_support):
    engine = HomEngine(sl2_support)
    ef = word("E1 F1 @ [1]", sl2_support)
    unit = word("1 @ [1]", sl2_support)
    window = (-4, 1)
    by_class = engine.hom_dim_class(decompose(ef, sl2_support), GradedClass.of_word(unit), window)
    by_word = engine.hom_dim(ef, unit, window)
    for degree in (-3, -2, -1):
        assert by_class.at(degree) == by_word.at(degree)
    assert by_word.at(-1) == Exactly(1)
    assert by_word.at(-2) == ZERO


def test_divided_power_end(sl2_support):
    w = word("E1^2 @ [-1]", sl2_support)
    table = HomEngine(sl2_support).end_dim(w, (-6, 0))
    assert table.at(0) == Exactly(1)
    assert table.at(-3) == ZERO


def test_deconvolve_needs_zero_bottom():
    with pytest.raises(WindowTooNarrow):
        deconvolve(DimTable(0, 2, (Exactly(1), ZERO, ZERO)))
    # [2]-свертка единицы в степени 0
    f = DimTable(-3, 2, (ZERO, ZERO, Exactly(1), ZERO, Exactly(1), ZERO))
    g = deconvolve(f)
    assert g.at(0) == Exactly(1)
    assert g.at(-1) == ZERO and g.at(1) == ZERO and g.at(2) == ZERO


def test_engine_clear(sl2_support):
    engine = HomEngine(sl2_support)
    w = word("E1 @ [0]", sl2_support)
    engine.end_dim(w, (-2, 0))
    engine.clear()
    assert engine.refusals == 0
    assert engine.end_dim(w, (-2, 0)).at(0) == Exactly(1)


def test_hom_outside_support_is_zero(sl2_support):
    engine = HomEngine(sl2_support)
    outside = word("E1 F1 @ [4]", sl2_support)
    assert engine.hom_dim(outside, outside, (-2, 2)) == DimTable.zeros(-2, 2)
    assert engine.hom_dim_adjoint(outside, outside, (-2, 2)) == DimTable.zeros(-2, 2)
    assert engine.refusals == 0


@pytest.mark.parametrize("source, target, threshold", [
    ("E2 E1 @ [0,-1]", "E1 E2 @ [0,-1]", 1),
    ("E1 E2 @ [0,-1]", "E1 E2 @ [0,-1]", 0),
    ("F2 E1 @ [0,0]", "E1 F2 @ [0,0]", 0),
    ("E1 F2 @ [0,0]", "F2 E1 @ [0,0]", 0),
])
def test_rank_three_hom_is_exact(source, target, threshold):
    support = grassmannian_support(3, 3, 3)
    engine = HomEngine(support)
    s, t = word(source, support), word(target, support)
    table = engine.hom_dim(s, t, (threshold - 4, threshold))
    expected = int(is_nonzero(s, support) and is_nonzero(t, support))
    assert all(table.exact(d) for d in range(threshold - 4, threshold + 1)), str(table)
    assert all(table.at(d) == ZERO for d in range(threshold - 4, threshold))
    assert table.at(threshold) == Exactly(expected)
    assert engine.refusals == 0


def test_rank_three_end_of_pair():
    support = grassmannian_support(3, 3, 4)
    w = word("E1 E2 @ [0,-2]", support)
    table = HomEngine(support).end_dim(w, (-4, 0))
    assert [table.at(d) for d in range(-4, 0)] == [ZERO] * 4
    assert table.at(0) == Exactly(int(is_nonzero(w, support)))


letters_ef = st.lists(st.sampled_from([E(0), E(1), F(0), F(1)]), min_size=1, max_size=3)


@pytest.mark.slow
@given(letters_ef, st.data())
@settings(max_examples=300, deadline=None)
def test_adjunction_sides_agree(letters, data):
    support = grassmannian_support(2, 3, 2)
    domain = data.draw(st.sampled_from(support.weights()))
    order = data.draw(st.permutations(letters))
    source = MorphWord(tuple(letters), domain)
    target = MorphWord(tuple(order), domain)
    engine = HomEngine(support)
    window = default_window(source, target)
    by_source = engine.hom_dim(source, target, window)
    by_target = engine.hom_dim_adjoint(source, target, window)
    for degree, value in by_source.items():
        other = by_target.at(degree)
        if isinstance(value, Exactly) and isinstance(other, Exactly):
            assert value == other, (str(source), str(target), degree)


# --- леммы ---

def test_appendix_sl2(sl2_support):
    report = appendix_check(sl2_support)
    assert report.consistent
    data = report.to_dict()
    assert data["consistent"] is True
    assert set(data["lemmas"]) == set(LEMMAS)
    assert data["lemmas"]["end-E"]["instances"] == 3
    assert data["lemmas"]["end-E"]["contradictions"] == []


def test_appendix_subset(gr_232):
    report = appendix_check(gr_232, lemmas=["end-E", "swap-adjacent"])
    assert set(report.to_dict()["lemmas"]) == {"end-E", "swap-adjacent"}
    assert report.consistent


@pytest.mark.slow
@pytest.mark.parametrize("m, n, N", [(2, 3, 2), (2, 3, 3), (1, 4, 2), (2, 4, 4)])
def test_appendix_grassmannians(m, n, N):
    assert appendix_check(grassmannian_support(m, n, N)).consistent


def test_qint_in_corrections(sl2_support):
    # E F 1_2 содержит [2] 1_2: коэффициент при пустом слове - квантовое целое
    result = decompose(word("E1 F1 @ [1]", sl2_support), sl2_support)
    assert result.coefficient(word("1 @ [1]", sl2_support)) == qint(2)


@pytest.mark.slow
@pytest.mark.parametrize("m, n, N", [(3, 3, 3), (3, 3, 4)])
def test_appendix_rank_three_has_no_refusals(m, n, N):
    report = appendix_check(grassmannian_support(m, n, N))
    data = report.to_dict()
    refusals = {name: tally["refusals"] for name, tally in data["lemmas"].items() if tally["refusals"]}
    assert refusals == {}
    assert report.consistent


def test_refusal_breaks_consistency(sl2_support):
    report = appendix_check(sl2_support, lemmas=["end-E"])
    assert report.consistent
    report.tallies["end-E"].refusals = 1
    assert not report.consistent
    assert report.to_dict()["consistent"] is False
