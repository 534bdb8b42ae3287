# -*- coding: utf-8 -*-
"""
Тесты алгебры R_Q: разбор, нормальная форма, соотношения, оракул nilHecke
"""
import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from cartan import CartanDatum, triangle, type_a
from common.errors import NonTermination, OracleUnverified, ParseError, PreconditionError
from klr import (
    KlrElement,
    KlrRewriter,
    KlrWord,
    PolynomialOracle,
    cross,
    dot,
    format_element,
    graded_dim_count,
    is_normal,
    nil_hecke_oracle,
    normalize,
    parse_element,
    parse_klr_word,
    relation_check,
    triple_crossing,
)
from klr.relations import _contexts


def element(text, datum):
    return parse_element(text, datum)


# --- разбор ---

def test_parse_word(a2):
    w = parse_klr_word("e(0,1,0); t1 x2 t2", a2)
    assert w.bottom == (0, 1, 0)
    assert w.gens == (cross(1), dot(2), cross(2))
    assert w.top == (1, 0, 0)
    assert w.text() == "e(0,1,0); t1 x2 t2"


def test_parse_element_coefficients(a2):
    e = element("e(0,1); t1 x2 + 3/2*e(0,1); x1 t1 + -e(0,1); t1", a2)
    assert e.bottom == (0, 1) and e.top == (1, 0)
    assert e.coefficient(parse_klr_word("e(0,1); x1 t1", a2)) == Fraction(3, 2)
    assert e.coefficient(parse_klr_word("e(0,1); t1", a2)) == -1
    assert len(e) == 3


@pytest.mark.parametrize("text", [
    "",
    "f(0,1)",
    "e(0,5)",
    "e(0,1); t2",
    "e(0,1); y1",
    "e(0,1); t1 + e(0,1)",
    "e(a)",
])
def test_parse_errors(a2, text):
    with pytest.raises(ParseError):
        parse_element(text, a2)


def test_format_element(a1):
    assert format_element(KlrElement.zero((0, 0), (0, 0))) == "0"
    e = element("2*e(0,0); x1", a1)
    assert str(e) == "2*e(0,0); x1"


# --- степени ---

def test_degrees(a1, a2, a3):
    assert parse_klr_word("e(0,0); t1", a1).degree(a1) == -2
    assert parse_klr_word("e(0,1); t1", a2).degree(a2) == 1
    assert parse_klr_word("e(0,2); t1 x1", a3).degree(a3) == 2
    assert triple_crossing((0, 1, 2)).degree(a3) == 2
    assert triple_crossing((0, 1, 2), primed=True).degree(a3) == 2


def test_inhomogeneous_degree(a1):
    e = element("e(0,0) + e(0,0); x1", a1)
    with pytest.raises(PreconditionError):
        e.degree(a1)
    assert KlrElement.zero((0,), (0,)).degree(a1) is None


# --- нормальная форма ---

def test_dot_above_crossing(a1):
    result = normalize(element("e(0,0); t1 x1", a1), a1)
    expected = KlrElement((0, 0), (0, 0), {
        KlrWord((0, 0), (dot(2), cross(1))): 1,
        KlrWord((0, 0)): 1,
    })
    assert result == expected
    assert str(result) == "e(0,0) + e(0,0); x2 t1"


def test_dot_slides_without_correction(a2):
    result = normalize(element("e(0,1); t1 x1", a2), a2)
    assert result == element("e(0,1); x2 t1", a2)


def test_nil_hecke_square_vanishes(a1):
    assert normalize(element("e(0,0); t1 t1", a1), a1).is_zero()
    assert normalize(element("e(0,0,0); t1 t2 t1 t1", a1), a1).is_zero()


def test_square_adjacent():
    datum = CartanDatum.build(2, [(0, 1)], {(0, 1): 2, (1, 0): 3})
    result = normalize(element("e(0,1); t1 t1", datum), datum)
    assert result == element("2*e(0,1); x1 + 3*e(0,1); x2", datum)


def test_square_distant(a3):
    assert normalize(element("e(0,2); t1 t1", a3), a3) == element("e(0,2)", a3)


def test_braid_correction(a2):
    lhs = normalize(element("e(0,1,0); t1 t2 t1", a2), a2)
    rhs = normalize(element("e(0,1,0); t2 t1 t2 + e(0,1,0)", a2), a2)
    assert lhs == rhs
    assert not lhs.is_zero()


def test_is_normal(a1):
    assert is_normal(parse_klr_word("e(0,0,0); x1 x3 t1 t2", a1))
    assert not is_normal(parse_klr_word("e(0,0); t1 x1", a1))
    assert not is_normal(parse_klr_word("e(0,0); x2 x1", a1))
    assert not is_normal(parse_klr_word("e(0,0); t1 t1", a1))


def test_budget_exhausted(a1):
    with pytest.raises(NonTermination):
        KlrRewriter(a1, budget=1).normalize(element("e(0,0,0); t1 x1 t2 x2", a1))


def test_compose(a1):
    low = element("e(0,0); t1", a1)
    high = element("e(0,0); x1", a1)
    assert low.compose(high) == element("e(0,0); t1 x1", a1)
    assert low.compose(element("e(0,1); x1", type_a(2))).is_zero()


gens3 = st.lists(st.sampled_from([dot(1), dot(2), dot(3), cross(1), cross(2)]), max_size=5)


@given(gens3, st.lists(st.integers(0, 1), min_size=3, max_size=3))
@settings(max_examples=50, deadline=None)
def test_normalize_is_idempotent(gens, labels):
    datum = type_a(2)
    once = normalize(KlrElement.of_word(KlrWord(tuple(labels), tuple(gens))), datum)
    assert normalize(once, datum) == once
    assert all(is_normal(w) for w in once.words())


# --- соотношения ---

def test_relations_hold_a2(a2):
    report = relation_check(a2, max_len=3)
    assert report.checked > 0
    assert report.passed, report.failures[:3]


def test_relations_hold_with_scalars():
    datum = CartanDatum.build(3, [(0, 1), (1, 2), (0, 2)], {(0, 1): 2, (1, 0): "1/2", (1, 2): -1})
    report = relation_check(datum, max_len=3, names=["braid-iji", "square-adjacent", "nilhecke-dot-below"])
    assert report.passed, report.failures[:3]
    assert report.to_dict()["passed"] is True


@pytest.mark.slow
def test_relations_hold_in_context(d4_datum):
    report = relation_check(d4_datum, max_len=3, ambient=3, samples=5, seed=7)
    assert report.passed, report.failures[:3]


def test_contexts_are_exhaustive():
    # две нити: x1, x2, t1; до двух образующих снизу и сверху вместе
    contexts = _contexts(2, 2, None, random.Random(0))
    assert len(contexts) == 1 + 2 * 3 + 3 * 9
    assert len(set(contexts)) == len(contexts)
    assert ((cross(1),), (dot(2),)) in contexts
    assert ((), (dot(1), cross(1))) in contexts


def test_sampled_contexts_keep_single_generators():
    contexts = _contexts(2, 4, 6, random.Random(3))
    assert len(contexts) == 1 + 2 * 3 + 6
    assert all(2 <= len(low) + len(high) <= 4 for low, high in contexts[7:])


def test_relations_hold_in_all_pair_contexts(a2):
    report = relation_check(a2, max_len=2, ambient=2)
    assert report.checked > 0
    assert report.passed, report.failures[:3]


@pytest.mark.slow
@pytest.mark.parametrize("datum", [type_a(3), type_a(4), triangle()], ids=["A3", "A4", "triangle"])
def test_relations_hold_up_to_four_strands(datum):
    report = relation_check(datum, max_len=4)
    assert report.passed, report.failures[:3]


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(5))
def test_relations_hold_for_random_scalars(seed):
    rng = random.Random(seed)
    values = [Fraction(1), Fraction(2), Fraction(-1), Fraction(1, 2), Fraction(-3, 4), Fraction(5)]
    base = triangle()
    scalars = {}
    for i, j in base.edges:
        scalars[(i, j)] = rng.choice(values)
        scalars[(j, i)] = rng.choice(values)
    datum = triangle(scalars)
    report = relation_check(datum, max_len=3, ambient=1)
    assert report.passed, report.failures[:3]


# --- оракул nilHecke ---

def test_oracle_requires_verification(a1):
    oracle = PolynomialOracle(a1, strands=2)
    with pytest.raises(OracleUnverified):
        oracle.act(element("e(0,0); t1", a1), oracle.x(1))


def test_oracle_divided_differences(a1):
    oracle = PolynomialOracle(a1, strands=3)
    assert oracle.verify()
    x1, x2 = oracle.x(1), oracle.x(2)
    assert oracle.act(element("e(0,0,0); t1", a1), x1) == 1
    assert oracle.act(element("e(0,0,0); t1", a1), x1 * x2) == 0
    assert sympy.expand(oracle.act(element("e(0,0,0); t1", a1), x1 ** 2) - (x1 + x2)) == 0


def test_oracle_rejects_mixed_labels(a2):
    oracle = PolynomialOracle(a2, strands=2)
    oracle.verify()
    with pytest.raises(PreconditionError):
        nil_hecke_oracle(element("e(0,1); t1", a2), oracle.x(1), oracle)


@pytest.mark.slow
@given(gens3)
@settings(max_examples=500, deadline=None)
def test_normal_form_agrees_with_oracle(gens):
    datum = type_a(1)
    oracle = PolynomialOracle(datum, strands=3)
    assert oracle.verify()
    f = oracle.generic_polynomial(2)
    original = KlrElement.of_word(KlrWord((0, 0, 0), tuple(gens)))
    normal = normalize(original, datum)
    difference = nil_hecke_oracle(original, f, oracle) - nil_hecke_oracle(normal, f, oracle)
    assert sympy.expand(difference) == 0


# --- подсчет базиса ---

def test_graded_dim_count(a1):
    assert graded_dim_count(a1, (0, 0), (-2, 2)) == {-2: 1, -1: 0, 0: 3, 1: 0, 2: 5}


def test_graded_dim_count_adjacent(a2):
    counts = graded_dim_count(a2, (0, 1), (0, 3))
    # e(0,1) в степени 0, t1 в степени 1, далее точки
    assert counts[0] == 1
    assert counts[1] == 1
    assert counts[2] == 2
