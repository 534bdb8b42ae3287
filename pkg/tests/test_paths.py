# -*- coding: utf-8 -*-
"""
Тесты допустимых сдвигов, канонических путей и сертификатов ходов
"""
import random
from itertools import combinations, product

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cartan import Support, grassmannian_support
from common.errors import (
    ClaimFailure,
    EndpointMismatch,
    InvalidMove,
    NotClosed,
    ParseError,
    PreconditionError,
)
from paths import (
    Drop,
    Insert,
    Mode,
    MoveCert,
    SlideSeq,
    Switch,
    Undecided,
    canonical_path,
    drop_move,
    endpoint,
    insert_move,
    is_middle_weight,
    is_valid_path,
    is_valid_slide,
    middle_weights,
    parse_steps,
    reduce_appended,
    reduce_to_empty,
    replay,
    slide_equivalent,
    slide_graph,
    switch_move,
)
from paths.slides import first_invalid_step, slide_graph


def at(support, *coords):
    return support.weight(coords)


# --- сдвиги и последовательности ---

def test_valid_slides_sl2(sl2_support):
    zero = at(sl2_support, 0)
    top = at(sl2_support, 1)
    assert is_valid_slide(zero, 0, 1, sl2_support)
    assert is_valid_slide(zero, 0, -1, sl2_support)
    # <λ, α> = 2 > 1: спуск запрещен
    assert not is_valid_slide(top, 0, -1, sl2_support)
    assert not is_valid_slide(top, 0, 1, sl2_support)


def test_slide_seq_basics(gr_232):
    seq = SlideSeq(at(gr_232, 0, 0), ((1, 0), (1, 0), (-1, 1)))
    assert len(seq) == 3
    assert str(seq) == "(+0, +0, -1)"
    assert seq.step_sum() == {0: 2, 1: -1}
    assert seq.to_json() == [[1, 0], [1, 0], [-1, 1]]
    assert endpoint(seq).coords == (2, -1)
    assert [w.coords for w in seq.weights()][:2] == [(0, 0), (1, 0)]
    assert SlideSeq(None, ((1, 0), (-1, 0))).step_sum() == {}


def test_slide_seq_validation(gr_232):
    with pytest.raises(ParseError):
        SlideSeq(None, ((2, 0),))
    with pytest.raises(ParseError):
        SlideSeq(at(gr_232, 0, 0), ((1, 5),))
    with pytest.raises(PreconditionError):
        SlideSeq(None, ((1, 0),)).weights()


def test_parse_steps():
    assert parse_steps([[1, 0], [-1, 2]]) == ((1, 0), (-1, 2))
    with pytest.raises(ParseError):
        parse_steps("[[1, 0]]")
    with pytest.raises(ParseError):
        parse_steps([[1, 0, 3]])
    with pytest.raises(ParseError):
        parse_steps([[0, 1]])


def test_valid_path_and_first_invalid(gr_232):
    good = SlideSeq(at(gr_232, 0, 0), ((-1, 0), (-1, 1)))
    bad = SlideSeq(at(gr_232, 0, 0), ((-1, 1), (-1, 0)))
    assert is_valid_path(good, gr_232)
    assert first_invalid_step(good, gr_232) is None
    assert not is_valid_path(bad, gr_232)
    assert first_invalid_step(bad, gr_232) == 2
    assert not is_valid_path(SlideSeq(None, ()), gr_232)


# --- средние веса ---

def test_middle_weights_sl2(sl2_support):
    assert is_middle_weight(at(sl2_support, 0), sl2_support)
    assert not is_middle_weight(at(sl2_support, 1), sl2_support)
    assert [w.coords for w in middle_weights(sl2_support)] == [(0,)]


def test_middle_weights_232(gr_232):
    assert [w.coords for w in middle_weights(gr_232)] == [(-1, -1), (-1, 0), (0, 0)]
    assert is_middle_weight(gr_232.middle(), gr_232)
    assert not is_middle_weight(at(gr_232, 5, 5), gr_232)


def test_slide_graph(gr_232):
    graph = slide_graph(gr_232)
    assert graph.number_of_nodes() == 6
    assert graph.edges[(0, 0), (-1, 0)]["step"] == (-1, 0)
    assert not graph.has_edge((0, -1), (0, 0))


# --- канонический путь ---

def test_canonical_path_example(gr_232):
    path = canonical_path(at(gr_232, -1, -1), at(gr_232, 0, 0), gr_232)
    assert path.steps == ((1, 1), (1, 0))
    assert [w.pairings() for w in path.weights()] == [(0, -1), (-1, 1), (1, 0)]


def test_canonical_path_descending(gr_232):
    path = canonical_path(gr_232.middle(), at(gr_232, -2, -1), gr_232)
    assert path.steps == ((-1, 0), (-1, 1), (-1, 0))
    assert is_valid_path(path, gr_232)


def test_canonical_path_trivial(gr_232):
    mu = gr_232.middle()
    assert canonical_path(mu, mu, gr_232).steps == ()


@pytest.mark.parametrize("m, n, N", [(2, 2, 2), (2, 3, 2), (2, 3, 3), (1, 4, 2)])
def test_canonical_paths_are_paths(m, n, N):
    support = grassmannian_support(m, n, N)
    mu = support.middle()
    for lam in support.weights():
        path = canonical_path(mu, lam, support)
        assert is_valid_path(path, support)
        assert path.endpoint() == lam
        assert len(path) == sum(abs(a) for a in lam.difference(mu))


def test_canonical_path_requires_type_a(d4_datum):
    support = Support(d4_datum, (1, 1, 1, 1), [(0, 0, 0, 0)])
    w = support.weight((0, 0, 0, 0))
    with pytest.raises(ClaimFailure):
        canonical_path(w, w, support)


def test_canonical_path_outside_support(gr_232):
    with pytest.raises(PreconditionError):
        canonical_path(gr_232.middle(), at(gr_232, 3, 3), gr_232)


# --- ходы ---

def test_switch_rescale(gr_232):
    seq = SlideSeq(None, ((1, 0), (-1, 1)))
    assert switch_move(seq, 1, Mode.RESCALE).steps == ((-1, 1), (1, 0))
    with pytest.raises(InvalidMove):
        switch_move(SlideSeq(None, ((1, 0), (1, 1))), 1, Mode.RESCALE)
    with pytest.raises(InvalidMove):
        switch_move(SlideSeq(None, ((1, 0), (-1, 0))), 1, Mode.RESCALE)
    with pytest.raises(InvalidMove):
        switch_move(seq, 2, Mode.RESCALE)


def test_switch_path_mode(gr_232):
    good = SlideSeq(at(gr_232, 0, 0), ((-1, 0), (-1, 1)))
    with pytest.raises(PreconditionError):
        switch_move(good, 1, Mode.PATH)
    # обратный порядок проходит через вес (0,-1), где спуск по α_0 запрещен
    with pytest.raises(InvalidMove):
        switch_move(good, 1, Mode.PATH, gr_232)


def test_drop_and_insert(gr_232):
    seq = SlideSeq(at(gr_232, 0, 0), ((-1, 0), (-1, 1), (1, 1), (-1, 1)))
    assert drop_move(seq, 3).steps == ((-1, 0), (-1, 1))
    assert drop_move(seq, 3, Mode.PATH, gr_232).steps == ((-1, 0), (-1, 1))
    with pytest.raises(InvalidMove):
        drop_move(seq, 1)
    shorter = SlideSeq(at(gr_232, 0, 0), ((-1, 0), (-1, 1)))
    assert insert_move(shorter, 3, (1, 1), support=gr_232) == seq
    # из (0,0) подъем по α_0 выводит за носитель
    with pytest.raises(InvalidMove):
        insert_move(shorter, 1, (1, 0), support=gr_232)
    with pytest.raises(InvalidMove):
        insert_move(shorter, 4, (1, 0), Mode.RESCALE)


def test_replay_requires_path_start(gr_232):
    bad = SlideSeq(at(gr_232, 0, 0), ((-1, 1), (-1, 0)))
    with pytest.raises(InvalidMove):
        replay(bad, MoveCert(()), Mode.PATH, gr_232)


def test_cert_json():
    cert = MoveCert((Switch(2), Drop(1), Insert(3, (-1, 0))))
    assert cert.to_json() == [
        {"move": "switch", "at": 2},
        {"move": "drop", "at": 1},
        {"move": "insert", "at": 3, "step": [-1, 0]},
    ]
    assert MoveCert.from_json(cert.to_json()) == cert
    with pytest.raises(ParseError):
        MoveCert.from_json([{"move": "jump", "at": 1}])
    with pytest.raises(ParseError):
        MoveCert.from_json([{"move": "insert", "at": 1}])


# --- сведение к пустой последовательности ---

def test_reduce_to_empty_example():
    seq = SlideSeq(None, ((1, 0), (1, 1), (-1, 0), (-1, 1)))
    cert = reduce_to_empty(seq)
    assert cert.moves == (Switch(2), Drop(1), Drop(1))
    assert replay(seq, cert, Mode.RESCALE).steps == ()


def test_reduce_to_empty_trivial():
    assert len(reduce_to_empty(SlideSeq(None, ()))) == 0


def test_reduce_to_empty_not_closed():
    with pytest.raises(NotClosed):
        reduce_to_empty(SlideSeq(None, ((1, 0), (1, 0), (-1, 0), (1, 1))))


steps_strategy = st.lists(st.tuples(st.sampled_from([1, -1]), st.integers(0, 3)), max_size=6)


@pytest.mark.slow
@given(steps_strategy, st.integers(0, 10_000))
@settings(max_examples=1000, deadline=None)
def test_reduce_to_empty_closed_sequences(steps, seed):
    inverses = [(-c, k) for c, k in steps]
    mixed = list(steps) + inverses
    random.Random(seed).shuffle(mixed)
    seq = SlideSeq(None, tuple(mixed))
    cert = reduce_to_empty(seq)
    assert replay(seq, cert, Mode.RESCALE).steps == ()
    assert sum(isinstance(m, Drop) for m in cert.moves) == len(steps)


@pytest.mark.parametrize("length", [2, 4, 6])
def test_reduce_to_empty_all_closed_sequences(length):
    alphabet = [(1, 0), (-1, 0), (1, 1), (-1, 1)]
    closed = 0
    for steps in product(alphabet, repeat=length):
        totals = [sum(c for c, k in steps if k == vertex) for vertex in (0, 1)]
        if any(totals):
            continue
        closed += 1
        seq = SlideSeq(None, steps)
        cert = reduce_to_empty(seq)
        assert replay(seq, cert, Mode.RESCALE).steps == (), steps
        assert sum(isinstance(m, Drop) for m in cert.moves) == length // 2
    assert closed > 0


# --- эквивалентность путей ---

def test_slide_equivalent_insert(gr_232):
    mu = gr_232.middle()
    p = SlideSeq(mu, ((-1, 0), (-1, 1)))
    q = SlideSeq(mu, ((-1, 0), (-1, 1), (1, 1), (-1, 1)))
    cert = slide_equivalent(p, q, gr_232)
    assert isinstance(cert, MoveCert)
    assert len(cert) == 1
    assert replay(p, cert, Mode.PATH, gr_232) == q


def test_slide_equivalent_same_path(gr_232):
    p = SlideSeq(gr_232.middle(), ((-1, 0),))
    assert len(slide_equivalent(p, p, gr_232)) == 0


def test_slide_equivalent_budget(gr_232):
    mu = gr_232.middle()
    p = SlideSeq(mu, ((-1, 0), (-1, 1)))
    q = SlideSeq(mu, ((-1, 0), (-1, 1), (1, 1), (-1, 1)))
    result = slide_equivalent(p, q, gr_232, budget=1)
    assert isinstance(result, Undecided)
    assert result.to_json()["undecided"] is True
    assert result.reason == "budget"


def test_slide_equivalent_errors(gr_232):
    mu = gr_232.middle()
    p = SlideSeq(mu, ((-1, 0), (-1, 1)))
    with pytest.raises(EndpointMismatch):
        slide_equivalent(p, SlideSeq(mu, ((-1, 0),)), gr_232)
    with pytest.raises(PreconditionError):
        slide_equivalent(p, SlideSeq(mu, ((-1, 1), (-1, 0))), gr_232)


def _shortest_paths(support, mu, lam):
    graph = slide_graph(support)
    result = []
    if not nx.has_path(graph, mu.coords, lam.coords):
        return result
    for nodes in nx.all_shortest_paths(graph, mu.coords, lam.coords):
        steps = tuple(graph.edges[a, b]["step"] for a, b in zip(nodes, nodes[1:]))
        result.append(SlideSeq(mu, steps))
    return result


@pytest.mark.parametrize("m, n, N", [
    (2, 3, 2),
    (1, 4, 2),
    pytest.param(2, 3, 3, marks=pytest.mark.slow),
    pytest.param(2, 4, 4, marks=pytest.mark.slow),
])
def test_all_minimal_paths_are_equivalent(m, n, N):
    support = grassmannian_support(m, n, N)
    mu = support.middle()
    pairs = 0
    for lam in support.weights():
        for p, q in combinations(_shortest_paths(support, mu, lam), 2):
            pairs += 1
            cert = slide_equivalent(p, q, support)
            assert isinstance(cert, MoveCert), (p.to_json(), q.to_json())
            assert replay(p, cert, Mode.PATH, support) == q
    assert pairs > 0


# --- укорочение канонического пути ---

def test_reduce_appended_drop(gr_232):
    canon = canonical_path(gr_232.middle(), at(gr_232, -1, -1), gr_232)
    assert canon.steps == ((-1, 0), (-1, 1))
    shorter, cert = reduce_appended(canon, (1, 1), gr_232)
    assert shorter.steps == ((-1, 0),)
    assert cert.moves == (Drop(2),)


def test_reduce_appended_needs_switch(gr_232):
    canon = canonical_path(gr_232.middle(), at(gr_232, -1, -1), gr_232)
    shorter, cert = reduce_appended(canon, (1, 0), gr_232)
    assert shorter.steps == ((-1, 1),)
    assert is_valid_path(shorter, gr_232)
    appended = canon.with_steps(canon.steps + ((1, 0),))
    assert replay(appended, cert, Mode.PATH, gr_232) == shorter


def test_reduce_appended_preconditions(gr_232):
    mu = gr_232.middle()
    canon = canonical_path(mu, at(gr_232, -1, -1), gr_232)
    # для шага -0 нужно a_0 >= 1
    with pytest.raises(PreconditionError):
        reduce_appended(canon, (-1, 0), gr_232)
    with pytest.raises(PreconditionError):
        reduce_appended(SlideSeq(mu, ((-1, 1), (-1, 0))), (1, 1), gr_232)
    lowest = canonical_path(mu, at(gr_232, -2, -1), gr_232)
    # <λ, α_0> = -2: подъем по α_0 недопустим
    with pytest.raises(PreconditionError):
        reduce_appended(lowest, (1, 0), gr_232)
