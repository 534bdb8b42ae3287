# -*- coding: utf-8 -*-
"""
Тесты файлов данных Картана и носителей
"""
import json

import pytest

from cartan import grassmannian_support, triangle
from common.errors import InvalidDatum, NonFiniteSupport, ParseError
from storage import load_datum, load_support, save_datum, save_support


def test_datum_file(tmp_path):
    datum = triangle({(0, 1): 2, (1, 0): "1/2"})
    path = tmp_path / "data" / "triangle.json"
    save_datum(datum, path)
    loaded = load_datum(path)
    assert loaded.to_dict() == datum.to_dict()
    assert loaded.t(0, 1) == 2


def test_support_file(tmp_path, gr_232):
    path = tmp_path / "support.json"
    save_support(gr_232, path)
    loaded = load_support(path, gr_232.datum)
    assert loaded.base == gr_232.base
    assert loaded.coords() == gr_232.coords()


def test_support_from_pairings_file(tmp_path, a1):
    path = tmp_path / "sl2.json"
    path.write_text(json.dumps({"pairings": [[0], [2], [-2]]}), encoding="utf-8")
    support = load_support(path, a1)
    assert support.base == (0,)
    assert support.coords() == [(-1,), (0,), (1,)]


def test_grassmannian_file_matches_builder(tmp_path):
    support = grassmannian_support(1, 4, 2)
    path = tmp_path / "gr.json"
    save_support(support, path)
    assert json.loads(path.read_text(encoding="utf-8"))["base_pairings"] == list(support.base)


def test_missing_file(tmp_path, a1):
    with pytest.raises(ParseError):
        load_datum(tmp_path / "nope.json")
    with pytest.raises(ParseError):
        load_support(tmp_path / "nope.json", a1)


def test_bad_json(tmp_path, a1):
    path = tmp_path / "broken.json"
    path.write_text("{vertices: 2", encoding="utf-8")
    with pytest.raises(ParseError):
        load_datum(path)
    with pytest.raises(ParseError):
        load_support(path, a1)


def test_bad_structure(tmp_path, a1):
    path = tmp_path / "list.json"
    path.write_text("[1, 2]", encoding="utf-8")
    with pytest.raises(ParseError):
        load_datum(path)
    with pytest.raises(ParseError):
        load_support(path, a1)
    path.write_text(json.dumps({"weights": [[0]]}), encoding="utf-8")
    with pytest.raises(ParseError):
        load_support(path, a1)


def test_invalid_graph_in_file(tmp_path):
    path = tmp_path / "loop.json"
    path.write_text(json.dumps({"vertices": 2, "edges": [[0, 0]]}), encoding="utf-8")
    with pytest.raises(InvalidDatum):
        load_datum(path)


@pytest.mark.parametrize("data", [
    {"base_pairings": [0], "weights": [[0], [1]], "finite": False},
    {"base_pairings": [0], "weights": [[0]], "unbounded": True},
    {"base_pairings": [0], "weights": "all"},
    {"pairings": "2Z"},
])
def test_infinite_support_rejected(tmp_path, a1, data):
    path = tmp_path / "infinite.json"
    path.write_text(json.dumps(data), encoding="utf-8")
    with pytest.raises(NonFiniteSupport) as info:
        load_support(path, a1)
    assert info.value.code == "non_finite_support"
    assert info.value.exit_code == 1


def test_infinite_coordinate_rejected(tmp_path, a1):
    path = tmp_path / "inf.json"
    path.write_text('{"base_pairings": [0], "weights": [[0], [Infinity]]}', encoding="utf-8")
    with pytest.raises(NonFiniteSupport):
        load_support(path, a1)


def test_finite_flag_accepted(tmp_path, a1):
    path = tmp_path / "finite.json"
    path.write_text(json.dumps({"pairings": [[0], [2]], "finite": True}), encoding="utf-8")
    assert len(load_support(path, a1)) == 2
