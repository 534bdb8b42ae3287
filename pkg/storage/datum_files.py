# -*- coding: utf-8 -*-
"""
Чтение и запись файлов данных Картана и носителей

Данные Картана: {"vertices": n, "edges": [[i, j], ...], "t": [{"i", "j", "value"}]}.
Носитель: {"base_pairings": [...], "weights": [[a_0, ...], ...]} или
{"pairings": [[λ_0, ...], ...]} - список векторов спариваний.
Носитель с "finite": false, "unbounded": true, строкой вместо списка весов
или бесконечной координатой отвергается как NonFiniteSupport.
"""
import json
import logging
import math
from pathlib import Path
from typing import Any, Union

from cartan.datum import CartanDatum
from cartan.support import Support
from common.errors import NonFiniteSupport, ParseError

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


def _read_json(path: PathLike) -> Any:
    file_path = Path(path)
    try:
        with open(file_path, 'r', encoding='utf-8') as f:
            return json.load(f)
    except FileNotFoundError:
        logger.error(f"Файл {file_path} не найден")
        raise ParseError(f"Файл {file_path} не найден", {"path": str(file_path)})
    except json.JSONDecodeError as e:
        logger.error(f"Ошибка парсинга JSON в {file_path}: {e}")
        raise ParseError(f"Ошибка парсинга JSON в {file_path}: {e}", {"path": str(file_path)})


def _write_json(data: Any, path: PathLike) -> None:
    file_path = Path(path)
    if file_path.parent:
        file_path.parent.mkdir(parents=True, exist_ok=True)
    with open(file_path, 'w', encoding='utf-8') as f:
        json.dump(data, f, ensure_ascii=False, indent=2)
    logger.debug(f"Сохранено в {file_path}")


def load_datum(path: PathLike) -> CartanDatum:
    """
    Загружает данные Картана из JSON-файла

    Raises:
        ParseError: файл отсутствует, не является JSON или имеет неверную структуру
    """
    data = _read_json(path)
    if not isinstance(data, dict):
        raise ParseError(f"Ожидался объект в {path}", {"path": str(path)})
    try:
        datum = CartanDatum.from_dict(data)
    except ParseError as e:
        e.details.setdefault("path", str(path))
        raise
    logger.info(f"Загружены данные Картана из {path}: {datum.vertex_count} вершин")
    return datum


def save_datum(datum: CartanDatum, path: PathLike) -> None:
    _write_json(datum.to_dict(), path)


def _check_finite(data: Any, path: PathLike) -> None:
    """Отказ на носителях, объявленных бесконечными или с бесконечными координатами"""
    if not isinstance(data, dict):
        return
    declared = data.get("finite") is False or data.get("unbounded") is True
    key = "pairings" if "pairings" in data else "weights"
    vectors = data.get(key)
    if isinstance(vectors, str):
        declared = True
    elif isinstance(vectors, list):
        for vector in vectors:
            if isinstance(vector, list) and any(isinstance(x, float) and not math.isfinite(x) for x in vector):
                declared = True
                break
    if declared:
        logger.error(f"Носитель в {path} не конечен")
        raise NonFiniteSupport(
            f"Носитель в {path} объявлен бесконечным; нужен конечный список весов",
            {"path": str(path), "field": key},
        )


def load_support(path: PathLike, datum: CartanDatum) -> Support:
    """
    Загружает носитель в одном из двух форматов

    Args:
        path: Путь к JSON-файлу
        datum: Данные Картана, к которым относится носитель

    Raises:
        ParseError: при ошибке чтения или структуры файла
        NonFiniteSupport: носитель объявлен бесконечным
    """
    data = _read_json(path)
    _check_finite(data, path)
    try:
        if isinstance(data, dict) and "pairings" in data:
            support = Support.from_pairings(datum, [list(v) for v in data["pairings"]])
        elif isinstance(data, dict):
            support = Support(datum, data["base_pairings"], data["weights"])
        else:
            raise ParseError(f"Ожидался объект в {path}", {"path": str(path)})
    except (KeyError, TypeError, ValueError) as e:
        logger.error(f"Некорректный носитель в {path}: {e}")
        raise ParseError(f"Некорректный носитель в {path}: {e}", {"path": str(path)})
    logger.info(f"Загружен носитель из {path}: {len(support)} весов")
    return support


def save_support(support: Support, path: PathLike) -> None:
    _write_json(support.to_dict(), path)
