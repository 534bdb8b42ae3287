# -*- coding: utf-8 -*-
"""
Пакетный интерфейс ко всем операциям

Отчет печатается в stdout как JSON с отсортированными ключами.
Коды выхода: 0 - успех, 1 - ошибка предметной области (объект
{"error": {...}} в stdout), 2 - ошибка использования.
"""
import argparse
import json
import logging
import re
import sys
from typing import Any, Dict, Optional, Sequence, TextIO, Tuple

from cartan import CartanDatum, GrassmannianSupport, Support, Weight, check_conditions, d4, grassmannian_support, triangle, type_a
from cli.logging_setup import setup_logging
from common.errors import AlgebraError, ParseError, PreconditionError
from config import Settings, get_settings
from klr import KlrRewriter, graded_dim_count, parse_element, relation_check
from morphcalc import HomEngine, MorphWord, appendix_check, decompose, is_nonzero, parse_word, serre_rewrite, verify_serre
from morphcalc.appendix import LEMMAS
from morphcalc.words import parse_coords
from paths import (
    SlideSeq,
    Undecided,
    canonical_path,
    middle_weights,
    parse_steps,
    reduce_appended,
    reduce_to_empty,
    slide_equivalent,
)
from qgrade import qbinom, qfactorial, qint
from storage import load_datum, load_support

logger = logging.getLogger(__name__)

Report = Dict[str, Any]

_GRAPH_RE = re.compile(r"^[Aa](\d+)$")


# --- разбор аргументов ---

def _ints(text: str, count: int, name: str) -> Tuple[int, ...]:
    try:
        values = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ParseError(f"{name}: ожидались целые через запятую, получено '{text}'", {"argument": name})
    if len(values) != count:
        raise ParseError(f"{name}: ожидалось {count} чисел, получено {len(values)}", {"argument": name})
    return values


def _named_graph(name: str) -> CartanDatum:
    match = _GRAPH_RE.match(name)
    if match:
        return type_a(int(match.group(1)))
    if name.upper() == "D4":
        return d4()
    if name.lower() == "triangle":
        return triangle()
    raise ParseError(f"Неизвестный граф '{name}': ожидалось A<n>, D4 или triangle", {"graph": name})


def _datum(args: argparse.Namespace) -> CartanDatum:
    if args.cartan:
        return load_datum(args.cartan)
    if args.graph:
        return _named_graph(args.graph)
    if args.grassmannian:
        _, n, _ = _ints(args.grassmannian, 3, "--grassmannian")
        return type_a(n - 1)
    raise ParseError("Нужен один из --cartan, --graph или --grassmannian")


def _support(args: argparse.Namespace, datum: CartanDatum) -> Support:
    if args.grassmannian:
        m, n, N = _ints(args.grassmannian, 3, "--grassmannian")
        return grassmannian_support(m, n, N, datum)
    if args.support:
        return load_support(args.support, datum)
    raise ParseError("Нужен --support FILE или --grassmannian m,n,N")


def _window(args: argparse.Namespace) -> Optional[Tuple[int, int]]:
    if not args.window:
        return None
    lo, hi = _ints(args.window, 2, "--window")
    if lo > hi:
        raise ParseError(f"--window: нижняя граница {lo} больше верхней {hi}")
    return lo, hi


def _word(text: str, weight: Optional[str], support: Support) -> MorphWord:
    if weight:
        text = f"{text} @ {weight}"
    return parse_word(text, support.base, support.datum)


def _weight(text: str, support: Support) -> Weight:
    return support.weight(parse_coords(text, support.datum))


def _start(args: argparse.Namespace, support: Support) -> Weight:
    """Начало путей: --from, середина грассманиана или первый средний вес"""
    if args.start:
        return _weight(args.start, support)
    if isinstance(support, GrassmannianSupport):
        return support.middle()
    found = middle_weights(support)
    if not found:
        raise PreconditionError("У носителя нет среднего веса")
    return found[0]


def _engine(args: argparse.Namespace, settings: Settings, support: Support) -> HomEngine:
    return HomEngine(
        support,
        depth_bound=settings.engine.depth_bound,
        budget=args.budget or settings.rewrite.sort_step_budget,
        window_factor=settings.engine.window_factor,
    )


def _steps(text: str) -> Tuple[Tuple[int, int], ...]:
    try:
        data = json.loads(text)
    except ValueError as e:
        raise ParseError(f"Последовательность шагов не является JSON: {e}", {"text": text})
    return parse_steps(data)


# --- подкоманды ---

def cmd_qint(args: argparse.Namespace, settings: Settings) -> Report:
    return {"laurent": qint(args.n).to_json()}


def cmd_qbinom(args: argparse.Namespace, settings: Settings) -> Report:
    return {"laurent": qbinom(args.n, args.k).to_json()}


def cmd_qfact(args: argparse.Namespace, settings: Settings) -> Report:
    return {"laurent": qfactorial(args.n).to_json()}


def cmd_decompose(args: argparse.Namespace, settings: Settings) -> Report:
    support = _support(args, _datum(args))
    word = _word(args.word, args.weight, support)
    result = decompose(word, support, budget=args.budget or settings.rewrite.sort_step_budget)
    return {"word": word.text(), "class": result.to_json()}


def cmd_homdim(args: argparse.Namespace, settings: Settings) -> Report:
    support = _support(args, _datum(args))
    source = _word(args.source, args.weight, support)
    target = _word(args.target, args.weight, support)
    engine = _engine(args, settings, support)
    if args.adjoint:
        table = engine.hom_dim_adjoint(source, target, _window(args))
    else:
        table = engine.hom_dim(source, target, _window(args))
    return {
        "source": source.text(),
        "target": target.text(),
        "table": table.to_json(),
        "refusals": engine.refusals,
    }


def cmd_serre(args: argparse.Namespace, settings: Settings) -> Report:
    support = _support(args, _datum(args))
    word = _word(args.word, args.weight, support)
    return {
        "word": word.text(),
        "class": serre_rewrite(word).to_json(),
        "verified": verify_serre(word, support),
    }


def cmd_nonzero(args: argparse.Namespace, settings: Settings) -> Report:
    support = _support(args, _datum(args))
    word = _word(args.word, args.weight, support)
    return {"word": word.text(), "nonzero": is_nonzero(word, support)}


def cmd_appendix(args: argparse.Namespace, settings: Settings) -> Report:
    support = _support(args, _datum(args))
    report = appendix_check(support, _engine(args, settings, support), args.lemma)
    return report.to_dict()


def cmd_support_grassmannian(args: argparse.Namespace, settings: Settings) -> Report:
    if not args.grassmannian:
        raise ParseError("support grassmannian требует --grassmannian m,n,N")
    support = _support(args, _datum(args))
    return {
        "support": support.to_dict(),
        "size": len(support),
        "middle": support.middle().to_json(),
        "base_tuple": list(support.base_tuple),
    }


def cmd_support_check(args: argparse.Namespace, settings: Settings) -> Report:
    support = _support(args, _datum(args))
    return check_conditions(support).to_dict()


def cmd_support_radical(args: argparse.Namespace, settings: Settings) -> Report:
    datum = _datum(args)
    return {"radical": [[str(x) for x in vector] for vector in datum.radical_basis()]}


def cmd_klr_normalize(args: argparse.Namespace, settings: Settings) -> Report:
    datum = _datum(args)
    element = parse_element(args.element, datum)
    rewriter = KlrRewriter(datum, args.budget or settings.rewrite.klr_step_budget)
    normal = rewriter.normalize(element)
    return {"input": str(element), "normal_form": normal.to_json(), "text": str(normal), "steps": rewriter.steps}


def cmd_klr_check(args: argparse.Namespace, settings: Settings) -> Report:
    datum = _datum(args)
    report = relation_check(
        datum,
        max_len=args.max_len,
        ambient=args.ambient,
        samples=args.samples,
        seed=args.seed,
        budget=args.budget or settings.rewrite.klr_step_budget,
        names=args.relation,
    )
    return report.to_dict()


def cmd_klr_dim(args: argparse.Namespace, settings: Settings) -> Report:
    datum = _datum(args)
    window = _window(args)
    if window is None:
        raise ParseError("klr dim требует --window lo,hi")
    try:
        labels = [int(x) for x in args.labels.split(",")]
    except ValueError:
        raise ParseError(f"--labels: ожидались целые через запятую, получено '{args.labels}'")
    counts = graded_dim_count(datum, labels, window)
    return {"labels": labels, "counts": [{"degree": d, "count": n} for d, n in sorted(counts.items())]}


def cmd_paths_middle(args: argparse.Namespace, settings: Settings) -> Report:
    support = _support(args, _datum(args))
    return {"middle": [w.to_json() for w in middle_weights(support)]}


def cmd_paths_canonical(args: argparse.Namespace, settings: Settings) -> Report:
    support = _support(args, _datum(args))
    start = _start(args, support)
    path = canonical_path(start, _weight(args.to, support), support)
    return {"from": start.to_json(), "to": path.endpoint().to_json(), "path": path.to_json(), "length": len(path)}


def cmd_paths_equiv(args: argparse.Namespace, settings: Settings) -> Report:
    support = _support(args, _datum(args))
    start = _start(args, support)
    p = SlideSeq(start, _steps(args.p))
    q = SlideSeq(start, _steps(args.q))
    result = slide_equivalent(p, q, support, args.budget or settings.search.budget, settings.search.slack)
    if isinstance(result, Undecided):
        return result.to_json()
    return {"undecided": False, "certificate": result.to_json()}


def cmd_paths_reduce(args: argparse.Namespace, settings: Settings) -> Report:
    if args.extra is None:
        if args.steps is None:
            raise ParseError("paths reduce требует --steps или --extra вместе с --to")
        cert = reduce_to_empty(SlideSeq(None, _steps(args.steps)))
        return {"certificate": cert.to_json()}

    if not args.to:
        raise ParseError("paths reduce --extra требует --to")
    support = _support(args, _datum(args))
    start = _start(args, support)
    canon = canonical_path(start, _weight(args.to, support), support)
    extra = _ints(args.extra, 2, "--extra")
    shorter, cert = reduce_appended(canon, extra, support, args.budget or settings.search.budget, settings.search.slack)
    return {
        "canonical": canon.to_json(),
        "extra": list(extra),
        "shorter": shorter.to_json(),
        "certificate": cert.to_json(),
    }


# --- парсер ---

def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cartan", metavar="FILE", help="JSON-файл данных Картана")
    common.add_argument("--graph", metavar="NAME", help="встроенный граф: A<n>, D4, triangle")
    source = common.add_mutually_exclusive_group()
    source.add_argument("--support", metavar="FILE", help="JSON-файл носителя")
    source.add_argument("--grassmannian", metavar="m,n,N", help="носитель Λ^N(C^m ⊗ C^n)")
    common.add_argument("--window", metavar="lo,hi", help="окно степеней (отрицательные: --window=-4,4)")
    common.add_argument("--budget", type=int, help="бюджет шагов или состояний поиска")
    common.add_argument("--pretty", action="store_true", help="JSON с отступами")
    return common


def _word_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--weight", metavar="[a1,...]", help="корневые координаты домена, если не заданы через @")


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(
        prog="python -m cli",
        description="Вычисления для минимальных категорных действий: Hom-размерности, R_Q, пути",
    )
    commands = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)

    for name, handler, help_text in (
        ("qint", cmd_qint, "квантовое целое [n]"),
        ("qfact", cmd_qfact, "квантовый факториал [n]!"),
    ):
        sub = commands.add_parser(name, parents=[common], help=help_text)
        sub.add_argument("n", type=int)
        sub.set_defaults(handler=handler)

    sub = commands.add_parser("qbinom", parents=[common], help="квантовый биномиальный коэффициент")
    sub.add_argument("n", type=int)
    sub.add_argument("k", type=int)
    sub.set_defaults(handler=cmd_qbinom)

    for name, handler, help_text in (
        ("decompose", cmd_decompose, "разложение слова в группе Гротендика"),
        ("serre", cmd_serre, "разложение Серра E_iE_jE_i"),
        ("nonzero", cmd_nonzero, "проверка W 1_λ != 0"),
    ):
        sub = commands.add_parser(name, parents=[common], help=help_text)
        sub.add_argument("--word", required=True, help="слово 'E1 F2 E1^2 @ [a1,...]'")
        _word_options(sub)
        sub.set_defaults(handler=handler)

    sub = commands.add_parser("homdim", parents=[common], help="таблица dim Hom(source, target<d>)")
    sub.add_argument("--source", required=True)
    sub.add_argument("--target", required=True)
    sub.add_argument("--adjoint", action="store_true", help="переносить буквы цели")
    _word_options(sub)
    sub.set_defaults(handler=cmd_homdim)

    sub = commands.add_parser("appendix", parents=[common], help="сверка движка с леммами об Hom")
    sub.add_argument("--lemma", action="append", choices=LEMMAS, help="ограничить набор лемм")
    sub.set_defaults(handler=cmd_appendix)

    support = commands.add_parser("support", help="носители").add_subparsers(dest="action", metavar="ACTION", required=True)
    for name, handler, help_text in (
        ("grassmannian", cmd_support_grassmannian, "построить носитель грассманиана"),
        ("check", cmd_support_check, "структурные условия носителя"),
        ("radical", cmd_support_radical, "ядро матрицы Картана"),
    ):
        support.add_parser(name, parents=[common], help=help_text).set_defaults(handler=handler)

    klr = commands.add_parser("klr", help="алгебра R_Q").add_subparsers(dest="action", metavar="ACTION", required=True)
    sub = klr.add_parser("normalize", parents=[common], help="нормальная форма элемента")
    sub.add_argument("--element", required=True, help="'e(0,1); t1 x2 + 3/2*e(0,1); x1 t1'")
    sub.set_defaults(handler=cmd_klr_normalize)
    sub = klr.add_parser("check", parents=[common], help="проверка определяющих соотношений")
    sub.add_argument("--max-len", type=int, default=3)
    sub.add_argument("--ambient", type=int, default=1)
    sub.add_argument("--samples", type=int, help="случайные контексты вместо полного перебора")
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--relation", action="append", help="ограничить набор соотношений")
    sub.set_defaults(handler=cmd_klr_check)
    sub = klr.add_parser("dim", parents=[common], help="число базисных слов по степеням")
    sub.add_argument("--labels", required=True, help="метки через запятую, например 0,1,0")
    sub.set_defaults(handler=cmd_klr_dim)

    paths = commands.add_parser("paths", help="пути по допустимым сдвигам").add_subparsers(dest="action", metavar="ACTION", required=True)
    sub = paths.add_parser("middle", parents=[common], help="все средние веса")
    sub.set_defaults(handler=cmd_paths_middle)
    sub = paths.add_parser("canonical", parents=[common], help="канонический путь")
    sub.add_argument("--from", dest="start", metavar="[a1,...]")
    sub.add_argument("--to", required=True, metavar="[a1,...]")
    sub.set_defaults(handler=cmd_paths_canonical)
    sub = paths.add_parser("equiv", parents=[common], help="сертификат эквивалентности путей")
    sub.add_argument("--from", dest="start", metavar="[a1,...]")
    sub.add_argument("--p", required=True, help="JSON [[знак, вершина], ...]")
    sub.add_argument("--q", required=True, help="JSON [[знак, вершина], ...]")
    sub.set_defaults(handler=cmd_paths_equiv)
    sub = paths.add_parser("reduce", parents=[common], help="сведение последовательности или укорочение пути")
    sub.add_argument("--steps", help="JSON замкнутой последовательности")
    sub.add_argument("--from", dest="start", metavar="[a1,...]")
    sub.add_argument("--to", metavar="[a1,...]")
    sub.add_argument("--extra", metavar="c,k", help="добавляемый шаг (отрицательный знак: --extra=-1,0)")
    sub.set_defaults(handler=cmd_paths_reduce)

    return parser


def _emit(report: Report, out: TextIO, pretty: bool) -> None:
    text = json.dumps(report, sort_keys=True, ensure_ascii=False, indent=2 if pretty else None)
    out.write(text + "\n")


def run(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None) -> int:
    """
    Выполняет одну подкоманду

    Args:
        argv: Аргументы без имени программы
        out: Поток для JSON-отчета (по умолчанию stdout)

    Returns:
        Код выхода 0, 1 или 2
    """
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    try:
        settings = get_settings()
    except ValueError as e:
        print(str(e), file=sys.stderr)
        return 2
    setup_logging(settings.logging)

    try:
        report = args.handler(args, settings)
    except AlgebraError as e:
        logger.warning(f"{e.code}: {e.message}")
        _emit(e.to_dict(), out, args.pretty)
        return e.exit_code
    except ValueError as e:
        logger.warning(f"Некорректный аргумент: {e}")
        _emit({"error": {"code": "invalid_argument", "message": str(e), "details": {}}}, out, args.pretty)
        return 2
    _emit(report, out, args.pretty)
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
