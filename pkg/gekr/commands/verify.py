import argparse
import sys
from pathlib import Path

from gekr.models import PatternSet, parse_array
from gekr.services.verify_service import VerifyService


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("verify", help="проверить, что каждая тройка строк покрывает шаблоны")
    parser.add_argument("path", help='текстовый файл массива или "-" для стандартного ввода')
    parser.add_argument("--patterns", default="gekr", help='"gekr", "all" или список вида "011,101,110,111"')
    parser.add_argument("--list-deficient", action="store_true", help="вывести все дефицитные тройки")
    parser.add_argument("--workers", type=int, help="число потоков проверки")
    parser.set_defaults(handler=run)


def _patterns_text(patterns) -> str:
    return ",".join("".join(str(b) for b in p) for p in sorted(patterns))


def run(args: argparse.Namespace) -> int:
    text = sys.stdin.read() if args.path == "-" else Path(args.path).read_bytes()
    array = parse_array(text)
    patterns = PatternSet.parse(args.patterns)
    report = VerifyService(patterns, workers=args.workers).find_deficient(array)

    m, n = array.shape
    if report.ok:
        print(f"OK {m}x{n}: {report.total_checked} triples checked, none deficient")
        return 0

    print(f"FAIL {m}x{n}: {report.deficient_count} of {report.total_checked} triples deficient")
    if args.list_deficient:
        for triple, missing in zip(report.deficient_triples, report.missing_patterns):
            print(f"{triple[0]} {triple[1]} {triple[2]} missing {_patterns_text(missing)}")
    else:
        triple, missing = report.deficient_triples[0], report.missing_patterns[0]
        print(f"first: {triple[0]} {triple[1]} {triple[2]} missing {_patterns_text(missing)}")
    return 1
