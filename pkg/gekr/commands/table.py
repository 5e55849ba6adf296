import argparse
import csv
import sys

from gekr.models import BoundModel
from gekr.models.reports import LOG10_DECIMALS
from gekr.services.table_service import TableService
from gekr.utils import parse_alpha, parse_count, split_list

HEADER = ["alpha", "n", "log10_m", "rendered"]
CHECK_HEADER = ["published", "delta_log10", "within_tolerance"]


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("table", help="CSV оценок по сетке (alpha, n)")
    parser.add_argument("--model", choices=[m.value for m in BoundModel], default=BoundModel.INDEPENDENT.value)
    parser.add_argument("--alphas", help="значения alpha через запятую; по умолчанию опубликованная сетка (для fixed-exact alpha*n округляется)")
    parser.add_argument("--ns", help="значения n через запятую; по умолчанию 10000,100000,300000,1000000")
    parser.add_argument("--check", action="store_true", help="сверить с опубликованными значениями")
    parser.set_defaults(handler=run)


def _log10_cell(value) -> str:
    return "" if value.is_zero else f"{value.log10:.{LOG10_DECIMALS}f}"


def run(args: argparse.Namespace) -> int:
    service = TableService(BoundModel(args.model))
    alphas = [parse_alpha(a) for a in split_list(args.alphas)] if args.alphas is not None else None
    ns = [parse_count(n) for n in split_list(args.ns)] if args.ns is not None else None
    rows = service.rows(alphas, ns)

    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(HEADER + CHECK_HEADER if args.check else HEADER)
    failed = 0
    for row in rows:
        cells = [row.label, row.n, _log10_cell(row.value), row.value.render()]
        if args.check:
            ok = service.within_tolerance(row)
            if ok is False:
                failed += 1
            delta = row.delta_log10
            cells += [
                row.published.render() if row.published is not None else "",
                "" if delta is None else f"{delta:.{LOG10_DECIMALS}f}",
                "" if ok is None else str(ok).lower(),
            ]
        writer.writerow(cells)

    if failed:
        print(f"{failed} of {len(rows)} entries outside the tolerance", file=sys.stderr)
        return 1
    return 0
