import argparse
import csv
import sys

from gekr.services.optimize_service import figure_data


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("figure", help="CSV с данными для графиков 1–4")
    parser.add_argument("figure", type=int, choices=[1, 2, 3, 4])
    parser.add_argument("--step", type=float, default=0.01, help="шаг сетки по alpha")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    table = figure_data(args.figure, args.step)
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(table.columns)
    for row in table.rows:
        writer.writerow("" if value is None else f"{value:.10g}" for value in row)
    return 0
