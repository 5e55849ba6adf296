import argparse

from gekr.commands import bound, compare, construct, figure, maxfamily, optimize, table, verify

COMMANDS = (bound, table, compare, optimize, figure, verify, construct, maxfamily)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gekr",
        description="Оценки и построения массивов, тройки строк которых покрывают 011, 101, 110 и 111.",
    )
    parser.add_argument(
        "--log-level", type=str.upper, choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        help="по умолчанию из GEKR_LOG_LEVEL",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="то же, что --log-level INFO")
    subparsers = parser.add_subparsers(dest="command", required=True)

    for command in COMMANDS:
        command.register(subparsers)
    return parser
