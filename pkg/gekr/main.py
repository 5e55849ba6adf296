import logging
import sys

from gekr.commands import build_parser
from gekr.config import settings
from gekr.exceptions import GekrError
from gekr.logging_config import configure_logging

logger = logging.getLogger(__name__)

EXIT_USAGE = 2


def main(argv: list[str] | None = None) -> int:
    """Код возврата: 0 успех, 1 свойство не выполнено или построение не удалось, 2 ошибка ввода."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    configure_logging("INFO" if args.verbose else (args.log_level or settings.log_level))
    logger.debug("command %s", args.command)

    try:
        return args.handler(args)
    except (GekrError, OSError) as exc:
        print(f"gekr {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
