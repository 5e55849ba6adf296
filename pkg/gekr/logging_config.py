import logging
import sys

FORMAT = "%(levelname)-5.5s [%(name)s] %(message)s"


def configure_logging(level: str | int = "WARNING") -> None:
    """Один обработчик на stderr, формат как у консольного логгера миграций."""
    root = logging.getLogger()
    for handler in list(root.handlers):
        if getattr(handler, "_gekr", False):
            root.removeHandler(handler)

    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(FORMAT, datefmt="%H:%M:%S"))
    handler._gekr = True
    root.addHandler(handler)

    if isinstance(level, str):
        level = level.upper()
    root.setLevel(level)
