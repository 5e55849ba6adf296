import logging

import numpy as np
import pytest

from gekr.models import ArrayMatrix, parse_array


@pytest.fixture
def cli_log_handlers():
    # main() вешает обработчик на sys.stderr, подменённый capsys
    yield
    root = logging.getLogger()
    for handler in list(root.handlers):
        if getattr(handler, "_gekr", False):
            root.removeHandler(handler)


@pytest.fixture
def covered_array() -> ArrayMatrix:
    return parse_array("1110\n1101\n1011\n")


@pytest.fixture
def all_ones_array() -> ArrayMatrix:
    return parse_array("11111\n11111\n11111\n")


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240601)
