"""Таблицы числа строк m по сетке (α, n) и опубликованные эталонные значения."""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from gekr.exceptions import DomainError
from gekr.models import BoundModel, LogMagnitude, NuMode
from gekr.services import bound_service as bounds
from gekr.utils import format_alpha, parse_alpha

logger = logging.getLogger(__name__)

TABLE_NS = (10_000, 100_000, 300_000, 1_000_000)

# Эталон: независимая модель, m = ζ(n)
PUBLISHED_INDEPENDENT = {
    "0.1669": ("6.51e9", "7.66e100", "1.83e303", "3.88e1011"),
    "0.2": ("1.37e17", "1.29e174", "8.79e522", "7.22e1743"),
    "1/3": ("4.34e81", "1.64e819", "1.81e2458", "8.00e8194"),
    "0.5": ("2.26e289", "9.80e2898", "1.53e8698", "2.33e28995"),
    "2/3": ("4.32e347", "1.79e3481", "7.00e10444", "2.63e34817"),
    "0.7395": ("1.50e333", "4.61e3336", "1.20e10011", "3.37e33371"),
    "0.8": ("7.47e296", "4.28e2973", "9.63e8921", "1.64e29741"),
}

# Эталон: фиксированный вес, асимптотика при K = 1
PUBLISHED_FIXED = {
    "0.1685": ("6.50e9", "7.61e106", "1.06e323", "6.52e1079"),
    "0.2": ("2.32e17", "2.57e182", "4.08e549", "1.26e1835"),
    "1/3": ("9.50e92", "3.39e938", "9.36e2817", "1.99e9396"),
    "0.5": ("9.00e396", "1.97e3978", "1.84e11937", "8.82e39793"),
    "2/3": ("4.50e530", "1.93e5315", "1.73e15948", "7.27e53163"),
    "0.7395": ("3.28e548", "8.27e5493", "1.35e16484", "1.46e54950"),
    "0.8": ("1.74e533", "1.48e5341", "7.86e16025", "5.19e53422"),
}


def _index(table: dict[str, tuple[str, ...]]) -> dict[tuple[Fraction, int], LogMagnitude]:
    return {
        (parse_alpha(label), n): LogMagnitude.parse(text)
        for label, row in table.items()
        for n, text in zip(TABLE_NS, row)
    }


_PUBLISHED = {
    BoundModel.INDEPENDENT: _index(PUBLISHED_INDEPENDENT),
    BoundModel.FIXED_ASYMPTOTIC: _index(PUBLISHED_FIXED),
    BoundModel.FIXED_EXACT: _index(PUBLISHED_FIXED),
}


def default_alphas(model: BoundModel) -> list[Fraction]:
    table = PUBLISHED_INDEPENDENT if model is BoundModel.INDEPENDENT else PUBLISHED_FIXED
    return [parse_alpha(label) for label in table]


def tolerance(model: BoundModel, log10_value: float) -> float:
    """Допуск на |Δ log10 m|; для фиксированного веса шире из-за отброшенного (1 + o(1))."""
    if model is BoundModel.INDEPENDENT:
        return max(0.02, 0.001 * abs(log10_value))
    return max(0.1, 0.005 * abs(log10_value))


def evaluate(model: BoundModel, alpha: Fraction, n: int) -> LogMagnitude:
    if model is BoundModel.INDEPENDENT:
        return bounds.zeta(alpha, n)
    if model is BoundModel.FIXED_ASYMPTOTIC:
        return bounds.nu(alpha, n, NuMode.ASYMPTOTIC)
    return bounds.nu(alpha, n, NuMode.EXACT_SUM)


def nearest_weight(alpha: Fraction | float, n: int) -> Fraction:
    """Ближайшая к α доля r/n с целым весом r в [1, n]."""
    weight = min(n, max(1, round(Fraction(alpha) * n)))
    return Fraction(weight, n)


@dataclass(frozen=True)
class TableRow:
    alpha: Fraction
    n: int
    value: LogMagnitude
    published: LogMagnitude | None = None

    @property
    def label(self) -> str:
        return format_alpha(self.alpha)

    @property
    def delta_log10(self) -> float | None:
        if self.published is None or self.value.is_zero or self.published.is_zero:
            return None
        return self.value.log10 - self.published.log10


class TableService:
    def __init__(self, model: BoundModel):
        self.model = model

    def published(self, alpha: Fraction, n: int) -> LogMagnitude | None:
        return _PUBLISHED[self.model].get((Fraction(alpha), n))

    def rows(self, alphas: Iterable[Fraction] | None = None, ns: Iterable[int] | None = None) -> list[TableRow]:
        alphas = list(alphas) if alphas is not None else default_alphas(self.model)
        ns = list(ns) if ns is not None else list(TABLE_NS)
        if not alphas:
            raise DomainError("alpha list is empty")
        if not ns:
            raise DomainError("n list is empty")

        rows = []
        for alpha in alphas:
            for n in ns:
                value = evaluate(self.model, self._grid_alpha(alpha, n), n)
                rows.append(TableRow(alpha, n, value, self.published(alpha, n)))
        logger.debug("%s table: %d entries", self.model.value, len(rows))
        return rows

    def _grid_alpha(self, alpha: Fraction, n: int) -> Fraction:
        # точная сумма требует целого αn; точки сетки вроде 1/3 округляются
        if self.model is not BoundModel.FIXED_EXACT:
            return alpha
        rounded = nearest_weight(alpha, n)
        if rounded != alpha:
            logger.debug("alpha %s at n=%d rounded to weight %d", format_alpha(alpha), n, int(rounded * n))
        return rounded

    def within_tolerance(self, row: TableRow) -> bool | None:
        """None, если для этой точки нет опубликованного значения."""
        delta = row.delta_log10
        if delta is None:
            return None
        return abs(delta) <= tolerance(self.model, row.published.log10)
