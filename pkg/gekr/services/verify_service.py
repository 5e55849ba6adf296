import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Sequence

import numpy as np

from gekr.config import settings
from gekr.exceptions import DomainError
from gekr.models import GEKR, ArrayMatrix, DeficiencyReport, PatternSet
from gekr.models.array import Pattern, Triple, valid_mask

logger = logging.getLogger(__name__)


def triple_coverage(
    row_a: np.ndarray,
    row_b: np.ndarray,
    row_c: np.ndarray,
    patterns: PatternSet = GEKR,
    *,
    n: int,
) -> frozenset[Pattern]:
    """Шаблоны, которые не встречаются ни в одном столбце тройки строк.

    n обязателен: хвост последнего слова за столбцом n не считается столбцом.

    Обход по словам; шаблон, найденный хотя бы раз, больше не проверяется,
    и обход прекращается, когда найдены все.
    """
    if not (len(row_a) == len(row_b) == len(row_c)):
        raise DomainError("rows of a triple must have equal length")
    words = len(row_a)
    mask = valid_mask(n)
    if len(mask) != words:
        raise DomainError(f"rows hold {words} words, n = {n} needs {len(mask)}")

    missing = set(patterns.members)
    for w in range(words):
        full = int(mask[w])
        a, b, c = int(row_a[w]), int(row_b[w]), int(row_c[w])
        columns = {0: (~a & full, ~b & full, ~c & full), 1: (a, b, c)}
        for pattern in list(missing):
            bits = columns[pattern[0]][0] & columns[pattern[1]][1] & columns[pattern[2]][2]
            if bits:
                missing.discard(pattern)
        if not missing:
            break
    return frozenset(missing)


def missing_matrix(
    array: ArrayMatrix,
    first: int | np.ndarray,
    second: int | np.ndarray,
    third: int | np.ndarray,
    patterns: Sequence[Pattern],
) -> np.ndarray:
    """Пропущенные шаблоны для пачки троек (индексы строк с бродкастингом).

    Возвращает bool-массив формы broadcast(first, second, third) + (len(patterns),).
    """
    operands = [(array.complement[index], array.words[index]) for index in (first, second, third)]
    shape = np.broadcast_shapes(*(np.shape(index) for index in (first, second, third)))
    missing = np.empty(shape + (len(patterns),), dtype=bool)
    for p, pattern in enumerate(patterns):
        hit = operands[0][pattern[0]] & operands[1][pattern[1]] & operands[2][pattern[2]]
        missing[..., p] = ~np.any(hit, axis=-1)
    return missing


class VerifyService:
    """Проверка свойства: каждая тройка строк i<j<l покрывает все шаблоны."""

    def __init__(self, patterns: PatternSet = GEKR, workers: int | None = None):
        self.patterns = patterns
        self.ordered = patterns.ordered
        self.workers = max(1, workers or settings.workers)

    def _scan_first_row(self, array: ArrayMatrix, i: int, stop_early: bool) -> tuple[list[Triple], list[frozenset], int]:
        """Все тройки с наименьшим индексом i, в лексикографическом порядке."""
        rest = array.m - i - 1
        if rest < 2:
            return [], [], 0
        # triu_indices идёт по строкам: пары (j, l) уже в лексикографическом порядке
        js, ls = np.triu_indices(rest, k=1)
        js += i + 1
        ls += i + 1
        missing = missing_matrix(array, i, js, ls, self.ordered)
        deficient = np.flatnonzero(missing.any(axis=1))
        checked = len(js)
        if stop_early and len(deficient):
            deficient = deficient[:1]
            checked = int(deficient[0]) + 1
        triples = [(i, int(js[d]), int(ls[d])) for d in deficient]
        missing_sets = [self._pattern_set(missing[d]) for d in deficient]
        return triples, missing_sets, checked

    def _pattern_set(self, flags: np.ndarray) -> frozenset[Pattern]:
        return frozenset(p for p, flag in zip(self.ordered, flags) if flag)

    def find_deficient(self, array: ArrayMatrix, stop_early: bool = False) -> DeficiencyReport:
        m = array.m
        if m < 3:
            return DeficiencyReport([], [], 0)

        if stop_early:
            checked = 0
            for i in range(m - 2):
                triples, missing_sets, count = self._scan_first_row(array, i, True)
                checked += count
                if triples:
                    return DeficiencyReport(triples, missing_sets, checked)
            return DeficiencyReport([], [], checked)

        first_rows = range(m - 2)
        if self.workers > 1:
            # numpy отпускает GIL на побитовых операциях; слияние идёт по возрастанию i
            with ThreadPoolExecutor(max_workers=self.workers) as pool:
                parts = list(pool.map(lambda i: self._scan_first_row(array, i, False), first_rows))
        else:
            parts = [self._scan_first_row(array, i, False) for i in first_rows]

        report = DeficiencyReport([], [], 0)
        for triples, missing_sets, count in parts:
            report.deficient_triples.extend(triples)
            report.missing_patterns.extend(missing_sets)
            report.total_checked += count
        logger.debug("checked %d triples, %d deficient", report.total_checked, report.deficient_count)
        return report

    def is_valid(self, array: ArrayMatrix) -> bool:
        return self.find_deficient(array, stop_early=True).ok

    def deficient_with_rows(self, array: ArrayMatrix, rows: Sequence[int]) -> set[Triple]:
        """Дефицитные тройки, содержащие хотя бы одну из данных строк."""
        m = array.m
        found: set[Triple] = set()
        everyone = np.arange(m)
        for x in sorted(set(rows)):
            for y in range(m):
                if y == x:
                    continue
                thirds = everyone[(everyone > y) & (everyone != x)]
                if not len(thirds):
                    continue
                for z in thirds[self._deficient_mask(array, x, y, thirds)]:
                    found.add(tuple(sorted((x, y, int(z)))))
        return found

    def _deficient_mask(self, array: ArrayMatrix, x: int, y: int, thirds: np.ndarray) -> np.ndarray:
        # порядок строк в тройке важен для несимметричных наборов шаблонов
        a = np.minimum(np.minimum(x, y), thirds)
        c = np.maximum(np.maximum(x, y), thirds)
        b = x + y + thirds - a - c
        return missing_matrix(array, a, b, c, self.ordered).any(axis=1)

    def fits(self, array: ArrayMatrix, candidate: np.ndarray) -> bool:
        """Можно ли дописать строку последней, не создав дефицитной тройки."""
        m = array.m
        if m < 2:
            return True
        ys, zs = np.triu_indices(m, k=1)
        extra = (~candidate & valid_mask(array.n), candidate)
        sides = (array.complement, array.words)
        for pattern in self.ordered:
            hit = sides[pattern[0]][ys] & sides[pattern[1]][zs] & extra[pattern[2]]
            if not np.all(np.any(hit, axis=-1)):
                return False
        return True


def find_deficient(
    array: ArrayMatrix,
    patterns: PatternSet = GEKR,
    stop_early: bool = False,
    workers: int | None = None,
) -> DeficiencyReport:
    return VerifyService(patterns, workers).find_deficient(array, stop_early)


def is_gekr(array: ArrayMatrix) -> bool:
    """Истина, если ни одна тройка строк не дефицитна для набора GEKR."""
    return VerifyService(GEKR, workers=1).is_valid(array)
