"""Точные проверки малого размера: перебор вероятностей и максимальное семейство."""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

import numpy as np

from gekr.config import settings
from gekr.exceptions import DomainError, SearchOverflowError
from gekr.models import GEKR, ArrayMatrix, ExactProb
from gekr.models.array import Pattern
from gekr.services.verify_service import missing_matrix
from gekr.utils import colex_subsets

logger = logging.getLogger(__name__)

MAX_ENUMERATION_N = 8
MAX_CANDIDATES = 4096


def _covers(a: int, b: int, c: int, pattern: Pattern, full: int) -> bool:
    sides = [(~x & full, x) for x in (a, b, c)]
    return bool(sides[0][pattern[0]] & sides[1][pattern[1]] & sides[2][pattern[2]])


def enumerate_missing_prob(n: int, r: int, pattern: Pattern) -> ExactProb:
    """P(три независимые равномерные строки веса r не содержат столбца pattern).

    Первая строка фиксирована (симметрия относительно перестановки столбцов),
    перебираются все C(n, r)² упорядоченные пары второй и третьей строк.
    """
    if not 1 <= r <= n <= MAX_ENUMERATION_N:
        raise DomainError(f"enumeration needs 1 <= r <= n <= {MAX_ENUMERATION_N}, got n={n}, r={r}")
    pattern = tuple(int(b) for b in pattern)
    if len(pattern) != 3 or set(pattern) - {0, 1}:
        raise DomainError(f"not a binary triple: {pattern!r}")

    full = (1 << n) - 1
    rows = colex_subsets(n, r)
    first = rows[0]
    missing = sum(
        1
        for second in rows
        for third in rows
        if not _covers(first, second, third, pattern, full)
    )
    return Fraction(missing, len(rows) ** 2)


@dataclass
class FamilyResult:
    """Итог поиска. При exact=False лимит узлов исчерпан и size равен лучшему найденному."""

    n: int
    k: int
    size: int
    witness: list[int]
    exact: bool
    nodes: int

    def as_array(self) -> ArrayMatrix:
        bits = [[(mask >> j) & 1 for j in range(self.n)] for mask in self.witness]
        return ArrayMatrix.from_bits(np.array(bits, dtype=np.uint8).reshape(-1, self.n), self.n, self.k)

    def witness_sets(self) -> list[list[int]]:
        return [[j for j in range(self.n) if (mask >> j) & 1] for mask in self.witness]


class _NodeLimitReached(Exception):
    pass


@dataclass
class _Compatibility:
    """Для пары кандидатов (i, j): маска третьих l, с которыми тройка допустима.

    Если таблица помещается в лимит памяти, она строится целиком заранее,
    иначе пары считаются по требованию.
    """

    array: ArrayMatrix
    precompute: bool
    table: dict[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        self.everyone = np.arange(self.array.m)
        if self.precompute:
            for i in range(self.array.m):
                for j in range(i + 1, self.array.m):
                    self.table[(i, j)] = self._compute(i, j)

    def _compute(self, i: int, j: int) -> int:
        missing = missing_matrix(self.array, i, j, self.everyone, GEKR.ordered)
        ok = ~missing.any(axis=1)
        ok[[i, j]] = False
        return int.from_bytes(np.packbits(ok, bitorder="little").tobytes(), "little")

    def thirds(self, i: int, j: int) -> int:
        key = (i, j) if i < j else (j, i)
        if self.precompute:
            return self.table[key]
        return self._compute(*key)


class ExactService:
    def __init__(self, node_limit: int | None = None, pair_table_cap_mb: int | None = None):
        self.node_limit = node_limit or settings.node_limit
        self.pair_table_cap_mb = pair_table_cap_mb or settings.pair_table_cap_mb

    def max_family(self, n: int, k: int) -> FamilyResult:
        """Наибольшее семейство k-подмножеств [n] со свойством GEKR (ветви и границы).

        Кандидаты в колекс-порядке; граница: текущий размер плюс число
        оставшихся совместимых кандидатов.
        """
        if n < 1 or not 0 <= k <= n:
            raise DomainError(f"need 0 <= k <= n and n >= 1, got n={n}, k={k}")
        count = comb(n, k)
        if count > MAX_CANDIDATES:
            raise SearchOverflowError(f"C({n},{k}) = {count} exceeds {MAX_CANDIDATES} candidate subsets")

        masks = colex_subsets(n, k)
        bits = [[(mask >> j) & 1 for j in range(n)] for mask in masks]
        array = ArrayMatrix.from_bits(np.array(bits, dtype=np.uint8).reshape(-1, n), n, k)

        # таблица: C(N,2) масок по N бит
        table_bytes = comb(count, 2) * (count // 8 + 1)
        precompute = table_bytes <= self.pair_table_cap_mb * 2 ** 20
        compat = _Compatibility(array, precompute)
        logger.debug("max_family n=%d k=%d: %d candidates, pair table %s",
                     n, k, count, "precomputed" if precompute else "on demand")

        best: list[int] = list(range(min(2, count)))
        nodes = 0

        def expand(family: list[int], candidates: int) -> None:
            nonlocal best, nodes
            nodes += 1
            if nodes > self.node_limit:
                raise _NodeLimitReached
            if len(family) > len(best):
                best = list(family)
            while candidates:
                if len(family) + candidates.bit_count() <= len(best):
                    return
                low = candidates & -candidates
                c = low.bit_length() - 1
                candidates ^= low
                # кандидаты строго после c, совместимые со всеми парами (f, c)
                allowed = candidates
                if len(family) >= 1:
                    for f in family:
                        allowed &= compat.thirds(f, c)
                        if not allowed:
                            break
                expand(family + [c], allowed)

        exact = True
        try:
            expand([], (1 << count) - 1)
        except _NodeLimitReached:
            exact = False
            logger.info("max_family n=%d k=%d: node limit %d reached, best so far %d",
                        n, k, self.node_limit, len(best))

        return FamilyResult(
            n=n,
            k=k,
            size=len(best),
            witness=[masks[i] for i in best],
            exact=exact,
            nodes=nodes,
        )


def max_family(n: int, k: int, node_limit: int | None = None) -> FamilyResult:
    return ExactService(node_limit=node_limit).max_family(n, k)
