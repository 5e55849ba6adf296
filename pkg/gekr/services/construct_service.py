"""Конструктивная сторона локальной леммы.

Генератор: PCG64 из numpy. Строка i в поколении g (сколько раз её
перевыбирали) берёт поток SeedSequence(seed, spawn_key=(i, g)), поэтому
результат не зависит ни от платформы, ни от порядка перевыборов других строк.
"""
import logging
from dataclasses import dataclass

import numpy as np
from tqdm import tqdm

from gekr.config import settings
from gekr.exceptions import DomainError
from gekr.models import ArrayMatrix, ConstructionConfig, ModelParams, Strategy
from gekr.models.array import pack_bits, word_count
from gekr.services.verify_service import VerifyService

logger = logging.getLogger(__name__)


def row_rng(seed: int, row: int, generation: int = 0) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(row, generation))))


def sample_row(params: ModelParams, rng: np.random.Generator) -> np.ndarray:
    """Одна строка, упакованная в слова.

    Фиксированный вес: частичная перетасовка Фишера–Йетса первых r позиций.
    """
    n = params.n
    bits = np.zeros(n, dtype=np.uint8)
    if params.is_fixed_weight:
        r = params.r
        columns = np.arange(n)
        for i in range(r):
            j = int(rng.integers(i, n))
            columns[i], columns[j] = columns[j], columns[i]
        bits[columns[:r]] = 1
    else:
        bits[rng.random(n) < float(params.alpha)] = 1
    return pack_bits(bits[None, :], n)[0]


def sample_rows(params: ModelParams, m: int, seed: int) -> ArrayMatrix:
    if m < 0:
        raise DomainError(f"row count must be non-negative, got {m}")
    words = np.zeros((m, word_count(params.n)), dtype=np.uint64)
    for i in range(m):
        words[i] = sample_row(params, row_rng(seed, i))
    return _as_array(params, words)


def _as_array(params: ModelParams, words: np.ndarray) -> ArrayMatrix:
    weight = params.r if params.is_fixed_weight else None
    return ArrayMatrix(n=params.n, words=words, declared_weight=weight)


@dataclass
class ConstructionResult:
    """array is None означает неудачу; resamples считает сделанные перевыборы."""

    array: ArrayMatrix | None
    resamples: int
    strategy: Strategy

    @property
    def success(self) -> bool:
        return self.array is not None


class ConstructService:
    def __init__(self, verifier: VerifyService | None = None, progress_interval: int | None = None):
        self.verifier = verifier or VerifyService()
        self.progress_interval = progress_interval or settings.progress_interval

    def build(self, config: ConstructionConfig) -> ConstructionResult:
        if config.strategy is Strategy.MOSER_TARDOS:
            return self.moser_tardos(config)
        if config.strategy is Strategy.REJECTION:
            return self.rejection_sample(config)
        array = self.greedy_extend(
            config.params, config.seed, attempts_per_row=config.max_resamples, max_rows=config.m or None
        )
        return ConstructionResult(array=array, resamples=0, strategy=Strategy.GREEDY)

    def moser_tardos(self, config: ConstructionConfig) -> ConstructionResult:
        """Перевыбор трёх строк лексикографически первой дефицитной тройки."""
        params, m = config.params, config.m
        words = sample_rows(params, m, config.seed).words.copy()
        generations = [0] * m

        array = _as_array(params, words.copy())
        bad = set(self.verifier.find_deficient(array).deficient_triples)
        resamples = 0

        while bad:
            if resamples >= config.max_resamples:
                logger.info("moser-tardos gave up after %d resamples, %d deficient triples left",
                            resamples, len(bad))
                return ConstructionResult(array=None, resamples=resamples, strategy=Strategy.MOSER_TARDOS)

            triple = min(bad)
            for row in triple:
                generations[row] += 1
                words[row] = sample_row(params, row_rng(config.seed, row, generations[row]))
            resamples += 1
            if resamples % self.progress_interval == 0:
                logger.info("moser-tardos: %d resamples, %d deficient triples", resamples, len(bad))

            array = _as_array(params, words.copy())
            bad = {t for t in bad if not set(t) & set(triple)}
            bad |= self.verifier.deficient_with_rows(array, triple)

        logger.info("moser-tardos succeeded with m=%d after %d resamples", m, resamples)
        return ConstructionResult(array=array, resamples=resamples, strategy=Strategy.MOSER_TARDOS)

    def rejection_sample(self, config: ConstructionConfig) -> ConstructionResult:
        """Весь массив заново, пока не выполнится свойство; попытка t берёт поколение t."""
        params, m = config.params, config.m
        for attempt in range(config.max_resamples):
            words = np.zeros((m, word_count(params.n)), dtype=np.uint64)
            for i in range(m):
                words[i] = sample_row(params, row_rng(config.seed, i, attempt))
            array = _as_array(params, words)
            if self.verifier.is_valid(array):
                return ConstructionResult(array=array, resamples=attempt, strategy=Strategy.REJECTION)
        return ConstructionResult(array=None, resamples=config.max_resamples, strategy=Strategy.REJECTION)

    def greedy_extend(
        self,
        params: ModelParams,
        seed: int,
        attempts_per_row: int,
        max_rows: int | None = None,
        show_progress: bool | None = None,
    ) -> ArrayMatrix:
        """Жадно дописывает строки; стоп после attempts_per_row отказов подряд.

        Кандидат номер t берётся из потока (строка-кандидат t, поколение 0).
        """
        if not params.is_fixed_weight:
            raise DomainError("greedy extension works with fixed-weight rows")
        if attempts_per_row < 1:
            raise DomainError("attempts_per_row must be at least 1")

        show = settings.show_progress if show_progress is None else show_progress
        array = _as_array(params, np.zeros((0, word_count(params.n)), dtype=np.uint64))
        draws = 0
        failures = 0
        with tqdm(desc="greedy rows", unit=" rows", disable=not show) as pbar:
            while failures < attempts_per_row and (max_rows is None or array.m < max_rows):
                candidate = sample_row(params, row_rng(seed, draws))
                draws += 1
                if self.verifier.fits(array, candidate):
                    array = _as_array(params, np.vstack([array.words, candidate[None, :]]))
                    failures = 0
                    pbar.update(1)
                else:
                    failures += 1
        logger.info("greedy stopped at m=%d after %d draws", array.m, draws)
        return array


def moser_tardos(config: ConstructionConfig) -> ConstructionResult:
    return ConstructService().moser_tardos(config)


def greedy_extend(params: ModelParams, seed: int, attempts_per_row: int) -> ArrayMatrix:
    return ConstructService().greedy_extend(params, seed, attempts_per_row)
