import logging
import math

import numpy as np
import pytest

from gekr.exceptions import DomainError
from gekr.models import ConstructionConfig, ModelParams, NuMode, Strategy
from gekr.services import bound_service as bounds
from gekr.services.construct_service import (
    ConstructService,
    greedy_extend,
    moser_tardos,
    row_rng,
    sample_row,
    sample_rows,
)
from gekr.services.verify_service import find_deficient, is_gekr


def _lll_rows(n: int, k: int) -> int:
    return bounds.nu(ModelParams.fixed(n, k).alpha, n, NuMode.EXACT_SUM).floor()


class TestSampling:
    def test_fixed_weight_rows(self):
        array = sample_rows(ModelParams.fixed(37, 11), 40, seed=123)
        assert array.shape == (40, 37)
        assert set(array.weights()) == {11}
        assert array.declared_weight == 11

    def test_independent_alpha_one(self):
        array = sample_rows(ModelParams.independent(9, 1), 5, seed=0)
        assert array.bits().all()

    def test_reproducible(self):
        params = ModelParams.fixed(70, 30)
        assert sample_rows(params, 8, seed=99) == sample_rows(params, 8, seed=99)
        assert sample_rows(params, 8, seed=99) != sample_rows(params, 8, seed=100)

    def test_streams_depend_on_row_and_generation(self):
        params = ModelParams.fixed(64, 32)
        first = sample_row(params, row_rng(5, 0, 0))
        assert np.array_equal(first, sample_row(params, row_rng(5, 0, 0)))
        assert not np.array_equal(first, sample_row(params, row_rng(5, 0, 1)))
        assert not np.array_equal(first, sample_row(params, row_rng(5, 1, 0)))

    def test_mean_overlap_is_hypergeometric(self):
        n, r, m = 20, 10, 10_000
        bits = sample_rows(ModelParams.fixed(n, r), m, seed=7).bits().astype(np.int64)
        # непересекающиеся пары строк независимы
        overlaps = (bits[0::2] * bits[1::2]).sum(axis=1)
        variance = r * (r / n) * ((n - r) / n) * ((n - r) / (n - 1))
        standard_error = math.sqrt(variance / len(overlaps))
        assert abs(overlaps.mean() - r * r / n) <= 3 * standard_error

    def test_independent_density(self):
        bits = sample_rows(ModelParams.independent(50, 0.3), 400, seed=8).bits()
        assert bits.mean() == pytest.approx(0.3, abs=0.02)

    def test_negative_row_count(self):
        with pytest.raises(DomainError):
            sample_rows(ModelParams.fixed(5, 2), -1, seed=0)


class TestMoserTardos:
    def test_two_rows_need_no_resampling(self):
        result = moser_tardos(ConstructionConfig(ModelParams.fixed(10, 5), m=2, seed=1))
        assert result.success and result.resamples == 0

    def test_lll_size_succeeds(self):
        m = _lll_rows(20, 14)
        assert m == 3
        result = moser_tardos(ConstructionConfig(ModelParams.fixed(20, 14), m=m, seed=42))
        assert result.success
        assert result.array.shape == (m, 20)
        assert find_deficient(result.array).ok

    def test_impossible_instance_fails(self):
        result = moser_tardos(ConstructionConfig(ModelParams.fixed(6, 6), m=3, seed=0, max_resamples=50))
        assert not result.success
        assert result.array is None
        assert result.resamples == 50

    def test_deterministic(self):
        config = ConstructionConfig(ModelParams.fixed(16, 10), m=8, seed=17, max_resamples=100_000)
        first, second = moser_tardos(config), moser_tardos(config)
        assert first.resamples == second.resamples
        assert first.array == second.array

    def test_weights_preserved(self):
        result = moser_tardos(ConstructionConfig(ModelParams.fixed(16, 10), m=8, seed=3, max_resamples=100_000))
        assert result.success
        assert set(result.array.weights()) == {10}

    def test_progress_is_logged(self, caplog):
        service = ConstructService(progress_interval=1)
        config = ConstructionConfig(ModelParams.fixed(6, 6), m=3, seed=0, max_resamples=3)
        with caplog.at_level(logging.INFO, logger="gekr.services.construct_service"):
            service.moser_tardos(config)
        assert any("resamples" in record.getMessage() for record in caplog.records)

    @pytest.mark.slow
    @pytest.mark.parametrize("n, k", [(20, 14), (30, 20)])
    def test_lll_sizes_across_seeds(self, n, k):
        m = _lll_rows(n, k)
        successes = 0
        for seed in range(10):
            result = moser_tardos(ConstructionConfig(ModelParams.fixed(n, k), m=m, seed=seed))
            if result.success:
                assert is_gekr(result.array)
                assert find_deficient(result.array).ok
                successes += 1
        assert successes >= 9


class TestRejectionAndBuild:
    def test_rejection_finds_small_array(self):
        config = ConstructionConfig(ModelParams.fixed(20, 14), m=3, seed=5, max_resamples=10_000,
                                    strategy=Strategy.REJECTION)
        result = ConstructService().build(config)
        assert result.success and result.strategy is Strategy.REJECTION
        assert is_gekr(result.array)

    def test_rejection_gives_up(self):
        config = ConstructionConfig(ModelParams.fixed(6, 6), m=3, seed=0, max_resamples=5,
                                    strategy=Strategy.REJECTION)
        result = ConstructService().build(config)
        assert not result.success and result.resamples == 5

    def test_build_dispatches_greedy(self):
        config = ConstructionConfig(ModelParams.fixed(12, 8), m=4, seed=2, max_resamples=500,
                                    strategy=Strategy.GREEDY)
        result = ConstructService().build(config)
        assert result.strategy is Strategy.GREEDY
        assert result.array.m <= 4
        assert is_gekr(result.array)


class TestGreedy:
    def test_output_has_the_property(self):
        array = greedy_extend(ModelParams.fixed(12, 7), seed=1, attempts_per_row=300)
        assert array.m >= 2
        assert is_gekr(array)
        assert set(array.weights()) == {7}

    def test_beats_the_local_lemma(self):
        params = ModelParams.fixed(15, 10)
        array = greedy_extend(params, seed=3, attempts_per_row=10_000)
        assert is_gekr(array)
        assert array.m >= _lll_rows(15, 10)

    def test_needs_fixed_weight(self):
        with pytest.raises(DomainError):
            greedy_extend(ModelParams.independent(10, 0.5), seed=0, attempts_per_row=10)

    def test_row_cap(self):
        array = ConstructService().greedy_extend(ModelParams.fixed(20, 12), seed=4, attempts_per_row=1000, max_rows=3)
        assert array.m == 3
