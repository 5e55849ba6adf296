from fractions import Fraction

import pytest

from gekr.exceptions import DomainError
from gekr.models import BoundModel, LogMagnitude, NuMode
from gekr.services import bound_service as bounds
from gekr.services.table_service import (
    TABLE_NS,
    TableRow,
    TableService,
    default_alphas,
    nearest_weight,
    tolerance,
)


@pytest.mark.parametrize("model", [BoundModel.INDEPENDENT, BoundModel.FIXED_ASYMPTOTIC])
def test_published_grid_reproduced(model):
    service = TableService(model)
    rows = service.rows()
    assert len(rows) == 28
    misses = [(row.label, row.n, row.delta_log10) for row in rows if not service.within_tolerance(row)]
    assert misses == []


def test_known_entries():
    service = TableService(BoundModel.INDEPENDENT)
    [row] = service.rows([Fraction(1, 2)], [10_000])
    assert row.value.render() == "2.26e289"
    assert row.published.render() == "2.26e289"
    assert row.label == "0.5"

    [row] = TableService(BoundModel.FIXED_ASYMPTOTIC).rows([Fraction(1, 2)], [10_000])
    assert row.value.log10 == pytest.approx(396.954, abs=0.01)


def test_rows_follow_alpha_then_n():
    rows = TableService(BoundModel.INDEPENDENT).rows([Fraction(1, 5), Fraction(4, 5)], [10_000, 100_000])
    assert [(row.alpha, row.n) for row in rows] == [
        (Fraction(1, 5), 10_000), (Fraction(1, 5), 100_000),
        (Fraction(4, 5), 10_000), (Fraction(4, 5), 100_000),
    ]


def test_default_grid():
    assert TABLE_NS == (10_000, 100_000, 300_000, 1_000_000)
    assert Fraction(2, 3) in default_alphas(BoundModel.INDEPENDENT)
    assert Fraction(1685, 10_000) in default_alphas(BoundModel.FIXED_EXACT)
    assert Fraction(1669, 10_000) not in default_alphas(BoundModel.FIXED_ASYMPTOTIC)


def test_off_grid_point_has_no_reference():
    service = TableService(BoundModel.INDEPENDENT)
    [row] = service.rows([Fraction(3, 10)], [10_000])
    assert row.published is None
    assert row.delta_log10 is None
    assert service.within_tolerance(row) is None


def test_fixed_exact_near_asymptotic_at_moderate_n():
    exact = TableService(BoundModel.FIXED_EXACT).rows([Fraction(1, 2)], [2_000])[0].value
    asymptotic = TableService(BoundModel.FIXED_ASYMPTOTIC).rows([Fraction(1, 2)], [2_000])[0].value
    # асимптотика отбрасывает лишь полиномиальные множители
    assert exact.log10 == pytest.approx(asymptotic.log10, rel=0.05)


def test_tolerance_widens_with_magnitude():
    assert tolerance(BoundModel.INDEPENDENT, 10.0) == 0.02
    assert tolerance(BoundModel.INDEPENDENT, 30_000.0) == pytest.approx(30.0)
    assert tolerance(BoundModel.FIXED_ASYMPTOTIC, 10.0) == 0.1
    assert tolerance(BoundModel.FIXED_EXACT, 50_000.0) == pytest.approx(250.0)


def test_zero_values_have_no_delta():
    row = TableRow(Fraction(1, 2), 10, LogMagnitude.zero(), LogMagnitude.parse("1.00e3"))
    assert row.delta_log10 is None


@pytest.mark.parametrize("alphas, ns", [([], None), (None, [])])
def test_empty_lists_rejected(alphas, ns):
    with pytest.raises(DomainError):
        TableService(BoundModel.INDEPENDENT).rows(alphas, ns)


def test_fixed_exact_rounds_grid_weights():
    [row] = TableService(BoundModel.FIXED_EXACT).rows([Fraction(2, 3)], [10_000])
    assert row.alpha == Fraction(2, 3)
    assert row.label == "2/3"
    assert row.value == bounds.nu(Fraction(6667, 10_000), 10_000, NuMode.EXACT_SUM)
    assert row.published is not None


def test_nearest_weight():
    assert nearest_weight(Fraction(1, 3), 10_000) == Fraction(3333, 10_000)
    assert nearest_weight(Fraction(7, 10), 20) == Fraction(14, 20)
    assert nearest_weight(0.0001, 100) == Fraction(1, 100)
