import math

import pytest

from gekr.exceptions import DomainError
from gekr.services import bound_service as bounds
from gekr.services.optimize_service import (
    argmin_independent,
    argmin_mu,
    figure_data,
    golden_section,
    grid_then_golden,
)


def test_golden_section_on_parabola():
    x, y = golden_section(lambda t: (t - 0.3) ** 2, 0.0, 1.0, tol=1e-8)
    assert x == pytest.approx(0.3, abs=1e-7)
    assert y == pytest.approx(0.0, abs=1e-12)


def test_grid_guards_against_second_minimum():
    # глобальный минимум у 0.8, локальный у 0.2
    def f(t):
        return min((t - 0.2) ** 2 + 0.05, (t - 0.8) ** 2)

    x, _ = grid_then_golden(f, 0.0, 1.0, 0.01, tol=1e-8)
    assert x == pytest.approx(0.8, abs=1e-6)


@pytest.mark.parametrize("n", [100, 10_000])
def test_independent_minimum_at_two_thirds(n):
    alpha_star, p_star = argmin_independent(n)
    assert abs(alpha_star - 2 / 3) <= 1e-3
    assert p_star <= bounds.p_independent(0.5, n)


def test_independent_minimum_gives_closed_form_zeta():
    alpha_star, _ = argmin_independent(10_000)
    assert bounds.zeta(alpha_star, 10_000).log10 == pytest.approx(347.635, abs=2e-3)


def test_independent_minimum_small_n():
    alpha_star, p_star = argmin_independent(1)
    assert 0 < alpha_star < 1
    assert float(p_star) <= 4.0


def test_independent_rejects_bad_n():
    with pytest.raises(DomainError):
        argmin_independent(0)


@pytest.mark.slow
def test_mu_minimum():
    alpha_star, mu_star = argmin_mu()
    assert 0.7385 <= alpha_star <= 0.7405
    assert mu_star < bounds.mu(2 / 3)
    assert mu_star < bounds.mu(0.8)
    assert bounds.theta(0.7395) == pytest.approx(0.7766, abs=3e-4)

    halved, _ = argmin_mu(step=5e-5)
    assert abs(halved - alpha_star) < 1e-4


def test_figure_one_limits_cross():
    table = figure_data(1, 0.1)
    row = dict(zip(table.columns, table.rows[table.column("alpha").index(0.7)]))
    assert row["lower_limit"] == pytest.approx(0.4)
    assert row["upper_limit"] == pytest.approx(0.3)
    assert row["u1_over_n"] is None


def test_figure_three_curves_touch_at_half():
    table = figure_data(3, 0.05)
    row = dict(zip(table.columns, table.rows[table.column("alpha").index(0.5)]))
    assert row["xi"] == pytest.approx(row["theta"], abs=1e-12)
    # правее 1/2 доминирует Σ₂: θ не меньше ξ
    for alpha, xi, theta in table.rows:
        if 0.5 <= alpha <= 2 / 3 and xi is not None:
            assert theta >= xi - 1e-12


def test_figure_four_minimum_near_known_weight():
    step = 0.001
    table = figure_data(4, step)
    alphas, thetas = table.column("alpha"), table.column("theta")
    best = alphas[thetas.index(min(thetas))]
    assert abs(best - 0.7395) <= step + 1e-9
    assert alphas[0] == pytest.approx(0.70) and alphas[-1] == pytest.approx(0.78)


def test_figure_two_reference_lines():
    table = figure_data(2, 0.1)
    for alpha, v1, v2, line, lower in table.rows:
        assert line == alpha
        assert lower == pytest.approx(2 * alpha - 1)
        assert max(0.0, lower) - 1e-12 <= v1 <= alpha + 1e-12
        assert v2 >= v1


@pytest.mark.parametrize("figure, step", [(5, 0.01), (1, 0.0), (1, 0.5)])
def test_figure_rejects_bad_arguments(figure, step):
    with pytest.raises(DomainError):
        figure_data(figure, step)


def test_no_nan_in_figure_data():
    for figure in (1, 2, 3, 4):
        for row in figure_data(figure, 0.01).rows:
            assert all(value is None or math.isfinite(value) for value in row)
