"""Одномерная минимизация по α и данные для графиков.

Сначала сетка (функция не обязана быть унимодальной), затем золотое сечение
вокруг лучшего узла сетки.
"""
import logging
import math
from dataclasses import dataclass, field
from typing import Callable

from gekr.exceptions import DomainError
from gekr.models import LogMagnitude
from gekr.services import bound_service as bounds
from gekr.utils import grid

logger = logging.getLogger(__name__)

INV_PHI = (math.sqrt(5) - 1) / 2  # 1 / phi
INV_PHI_SQUARE = (3 - math.sqrt(5)) / 2  # 1 / phi^2

ALPHA_FLOOR = 1e-9


def golden_section(f: Callable[[float], float], a: float, b: float, tol: float = 1e-6) -> tuple[float, float]:
    """Золотое сечение: сужает [a, b] до длины ≤ tol, возвращает (x, f(x)) в середине."""
    a, b = min(a, b), max(a, b)
    h = b - a
    if h <= tol:
        x = (a + b) / 2
        return x, f(x)

    steps = int(math.ceil(math.log(tol / h) / math.log(INV_PHI)))

    c = a + INV_PHI_SQUARE * h
    d = a + INV_PHI * h
    yc = f(c)
    yd = f(d)

    for _ in range(steps - 1):
        if yc < yd:
            b = d
            d = c
            yd = yc
            h = INV_PHI * h
            c = a + INV_PHI_SQUARE * h
            yc = f(c)
        else:
            a = c
            c = d
            yc = yd
            h = INV_PHI * h
            d = a + INV_PHI * h
            yd = f(d)

    lo, hi = (a, d) if yc < yd else (c, b)
    x = (lo + hi) / 2
    return x, f(x)


def grid_then_golden(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    step: float,
    tol: float = 1e-6,
) -> tuple[float, float]:
    """Минимум f на [lo, hi]: перебор сетки, уточнение на [x* − step, x* + step].

    При равных значениях берётся левый узел, так что результат детерминирован.
    """
    points = grid(lo, hi, step)
    values = [f(x) for x in points]
    best = min(range(len(points)), key=lambda i: (values[i], i))
    left = max(lo, points[best] - step)
    right = min(hi, points[best] + step)
    x, y = golden_section(f, left, right, tol)
    if values[best] < y:
        return points[best], values[best]
    return x, y


def argmin_independent(n: int, step: float = 1e-3, tol: float = 1e-6) -> tuple[float, LogMagnitude]:
    """α*, минимизирующее p_n(α), и само p_n(α*)."""
    if n < 1:
        raise DomainError(f"n must be a positive integer, got {n}")

    def objective(alpha: float) -> float:
        return bounds.p_independent(alpha, n).log10

    alpha_star, _ = grid_then_golden(objective, step, 1.0 - ALPHA_FLOOR, step, tol)
    return alpha_star, bounds.p_independent(alpha_star, n)


def argmin_mu(step: float = 1e-4, tol: float = 1e-6) -> tuple[float, float]:
    """α*, минимизирующее μ(α): ветка θ на (1/2, 1) и ветка ξ на (0, 1/2]."""
    theta_alpha, theta_log = grid_then_golden(bounds.log_theta, 0.5 + step, 1.0 - step, step, tol)

    xi_step = max(step, 1e-3)
    xi_alpha, xi_log = grid_then_golden(bounds.log_xi, xi_step, 0.5, xi_step, tol)
    logger.debug("mu branches: theta min %.6f at %.6f, xi min %.6f at %.6f",
                 math.exp(theta_log), theta_alpha, math.exp(xi_log), xi_alpha)

    if xi_log < theta_log:
        return xi_alpha, math.exp(xi_log)
    return theta_alpha, math.exp(theta_log)


@dataclass
class FigureTable:
    columns: list[str]
    rows: list[tuple[float | None, ...]] = field(default_factory=list)

    def column(self, name: str) -> list[float | None]:
        index = self.columns.index(name)
        return [row[index] for row in self.rows]


FIGURE_COLUMNS = {
    1: ["alpha", "lower_limit", "upper_limit", "u1_over_n", "u2_over_n"],
    2: ["alpha", "v1_over_n", "v2_over_n", "alpha_line", "two_alpha_minus_one"],
    3: ["alpha", "xi", "theta"],
    4: ["alpha", "theta"],
}


def _u2_over_n(alpha: float) -> float:
    return (1.0 - alpha ** 2 + math.sqrt(bounds.e_coeff(alpha))) / (2.0 - 2.0 * alpha)


def _v2_over_n(alpha: float) -> float:
    radicand = 1.0 + 10.0 * alpha ** 2 - 12.0 * alpha ** 3 - 4.0 * alpha + 5.0 * alpha ** 4
    return (3.0 * alpha ** 2 + 1.0 - 2.0 * alpha + math.sqrt(max(0.0, radicand))) / (2.0 * alpha)


def figure_data(figure: int, grid_step: float = 0.01) -> FigureTable:
    """Кривые рисунков 1–4 в виде таблицы; None означает точку вне области кривой."""
    if figure not in FIGURE_COLUMNS:
        raise DomainError(f"figure must be one of 1, 2, 3, 4, got {figure}")
    if not 0.0 < grid_step <= 0.1:
        raise DomainError(f"grid step must lie in (0, 0.1], got {grid_step}")

    table = FigureTable(columns=FIGURE_COLUMNS[figure])

    if figure == 4:
        for alpha in grid(0.70, 0.78, grid_step):
            table.rows.append((alpha, bounds.theta(alpha)))
        return table

    # α = 0 и α = 1 особые: деление на α или на 1 − α
    alphas = [a for a in grid(0.0, 1.0, grid_step) if 0.0 < a < 1.0]
    for alpha in alphas:
        if figure == 1:
            table.rows.append((
                alpha,
                max(0.0, 2.0 * alpha - 1.0),
                min(alpha, 1.0 - alpha),
                bounds.beta(alpha) if alpha <= bounds.TWO_THIRDS else None,
                _u2_over_n(alpha),
            ))
        elif figure == 2:
            table.rows.append((
                alpha,
                bounds.kappa(alpha),
                _v2_over_n(alpha),
                alpha,
                2.0 * alpha - 1.0,
            ))
        else:
            table.rows.append((
                alpha,
                bounds.xi(alpha) if alpha <= bounds.TWO_THIRDS + bounds.BOUNDARY_EPS else None,
                bounds.theta(alpha),
            ))
    return table
