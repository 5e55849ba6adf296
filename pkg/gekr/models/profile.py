from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class AsymptoticProfile:
    """Значения при фиксированном α: коэффициенты e, f, точки β, κ и основания ξ, θ, μ.

    beta и xi определены только при α ≤ 2/3, иначе None.
    """

    alpha: float
    e_coeff: float
    f_coeff: float
    beta: float | None
    kappa: float
    xi: float | None
    theta: float
    mu: float


@dataclass(frozen=True)
class QuadraticRoots:
    """Корни a·u² + b·u + c = 0 (lower ≤ upper) при точных коэффициентах."""

    lower: float
    upper: float
    coefficients: tuple[Fraction, Fraction, Fraction]

    @property
    def discriminant(self) -> Fraction:
        a, b, c = self.coefficients
        return b * b - 4 * a * c

    def residual(self, u: float) -> float:
        """Относительная невязка |a u² + b u + c| / (|a| u² + |b| |u| + |c|)."""
        a, b, c = self.coefficients
        point = Fraction(u)
        scale = abs(a) * point * point + abs(b) * abs(point) + abs(c)
        if scale == 0:
            return 0.0
        return float(abs(a * point * point + b * point + c) / scale)
