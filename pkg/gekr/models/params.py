from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from gekr.exceptions import DomainError


class Model(str, Enum):
    INDEPENDENT = "independent"
    FIXED_WEIGHT = "fixed-weight"


class BoundModel(str, Enum):
    INDEPENDENT = "independent"
    FIXED_ASYMPTOTIC = "fixed-asymptotic"
    FIXED_EXACT = "fixed-exact"


class NuMode(str, Enum):
    ASYMPTOTIC = "asymptotic"
    EXACT_SUM = "exact-sum"


class Strategy(str, Enum):
    REJECTION = "rejection"
    MOSER_TARDOS = "moser-tardos"
    GREEDY = "greedy"


@dataclass(frozen=True)
class ModelParams:
    """Параметры случайной модели строк: n столбцов, доля единиц α.

    Для модели с фиксированным весом αn обязано быть целым (r = k = αn).
    Концы α = 0 и α = 1 допускаются как вырожденные случаи.
    """

    n: int
    alpha: Fraction
    model: Model = Model.FIXED_WEIGHT

    def __post_init__(self):
        alpha = Fraction(self.alpha)
        object.__setattr__(self, "alpha", alpha)
        if self.n < 1:
            raise DomainError(f"n must be a positive integer, got {self.n}")
        if not 0 <= alpha <= 1:
            raise DomainError(f"alpha must lie in [0, 1], got {alpha}")
        if self.model is Model.FIXED_WEIGHT and (alpha * self.n).denominator != 1:
            raise DomainError(f"alpha*n = {float(alpha * self.n):g} is not an integer")

    @classmethod
    def fixed(cls, n: int, r: int) -> "ModelParams":
        if not 0 <= r <= n:
            raise DomainError(f"row weight {r} outside [0, {n}]")
        return cls(n=n, alpha=Fraction(r, n), model=Model.FIXED_WEIGHT)

    @classmethod
    def independent(cls, n: int, alpha: Fraction | float) -> "ModelParams":
        return cls(n=n, alpha=Fraction(alpha), model=Model.INDEPENDENT)

    @property
    def r(self) -> int:
        weight = self.alpha * self.n
        if weight.denominator != 1:
            raise DomainError(f"expected weight {float(weight):g} is not an integer")
        return int(weight)

    @property
    def is_fixed_weight(self) -> bool:
        return self.model is Model.FIXED_WEIGHT


@dataclass(frozen=True)
class ConstructionConfig:
    params: ModelParams
    m: int
    seed: int = 0
    max_resamples: int = 1_000_000
    strategy: Strategy = Strategy.MOSER_TARDOS

    def __post_init__(self):
        if self.m < 0:
            raise DomainError(f"row count must be non-negative, got {self.m}")
        if self.max_resamples < 1:
            raise DomainError("max_resamples must be at least 1")
        if not 0 <= self.seed < 2 ** 64:
            raise DomainError("seed must be a 64-bit unsigned integer")
