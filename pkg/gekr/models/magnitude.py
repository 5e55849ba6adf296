import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import TypeAlias

from gekr.exceptions import DomainError

# Точная вероятность: Fraction всегда хранится несократимой, знаменатель > 0.
ExactProb: TypeAlias = Fraction

LN10 = math.log(10.0)
RENDERED_RE = re.compile(r'^\s*(\d+(?:\.\d*)?)\s*(?:[eE]\s*([+-]?\d+))?\s*$')


@total_ordering
@dataclass(frozen=True)
class LogMagnitude:
    """Неотрицательная величина, хранимая как log10 (или точный ноль).

    Нужна для ζ, ν, p_n и сумм Σ, далеко выходящих за пределы float.
    """

    log10: float = 0.0
    is_zero: bool = False

    def __post_init__(self):
        if not self.is_zero and not math.isfinite(self.log10):
            raise DomainError(f"log10 must be finite, got {self.log10}")

    @classmethod
    def zero(cls) -> "LogMagnitude":
        return cls(log10=0.0, is_zero=True)

    @classmethod
    def from_ln(cls, ln_value: float) -> "LogMagnitude":
        if ln_value == -math.inf:
            return cls.zero()
        return cls(log10=ln_value / LN10)

    @classmethod
    def from_value(cls, value: int | float | Fraction) -> "LogMagnitude":
        if value < 0:
            raise DomainError(f"magnitude must be non-negative, got {value}")
        if value == 0:
            return cls.zero()
        if isinstance(value, Fraction):
            # math.log10 принимает сколь угодно большие int
            return cls(log10=math.log10(value.numerator) - math.log10(value.denominator))
        return cls(log10=math.log10(value))

    @property
    def ln(self) -> float:
        return -math.inf if self.is_zero else self.log10 * LN10

    def __mul__(self, other: "LogMagnitude") -> "LogMagnitude":
        if self.is_zero or other.is_zero:
            return LogMagnitude.zero()
        return LogMagnitude(log10=self.log10 + other.log10)

    def __truediv__(self, other: "LogMagnitude") -> "LogMagnitude":
        if other.is_zero:
            raise ZeroDivisionError("division by a zero magnitude")
        if self.is_zero:
            return LogMagnitude.zero()
        return LogMagnitude(log10=self.log10 - other.log10)

    def __pow__(self, exponent: float) -> "LogMagnitude":
        if self.is_zero:
            if exponent <= 0:
                raise ZeroDivisionError("zero magnitude to a non-positive power")
            return LogMagnitude.zero()
        return LogMagnitude(log10=self.log10 * exponent)

    def __lt__(self, other: "LogMagnitude") -> bool:
        return self._key() < other._key()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LogMagnitude):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def _key(self) -> tuple[int, float]:
        return (0, 0.0) if self.is_zero else (1, self.log10)

    def __float__(self) -> float:
        if self.is_zero:
            return 0.0
        if self.log10 > 308.25:
            return math.inf
        return 10.0 ** self.log10

    def floor(self) -> int:
        """Целая часть величины (для небольших значений, например числа строк)."""
        if self.is_zero or self.log10 < 0:
            return 0
        if self.log10 > 18:
            raise DomainError(f"magnitude 10^{self.log10:.3f} is too large to floor")
        value = math.floor(10.0 ** self.log10)
        # 10**log10 может недобрать единицу у целых значений
        if 10.0 ** self.log10 - value > 1 - 1e-9:
            value += 1
        return value

    def mantissa_exponent(self, digits: int = 3) -> tuple[float, int]:
        if self.is_zero:
            return 0.0, 0
        exponent = math.floor(self.log10)
        mantissa = round(10.0 ** (self.log10 - exponent), digits - 1)
        if mantissa >= 10.0:
            mantissa = round(mantissa / 10.0, digits - 1)
            exponent += 1
        return mantissa, exponent

    def render(self, digits: int = 3) -> str:
        if self.is_zero:
            return "0"
        mantissa, exponent = self.mantissa_exponent(digits)
        return f"{mantissa:.{digits - 1}f}e{exponent}"

    @classmethod
    def parse(cls, text: str) -> "LogMagnitude":
        match = RENDERED_RE.match(text)
        if not match:
            raise DomainError(f"cannot parse magnitude {text!r}")
        mantissa = float(match.group(1))
        exponent = int(match.group(2) or 0)
        if mantissa == 0:
            return cls.zero()
        return cls(log10=math.log10(mantissa) + exponent)

    def __str__(self) -> str:
        return self.render()


def exact_to_magnitude(value: ExactProb) -> LogMagnitude:
    return LogMagnitude.from_value(Fraction(value))
