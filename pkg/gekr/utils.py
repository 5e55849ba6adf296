import math
import re
from fractions import Fraction
from itertools import combinations

from gekr.exceptions import DomainError

FRACTION_RE = re.compile(r'^\s*(-?\d+)\s*/\s*(\d+)\s*$')


def parse_alpha(text: str) -> Fraction:
    """Разбор α: десятичная запись ("0.7395") или дробь ("2/3")."""
    match = FRACTION_RE.match(text)
    try:
        if match:
            value = Fraction(int(match.group(1)), int(match.group(2)))
        else:
            value = Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"cannot parse alpha {text!r}") from exc
    return value


def as_fraction(alpha: Fraction | float | int | str) -> Fraction:
    """float берётся по десятичной записи: 0.7 -> 7/10, а не двоичная дробь."""
    if isinstance(alpha, Fraction):
        return alpha
    if isinstance(alpha, str):
        return parse_alpha(alpha)
    if isinstance(alpha, float):
        return Fraction(repr(alpha))
    return Fraction(alpha)


def format_alpha(alpha: Fraction | float) -> str:
    """Конечная десятичная дробь печатается десятичной, остальные как p/q."""
    if isinstance(alpha, Fraction):
        rest = alpha.denominator
        for prime in (2, 5):
            while rest % prime == 0:
                rest //= prime
        if rest != 1:
            return f"{alpha.numerator}/{alpha.denominator}"
    return f"{float(alpha):g}"


def xlogx(x: float) -> float:
    """x·ln x с соглашением 0⁰ = 1 (то есть 0·ln 0 = 0)."""
    if x <= 0.0:
        # шум округления на границе области
        if x > -1e-12:
            return 0.0
        raise DomainError(f"x log x undefined for x = {x}")
    return x * math.log(x)


def logsumexp(values: list[float]) -> float:
    finite = [v for v in values if v != -math.inf]
    if not finite:
        return -math.inf
    top = max(finite)
    return top + math.log(math.fsum(math.exp(v - top) for v in finite))


def log_comb(n: int, k: int) -> float:
    if k < 0 or k > n:
        return -math.inf
    return math.lgamma(n + 1) - math.lgamma(k + 1) - math.lgamma(n - k + 1)


def grid(lo: float, hi: float, step: float, include_hi: bool = True) -> list[float]:
    """Равномерная сетка, значения округлены до 12 знаков (0.7 остаётся 0.7)."""
    count = int(math.floor((hi - lo) / step + 1e-9))
    points = [round(lo + i * step, 12) for i in range(count + 1)]
    if not include_hi and points and points[-1] >= hi - 1e-12:
        points.pop()
    return points


def colex_subsets(n: int, k: int) -> list[int]:
    """k-подмножества [n] как битовые маски в колексикографическом порядке.

    Колекс-порядок совпадает с порядком масок как целых чисел.
    """
    masks = [sum(1 << i for i in combo) for combo in combinations(range(n), k)]
    return sorted(masks)


def parse_count(text: str) -> int:
    """Положительное целое: "10000", "10_000", "1e4" и "3e5" допустимы."""
    raw = text.strip().replace("_", "")
    try:
        value = int(raw)
    except ValueError:
        try:
            number = float(raw)
        except ValueError as exc:
            raise DomainError(f"cannot parse count {text!r}") from exc
        if not number.is_integer():
            raise DomainError(f"count {text!r} is not an integer")
        value = int(number)
    if value < 1:
        raise DomainError(f"count must be positive, got {text!r}")
    return value


def split_list(text: str) -> list[str]:
    """Список через запятую или пробел; пустые элементы отбрасываются."""
    return [chunk for chunk in re.split(r'[\s,;]+', text.strip()) if chunk]
