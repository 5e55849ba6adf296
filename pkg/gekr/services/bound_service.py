"""Границы для независимой модели и модели с фиксированным весом строк.

Для фиксированного веса r = αn:

    φ(u) = C(r,u)·C(n−r,r−u)·C(n−u,r) / C(n,r)²      (вероятность пропуска (1,1,1))
    ψ(u) = C(r,u)·C(n−r,r−u)·C(n−u,n−r) / C(n,r)²    (вероятность пропуска (1,1,0))

Здесь u обозначает размер пересечения первых двух строк. Вероятность дефицита тройки
оценивается сверху как Σ₁ + 3·Σ₂ и обращается через локальную лемму.
"""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from gekr.config import settings
from gekr.exceptions import DomainError, NegativeDiscriminantError
from gekr.models import AsymptoticProfile, ExactProb, LogMagnitude, NuMode, QuadraticRoots
from gekr.models.magnitude import exact_to_magnitude
from gekr.utils import as_fraction, log_comb, logsumexp, xlogx

logger = logging.getLogger(__name__)

E_EULER = math.e
# log10 √(2/(3e)): множитель локальной леммы при d + 1 ≤ 3m²/2
LLL_LOG10 = 0.5 * math.log10(2.0 / (3.0 * E_EULER))
LN3 = math.log(3.0)


def _check_alpha(alpha: float, closed: bool = True) -> float:
    value = float(alpha)
    inside = 0.0 <= value <= 1.0 if closed else 0.0 < value < 1.0
    if not inside or math.isnan(value):
        interval = "[0, 1]" if closed else "(0, 1)"
        raise DomainError(f"alpha must lie in {interval}, got {alpha}")
    return value


def _check_n(n: int) -> None:
    if n < 1:
        raise DomainError(f"n must be a positive integer, got {n}")


def _check_weight(n: int, r: int) -> None:
    _check_n(n)
    if not 0 <= r <= n:
        raise DomainError(f"row weight r = {r} outside [0, {n}]")


# --- Независимая модель ---------------------------------------------------

def p_independent(alpha: Fraction | float, n: int) -> LogMagnitude:
    """p_n(α) = (1 − α³)^n + 3(1 − α²(1 − α))^n в логарифмах."""
    a = _check_alpha(alpha)
    _check_n(n)
    first = n * math.log1p(-a ** 3) if a < 1.0 else -math.inf
    second = LN3 + n * math.log1p(-a * a * (1.0 - a))
    return LogMagnitude.from_ln(logsumexp([first, second]))


def lll_max_rows(p: LogMagnitude) -> LogMagnitude:
    """Наибольшее m с (3e/2)·m²·p ≤ 1, то есть m = √(2/(3e·p))."""
    if p.is_zero:
        raise DomainError("the local lemma bound needs p > 0")
    return LogMagnitude(log10=LLL_LOG10 - 0.5 * p.log10)


def zeta(alpha: Fraction | float, n: int) -> LogMagnitude:
    return lll_max_rows(p_independent(alpha, n))


def vanishing_alpha(n: int) -> float:
    """Вес α_n = (ln n)^{2/3} / n^{1/3}, стремящийся к нулю с ростом n."""
    if n < 3:
        raise DomainError("vanishing alpha needs n >= 3")
    return math.log(n) ** (2.0 / 3.0) / n ** (1.0 / 3.0)


def lll_dependency(m: int) -> int:
    """d + 1: число троек строк, имеющих общую строку с данной (включая её)."""
    if m < 3:
        return 0
    return comb(m, 3) - comb(m - 3, 3)


def lll_max_rows_exact(p: LogMagnitude) -> int:
    """Наибольшее целое m с e·p·(d + 1) ≤ 1 при точном d."""
    approx = lll_max_rows(p)
    if approx.log10 > 15:
        raise DomainError(f"row bound 10^{approx.log10:.1f} is too large for an exact count")

    def holds(m: int) -> bool:
        dependency = lll_dependency(m)
        if dependency == 0:
            return True
        return math.log10(E_EULER) + p.log10 + math.log10(dependency) <= 0.0

    m = max(2, approx.floor())
    while holds(m + 1):
        m += 1
    return m


# --- Фиксированный вес: точные суммы ------------------------------------

def phi_range(n: int, r: int) -> range:
    return range(max(0, 2 * r - n), min(r, n - r) + 1)


def psi_range(n: int, r: int) -> range:
    return range(max(0, 2 * r - n), r + 1)


def _phi_numerator(n: int, r: int, u: int) -> int:
    return comb(r, u) * comb(n - r, r - u) * comb(n - u, r)


def _psi_numerator(n: int, r: int, u: int) -> int:
    return comb(r, u) * comb(n - r, r - u) * comb(n - u, n - r)


def phi_term(n: int, r: int, u: int) -> ExactProb:
    _check_weight(n, r)
    if u not in phi_range(n, r):
        raise DomainError(f"u = {u} outside the phi summation range for n={n}, r={r}")
    return Fraction(_phi_numerator(n, r, u), comb(n, r) ** 2)


def psi_term(n: int, r: int, u: int) -> ExactProb:
    _check_weight(n, r)
    if u not in psi_range(n, r):
        raise DomainError(f"u = {u} outside the psi summation range for n={n}, r={r}")
    return Fraction(_psi_numerator(n, r, u), comb(n, r) ** 2)


def sigma_terms(n: int, r: int) -> tuple[ExactProb, ExactProb]:
    """(Σ₁, Σ₂): точные P((1,1,1) пропущен) и P((1,1,0) пропущен)."""
    _check_weight(n, r)
    denominator = comb(n, r) ** 2
    sigma1 = sum((_phi_numerator(n, r, u) for u in phi_range(n, r)), 0)
    sigma2 = sum((_psi_numerator(n, r, u) for u in psi_range(n, r)), 0)
    return Fraction(sigma1, denominator), Fraction(sigma2, denominator)


def p_fixed_exact(n: int, r: int) -> ExactProb:
    """Оценка объединения Σ₁ + 3·Σ₂; может превышать 1."""
    sigma1, sigma2 = sigma_terms(n, r)
    return sigma1 + 3 * sigma2


# --- Фиксированный вес: логарифмический режим ---------------------------

def _log_phi(n: int, r: int, u: int, log_norm: float) -> float:
    return log_comb(r, u) + log_comb(n - r, r - u) + log_comb(n - u, r) - log_norm


def _log_psi(n: int, r: int, u: int, log_norm: float) -> float:
    return log_comb(r, u) + log_comb(n - r, r - u) + log_comb(n - u, n - r) - log_norm


def p_fixed_log(n: int, r: int) -> LogMagnitude:
    """Та же Σ₁ + 3·Σ₂, но через lgamma и компенсированное суммирование."""
    _check_weight(n, r)
    log_norm = 2.0 * log_comb(n, r)
    sigma1 = logsumexp([_log_phi(n, r, u, log_norm) for u in phi_range(n, r)])
    sigma2 = logsumexp([_log_psi(n, r, u, log_norm) for u in psi_range(n, r)])
    return LogMagnitude.from_ln(logsumexp([sigma1, LN3 + sigma2]))


def p_fixed(n: int, r: int) -> LogMagnitude:
    if n <= settings.exact_threshold:
        return exact_to_magnitude(p_fixed_exact(n, r))
    return p_fixed_log(n, r)


# --- Квадратные уравнения отношения соседних членов ----------------------

def phi_coefficients(n: int, r: int) -> tuple[Fraction, Fraction, Fraction]:
    """φ(u+1)/φ(u) ≥ 1 ⇔ a·u² + b·u + c ≥ 0."""
    a = n - r + 2
    b = r * r - 2 * r - n * n - n + 1
    c = n * r * r - r ** 3 - n * n + 2 * n * r - n
    return Fraction(a), Fraction(b), Fraction(c)


def psi_coefficients(n: int, r: int) -> tuple[Fraction, Fraction, Fraction]:
    """ψ(u+1)/ψ(u) = (r − u)³ / ((u + 1)(n − 2r + u + 1)(n − u)) ≥ 1 ⇔ a·u² + b·u + c ≥ 0."""
    alpha = Fraction(r, n)
    a = alpha * n + 2
    b = -3 * alpha ** 2 * n ** 2 - n ** 2 + 2 * alpha * n ** 2 - n - 2 * alpha * n + 1
    c = alpha ** 3 * n ** 3 - n ** 2 + 2 * alpha * n ** 2 - n
    return a, b, c


def gamma_radical(n: int, r: int) -> int:
    """Дискриминант квадратного уравнения для φ в развёрнутом виде."""
    return (
        1 - 2 * n * r ** 2 - 16 * n * r - 4 * r + 6 * n + 6 * r ** 2 + 11 * n ** 2
        + 4 * r ** 3 - 6 * r ** 2 * n ** 2 - 3 * r ** 4 + n ** 4 + 6 * n ** 3
        - 8 * r * n ** 2 + 8 * r ** 3 * n
    )


def delta_radical(n: int, alpha: Fraction) -> Fraction:
    """Дискриминант квадратного уравнения для ψ в развёрнутом виде."""
    a = Fraction(alpha)
    return (
        1 - 4 * a * n - 2 * a ** 2 * n ** 2 - 4 * a * n ** 2 + 4 * a ** 3 * n ** 3
        + 7 * n ** 2 + 6 * n + 5 * a ** 4 * n ** 4 + 10 * a ** 2 * n ** 4
        - 12 * a ** 3 * n ** 4 - 10 * a ** 2 * n ** 3 - 4 * a * n ** 4
        + 2 * n ** 3 + n ** 4 + 4 * a * n ** 3
    )


def solve_quadratic(coefficients: tuple[Fraction, Fraction, Fraction]) -> QuadraticRoots:
    a, b, c = coefficients
    if a == 0:
        raise DomainError("leading coefficient is zero")
    discriminant = b * b - 4 * a * c
    if discriminant < 0:
        raise NegativeDiscriminantError(f"discriminant {discriminant} is negative")

    root = math.sqrt(discriminant)
    # без вычитания близких чисел: q = −(b + sign(b)·√D)/2, корни q/a и c/q
    q = -(float(b) + math.copysign(root, float(b))) / 2.0
    if q == 0.0:
        lower = upper = 0.0
    else:
        first, second = q / float(a), float(c) / q
        lower, upper = min(first, second), max(first, second)
    return QuadraticRoots(lower=lower, upper=upper, coefficients=(a, b, c))


def phi_ratio_roots(n: int, r: int) -> QuadraticRoots:
    """u₁ ≤ u₂: φ растёт при u ≤ u₁ и при u ≥ u₂."""
    _check_weight(n, r)
    if not 1 <= r < n:
        raise DomainError(f"ratio roots need 1 <= r < n, got r={r}, n={n}")
    return solve_quadratic(phi_coefficients(n, r))


def psi_ratio_roots(n: int, r: int) -> QuadraticRoots:
    """v₁ ≤ v₂ для ψ."""
    _check_weight(n, r)
    if not 1 <= r < n:
        raise DomainError(f"ratio roots need 1 <= r < n, got r={r}, n={n}")
    return solve_quadratic(psi_coefficients(n, r))


# --- Асимптотика (Стирлинг) --------------------------------------------

TWO_THIRDS = 2.0 / 3.0
BOUNDARY_EPS = 1e-12


def e_coeff(alpha: float) -> float:
    a = float(alpha)
    return 1.0 - 3.0 * a ** 4 - 6.0 * a ** 2 + 8.0 * a ** 3


def f_coeff(alpha: float) -> float:
    a = float(alpha)
    return -2.0 * a ** 2 + 4.0 * a ** 3 + 6.0 - 8.0 * a


def beta(alpha: float) -> float:
    """β(α) = (1 − α² − √e)/(2 − 2α), записанная без вычитания близких чисел."""
    a = float(alpha)
    if not 0.0 <= a <= TWO_THIRDS + BOUNDARY_EPS:
        raise DomainError(f"beta is defined on [0, 2/3], got {alpha}")
    # (1 − α²)² − e = 4α²(1 − α)²
    return 2.0 * a * a * (1.0 - a) / (1.0 - a * a + math.sqrt(e_coeff(a)))


def kappa(alpha: float) -> float:
    """κ(α) = (3α² + 1 − 2α − √D)/(2α), D = 1 + 10α² − 12α³ − 4α + 5α⁴."""
    a = float(alpha)
    if not 0.0 <= a <= 1.0:
        raise DomainError(f"kappa is defined on [0, 1], got {alpha}")
    radicand = max(0.0, 1.0 + 10.0 * a ** 2 - 12.0 * a ** 3 - 4.0 * a + 5.0 * a ** 4)
    # (3α² − 2α + 1)² − D = 4α⁴
    return 2.0 * a ** 3 / (3.0 * a * a - 2.0 * a + 1.0 + math.sqrt(radicand))


def log_xi(alpha: float) -> float:
    a = float(alpha)
    b = beta(a)
    return (
        3.0 * xlogx(1.0 - a) + xlogx(1.0 - b) + 2.0 * xlogx(a)
        - xlogx(b) - 2.0 * xlogx(a - b) - xlogx(1.0 - 2.0 * a + b) - xlogx(1.0 - a - b)
    )


def log_theta(alpha: float) -> float:
    a = float(alpha)
    k = kappa(a)
    return (
        3.0 * xlogx(a) + 2.0 * xlogx(1.0 - a) + xlogx(1.0 - k)
        - xlogx(k) - 3.0 * xlogx(a - k) - xlogx(1.0 - 2.0 * a + k)
    )


def xi(alpha: float) -> float:
    """Основание экспоненты для Σ₁ (α ∈ [0, 2/3])."""
    return math.exp(log_xi(alpha))


def theta(alpha: float) -> float:
    """Основание экспоненты для Σ₂ (α ∈ [0, 1])."""
    return math.exp(log_theta(alpha))


def mu(alpha: float) -> float:
    a = float(alpha)
    return xi(a) if a <= 0.5 else theta(a)


def asymptotic_profile(alpha: Fraction | float) -> AsymptoticProfile:
    a = float(alpha)
    if not 0.0 < a <= 1.0:
        raise DomainError(f"alpha must lie in (0, 1), got {alpha}")
    in_xi_domain = a <= TWO_THIRDS + BOUNDARY_EPS
    xi_value = xi(a) if in_xi_domain else None
    theta_value = theta(a)
    return AsymptoticProfile(
        alpha=a,
        e_coeff=e_coeff(a),
        f_coeff=f_coeff(a),
        beta=beta(a) if in_xi_domain else None,
        kappa=kappa(a),
        xi=xi_value,
        theta=theta_value,
        mu=xi_value if a <= 0.5 else theta_value,
    )


# --- ν_n(α) ---------------------------------------------------------------

def nu_asymptotic(alpha: Fraction | float, n: int) -> LogMagnitude:
    """n^{−1/4}·μ(α)^{−n/2}: K = 1, множитель (1 + o(1)) отброшен."""
    a = _check_alpha(alpha, closed=False)
    _check_n(n)
    log10_mu = log_theta(a) / math.log(10.0) if a > 0.5 else log_xi(a) / math.log(10.0)
    return LogMagnitude(log10=-0.25 * math.log10(n) - 0.5 * n * log10_mu)


def nu_exact(n: int, r: int) -> LogMagnitude:
    """√(2/(3e))·p^{−1/2} для точной Σ₁ + 3Σ₂; при p > 1 граница нулевая."""
    p = p_fixed(n, r)
    if p.is_zero:
        raise DomainError(f"deficiency probability vanishes for n={n}, r={r}")
    if p.log10 > 0.0:
        logger.debug("union bound %s exceeds 1 for n=%d r=%d, clamping", p.render(), n, r)
        return LogMagnitude.zero()
    return lll_max_rows(p)


def nu(alpha: Fraction | float, n: int, mode: NuMode = NuMode.ASYMPTOTIC) -> LogMagnitude:
    if mode is NuMode.ASYMPTOTIC:
        return nu_asymptotic(alpha, n)
    exact_alpha = as_fraction(alpha)
    _check_alpha(exact_alpha)
    weight = exact_alpha * n
    if weight.denominator != 1:
        raise DomainError(f"alpha*n = {float(weight):g} is not an integer")
    return nu_exact(n, int(weight))


@dataclass(frozen=True)
class ModelComparison:
    alpha: float
    n: int
    independent: LogMagnitude
    fixed_weight: LogMagnitude

    @property
    def winner(self) -> str:
        return "fixed-weight" if self.fixed_weight > self.independent else "independent"


def compare_models(alpha: Fraction | float, n: int) -> ModelComparison:
    """ζ против асимптотической ν при одинаковых α и n."""
    return ModelComparison(
        alpha=float(alpha),
        n=n,
        independent=zeta(alpha, n),
        fixed_weight=nu_asymptotic(alpha, n),
    )
