from pydantic import BaseModel

from gekr.models.magnitude import LogMagnitude

LOG10_DECIMALS = 9


class BoundReport(BaseModel):
    model: str
    alpha: float
    n: int
    log10: float | None
    mantissa: float
    exponent: int
    rendered: str

    @classmethod
    def build(cls, model: str, alpha: float, n: int, value: LogMagnitude) -> "BoundReport":
        mantissa, exponent = value.mantissa_exponent()
        return cls(
            model=model,
            alpha=alpha,
            n=n,
            log10=None if value.is_zero else round(value.log10, LOG10_DECIMALS),
            mantissa=mantissa,
            exponent=exponent,
            rendered=value.render(),
        )

    def human(self) -> str:
        if self.log10 is None:
            return f"{self.rendered} (zero)"
        return f"{self.rendered} (log10 = {self.log10:.{LOG10_DECIMALS}f})"


class OptimumReport(BaseModel):
    model: str
    n: int | None = None
    alpha_star: float
    objective: float
    objective_log10: float | None = None
    rendered: str | None = None


class CompareReport(BaseModel):
    alpha: float
    n: int
    independent: BoundReport
    fixed_weight: BoundReport
    winner: str


class ConstructionReport(BaseModel):
    strategy: str
    success: bool
    n: int
    alpha: float
    m: int
    seed: int
    resamples: int


class FamilyReport(BaseModel):
    n: int
    k: int
    size: int
    exact: bool
    nodes: int
    witness: list[list[int]]
