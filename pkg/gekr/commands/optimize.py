import argparse

from gekr.exceptions import DomainError
from gekr.models.reports import LOG10_DECIMALS, OptimumReport
from gekr.services import optimize_service
from gekr.utils import parse_count


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("optimize", help="alpha, минимизирующее вероятность дефицита")
    parser.add_argument("--model", choices=["independent", "fixed"], default="fixed")
    parser.add_argument("--n", type=parse_count, default=10_000, help="только для независимой модели")
    parser.add_argument("--step", type=float, help="шаг сетки перед уточнением золотым сечением")
    parser.add_argument("--json", action="store_true")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    if args.step is not None and not 0.0 < args.step < 0.1:
        raise DomainError(f"grid step must lie in (0, 0.1), got {args.step}")

    if args.model == "independent":
        step = args.step or 1e-3
        alpha_star, p = optimize_service.argmin_independent(args.n, step=step)
        report = OptimumReport(
            model="independent",
            n=args.n,
            alpha_star=alpha_star,
            objective=float(p),
            objective_log10=round(p.log10, LOG10_DECIMALS),
            rendered=p.render(),
        )
        text = f"alpha* = {alpha_star:.6f}  p = {p.render()} (log10 = {report.objective_log10:.{LOG10_DECIMALS}f})"
    else:
        step = args.step or 1e-4
        alpha_star, mu = optimize_service.argmin_mu(step=step)
        report = OptimumReport(model="fixed", alpha_star=alpha_star, objective=mu)
        text = f"alpha* = {alpha_star:.6f}  mu = {mu:.9f}"

    print(report.model_dump_json() if args.json else text)
    return 0
