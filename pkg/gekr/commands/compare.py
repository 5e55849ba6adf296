import argparse

from gekr.models.reports import BoundReport, CompareReport
from gekr.services import bound_service as bounds
from gekr.utils import parse_alpha, parse_count


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("compare", help="независимая модель против фиксированного веса в одной точке (alpha, n)")
    parser.add_argument("--alpha", required=True)
    parser.add_argument("--n", required=True, type=parse_count)
    parser.add_argument("--json", action="store_true")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    alpha = parse_alpha(args.alpha)
    comparison = bounds.compare_models(alpha, args.n)
    report = CompareReport(
        alpha=comparison.alpha,
        n=comparison.n,
        independent=BoundReport.build("independent", comparison.alpha, args.n, comparison.independent),
        fixed_weight=BoundReport.build("fixed-asymptotic", comparison.alpha, args.n, comparison.fixed_weight),
        winner=comparison.winner,
    )
    if args.json:
        print(report.model_dump_json())
    else:
        print(f"independent       {report.independent.human()}")
        print(f"fixed-asymptotic  {report.fixed_weight.human()}")
        print(f"winner: {report.winner}")
    return 0
