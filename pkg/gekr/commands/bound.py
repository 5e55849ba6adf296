import argparse
import sys
from fractions import Fraction

from gekr.exceptions import DomainError
from gekr.models import BoundModel
from gekr.models.reports import BoundReport
from gekr.services import bound_service as bounds
from gekr.services.table_service import evaluate, nearest_weight
from gekr.utils import parse_alpha, parse_count


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("bound", help="нижняя оценка числа строк m для одной точки (alpha, n)")
    parser.add_argument("--model", choices=[m.value for m in BoundModel], default=BoundModel.INDEPENDENT.value)
    weight = parser.add_mutually_exclusive_group(required=True)
    weight.add_argument("--alpha", help='доля единиц: десятичная запись или дробь вида "2/3"')
    weight.add_argument("--k", type=int, help="вес строки для моделей с фиксированным весом")
    weight.add_argument(
        "--alpha-schedule",
        choices=["vanishing"],
        help="alpha = (ln n)^(2/3) / n^(1/3); fixed-exact округляет alpha*n до целого веса",
    )
    parser.add_argument("--n", required=True, type=parse_count)
    parser.add_argument("--json", action="store_true", help="JSON-объект вместо текста")
    parser.set_defaults(handler=run)


def resolve_alpha(args: argparse.Namespace, model: BoundModel) -> Fraction | float:
    if args.k is not None:
        if model is BoundModel.INDEPENDENT:
            raise DomainError("--k applies to the fixed-weight models only")
        if not 0 <= args.k <= args.n:
            raise DomainError(f"row weight {args.k} outside [0, {args.n}]")
        return Fraction(args.k, args.n)
    if args.alpha_schedule == "vanishing":
        alpha = bounds.vanishing_alpha(args.n)
        if model is BoundModel.FIXED_EXACT:
            return nearest_weight(alpha, args.n)
        return alpha
    return parse_alpha(args.alpha)


def run(args: argparse.Namespace) -> int:
    model = BoundModel(args.model)
    alpha = resolve_alpha(args, model)
    value = evaluate(model, alpha, args.n)

    report = BoundReport.build(model.value, float(alpha), args.n, value)
    if args.json:
        print(report.model_dump_json(), file=sys.stdout)
    else:
        print(report.human(), file=sys.stdout)
    return 0
