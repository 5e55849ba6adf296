import argparse
import logging
import sys
from contextlib import contextmanager
from fractions import Fraction

from gekr.config import settings
from gekr.models import ConstructionConfig, Model, ModelParams, NuMode, Strategy
from gekr.models.reports import ConstructionReport
from gekr.services import bound_service as bounds
from gekr.services import construct_service
from gekr.services.construct_service import ConstructService
from gekr.utils import parse_alpha, parse_count

logger = logging.getLogger(__name__)

GREEDY_ATTEMPTS = 10_000


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("construct", help="построить массив со свойством случайным перевыбором")
    parser.add_argument("--n", required=True, type=parse_count)
    weight = parser.add_mutually_exclusive_group(required=True)
    weight.add_argument("--k", type=int, help="вес строки")
    weight.add_argument("--alpha", help="доля единиц; для фиксированного веса alpha*n должно быть целым")
    parser.add_argument("--model", choices=[m.value for m in Model], default=Model.FIXED_WEIGHT.value)
    parser.add_argument("--m", default="auto", help='число строк или "auto" (оценка локальной леммы)')
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--strategy", choices=[s.value for s in Strategy], default=Strategy.MOSER_TARDOS.value)
    parser.add_argument("--max-resamples", type=parse_count, help="лимит перевыборов (rejection, moser-tardos)")
    parser.add_argument(
        "--attempts", type=parse_count, default=GREEDY_ATTEMPTS,
        help="greedy: сколько отказов подряд до остановки",
    )
    parser.add_argument("--output", help="файл для массива вместо стандартного вывода")
    parser.add_argument(
        "--progress", action="store_true",
        help="прогресс в stderr: полоса для greedy, строки каждые GEKR_PROGRESS_INTERVAL перевыборов",
    )
    parser.set_defaults(handler=run)


def _params(args: argparse.Namespace) -> ModelParams:
    alpha = Fraction(args.k, args.n) if args.k is not None else parse_alpha(args.alpha)
    return ModelParams(n=args.n, alpha=alpha, model=Model(args.model))


def auto_rows(params: ModelParams) -> int:
    """floor ν (точная сумма) для фиксированного веса, floor ζ для независимой модели."""
    if params.is_fixed_weight:
        bound = bounds.nu(params.alpha, params.n, NuMode.EXACT_SUM)
    else:
        bound = bounds.zeta(params.alpha, params.n)
    return max(2, bound.floor())


@contextmanager
def _progress_lines(enabled: bool):
    """Строки прогресса Мозера–Тардоша идут на INFO; поднимаем их независимо от --log-level."""
    progress_logger = logging.getLogger(construct_service.__name__)
    previous = progress_logger.level
    if enabled:
        progress_logger.setLevel(logging.INFO)
    try:
        yield
    finally:
        progress_logger.setLevel(previous)


def run(args: argparse.Namespace) -> int:
    params = _params(args)
    strategy = Strategy(args.strategy)

    if args.m == "auto":
        m = 0 if strategy is Strategy.GREEDY else auto_rows(params)
        logger.info("row count: %s", m or "unbounded")
    else:
        m = parse_count(args.m)

    if strategy is Strategy.GREEDY:
        max_resamples = args.attempts
    else:
        max_resamples = args.max_resamples or settings.max_resamples
    config = ConstructionConfig(params=params, m=m, seed=args.seed, max_resamples=max_resamples, strategy=strategy)

    service = ConstructService()
    with _progress_lines(args.progress):
        if strategy is Strategy.GREEDY:
            array = service.greedy_extend(params, args.seed, args.attempts, m or None, show_progress=args.progress)
            result_array, resamples, success = array, 0, True
        else:
            result = service.build(config)
            result_array, resamples, success = result.array, result.resamples, result.success

    report = ConstructionReport(
        strategy=strategy.value,
        success=success,
        n=params.n,
        alpha=float(params.alpha),
        m=result_array.m if success else m,
        seed=args.seed,
        resamples=resamples,
    )
    print(report.model_dump_json(), file=sys.stderr)
    if not success:
        return 1

    text = result_array.to_text()
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    return 0
