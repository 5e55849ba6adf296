import argparse
import sys

from gekr.models.reports import FamilyReport
from gekr.services.exact_service import ExactService


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("maxfamily", help="наибольшее семейство k-подмножеств [n] со свойством")
    parser.add_argument("n", type=int)
    parser.add_argument("k", type=int)
    parser.add_argument("--node-limit", type=int, help="лимит узлов ветвей и границ")
    parser.add_argument("--json", action="store_true")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    result = ExactService(node_limit=args.node_limit).max_family(args.n, args.k)

    if args.json:
        report = FamilyReport(
            n=result.n,
            k=result.k,
            size=result.size,
            exact=result.exact,
            nodes=result.nodes,
            witness=result.witness_sets(),
        )
        print(report.model_dump_json())
        return 0

    status = "exact" if result.exact else "inconclusive: node limit reached"
    print(f"# n={result.n} k={result.k} size={result.size} ({status}, {result.nodes} nodes)")
    sys.stdout.write(result.as_array().to_text())
    return 0
