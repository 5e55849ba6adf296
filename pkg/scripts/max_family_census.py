"""Точные максимумы семейств для малых (n, k) в CSV как эталонные данные."""
import csv
import sys
from math import comb
from pathlib import Path

from tqdm import tqdm

sys.path.append(str(Path(__file__).parent.parent))

from gekr.services.exact_service import MAX_CANDIDATES, ExactService
from gekr.services.verify_service import is_gekr


def census(max_n: int, node_limit: int, out) -> int:
    pairs = [
        (n, k)
        for n in range(3, max_n + 1)
        for k in range(1, n + 1)
        if comb(n, k) <= MAX_CANDIDATES
    ]
    service = ExactService(node_limit=node_limit)
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["n", "k", "size", "exact", "nodes"])

    written = 0
    for n, k in tqdm(pairs, desc="census", unit=" (n,k)"):
        result = service.max_family(n, k)
        if not is_gekr(result.as_array()):
            raise RuntimeError(f"n={n} k={k}: witness fails verification")
        writer.writerow([n, k, result.size, str(result.exact).lower(), result.nodes])
        written += 1
    return written


if __name__ == "__main__":
    import argparse

    parser = argparse.ArgumentParser(description="Точный max_family по сетке малых (n, k)")
    parser.add_argument("--max-n", type=int, default=7)
    parser.add_argument("--node-limit", type=int, default=2_000_000)
    parser.add_argument("--output", type=str, help="путь к CSV (по умолчанию стандартный вывод)")
    args = parser.parse_args()

    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as f:
            count = census(args.max_n, args.node_limit, f)
    else:
        count = census(args.max_n, args.node_limit, sys.stdout)
    print(f"\n{count} rows written", file=sys.stderr)
