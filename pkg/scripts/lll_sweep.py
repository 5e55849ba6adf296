"""Moser–Tardos на диапазоне seed: сколько запусков успешно и сколько перевыборов."""
import statistics
import sys
from pathlib import Path

from tqdm import tqdm

sys.path.append(str(Path(__file__).parent.parent))

from gekr.models import ConstructionConfig, ModelParams, NuMode
from gekr.services import bound_service as bounds
from gekr.services.construct_service import ConstructService
from gekr.services.verify_service import is_gekr


def sweep(n: int, k: int, seeds: range, m: int | None = None, max_resamples: int = 1_000_000) -> dict:
    params = ModelParams.fixed(n, k)
    if m is None:
        m = max(2, bounds.nu(params.alpha, n, NuMode.EXACT_SUM).floor())

    service = ConstructService()
    successes, resamples = 0, []
    for seed in tqdm(seeds, desc=f"n={n} k={k} m={m}", unit=" seeds"):
        result = service.moser_tardos(ConstructionConfig(params=params, m=m, seed=seed, max_resamples=max_resamples))
        if result.success:
            # исчерпывающая перепроверка каждого успеха
            if not is_gekr(result.array):
                raise RuntimeError(f"seed {seed}: result fails verification")
            successes += 1
            resamples.append(result.resamples)

    return {
        "m": m,
        "runs": len(seeds),
        "successes": successes,
        "mean_resamples": statistics.fmean(resamples) if resamples else None,
        "max_resamples": max(resamples) if resamples else None,
    }


if __name__ == "__main__":
    import argparse

    parser = argparse.ArgumentParser(description="Мозер–Тардош на диапазоне seed")
    parser.add_argument("--n", type=int, default=20)
    parser.add_argument("--k", type=int, default=14)
    parser.add_argument("--m", type=int, help="число строк (по умолчанию floor оценки по точной сумме)")
    parser.add_argument("--seeds", type=int, default=10, help="seed от 0 до seeds-1")
    parser.add_argument("--max-resamples", type=int, default=1_000_000)
    args = parser.parse_args()

    stats = sweep(args.n, args.k, range(args.seeds), args.m, args.max_resamples)
    print(f"\nm = {stats['m']}: {stats['successes']} of {stats['runs']} seeds succeeded")
    if stats["mean_resamples"] is not None:
        print(f"resamples: mean {stats['mean_resamples']:.1f}, max {stats['max_resamples']}\n")
