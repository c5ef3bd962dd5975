"""Time the pairwise Gram sweep on each available backend.

    python3 benchmarks/bench_sweep.py                 # small corpus, every backend
    python3 benchmarks/bench_sweep.py --large         # adds poincare_16 (compiled + numpy only)
"""

from __future__ import annotations

import argparse
import time

from goldnerve.construct import assign_vectors
from goldnerve.corpus import corpus
from goldnerve.subdivide import dranishnikov_subdivide, ps_subdivide
from goldnerve.sweep import AVAILABLE, sweep


def prepare(name: str):
    L = corpus(name)
    sub = ps_subdivide(L) if L.dimension == 3 else dranishnikov_subdivide(L)
    return assign_vectors(sub).sweep_input()


def time_backend(data, backend: str, workers: int, repeat: int) -> tuple[float, object]:
    best, result = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = sweep(data, workers=workers, backend=backend)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--large", action="store_true", help="include poincare_16 (41.6M pairs)")
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    names = ["rp2_6", "torus_7", "dunce_hat_5", "sphere_3"] + (["poincare_16"] if args.large else [])
    print(f"backends available: {', '.join(AVAILABLE)}")
    print(f"{'input':<14}{'vertices':>9}{'pairs':>12}  {'backend':<8}{'seconds':>10}{'Mpairs/s':>10}  worst")
    for name in names:
        data = prepare(name)
        results = {}
        for backend in AVAILABLE:
            if backend == "python" and name == "poincare_16":
                continue
            secs, res = time_backend(data, backend, args.workers, 1 if name == "poincare_16" else args.repeat)
            results[backend] = res
            print(f"{name:<14}{data.size:>9}{res.pairs:>12}  {backend:<8}{secs:>10.4f}{res.pairs / secs / 1e6:>10.2f}"
                  f"  {res.worst[2:] if res.worst else None}")
        worst = {(r.ok, r.worst) for r in results.values()}
        assert len(worst) == 1, f"backends disagree on {name}: {worst}"


if __name__ == "__main__":
    main()
