"""Exhaustive pairwise Gram sweep with a compiled kernel and Python fallbacks.

Backends, chosen at import (override with ``GOLDNERVE_SWEEP=cython|numpy|python``):

* ``cython``: int64 sparse merge per pair, GIL released, so threads scale;
* ``numpy``: block matrix products with an exact vectorized sign test;
* ``python``: plain Python integers, used as oracle and whenever the int64
  magnitude guard fails.

Rows are cut into contiguous ranges; results are reduced in range order, so
the report (first failures, worst value and its pair) is the same for any
worker count.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ..golden import sign_ab
from . import _numpy, _reference

try:
    from . import _sweep as _compiled
except ImportError:  # extension not built
    _compiled = None

AVAILABLE = tuple(b for b, ok in (("cython", _compiled is not None), ("numpy", True), ("python", True)) if ok)
_env = os.environ.get("GOLDNERVE_SWEEP", "").strip().lower()
if _env and _env not in AVAILABLE:
    raise ImportError(f"GOLDNERVE_SWEEP={_env!r} is not available; have {AVAILABLE}")
DEFAULT_BACKEND = _env or AVAILABLE[0]

# (6 + 9w) M^2 below this keeps every intermediate of the sign test inside int64
_GUARD = 2**28


@dataclass(frozen=True)
class SweepResult:
    pairs: int
    adjacent: int
    non_adjacent: int
    adjacent_failures: int
    first_adjacent_failure: tuple[int, int, int, int] | None  # (i, j, a, b): value a + b*phi
    non_adjacent_failures: int
    first_non_adjacent_failure: tuple[int, int, int, int] | None
    worst: tuple[int, int, int, int] | None  # largest non-adjacent value
    backend: str

    @property
    def ok(self) -> bool:
        return self.adjacent_failures == 0 and self.non_adjacent_failures == 0


@dataclass
class SweepInput:
    """Sparse spacelike coordinates, coefficient sums and CSR adjacency."""

    rows: list[dict[int, tuple[int, int]]]
    sums: list[tuple[int, int]]
    adj: Sequence[frozenset[int]]
    n: int

    @property
    def size(self) -> int:
        return len(self.rows)

    def magnitude(self) -> int:
        m = 0
        for r in self.rows:
            for p, q in r.values():
                m = max(m, abs(p), abs(q))
        for p, q in self.sums:
            m = max(m, abs(p), abs(q))
        return m

    def width(self) -> int:
        return max([len(r) for r in self.rows] + [1])

    def fits_int64(self) -> bool:
        M = self.magnitude()
        return (6 + 9 * self.width()) * M * M < _GUARD

    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        indptr = np.zeros(self.size + 1, dtype=np.int64)
        for i, nb in enumerate(self.adj):
            indptr[i + 1] = indptr[i] + len(nb)
        indices = np.fromiter((j for nb in self.adj for j in sorted(nb)), dtype=np.int64, count=int(indptr[-1]))
        return indptr, indices

    def padded(self) -> tuple[np.ndarray, ...]:
        N, w = self.size, self.width()
        idx = np.full((N, w), -1, dtype=np.int64)
        vp = np.zeros((N, w), dtype=np.int64)
        vq = np.zeros((N, w), dtype=np.int64)
        nnz = np.zeros(N, dtype=np.int64)
        for r, row in enumerate(self.rows):
            nnz[r] = len(row)
            for k, i in enumerate(sorted(row)):
                idx[r, k] = i
                vp[r, k], vq[r, k] = row[i]
        sp = np.array([s[0] for s in self.sums], dtype=np.int64)
        sq = np.array([s[1] for s in self.sums], dtype=np.int64)
        return idx, vp, vq, nnz, sp, sq

    def dense(self) -> tuple[np.ndarray, np.ndarray]:
        xp = np.zeros((self.size, self.n), dtype=np.int64)
        xq = np.zeros((self.size, self.n), dtype=np.int64)
        for r, row in enumerate(self.rows):
            for i, (p, q) in row.items():
                xp[r, i], xq[r, i] = p, q
        return xp, xq


def row_ranges(N: int, chunks: int) -> list[tuple[int, int]]:
    """Contiguous row ranges holding roughly equal numbers of pairs (i < j)."""
    total = N * (N - 1) // 2
    if N < 2 or chunks <= 1:
        return [(0, N)]
    out, start, acc = [], 0, 0
    target = total / chunks
    for i in range(N):
        acc += N - 1 - i
        if acc >= target * (len(out) + 1) and len(out) < chunks - 1:
            out.append((start, i + 1))
            start = i + 1
    out.append((start, N))
    return [r for r in out if r[0] < r[1]]


def _reduce(parts: list[tuple], backend: str, N: int) -> SweepResult:
    n_adj = n_non = adj_fail = non_fail = 0
    first_adj = first_non = worst = None
    for pa, pn, af, fa, nf, fn, w in parts:  # parts are in row order
        n_adj += pa
        n_non += pn
        adj_fail += af
        non_fail += nf
        first_adj = first_adj or fa
        first_non = first_non or fn
        if w is not None and (worst is None or sign_ab(w[2] - worst[2], w[3] - worst[3]) > 0):
            worst = w
    return SweepResult(N * (N - 1) // 2, n_adj, n_non, adj_fail, first_adj, non_fail, first_non,
                       worst, backend)


def sweep(data: SweepInput, workers: int = 1, backend: str | None = None, chunks: int | None = None) -> SweepResult:
    """Classify every unordered pair as adjacent (needs 0) or not (needs <= -phi)."""
    if workers < 1:
        raise ValueError("workers must be >= 1")
    backend = backend or DEFAULT_BACKEND
    if backend not in AVAILABLE:
        raise ValueError(f"backend {backend!r} not available; have {AVAILABLE}")
    if backend != "python" and not data.fits_int64():
        backend = "python"
    N = data.size
    ranges = row_ranges(N, chunks if chunks is not None else max(1, workers * 4))

    if backend == "cython":
        idx, vp, vq, nnz, sp, sq = data.padded()
        indptr, indices = data.csr()

        def run(r: tuple[int, int]) -> tuple:
            return _compiled.sweep_rows(idx, vp, vq, nnz, sp, sq, indptr, indices, r[0], r[1])
    elif backend == "numpy":
        xp, xq = data.dense()
        sp = np.array([s[0] for s in data.sums], dtype=np.int64)
        sq = np.array([s[1] for s in data.sums], dtype=np.int64)
        indptr, indices = data.csr()
        table = _numpy.DenseTable(xp, xq, sp, sq, indptr, indices)

        def run(r: tuple[int, int]) -> tuple:
            return _numpy.sweep_rows(table, r[0], r[1])
    else:
        def run(r: tuple[int, int]) -> tuple:
            return _reference.sweep_rows(data.rows, data.sums, data.adj, r[0], r[1])

    if workers == 1 or len(ranges) == 1:
        parts = [run(r) for r in ranges]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(run, ranges))
    return _reduce(parts, backend, N)
