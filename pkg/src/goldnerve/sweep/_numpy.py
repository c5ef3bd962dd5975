"""Vectorized pair sweep: block matrix products plus an exact integer sign test.

Spatial dot products are formed with float64 matrix products; the caller
guarantees every partial sum stays below 2**52, so they are exact integers.
"""

from __future__ import annotations

import numpy as np

from ..golden import sign_ab


def sign_ab_array(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Elementwise sign of a + b*phi for int64 arrays."""
    u = 2 * a + b
    v = b
    su, sv = np.sign(u), np.sign(v)
    same = su * sv >= 0
    out = np.sign(su + sv)
    mixed = ~same
    if mixed.any():
        um, vm = u[mixed], v[mixed]
        diff = np.sign(um * um - 5 * vm * vm)
        out[mixed] = np.where(um > 0, diff, -diff)
    return out


def _first(mask: np.ndarray) -> tuple[int, int] | None:
    flat = np.flatnonzero(mask)
    if flat.size == 0:
        return None
    r, c = divmod(int(flat[0]), mask.shape[1])
    return r, c


class DenseTable:
    def __init__(self, xp: np.ndarray, xq: np.ndarray, sp: np.ndarray, sq: np.ndarray,
                 indptr: np.ndarray, indices: np.ndarray) -> None:
        self.xp = xp.astype(np.float64)
        self.xq = xq.astype(np.float64)
        self.sp = sp
        self.sq = sq
        self.indptr = indptr
        self.indices = indices


def sweep_rows(t: DenseTable, r0: int, r1: int, block: int = 256) -> tuple:
    N = t.sp.shape[0]
    n_adj = n_non = adj_fail = non_fail = 0
    first_adj = first_non = worst = None
    for b0 in range(r0, r1, block):
        b1 = min(b0 + block, r1)
        c0 = b0 + 1  # columns j > i >= b0
        if c0 >= N:
            break
        xp, xq = t.xp[b0:b1], t.xq[b0:b1]
        yp, yq = t.xp[c0:].T, t.xq[c0:].T
        pp, qq = xp @ yp, xq @ yq
        d1 = np.rint(pp + qq).astype(np.int64)
        d2 = np.rint(xp @ yq + xq @ yp + qq).astype(np.int64)
        spi, sqi = t.sp[b0:b1, None], t.sq[b0:b1, None]
        spj, sqj = t.sp[None, c0:], t.sq[None, c0:]
        P1 = spi * spj + sqi * sqj
        Q1 = spi * sqj + sqi * spj + sqi * sqj
        a = -Q1 + d1 + d2
        b = -P1 - Q1 + d1 + 2 * d2

        rows = np.arange(b0, b1)[:, None]
        cols = np.arange(c0, N)[None, :]
        upper = cols > rows
        adj = np.zeros(upper.shape, dtype=bool)
        for r in range(b0, b1):
            nb = t.indices[t.indptr[r]:t.indptr[r + 1]]
            nb = nb[nb >= c0] - c0
            adj[r - b0, nb] = True
        adj &= upper
        non = upper & ~adj

        n_adj += int(adj.sum())
        n_non += int(non.sum())
        bad_adj = adj & ((a != 0) | (b != 0))
        k = int(bad_adj.sum())
        if k:
            adj_fail += k
            if first_adj is None:
                r, c = _first(bad_adj)
                first_adj = (b0 + r, c0 + c, int(a[r, c]), int(b[r, c]))
        if non.any():
            bad_non = non & (sign_ab_array(a, b + 1) > 0)
            k = int(bad_non.sum())
            if k:
                non_fail += k
                if first_non is None:
                    r, c = _first(bad_non)
                    first_non = (b0 + r, c0 + c, int(a[r, c]), int(b[r, c]))
            # float pre-selection, exact refinement among near-maximal candidates
            approx = np.where(non, a + b * 1.618033988749895, -np.inf)
            top = approx.max()
            cand = np.argwhere(non & (approx >= top - 1e-6))
            for r, c in cand:  # row-major order, so ties keep the smallest pair
                va, vb = int(a[r, c]), int(b[r, c])
                if worst is None or _gt(va, vb, worst[2], worst[3]):
                    worst = (b0 + int(r), c0 + int(c), va, vb)
    return n_adj, n_non, adj_fail, first_adj, non_fail, first_non, worst


def _gt(a1: int, b1: int, a2: int, b2: int) -> bool:
    return sign_ab(a1 - a2, b1 - b2) > 0
