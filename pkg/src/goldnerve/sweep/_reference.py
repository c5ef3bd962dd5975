"""Pure-Python pair sweep on Python integers; the oracle and the overflow fallback."""

from __future__ import annotations

from typing import Sequence

from ..golden import sign_ab


def sweep_rows(rows: Sequence[dict[int, tuple[int, int]]], sums: Sequence[tuple[int, int]],
               adj: Sequence[frozenset[int]], r0: int, r1: int) -> tuple:
    """Same contract as the compiled kernel, over dict-of-coordinates rows."""
    N = len(rows)
    n_adj = n_non = adj_fail = non_fail = 0
    first_adj = first_non = worst = None
    for i in range(r0, r1):
        ri, (spi, sqi) = rows[i], sums[i]
        nb = adj[i]
        for j in range(i + 1, N):
            rj, (spj, sqj) = rows[j], sums[j]
            if len(rj) < len(ri):
                small, big = rj, ri
            else:
                small, big = ri, rj
            d1 = d2 = 0
            for k, (p1, q1) in small.items():
                other = big.get(k)
                if other is not None:
                    p2, q2 = other
                    d1 += p1 * p2 + q1 * q2
                    d2 += p1 * q2 + q1 * p2 + q1 * q2
            P1 = spi * spj + sqi * sqj
            Q1 = spi * sqj + sqi * spj + sqi * sqj
            a = -Q1 + d1 + d2
            b = -P1 - Q1 + d1 + 2 * d2
            if j in nb:
                n_adj += 1
                if a or b:
                    adj_fail += 1
                    if first_adj is None:
                        first_adj = (i, j, a, b)
            else:
                n_non += 1
                if sign_ab(a, b + 1) > 0:
                    non_fail += 1
                    if first_non is None:
                        first_non = (i, j, a, b)
                if worst is None or sign_ab(a - worst[2], b - worst[3]) > 0:
                    worst = (i, j, a, b)
    return n_adj, n_non, adj_fail, first_adj, non_fail, first_non, worst
