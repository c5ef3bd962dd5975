"""Batched integer arithmetic over Z[phi] on numpy arrays.

An array of elements ``p + q*phi`` is a pair of integer arrays.  Products run
in int64 when a magnitude bound proves no overflow is possible, and in
Python-integer object arrays otherwise, so results are always exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .golden import GoldenMatrix, GoldenScalar

_SAFE = 2**62


def _absmax(a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    return int(max(abs(int(a.max())), abs(int(a.min()))))


def _as_obj(a: np.ndarray) -> np.ndarray:
    return a.astype(object) if a.dtype != object else a


@dataclass(frozen=True)
class ZPhiArray:
    p: np.ndarray
    q: np.ndarray

    @classmethod
    def from_matrix(cls, m: GoldenMatrix) -> ZPhiArray:
        rows, cols = m.shape
        p = np.zeros((rows, cols), dtype=np.int64)
        q = np.zeros((rows, cols), dtype=np.int64)
        for i, r in enumerate(m.rows):
            for j, x in enumerate(r):
                p[i, j], q[i, j] = x.ints
        return cls(p, q)

    @classmethod
    def stack(cls, items: Sequence[ZPhiArray]) -> ZPhiArray:
        return cls(np.stack([a.p for a in items]), np.stack([a.q for a in items]))

    @property
    def shape(self) -> tuple[int, ...]:
        return self.p.shape

    @property
    def T(self) -> ZPhiArray:
        return ZPhiArray(np.swapaxes(self.p, -1, -2), np.swapaxes(self.q, -1, -2))

    def __add__(self, other: ZPhiArray) -> ZPhiArray:
        return ZPhiArray(self.p + other.p, self.q + other.q)

    def __sub__(self, other: ZPhiArray) -> ZPhiArray:
        return ZPhiArray(self.p - other.p, self.q - other.q)

    def __matmul__(self, other: ZPhiArray) -> ZPhiArray:
        k = self.p.shape[-1]
        bound = 3 * k * max(_absmax(self.p), _absmax(self.q), 1) * max(_absmax(other.p), _absmax(other.q), 1)
        if bound < _SAFE and self.p.dtype != object and other.p.dtype != object:
            ap, aq, bp, bq = self.p, self.q, other.p, other.q
        else:
            ap, aq, bp, bq = _as_obj(self.p), _as_obj(self.q), _as_obj(other.p), _as_obj(other.q)
        qq = aq @ bq
        return ZPhiArray(ap @ bp + qq, ap @ bq + aq @ bp + qq)

    def equals(self, other: ZPhiArray) -> np.ndarray:
        """Elementwise-over-leading-axes equality (reduces the last two axes)."""
        return np.all(self.p == other.p, axis=(-1, -2)) & np.all(self.q == other.q, axis=(-1, -2))

    def item(self, *idx: int) -> GoldenScalar:
        return GoldenScalar.from_ints(int(self.p[idx]), int(self.q[idx]))

    def to_matrix(self) -> GoldenMatrix:
        if self.p.ndim != 2:
            raise ValueError("to_matrix needs a 2-d array")
        return GoldenMatrix(
            [[GoldenScalar.from_ints(int(a), int(b)) for a, b in zip(rp, rq)] for rp, rq in zip(self.p, self.q)]
        )
