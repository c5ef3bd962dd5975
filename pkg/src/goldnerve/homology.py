"""Integral simplicial homology via Smith normal form.

Boundary matrices are reduced in two phases: sparse elimination on unit
pivots (which handles nearly everything for simplicial boundaries), then a
dense Smith normal form over Python integers on whatever is left.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .complex import SimplicialComplex


@dataclass(frozen=True)
class HomologyProfile:
    """Unreduced integral homology: per degree a Betti number and torsion factors."""

    betti: tuple[int, ...]
    torsion: tuple[tuple[int, ...], ...]

    def group(self, k: int) -> tuple[int, tuple[int, ...]]:
        if k >= len(self.betti):
            return 0, ()
        return self.betti[k], self.torsion[k]

    def is_trivial(self, k: int) -> bool:
        b, t = self.group(k)
        return b == 0 and not t

    def matches_sphere(self, d: int) -> bool:
        for k in range(max(len(self.betti), d + 1)):
            want = 1 if k in (0, d) else 0
            b, t = self.group(k)
            if b != want or t:
                return False
        return True

    def to_json(self) -> list[dict]:
        return [{"degree": k, "rank": b, "torsion": list(t)} for k, (b, t) in enumerate(zip(self.betti, self.torsion))]

    def __str__(self) -> str:
        parts = []
        for k, (b, t) in enumerate(zip(self.betti, self.torsion)):
            terms = []
            if b:
                terms.append("Z" if b == 1 else f"Z^{b}")
            terms += [f"Z/{m}" for m in t]
            parts.append(f"H{k}=" + (" + ".join(terms) if terms else "0"))
        return ", ".join(parts)


def boundary_columns(L: SimplicialComplex, k: int) -> list[dict[int, int]]:
    """Sparse columns of the boundary map C_k -> C_{k-1} (k >= 1)."""
    lower = {s: i for i, s in enumerate(L.faces(k - 1))}
    cols = []
    for s in L.faces(k):
        col = {}
        for pos in range(len(s)):
            col[lower[s[:pos] + s[pos + 1:]]] = -1 if pos % 2 else 1
        cols.append(col)
    return cols


def _dense_snf_diagonal(mat: list[list[int]]) -> list[int]:
    """Nonzero diagonal of a Smith form (not yet normalized into a divisor chain)."""
    a = [row[:] for row in mat]
    m = len(a)
    n = len(a[0]) if m else 0
    diag = []
    t = 0
    while t < m and t < n:
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = a[i][j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // p
                    if q:
                        a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                    if a[i][t]:
                        dirty = True
            for j in range(t + 1, n):
                if a[t][j]:
                    q = a[t][j] // p
                    if q:
                        for row in a:
                            row[j] -= q * row[t]
                    if a[t][j]:
                        dirty = True
            if not dirty:
                break
            # move a smaller remainder into the pivot position and retry
            best = None
            for i in range(t, m):
                if a[i][t] and (best is None or abs(a[i][t]) < best[0]):
                    best = (abs(a[i][t]), i, t)
            for j in range(t, n):
                if a[t][j] and (best is None or abs(a[t][j]) < best[0]):
                    best = (abs(a[t][j]), t, j)
            _, i, j = best
            a[t], a[i] = a[i], a[t]
            for row in a:
                row[t], row[j] = row[j], row[t]
        diag.append(abs(a[t][t]))
        t += 1
    return diag


def _divisor_chain(diag: list[int]) -> list[int]:
    d = sorted(diag)
    for i in range(len(d)):
        for j in range(i + 1, len(d)):
            g = gcd(d[i], d[j])
            if g:
                d[i], d[j] = g, d[i] * d[j] // g
    return sorted(d)


def elementary_divisors(cols: list[dict[int, int]]) -> tuple[int, list[int]]:
    """Rank and the invariant factors > 1 of a sparse integer matrix."""
    colmap: dict[int, dict[int, int]] = {c: dict(col) for c, col in enumerate(cols) if col}
    rowmap: dict[int, dict[int, int]] = {}
    for c, col in colmap.items():
        for r, v in col.items():
            rowmap.setdefault(r, {})[c] = v

    rank = 0
    progress = True
    while progress:
        progress = False
        for c in sorted(colmap, key=lambda c: len(colmap[c])):
            col = colmap.get(c)
            if not col:
                continue
            units = [r for r, v in col.items() if v in (1, -1)]
            if not units:
                continue
            r = min(units, key=lambda r: (len(rowmap[r]), r))
            u = col[r]
            prow = rowmap[r]
            for r2, v2 in list(col.items()):
                if r2 == r:
                    continue
                f = v2 * u
                row2 = rowmap[r2]
                for c3, v3 in prow.items():
                    nv = row2.get(c3, 0) - f * v3
                    if nv:
                        row2[c3] = nv
                        colmap[c3][r2] = nv
                    else:
                        row2.pop(c3, None)
                        colmap[c3].pop(r2, None)
                if not row2:
                    del rowmap[r2]
            for c3 in prow:
                colmap[c3].pop(r, None)
            del rowmap[r]
            del colmap[c]
            rank += 1
            progress = True
        colmap = {c: col for c, col in colmap.items() if col}

    if not colmap:
        return rank, []
    rows = sorted(rowmap)
    ri = {r: i for i, r in enumerate(rows)}
    cols_left = sorted(colmap)
    dense = [[0] * len(cols_left) for _ in rows]
    for j, c in enumerate(cols_left):
        for r, v in colmap[c].items():
            dense[ri[r]][j] = v
    diag = _dense_snf_diagonal(dense)
    chain = _divisor_chain(diag)
    return rank + len(chain), [d for d in chain if d > 1]


def homology(L: SimplicialComplex, max_degree: int | None = None) -> HomologyProfile:
    """Integral homology groups H_0 .. H_max (default: max(3, dim L))."""
    top = max(3, L.dimension) if max_degree is None else max_degree
    dims = [len(L.faces(k)) for k in range(top + 2)]
    ranks = [0] * (top + 2)  # ranks[k] = rank of boundary C_k -> C_{k-1}
    tors: list[list[int]] = [[] for _ in range(top + 2)]
    for k in range(1, top + 2):
        if dims[k] == 0:
            continue
        ranks[k], tors[k] = elementary_divisors(boundary_columns(L, k))
    betti = tuple(dims[k] - ranks[k] - ranks[k + 1] for k in range(top + 1))
    torsion = tuple(tuple(tors[k + 1]) for k in range(top + 1))
    return HomologyProfile(betti, torsion)


def cohomology(L: SimplicialComplex, max_degree: int | None = None) -> HomologyProfile:
    """Integral cohomology from homology by universal coefficients.

    H^k = Z^{b_k} + Tors(H_{k-1}).
    """
    h = homology(L, max_degree)
    torsion = tuple(() if k == 0 else h.torsion[k - 1] for k in range(len(h.betti)))
    return HomologyProfile(h.betti, torsion)


def cohomology_vanishes_from(L: SimplicialComplex, k0: int) -> bool:
    """True iff H^k(L; Z) = 0 for every k >= k0."""
    c = cohomology(L, max(L.dimension, k0))
    return all(c.is_trivial(k) for k in range(k0, len(c.betti)))
