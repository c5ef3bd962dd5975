"""The Lorentzian form B_n, vectors for the vertices of L#, and reflection generators.

``B_n`` has 1 on the first n diagonal entries and -phi everywhere else, so

    x^T B_n y = -phi * S(x) S(y) + (1 + phi) * sum_{i<n} x_i y_i

with ``S`` the coefficient sum.  Every assigned vector has at most four
nonzero spacelike coordinates, which makes a pairwise inner product O(1).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

import numpy as np

from .golden import ONE, PHI, ZERO, GoldenMatrix, GoldenScalar, GoldenVector, dot_with_form
from .polytope import BlockConstructionError, GMatrix, bn_matrix, build_g, canonical_block
from .subdivide import SubdivisionMap, vertex_label
from .sweep import SweepInput
from .zphi import ZPhiArray

__all__ = [
    "LorentzForm", "bn_form", "VectorAssignment", "assign_vectors", "ReflectionGenerators",
    "reflection_generators", "build_g", "GMatrix", "inner_ab",
]

ONE_PLUS_PHI = ONE + PHI


@dataclass(frozen=True)
class LorentzForm:
    n: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError(f"B_n needs n >= 2, got {self.n}")

    @property
    def dim(self) -> int:
        return self.n + 1

    @cached_property
    def matrix(self) -> GoldenMatrix:
        return bn_matrix(self.n)

    def inner(self, x: GoldenVector, y: GoldenVector) -> GoldenScalar:
        """Fast exact ``x^T B_n y`` via the rank-one decomposition."""
        if len(x) != self.dim or len(y) != self.dim:
            raise ValueError(f"vectors must have length {self.dim}")
        spatial = ZERO
        for a, b in zip(x.coords[: self.n], y.coords[: self.n]):
            if not a.is_zero() and not b.is_zero():
                spatial = spatial + a * b
        return ONE_PLUS_PHI * spatial - PHI * x.coefficient_sum() * y.coefficient_sum()

    def inner_dense(self, x: GoldenVector, y: GoldenVector) -> GoldenScalar:
        return dot_with_form(x, self.matrix, y)

    def conjugate_matrix(self) -> GoldenMatrix:
        return self.matrix.conjugate()


def bn_form(n: int) -> LorentzForm:
    return LorentzForm(n)


def inner_ab(sp1: int, sq1: int, sp2: int, sq2: int, d1: int, d2: int) -> tuple[int, int]:
    """Integer form of the fast inner product.

    With ``S(x) = sp1 + sq1*phi``, ``S(y) = sp2 + sq2*phi`` and the spatial dot
    product ``d1 + d2*phi``, returns ``(a, b)`` with ``x^T B y = a + b*phi``.
    """
    P1 = sp1 * sp2 + sq1 * sq2
    Q1 = sp1 * sq2 + sq1 * sp2 + sq1 * sq2
    return -Q1 + d1 + d2, -P1 - Q1 + d1 + 2 * d2


@dataclass
class VectorAssignment:
    form: LorentzForm
    subdivision: SubdivisionMap
    vectors: list[GoldenVector]
    sums: list[GoldenScalar] = field(default_factory=list)

    def __post_init__(self) -> None:
        if not self.sums:
            self.sums = [v.coefficient_sum() for v in self.vectors]

    @property
    def labels(self) -> tuple[str, ...]:
        return self.subdivision.target.vertices

    def __len__(self) -> int:
        return len(self.vectors)

    def vector(self, label: str) -> GoldenVector:
        return self.vectors[self.subdivision.target.index[label]]

    def inner(self, i: int, j: int) -> GoldenScalar:
        return self.form.inner(self.vectors[i], self.vectors[j])

    def with_vector(self, i: int, v: GoldenVector) -> VectorAssignment:
        """Copy with vertex ``i`` reassigned (used for fault injection)."""
        vecs = list(self.vectors)
        vecs[i] = v
        return VectorAssignment(self.form, self.subdivision, vecs)

    def sweep_input(self) -> SweepInput:
        n = self.form.n
        rows = [{i: c.ints for i, c in enumerate(v.coords[:n]) if not c.is_zero()} for v in self.vectors]
        return SweepInput(rows, [s.ints for s in self.sums], self.subdivision.target.adjacency, n)

    def dense_arrays(self) -> ZPhiArray:
        """(N, n+1) integer arrays of all coordinates."""
        N, d = len(self.vectors), self.form.dim
        p = np.zeros((N, d), dtype=np.int64)
        q = np.zeros((N, d), dtype=np.int64)
        for r, v in enumerate(self.vectors):
            for i, c in enumerate(v.coords):
                if not c.is_zero():
                    p[r, i], q[r, i] = c.ints
        return ZPhiArray(p, q)

    def to_json(self) -> list[dict]:
        out = []
        for lab, info, v in zip(self.labels, self.subdivision.info, self.vectors):
            out.append({"label": lab, "carrier": list(info.carrier), "level": info.level,
                        "vector": v.to_json()})
        return out


def _embed(block_vec: GoldenVector, coords: Sequence[int], n: int) -> GoldenVector:
    c = [ZERO] * (n + 1)
    for s in range(4):
        c[coords[s]] = block_vec[s]
    c[n] = block_vec[4]
    return GoldenVector(c)


def _face_vector(coords: Sequence[int], role: int | None, n: int) -> GoldenVector:
    c = [ZERO] * (n + 1)
    if len(coords) == 1:
        c[coords[0]] = ONE
    elif len(coords) == 2:
        c[coords[0]] = c[coords[1]] = ONE
        c[n] = PHI - 2
    else:
        for i in coords:
            c[i] = PHI if i == role else ONE
        c[n] = -ONE
    return GoldenVector(c)


def assign_vectors(sub: SubdivisionMap, n: int | None = None) -> VectorAssignment:
    """Vectors for every vertex of L#, in the ambient space of B_n.

    Faces of dimension <= 2 get the closed-form vectors; the interior of each
    tetrahedron gets x_p = phi * g * (z_p, 1) placed on its four coordinates.
    Boundary vectors of every block are recomputed the same way and must
    agree with the closed forms.
    """
    L = sub.source
    n = L.n_vertices if n is None else n
    if n < L.n_vertices:
        raise ValueError(f"n = {n} is smaller than the {L.n_vertices} vertices of L")
    form = LorentzForm(n)
    block = canonical_block() if L.dimension == 3 else None
    block_vec = {b.cell_index: b for b in block.vertices} if block else {}
    vecs = []
    for info in sub.info:
        coords = [L.index[c] for c in info.carrier]
        if info.level <= 2:
            role = L.index[info.role] if info.level == 2 else None
            vecs.append(_face_vector(coords, role, n))
        else:
            vecs.append(_embed(block_vec[info.role].vector, coords, n))

    if block is not None:
        target = sub.target
        for t in L.faces(3):
            for b in block.vertices:
                if b.level == 3:
                    continue
                coords = [t[s] for s in b.slots]
                role = t[b.role] if b.role is not None else None
                expect = _embed(b.vector, t, n)
                lab = vertex_label(tuple(L.vertices[i] for i in coords),
                                   L.vertices[role] if role is not None else None)
                if vecs[target.index[lab]] != expect:
                    raise BlockConstructionError(f"gluing mismatch at {lab} in tetrahedron {L.labels_of(t)}")
    for v in vecs:
        if not v.is_integral():
            raise BlockConstructionError(f"non-integral vector {v}")
    return VectorAssignment(form, sub, vecs)


@dataclass
class ReflectionGenerators:
    """R_v = I - 2 x_v (x_v^T B_n), stored as a stacked integer array over Z[phi]."""

    form: LorentzForm
    labels: tuple[str, ...]
    matrices: ZPhiArray  # (N, n+1, n+1)
    commuting_pairs: list[tuple[int, int]]

    def matrix(self, i: int) -> GoldenMatrix:
        return ZPhiArray(self.matrices.p[i], self.matrices.q[i]).to_matrix()

    def to_json(self) -> list[dict]:
        return [{"label": lab, "matrix": self.matrix(i).to_json()} for i, lab in enumerate(self.labels)]


def reflection_generators(assign: VectorAssignment) -> ReflectionGenerators:
    """Reflections in the B_n-orthogonal hyperplanes of the unit vectors x_v.

    For a unit vector the reflection is x -> x - 2 (x^T B x_v) x_v; without the
    factor 2 the map would be a projection.
    """
    n = assign.form.n
    X = assign.dense_arrays()  # (N, d)
    B = ZPhiArray.from_matrix(assign.form.matrix)
    XB = X @ B  # rows x^T B (B symmetric)
    col = ZPhiArray(X.p[:, :, None], X.q[:, :, None])
    row = ZPhiArray(XB.p[:, None, :], XB.q[:, None, :])
    outer = col @ row  # (N, d, d)
    eye = np.eye(n + 1, dtype=np.int64)
    R = ZPhiArray(eye[None, :, :] - 2 * outer.p, -2 * outer.q)
    return ReflectionGenerators(assign.form, assign.labels, R, list(assign.subdivision.target.edges()))


def gram_matrix(assign: VectorAssignment) -> GoldenMatrix:
    N = len(assign)
    rows = [[assign.inner(i, j) for j in range(N)] for i in range(N)]
    return GoldenMatrix(rows)
