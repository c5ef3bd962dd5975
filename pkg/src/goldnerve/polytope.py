"""Exact golden coordinates for the icosahedron and the 600-cell, the matrix g,
and the canonical 116-vertex tetrahedron block cut out of the 600-cell.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product

from .complex import SimplicialComplex
from .golden import HALF, ONE, PHI, ZERO, GoldenMatrix, GoldenVector, gs


class BlockConstructionError(RuntimeError):
    """The 600-cell/g correspondence produced something inconsistent."""


def _even(perm: tuple[int, ...]) -> bool:
    inv = sum(1 for a in range(len(perm)) for b in range(a + 1, len(perm)) if perm[a] > perm[b])
    return inv % 2 == 0


def _flag_facets(adj: list[set[int]], top: int) -> list[tuple[int, ...]]:
    """Every clique of at most ``top`` vertices; the complex keeps the maximal ones."""
    out: list[tuple[int, ...]] = []

    def grow(clique: tuple[int, ...], cand: set[int]) -> None:
        out.append(clique)
        if len(clique) == top:
            return
        for w in sorted(cand):
            if w > clique[-1]:
                grow(clique + (w,), cand & adj[w])

    for v in range(len(adj)):
        grow((v,), set(adj[v]))
    return out


@dataclass(frozen=True)
class Polytope600:
    vertices: tuple[GoldenVector, ...]
    edges: tuple[tuple[int, int], ...]
    complex: SimplicialComplex

    @property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        return self.complex.adjacency


EDGE_DOT = PHI * HALF


def six_hundred_cell_vertices() -> list[GoldenVector]:
    """The 120 unit vectors: 8 of type +-e_i, 16 of type (+-1/2)^4, 96 even permutations."""
    verts: list[GoldenVector] = []
    for i in range(4):
        for s in (1, -1):
            c = [ZERO] * 4
            c[i] = gs(s)
            verts.append(GoldenVector(c))
    for signs in product((1, -1), repeat=4):
        verts.append(GoldenVector(HALF * s for s in signs))
    base = (PHI * HALF, HALF, (PHI - 1) * HALF)
    seen: set[GoldenVector] = set()
    for perm in filter(_even, permutations(range(4))):
        for signs in product((1, -1), repeat=3):
            c = [ZERO] * 4
            for k in range(3):
                c[perm[k]] = base[k] * signs[k]
            v = GoldenVector(c)
            if v not in seen:
                seen.add(v)
                verts.append(v)
    return verts


@lru_cache(maxsize=1)
def generate_600cell() -> Polytope600:
    verts = six_hundred_cell_vertices()
    n = len(verts)
    adj: list[set[int]] = [set() for _ in range(n)]
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if verts[i].dot(verts[j]) == EDGE_DOT:
                adj[i].add(j)
                adj[j].add(i)
                edges.append((i, j))
    labels = [str(i) for i in range(n)]
    K = SimplicialComplex([[labels[v] for v in c] for c in _flag_facets(adj, 5)], labels,
                          name="600-cell", max_dim=None)
    return Polytope600(tuple(verts), tuple(edges), K)


@lru_cache(maxsize=1)
def generate_icosahedron() -> SimplicialComplex:
    """Icosahedron on the 12 cyclic permutations of (0, +-1, +-phi); edges at dot product phi."""
    verts = []
    for s1, s2 in product((1, -1), repeat=2):
        base = (ZERO, gs(s1), PHI * s2)
        for r in range(3):
            verts.append(GoldenVector(base[(k - r) % 3] for k in range(3)))
    adj: list[set[int]] = [set() for _ in verts]
    for i in range(len(verts)):
        for j in range(i + 1, len(verts)):
            if verts[i].dot(verts[j]) == PHI:
                adj[i].add(j)
                adj[j].add(i)
    labels = [str(i + 1) for i in range(len(verts))]
    return SimplicialComplex([[labels[v] for v in c] for c in _flag_facets(adj, 4)], labels,
                             name="icosahedron")


# the matrix g and the 600-cell -> Lorentz correspondence

def bn_matrix(n: int) -> GoldenMatrix:
    return GoldenMatrix([[ONE if i == j and i < n else -PHI for j in range(n + 1)] for i in range(n + 1)])


@dataclass(frozen=True)
class GMatrix:
    g: GoldenMatrix
    inverse: GoldenMatrix
    gram: GoldenMatrix  # g^T B_4 g


@lru_cache(maxsize=1)
def build_g() -> GMatrix:
    one, p = ONE, PHI
    g = GoldenMatrix([
        [-p, -one, one - p, ZERO, p],
        [-p, -one, p - one, ZERO, p],
        [-one, -p, ZERO, one - p, p],
        [-one, -p, ZERO, p - one, p],
        [gs(2), gs(2), ZERO, ZERO, one - 2 * p],
    ])
    B4 = bn_matrix(4)
    D = g.T @ B4 @ g
    if D != GoldenMatrix.diagonal([2, 2, 2, 2, -p]):
        raise BlockConstructionError(f"g^T B_4 g is not diag(2,2,2,2,-phi): {D}")
    Dinv = GoldenMatrix.diagonal([D[i, i].inverse() for i in range(5)])
    return GMatrix(g, Dinv @ g.T @ B4, D)


def lorentz_image(z: GoldenVector) -> GoldenVector:
    """x_p = phi * g * (z_p, 1)."""
    return (build_g().g @ GoldenVector(list(z) + [ONE])).scale(PHI)


def tau_corner(m: int) -> GoldenVector:
    """(phi - 1)(e_5 - e_m) for slot m in 0..3."""
    c = [ZERO] * 5
    c[m] = ONE - PHI
    c[4] = PHI - ONE
    return GoldenVector(c)


@dataclass(frozen=True)
class BlockVertex:
    cell_index: int  # index into the 600-cell vertex list
    level: int
    slots: tuple[int, ...]  # carrier face of the tetrahedron, as slot indices 0..3
    role: int | None  # distinguished slot for level 2
    vector: GoldenVector  # 5 coefficients: slots 0..3 then the timelike one


@dataclass(frozen=True)
class TetraBlock:
    """The full subcomplex of the 600-cell off a tetrahedron tau, with its Lorentz vectors."""

    tau: tuple[int, int, int, int]  # tau[m] is the cell vertex sent to tau_corner(m)
    vertices: tuple[BlockVertex, ...]
    complex: SimplicialComplex  # labels are 600-cell indices as strings

    def by_level(self, level: int) -> list[BlockVertex]:
        return [b for b in self.vertices if b.level == level]


def boundary_vector(slots: tuple[int, ...], role: int | None) -> GoldenVector:
    """Level-0/1/2 vectors in slot coordinates."""
    c = [ZERO] * 5
    if len(slots) == 1:
        c[slots[0]] = ONE
    elif len(slots) == 2:
        c[slots[0]] = c[slots[1]] = ONE
        c[4] = PHI - 2
    elif len(slots) == 3:
        for s in slots:
            c[s] = PHI if s == role else ONE
        c[4] = -ONE
    else:
        raise ValueError("boundary vectors live on faces of dimension <= 2")
    return GoldenVector(c)


@lru_cache(maxsize=1)
def canonical_block() -> TetraBlock:
    cell = generate_600cell()
    images = [lorentz_image(z) for z in cell.vertices]
    tau = []
    for m in range(4):
        hits = [p for p, x in enumerate(images) if x == tau_corner(m)]
        if len(hits) != 1:
            raise BlockConstructionError(f"tau corner {m} matched {len(hits)} cell vertices")
        tau.append(hits[0])
    adj = cell.adjacency
    if any(b not in adj[a] for a in tau for b in tau if a != b):
        raise BlockConstructionError("the four tau vertices are not pairwise adjacent")

    verts = []
    for p, x in enumerate(images):
        if p in tau:
            continue
        if not x.is_integral():
            raise BlockConstructionError(f"x_{p} = {x} is not integral")
        slots = tuple(s for s in range(4) if not x[s].is_zero())
        level = len(slots) - 1
        role = None
        if level == 2:
            roles = [s for s in slots if x[s] == PHI]
            if len(roles) != 1:
                raise BlockConstructionError(f"level-2 vector {x} has no unique phi slot")
            role = roles[0]
        if level <= 2 and x != boundary_vector(slots, role):
            raise BlockConstructionError(f"boundary vector {x} disagrees with the face formula")
        verts.append(BlockVertex(p, level, slots, role, x))
    K = cell.complex.full_subcomplex([str(b.cell_index) for b in verts], name="block116")
    return TetraBlock(tuple(tau), tuple(verts), K)
