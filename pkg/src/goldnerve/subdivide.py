"""Flag-no-square subdivisions of complexes of dimension at most 3.

Edges gain a midpoint, triangles are replaced by the 9-vertex triangle block
(the icosahedron minus a triangle), and tetrahedra by the 116-vertex block of
the 600-cell minus a tetrahedron.  Vertex labels encode their carrier:

    v[a]            the vertex a of L
    f[a,b]          midpoint of the edge ab
    f[a;b,c]        interior vertex of triangle abc next to corner a
    z[a,b,c,d]#p    interior vertex of tetrahedron abcd, 600-cell vertex p
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .complex import ComplexError, SimplicialComplex
from .polytope import BlockConstructionError, canonical_block


class SubdivisionError(ComplexError):
    pass


@dataclass(frozen=True)
class VertexInfo:
    carrier: tuple[str, ...]  # labels of the carrier simplex of L, in L's vertex order
    level: int
    role: str | int | None  # corner label (level 2) or 600-cell index (level 3)

    def to_json(self) -> dict:
        return {"carrier": list(self.carrier), "level": self.level, "role": self.role}


def vertex_label(carrier: tuple[str, ...], role: str | int | None = None) -> str:
    k = len(carrier)
    if k == 1:
        return f"v[{carrier[0]}]"
    if k == 2:
        return f"f[{carrier[0]},{carrier[1]}]"
    if k == 3:
        others = [c for c in carrier if c != role]
        return f"f[{role};{others[0]},{others[1]}]"
    return f"z[{','.join(carrier)}]#{role}"


# Triangle block on corners (a, b, c): slot 0..2 are corners, ("m", i, j) midpoints,
# ("F", i) the interior vertex next to corner i.
def _triangle_template() -> list[tuple]:
    tris = []
    for i, j, k in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        mij, mik = ("m",) + tuple(sorted((i, j))), ("m",) + tuple(sorted((i, k)))
        tris.append((i, mij, ("F", i)))
        tris.append((i, ("F", i), mik))
        tris.append((("F", i), ("F", j), mij))
    tris.append((("F", 0), ("F", 1), ("F", 2)))
    return tris


TRIANGLE_TEMPLATE = tuple(_triangle_template())


@dataclass(frozen=True)
class SubdivisionMap:
    source: SimplicialComplex
    target: SimplicialComplex
    info: tuple[VertexInfo, ...]  # indexed like target.vertices

    def level_counts(self) -> dict[int, int]:
        out = {k: 0 for k in range(4)}
        for v in self.info:
            out[v.level] += 1
        return out

    def vertices_carried_by(self, labels: set[str]) -> list[str]:
        return [t for t, v in zip(self.target.vertices, self.info) if set(v.carrier) <= labels]

    def annotations(self) -> dict[str, dict]:
        return {t: v.to_json() for t, v in zip(self.target.vertices, self.info)}

    def to_json(self) -> dict:
        data = self.target.to_json()
        data["annotations"] = self.annotations()
        data["source"] = self.source.name
        return data


def _block_face_check() -> None:
    """The block's boundary restricted to each face must be the triangle template."""
    block = canonical_block()
    for face in combinations(range(4), 3):
        name = {}
        for b in block.vertices:
            if b.level <= 2 and set(b.slots) <= set(face):
                if b.level == 0:
                    key = face.index(b.slots[0])
                elif b.level == 1:
                    key = ("m",) + tuple(sorted(face.index(s) for s in b.slots))
                else:
                    key = ("F", face.index(b.role))
                name[str(b.cell_index)] = key
        sub = block.complex.full_subcomplex(name)
        got = {frozenset(name[x] for x in sub.labels_of(f)) for f in sub.facets}
        want = {frozenset(t) for t in TRIANGLE_TEMPLATE}
        if got != want:
            raise BlockConstructionError(f"block face {face} does not match the triangle block")


@lru_cache(maxsize=1)
def _checked_block():
    _block_face_check()
    return canonical_block()


def _subdivide(L: SimplicialComplex, max_dim: int) -> SubdivisionMap:
    if L.dimension > max_dim:
        raise SubdivisionError(f"subdivision needs dimension <= {max_dim}, got {L.dimension}")
    labels: list[str] = []
    info: list[VertexInfo] = []

    def add(carrier: tuple[str, ...], level: int, role=None) -> str:
        lab = vertex_label(carrier, role)
        labels.append(lab)
        info.append(VertexInfo(carrier, level, role))
        return lab

    simplices: list[list[str]] = []
    V = L.vertices
    corner = [add((v,), 0) for v in V]
    mid: dict[tuple[int, int], str] = {}
    for e in L.faces(1):
        mid[e] = add(L.labels_of(e), 1)
    in_triangle = {e for t in L.faces(2) for e in combinations(t, 2)} if L.dimension >= 2 else set()
    for v in range(L.n_vertices):
        if not L.adjacency[v]:
            simplices.append([corner[v]])
    for e, m in mid.items():
        if e not in in_triangle:
            simplices.append([corner[e[0]], m])
            simplices.append([m, corner[e[1]]])

    for t in (L.faces(2) if L.dimension >= 2 else []):
        carrier = L.labels_of(t)
        inner = {("F", s): add(carrier, 2, carrier[s]) for s in range(3)}
        names = {s: corner[t[s]] for s in range(3)}
        names.update({("m", i, j): mid[(t[i], t[j])] for i, j in combinations(range(3), 2)})
        names.update(inner)
        for tri in TRIANGLE_TEMPLATE:
            simplices.append([names[x] for x in tri])

    if L.dimension == 3:
        block = _checked_block()
        index = {lab: i for i, lab in enumerate(labels)}
        for tet in L.faces(3):
            carrier = L.labels_of(tet)
            names = {}
            for b in block.vertices:
                if b.level == 3:
                    names[str(b.cell_index)] = add(carrier, 3, b.cell_index)
                    continue
                sub = tuple(carrier[s] for s in b.slots)
                role = carrier[b.role] if b.role is not None else None
                lab = vertex_label(sub, role)
                if lab not in index:
                    raise SubdivisionError(f"block boundary vertex {lab} is missing from the 2-skeleton")
                names[str(b.cell_index)] = lab
            for f in block.complex.facets:
                simplices.append([names[x] for x in block.complex.labels_of(f)])

    target = SimplicialComplex(simplices, labels, name=f"{L.name}#" if L.name else "", max_dim=None)
    return SubdivisionMap(L, target, tuple(info))


def dranishnikov_subdivide(L: SimplicialComplex) -> SubdivisionMap:
    """Midpoints on edges and the 9-vertex triangle block on each triangle (dim <= 2)."""
    return _subdivide(L, 2)


def ps_subdivide(L: SimplicialComplex) -> SubdivisionMap:
    """The 2-skeleton subdivision plus the 116-vertex 600-cell block on each tetrahedron."""
    return _subdivide(L, 3)
