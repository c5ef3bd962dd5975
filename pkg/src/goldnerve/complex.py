"""Finite abstract simplicial complexes.

Vertex labels are strings; internally every algorithm runs on dense integer
indices, and simplices are sorted index tuples.
"""

from __future__ import annotations

import json
from collections import defaultdict, deque
from functools import cached_property
from itertools import combinations
from pathlib import Path
from typing import Iterable, Sequence

MAX_PIPELINE_DIM = 3


class ComplexError(ValueError):
    """Invalid complex input or query."""


def _maximal(simplices: Iterable[tuple[int, ...]]) -> list[tuple[int, ...]]:
    by_size = sorted(set(simplices), key=lambda s: (-len(s), s))
    covered: set[tuple[int, ...]] = set()
    out = []
    for s in by_size:
        if s in covered:
            continue
        out.append(s)
        for k in range(1, len(s)):
            covered.update(combinations(s, k))
    out.sort(key=lambda s: (len(s), s))
    return out


class SimplicialComplex:
    """Immutable simplicial complex given by its maximal simplices."""

    def __init__(
        self,
        maximal_simplices: Iterable[Sequence[object]],
        vertices: Sequence[object] | None = None,
        *,
        name: str = "",
        tags: dict | None = None,
        max_dim: int | None = MAX_PIPELINE_DIM,
    ) -> None:
        simplices = [[str(v) for v in s] for s in maximal_simplices]
        if not simplices or any(len(s) == 0 for s in simplices):
            raise ComplexError("a complex needs at least one nonempty simplex")
        if vertices is None:
            seen: dict[str, None] = {}
            for s in simplices:
                for v in s:
                    seen.setdefault(v, None)
            labels = list(seen)
        else:
            labels = [str(v) for v in vertices]
            if len(set(labels)) != len(labels):
                raise ComplexError("duplicate vertex labels")
        index = {v: i for i, v in enumerate(labels)}
        idx_simplices = []
        for s in simplices:
            if len(set(s)) != len(s):
                raise ComplexError(f"simplex {s} repeats a vertex")
            try:
                idx_simplices.append(tuple(sorted(index[v] for v in s)))
            except KeyError as exc:
                raise ComplexError(f"simplex {s} uses unknown vertex {exc.args[0]!r}") from None
        self.vertices: tuple[str, ...] = tuple(labels)
        self.index: dict[str, int] = index
        self.facets: tuple[tuple[int, ...], ...] = tuple(_maximal(idx_simplices))
        used = {v for f in self.facets for v in f}
        if len(used) != len(labels):
            missing = [labels[i] for i in range(len(labels)) if i not in used]
            raise ComplexError(f"vertices {missing} lie in no simplex")
        self.name = name
        self.tags = dict(tags or {})
        if max_dim is not None and self.dimension > max_dim:
            raise ComplexError(f"dimension {self.dimension} exceeds the supported maximum {max_dim}")

    # basic structure

    @classmethod
    def _from_indices(cls, labels: Sequence[str], facets: Iterable[tuple[int, ...]], name: str = "",
                      tags: dict | None = None) -> SimplicialComplex:
        return cls([[labels[i] for i in f] for f in facets], labels, name=name, tags=tags, max_dim=None)

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @cached_property
    def dimension(self) -> int:
        return max(len(f) for f in self.facets) - 1

    @cached_property
    def _faces(self) -> list[list[tuple[int, ...]]]:
        by_dim: list[set[tuple[int, ...]]] = [set() for _ in range(self.dimension + 1)]
        for f in self.facets:
            for k in range(1, len(f) + 1):
                by_dim[k - 1].update(combinations(f, k))
        return [sorted(s) for s in by_dim]

    def faces(self, k: int) -> list[tuple[int, ...]]:
        """All k-dimensional faces as sorted index tuples (sorted lexicographically)."""
        if k < 0 or k > self.dimension:
            return []
        return self._faces[k]

    @cached_property
    def face_set(self) -> frozenset[tuple[int, ...]]:
        return frozenset(s for layer in self._faces for s in layer)

    @cached_property
    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(layer) for layer in self._faces)

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * c for k, c in enumerate(self.f_vector))

    def labels_of(self, simplex: Iterable[int]) -> tuple[str, ...]:
        return tuple(self.vertices[i] for i in simplex)

    def indices_of(self, labels: Iterable[object]) -> tuple[int, ...]:
        try:
            return tuple(sorted(self.index[str(v)] for v in labels))
        except KeyError as exc:
            raise ComplexError(f"unknown vertex {exc.args[0]!r}") from None

    def contains(self, labels: Iterable[object]) -> bool:
        labels = [str(v) for v in labels]
        if not labels or any(v not in self.index for v in labels):
            return False
        return tuple(sorted(self.index[v] for v in labels)) in self.face_set

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in self.vertices]
        for f in self.facets:
            for a, b in combinations(f, 2):
                nbrs[a].add(b)
                nbrs[b].add(a)
        return tuple(frozenset(s) for s in nbrs)

    def edges(self) -> list[tuple[int, int]]:
        return self.faces(1)  # type: ignore[return-value]

    def is_connected(self) -> bool:
        return len(connected_components(self.adjacency)) == 1

    def is_pure(self) -> bool:
        return all(len(f) == self.dimension + 1 for f in self.facets)

    # derived complexes

    def full_subcomplex(self, vertex_labels: Iterable[object], name: str = "") -> SimplicialComplex:
        """Induced subcomplex on the given vertex labels."""
        keep = set(self.indices_of(vertex_labels))
        if not keep:
            raise ComplexError("full subcomplex on an empty vertex set")
        pieces = (tuple(v for v in f if v in keep) for f in self.facets)
        facets = [p for p in pieces if p]
        order = sorted(keep)
        return SimplicialComplex(
            [[self.vertices[i] for i in f] for f in _maximal(facets)],
            [self.vertices[i] for i in order],
            name=name,
            max_dim=None,
        )

    def link(self, simplex_labels: Iterable[object]) -> SimplicialComplex | None:
        """Link of a simplex; ``None`` when the link is empty."""
        s = set(self.indices_of(simplex_labels))
        if tuple(sorted(s)) not in self.face_set:
            raise ComplexError(f"{sorted(simplex_labels)} is not a simplex")
        pieces = [tuple(v for v in f if v not in s) for f in self.facets if s.issubset(f)]
        pieces = [p for p in pieces if p]
        if not pieces:
            return None
        verts = sorted({v for p in pieces for v in p})
        return SimplicialComplex(
            [[self.vertices[i] for i in p] for p in _maximal(pieces)],
            [self.vertices[i] for i in verts],
            max_dim=None,
        )

    def skeleton(self, k: int) -> SimplicialComplex:
        facets = [s for j in range(min(k, self.dimension) + 1) for s in self.faces(j)]
        return SimplicialComplex._from_indices(self.vertices, _maximal(facets))

    # serialization

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "vertices": list(self.vertices),
            "maximal_simplices": [list(self.labels_of(f)) for f in self.facets],
            "tags": self.tags,
        }

    @classmethod
    def from_json(cls, data: dict, max_dim: int | None = MAX_PIPELINE_DIM) -> SimplicialComplex:
        try:
            simplices = data["maximal_simplices"]
        except (KeyError, TypeError):
            raise ComplexError("complex JSON needs a 'maximal_simplices' list") from None
        return cls(simplices, data.get("vertices"), name=data.get("name", ""), tags=data.get("tags"),
                   max_dim=max_dim)

    @classmethod
    def load(cls, path: str | Path) -> SimplicialComplex:
        return cls.from_json(json.loads(Path(path).read_text(encoding="utf-8")))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return set(self.vertices) == set(other.vertices) and self.labelled_facets() == other.labelled_facets()

    def __hash__(self) -> int:
        return hash(self.labelled_facets())

    def labelled_facets(self) -> frozenset[frozenset[str]]:
        return frozenset(frozenset(self.labels_of(f)) for f in self.facets)

    def __repr__(self) -> str:
        nm = f"{self.name!r}, " if self.name else ""
        return f"SimplicialComplex({nm}f_vector={self.f_vector})"


def build_complex(maximal_simplices: Iterable[Sequence[object]], *, allow_high_dim: bool = False,
                  **kwargs) -> SimplicialComplex:
    """Pipeline entry point: rejects empty input and dimension above 3 unless allowed."""
    return SimplicialComplex(maximal_simplices, max_dim=None if allow_high_dim else MAX_PIPELINE_DIM, **kwargs)


# graph queries on 1-skeleta


def connected_components(adj: Sequence[Iterable[int]]) -> list[list[int]]:
    seen = [False] * len(adj)
    comps = []
    for s in range(len(adj)):
        if seen[s]:
            continue
        seen[s] = True
        comp, queue = [], deque([s])
        while queue:
            u = queue.popleft()
            comp.append(u)
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def complement_components(adj: Sequence[frozenset[int] | set[int]]) -> list[list[int]]:
    """Connected components of the complement graph without building it."""
    unvisited = set(range(len(adj)))
    comps = []
    while unvisited:
        s = min(unvisited)
        unvisited.remove(s)
        comp, queue = [s], deque([s])
        while queue:
            u = queue.popleft()
            nbrs = adj[u]
            reach = [w for w in unvisited if w not in nbrs]
            for w in reach:
                unvisited.remove(w)
                comp.append(w)
                queue.append(w)
        comps.append(sorted(comp))
    return comps


def join_decomposition(adj: Sequence[frozenset[int] | set[int]]) -> tuple[list[int], list[int]] | None:
    """A nontrivial split ``(V1, V2)`` with every cross pair adjacent, if any.

    Such a split exists exactly when the complement graph is disconnected.
    """
    comps = complement_components(adj)
    if len(comps) < 2:
        return None
    first = comps[0]
    rest = sorted(v for c in comps[1:] for v in c)
    return first, rest


def find_non_flag_clique(L: SimplicialComplex) -> tuple[int, ...] | None:
    """A clique of the 1-skeleton that does not span a simplex, or None."""
    adj = L.adjacency
    faces = L.face_set
    top = L.dimension + 2
    higher = [frozenset(w for w in adj[v] if w > v) for v in range(L.n_vertices)]

    stack: list[tuple[tuple[int, ...], frozenset[int]]] = [((v,), higher[v]) for v in range(L.n_vertices)]
    stack.reverse()
    while stack:
        clique, cand = stack.pop()
        if len(clique) >= 3 and clique not in faces:
            return clique
        if len(clique) >= top:
            continue
        for w in sorted(cand, reverse=True):
            stack.append((clique + (w,), cand & higher[w]))
    return None


def is_flag(L: SimplicialComplex) -> bool:
    return find_non_flag_clique(L) is None


def find_induced_square(adj: Sequence[frozenset[int]]) -> tuple[int, int, int, int] | None:
    """An induced 4-cycle ``(a, c1, b, c2)`` in the graph, or None."""
    for a in range(len(adj)):
        na = adj[a]
        common: dict[int, list[int]] = defaultdict(list)
        for c in sorted(na):
            for b in adj[c]:
                if b > a and b not in na:
                    common[b].append(c)
        for b in sorted(common):
            cs = common[b]
            if len(cs) < 2:
                continue
            for i, c1 in enumerate(cs):
                for c2 in cs[i + 1:]:
                    if c2 not in adj[c1]:
                        return a, c1, b, c2
    return None


def is_flag_no_square(L: SimplicialComplex) -> bool:
    return is_flag(L) and find_induced_square(L.adjacency) is None


# manifold recognition


def is_cycle(L: SimplicialComplex | None) -> bool:
    """True iff L is a single cycle (a triangulated circle)."""
    if L is None or L.dimension != 1 or not L.is_pure():
        return False
    return all(len(nb) == 2 for nb in L.adjacency) and L.is_connected()


def is_closed_manifold(L: SimplicialComplex) -> bool:
    """Combinatorial closed connected manifold test for dimension <= 3."""
    d = L.dimension
    if not L.is_pure() or not L.is_connected():
        return False
    if d == 0:
        return L.n_vertices == 1
    if d == 1:
        return is_cycle(L)
    if d == 2:
        return all(is_cycle(L.link([v])) for v in L.vertices)
    if d == 3:
        for e in L.faces(1):
            if not is_cycle(L.link(L.labels_of(e))):
                return False
        for v in L.vertices:
            lk = L.link([v])
            if lk is None or lk.dimension != 2 or not is_closed_manifold(lk) or lk.euler_characteristic() != 2:
                return False
        return True
    raise ComplexError(f"manifold test not supported in dimension {d}")


def is_orientable(L: SimplicialComplex) -> bool:
    """Coherent orientation search over facets glued along ridges.

    Requires a pure complex whose ridges each lie in at most two facets;
    returns False if some ridge lies in three or more.
    """
    if not L.is_pure():
        raise ComplexError("orientability needs a pure complex")
    d = L.dimension
    if d == 0:
        return True
    ridge_to: dict[tuple[int, ...], list[tuple[int, int]]] = defaultdict(list)
    for fi, f in enumerate(L.facets):
        for pos in range(d + 1):
            ridge_to[f[:pos] + f[pos + 1:]].append((fi, 1 if pos % 2 == 0 else -1))
    nbrs: list[list[tuple[int, int]]] = [[] for _ in L.facets]
    for entries in ridge_to.values():
        if len(entries) > 2:
            return False
        if len(entries) == 2:
            (f1, s1), (f2, s2) = entries
            # induced ridge orientations must cancel: o1*s1 == -o2*s2
            rel = -s1 * s2
            nbrs[f1].append((f2, rel))
            nbrs[f2].append((f1, rel))
    orient = [0] * len(L.facets)
    for start in range(len(L.facets)):
        if orient[start]:
            continue
        orient[start] = 1
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w, rel in nbrs[u]:
                want = orient[u] * rel
                if orient[w] == 0:
                    orient[w] = want
                    queue.append(w)
                elif orient[w] != want:
                    return False
    return True
