"""Predicted limit-set type of the reflection group built from L, with evidence.

Everything listed under ``evidence`` is computed here; the identification of
the limit set itself rests on cited theorems and is recorded as a caveat.
Facts that cannot be computed (a manifold not being homeomorphic to S^3) come
only from corpus tags and are labelled as such.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .complex import ComplexError, SimplicialComplex, is_closed_manifold, is_orientable, join_decomposition
from .homology import HomologyProfile, cohomology, homology
from .subdivide import SubdivisionMap, ps_subdivide, vertex_label

CITED = "limit-set identification follows cited theorems; only the listed evidence is computed"


@dataclass(frozen=True)
class LimitSetVerdict:
    kind: str  # sphere | tree_of_manifolds | tree_of_manifolds_double | pontryagin_surface | cech_sphere | unclassified
    label: str
    ambient_dimension: int
    evidence: tuple[str, ...] = ()
    caveats: tuple[str, ...] = ()
    parameter: int | None = None  # d for spheres, p for Pontryagin surfaces

    def to_json(self) -> dict:
        return {"kind": self.kind, "label": self.label, "ambient_dimension": self.ambient_dimension,
                "parameter": self.parameter, "evidence": list(self.evidence), "caveats": list(self.caveats)}


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % k for k in range(2, int(p ** 0.5) + 1))


def _moore_space_p(h: HomologyProfile) -> int | None:
    """p if the homology is that of M(Z/p, 1), else None."""
    b0, t0 = h.group(0)
    b1, t1 = h.group(1)
    if (b0, t0) == (1, ()) and b1 == 0 and len(t1) == 1 and all(h.is_trivial(k) for k in range(2, len(h.betti))):
        return t1[0]
    return None


def classify_limit_set(L: SimplicialComplex, n: int | None = None) -> LimitSetVerdict:
    """Apply the manifold / dunce-hat decision tree to L (dimension <= 3)."""
    n = L.n_vertices if n is None else n
    h = homology(L)
    ev = [f"homology: {h}", f"f-vector: {L.f_vector}"]
    caveats = [CITED]
    d = L.dimension
    tags = L.tags

    if d >= 1 and is_closed_manifold(L):
        orient = is_orientable(L)
        ev.append(f"closed connected {d}-manifold (link conditions)")
        ev.append("orientable" if orient else "nonorientable")
        if h.matches_sphere(d):
            ev.append(f"homology of S^{d}")
            if d == 1 or (d == 2 and orient and L.euler_characteristic() == 2):
                ev.append("sphere recognized from dimension, Euler characteristic and orientability")
                return LimitSetVerdict("sphere", f"S^{d}", n, tuple(ev), tuple(caveats), d)
            if tags.get("standard_sphere") == d:
                ev.append(f"corpus tag: triangulates the standard S^{d}")
                caveats.append(f"homeomorphism to S^{d} is a corpus tag, not a computation")
                return LimitSetVerdict("sphere", f"S^{d}", n, tuple(ev), tuple(caveats), d)
            if d == 3:
                caveats.append("homology 3-sphere nerve: boundary is a Cech cohomology 3-sphere (cited)")
                label = "Cech cohomology 3-sphere"
                if tags.get("not_homeomorphic_to_sphere"):
                    ev.append("corpus tag: N is not homeomorphic to S^3")
                    caveats.append("non-standardness rests on the cited fact N != S^3 and the cited "
                                   "non-manifold criterion; it is a tag, not a computation")
                    label += ", non-standard candidate (not homeomorphic to S^3)"
                else:
                    caveats.append("if N is homeomorphic to S^3 the limit set is S^3; not decided here")
                return LimitSetVerdict("cech_sphere", label, n, tuple(ev), tuple(caveats), 3)
        if d == 2:
            if orient:
                return LimitSetVerdict("tree_of_manifolds_double", "X(N # N-bar) = orientable Pontryagin sphere",
                                       n, tuple(ev), tuple(caveats))
            p = _moore_space_p(h)
            ev.append("nonorientable surface: X(N) is the nonorientable Pontryagin sphere = Pi_2")
            return LimitSetVerdict("pontryagin_surface", "Pi_2 = X(N), the nonorientable Pontryagin sphere",
                                   n, tuple(ev), tuple(caveats), 2 if p in (None, 2) else None)
        if orient:
            return LimitSetVerdict("tree_of_manifolds_double", "X(N # N-bar)", n, tuple(ev), tuple(caveats))
        return LimitSetVerdict("tree_of_manifolds", "X(N)", n, tuple(ev), tuple(caveats))

    p = _moore_space_p(h)
    tagged = tags.get("dunce_hat_p")
    if d == 2 and p is not None and (tagged is None or tagged == p):
        ev.append(f"homology of the Moore space M(Z/{p}, 1)")
        if tagged is not None:
            ev.append(f"corpus tag: triangulation of the {p}-fold dunce hat")
        else:
            caveats.append("only the homology of a Moore space was checked, not that L is a dunce hat")
        if _is_prime(p):
            return LimitSetVerdict("pontryagin_surface", f"Pi_{p}", n, tuple(ev), tuple(caveats), p)
        caveats.append(f"p = {p} is not prime; the Pontryagin-surface criterion does not apply")
    return LimitSetVerdict("unclassified", "unclassified", n, tuple(ev), tuple(caveats))


# evidence for a Menger-curve subgroup

@dataclass
class MengerEvidence:
    removed_vertex: str
    checks: dict[str, bool] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)
    simplices_checked: int = 0
    failures: list[dict] = field(default_factory=list)

    @property
    def all_pass(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict:
        return {"removed_vertex": self.removed_vertex, "checks": self.checks, "all_pass": self.all_pass,
                "simplices_checked": self.simplices_checked, "failures": self.failures[:5], "notes": self.notes}


def _high_cohomology_vanishes(K: SimplicialComplex) -> bool:
    c = cohomology(K, max(K.dimension, 2))
    return all(c.is_trivial(k) for k in range(2, len(c.betti)))


def menger_evidence(L: SimplicialComplex, v: str | None = None,
                    sub: SubdivisionMap | None = None) -> MengerEvidence:
    """Necessary-condition checks for the Menger-curve criterion on a dunce hat.

    K is the full subcomplex of L# on all vertices except the corner vertex
    of ``v`` (a vertex of L off the core).
    """
    core = L.tags.get("core_vertices")
    if not core:
        raise ComplexError("menger_evidence needs a 'core_vertices' tag")
    core = {str(c) for c in core}
    if v is None:
        off = [u for u in L.vertices if u not in core]
        if not off:
            raise ComplexError("every vertex lies on the core")
        v = off[0]
    v = str(v)
    if v not in L.index:
        raise ComplexError(f"unknown vertex {v!r}")
    if v in core:
        raise ComplexError(f"vertex {v!r} lies on the core; choose a vertex off the core")
    sub = sub or ps_subdivide(L)
    T = sub.target
    drop = vertex_label((v,))
    K = T.full_subcomplex([u for u in T.vertices if u != drop], name=f"{T.name}-{drop}")
    ev = MengerEvidence(drop)
    ev.checks["connected"] = K.is_connected()
    ev.checks["not_a_join"] = join_decomposition(K.adjacency) is None
    ev.checks["homology_of_circle"] = homology(K).matches_sphere(1)

    ok_coh = ok_conn = True
    verts = set(K.vertices)
    for k in range(K.dimension + 1):
        for s in K.faces(k):
            ev.simplices_checked += 1
            rest = verts - set(K.labels_of(s))
            sub_k = K.full_subcomplex(rest)
            conn = sub_k.is_connected()
            coh = _high_cohomology_vanishes(sub_k)
            if not (conn and coh):
                ev.failures.append({"simplex": list(K.labels_of(s)), "connected": conn, "high_cohomology_zero": coh})
            ok_conn &= conn
            ok_coh &= coh
    ev.checks["complements_have_no_cohomology_above_1"] = ok_coh
    ev.checks["complements_connected"] = ok_conn
    ev.notes = [
        "necessary-condition evidence only; the cited Menger-curve criterion is not verified",
        "homology of a circle is evidence for K deformation retracting to the core",
        "vanishing of H^k (k >= 2) on complements of simplices is evidence for pcd(K) = 1",
        "connected complements are evidence for inseparability",
        "non-planarity: not checked (geometric argument cited)",
    ]
    return ev
