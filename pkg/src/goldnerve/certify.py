"""Exact verification passes producing structured certificates."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement, permutations

import numpy as np

from .complex import SimplicialComplex, find_induced_square, find_non_flag_clique, join_decomposition
from .construct import LorentzForm, ReflectionGenerators, VectorAssignment
from .golden import ONE, PHI, ZERO, GoldenScalar, GoldenVector, rank_of, sign_ab
from .polytope import bn_matrix
from .sweep import sweep
from .sweep._numpy import sign_ab_array
from .zphi import ZPhiArray

MINUS_PHI = -PHI


def _render(x: GoldenScalar) -> dict:
    return {"golden": x.to_json(), "text": str(x), "decimal": f"{float(x):.12f}"}


@dataclass
class Certificate:
    check: str
    passed: bool
    witnesses: list[dict] = field(default_factory=list)
    worst_value: GoldenScalar | None = None
    pairs_checked: int | None = None
    elapsed_ms: float = 0.0
    details: dict = field(default_factory=dict)

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def to_json(self, timing: bool = True) -> dict:
        out = {"check": self.check, "verdict": self.verdict, "witnesses": self.witnesses}
        if self.worst_value is not None:
            out["worst_value"] = _render(self.worst_value)
        if self.pairs_checked is not None:
            out["pairs_checked"] = self.pairs_checked
        out["details"] = self.details
        out["elapsed_ms"] = round(self.elapsed_ms, 3) if timing else 0
        return out


class _Timer:
    def __enter__(self) -> _Timer:
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc) -> None:
        self.ms = (time.perf_counter() - self.t0) * 1000


def _signs(xs: list[GoldenScalar]) -> str:
    return "".join("+" if x.sign() > 0 else "-" if x.sign() < 0 else "0" for x in xs)


# signature and Galois positivity

def inertia_from_minors(minors: list[GoldenScalar]) -> tuple[int, int, str] | None:
    """(positive, negative, pivot signs) from leading principal minors.

    Pivots of symmetric elimination are D_k / D_{k-1}; their signs give the
    inertia (Sylvester/Jacobi).  None if some minor vanishes.
    """
    if any(m.is_zero() for m in minors):
        return None
    prev = ONE
    signs = []
    for m in minors:
        signs.append("+" if (m / prev).sign() > 0 else "-")
        prev = m
    piv = "".join(signs)
    return piv.count("+"), piv.count("-"), piv


def certify_signature(n: int) -> Certificate:
    """Signature (n, 1) of B_n from exact elimination pivots, plus two corroborations."""
    with _Timer() as t:
        form = LorentzForm(n)
        B = form.matrix
        minors = B.leading_principal_minors()
        signs = _signs(minors)
        inertia = inertia_from_minors(minors)
        witnesses = []
        if inertia is None or inertia[:2] != (n, 1):
            witnesses.append({"kind": "inertia", "minor_signs": signs,
                              "pivot_signs": inertia[2] if inertia else None})
        # B(e_i - e_{i+1}) = (1 + phi)(e_i - e_{i+1})
        eig_ok = True
        for i in range(n - 1):
            c = [ZERO] * (n + 1)
            c[i], c[i + 1] = ONE, -ONE
            v = GoldenVector(c)
            if B @ v != v.scale(ONE + PHI):
                eig_ok = False
                witnesses.append({"kind": "eigen_relation", "index": i})
                break
        u = GoldenVector([ONE] * n + [ZERO])
        e = GoldenVector.basis(n + 1, n)
        det2 = form.inner(u, u) * form.inner(e, e) - form.inner(u, e) ** 2
        if det2.sign() >= 0:
            witnesses.append({"kind": "restricted_determinant", "value": _render(det2)})
    return Certificate(
        f"signature(n={n})", not witnesses, witnesses, elapsed_ms=t.ms,
        details={"minor_signs": signs, "pivot_signs": inertia[2] if inertia else None,
                 "inertia": list(inertia[:2]) if inertia else None, "eigen_relation": eig_ok,
                 "restricted_det": _render(det2)},
    )


def certify_galois_positive(n: int) -> Certificate:
    """Every leading principal minor of the Galois conjugate of B_n is positive."""
    with _Timer() as t:
        minors = bn_matrix(n).conjugate().leading_principal_minors()
        signs = _signs(minors)
        witnesses = [] if signs == "+" * (n + 1) else [{"kind": "minor_signs", "got": signs}]
    return Certificate(f"galois_positive(n={n})", not witnesses, witnesses, elapsed_ms=t.ms,
                       details={"minor_signs": signs})


# Gram / nerve sweep

def _pair_witness(assign: VectorAssignment, w: tuple[int, int, int, int], kind: str) -> dict:
    i, j, a, b = w
    return {"kind": kind, "pair": [assign.labels[i], assign.labels[j]],
            "value": _render(GoldenScalar.from_ints(a, b))}


def unit_norm_failures(assign: VectorAssignment) -> list[int]:
    bad = []
    n = assign.form.n
    for k, (v, s) in enumerate(zip(assign.vectors, assign.sums)):
        spatial = ZERO
        for c in v.coords[:n]:
            if not c.is_zero():
                spatial = spatial + c * c
        if (ONE + PHI) * spatial - PHI * s * s != ONE:
            bad.append(k)
    return bad


def certify_nerve(assign: VectorAssignment, workers: int = 1, backend: str | None = None) -> Certificate:
    """Adjacent pairs must be orthogonal and non-adjacent pairs at most -phi."""
    with _Timer() as t:
        witnesses: list[dict] = []
        non_integral = [k for k, v in enumerate(assign.vectors) if not v.is_integral()]
        for k in non_integral[:1]:
            witnesses.append({"kind": "non_integral", "vertex": assign.labels[k]})
        bad = unit_norm_failures(assign)
        for k in bad[:1]:
            x = assign.vectors[k]
            witnesses.append({"kind": "unit_norm", "vertex": assign.labels[k],
                              "value": _render(assign.form.inner(x, x))})
        result = None
        if not non_integral:
            result = sweep(assign.sweep_input(), workers=workers, backend=backend)
            if result.first_adjacent_failure:
                witnesses.append(_pair_witness(assign, result.first_adjacent_failure, "adjacent_not_orthogonal"))
            if result.first_non_adjacent_failure:
                witnesses.append(_pair_witness(assign, result.first_non_adjacent_failure, "non_adjacent_above_minus_phi"))
    worst = None
    details: dict = {"vertices": len(assign), "unit_norm_failures": len(bad), "n": assign.form.n}
    if result is not None:
        if result.worst is not None:
            worst = GoldenScalar.from_ints(result.worst[2], result.worst[3])
            details["worst_pair"] = [assign.labels[result.worst[0]], assign.labels[result.worst[1]]]
            details["worst_equals_minus_phi"] = worst == MINUS_PHI
        details.update({
            "adjacent_pairs": result.adjacent, "non_adjacent_pairs": result.non_adjacent,
            "adjacent_failures": result.adjacent_failures,
            "non_adjacent_failures": result.non_adjacent_failures, "backend": result.backend,
        })
    return Certificate("nerve", not witnesses, witnesses, worst,
                       result.pairs if result else None, t.ms, details)


# lattice membership

def certify_lattice_membership(gens: ReflectionGenerators, assign: VectorAssignment | None = None) -> Certificate:
    """Integral entries, R^2 = I, R^T B R = B and the timelike probe e_{n+1}."""
    with _Timer() as t:
        witnesses: list[dict] = []
        n = gens.form.n
        d = n + 1
        if assign is not None:
            for k, v in enumerate(assign.vectors):
                if not v.is_integral():
                    witnesses.append({"kind": "non_integral", "vertex": assign.labels[k]})
                    break
        R = gens.matrices
        eye = ZPhiArray(np.broadcast_to(np.eye(d, dtype=np.int64), R.shape), np.zeros(R.shape, dtype=np.int64))
        sq_ok = (R @ R).equals(eye)
        B = ZPhiArray.from_matrix(gens.form.matrix)
        Bs = ZPhiArray(np.broadcast_to(B.p, R.shape), np.broadcast_to(B.q, R.shape))
        iso_ok = (R.T @ B @ R).equals(Bs)
        # e_t^T B R e_t: column t of R, then row t of B
        col = ZPhiArray(R.p[:, :, n], R.q[:, :, n])
        probe = col @ ZPhiArray(B.p[:, n:n + 1], B.q[:, n:n + 1])
        probe_sign = sign_ab_array(np.asarray(probe.p[:, 0], dtype=np.int64), np.asarray(probe.q[:, 0], dtype=np.int64)) \
            if probe.p.dtype != object else np.array([sign_ab(int(a), int(b)) for a, b in zip(probe.p[:, 0], probe.q[:, 0])])
        probe_ok = probe_sign < 0
        for name, ok in (("involution", sq_ok), ("preserves_form", iso_ok), ("timelike_probe", probe_ok)):
            bad = np.flatnonzero(~np.asarray(ok))
            if bad.size:
                witnesses.append({"kind": name, "vertex": gens.labels[int(bad[0])], "count": int(bad.size)})
    return Certificate("lattice_membership", not witnesses, witnesses, elapsed_ms=t.ms,
                       details={"generators": len(gens.labels), "n": n})


# Zariski density

def certify_zariski(L: SimplicialComplex, assign: VectorAssignment) -> Certificate:
    """dim L >= 1, the 1-skeleton of L# is not a join, and the vectors span the whole space."""
    with _Timer() as t:
        witnesses: list[dict] = []
        n = assign.form.n
        if L.dimension < 1:
            witnesses.append({"kind": "dimension", "dimension": L.dimension})
        target = assign.subdivision.target
        split = join_decomposition(target.adjacency)
        if split is not None:
            a, b = split
            witnesses.append({"kind": "join", "sides": [[target.vertices[i] for i in a][:10],
                                                         [target.vertices[i] for i in b][:10]],
                              "sizes": [len(a), len(b)]})
        rank = rank_of(assign.vectors, stop_at=n + 1)
        if rank < n + 1:
            witnesses.append({"kind": "rank", "rank": rank, "needed": n + 1})
        timelike = any(not v[n].is_zero() for v in assign.vectors)
        if not timelike:
            witnesses.append({"kind": "no_timelike_component"})
    return Certificate("zariski_density", not witnesses, witnesses, elapsed_ms=t.ms,
                       details={"dimension": L.dimension, "rank": rank, "ambient": n + 1,
                                "is_join": split is not None})


# flag-no-square

def certify_flag_no_square(K: SimplicialComplex) -> Certificate:
    with _Timer() as t:
        witnesses: list[dict] = []
        clique = find_non_flag_clique(K)
        if clique is not None:
            witnesses.append({"kind": "non_flag_clique", "vertices": list(K.labels_of(clique))})
        square = find_induced_square(K.adjacency)
        if square is not None:
            witnesses.append({"kind": "induced_square", "cycle": list(K.labels_of(square))})
    return Certificate("flag_no_square", not witnesses, witnesses, elapsed_ms=t.ms,
                       details={"vertices": K.n_vertices, "edges": len(K.faces(1))})


# the coefficient table and the distinct-tetrahedra case analysis

@dataclass(frozen=True)
class TableRow:
    level: int
    coeffs: tuple[GoldenScalar, GoldenScalar, GoldenScalar, GoldenScalar]
    last: GoldenScalar
    total: GoldenScalar
    count: int

    @property
    def s(self) -> GoldenScalar:
        return sum(self.coeffs, ZERO) + self.last


def _g(p: int, q: int = 0) -> GoldenScalar:
    return GoldenScalar.from_ints(p, q)


# (level, c_i..c_l as (p, q), c_{n+1}, printed sum, permutation count)
_TABLE = [
    (0, [(1, 0), (0, 0), (0, 0), (0, 0)], (0, 0), (1, 0), 4),
    (1, [(1, 0), (1, 0), (0, 0), (0, 0)], (-2, 1), (0, 1), 6),
    (2, [(0, 1), (1, 0), (1, 0), (0, 0)], (-1, 0), (1, 1), 12),
    (3, [(1, 1), (0, 1), (1, 0), (1, 0)], (-2, 0), (1, 2), 12),
    (3, [(1, 1), (1, 1), (0, 1), (1, 0)], (-1, -1), (2, 2), 12),
    (3, [(1, 1), (1, 1), (1, 1), (1, 0)], (-3, 0), (1, 3), 4),
    (3, [(2, 1), (1, 1), (1, 1), (0, 1)], (-2, -1), (2, 3), 12),
    (3, [(1, 2), (1, 1), (1, 1), (1, 1)], (-1, -2), (3, 3), 4),
    (3, [(1, 2), (2, 1), (1, 1), (1, 1)], (-3, -1), (2, 4), 12),
    (3, [(1, 2), (1, 2), (2, 1), (1, 1)], (-2, -2), (3, 4), 12),
    (3, [(2, 2), (1, 2), (1, 2), (2, 1)], (-3, -2), (3, 5), 12),
    (3, [(2, 2), (2, 2), (1, 2), (1, 2)], (-2, -3), (4, 5), 6),
    (3, [(2, 2), (2, 2), (2, 2), (1, 2)], (-4, -2), (3, 6), 4),
    (3, [(1, 3), (2, 2), (2, 2), (2, 2)], (-3, -3), (4, 6), 4),
]

TABLE1: tuple[TableRow, ...] = tuple(
    TableRow(lv, tuple(_g(*c) for c in cs), _g(*last), _g(*tot), cnt) for lv, cs, last, tot, cnt in _TABLE
)


@dataclass(frozen=True)
class CaseBoundInstance:
    case: int
    rows: tuple[int, int]  # indices into TABLE1
    shared: int
    A: GoldenScalar
    A2: GoldenScalar
    S: GoldenScalar
    S2: GoldenScalar
    passed: bool

    def bound(self) -> float:
        """Float value of the Cauchy-Schwarz bound, for display only."""
        return -float(PHI) * float(self.S) * float(self.S2) + (1 + float(PHI)) * (float(self.A) * float(self.A2)) ** 0.5

    def to_json(self) -> dict:
        return {"case": self.case, "rows": list(self.rows), "shared": self.shared,
                "A": str(self.A), "A_prime": str(self.A2), "S": str(self.S), "S_prime": str(self.S2),
                "bound": round(self.bound(), 9), "verdict": "pass" if self.passed else "fail"}


def cs_bound_holds(A: GoldenScalar, A2: GoldenScalar, S: GoldenScalar, S2: GoldenScalar) -> bool:
    """Radical-free test of -phi S S' + (1+phi) sqrt(A) sqrt(A') <= -phi."""
    rhs = PHI * S * S2 - PHI
    if rhs.sign() <= 0:
        return False
    lhs = (ONE + PHI) ** 2 * A * A2
    return lhs <= rhs * rhs


def _sumsq(xs) -> GoldenScalar:
    return sum((x * x for x in xs), ZERO)


def case_instances(case: int) -> list[CaseBoundInstance]:
    shared = {3: 2, 4: 3}[case]
    min_level = {3: 2, 4: 3}[case]
    idx = [k for k, r in enumerate(TABLE1) if r.level >= min_level]
    out = []
    for a, b in combinations_with_replacement(idx, 2):
        ra, rb = TABLE1[a], TABLE1[b]
        A, A2 = _sumsq(ra.coeffs[:shared]), _sumsq(rb.coeffs[:shared])
        out.append(CaseBoundInstance(case, (a, b), shared, A, A2, ra.s, rb.s, cs_bound_holds(A, A2, ra.s, rb.s)))
    return out


def _slotting_sweep(case: int) -> dict:
    """All ways of choosing the shared coefficients of both rows.

    For each row pair: is the table's first-coefficients slotting the largest
    Cauchy-Schwarz product, does every slotting satisfy the bound, and does the
    exact (pre-Cauchy-Schwarz) expression stay <= -phi.
    """
    shared = {3: 2, 4: 3}[case]
    min_level = {3: 2, 4: 3}[case]
    idx = [k for k, r in enumerate(TABLE1) if r.level >= min_level]
    extremal = bound_all = exact_all = True
    worst_exact: GoldenScalar | None = None
    evaluated = 0
    for a, b in combinations_with_replacement(idx, 2):
        ra, rb = TABLE1[a], TABLE1[b]
        tabled = _sumsq(ra.coeffs[:shared]) * _sumsq(rb.coeffs[:shared])
        xs = {tuple(sorted(c)) for c in combinations(ra.coeffs, shared)}
        ys = {p for p in permutations(rb.coeffs, shared)}
        for x in xs:
            Ax = _sumsq(x)
            for y in ys:
                evaluated += 1
                Ay = _sumsq(y)
                if Ax * Ay > tabled:
                    extremal = False
                if not cs_bound_holds(Ax, Ay, ra.s, rb.s):
                    bound_all = False
                exact = -PHI * ra.s * rb.s + (ONE + PHI) * sum((u * v for u, v in zip(x, y)), ZERO)
                if exact > MINUS_PHI:
                    exact_all = False
                if worst_exact is None or exact > worst_exact:
                    worst_exact = exact
    return {"slottings_evaluated": evaluated, "table_slotting_extremal": extremal,
            "bound_holds_for_all_slottings": bound_all, "exact_expression_holds_for_all_slottings": exact_all,
            "worst_exact_value": str(worst_exact)}


def exhaustive_case_checks(slot_sweep: bool = True) -> Certificate:
    with _Timer() as t:
        witnesses: list[dict] = []
        case1 = [k for k, r in enumerate(TABLE1) if r.s < ONE]
        for k in case1:
            witnesses.append({"kind": "case1", "row": k, "sum": str(TABLE1[k].s)})
        case2 = [(k, str(c)) for k, r in enumerate(TABLE1) if r.level >= 1 for c in r.coeffs if PHI * c > r.s]
        for k, c in case2:
            witnesses.append({"kind": "case2", "row": k, "coefficient": c})
        sums_match = all(r.s == r.total for r in TABLE1)
        if not sums_match:
            witnesses.append({"kind": "table_sum_column"})
        c3, c4 = case_instances(3), case_instances(4)
        for inst in c3 + c4:
            if not inst.passed:
                witnesses.append({"kind": f"case{inst.case}", **inst.to_json()})
    core_ms = t.ms
    details = {
        "case1_rows": len(TABLE1), "case2_rows": sum(1 for r in TABLE1 if r.level >= 1),
        "case3_instances": len(c3), "case3_passed": sum(i.passed for i in c3),
        "case4_instances": len(c4), "case4_passed": sum(i.passed for i in c4),
        "sum_column_matches": sums_match,
        "case3": [i.to_json() for i in c3], "case4": [i.to_json() for i in c4],
    }
    if slot_sweep:
        details["case3_slottings"] = _slotting_sweep(3)
        details["case4_slottings"] = _slotting_sweep(4)
    details["core_ms"] = round(core_ms, 3)
    return Certificate("exhaustive_cases", not witnesses, witnesses, elapsed_ms=core_ms, details=details)


def table_rows_for_block(vectors: list[GoldenVector]) -> dict[tuple, int]:
    """Level-3 coefficient patterns (slot-sorted, with last coefficient) and multiplicities."""
    out: dict[tuple, int] = {}
    for v in vectors:
        key = (tuple(sorted(v.coords[:4], reverse=True)), v.coords[4])
        out[key] = out.get(key, 0) + 1
    return out


def expected_block_rows() -> dict[tuple, int]:
    return {(tuple(sorted(r.coeffs, reverse=True)), r.last): r.count for r in TABLE1 if r.level == 3}
