from __future__ import annotations

import numpy as np
import pytest

from goldnerve.certify import (
    TABLE1, case_instances, certify_flag_no_square, certify_galois_positive, certify_lattice_membership,
    certify_nerve, certify_signature, certify_zariski, cs_bound_holds, exhaustive_case_checks, inertia_from_minors,
)
from goldnerve.complex import SimplicialComplex
from goldnerve.construct import ReflectionGenerators, assign_vectors, reflection_generators
from goldnerve.golden import ONE, PHI, GoldenVector, gs
from goldnerve.subdivide import dranishnikov_subdivide
from goldnerve.zphi import ZPhiArray
from support import assignment_of, complex_of, subdivision_of


@pytest.mark.parametrize("n", [2, 3, 4, 9, 16])
def test_signature(n):
    cert = certify_signature(n)
    assert cert.passed
    assert cert.details["inertia"] == [n, 1]
    # the leading minors alternate only once: D1 > 0, then all negative
    assert cert.details["minor_signs"] == "+" + "-" * n


def test_inertia_of_definite_and_degenerate():
    assert inertia_from_minors([ONE, gs(2), gs(3)])[:2] == (3, 0)
    assert inertia_from_minors([ONE, gs(0)]) is None


@pytest.mark.parametrize("n", [2, 5, 16])
def test_galois_conjugate_positive(n):
    assert certify_galois_positive(n).details["minor_signs"] == "+" * (n + 1)


def test_nerve_certificate_fields():
    cert = certify_nerve(assignment_of("rp2_6"))
    js = cert.to_json()
    assert js["verdict"] == "pass"
    assert cert.worst_value == -PHI
    assert js["worst_value"]["golden"] == (-PHI).to_json()
    assert js["pairs_checked"] == 51 * 50 // 2
    assert cert.to_json(timing=False)["elapsed_ms"] == 0


def test_nerve_witness_for_corrupted_vector():
    assign = assignment_of("torus_7")
    x = assign.vectors[5]
    bad = assign.with_vector(5, x + GoldenVector.basis(len(x), 0))
    cert = certify_nerve(bad)
    assert not cert.passed
    assert cert.witnesses[0]["kind"] in {"unit_norm", "adjacent_not_orthogonal", "non_adjacent_above_minus_phi"}


def test_lattice_membership_detects_projection():
    assign = assignment_of("rp2_6")
    gens = reflection_generators(assign)
    assert certify_lattice_membership(gens, assign).passed
    R = gens.matrices
    # I + R = 2(I - x x^T B) is twice a projection, not an involution
    doubled = ZPhiArray(R.p + np.eye(R.shape[1], dtype=R.p.dtype), R.q)
    broken = ReflectionGenerators(gens.form, gens.labels, doubled, gens.commuting_pairs)
    assert not certify_lattice_membership(broken).passed


def test_zariski_pass_and_edge_only_failure():
    for name in ("rp2_6", "dunce_hat_3"):
        assert certify_zariski(complex_of(name), assignment_of(name)).passed
    # a single edge: the subdivided edge a - m - b is the join {a, b} * {m}
    L = SimplicialComplex([["a", "b"]])
    cert = certify_zariski(L, assign_vectors(dranishnikov_subdivide(L), 4))
    assert not cert.passed
    assert {w["kind"] for w in cert.witnesses} == {"join", "rank"}


def test_flag_no_square_witness():
    square = SimplicialComplex([["a", "b"], ["b", "c"], ["c", "d"], ["d", "a"]])
    cert = certify_flag_no_square(square)
    assert not cert.passed and cert.witnesses[0]["kind"] == "induced_square"
    assert certify_flag_no_square(subdivision_of("dunce_hat_2").target).passed


def test_table_and_cases():
    assert len(TABLE1) == 14
    assert sum(r.count for r in TABLE1 if r.level == 3) == 94
    assert len(case_instances(3)) == 78 and len(case_instances(4)) == 66
    cert = exhaustive_case_checks()
    assert cert.passed
    assert cert.details["case3_slottings"]["table_slotting_extremal"]


def test_cs_bound_boundary():
    # S = S' = 2, A = A' = 0 gives -4 phi <= -phi
    assert cs_bound_holds(gs(0), gs(0), gs(2), gs(2))
    # S = S' = 1 leaves no room
    assert not cs_bound_holds(gs(1), gs(1), ONE, ONE)
