from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from goldnerve.certify import certify_nerve
from goldnerve.construct import LorentzForm, assign_vectors, gram_matrix, inner_ab, reflection_generators
from goldnerve.golden import ONE, PHI, ZERO, GoldenMatrix, GoldenScalar, GoldenVector
from support import assignment_of, subdivision_of

pairs = st.tuples(st.integers(-50, 50), st.integers(-50, 50))


@settings(max_examples=200)
@given(st.integers(2, 9).flatmap(lambda n: st.tuples(st.just(n), st.lists(pairs, min_size=2 * n + 2,
                                                                            max_size=2 * n + 2))))
def test_fast_inner_matches_dense(data):
    n, coeffs = data
    form = LorentzForm(n)
    x = GoldenVector(GoldenScalar.from_ints(*c) for c in coeffs[: n + 1])
    y = GoldenVector(GoldenScalar.from_ints(*c) for c in coeffs[n + 1:])
    assert form.inner(x, y) == form.inner_dense(x, y)


@given(pairs, pairs, pairs)
def test_inner_ab_matches_scalar_formula(s1, s2, d):
    S1, S2, D = (GoldenScalar.from_ints(*t) for t in (s1, s2, d))
    want = (ONE + PHI) * D - PHI * S1 * S2
    assert GoldenScalar.from_ints(*inner_ab(*s1, *s2, *d)) == want


def test_gram_matrix_of_small_complex():
    assign = assignment_of("rp2_6")
    G = gram_matrix(assign)
    adj = assign.subdivision.target.adjacency
    for i in range(len(assign)):
        assert G[i, i] == ONE
        for j in range(i + 1, len(assign)):
            if j in adj[i]:
                assert G[i, j] == ZERO
            else:
                assert G[i, j] <= -PHI


def test_vectors_are_integral_and_timelike_component_present():
    assign = assignment_of("sphere_3")
    assert all(v.is_integral() for v in assign.vectors)
    assert any(not v[assign.form.n].is_zero() for v in assign.vectors)


def test_n_smaller_than_vertex_count_rejected():
    with pytest.raises(ValueError):
        assign_vectors(subdivision_of("rp2_6"), 5)


def test_larger_ambient_dimension():
    assign = assign_vectors(subdivision_of("rp2_6"), 9)
    assert assign.form.n == 9
    assert certify_nerve(assign).passed


def test_reflections_commute_exactly_on_edges():
    assign = assignment_of("rp2_6")
    gens = reflection_generators(assign)
    adj = assign.subdivision.target.adjacency
    I = GoldenMatrix.identity(assign.form.dim)
    mats = [gens.matrix(i) for i in range(12)]
    for i in range(12):
        assert mats[i] @ mats[i] == I
        assert mats[i].determinant() == -ONE
        for j in range(i + 1, 12):
            commute = mats[i] @ mats[j] == mats[j] @ mats[i]
            assert commute == (j in adj[i])


def test_reflection_fixes_orthogonal_complement():
    assign = assignment_of("torus_7")
    gens = reflection_generators(assign)
    x, y = assign.vectors[0], assign.vectors[next(iter(assign.subdivision.target.adjacency[0]))]
    R = gens.matrix(0)
    assert R @ x == -x
    assert R @ y == y
