from __future__ import annotations

import pytest

from goldnerve.classify import classify_limit_set, menger_evidence
from goldnerve.complex import ComplexError, SimplicialComplex
from goldnerve.corpus import corpus, dunce_hat
from goldnerve.homology import cohomology, homology
from oracles import cohomology_dims_mod_p, predicted_mod_p_dims


def test_verdicts_carry_evidence_and_caveats():
    for name in ("rp2_6", "torus_7", "poincare_16", "dunce_hat_3", "sphere_2"):
        v = classify_limit_set(corpus(name))
        assert v.evidence and v.caveats
        assert any("cited" in c for c in v.caveats)


def test_poincare_is_a_tagged_candidate():
    v = classify_limit_set(corpus("poincare_16"))
    assert v.kind == "cech_sphere"
    assert any("tag" in c for c in v.caveats)


def test_untagged_homology_sphere_is_not_called_standard():
    L = corpus("poincare_16")
    bare = SimplicialComplex.from_json({**L.to_json(), "tags": {}})
    v = classify_limit_set(bare)
    assert v.kind == "cech_sphere" and "non-standard" not in v.label


def test_non_prime_dunce_hat_unclassified():
    v = classify_limit_set(dunce_hat(4))
    assert v.kind == "unclassified"


def test_wedge_is_unclassified():
    L = SimplicialComplex([["a", "b"], ["b", "c"], ["c", "a"], ["a", "d"], ["d", "e"], ["e", "a"]])
    assert classify_limit_set(L).kind == "unclassified"


def test_deterministic():
    L = corpus("torus_7")
    assert classify_limit_set(L) == classify_limit_set(L)


@pytest.mark.parametrize("p", [2, 3])
def test_menger_evidence_passes(p):
    ev = menger_evidence(dunce_hat(p))
    assert ev.all_pass, ev.failures[:3]
    assert any("not checked" in n for n in ev.notes)
    assert ev.removed_vertex.startswith("v[")


def test_menger_every_off_core_vertex_dunce_3():
    L = dunce_hat(3)
    for v in L.vertices[3:]:
        assert menger_evidence(L, v).checks["homology_of_circle"]


def test_menger_guards():
    with pytest.raises(ComplexError):
        menger_evidence(dunce_hat(3), "1")
    with pytest.raises(ComplexError):
        menger_evidence(corpus("torus_7"))


def test_cohomology_sweep_agrees_with_cochain_oracle():
    """The complement check's H^k computation agrees with the F_p cochain oracle on small pieces."""
    from goldnerve.subdivide import dranishnikov_subdivide
    L = dunce_hat(2)
    K = dranishnikov_subdivide(L).target
    K = K.full_subcomplex([u for u in K.vertices if u != "v[4]"])
    rest = K.full_subcomplex([u for u in K.vertices if not u.startswith("f[4")])
    for piece in (K, rest, K.full_subcomplex(K.vertices[:40])):
        assert piece.n_vertices <= 60
        h = homology(piece)
        for prime in (2, 3, 5):
            assert cohomology_dims_mod_p(piece, prime) == predicted_mod_p_dims(h, prime, piece.dimension + 1)
        c = cohomology(piece)
        assert [c.group(k)[0] for k in range(len(c.betti))] == list(h.betti)
