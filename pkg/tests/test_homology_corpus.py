from __future__ import annotations

import pytest

from goldnerve.corpus import UnknownCorpusEntry, UnsupportedParameter, corpus, dunce_hat, generate_dunce_hat, sphere
from goldnerve.homology import cohomology, cohomology_vanishes_from, homology
from oracles import cohomology_dims_mod_p, predicted_mod_p_dims


@pytest.mark.parametrize("name, profile", [
    ("rp2_6", "H0=Z, H1=Z/2, H2=0"),
    ("torus_7", "H0=Z, H1=Z^2, H2=Z"),
    ("dunce_hat_2", "H0=Z, H1=Z/2, H2=0"),
    ("dunce_hat_3", "H0=Z, H1=Z/3, H2=0"),
    ("dunce_hat_5", "H0=Z, H1=Z/5, H2=0"),
    ("sphere_2", "H0=Z, H1=0, H2=Z"),
])
def test_corpus_homology(name, profile):
    assert str(homology(corpus(name), 2)) == profile


def test_poincare_sphere_data():
    L = corpus("poincare_16")
    assert L.f_vector == (16, 106, 180, 90)
    assert homology(L).matches_sphere(3)
    assert L.tags.get("not_homeomorphic_to_sphere")


def test_cohomology_shifts_torsion():
    c = cohomology(corpus("rp2_6"))
    assert c.group(1) == (0, ()) and c.group(2) == (0, (2,))
    assert not cohomology_vanishes_from(corpus("rp2_6"), 2)
    core = corpus("dunce_hat_3").full_subcomplex(["1", "2", "3"])
    assert cohomology_vanishes_from(core, 2) and not cohomology_vanishes_from(core, 1)


@pytest.mark.parametrize("p", [2, 3, 4, 5, 7])
def test_dunce_hat_generator(p):
    L = generate_dunce_hat(p)
    assert homology(L).group(1) == (0, (p,))
    assert L.n_vertices == -(-3 * p // 2) + 3
    for prime in (2, 3, 5, 7):
        assert cohomology_dims_mod_p(L, prime) == predicted_mod_p_dims(homology(L), prime, 3)


def test_unknown_and_unsupported():
    with pytest.raises(UnknownCorpusEntry):
        corpus("nosuch")
    with pytest.raises(UnsupportedParameter):
        dunce_hat(1)
    with pytest.raises(UnsupportedParameter):
        sphere(4)


def test_corpus_name_forms():
    assert corpus("dunce_hat(3)") == corpus("dunce_hat_3")
    assert corpus("sphere(2)") == corpus("sphere_2")
    assert corpus("simplex_skeleton(5,1)").f_vector == (5, 10)
