from __future__ import annotations

import random

import networkx as nx
import numpy as np
import pytest

from goldnerve.complex import is_flag_no_square
from goldnerve.golden import ONE, PHI, GoldenMatrix
from goldnerve.polytope import (
    bn_matrix, build_g, canonical_block, generate_600cell, generate_icosahedron, lorentz_image, tau_corner,
)
from oracles import clique_counts


def _graph(K):
    G = nx.Graph()
    G.add_nodes_from(K.vertices)
    G.add_edges_from((K.vertices[i], K.vertices[j]) for i, j in K.edges())
    return G


def test_600cell_unit_vectors_and_counts():
    cell = generate_600cell()
    assert all(v.dot(v) == ONE for v in cell.vertices)
    A = np.zeros((120, 120), dtype=np.int64)
    for i, j in cell.edges:
        A[i, j] = A[j, i] = 1
    assert clique_counts(A) == (720, 1200, 600)
    assert cell.complex.f_vector == (120, 720, 1200, 600)


def test_icosahedron():
    ico = generate_icosahedron()
    assert ico.f_vector == (12, 30, 20)
    assert all(len(a) == 5 for a in ico.adjacency)
    assert is_flag_no_square(ico)


def test_g_diagonalises_b4():
    G = build_g()
    assert G.gram == GoldenMatrix.diagonal([2, 2, 2, 2, -PHI])
    assert G.inverse @ G.g == GoldenMatrix.identity(5)


def test_lorentz_images_are_unit_for_b4():
    B = bn_matrix(4)
    for z in generate_600cell().vertices[:30]:
        x = lorentz_image(z)
        assert (B @ x).dot(x) == ONE


def test_tau_is_a_tetrahedron():
    block = canonical_block()
    cell = generate_600cell()
    assert tuple(str(t) for t in block.tau) in {cell.complex.labels_of(f) for f in cell.complex.faces(3)}
    for m, t in enumerate(block.tau):
        assert lorentz_image(cell.vertices[t]) == tau_corner(m)


def test_block_shape():
    block = canonical_block()
    assert [len(block.by_level(k)) for k in range(4)] == [4, 6, 12, 94]
    assert block.complex.f_vector == (116, 678, 1106, 543)
    assert is_flag_no_square(block.complex)


@pytest.mark.slow
def test_block_is_the_same_for_sampled_tetrahedra():
    """Deleting any tetrahedron of the 600-cell leaves an isomorphic block."""
    cell = generate_600cell()
    canon = _graph(canonical_block().complex)
    tets = cell.complex.faces(3)
    rng = random.Random(7)
    for t in rng.sample(tets, 20):
        rest = cell.complex.full_subcomplex([v for i, v in enumerate(cell.complex.vertices) if i not in t])
        assert nx.is_isomorphic(_graph(rest), canon)


def test_block_face_is_the_triangle_block():
    ico = generate_icosahedron()
    block = canonical_block()
    face_slots = {0, 1, 2}
    verts = [str(b.cell_index) for b in block.vertices if b.level <= 2 and set(b.slots) <= face_slots]
    face = block.complex.full_subcomplex(verts)
    tri = ico.faces(2)[0]
    rest = ico.full_subcomplex([v for i, v in enumerate(ico.vertices) if i not in tri])
    assert nx.is_isomorphic(_graph(face), _graph(rest))
