"""Cached pipeline stages shared across test modules."""

from __future__ import annotations

from functools import lru_cache

from goldnerve.construct import assign_vectors
from goldnerve.corpus import corpus
from goldnerve.subdivide import dranishnikov_subdivide, ps_subdivide

ACCEPTANCE_CORPUS = {"rp2_6": 6, "torus_7": 7, "dunce_hat_2": 6, "dunce_hat_3": 8, "dunce_hat_5": 11, "poincare_16": 16}


@lru_cache(maxsize=None)
def complex_of(name: str):
    return corpus(name)


@lru_cache(maxsize=None)
def subdivision_of(name: str):
    L = complex_of(name)
    return ps_subdivide(L) if L.dimension == 3 else dranishnikov_subdivide(L)


@lru_cache(maxsize=None)
def assignment_of(name: str):
    return assign_vectors(subdivision_of(name))
