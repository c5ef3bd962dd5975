"""Exact construction and certification of golden-ratio right-angled reflection groups."""

from __future__ import annotations

from .golden import GoldenMatrix, GoldenScalar, GoldenVector, PHI
from .complex import SimplicialComplex, build_complex
from .homology import HomologyProfile, homology

__all__ = [
    "GoldenMatrix", "GoldenScalar", "GoldenVector", "PHI",
    "SimplicialComplex", "build_complex", "HomologyProfile", "homology",
]
__version__ = "0.1.0"
