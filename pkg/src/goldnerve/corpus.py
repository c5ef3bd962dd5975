"""Built-in triangulations: projective plane, torus, dunce hats, spheres, skeleta.

Every entry is returned as a fresh :class:`SimplicialComplex` whose ``tags``
record what is known about it independently of any computation (for instance
the Poincare sphere's non-homeomorphism to S^3, which is cited, not computed).
"""

from __future__ import annotations

import json
import re
from functools import lru_cache
from importlib import resources
from itertools import combinations
from math import ceil

from .complex import ComplexError, SimplicialComplex
from .homology import homology


class UnknownCorpusEntry(ComplexError):
    pass


class UnsupportedParameter(ComplexError):
    pass


# Fig. 4 transcriptions.  Core circle is 1-2-3 throughout.
_DUNCE_FIG4 = {
    2: [
        (2, 3, 4), (1, 2, 4), (1, 3, 6), (2, 3, 6), (1, 2, 5),
        (1, 3, 5), (1, 4, 6), (2, 5, 6), (3, 4, 5), (4, 5, 6),
    ],
    3: [
        (1, 3, 6), (1, 2, 6), (2, 3, 7), (1, 3, 7), (1, 2, 8), (2, 3, 8),
        (1, 3, 4), (1, 2, 5), (2, 3, 5),
        (2, 6, 7), (1, 7, 8), (3, 4, 8), (1, 4, 5), (3, 5, 6),
        (4, 5, 6), (4, 6, 7), (4, 7, 8),
    ],
    5: [
        (1, 2, 8), (2, 3, 8), (1, 3, 9), (1, 2, 9), (2, 3, 10), (1, 3, 10),
        (1, 2, 11), (2, 3, 11), (1, 3, 4), (1, 2, 5), (2, 3, 5), (1, 3, 6),
        (1, 2, 6), (2, 3, 7), (1, 3, 7),
        (3, 8, 9), (2, 9, 10), (1, 10, 11), (3, 4, 11), (1, 4, 5),
        (3, 5, 6), (2, 6, 7), (1, 7, 8),
        (4, 5, 6), (4, 6, 7), (4, 7, 8), (4, 8, 9), (4, 9, 10), (4, 10, 11),
    ],
}

_CORE = {"core_vertices": ["1", "2", "3"], "core_edges": [["1", "2"], ["2", "3"], ["1", "3"]]}


def _labels(n: int) -> list[str]:
    return [str(i) for i in range(1, n + 1)]


def rp2_6() -> SimplicialComplex:
    """Six-vertex projective plane (the K6 triangulation)."""
    return SimplicialComplex(
        _DUNCE_FIG4[2], _labels(6), name="rp2_6",
        tags={"manifold": True, "orientable": False, **_CORE},
    )


def torus_7() -> SimplicialComplex:
    """Seven-vertex (Moebius-Csaszar) torus."""
    facets = []
    for i in range(7):
        facets.append((i, (i + 1) % 7, (i + 3) % 7))
        facets.append((i, (i + 2) % 7, (i + 3) % 7))
    return SimplicialComplex(
        [[str(v + 1) for v in f] for f in facets], _labels(7), name="torus_7",
        tags={"manifold": True, "orientable": True},
    )


def generate_dunce_hat(p: int) -> SimplicialComplex:
    """Triangulate the p-fold dunce hat on ceil(3p/2) + 3 vertices.

    The outer 3p-gon carries the boundary word (1 2 3)^p; an inner polygon on
    ceil(3p/2) vertices is joined to it, each inner vertex coning off two
    consecutive boundary segments (one vertex cones a single segment when 3p
    is odd), and the inner polygon is fanned from its first vertex.
    """
    if p < 2:
        raise UnsupportedParameter(f"dunce hat needs p >= 2, got {p}")
    outer = 3 * p
    m = ceil(3 * p / 2)

    def lab(k: int) -> int:
        return k % 3 + 1

    inner = list(range(4, 4 + m))
    runs = []  # (start, segment count) per inner vertex
    if outer % 2:
        s = m
        runs.append((s, 1))
        for t in range(1, m):
            runs.append((s + 1 + 2 * (t - 1), 2))
    else:
        s = m - 1
        for t in range(m):
            runs.append((s + 2 * t, 2))
    tris = set()
    for v, (start, segs) in zip(inner, runs):
        for k in range(start, start + segs):
            tris.add(tuple(sorted((lab(k), lab(k + 1), v))))
    for t in range(m):
        v, w = inner[t], inner[(t + 1) % m]
        start, segs = runs[t]
        tris.add(tuple(sorted((v, w, lab(start + segs)))))
    for t in range(1, m - 1):
        tris.add(tuple(sorted((inner[0], inner[t], inner[t + 1]))))
    return SimplicialComplex(sorted(tris), _labels(m + 3), name=f"dunce_hat_{p}",
                             tags={"dunce_hat_p": p, **_CORE})


def _validate_dunce(L: SimplicialComplex, p: int) -> None:
    h = homology(L)
    if h.group(0) != (1, ()) or h.group(1) != (0, (p,)) or not h.is_trivial(2):
        raise UnsupportedParameter(f"unsupported p={p}: generated dunce hat has homology {h}")


def dunce_hat(p: int, *, validate: bool = True) -> SimplicialComplex:
    """p-fold dunce hat; Fig. 4 instances for p = 2, 3, 5, generated otherwise."""
    if p in _DUNCE_FIG4:
        L = SimplicialComplex(_DUNCE_FIG4[p], _labels(ceil(3 * p / 2) + 3), name=f"dunce_hat_{p}",
                              tags={"dunce_hat_p": p, **_CORE})
    else:
        L = generate_dunce_hat(p)
    if validate:
        _validate_dunce(L, p)
    return L


@lru_cache(maxsize=1)
def _poincare_data() -> dict:
    text = resources.files("goldnerve.data").joinpath("poincare_16.json").read_text(encoding="utf-8")
    return json.loads(text)


def poincare_16() -> SimplicialComplex:
    """Bjorner-Lutz 16-vertex Poincare homology sphere (shipped data file)."""
    return SimplicialComplex.from_json(_poincare_data())


def simplex_skeleton(n: int, d: int) -> SimplicialComplex:
    """The d-skeleton of the (n-1)-simplex on vertices 1..n."""
    if not 1 <= d <= 3 or n < d + 1:
        raise UnsupportedParameter(f"simplex_skeleton needs 1 <= d <= 3 and n >= d + 1, got n={n}, d={d}")
    return SimplicialComplex(
        [[str(v) for v in c] for c in combinations(range(1, n + 1), d + 1)], _labels(n),
        name=f"simplex_skeleton_{n}_{d}",
    )


def sphere(d: int) -> SimplicialComplex:
    """Boundary of the (d+1)-simplex: the minimal (d+2)-vertex d-sphere."""
    if not 1 <= d <= 3:
        raise UnsupportedParameter(f"sphere dimension must be 1..3, got {d}")
    n = d + 2
    return SimplicialComplex(
        [[str(v) for v in c] for c in combinations(range(1, n + 1), d + 1)], _labels(n),
        name=f"sphere_{d}", tags={"manifold": True, "orientable": True, "standard_sphere": d},
    )


CORPUS_NAMES = (
    "rp2_6", "torus_7", "dunce_hat_2", "dunce_hat_3", "dunce_hat_5", "poincare_16",
    "sphere_1", "sphere_2", "sphere_3",
)

_PATTERNS = [
    (re.compile(r"^rp2_6$"), lambda m: rp2_6()),
    (re.compile(r"^torus_7$"), lambda m: torus_7()),
    (re.compile(r"^poincare_16$"), lambda m: poincare_16()),
    (re.compile(r"^dunce_hat[_(](\d+)\)?$"), lambda m: dunce_hat(int(m.group(1)))),
    (re.compile(r"^sphere[_(](\d+)\)?$"), lambda m: sphere(int(m.group(1)))),
    (re.compile(r"^simplex_skeleton[_(](\d+)[_,]\s*(\d+)\)?$"),
     lambda m: simplex_skeleton(int(m.group(1)), int(m.group(2)))),
]


def corpus(name: str) -> SimplicialComplex:
    """Look a corpus entry up by name, e.g. ``dunce_hat_3`` or ``simplex_skeleton(5,3)``."""
    key = name.strip()
    for pat, make in _PATTERNS:
        m = pat.match(key)
        if m:
            return make(m)
    raise UnknownCorpusEntry(f"unknown corpus entry {name!r}; known: {', '.join(CORPUS_NAMES)}")
