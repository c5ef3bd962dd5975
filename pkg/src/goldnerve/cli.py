"""Command-line entry point: ``goldnerve <command> ...``.

Exit codes: 0 success or all checks pass, 1 a check failed, 2 usage or data error.
"""

from __future__ import annotations

import argparse
import json
import logging
import math
import random
import sys
from pathlib import Path

from . import __version__
from .certify import (
    Certificate, certify_flag_no_square, certify_galois_positive, certify_lattice_membership, certify_nerve,
    certify_signature, certify_zariski, exhaustive_case_checks, expected_block_rows, table_rows_for_block,
)
from .classify import classify_limit_set
from .complex import ComplexError, SimplicialComplex, is_flag_no_square
from .construct import LorentzForm, assign_vectors, reflection_generators
from .corpus import CORPUS_NAMES, corpus
from .golden import GoldenScalar, GoldenVector
from .polytope import canonical_block, generate_600cell, generate_icosahedron
from .subdivide import dranishnikov_subdivide, ps_subdivide
from .sweep import AVAILABLE

log = logging.getLogger("goldnerve")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def load_input(source: str) -> SimplicialComplex:
    """A corpus name or a path to a complex JSON file."""
    path = Path(source)
    if path.suffix == ".json" or path.exists():
        if not path.exists():
            raise UsageError(f"no such file: {source}")
        try:
            return SimplicialComplex.load(path)
        except (OSError, ValueError, KeyError, TypeError) as exc:
            raise UsageError(f"cannot read {source}: {exc}") from exc
    return corpus(source)


def _subdivide(L: SimplicialComplex):
    return ps_subdivide(L) if L.dimension == 3 else dranishnikov_subdivide(L)


def _resolve_n(L: SimplicialComplex, n: int | None) -> int:
    n = L.n_vertices if n is None else n
    if n < L.n_vertices:
        raise UsageError(f"--n {n} is smaller than the {L.n_vertices} vertices of {L.name or 'L'}")
    if n < 2:
        raise UsageError("the ambient form needs n >= 2")
    return n


def certify_complex(L: SimplicialComplex, n: int | None = None, workers: int = 1,
                    backend: str | None = None) -> tuple[list[Certificate], dict]:
    """Run the full pipeline on L; returns the certificates and a summary."""
    n = _resolve_n(L, n)
    sub = _subdivide(L)
    K = sub.target
    log.info("subdivided %s: %d vertices", L.name, K.n_vertices)
    assign = assign_vectors(sub, n)
    certs = [
        certify_signature(n),
        certify_galois_positive(n),
        certify_flag_no_square(K),
        certify_nerve(assign, workers=workers, backend=backend),
        certify_lattice_membership(reflection_generators(assign), assign),
        certify_zariski(L, assign),
    ]
    summary = {
        "input": L.name, "input_f_vector": list(L.f_vector), "n": n,
        "subdivision_vertices": K.n_vertices, "subdivision_f_vector": list(K.f_vector),
        "pairs": math.comb(K.n_vertices, 2),
    }
    return certs, summary


def _bundle(certs: list[Certificate], summary: dict, timing: bool) -> dict:
    return {"summary": summary, "all_pass": all(c.passed for c in certs),
            "certificates": [c.to_json(timing=timing) for c in certs]}


def _emit(data: dict | list | str, out: str | None) -> None:
    text = data if isinstance(data, str) else json.dumps(data, indent=2, sort_keys=False)
    if out:
        Path(out).write_text(text + "\n")
        log.info("wrote %s", out)
    else:
        sys.stdout.write(text + "\n")


# commands

def cmd_corpus(args: argparse.Namespace) -> int:
    if args.action == "list":
        for name in CORPUS_NAMES:
            print(name)
        return EXIT_OK
    if not args.name:
        raise UsageError("corpus export needs a name")
    _emit(corpus(args.name).to_json(), args.out)
    return EXIT_OK


def cmd_subdivide(args: argparse.Namespace) -> int:
    sub = _subdivide(load_input(args.input))
    data = sub.to_json()
    data["level_counts"] = sub.level_counts()
    _emit(data, args.out)
    return EXIT_OK


def cmd_certify(args: argparse.Namespace) -> int:
    L = load_input(args.input)
    certs, summary = certify_complex(L, args.n, args.workers, args.backend)
    bundle = _bundle(certs, summary, not args.no_timing)
    _emit(bundle, args.out)
    for c in certs:
        log.info("%-20s %s", c.check, c.verdict)
    return EXIT_OK if bundle["all_pass"] else EXIT_FAIL


def cmd_classify(args: argparse.Namespace) -> int:
    L = load_input(args.input)
    certs, summary = certify_complex(L, args.n, args.workers, args.backend)
    bundle = _bundle(certs, summary, not args.no_timing)
    bundle["verdict"] = classify_limit_set(L, summary["n"]).to_json()
    _emit(bundle, args.out)
    return EXIT_OK if bundle["all_pass"] else EXIT_FAIL


def cmd_export_generators(args: argparse.Namespace) -> int:
    L = load_input(args.input)
    n = _resolve_n(L, args.n)
    gens = reflection_generators(assign_vectors(_subdivide(L), n))
    _emit({"n": n, "form": LorentzForm(n).matrix.to_json(), "generators": gens.to_json(),
           "commuting_pairs": [[gens.labels[i], gens.labels[j]] for i, j in gens.commuting_pairs]}, args.out)
    return EXIT_OK


def _random_vector(rng: random.Random, dim: int, sparse: bool) -> GoldenVector:
    coords = []
    for _ in range(dim):
        if sparse and rng.random() < 0.6:
            coords.append(GoldenScalar.from_ints(0, 0))
        else:
            coords.append(GoldenScalar.from_ints(rng.randint(-9, 9), rng.randint(-9, 9)))
    return GoldenVector(coords)


def _check(name: str, ok: bool, **details) -> dict:
    return {"check": name, "verdict": "pass" if ok else "fail", "details": details}


def selfcheck(seed: int = 0, samples: int = 2000, timing: bool = True) -> list[dict]:
    """Form, polytope, block, case-analysis and inner-product checks that need no input."""
    out = []
    for n in range(4, 17):
        out.append(certify_signature(n).to_json(timing))
        out.append(certify_galois_positive(n).to_json(timing))

    cell = generate_600cell()
    K = cell.complex
    degrees = {len(a) for a in cell.adjacency}
    out.append(_check("600_cell", len(cell.vertices) == 120 and degrees == {12} and len(cell.edges) == 720
                      and len(K.faces(3)) == 600 and is_flag_no_square(K),
                      vertices=len(cell.vertices), degrees=sorted(degrees), edges=len(cell.edges),
                      tetrahedra=len(K.faces(3))))
    ico = generate_icosahedron()
    tri = dranishnikov_subdivide(SimplicialComplex([["a", "b", "c"]], name="triangle")).target
    out.append(_check("icosahedron", ico.f_vector == (12, 30, 20) and is_flag_no_square(ico)
                      and tri.f_vector == (9, 18, 10),
                      f_vector=list(ico.f_vector), triangle_block_f_vector=list(tri.f_vector)))

    block = canonical_block()
    levels = [len(block.by_level(k)) for k in range(4)]
    got = table_rows_for_block([b.vector for b in block.by_level(3)])
    out.append(_check("tetrahedron_block", levels == [4, 6, 12, 94] and got == expected_block_rows(),
                      levels=levels, tau=list(block.tau), f_vector=list(block.complex.f_vector),
                      table_multiplicities=sorted(got.values())))
    out.append(exhaustive_case_checks().to_json(timing))

    rng = random.Random(seed)
    form = LorentzForm(8)
    mismatches = 0
    for _ in range(samples):
        x, y = (_random_vector(rng, form.dim, sparse=True) for _ in range(2))
        mismatches += form.inner(x, y) != form.inner_dense(x, y)
    out.append(_check("fast_vs_dense_inner", mismatches == 0, samples=samples, seed=seed, mismatches=mismatches))
    return out


def cmd_selfcheck(args: argparse.Namespace) -> int:
    report = selfcheck(args.seed, args.samples, not args.no_timing)
    ok = all(r["verdict"] == "pass" for r in report)
    _emit({"all_pass": ok, "checks": report}, args.out)
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="goldnerve", description="Thin reflection groups over Z[phi] from flag-no-square nerves.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("corpus", help="list or export built-in complexes")
    c.add_argument("action", choices=["list", "export"])
    c.add_argument("name", nargs="?")
    c.add_argument("--out")
    c.set_defaults(func=cmd_corpus)

    s = sub.add_parser("subdivide", help="write the flag-no-square subdivision with annotations")
    s.add_argument("input")
    s.add_argument("--out")
    s.set_defaults(func=cmd_subdivide)

    def pipeline_args(q: argparse.ArgumentParser) -> None:
        q.add_argument("input")
        q.add_argument("--n", type=int, default=None, help="ambient dimension (default: vertex count)")
        q.add_argument("--workers", type=int, default=1)
        q.add_argument("--backend", choices=list(AVAILABLE), default=None)
        q.add_argument("--out")
        q.add_argument("--no-timing", action="store_true", help="zero elapsed_ms for byte-identical output")

    for name, func, hlp in (("certify", cmd_certify, "run every certification pass"),
                            ("classify", cmd_classify, "certify, then predict the limit-set type")):
        q = sub.add_parser(name, help=hlp)
        pipeline_args(q)
        q.set_defaults(func=func)

    g = sub.add_parser("export-generators", help="write the reflection matrices")
    g.add_argument("input")
    g.add_argument("--n", type=int, default=None)
    g.add_argument("--out")
    g.set_defaults(func=cmd_export_generators)

    k = sub.add_parser("selfcheck", help="checks that need no input complex")
    k.add_argument("--seed", type=int, default=0)
    k.add_argument("--samples", type=int, default=2000)
    k.add_argument("--out")
    k.add_argument("--no-timing", action="store_true")
    k.set_defaults(func=cmd_selfcheck)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s", stream=sys.stderr)
    if getattr(args, "workers", 1) < 1:
        print("error: --workers must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, ComplexError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
