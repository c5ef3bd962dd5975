from __future__ import annotations

import json

import pytest

from goldnerve.cli import main


def _run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_corpus_list(capsys):
    code, out, _ = _run(capsys, "corpus", "list")
    names = out.split()
    assert code == 0
    assert {"rp2_6", "torus_7", "dunce_hat_2", "dunce_hat_3", "dunce_hat_5", "poincare_16"} <= set(names)


def test_corpus_export_round_trip(tmp_path, capsys):
    path = tmp_path / "rp2.json"
    assert main(["corpus", "export", "rp2_6", "--out", str(path)]) == 0
    code, out, _ = _run(capsys, "subdivide", str(path))
    assert code == 0
    data = json.loads(out)
    assert data["level_counts"] == {"0": 6, "1": 15, "2": 30, "3": 0}


def test_unknown_entry_exit_2(capsys):
    code, _, err = _run(capsys, "corpus", "export", "nosuch")
    assert code == 2 and "unknown" in err


def test_missing_file_exit_2(capsys):
    assert _run(capsys, "certify", "/nonexistent/x.json")[0] == 2


def test_bad_usage_exit_2(capsys):
    assert _run(capsys, "frobnicate")[0] == 2
    assert _run(capsys, "certify", "rp2_6", "--n", "3")[0] == 2
    assert _run(capsys, "certify", "rp2_6", "--workers", "0")[0] == 2


def test_certify_deterministic(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["certify", "dunce_hat_2", "--no-timing", "--workers", "1", "--out", str(a)]) == 0
    assert main(["certify", "dunce_hat_2", "--no-timing", "--workers", "4", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_certify_failure_exit_1(tmp_path, capsys):
    # a single edge is not Zariski dense (its subdivision splits as a join)
    path = tmp_path / "edge.json"
    path.write_text(json.dumps({"maximal_simplices": [["a", "b"]], "name": "edge"}))
    code, out, _ = _run(capsys, "certify", str(path))
    assert code == 1
    verdicts = {c["check"]: c["verdict"] for c in json.loads(out)["certificates"]}
    assert verdicts["zariski_density"] == "fail" and verdicts["nerve"] == "pass"


def test_classify_rp2(capsys):
    code, out, _ = _run(capsys, "classify", "rp2_6", "--no-timing")
    data = json.loads(out)
    assert code == 0 and data["verdict"]["kind"] == "pontryagin_surface" and data["verdict"]["ambient_dimension"] == 6


def test_certify_poincare(capsys):
    code, out, _ = _run(capsys, "certify", "poincare_16", "--workers", "2")
    data = json.loads(out)
    assert code == 0
    assert data["summary"]["subdivision_vertices"] == 9122
    nerve = next(c for c in data["certificates"] if c["check"] == "nerve")
    assert nerve["pairs_checked"] == 9122 * 9121 // 2


def test_export_generators(capsys):
    code, out, _ = _run(capsys, "export-generators", "sphere_1")
    data = json.loads(out)
    assert code == 0 and data["n"] == 3 and len(data["generators"]) == 6


def test_selfcheck(capsys):
    code, out, _ = _run(capsys, "selfcheck", "--seed", "3", "--samples", "300")
    data = json.loads(out)
    assert code == 0 and data["all_pass"]
    cases = next(c for c in data["checks"] if c["check"] == "exhaustive_cases")["details"]
    assert (cases["case3_instances"], cases["case4_instances"]) == (78, 66)


@pytest.mark.parametrize("flag", ["--version", "--help"])
def test_info_flags(flag, capsys):
    assert _run(capsys, flag)[0] == 0
