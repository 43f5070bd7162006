import json
from pathlib import Path

import jsonschema
import numpy as np
import pytest

from codemorph.cli import main
from codemorph.schemas import SCHEMAS

DATA = Path(__file__).resolve().parents[1] / "tutorials" / "data"
EX1 = str(DATA / "example1.code")
C = str(DATA / "C.bmat")
CP = str(DATA / "C_prime.bmat")
H = str(DATA / "H.bmat")


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_cf_golden(capsys):
    code, out, _ = run(capsys, "cf", EX1)
    assert code == 0
    assert out.splitlines() == ["x1*(1-x2)", "x4*(1-x3)", "x2*(1-x1)*(1-x3)", "x3*(1-x2)*(1-x4)"]


def test_defect_and_free(capsys):
    assert run(capsys, "defect", EX1)[1].split("\n")[:3] == ["t = 9", "|C| = 7", "d = 2"]
    assert run(capsys, "free", EX1)[1].strip() == "2 3"


def test_covering_table(capsys):
    code, out, _ = run(capsys, "covering", EX1)
    rows = [line.split() for line in out.splitlines()[1:]]
    assert [r[1:3] for r in rows] == [["no", "no"], ["yes", "yes"], ["yes", "yes"], ["no", "no"]]


def test_brank_and_iso(capsys):
    assert run(capsys, "brank", C)[1].startswith("brank = 2")
    assert run(capsys, "brank", CP)[1].startswith("brank = 3")
    assert run(capsys, "iso", C, CP)[1].strip() == "isomorphic"
    assert run(capsys, "mrank", C)[1].strip() == "mrank = 2"


def test_factorize_example(capsys):
    code, out, _ = run(capsys, "factorize", EX1, "--via", H)
    assert code == 0
    assert out.split() == ["000", "100", "010", "001", "110", "011", "111"]


def test_factorize_failure(capsys):
    code, _, err = run(capsys, "factorize", CP, "--via", C)
    assert code == 1 and "codemorph:" in err


def test_exit_codes(capsys, tmp_path):
    assert run(capsys, "free", CP)[0] == 1
    assert run(capsys, "free", CP, "--reduce")[0] == 0
    assert run(capsys, "defect", tmp_path / "missing.code")[0] == 1
    bad = tmp_path / "bad.bmat"
    bad.write_text("01\n1\n")
    assert run(capsys, "reduce", bad)[0] == 1
    assert run(capsys, "cf", "--census", "6")[0] == 2
    assert run(capsys, "poset", "--seed-lambda", "5")[0] == 2
    assert run(capsys, "defect", EX1, "--threads", "0")[0] == 1
    assert run(capsys, "nosuch")[0] == 1
    assert run(capsys, "poset")[0] == 1


def test_resource_error_reports_bounds(capsys, tmp_path):
    big = tmp_path / "big.bmat"
    rng = np.random.default_rng(0)
    rows = ["".join(str(int(b)) for b in row) for row in rng.integers(0, 2, (25, 25))]
    big.write_text("\n".join(rows) + "\n")
    code, _, err = run(capsys, "brank", big, "--exact")
    assert code == 2 and "known bounds" in err


JSON_CASES = [
    ("cf", ["cf", EX1]),
    ("cf-census", ["cf", "--census", "2"]),
    ("complete", ["complete", EX1, "--union"]),
    ("reduce", ["reduce", CP]),
    ("trunks", ["trunks", EX1]),
    ("defect", ["defect", EX1]),
    ("covering", ["covering", EX1]),
    ("covering", ["covering", EX1, "--neuron", "2"]),
    ("free", ["free", EX1]),
    ("brank", ["brank", CP]),
    ("brank", ["brank", CP, "--bounds"]),
    ("brank", ["brank", EX1, "--chain"]),
    ("mrank", ["mrank", EX1]),
    ("factorize", ["factorize", EX1, "--via", H]),
    ("iso", ["iso", C, EX1]),
    ("conjecture-scan", ["conjecture-scan", "--samples", "10", "--nmax", "3"]),
]


@pytest.mark.parametrize("schema,argv", JSON_CASES, ids=[" ".join(a[:1] + a[2:]) for _, a in JSON_CASES])
def test_json_matches_schema(capsys, schema, argv):
    code, out, _ = run(capsys, *argv, "--json")
    assert code == 0
    jsonschema.validate(json.loads(out), SCHEMAS[schema])


def test_poset_outputs(capsys, tmp_path):
    code, out, _ = run(capsys, "poset", "--seed-lambda", "3")
    assert code == 0
    assert "classes: 82" in out and "lambda = 4: 24" in out and "BMF edges: 50" in out
    code, out, _ = run(capsys, "poset", "--seed-lambda", "2", "--json")
    jsonschema.validate(json.loads(out), SCHEMAS["poset"])
    dot = tmp_path / "p.dot"
    run(capsys, "poset", "--seed", EX1, "--dot", dot, "--limit", "5")
    assert dot.read_text().startswith("digraph")


def test_verify_quick_json(capsys):
    code, out, _ = run(capsys, "verify", "--quick", "--json")
    data = json.loads(out)
    jsonschema.validate(data, SCHEMAS["verify"])
    assert code == 0 and data["ok"]


def test_deterministic_output(capsys):
    for argv in (["conjecture-scan", "--samples", "15", "--seed", "3"], ["poset", "--seed-lambda", "2", "--json"], ["brank", EX1, "--chain"]):
        first = run(capsys, *argv)[1]
        assert run(capsys, *argv)[1] == first
