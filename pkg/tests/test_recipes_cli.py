import csv
import io
import json

import pytest

from galois_hull.cli import CSV_COLUMNS, main
from galois_hull.errors import RecipeInvalid
from galois_hull.field import field_from_order
from galois_hull.recipes import build, parse_element

REP3 = {"kind": "explicit", "q": 3, "generator": [[1, 1, 1, 1, 1]]}
CYCLIC9 = {"kind": "cyclic", "q": 9, "n": 8, "exponents": [2, 3, 4, 5]}
GAB = {"kind": "gabidulin", "q": 3, "m": 3, "k": 2}
PAIR4 = {"kind": "explicit", "q": 4, "generator": [[1, 1]]}


@pytest.fixture
def recipe(tmp_path):
    def write(doc, name="r.json"):
        p = tmp_path / name
        p.write_text(json.dumps(doc))
        return str(p)

    return write


@pytest.fixture(autouse=True)
def isolated_catalog(tmp_path, monkeypatch):
    monkeypatch.setenv("GALOIS_HULL_CATALOG", str(tmp_path / "cat.jsonl"))


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_build_summaries(capsys, recipe):
    for doc, want in [(REP3, "[5,1]_3"), (CYCLIC9, "[8,4]_9"), (GAB, "[3,2]_27")]:
        code, out, _ = run(capsys, "build", recipe(doc))
        assert code == 0 and json.loads(out)["summary"] == want


def test_build_round_trip_keeps_record_id(capsys, recipe):
    _, out, _ = run(capsys, "build", recipe(CYCLIC9), "--s", "1")
    doc = json.loads(out)
    _, again, _ = run(capsys, "build", recipe(doc["recipe"], "canon.json"), "--s", "1")
    assert json.loads(again)["record"]["id"] == doc["record"]["id"]


def test_hull_sweep(capsys, recipe):
    code, out, _ = run(capsys, "hull", recipe(PAIR4), "--sweep")
    rows = json.loads(out)["hulls"]
    assert code == 0 and [(r["s"], r["hull_dim"]) for r in rows] == [(0, 1), (1, 1)]
    assert all(r["distance"] == "skipped" for r in rows)
    full = {"kind": "explicit", "q": 9, "generator": [[1, 0], [0, 1]]}
    _, out, _ = run(capsys, "hull", recipe(full), "--sweep")
    assert all(r["hull_dim"] == 0 and r["lcd"] for r in json.loads(out)["hulls"])


def test_eaqec_output(capsys, recipe):
    code, out, _ = run(capsys, "eaqec", recipe(REP3))
    doc = json.loads(out)
    assert code == 0 and doc["label"] == "[[5,1,5;4]]_3" and doc["eaqec"]["me"]
    assert set(doc["verification"]) >= {"dims", "hull_dim", "lcd_certificate", "me"}
    assert doc["config"]["seed"] == 0


def test_csv_column_order(capsys, recipe):
    code, out, _ = run(capsys, "eaqec", recipe(REP3), "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0 and tuple(rows[0]) == CSV_COLUMNS
    assert rows[1][:7] == ["3", "5", "1", "5", "false", "4", "true"]
    code, out, _ = run(capsys, "--format", "csv", "reproduce", "1")
    assert tuple(next(csv.reader(io.StringIO(out)))) == CSV_COLUMNS


def test_table_format(capsys, recipe):
    code, out, _ = run(capsys, "hull", recipe(PAIR4), "--format", "table")
    assert code == 0 and out.splitlines()[0].split()[:2] == ["s", "n"]


def test_reproduce_deterministic_bytes(capsys):
    _, a, _ = run(capsys, "reproduce", "3", "--seed", "5")
    _, b, _ = run(capsys, "reproduce", "3", "--seed", "5")
    assert a == b and json.loads(a)["seed"] == 5


def test_bad_inputs_exit_2(capsys, recipe, tmp_path):
    bad = [
        {"kind": "explicit", "q": 6, "generator": [[1]]},
        {"kind": "explicit", "q": 3, "generator": [[0, 0]]},
        {"kind": "wavelet", "q": 3},
        {"kind": "cyclic", "q": 3, "n": 8, "exponents": [1]},
        {"kind": "matrix_product", "q": 3, "A": [[1, 1], [1, -1]], "constituents": [REP3, {"kind": "explicit", "generator": [[1]]}]},
    ]
    for doc in bad:
        code, _, err = run(capsys, "build", recipe(doc))
        assert code == 2 and "invalid recipe" in err
    (tmp_path / "broken.json").write_text("{not json")
    assert run(capsys, "build", str(tmp_path / "broken.json"))[0] == 2
    assert run(capsys, "eaqec", recipe(REP3), "--s", "3")[0] == 2


def test_permissive_closure_flag(capsys, recipe):
    doc = {"kind": "cyclic", "q": 2, "n": 7, "exponents": [1]}
    assert run(capsys, "build", recipe(doc))[0] == 2
    code, out, _ = run(capsys, "--permissive-closure", "build", recipe(doc))
    assert code == 0 and json.loads(out)["warnings"]


def test_verify_exit_codes(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", "decomposition", "--cases", "20", "--seed", "9")
    assert code == 0 and json.loads(out)["passed"] == 20
    code, out, _ = run(capsys, "verify", "gabidulin_hull")
    assert code == 0 and json.loads(out)["cases"] == 18


def test_recipe_diagnostics_name_the_field():
    with pytest.raises(RecipeInvalid) as exc:
        build({"kind": "matrix_product", "q": 3, "A": [[1, 1], [1, 2]], "constituents": [REP3, {"kind": "cyclic", "exponents": [1]}]})
    assert exc.value.path == "constituents[1].n"
    with pytest.raises(RecipeInvalid) as exc:
        build({"kind": "explicit", "q": 3, "generator": [[1, 1], [1]]})
    assert exc.value.path == "generator[1]"


def test_recipe_element_encodings():
    f = field_from_order(9)
    assert parse_element(f, -1, "x") == 2
    assert parse_element(f, [0, 1], "x") == 3
    with pytest.raises(RecipeInvalid):
        parse_element(f, 9, "x")
    b = build({"kind": "explicit", "q": 9, "generator": [[-1, [0, 1]]]})
    assert b.code.rows == ((1, f.mul(f.inv(2), 3)),)
    assert b.recipe["field"] == f.descriptor()
