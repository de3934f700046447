import json
import threading

import pytest

from galois_hull.catalog import ENV_VAR, REQUIRED_CHECKS, Catalog, CatalogRecord, catalog_path, make_record, record_id
from galois_hull.cli import main
from galois_hull.errors import CatalogCorrupt
from galois_hull.recipes import build

RECIPES = [
    {"kind": "explicit", "q": 3, "generator": [[1, 1, 1, 1, 1]]},
    {"kind": "explicit", "q": 4, "generator": [[1, 1]]},
    {"kind": "cyclic", "q": 9, "n": 8, "exponents": [2, 3, 4, 5]},
    {"kind": "gabidulin", "q": 2, "m": 3, "k": 2},
]


def record(doc, s=0):
    b = build(doc)
    return make_record(b.recipe, b.code, s)[0]


def test_id_is_content_hash():
    a, b = record(RECIPES[0]), record(RECIPES[0])
    assert a.id == b.id == record_id(a.recipe, 0)
    assert record(RECIPES[3], 1).id != record(RECIPES[3], 2).id


def test_verification_keys():
    for doc in RECIPES:
        r = record(doc)
        assert set(REQUIRED_CHECKS) <= set(r.verification)
        assert all(v in ("pass", "fail", "skipped") for v in r.verification.values())
        assert r.verification["me"] == "pass"


def test_append_dedupes(tmp_path):
    cat = Catalog(tmp_path / "c.jsonl")
    r = record(RECIPES[0])
    assert cat.append(r) and not cat.append(r)
    (stored,) = cat.records()
    assert stored.id == r.id and stored.created_at is not None
    assert CatalogRecord.from_json(json.loads(json.dumps(stored.to_json()))) == stored


def test_query_filters(tmp_path):
    cat = Catalog(tmp_path / "c.jsonl")
    for doc in RECIPES:
        cat.append(record(doc))
    assert len(cat.query()) == 4
    assert len(cat.query(me=True)) == 4 and cat.query(me=False) == []
    assert [r.eaqec["q"] for r in cat.query(q=9)] == [9]
    assert {r.eaqec["n"] for r in cat.query(n_min=3, n_max=5)} == {3, 5}
    assert all(r.eaqec["d"] >= 5 for r in cat.query(d_min=5))


def test_corrupt_line_is_reported(tmp_path):
    path = tmp_path / "c.jsonl"
    cat = Catalog(path)
    cat.append(record(RECIPES[0]))
    with open(path, "a") as fh:
        fh.write("{truncated\n")
    with pytest.raises(CatalogCorrupt) as exc:
        cat.records()
    assert exc.value.line_no == 2
    assert main(["catalog", "query", "--catalog", str(path)]) == 2


def test_env_var_and_explicit_path(tmp_path, monkeypatch):
    monkeypatch.setenv(ENV_VAR, str(tmp_path / "env.jsonl"))
    assert catalog_path() == tmp_path / "env.jsonl"
    assert catalog_path(tmp_path / "x.jsonl") == tmp_path / "x.jsonl"
    monkeypatch.delenv(ENV_VAR)
    assert catalog_path().name == "galois_hull_catalog.jsonl"


def test_cli_append_and_query(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv(ENV_VAR, str(tmp_path / "cli.jsonl"))
    assert main(["catalog", "query"]) == 0
    assert json.loads(capsys.readouterr().out)["count"] == 0
    rp = tmp_path / "r.json"
    rp.write_text(json.dumps(RECIPES[0]))
    for _ in range(2):
        assert main(["catalog", "append", str(rp)]) == 0
    assert main(["catalog", "query", "--me"]) == 0
    out = capsys.readouterr().out.strip().split("\n{")
    assert json.loads("{" + out[-1])["count"] == 1


def test_concurrent_appends_keep_one_copy(tmp_path):
    cat = Catalog(tmp_path / "c.jsonl")
    recs = [record(doc) for doc in RECIPES]
    threads = [threading.Thread(target=cat.append, args=(r,)) for r in recs * 3]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert sorted(r.id for r in cat.records()) == sorted(r.id for r in recs)
