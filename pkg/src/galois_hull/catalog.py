"""Append-only JSON-lines catalog of EAQEC parameter rows."""

from __future__ import annotations

import fcntl
import hashlib
import json
import os
from contextlib import contextmanager
from dataclasses import dataclass, replace
from datetime import datetime, timezone
from pathlib import Path

from ._vec import span_array
from .codes import DEFAULT_DISTANCE_BUDGET, LinearCode, hull_decompose, min_distance
from .eaqec import EaqecParams, eaqec_from_hull_decomposition
from .errors import CatalogCorrupt
from .recipes import canonical_json
from .verify import BRUTE_LIMIT, brute_annihilator

ENV_VAR = "GALOIS_HULL_CATALOG"
DEFAULT_PATH = "galois_hull_catalog.jsonl"
TOOL_VERSION = "0.1.0"
REQUIRED_CHECKS = ("dims", "hull_dim", "lcd_certificate", "me")


def record_id(recipe: dict, s: int) -> str:
    return hashlib.sha256(canonical_json({"recipe": recipe, "s": s}).encode()).hexdigest()


@dataclass(frozen=True)
class CatalogRecord:
    id: str
    recipe: dict
    s: int
    eaqec: dict
    verification: dict
    created_at: str | None = None
    tool_version: str = TOOL_VERSION

    def to_json(self, with_time: bool = True) -> dict:
        doc = {
            "id": self.id,
            "recipe": self.recipe,
            "s": self.s,
            "eaqec": self.eaqec,
            "verification": self.verification,
            "tool_version": self.tool_version,
        }
        if with_time:
            doc["created_at"] = self.created_at
        return doc

    @classmethod
    def from_json(cls, doc: dict) -> "CatalogRecord":
        missing = [k for k in ("id", "recipe", "s", "eaqec", "verification") if k not in doc]
        if missing:
            raise ValueError(f"missing keys {missing}")
        if not set(REQUIRED_CHECKS) <= set(doc["verification"]):
            raise ValueError("verification map lacks required checks")
        return cls(
            doc["id"],
            doc["recipe"],
            int(doc["s"]),
            doc["eaqec"],
            doc["verification"],
            doc.get("created_at"),
            doc.get("tool_version", TOOL_VERSION),
        )


def verify_pipeline(code: LinearCode, s: int, params: EaqecParams) -> dict[str, str]:
    """Independent re-checks of one pipeline run: pass / fail / skipped per check."""
    dec = hull_decompose(code, s)
    out = {"dims": "pass" if dec.h + dec.complement.k == code.k and params.k == code.k - dec.h else "fail"}
    if code.q**code.n <= BRUTE_LIMIT:
        # hull dimension from the annihilator enumerated straight from the form
        ann = {tuple(int(x) for x in r) for r in brute_annihilator(code, s)}
        in_hull = sum(tuple(int(x) for x in v) in ann for v in span_array(code.field, code.rows, code.n))
        out["hull_dim"] = "pass" if in_hull == code.q**dec.h else "fail"
    else:
        out["hull_dim"] = "skipped"
    out["lcd_certificate"] = "pass" if dec.certificate_nonsingular else "fail"
    out["me"] = "pass" if params.is_me else "fail"
    return out


def make_record(recipe: dict, code: LinearCode, s: int, budget: int = DEFAULT_DISTANCE_BUDGET) -> tuple[CatalogRecord, EaqecParams]:
    d_report = min_distance(code, budget)
    params = eaqec_from_hull_decomposition(code, s, d_report, budget)
    eaq = {k: v for k, v in params.to_json().items() if k != "provenance"}
    eaq["h"] = params.provenance["h"]
    rec = CatalogRecord(record_id(recipe, s), recipe, s, eaq, verify_pipeline(code, s, params))
    return rec, params


def catalog_path(explicit: str | Path | None = None) -> Path:
    return Path(explicit or os.environ.get(ENV_VAR) or DEFAULT_PATH)


@contextmanager
def _locked(path: Path, mode: str, lock: int):
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, mode, encoding="utf-8") as fh:
        fcntl.flock(fh.fileno(), lock)
        try:
            yield fh
        finally:
            fcntl.flock(fh.fileno(), fcntl.LOCK_UN)


def _parse(lines: list[str]) -> list[CatalogRecord]:
    out = []
    for no, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            out.append(CatalogRecord.from_json(json.loads(line)))
        except (json.JSONDecodeError, ValueError, TypeError, AttributeError) as exc:
            raise CatalogCorrupt(no, str(exc)) from None
    return out


class Catalog:
    def __init__(self, path: str | Path | None = None) -> None:
        self.path = catalog_path(path)

    def records(self) -> list[CatalogRecord]:
        if not self.path.exists():
            return []
        with _locked(self.path, "r", fcntl.LOCK_SH) as fh:
            return _parse(fh.readlines())

    def append(self, record: CatalogRecord) -> bool:
        """Store ``record`` unless one with the same id exists; returns True if written."""
        with _locked(self.path, "a+", fcntl.LOCK_EX) as fh:
            fh.seek(0)
            if any(r.id == record.id for r in _parse(fh.readlines())):
                return False
            if record.created_at is None:
                stamp = datetime.now(timezone.utc).replace(microsecond=0).isoformat()
                record = replace(record, created_at=stamp)
            fh.write(json.dumps(record.to_json(), sort_keys=True) + "\n")
            fh.flush()
            return True

    def query(
        self,
        q: int | None = None,
        n_min: int | None = None,
        n_max: int | None = None,
        me: bool | None = None,
        d_min: int | None = None,
    ) -> list[CatalogRecord]:
        def keep(r: CatalogRecord) -> bool:
            e = r.eaqec
            return (
                (q is None or e["q"] == q)
                and (n_min is None or e["n"] >= n_min)
                and (n_max is None or e["n"] <= n_max)
                and (me is None or e["me"] == me)
                and (d_min is None or e["d"] >= d_min)
            )

        return [r for r in self.records() if keep(r)]
