"""JSON recipes describing how to build a code.

A recipe is a dict with a ``kind`` and kind-specific fields.  The field is
given either as ``"q": 9`` (default modulus) or as a full descriptor
``"field": {"p": 3, "m": 2, "modulus": [2, 2, 1]}``.  Field elements are
integer encodings; negative integers are prime-field residues and lists are
coefficient vectors, low degree first.

    {"kind": "explicit", "q": 3, "generator": [[1, 1, 1, 1, 1]]}
    {"kind": "cyclic", "q": 9, "n": 8, "exponents": [2, 3, 4, 5]}
    {"kind": "negacyclic", "q": 9, "n": 8, "exponents": [1, 3, 9, 11]}
    {"kind": "gabidulin", "q": 3, "m": 3, "k": 2}
    {"kind": "matrix_product", "q": 9, "A": [[1, 1], [1, -1]], "constituents": [...]}
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass, field as dc_field
from pathlib import Path
from typing import Any

from .codes import LinearCode, code_from_generator
from .constructions import (
    MatrixProductSpec,
    cyclic_code,
    gabidulin_code,
    gabidulin_spec,
    matrix_product_code,
    multiplicative_order,
    negacyclic_code,
)
from .errors import ClosureEnlarged, GaloisHullError, RecipeInvalid
from .field import FiniteField, field_create, field_from_order
from .linalg import MatrixGF

KINDS = ("explicit", "cyclic", "negacyclic", "gabidulin", "matrix_product")


@dataclass(frozen=True)
class Built:
    code: LinearCode
    recipe: dict
    info: dict = dc_field(default_factory=dict)
    warnings: tuple[str, ...] = ()


def load_recipe(path: str | Path) -> dict:
    try:
        doc = json.loads(Path(path).read_text())
    except OSError as exc:
        raise RecipeInvalid("", f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise RecipeInvalid("", f"not valid JSON: {exc.msg} at line {exc.lineno}") from None
    if not isinstance(doc, dict):
        raise RecipeInvalid("", "recipe must be a JSON object")
    return doc


def _int(doc: dict, key: str, path: str, minimum: int | None = None) -> int:
    if key not in doc:
        raise RecipeInvalid(f"{path}{key}", "missing")
    v = doc[key]
    if isinstance(v, bool) or not isinstance(v, int):
        raise RecipeInvalid(f"{path}{key}", f"expected an integer, got {v!r}")
    if minimum is not None and v < minimum:
        raise RecipeInvalid(f"{path}{key}", f"must be >= {minimum}")
    return v


def parse_field(doc: dict, path: str = "") -> FiniteField:
    try:
        if "field" in doc:
            desc = doc["field"]
            if not isinstance(desc, dict) or "p" not in desc:
                raise RecipeInvalid(f"{path}field", "expected {\"p\": .., \"m\": .., \"modulus\": [..]}")
            return field_create(int(desc["p"]), int(desc.get("m", 1)), desc.get("modulus"))
        if "q" in doc:
            return field_from_order(_int(doc, "q", path, 2))
    except GaloisHullError as exc:
        if isinstance(exc, RecipeInvalid):
            raise
        raise RecipeInvalid(f"{path}field" if "field" in doc else f"{path}q", str(exc)) from None
    raise RecipeInvalid(f"{path}q", "missing: give q or field")


def parse_element(f: FiniteField, v: Any, path: str) -> int:
    try:
        if isinstance(v, list) and all(isinstance(c, int) for c in v):
            return f.from_coeffs(v)
        if isinstance(v, int) and not isinstance(v, bool):
            return f.from_int(v)
    except ValueError as exc:
        raise RecipeInvalid(path, str(exc)) from None
    raise RecipeInvalid(path, f"expected an element encoding or coefficient list, got {v!r}")


def parse_matrix(f: FiniteField, rows: Any, path: str) -> list[list[int]]:
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise RecipeInvalid(path, "expected a non-empty list of rows")
    width = len(rows[0])
    out = []
    for i, r in enumerate(rows):
        if len(r) != width or width == 0:
            raise RecipeInvalid(f"{path}[{i}]", f"row length {len(r)} differs from {width}")
        out.append([parse_element(f, x, f"{path}[{i}][{j}]") for j, x in enumerate(r)])
    return out


def _exponents(doc: dict, path: str) -> list[int]:
    exps = doc.get("exponents")
    if not isinstance(exps, list) or not all(isinstance(e, int) and not isinstance(e, bool) for e in exps):
        raise RecipeInvalid(f"{path}exponents", "expected a list of integers")
    return exps


def build(recipe: dict, strict: bool = True, path: str = "") -> Built:
    """Construct the code a recipe describes; every failure becomes RecipeInvalid."""
    if not isinstance(recipe, dict):
        raise RecipeInvalid(path.rstrip("."), "recipe must be an object")
    kind = recipe.get("kind")
    if kind not in KINDS:
        raise RecipeInvalid(f"{path}kind", f"must be one of {', '.join(KINDS)}, got {kind!r}")
    f = parse_field(recipe, path)
    caught: list[str] = []
    try:
        with warnings.catch_warnings(record=True) as ws:
            warnings.simplefilter("always", ClosureEnlarged)
            code, info, canon = _BUILDERS[kind](f, recipe, strict, path)
        caught = [str(w.message) for w in ws if issubclass(w.category, ClosureEnlarged)]
    except RecipeInvalid:
        raise
    except (GaloisHullError, ValueError) as exc:
        raise RecipeInvalid(path.rstrip(".") or kind, f"{type(exc).__name__}: {exc}") from None
    canon = dict(canon, kind=kind, field=f.descriptor())
    return Built(code, canon, dict(info, kind=kind), tuple(caught))


def _build_explicit(f: FiniteField, doc: dict, strict: bool, path: str):
    rows = parse_matrix(f, doc.get("generator"), f"{path}generator")
    code = code_from_generator(f, rows)
    return code, {}, {"generator": rows}


def _build_root_set(kind: str):
    ctor = cyclic_code if kind == "cyclic" else negacyclic_code

    def run(f: FiniteField, doc: dict, strict: bool, path: str):
        n = _int(doc, "n", path, 1)
        exps = _exponents(doc, path)
        canon: dict = {"n": n, "exponents": sorted(set(exps))}
        root = doc.get("root")
        if root is not None:
            # the root lives in the splitting field, so it is given by coordinates over GF(p)
            if not isinstance(root, list):
                raise RecipeInvalid(f"{path}root", "give the root as a coefficient list over GF(p)")
            order = n if kind == "cyclic" else 2 * n
            try:
                ext = field_create(f.p, f.m * multiplicative_order(f.order, order))
            except ValueError as exc:
                raise RecipeInvalid(f"{path}n", str(exc)) from None
            root = parse_element(ext, root, f"{path}root")
            canon["root"] = ext.coeffs(root)
        code, info = ctor(f, n, exps, root=root, strict=strict)
        return code, info.to_json(), canon

    return run


def _build_gabidulin(f: FiniteField, doc: dict, strict: bool, path: str):
    m = _int(doc, "m", path, 1)
    k = _int(doc, "k", path, 1)
    if k > m:
        raise RecipeInvalid(f"{path}k", f"must be <= m = {m}")
    canon: dict = {"m": m, "k": k}
    basis = None
    if doc.get("basis") is not None:
        ext = field_create(f.p, f.m * m)
        basis = [parse_element(ext, b, f"{path}basis[{i}]") for i, b in enumerate(doc["basis"])]
        canon["basis"] = [ext.coeffs(b) for b in basis]
    spec = gabidulin_spec(f, m, k, basis)
    return gabidulin_code(spec), spec.to_json(), canon


def _build_mp(f: FiniteField, doc: dict, strict: bool, path: str):
    A = parse_matrix(f, doc.get("A"), f"{path}A")
    parts = doc.get("constituents")
    if not isinstance(parts, list) or len(parts) != len(A):
        raise RecipeInvalid(f"{path}constituents", f"expected a list of {len(A)} recipes, one per row of A")
    built = []
    for i, sub in enumerate(parts):
        if isinstance(sub, dict) and "q" not in sub and "field" not in sub:
            sub = dict(sub, field=f.descriptor())
        b = build(sub, strict, f"{path}constituents[{i}].")
        if b.code.field != f:
            raise RecipeInvalid(f"{path}constituents[{i}]", "constituent field differs from the outer field")
        built.append(b)
    spec = MatrixProductSpec(MatrixGF.from_rows(f, A), tuple(b.code for b in built))
    mp = matrix_product_code(spec, budget=1)
    info = {"constituents": [dict(b.info, n=b.code.n, k=b.code.k) for b in built], "A": A}
    return mp.code, info, {"A": A, "constituents": [b.recipe for b in built]}


_BUILDERS = {
    "explicit": _build_explicit,
    "cyclic": _build_root_set("cyclic"),
    "negacyclic": _build_root_set("negacyclic"),
    "gabidulin": _build_gabidulin,
    "matrix_product": _build_mp,
}


def canonical_json(doc: Any) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))
