"""Randomized property suites behind ``galois-hull verify``.

Each case draws from ``random.Random(seed + index)`` so any single case can be
replayed in isolation; failing cases are written out as recipes.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field as dc_field
from pathlib import Path
from typing import Callable

import numpy as np

from . import _vec
from .codes import (
    LinearCode,
    code_from_generator,
    galois_dual,
    hull,
    hull_decompose,
    is_galois_lcd,
    is_mds,
    min_distance,
)
from .constructions import (
    MatrixProductSpec,
    find_self_dual_basis,
    gabidulin_code,
    gabidulin_hull_dim_formula,
    gabidulin_spec,
    matrix_product_code,
    matrix_product_hull,
    ones_minus_ones,
    qpower_to_galois_index,
)
from .errors import GaloisHullError, GramNotDiagonal
from .field import FiniteField, field_from_order
from .linalg import MatrixGF, intersect, sum_space

SUITES = ("decomposition", "mp_hull", "gabidulin_hull", "duality")
DEFAULT_FIELDS = (2, 3, 4, 9)
BRUTE_LIMIT = 1 << 16


@dataclass
class SuiteResult:
    suite: str
    seed: int
    cases: int = 0
    passed: int = 0
    failures: list[dict] = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures and self.passed == self.cases

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "cases": self.cases,
            "passed": self.passed,
            "failed": len(self.failures),
            "ok": self.ok,
            "failures": self.failures,
        }


def explicit_recipe(code: LinearCode) -> dict:
    return {"kind": "explicit", "field": code.field.descriptor(), "generator": [list(r) for r in code.rows]}


def random_code(rng: random.Random, f: FiniteField, n: int, k: int | None = None) -> LinearCode:
    """A random code of length n; the dimension is at most k (drawn when None)."""
    if k is None:
        k = rng.randint(1, n)
    while True:
        rows = [[rng.randrange(f.order) for _ in range(n)] for _ in range(k)]
        if any(any(r) for r in rows):
            return code_from_generator(f, rows)


def _max_len(f: FiniteField, cap: int) -> int:
    n = 1
    while n < cap and f.order ** (n + 1) <= BRUTE_LIMIT:
        n += 1
    return n


# ---------------------------------------------------------------------------
# brute-force annihilator straight from the definition of the form


def _np_mul(f: FiniteField, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if f.order == 2:
        return a & b
    log = np.array(f._log, dtype=np.int64)
    exp = np.array(f._exp, dtype=np.int64)
    prod = exp[(log[a] + log[b]) % (f.order - 1)]
    return np.where((a == 0) | (b == 0), 0, prod)


def brute_annihilator(code: LinearCode, s: int) -> np.ndarray:
    """Every x in F^n with [c, x]_s = 0 for all generator rows c."""
    f, n = code.field, code.n
    vf = _vec.VecField(f)
    space = _vec.span_array(f, [[int(i == j) for j in range(n)] for i in range(n)], n)
    frob = np.array([f.frob(v, s) for v in range(f.order)], dtype=np.int64)
    xs = frob[space]
    keep = np.ones(len(space), dtype=bool)
    for c in code.rows:
        acc = np.zeros(len(space), dtype=np.int64)
        for i, ci in enumerate(c):
            if ci:
                acc = vf.add(acc, _np_mul(f, np.full(len(space), ci, dtype=np.int64), xs[:, i]))
        keep &= acc == 0
    return space[keep]


def _rows_in(rows, arr: np.ndarray) -> bool:
    have = {tuple(int(x) for x in r) for r in arr}
    return all(tuple(r) in have for r in rows)


# ---------------------------------------------------------------------------
# suites; each case returns None on success or a failure message


def _case_duality(rng: random.Random, fields: tuple[int, ...]) -> tuple[dict, str | None]:
    f = field_from_order(rng.choice(fields))
    n = rng.randint(1, _max_len(f, 8))
    code = random_code(rng, f, n)
    for s in range(f.m):
        dual = galois_dual(code, s)
        brute = brute_annihilator(code, s)
        if len(brute) != f.order**dual.k or not _rows_in(dual.rows, brute):
            return explicit_recipe(code), f"s={s}: dual of dim {dual.k} differs from annihilator of size {len(brute)}"
        ok, _ = is_galois_lcd(code, s)
        if ok != (hull(code, s).k == 0):
            return explicit_recipe(code), f"s={s}: LCD certificate disagrees with the hull dimension"
    return explicit_recipe(code), None


def _case_decomposition(rng: random.Random, fields: tuple[int, ...]) -> tuple[dict, str | None]:
    f = field_from_order(rng.choice(fields))
    n = rng.randint(1, 8)
    code = random_code(rng, f, n)
    s = rng.randrange(f.m)
    recipe = dict(explicit_recipe(code), s=s)
    dec = hull_decompose(code, s)
    hs, ds = dec.hull.space, dec.complement.space
    if sum_space(hs, ds).basis != code.generator:
        return recipe, "hull + complement does not span C"
    if intersect(hs, ds).dim != 0 or dec.h + dec.complement.k != code.k:
        return recipe, "hull and complement are not independent"
    if dec.h != hull(code, s).k:
        return recipe, "hull dimension mismatch"
    if not dec.complement.is_zero and not is_galois_lcd(dec.complement, s)[0]:
        return recipe, "complement is not s-Galois LCD"
    return recipe, None


def _mp_case_fields(fields: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(q for q in fields if q in (3, 4, 9)) or (3, 4, 9)


def _case_mp_hull(rng: random.Random, fields: tuple[int, ...]) -> tuple[dict, str | None]:
    q = rng.choice(_mp_case_fields(fields))
    f = field_from_order(q)
    A = MatrixGF.identity(f, 2) if f.p == 2 else ones_minus_ones(f)
    n = rng.randint(1, 5)
    cs = (random_code(rng, f, n), random_code(rng, f, n))
    s = rng.randrange(f.m)
    recipe = {
        "kind": "matrix_product",
        "field": f.descriptor(),
        "A": A.tolist(),
        "constituents": [explicit_recipe(c) for c in cs],
        "s": s,
    }
    spec = MatrixProductSpec(A, cs, s)
    mp = matrix_product_code(spec, budget=1)
    if matrix_product_hull(spec).generator != hull(mp.code, s).generator:
        return recipe, "formula hull differs from the direct hull"
    # the refusal path: a Gram matrix that is not diagonal must be rejected
    bad = MatrixGF.from_rows(f, [[1, 1], [0, 1]])
    try:
        matrix_product_hull(MatrixProductSpec(bad, cs, s))
    except GramNotDiagonal:
        pass
    else:
        return recipe, "non-diagonal Gram matrix was accepted"
    return recipe, None


GABIDULIN_GRID = ((2, 3), (3, 3))


def gabidulin_cells(grid=GABIDULIN_GRID) -> list[tuple[int, int, int, int]]:
    return [(q, m, k, s) for q, m in grid for k in range(1, m + 1) for s in range(m)]


def _gabidulin_cell(q: int, m: int, k: int, s: int) -> tuple[dict, str | None]:
    base = field_from_order(q)
    basis = find_self_dual_basis(base, m)
    spec = gabidulin_spec(base, m, k, basis)
    code = gabidulin_code(spec)
    recipe = {"kind": "gabidulin", "field": base.descriptor(), "m": m, "k": k, "s": s}
    got = hull(code, qpower_to_galois_index(base, s)).k
    want = gabidulin_hull_dim_formula(m, k, s)
    if got != want:
        return recipe, f"hull dimension {got}, formula {want}"
    rep = min_distance(code)
    if not rep.exact or not is_mds(code, rep):
        return recipe, f"distance {rep.value} is not m-k+1 = {m - k + 1}"
    return recipe, None


_CASES: dict[str, Callable[[random.Random, tuple[int, ...]], tuple[dict, str | None]]] = {
    "duality": _case_duality,
    "decomposition": _case_decomposition,
    "mp_hull": _case_mp_hull,
}


def run_suite(
    suite: str,
    cases: int,
    seed: int = 0,
    fields: tuple[int, ...] = DEFAULT_FIELDS,
    artifact_dir: str | Path | None = None,
) -> SuiteResult:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    res = SuiteResult(suite, seed)
    if suite == "gabidulin_hull":
        # exhaustive over the grid; the case count is fixed by the grid
        work = [(i, lambda c=c: _gabidulin_cell(*c)) for i, c in enumerate(gabidulin_cells())]
    else:
        fn = _CASES[suite]
        work = [(i, lambda i=i: fn(random.Random(seed + i), fields)) for i in range(cases)]
    for idx, job in work:
        res.cases += 1
        try:
            recipe, msg = job()
        except GaloisHullError as exc:
            recipe, msg = {"case": idx}, f"{type(exc).__name__}: {exc}"
        if msg is None:
            res.passed += 1
            continue
        failure = {"case": idx, "seed": seed + idx, "message": msg, "recipe": recipe}
        res.failures.append(failure)
        if artifact_dir is not None:
            out = Path(artifact_dir)
            out.mkdir(parents=True, exist_ok=True)
            (out / f"{suite}-{idx}.json").write_text(json.dumps(failure, sort_keys=True, indent=2) + "\n")
    return res
