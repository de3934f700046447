"""Regenerate the printed parameter tables from the family formulas and diff
them against the embedded fixtures.

The fixtures (``data/tables.json``) are evidence, never truth: every row is
recomputed and the printed values are only used for the comparison.
"""

from __future__ import annotations

import ast
import json
import math
import operator
import re
import warnings
from importlib import resources
from pathlib import Path
from typing import Any, Callable

from . import poly
from .codes import DEFAULT_DISTANCE_BUDGET, LinearCode, hull, min_distance
from .constructions import (
    MatrixProductSpec,
    cyclic_code,
    matrix_product_code,
    matrix_product_hull,
    negacyclic_code,
    ones_minus_ones,
    q_closure,
)
from .eaqec import (
    FamilyRow,
    eaqec_from_hull_decomposition,
    family_cor41,
    family_cor42,
    family_cor43,
    family_thm52_53,
    hull_row,
)
from .errors import ClosureEnlarged, GaloisHullError, PreconditionViolated
from .field import field_from_order

TABLE_IDS = (1, 2, 3, 4, 5)


def load_fixtures(path: str | Path | None = None) -> dict:
    if path is None:
        text = resources.files("galois_hull").joinpath("data/tables.json").read_text()
    else:
        text = Path(path).read_text()
    return json.loads(text)


# ---------------------------------------------------------------------------
# printed expressions such as "2(k-27)" or "12-2k"

_OPS: dict[type, Callable[[int, int], int]] = {
    ast.Add: operator.add,
    ast.Sub: operator.sub,
    ast.Mult: operator.mul,
}


def eval_linear(expr: str, k: int) -> int:
    """Evaluate an integer expression in ``k`` with implicit multiplication."""
    src = re.sub(r"(\d)\s*([k(])", r"\1*\2", expr.replace(" ", ""))

    def ev(node: ast.AST) -> int:
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return node.value
        if isinstance(node, ast.Name) and node.id == "k":
            return k
        if isinstance(node, ast.BinOp) and type(node.op) in _OPS:
            return _OPS[type(node.op)](ev(node.left), ev(node.right))
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
            return -ev(node.operand)
        raise ValueError(f"unsupported expression {expr!r}")

    return ev(ast.parse(src, mode="eval"))


# ---------------------------------------------------------------------------
# Tables 1-3: families built from MDS codes with a prescribed hull dimension


def _diff(printed: dict, formula: dict, keys: tuple[str, ...]) -> list[str]:
    return [f"{key}: printed {printed[key]}, formula {formula[key]}" for key in keys if printed[key] != formula[key]]


def _family_caller(family: str, caption: dict, params: dict) -> tuple[int, int, Callable[[int, int], list[FamilyRow]]]:
    p = params.get("p", caption.get("p"))
    m = params.get("m", caption.get("m"))
    q, s = p**m, caption["s"]
    if family == "cor4.1":
        return q, s, lambda k, h: family_cor41(q, s, params["r"], k, h)
    if family == "cor4.2":
        return q, s, lambda k, h: family_cor42(q, s, caption["x1"], caption["x2"], params["r"], k, h)
    if family == "cor4.3":
        return q, s, lambda k, h: family_cor43(q, s, caption["a"], params["t"], caption["w"], k, h)
    raise ValueError(f"unknown family {family}")


def _length_alternatives(family: str, caption: dict, params: dict, base_n: int) -> list[str]:
    """Nearby readings of the caption that do reproduce the printed length."""
    out = []
    if family == "cor4.1":
        m, s, r = caption["m"], caption["s"], params["r"]
        for p in range(3, 60, 2):
            if poly.is_prime(p) and r * (p**m - 1) == base_n * (p**s - 1):
                kmax = (p**s + base_n) // (p**s + 1)
                out.append(f"q = {p}^{m} gives n = {base_n}, with k <= {kmax}")
    elif family == "cor4.2":
        q = caption["p"] ** caption["m"]
        g = math.gcd(caption["x2"], q - 1)
        if params["r"] * (q - 1) // g == base_n:
            out.append(f"n = r(q-1)/gcd(x2, q-1) = {base_n}, i.e. x1 and x2 exchanged")
    elif family == "cor4.3":
        p, a, w = params.get("p", caption.get("p")), caption["a"], caption["w"]
        for t in range(1, p**a + 1):
            if t * p ** (a * w) == base_n:
                out.append(f"t = {t} gives n = {base_n}")
    return out


def _first_row_n(call: Callable[[int, int], list[FamilyRow]]) -> int | str:
    try:
        return call(1, 0)[0].output.n
    except PreconditionViolated as exc:
        return f"precondition: {exc}"


def _kmax(family: str, q: int, s: int, n: int) -> int:
    p = poly.factorize(q)
    ps = next(iter(p)) ** s
    return (ps + n - 1) // (ps + 1) if family == "cor4.3" else (ps + n) // (ps + 1)


def reproduce_mds_family(table_id: int, spec: dict) -> dict:
    family, caption = spec["family"], spec["caption"]
    rows_out, checks = [], []
    for block in spec["blocks"]:
        params, base_n, h = block["params"], block["base_n"], block["h"]
        q, s, call = _family_caller(family, caption, params)
        formula_n = _first_row_n(call)
        length_ok = formula_n == base_n
        check = {
            "check": "length",
            "params": params,
            "printed": base_n,
            "formula": formula_n,
            "status": "match" if length_ok else "discrepancy",
        }
        if not length_ok:
            check["alternatives"] = _length_alternatives(family, caption, params, base_n)
        checks.append(check)
        kmax = _kmax(family, q, s, base_n)
        for n_row, k, printed in block["rows"]:
            part = n_row - base_n + 1
            fr = hull_row(n_row, k, h, n_row - k + 1, q, family, {"n": base_n, "k": k, "h": h, "part": part})
            o = fr.output
            formula = {"n": o.n, "k": o.k, "d": o.d, "c": o.c}
            pr = dict(zip(("n", "k", "d", "c"), printed))
            problems = _diff(pr, formula, ("n", "k", "d", "c"))
            if not 1 <= k <= kmax:
                problems.append(f"precondition: 1 <= k <= {kmax} fails for k = {k}")
            rows_out.append(
                {
                    "q": q,
                    "inputs": dict(params, n=base_n, k=k, h=h, part=part),
                    "formula": dict(formula, d_lb=o.d_is_lower_bound, me=o.is_me),
                    "paper_printed": pr,
                    "length_derivable": length_ok,
                    "status": "match" if not problems else "discrepancy",
                    "discrepancy": "; ".join(problems) or None,
                }
            )
    return {"table": table_id, "family": family, "caption": caption, "checks": checks, "rows": rows_out}


# ---------------------------------------------------------------------------
# Table 5: Gabidulin pairs


def reproduce_gabidulin(table_id: int, spec: dict) -> dict:
    rows_out = []
    for entry in spec["rows"]:
        qb, m, s, case = entry["q_base"], entry["m"], entry["s"], entry["case"]
        p, _ = next(iter(poly.factorize(qb).items()))
        ps = p**s
        bound = (ps + m) // (ps + 1)
        lo, hi = entry["k_range"]
        for k in range(lo, hi + 1):
            problems = []
            try:
                fr = family_thm52_53(qb, m, k, k, s, case)
            except PreconditionViolated as exc:
                problems.append(f"precondition: {exc}")
                fr = family_thm52_53(qb, m, k, k, s, case, check=False)
            o = fr.output
            formula = {"a": fr.inputs["a"], "n": o.n, "k": o.k, "d": o.d, "c": o.c}
            printed = {key: eval_linear(expr, k) for key, expr in entry["printed"].items()}
            problems = _diff(printed, formula, ("a", "n", "k", "d", "c")) + problems
            if entry["printed_bound"] != bound:
                problems.append(f"bound: printed {entry['printed_bound']}, formula {bound}")
            rows_out.append(
                {
                    "q": o.q,
                    "inputs": {"q_base": qb, "m": m, "s": s, "k1": k, "k2": k, "case": case},
                    "formula": dict(formula, d_lb=True, me=o.is_me, degenerate=o.degenerate, bound=bound),
                    "paper_printed": dict(printed, bound=entry["printed_bound"]),
                    "status": "match" if not problems else "discrepancy",
                    "discrepancy": "; ".join(problems) or None,
                }
            )
    return {"table": table_id, "family": spec["family"], "checks": [], "rows": rows_out}


# ---------------------------------------------------------------------------
# Table 4: cyclic / negacyclic constituents in a matrix-product code


def _distance_summary(code: LinearCode, bch: int, budget: int) -> dict:
    rep = min_distance(code, budget)
    if rep.exact:
        return {"value": rep.value, "exact": True, "method": rep.method, "work": rep.work_budget_used, "bch": bch}
    return {"value": max(rep.value, bch), "exact": False, "method": "bch_bound", "work": 0, "bch": bch}


def _root_note(q: int, n: int) -> str | None:
    if (q - 1) % (2 * n):
        return f"a primitive element of GF({q}) has order {q - 1}; its powers cannot be roots of x^{n}+1"
    return None


def substitute_negacyclic_exponents(q: int, n: int, printed: list[int]) -> list[int] | None:
    """Closure of the longest prefix of the printed set that stays a proper subset."""
    best = None
    for j in range(1, len(printed) + 1):
        closed = q_closure(printed[:j], q, 2 * n)
        if len(closed) >= n:
            break
        best = sorted(closed)
    return best


def mp_pipeline(c1: LinearCode, c2: LinearCode, budget: int) -> list[dict]:
    """Sweep s over [C1, C2] A with A = [[1,1],[1,-1]] and compare both hull routes."""
    f = c1.field
    A = ones_minus_ones(f)
    out = []
    for s in range(f.m):
        spec = MatrixProductSpec(A, (c1, c2), s)
        mp = matrix_product_code(spec, budget)
        via_formula = matrix_product_hull(spec)
        direct = hull(mp.code, s)
        dims = [hull(c, s).k for c in (c1, c2)]
        a = sum(dims)
        d1, d2 = (r.value for r in mp.constituent_distances)
        bound = min(2 * d1, d2)
        exact = min_distance(mp.code, budget)
        params = eaqec_from_hull_decomposition(mp.code, s, exact, budget)
        out.append(
            {
                "s": s,
                "hull_dims": dims,
                "a": a,
                "hull_formula_equals_direct": via_formula.generator == direct.generator,
                "cor_params": {"n": mp.code.n, "k": mp.code.k - a, "d": bound, "d_lb": True, "c": mp.code.n - mp.code.k + a},
                "pipeline_params": {
                    "n": params.n,
                    "k": params.k,
                    "d": params.d,
                    "d_lb": params.d_is_lower_bound,
                    "c": params.c,
                    "me": params.is_me,
                },
                "mp_distance": exact.to_json(),
                "distance_bound_holds": (not exact.exact) or exact.value >= bound,
                "constituent_distances_exact": all(r.exact for r in mp.constituent_distances),
            }
        )
    return out


def _build_constituents(f, n: int, cyc: list[int], neg: list[int], strict: bool, budget: int, row: dict, reasons: list[str]):
    built = []
    for kind, ctor, exps in (("cyclic", cyclic_code, cyc), ("negacyclic", negacyclic_code, neg)):
        try:
            code, info = ctor(f, n, exps, strict=strict)
        except GaloisHullError as exc:
            reasons.append(f"{kind}: {type(exc).__name__}: {exc}")
            row[kind] = None
            built.append(None)
            continue
        row[kind] = {"k": code.k, "defining_set_size": len(info.exponents), "distance": _distance_summary(code, info.bch_bound, budget)}
        built.append(code)
    return built


def reproduce_table4_row(entry: dict, budget: int, strict: bool, substitute: bool) -> dict:
    q, n = entry["q"], entry["n"]
    f = field_from_order(q)
    lo, hi = entry["cyclic"]
    cyc = list(range(lo, hi + 1))
    ilo, ihi = entry["negacyclic_i"]
    neg = [1 + 2 * i for i in range(ilo, ihi + 1)]
    printed = dict(zip(("n", "k", "d", "c"), entry["printed"]))
    row: dict[str, Any] = {
        "q": q,
        "n": n,
        "cyclic_exponents": cyc,
        "negacyclic_exponents": neg,
        "paper_printed": dict(printed, q=entry["printed_q"]),
        "notes": [],
    }
    if entry["printed_q"] != q:
        row["notes"].append(f"printed subscript {entry['printed_q']} differs from q = {q}")
    note = _root_note(q, n)
    if note:
        row["notes"].append(note)
    reasons = []
    c1 = c2 = None
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", ClosureEnlarged)
        c1, c2 = _build_constituents(f, n, cyc, neg, strict, budget, row, reasons)
    row["notes"] += [f"closure enlarged: {w.message}" for w in caught if issubclass(w.category, ClosureEnlarged)]
    if reasons:
        row["status"] = "not_constructible"
        row["reason"] = "; ".join(reasons)
    else:
        sweep = mp_pipeline(c1, c2, budget)
        row["sweep"] = sweep
        hit = [e["s"] for e in sweep if {k: e["cor_params"][k] for k in ("n", "k", "d", "c")} == printed]
        row["status"] = "reproduced" if hit else "discrepancy"
        row["reason"] = None if hit else "no s reproduces the printed parameters"
    if substitute and c1 is not None and row["negacyclic"] is None:
        sub = substitute_negacyclic_exponents(q, n, neg)
        if sub is not None:
            c2s, info2s = negacyclic_code(f, n, sub, strict=True)
            row["substitute"] = {
                "negacyclic_exponents": sub,
                "negacyclic": {"k": c2s.k, "distance": _distance_summary(c2s, info2s.bch_bound, budget)},
                "sweep": mp_pipeline(c1, c2s, budget),
            }
    return row


SUBSTITUTE_MAX_Q = 9


def reproduce_table4(table_id: int, spec: dict, budget: int, strict: bool) -> dict:
    rows = [reproduce_table4_row(e, budget, strict, substitute=e["q"] <= SUBSTITUTE_MAX_Q) for e in spec["rows"]]
    return {"table": table_id, "family": spec["family"], "strict_closure": strict, "checks": [], "rows": rows}


# ---------------------------------------------------------------------------


def _summary(report: dict) -> dict:
    counts: dict[str, int] = {}
    for r in report["rows"]:
        counts[r["status"]] = counts.get(r["status"], 0) + 1
    for c in report["checks"]:
        key = f"check_{c['status']}"
        counts[key] = counts.get(key, 0) + 1
    return dict(sorted(counts.items()))


def reproduce(
    table_id: int,
    fixtures: dict | None = None,
    budget: int = DEFAULT_DISTANCE_BUDGET,
    strict: bool = True,
    seed: int = 0,
) -> dict:
    if table_id not in TABLE_IDS:
        raise ValueError(f"table id must be one of {TABLE_IDS}")
    fixtures = fixtures or load_fixtures()
    spec = fixtures["tables"][str(table_id)]
    if table_id in (1, 2, 3):
        report = reproduce_mds_family(table_id, spec)
    elif table_id == 5:
        report = reproduce_gabidulin(table_id, spec)
    else:
        report = reproduce_table4(table_id, spec, budget, strict)
    report["fixture_provenance"] = fixtures.get("provenance", "paper_printed")
    report["seed"] = seed
    report["distance_budget"] = budget
    report["summary"] = _summary(report)
    return report


def dumps(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"
