"""galois-hull: build codes from recipes, compute hulls and EAQEC parameters,
reproduce the parameter tables, run the property suites, and keep a catalog.

Exit status: 0 on success, 1 when a verification fails, 2 on bad input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import asdict, dataclass
from typing import Any, Sequence

from . import tables, verify
from .catalog import Catalog, make_record
from .codes import DEFAULT_DISTANCE_BUDGET, hull_decompose, is_galois_lcd
from .errors import CatalogCorrupt, RecipeInvalid
from .recipes import Built, build, load_recipe

CSV_COLUMNS = ("q", "n", "k", "d", "d_lb", "c", "me", "family", "discrepancy")
EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


@dataclass(frozen=True)
class RunConfig:
    seed: int = 0
    distance_budget: int = DEFAULT_DISTANCE_BUDGET
    strict_closure: bool = True
    s_sweep: bool = False
    output_format: str = "json"


# ---------------------------------------------------------------------------
# output


def _cell(v: Any) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def render(doc: dict, rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for r in rows:
            w.writerow([_cell(r.get(c)) for c in CSV_COLUMNS])
        return buf.getvalue()
    cols = list(rows[0]) if rows else list(CSV_COLUMNS)
    cells = [[_cell(r.get(c)) for c in cols] for r in rows]
    widths = [max([len(c)] + [len(row[i]) for row in cells]) for i, c in enumerate(cols)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(cols, widths))]
    lines.append("  ".join("-" * w for w in widths))
    lines += ["  ".join(x.ljust(w) for x, w in zip(row, widths)) for row in cells]
    return "\n".join(lines) + "\n"


def _params_row(e: dict, family: str, discrepancy: str | None = None) -> dict:
    return {
        "q": e["q"],
        "n": e["n"],
        "k": e["k"],
        "d": e["d"],
        "d_lb": e["d_lb"],
        "c": e["c"],
        "me": e["me"],
        "family": family,
        "discrepancy": discrepancy,
    }


# ---------------------------------------------------------------------------
# commands


def _load(path: str, cfg: RunConfig) -> Built:
    return build(load_recipe(path), strict=cfg.strict_closure)


def _check_s(built: Built, s: int) -> None:
    m = built.code.field.m
    if not 0 <= s < m:
        raise RecipeInvalid("s", f"must lie in [0, {m}) for {built.code.field}")


def cmd_build(args: argparse.Namespace, cfg: RunConfig) -> tuple[dict, list[dict], int]:
    built = _load(args.recipe, cfg)
    _check_s(built, args.s)
    code = built.code
    rec, params = make_record(built.recipe, code, args.s, cfg.distance_budget)
    doc = {
        "config": asdict(cfg),
        "summary": f"[{code.n},{code.k}]_{code.q}",
        "field": code.field.descriptor(),
        "n": code.n,
        "k": code.k,
        "generator": [list(r) for r in code.rows],
        "construction": built.info,
        "warnings": list(built.warnings),
        "recipe": built.recipe,
        "record": rec.to_json(with_time=False),
    }
    if args.save:
        doc["saved"] = Catalog(cfg_catalog(args)).append(rec)
    row = _params_row(rec.eaqec, f"pipeline:{built.recipe['kind']}")
    return doc, [row], EXIT_OK


def cmd_hull(args: argparse.Namespace, cfg: RunConfig) -> tuple[dict, list[dict], int]:
    built = _load(args.recipe, cfg)
    code = built.code
    if cfg.s_sweep:
        svals = list(range(code.field.m))
    else:
        _check_s(built, args.s)
        svals = [args.s]
    rows = []
    for s in svals:
        dec = hull_decompose(code, s)
        lcd, _ = is_galois_lcd(code, s)
        rows.append(
            {
                "s": s,
                "n": code.n,
                "k": code.k,
                "hull_dim": dec.h,
                "lcd": lcd,
                "complement_dim": dec.complement.k,
                "certificate_nonsingular": dec.certificate_nonsingular,
                "distance": "skipped",
            }
        )
    doc = {"config": asdict(cfg), "summary": f"[{code.n},{code.k}]_{code.q}", "recipe": built.recipe, "hulls": rows}
    return doc, rows, EXIT_OK


def cmd_eaqec(args: argparse.Namespace, cfg: RunConfig) -> tuple[dict, list[dict], int]:
    built = _load(args.recipe, cfg)
    _check_s(built, args.s)
    rec, params = make_record(built.recipe, built.code, args.s, cfg.distance_budget)
    doc = {
        "config": asdict(cfg),
        "recipe": built.recipe,
        "s": args.s,
        "eaqec": params.to_json(),
        "label": params.label(),
        "verification": rec.verification,
    }
    failed = any(v == "fail" for v in rec.verification.values())
    return doc, [_params_row(rec.eaqec, f"pipeline:{built.recipe['kind']}")], EXIT_FAIL if failed else EXIT_OK


def _reproduce_rows(report: dict) -> list[dict]:
    rows = []
    fam = report["family"]
    if report["table"] == 4:
        for r in report["rows"]:
            for label, sweep in (("", r.get("sweep")), ("substitute", (r.get("substitute") or {}).get("sweep"))):
                for e in sweep or []:
                    p = dict(e["pipeline_params"], q=r["q"])
                    rows.append(_params_row(p, f"{fam}{':' + label if label else ''}:s={e['s']}", None))
            rows.append(
                {"q": r["q"], "n": 2 * r["n"], "family": fam, "discrepancy": f"{r['status']}: {r['reason']}" if r.get("reason") else r["status"]}
            )
        return rows
    for r in report["rows"]:
        f = r["formula"]
        rows.append(dict(_params_row(dict(f, q=r["q"]), fam, r["discrepancy"])))
    return rows


def cmd_reproduce(args: argparse.Namespace, cfg: RunConfig) -> tuple[dict, list[dict], int]:
    try:
        fixtures = tables.load_fixtures(args.params) if args.params else None
    except (OSError, json.JSONDecodeError) as exc:
        raise RecipeInvalid("params", f"cannot load fixtures: {exc}") from None
    report = tables.reproduce(args.table, fixtures, cfg.distance_budget, cfg.strict_closure, cfg.seed)
    report["config"] = asdict(cfg)
    return report, _reproduce_rows(report), EXIT_OK


def cmd_verify(args: argparse.Namespace, cfg: RunConfig) -> tuple[dict, list[dict], int]:
    fields = tuple(args.fields) if args.fields else verify.DEFAULT_FIELDS
    res = verify.run_suite(args.suite, args.cases, cfg.seed, fields, args.artifacts)
    doc = dict(res.to_json(), config=asdict(cfg))
    row = {"suite": res.suite, "cases": res.cases, "passed": res.passed, "failed": len(res.failures), "ok": res.ok}
    return doc, [row], EXIT_OK if res.ok else EXIT_FAIL


def cmd_catalog(args: argparse.Namespace, cfg: RunConfig) -> tuple[dict, list[dict], int]:
    cat = Catalog(cfg_catalog(args))
    if args.action == "append":
        built = _load(args.recipe, cfg)
        _check_s(built, args.s)
        rec, _ = make_record(built.recipe, built.code, args.s, cfg.distance_budget)
        written = cat.append(rec)
        doc = {"config": asdict(cfg), "id": rec.id, "written": written, "path": str(cat.path)}
        return doc, [_params_row(rec.eaqec, f"pipeline:{built.recipe['kind']}")], EXIT_OK
    recs = cat.query(args.q, args.n_min, args.n_max, args.me, args.d_min)
    doc = {"config": asdict(cfg), "count": len(recs), "records": [r.to_json() for r in recs]}
    rows = [_params_row(r.eaqec, f"pipeline:{r.recipe.get('kind')}") for r in recs]
    return doc, rows, EXIT_OK


def cfg_catalog(args: argparse.Namespace) -> str | None:
    return getattr(args, "catalog", None)


# ---------------------------------------------------------------------------
# argument parsing


def _global_options(p: argparse.ArgumentParser, suppress: bool) -> None:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--seed", type=int, default=d(0), help="base seed; case i uses seed + i")
    p.add_argument("--distance-budget", type=int, default=d(DEFAULT_DISTANCE_BUDGET), help="max codewords enumerated per distance")
    p.add_argument("--format", choices=("json", "csv", "table"), default=d("json"))
    p.add_argument("--catalog", default=d(None), help="catalog path (else $GALOIS_HULL_CATALOG)")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--strict-closure", dest="strict_closure", action="store_true", default=d(True))
    g.add_argument("--permissive-closure", dest="strict_closure", action="store_false", default=d(True))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="galois-hull", description=__doc__.splitlines()[0], allow_abbrev=False)
    _global_options(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    _global_options(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", parents=[common], allow_abbrev=False, help="build a code from a recipe")
    p.add_argument("recipe")
    p.add_argument("--s", type=int, default=0)
    p.add_argument("--save", action="store_true", help="append the record to the catalog")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("hull", parents=[common], allow_abbrev=False, help="hull dimensions and decompositions")
    p.add_argument("recipe")
    p.add_argument("--s", type=int, default=0)
    p.add_argument("--sweep", dest="s_sweep", action="store_true", help="every s in [0, m)")
    p.set_defaults(func=cmd_hull)

    p = sub.add_parser("eaqec", parents=[common], allow_abbrev=False, help="EAQEC parameters via the hull decomposition")
    p.add_argument("recipe")
    p.add_argument("--s", type=int, default=0)
    p.set_defaults(func=cmd_eaqec)

    p = sub.add_parser("reproduce", parents=[common], allow_abbrev=False, help="regenerate a parameter table")
    p.add_argument("table", type=int, choices=tables.TABLE_IDS)
    p.add_argument("--params", help="alternative fixture file")
    p.set_defaults(func=cmd_reproduce)

    p = sub.add_parser("verify", parents=[common], allow_abbrev=False, help="randomized property suites")
    p.add_argument("suite", choices=verify.SUITES)
    p.add_argument("--cases", type=int, default=200)
    p.add_argument("--fields", type=int, nargs="+", help="field orders to draw from")
    p.add_argument("--artifacts", help="directory for failing-case recipes")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("catalog", parents=[common], allow_abbrev=False, help="append to or query the catalog")
    csub = p.add_subparsers(dest="action", required=True)
    a = csub.add_parser("append", parents=[common], allow_abbrev=False)
    a.add_argument("recipe")
    a.add_argument("--s", type=int, default=0)
    qp = csub.add_parser("query", parents=[common], allow_abbrev=False)
    qp.add_argument("--q", type=int)
    qp.add_argument("--n-min", type=int)
    qp.add_argument("--n-max", type=int)
    qp.add_argument("--me", dest="me", action="store_true", default=None)
    qp.add_argument("--no-me", dest="me", action="store_false")
    qp.add_argument("--d-min", type=int)
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = RunConfig(
        seed=args.seed,
        distance_budget=args.distance_budget,
        strict_closure=args.strict_closure,
        s_sweep=getattr(args, "s_sweep", False),
        output_format=args.format,
    )
    if cfg.distance_budget < 1:
        parser.error("--distance-budget must be positive")
    try:
        doc, rows, status = args.func(args, cfg)
    except RecipeInvalid as exc:
        print(f"error: invalid recipe: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CatalogCorrupt as exc:
        print(f"error: corrupt catalog: {exc}", file=sys.stderr)
        return EXIT_INPUT
    sys.stdout.write(render(doc, rows, cfg.output_format))
    return status


if __name__ == "__main__":
    sys.exit(main())
