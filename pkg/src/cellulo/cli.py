"""Batch command line: ``cellulo <command> [flags]``.

Exit status 0 on success, 2 on bad flags, 1 when a computation fails or
``check`` finds a mismatch.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from importlib import resources
from typing import Sequence

from .cells import SIDES, check_omega_stability, check_two_sided_vs_antispherical, check_w_restriction, compute_cells
from .glcells import enumerate_cell_labels, format_table1, orbit_count, semisimple_rank
from .hecke import TableRadiusError, canonical_basis
from .asph import canonical_asph, canonical_asph_recursive
from .rootdata import Config, DatumError, RootDatum, coxeter_number, datum_from_json, is_dominant, parse_datum_selector
from .weyl import alcove_of, weyl_group

FORMATS = ("json", "csv", "table1")


class UsageError(Exception):
    """Flag validation failure (exit 2)."""


# -- flag helpers -----------------------------------------------------------


def _datum(args) -> RootDatum:
    if getattr(args, "datum_file", None):
        with open(args.datum_file, encoding="utf-8") as fh:
            return datum_from_json(fh.read())
    if not getattr(args, "datum", None):
        raise UsageError("one of --datum or --datum-file is required")
    return parse_datum_selector(args.datum)


def _config(args, d: RootDatum) -> Config:
    ell = args.ell if getattr(args, "ell", None) is not None else coxeter_number(d) + 1
    radius = getattr(args, "radius", None)
    cfg = Config(ell, 8 if radius is None else radius)
    return cfg.validate(d)


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise UsageError(f"expected comma separated integers, got {text!r}") from None


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _csv(rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _require_format(args, allowed: Sequence[str]) -> str:
    if args.format not in allowed:
        raise UsageError(f"--format {args.format} is not available for {args.command}; use one of {list(allowed)}")
    return args.format


# -- commands ---------------------------------------------------------------


def cmd_cells(args) -> str:
    d = _datum(args)
    cfg = _config(args, d)
    fmt = _require_format(args, ("json", "csv"))
    if args.margin < 0:
        raise UsageError("--margin must be nonnegative")
    g = weyl_group(d)
    table = canonical_basis(g, cfg.ball_radius + 2 * args.margin)
    part = compute_cells(g, cfg, args.side, margin=args.margin, table=table)
    bij = None
    if not args.no_bijection and args.side in ("antispherical", "two-sided"):
        other = compute_cells(g, cfg, "two-sided" if args.side == "antispherical" else "antispherical", margin=args.margin, table=table)
        pair = (other, part) if args.side == "antispherical" else (part, other)
        rep = check_two_sided_vs_antispherical(g, cfg, two_sided=pair[0], antispherical=pair[1])
        bij = [list(p) for p in rep.bijection]
    if fmt == "csv":
        rows = [("cell", "complete", "member")]
        for c in part.cells:
            rows.extend((c.id, int(c.complete), g.format(x)) for x in c.members)
        return _csv(rows)
    omega_policy = "all" if d.is_semisimple() else "generators and translates up to 1"
    return _dump_json(
        {
            "datum": d.name,
            "side": part.side,
            "radius": part.radius,
            "margin": part.margin,
            "omega_policy": omega_policy,
            "cells": [
                {"id": c.id, "complete": c.complete, "certified": c.certified, "members": [g.format(x) for x in c.members]}
                for c in part.cells
            ],
            "order": sorted(list(p) for p in part.order),
            "bijection_2sided_asph": bij,
        }
    )


def cmd_klpoly(args) -> str:
    d = _datum(args)
    cfg = _config(args, d)
    fmt = _require_format(args, ("json", "csv"))
    g = weyl_group(d)
    table = canonical_basis(g, cfg.ball_radius)
    cols = table.elements()
    if args.w:
        w = g.parse(args.w)
        if w not in table:
            raise TableRadiusError(f"{args.w} is not in the ball of radius {cfg.ball_radius}")
        cols = [w]
    columns = {}
    for w in cols:
        terms = sorted(table.entries[w].items(), key=lambda t: t[0].sort_key())
        columns[g.format(w)] = {g.format(x): str(c) for x, c in terms}
    if fmt == "csv":
        return _csv([("w", "x", "h")] + [(w, x, h) for w, col in columns.items() for x, h in col.items()])
    return _dump_json(columns)


def cmd_asph_basis(args) -> str:
    d = _datum(args)
    cfg = _config(args, d)
    fmt = _require_format(args, ("json", "csv"))
    g = weyl_group(d)
    if args.method == "projection":
        basis = canonical_asph(canonical_basis(g, cfg.ball_radius))
    else:
        basis = canonical_asph_recursive(g, cfg.ball_radius)
    out = []
    for w in sorted(basis, key=lambda t: t.sort_key()):
        terms = sorted(basis[w].terms.items(), key=lambda t: t[0].sort_key())
        out.append({"w": g.format(w), "terms": [{"x": g.format(x), "coeff": str(c)} for x, c in terms]})
    if fmt == "csv":
        return _csv([("w", "x", "coeff")] + [(e["w"], t["x"], t["coeff"]) for e in out for t in e["terms"]])
    return _dump_json({"datum": d.name, "radius": cfg.ball_radius, "method": args.method, "elements": out})


def cmd_alcove(args) -> str:
    d = _datum(args)
    if args.ell is None:
        raise UsageError("--ell is required for alcove")
    cfg = _config(args, d)
    _require_format(args, ("json",))
    g = weyl_group(d)
    if (args.weight is None) == (args.elt is None):
        raise UsageError("give exactly one of --weight or --elt")
    if args.elt is not None:
        try:
            w = g.parse(args.elt)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        lam = g.dot(w, (0,) * d.rank, cfg.ell)
    else:
        lam = _ints(args.weight)
        if len(lam) != d.rank:
            raise UsageError(f"--weight needs {d.rank} coordinates")
    alc = alcove_of(lam, d, cfg.ell)
    return _dump_json({"datum": d.name, "ell": cfg.ell, "weight": list(lam), "dominant": is_dominant(lam, d), "alcove": list(alc.n)})


def cmd_gl_cells(args) -> str:
    a = _ints(args.a)
    if not a or any(x < 1 for x in a):
        raise UsageError("--a needs positive block sizes")
    if args.max_terms < 0:
        raise UsageError("--max-terms must be nonnegative")
    fmt = args.format if args.format_given else "table1"
    labels = enumerate_cell_labels(a, args.max_terms)
    if fmt == "table1":
        return format_table1(labels)
    if fmt == "csv":
        return _csv([("row", "terms", "label")] + [(i, len(lab), str(lab)) for i, lab in enumerate(labels)])
    return _dump_json(
        {
            "a": list(a),
            "max_terms": args.max_terms,
            "semisimple_rank": semisimple_rank(a),
            "labels": [
                {"terms": [[list(p.parts) for p in pi.parts] for pi in lab.seq], "text": str(lab)} for lab in labels
            ],
        }
    )


def cmd_orbit_count(args) -> str:
    d = _datum(args)
    fmt = _require_format(args, ("json", "csv"))
    n = orbit_count(d)
    if fmt == "csv":
        return _csv([("datum", "orbit_count"), (d.name, n)])
    return _dump_json({"datum": d.name, "orbit_count": n})


def _golden(name: str) -> str:
    return resources.files("cellulo").joinpath("golden", name).read_text(encoding="utf-8")


def run_check_suite(radii: dict[str, int] | None = None, margin: int = 2) -> dict:
    """Cross-checks between independent computations; ``ok`` is their conjunction."""
    radii = radii or {"A1": 16, "A2": 12, "B2": 16}
    report: dict = {"checks": []}

    def add(name, ok, **detail):
        report["checks"].append({"name": name, "ok": bool(ok), **detail})

    for label, R in radii.items():
        d = parse_datum_selector(label)
        g = weyl_group(d)
        cfg = Config(coxeter_number(d) + 1, R)
        table = canonical_basis(g, R + 2 * margin)
        asph = compute_cells(g, cfg, "antispherical", margin=margin, table=table)
        two = compute_cells(g, cfg, "two-sided", margin=margin, table=table)
        n_complete = len(asph.complete_cells())
        expected = orbit_count(d)
        all_complete = n_complete == len(asph.cells)
        count_ok = n_complete == expected if all_complete else n_complete <= expected
        add(f"{label}: complete antispherical cells vs orbit count", count_ok,
            radius=R, complete=n_complete, total=len(asph.cells), orbits=expected)
        rep = check_two_sided_vs_antispherical(g, cfg, two_sided=two, antispherical=asph)
        add(f"{label}: two-sided vs antispherical", rep.ok, bijection=[list(p) for p in rep.bijection], problems=rep.problems)
        add(f"{label}: Omega stability", check_omega_stability(asph, g))
        add(f"{label}: restriction to W", check_w_restriction(g, cfg, margin=margin))
    for n in (2, 3, 4):
        produced = format_table1(enumerate_cell_labels((n,), 4))
        add(f"GL_{n}: table rows vs golden", produced == _golden(f"gl{n}_max4.txt"))
    report["ok"] = all(c["ok"] for c in report["checks"])
    return report


def cmd_check(args) -> tuple[str, int]:
    _require_format(args, ("json",))
    radii = None
    if args.datum:
        R = args.radius
        radii = {sel: (R if R is not None else {"A1": 16, "A2": 12, "B2": 16}.get(sel, 8)) for sel in args.datum}
        for sel in radii:
            parse_datum_selector(sel)
    elif args.radius is not None:
        radii = {k: args.radius for k in ("A1", "A2", "B2")}
    report = run_check_suite(radii, margin=args.margin)
    return _dump_json(report), 0 if report["ok"] else 1


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cellulo", description="Kazhdan-Lusztig cells and weight-cell labels.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, datum=True, radius=True):
        if datum:
            sp.add_argument("--datum", help="built-in datum: A1, A2, B2, G2 or GL:a1,a2,...")
            sp.add_argument("--datum-file", help="JSON file with rank, simple_roots, simple_coroots")
        sp.add_argument("--ell", type=int, help="ell > Coxeter number (default h + 1)")
        if radius:
            sp.add_argument("--radius", "--max-length", dest="radius", type=int, help="ball radius in W")
        sp.add_argument("--out", help="output file (default stdout)")
        sp.add_argument("--format", choices=FORMATS, default="json")

    sp = sub.add_parser("cells", help="cell partition on a ball")
    common(sp)
    sp.add_argument("--side", choices=SIDES, default="antispherical")
    sp.add_argument("--margin", type=int, default=2)
    sp.add_argument("--no-bijection", action="store_true", help="skip the two-sided/antispherical matching")

    sp = sub.add_parser("klpoly", help="Kazhdan-Lusztig polynomials h_{x,w}")
    common(sp)
    sp.add_argument("--w", help="only this column, e.g. 't[1]*s1'")

    sp = sub.add_parser("asph-basis", help="antispherical canonical basis")
    common(sp)
    sp.add_argument("--method", choices=("projection", "recursive"), default="projection")

    sp = sub.add_parser("alcove", help="alcove of a weight or of w . 0")
    common(sp, radius=False)
    sp.add_argument("--weight", help="comma separated coordinates")
    sp.add_argument("--elt", help="element, e.g. 't[1,0]*s1'")

    sp = sub.add_parser("gl-cells", help="weight-cell labels for GL_a")
    sp.add_argument("--a", required=True, help="block sizes, e.g. 4 or 1,2")
    sp.add_argument("--max-terms", type=int, default=4)
    sp.add_argument("--format", choices=FORMATS)
    sp.add_argument("--out")

    sp = sub.add_parser("orbit-count", help="number of nilpotent orbits")
    common(sp, radius=False)

    sp = sub.add_parser("check", help="run the cross-validation suite")
    sp.add_argument("--datum", action="append", help="restrict to these data (repeatable)")
    sp.add_argument("--radius", type=int)
    sp.add_argument("--margin", type=int, default=2)
    sp.add_argument("--format", choices=("json",), default="json")
    sp.add_argument("--out")
    return p


_COMMANDS = {
    "cells": cmd_cells,
    "klpoly": cmd_klpoly,
    "asph-basis": cmd_asph_basis,
    "alcove": cmd_alcove,
    "gl-cells": cmd_gl_cells,
    "orbit-count": cmd_orbit_count,
    "check": cmd_check,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "gl-cells":
        args.format_given = args.format is not None
    code = 0
    try:
        result = _COMMANDS[args.command](args)
        if isinstance(result, tuple):
            result, code = result
    except (UsageError, DatumError) as exc:
        parser.error(str(exc))  # exits with status 2
    except (TableRadiusError, ArithmeticError, RuntimeError, ValueError) as exc:
        print(f"cellulo: error: {exc}", file=sys.stderr)
        return 1
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(result)
    else:
        sys.stdout.write(result)
    return code


if __name__ == "__main__":
    sys.exit(main())
