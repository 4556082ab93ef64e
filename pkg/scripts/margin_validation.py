"""Compare completeness claims at a small margin against a large-margin reference.

A cell reported complete at margin m is a false claim if its member set
differs from the cell of the same elements computed with margin M.

    python3 scripts/margin_validation.py --datum A2 B2 G2 --radii 4-20 --margin 1 2 --reference 5
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from cellulo.cells import compute_cells
from cellulo.hecke import canonical_basis
from cellulo.rootdata import Config, coxeter_number, parse_datum_selector
from cellulo.weyl import weyl_group


@dataclass(frozen=True)
class Sweep:
    datum: str
    radii: range
    margins: tuple[int, ...]
    reference: int


def false_claims(sweep: Sweep) -> list[tuple[int, int, int]]:
    """(radius, margin, number of complete cells that the reference contradicts)."""
    d = parse_datum_selector(sweep.datum)
    g = weyl_group(d)
    table = canonical_basis(g, max(sweep.radii) + 2 * max(sweep.margins + (sweep.reference,)))
    out = []
    for R in sweep.radii:
        cfg = Config(coxeter_number(d) + 1, R)
        ref = compute_cells(g, cfg, "antispherical", margin=sweep.reference, table=table)
        truth = {frozenset(c.members) for c in ref.cells}
        for m in sweep.margins:
            part = compute_cells(g, cfg, "antispherical", margin=m, table=table)
            bad = sum(1 for c in part.complete_cells() if frozenset(c.members) not in truth)
            out.append((R, m, bad))
    return out


def _range(text: str) -> range:
    lo, _, hi = text.partition("-")
    return range(int(lo), int(hi or lo) + 1)


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--datum", nargs="+", default=["A2", "B2", "G2"])
    p.add_argument("--radii", type=_range, default=range(4, 17))
    p.add_argument("--margin", nargs="+", type=int, default=[1, 2])
    p.add_argument("--reference", type=int, default=5)
    args = p.parse_args()
    for sel in args.datum:
        rows = false_claims(Sweep(sel, args.radii, tuple(args.margin), args.reference))
        for m in args.margin:
            bad = [(R, k) for R, mm, k in rows if mm == m and k]
            print(f"{sel} margin {m}: {'no false claims' if not bad else 'false claims at ' + str(bad)}")


if __name__ == "__main__":
    main()
