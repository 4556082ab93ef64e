"""Antispherical cell counts against nilpotent orbit counts.

    python3 scripts/cell_counts.py --datum A1:16 A2:12 B2:16 G2:22
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from cellulo.cells import compute_cells
from cellulo.glcells import orbit_count
from cellulo.rootdata import Config, coxeter_number, parse_datum_selector
from cellulo.weyl import weyl_group


@dataclass(frozen=True)
class Run:
    datum: str
    radius: int
    margin: int = 2
    side: str = "antispherical"


def count(run: Run) -> dict:
    d = parse_datum_selector(run.datum)
    g = weyl_group(d)
    start = time.perf_counter()
    part = compute_cells(g, Config(coxeter_number(d) + 1, run.radius), run.side, margin=run.margin)
    return {
        "datum": run.datum,
        "radius": run.radius,
        "cells": len(part.cells),
        "complete": len(part.complete_cells()),
        "orbits": orbit_count(d),
        "seconds": round(time.perf_counter() - start, 2),
    }


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--datum", nargs="+", default=["A1:16", "A2:12", "B2:16", "G2:22"], help="SELECTOR:RADIUS")
    p.add_argument("--margin", type=int, default=2)
    p.add_argument("--side", default="antispherical")
    args = p.parse_args()
    print(f"{'datum':8} {'R':>3} {'cells':>5} {'complete':>8} {'orbits':>6} {'sec':>6}")
    for item in args.datum:
        sel, _, r = item.rpartition(":")
        row = count(Run(sel, int(r), args.margin, args.side))
        print(f"{row['datum']:8} {row['radius']:3d} {row['cells']:5d} {row['complete']:8d} {row['orbits']:6d} {row['seconds']:6.2f}")


if __name__ == "__main__":
    main()
