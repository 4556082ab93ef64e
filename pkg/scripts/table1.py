"""Print the weight-cell labels for GL_a and compare with the stored goldens.

    python3 scripts/table1.py --a 4 --max-terms 5
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass
from importlib import resources

from cellulo.glcells import enumerate_cell_labels, format_table1


@dataclass(frozen=True)
class TableRun:
    a: tuple[int, ...]
    max_terms: int = 4


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--a", default="4")
    p.add_argument("--max-terms", type=int, default=4)
    args = p.parse_args()
    run = TableRun(tuple(int(x) for x in args.a.split(",")), args.max_terms)
    text = format_table1(enumerate_cell_labels(run.a, run.max_terms))
    print(text, end="")
    print(f"-- {text.count(chr(10))} labels")
    if len(run.a) == 1 and run.max_terms == 4:
        golden = resources.files("cellulo").joinpath("golden", f"gl{run.a[0]}_max4.txt")
        if golden.is_file():
            print("-- golden", "matches" if golden.read_text(encoding="utf-8") == text else "DIFFERS")


if __name__ == "__main__":
    main()
