#!/usr/bin/env python3
"""Write KnotInfo's Jones, Alexander and determinant for every knot in
data/knots.csv to tests/data/reference_invariants.csv.

The file is an independent oracle for the invariant engine: the values come
from the database, not from this code base.
"""
import pathlib

import sympy
from database_knotinfo import link_list

ROOT = pathlib.Path(__file__).resolve().parent.parent
t = sympy.Symbol("t")


def table_name(name):
    import re
    m = re.fullmatch(r"(\d+)([an])_(\d+)", name)
    return f"{m[1]}{m[2]}{m[3]}" if m else name


def serialize(text):
    expr = sympy.expand(sympy.sympify(text.replace("^", "**"), locals={"t": t}))
    terms = sympy.Poly(sympy.expand(expr * t**40), t).terms()
    pairs = sorted((e[0] - 40, int(c)) for e, c in terms)
    return ";".join(f"{c}:{e}" for e, c in pairs)


def main():
    wanted = []
    for line in (ROOT / "data" / "knots.csv").read_text().splitlines():
        if line and not line.startswith("#"):
            wanted.append(line.split(",", 1)[0])
    info = {table_name(r["name"]): r for r in link_list()[1:]}
    out = ["# name,jones,alexander,determinant (KnotInfo values; jones for the KnotInfo chirality)"]
    for name in wanted:
        r = info[name]
        out.append(f"{name},{serialize(r['jones_polynomial'])},{serialize(r['alexander_polynomial'])},{r['determinant']}")
    (ROOT / "tests" / "data" / "reference_invariants.csv").write_text("\n".join(out) + "\n")
    print(len(out) - 1, "records")


if __name__ == "__main__":
    main()
