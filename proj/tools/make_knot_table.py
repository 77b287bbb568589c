#!/usr/bin/env python3
"""Regenerate data/knots.csv and data/exclusion.txt from the KnotInfo database.

Requires the `database_knotinfo` package. The default table holds every prime
knot with at most 10 crossings, the 11-13 crossing knots named in
data/targets.txt, and every knot on the exclusion list.  `--full` writes every
knot up to 13 crossings instead (useful for auditing survey output).
"""
import argparse
import pathlib
import re

from database_knotinfo import link_list

ROOT = pathlib.Path(__file__).resolve().parent.parent


def table_name(knotinfo_name):
    # 11a_341 -> 11a341; Rolfsen names keep their underscore.
    m = re.fullmatch(r"(\d+)([an])_(\d+)", knotinfo_name)
    return f"{m[1]}{m[2]}{m[3]}" if m else knotinfo_name


def pd_field(pd):
    crossings = re.findall(r"\[([^\[\]]+)\]", pd)
    return "".join("[" + " ".join(c.replace(",", " ").split()) + "]" for c in crossings)


def mosaic_tile(field):
    parts = field.replace(" ", "").strip("[]").split(",")
    try:
        return int(parts[0]), int(parts[1])
    except (ValueError, IndexError):
        return None


def read_names(path):
    out = []
    for line in path.read_text().splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            out.append(line)
    return out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--full", action="store_true")
    ap.add_argument("--out", default=str(ROOT / "data" / "knots.csv"))
    ap.add_argument("--exclusion-out", default=str(ROOT / "data" / "exclusion.txt"))
    args = ap.parse_args()

    records = [r for r in link_list()[1:] if r["name"] != "0_1" and r["pd_notation"]]
    targets = set(read_names(ROOT / "data" / "targets.txt"))
    # Knots realizing tile number 27 only on a 7-mosaic although their mosaic number is 6.
    seven_only = {"9_10", "10_11", "10_20", "10_21", "11a341"}

    exclusion = []
    for r in records:
        mt = mosaic_tile(r["mosaic_tile_number"])
        name = table_name(r["name"])
        if mt and int(r["crossing_number"]) >= 9 and mt[0] <= 6 and mt[1] <= 27 and name not in seven_only:
            exclusion.append(name)

    keep = set(exclusion) | targets
    rows = []
    for r in records:
        name = table_name(r["name"])
        crossings = int(r["crossing_number"])
        if args.full or crossings <= 10 or name in keep:
            rows.append(f"{name},{crossings},{pd_field(r['pd_notation'])}")

    with open(args.out, "w") as f:
        f.write("# name,crossings,planar diagram code (KnotInfo PD convention)\n")
        f.write("# generated by tools/make_knot_table.py from the KnotInfo database\n")
        f.write("\n".join(rows) + "\n")
    if not args.full:
        with open(args.exclusion_out, "w") as f:
            f.write("# Knots with at least 9 crossings, mosaic number <= 6, and tile number <= 27\n")
            f.write("# already realized on a 6-mosaic (KnotInfo mosaic/tile data).\n")
            f.write("\n".join(exclusion) + "\n")
    print(f"{len(rows)} knots, {len(exclusion)} excluded names")


if __name__ == "__main__":
    main()
