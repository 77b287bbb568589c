"""Knot mosaics: tiles, moves, invariants and the 7-mosaic survey."""
import json
import pathlib

from ._core import (
    SOURCE_DATA_DIR,
    DiagramError,
    KnotTable,
    Mosaic,
    MoveError,
    ParseError,
    TableError,
    invariants,
    layouts,
    prune,
    reduce,
    render_ascii,
    render_svg,
    survey_jsonl,
    tile_bounds,
)

# Installed wheels carry the data; editable installs read the source tree.
DATA_DIR = pathlib.Path(__file__).resolve().parent / "data"
if not DATA_DIR.is_dir():
    DATA_DIR = pathlib.Path(SOURCE_DATA_DIR)


def load_table(path=None):
    """The bundled knot table, or the one at `path`."""
    return KnotTable.load(str(path or DATA_DIR / "knots.csv"))


def survey(table=None, layouts=(1, 2, 3), min_crossings=9, jobs=1, exclusion=None):
    """Survey results as a list of dicts (the JSONL records)."""
    if exclusion is None:
        exclusion = [line.split(",")[0].strip() for line in (DATA_DIR / "exclusion.txt").read_text().splitlines()
                     if line.strip() and not line.startswith("#")]
    text = survey_jsonl(table or load_table(), list(layouts), min_crossings, jobs, set(exclusion))
    return [json.loads(line) for line in text.splitlines() if line]
