"""Write identification fixtures from a survey JSONL file.

Usage: python tools/export_fixtures.py data/survey_27.jsonl data/fixtures/table NAME...
"""
import json
import pathlib
import sys


def main() -> None:
    source, out_dir, *names = sys.argv[1:]
    rows = {}
    for line in pathlib.Path(source).read_text().splitlines():
        if line.strip():
            r = json.loads(line)
            if isinstance(r["knot"], str):
                rows[r["knot"]] = r
    out = pathlib.Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for name in names:
        r = rows[name]
        text = f"# {name}: {r['tiles']} tiles, {r['crossings']} crossings, layout {r['layout']}\n"
        text += "\n".join(r["mosaic"]) + "\n"
        (out / f"{name}.txt").write_text(text)


if __name__ == "__main__":
    main()
