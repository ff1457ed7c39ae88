"""CSV, JSON and JSON Lines writers for run reports."""

import csv
import json
import logging
from pathlib import Path

import jsonlines

logger = logging.getLogger(__name__)

CSV_HEADER = ["n", "alpha", "seed", "K", "v_giant", "e_giant"]


def write_csv(rows, path):
    with open(path, "w", newline="") as f:
        writer = csv.writer(f)
        writer.writerow(CSV_HEADER)
        for row in rows:
            writer.writerow([row.n, repr(row.alpha), row.seed, row.K, row.v_giant, row.e_giant])


def write_json(obj, path):
    with open(path, "w") as f:
        json.dump(obj, f, indent=2)
        f.write("\n")


def write_jsonl(rows, path):
    with jsonlines.open(path, mode="w") as writer:
        for row in rows:
            writer.write(row.to_json())


def write_outputs(report, outputs: dict, out_dir=None) -> dict:
    """Write whichever of ``csv``, ``json`` and ``jsonl`` the outputs mapping names.

    Relative paths are resolved against ``out_dir`` when given. Returns the paths written.
    """
    base = Path(out_dir) if out_dir is not None else Path(".")
    written = {}
    for key, writer, payload in (
        ("csv", write_csv, report.rows),
        ("json", write_json, report.to_json()),
        ("jsonl", write_jsonl, report.rows),
    ):
        if not outputs.get(key):
            continue
        path = base / outputs[key]
        path.parent.mkdir(parents=True, exist_ok=True)
        writer(payload, path)
        written[key] = str(path)
        logger.info("wrote %s", path)
    return written
