"""Regenerate the bundled synthetic sample dataset.

Ten invented attractions around the Santiago de Cuba historic centre,
scored by three synthetic experts across the full twenty-factor catalogue.
Qualities are chosen so that exactly three attractions end up above the
High threshold (crisp value 66 on the 0-100 target), with a wide margin,
and the three sit far enough apart that the default density analysis
yields three separate hotspots.

The pass/fail split is asserted here against a plain-arithmetic oracle
(no package imports), so the shipped fixture is self-verifying.  Output is
deterministic for a fixed seed.

Usage: python3 tools/make_santiago_sample.py
"""

from __future__ import annotations

import csv
import json
import math
from pathlib import Path

import numpy as np

SEED = 20250823
OUT = Path(__file__).resolve().parents[1] / "src" / "tourval" / "data" / "santiago_sample"
FACTORS_SRC = OUT.parent / "santiago_factors.csv"

EXPERTS = ["e1", "e2", "e3"]

# (id, name, quality in [0,1], lon, lat); first three are the keepers
ATTRACTIONS = [
    ("a01", "Cathedral Steps", 0.80, -75.8267, 20.0211),
    ("a02", "Old Harbour Customs House", 0.76, -75.8238, 20.0198),
    ("a03", "Carnival Museum Courtyard", 0.72, -75.8281, 20.0185),
    ("a04", "Balcony of the Velvets", 0.60, -75.8251, 20.0224),
    ("a05", "Rum Cellar Arcade", 0.57, -75.8296, 20.0207),
    ("a06", "Printmakers' Lane", 0.54, -75.8224, 20.0216),
    ("a07", "Fountain of the Two Brothers", 0.50, -75.8272, 20.0239),
    ("a08", "Tobacco Exchange Hall", 0.46, -75.8307, 20.0181),
    ("a09", "Seafarers' Chapel", 0.42, -75.8219, 20.0178),
    ("a10", "Clocktower Market", 0.38, -75.8259, 20.0160),
]


def read_catalogue():
    with open(FACTORS_SRC, encoding="utf-8", newline="") as handle:
        return [
            {"id": row["id"], "x": float(row["x"]), "y": float(row["y"]),
             "weight": float(row["weight"]), "name": row["name"]}
            for row in csv.DictReader(handle)
        ]


def synthesize(rng, catalogue):
    """One rounded TFN row per (attraction, factor, expert)."""
    rows = []
    for aid, _, quality, _, _ in ATTRACTIONS:
        for factor in catalogue:
            x, y = factor["x"], factor["y"]
            span = y - x
            for expert in EXPERTS:
                position = float(np.clip(quality + rng.normal(0.0, 0.05), 0.02, 0.98))
                mode = x + span * position
                lo = max(x, mode - span * rng.uniform(0.05, 0.15))
                hi = min(y, mode + span * rng.uniform(0.05, 0.15))
                lo, mode, hi = round(lo, 2), round(mode, 2), round(hi, 2)
                assert x <= lo <= mode <= hi <= y, (aid, factor["id"], lo, mode, hi)
                rows.append((aid, factor["id"], expert, lo, mode, hi))
    return rows


def oracle_crisp(rows, catalogue):
    """Plain-arithmetic check: expert means, endpoint-wise rescale to
    [0, 100], weighted sum, centroid."""
    by_attraction: dict[str, dict[str, list[tuple[float, float, float]]]] = {}
    for aid, fid, _, lo, mode, hi in rows:
        by_attraction.setdefault(aid, {}).setdefault(fid, []).append((lo, mode, hi))
    crisp = {}
    for aid, scores in by_attraction.items():
        total = [0.0, 0.0, 0.0]
        for factor in catalogue:
            triples = scores[factor["id"]]
            mean = [math.fsum(t[i] for t in triples) / len(triples) for i in range(3)]
            for i in range(3):
                rescaled = 100.0 - 100.0 * (factor["y"] - mean[i]) / (factor["y"] - factor["x"])
                total[i] += factor["weight"] * rescaled
        crisp[aid] = math.fsum(total) / 3.0
    return crisp


def main():
    rng = np.random.default_rng(SEED)
    catalogue = read_catalogue()
    rows = synthesize(rng, catalogue)

    crisp = oracle_crisp(rows, catalogue)
    keepers = sorted(aid for aid, value in crisp.items() if value > 66.0)
    for aid, value in sorted(crisp.items()):
        print(f"  {aid}: {value:8.4f} {'KEEP' if value > 66.0 else ''}")
    assert keepers == ["a01", "a02", "a03"], keepers
    margins = [abs(v - 66.0) for v in crisp.values()]
    assert min(margins) > 2.0, f"too close to the threshold: {min(margins):.3f}"

    OUT.mkdir(parents=True, exist_ok=True)

    with open(OUT / "factors.csv", "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(["id", "name", "x", "y", "weight"])
        for f in catalogue:
            writer.writerow([f["id"], f["name"], f"{f['x']:.2f}", f"{f['y']:.2f}",
                             f"{f['weight']:.3f}"])

    with open(OUT / "evaluations.csv", "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(["attraction_id", "factor_id", "expert_id", "lo", "mode", "hi"])
        for aid, fid, expert, lo, mode, hi in rows:
            writer.writerow([aid, fid, expert, f"{lo:.2f}", f"{mode:.2f}", f"{hi:.2f}"])

    with open(OUT / "attractions.csv", "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(["id", "name", "lon", "lat"])
        for aid, name, _, lon, lat in ATTRACTIONS:
            writer.writerow([aid, name, f"{lon:.6f}", f"{lat:.6f}"])

    config = {
        "factors": "factors.csv",
        "evaluations": "evaluations.csv",
        "attractions": "attractions.csv",
        "target": [0.0, 100.0],
        "defuzzify": "centroid",
        "range_policy": "strict",
        "tier_thresholds": [33.0, 66.0],
        "filter_threshold": 66.0,
        "kde": {"bandwidth_m": 120.0, "cell_m": 15.0,
                "hotspot_percentile": 75.0, "merge_radius_m": 0.0},
        "tour": {"walk_speed_kmh": 4.0, "dwell_minutes": [5.0, 10.0, 15.0]},
        "out_dir": "out",
    }
    (OUT / "config.json").write_text(
        json.dumps(config, indent=2, sort_keys=True) + "\n", encoding="utf-8")

    print(f"wrote {len(rows)} judgement rows for {len(ATTRACTIONS)} attractions "
          f"to {OUT}")


if __name__ == "__main__":
    main()
