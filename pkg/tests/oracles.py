"""Independent reference computations used to cross-check the package.

Everything here is deliberately written from the defining formulas with
plain csv/math only, sharing no code path with the package internals.
"""

from __future__ import annotations

import csv
import math
from itertools import permutations
from pathlib import Path


def lre(a: float, x: float, y: float, m: float, big_m: float) -> float:
    """Affine min-max map of ``a`` from [x, y] onto [m, M]."""
    return big_m - (big_m - m) * (y - a) / (y - x)


def rescale3(t, x, y, m, big_m):
    """Endpoint-wise rescaling of a (lo, mode, hi) triple."""
    return tuple(lre(c, x, y, m, big_m) for c in t)


def centroid(t) -> float:
    return (t[0] + t[1] + t[2]) / 3.0


def weighted_ftv(scores, factors, m, big_m):
    """scores: factor_id -> (lo, mode, hi); factors: iterable of
    (factor_id, x, y, weight).  Componentwise exact-sum aggregation."""
    parts = {0: [], 1: [], 2: []}
    for factor_id, x, y, weight in factors:
        rescaled = rescale3(scores[factor_id], x, y, m, big_m)
        for i in range(3):
            parts[i].append(weight * rescaled[i])
    return tuple(math.fsum(parts[i]) for i in range(3))


def crisp_minmax_index(ratings_row, weights, minima, maxima) -> float:
    """Crisp index for a single individual: (5/1) * sum_k beta_k
    (x_k - min_k) / (max_k - min_k)."""
    total = math.fsum(
        w * (r - lo) / (hi - lo)
        for r, w, lo, hi in zip(ratings_row, weights, minima, maxima)
    )
    return 5.0 * total


def read_pipeline_inputs(sample_dir: Path):
    """(factors, scores-by-attraction) straight from the CSV files."""
    with open(sample_dir / "factors.csv", encoding="utf-8", newline="") as handle:
        factors = [
            (row["id"], float(row["x"]), float(row["y"]), float(row["weight"]))
            for row in csv.DictReader(handle)
        ]
    grouped: dict[str, dict[str, list[tuple[float, float, float]]]] = {}
    with open(sample_dir / "evaluations.csv", encoding="utf-8", newline="") as handle:
        for row in csv.DictReader(handle):
            grouped.setdefault(row["attraction_id"], {}).setdefault(
                row["factor_id"], []
            ).append((float(row["lo"]), float(row["mode"]), float(row["hi"])))
    return factors, grouped


def pipeline_oracle(sample_dir: Path, m: float = 0.0, big_m: float = 100.0):
    """attraction_id -> (ftv triple, centroid) computed from the raw files:
    expert means, endpoint-wise rescale, weighted sum, centroid."""
    factors, grouped = read_pipeline_inputs(sample_dir)
    out = {}
    for attraction_id, by_factor in grouped.items():
        means = {
            fid: tuple(math.fsum(t[i] for t in triples) / len(triples) for i in range(3))
            for fid, triples in by_factor.items()
        }
        ftv = weighted_ftv(means, factors, m, big_m)
        out[attraction_id] = (ftv, centroid(ftv))
    return out


def circuit_cost(order, dist):
    """Sequential left-to-right fold of the closed circuit, matching the
    accumulation order the planner uses."""
    total = 0.0
    for i in range(len(order)):
        total += dist[order[i]][order[(i + 1) % len(order)]]
    return total


def brute_force_tour(labels, dist, start_index):
    """Minimum over all permutations, ties broken by the lexicographically
    smallest label sequence.  Returns (cost, index order)."""
    others = [i for i in range(len(labels)) if i != start_index]
    best = None
    for perm in permutations(others):
        order = (start_index, *perm)
        cost = circuit_cost(order, dist)
        key = (cost, tuple(labels[i] for i in order))
        if best is None or key < best[0]:
            best = (key, order)
    return best[0][0], best[1]
