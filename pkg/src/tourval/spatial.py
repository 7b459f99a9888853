"""Geospatial analysis of valued attractions: density heatmap, hotspots,
and a small exact walking circuit.

Distances between stops use the haversine formula; gridding uses a local
equirectangular frame around the centre of the data's bounding box, which
is metrically honest at the city scales this targets (a few km).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .errors import ConfigError

__all__ = [
    "EARTH_RADIUS_KM",
    "GeoPoint",
    "ScoredPoint",
    "DensityGrid",
    "HotSpot",
    "Tour",
    "haversine_km",
    "circuit_length_km",
    "kde_heatmap",
    "detect_hotspots",
    "merge_hotspots",
    "plan_tour",
    "estimate_duration",
    "MAX_TOUR_STOPS",
]

EARTH_RADIUS_KM = 6371.0088
MAX_TOUR_STOPS = 12


@dataclass(frozen=True)
class GeoPoint:
    """WGS84 position in degrees, (lon, lat) order as in GeoJSON."""

    lon: float
    lat: float

    def __post_init__(self):
        if not (math.isfinite(self.lon) and -180.0 <= self.lon <= 180.0):
            raise ValueError(f"longitude must be in [-180, 180], got {self.lon}")
        if not (math.isfinite(self.lat) and -90.0 <= self.lat <= 90.0):
            raise ValueError(f"latitude must be in [-90, 90], got {self.lat}")


@dataclass(frozen=True)
class ScoredPoint:
    """A location carrying a non-negative weight (a defuzzified value)."""

    point: GeoPoint
    weight: float

    def __post_init__(self):
        if not (math.isfinite(self.weight) and self.weight >= 0.0):
            raise ValueError(f"weight must be finite and non-negative, got {self.weight}")


@dataclass(frozen=True)
class HotSpot:
    """Local maximum of the density surface."""

    center: GeoPoint
    score: float
    label: str

    def __post_init__(self):
        if not self.score > 0.0:
            raise ValueError(f"hotspot score must be positive, got {self.score}")


@dataclass(frozen=True)
class Tour:
    """Closed walking circuit over hotspots.  ``stops`` lists each hotspot
    once; the circuit returns to the first stop."""

    stops: tuple[HotSpot, ...]
    length_km: float
    duration_hours: tuple[float, float, float] | None = None

    def __post_init__(self):
        object.__setattr__(self, "stops", tuple(self.stops))
        if self.length_km < 0.0:
            raise ValueError("tour length cannot be negative")
        if self.duration_hours is not None:
            dmin, davg, dmax = self.duration_hours
            if not dmin <= davg <= dmax:
                raise ValueError(f"duration bounds must be ordered, got {self.duration_hours}")


@dataclass(frozen=True)
class DensityGrid:
    """Regular grid of density values in a local equirectangular frame.

    ``center`` is the projection reference; ``(x0, y0)`` locate the grid's
    south-west corner in metres relative to it.  ``values[row, col]`` holds
    the density at the cell centre, row 0 being the southernmost row.
    """

    center: GeoPoint
    x0: float
    y0: float
    cell_m: float
    values: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.values, dtype=float)
        if v.ndim != 2 or v.shape[0] < 1 or v.shape[1] < 1:
            raise ValueError(f"grid values must be a 2-d array, got shape {v.shape}")
        if np.any(v < 0) or not np.all(np.isfinite(v)):
            raise ValueError("grid values must be finite and non-negative")
        if not self.cell_m > 0:
            raise ValueError(f"cell size must be positive, got {self.cell_m}")
        v = v.copy()
        v.flags.writeable = False
        object.__setattr__(self, "values", v)

    @property
    def nrows(self) -> int:
        return self.values.shape[0]

    @property
    def ncols(self) -> int:
        return self.values.shape[1]

    @property
    def origin(self) -> GeoPoint:
        """South-west corner of the grid."""
        return _unproject(self.x0, self.y0, self.center)

    def cell_center(self, row: int, col: int) -> GeoPoint:
        return _unproject(self.x0 + (col + 0.5) * self.cell_m,
                          self.y0 + (row + 0.5) * self.cell_m, self.center)

    def cell_corners(self, row: int, col: int) -> list[GeoPoint]:
        """Corners of one cell, counter-clockwise starting south-west."""
        xs = (self.x0 + col * self.cell_m, self.x0 + (col + 1) * self.cell_m)
        ys = (self.y0 + row * self.cell_m, self.y0 + (row + 1) * self.cell_m)
        return [
            _unproject(xs[0], ys[0], self.center),
            _unproject(xs[1], ys[0], self.center),
            _unproject(xs[1], ys[1], self.center),
            _unproject(xs[0], ys[1], self.center),
        ]


def haversine_km(a: GeoPoint, b: GeoPoint) -> float:
    """Great-circle distance between two points in kilometres."""
    lon1, lat1 = math.radians(a.lon), math.radians(a.lat)
    lon2, lat2 = math.radians(b.lon), math.radians(b.lat)
    s = (math.sin((lat2 - lat1) / 2.0) ** 2
         + math.cos(lat1) * math.cos(lat2) * math.sin((lon2 - lon1) / 2.0) ** 2)
    return 2.0 * EARTH_RADIUS_KM * math.asin(math.sqrt(s))


def circuit_length_km(points: Sequence[GeoPoint]) -> float:
    """Length of the closed circuit visiting the points in order."""
    n = len(points)
    if n < 2:
        return 0.0
    total = 0.0
    for i in range(n):
        total += haversine_km(points[i], points[(i + 1) % n])
    return total


def _project(point: GeoPoint, center: GeoPoint) -> tuple[float, float]:
    """Local equirectangular projection to metres around ``center``."""
    r = EARTH_RADIUS_KM * 1000.0
    x = r * math.cos(math.radians(center.lat)) * math.radians(point.lon - center.lon)
    y = r * math.radians(point.lat - center.lat)
    return x, y


def _unproject(x: float, y: float, center: GeoPoint) -> GeoPoint:
    r = EARTH_RADIUS_KM * 1000.0
    lon = center.lon + math.degrees(x / (r * math.cos(math.radians(center.lat))))
    lat = center.lat + math.degrees(y / r)
    return GeoPoint(lon, lat)


def kde_heatmap(points: Iterable[ScoredPoint], bandwidth_m: float = 100.0,
                cell_m: float = 10.0) -> DensityGrid:
    """Weighted kernel density surface over the points' bounding box.

    Uses the quartic (biweight) kernel K(u) = (15/16)(1 - u^2)^2 for u < 1;
    each cell holds sum_i w_i * K(d_i / bandwidth) evaluated at the cell
    centre.  The grid covers the bounding box padded by one bandwidth plus
    half a cell: the extra half cell puts a point lying on the bounding-box
    edge at a cell centre, not a cell corner, so an isolated kernel peaks
    in a single cell instead of tying across the corner's neighbours.
    Deterministic: cells are accumulated in input order.
    """
    if not bandwidth_m > 0:
        raise ConfigError(f"bandwidth must be positive, got {bandwidth_m}")
    if not cell_m > 0:
        raise ConfigError(f"cell size must be positive, got {cell_m}")
    points = list(points)
    if not points:
        return DensityGrid(GeoPoint(0.0, 0.0), 0.0, 0.0, cell_m, np.zeros((1, 1)))

    lons = [p.point.lon for p in points]
    lats = [p.point.lat for p in points]
    # anchor on the bounding-box midpoint: points added inside the box then
    # leave the frame (and every cell) exactly where it was
    center = GeoPoint((min(lons) + max(lons)) / 2.0, (min(lats) + max(lats)) / 2.0)
    xy = [_project(p.point, center) for p in points]
    xs = [v[0] for v in xy]
    ys = [v[1] for v in xy]

    x0 = min(xs) - bandwidth_m - cell_m / 2.0
    y0 = min(ys) - bandwidth_m - cell_m / 2.0
    ncols = max(1, math.ceil((max(xs) + bandwidth_m - x0) / cell_m))
    nrows = max(1, math.ceil((max(ys) + bandwidth_m - y0) / cell_m))

    cx = x0 + (np.arange(ncols) + 0.5) * cell_m
    cy = y0 + (np.arange(nrows) + 0.5) * cell_m
    values = np.zeros((nrows, ncols))
    for p, (px, py) in zip(points, xy):
        u2 = ((cx[None, :] - px) ** 2 + (cy[:, None] - py) ** 2) / (bandwidth_m ** 2)
        inside = u2 < 1.0
        k = np.zeros_like(u2)
        k[inside] = (15.0 / 16.0) * (1.0 - u2[inside]) ** 2
        values += p.weight * k
    return DensityGrid(center, x0, y0, cell_m, values)


def detect_hotspots(grid: DensityGrid, percentile: float = 90.0) -> list[HotSpot]:
    """Strict 8-neighbourhood local maxima of the density surface that reach
    the given percentile of the positive cell values.

    Returned sorted by descending score (row/col order breaks ties) and
    labelled H1, H2, ... in that order.  A flat surface has no strict
    maxima, hence no hotspots.
    """
    if not 0.0 < percentile < 100.0:
        raise ValueError(f"percentile must be in (0, 100), got {percentile}")
    v = grid.values
    positive = v[v > 0.0]
    if positive.size == 0:
        return []
    threshold = float(np.percentile(positive, percentile))

    padded = np.pad(v, 1, constant_values=-np.inf)
    is_max = np.ones_like(v, dtype=bool)
    for dr in (-1, 0, 1):
        for dc in (-1, 0, 1):
            if dr == 0 and dc == 0:
                continue
            neighbour = padded[1 + dr:1 + dr + v.shape[0], 1 + dc:1 + dc + v.shape[1]]
            is_max &= v > neighbour

    cells = [(float(v[r, c]), r, c)
             for r, c in zip(*np.nonzero(is_max)) if v[r, c] >= threshold]
    cells.sort(key=lambda t: (-t[0], t[1], t[2]))
    return [HotSpot(grid.cell_center(r, c), score, f"H{i + 1}")
            for i, (score, r, c) in enumerate(cells)]


def merge_hotspots(hotspots: Sequence[HotSpot], radius_m: float) -> list[HotSpot]:
    """Greedily merge hotspots closer than ``radius_m`` into the strongest
    one of each group; merged scores are summed.  Radius 0 disables merging.
    The original criterion behind any particular published cluster count is
    not fixed here, so the radius is an explicit knob."""
    if radius_m <= 0:
        return list(hotspots)
    remaining = sorted(hotspots, key=lambda h: (-h.score, h.label))
    merged: list[HotSpot] = []
    while remaining:
        head, rest = remaining[0], remaining[1:]
        near = [haversine_km(head.center, h.center) * 1000.0 <= radius_m for h in rest]
        score = head.score + sum(h.score for h, hit in zip(rest, near) if hit)
        remaining = [h for h, hit in zip(rest, near) if not hit]
        merged.append(HotSpot(head.center, score, head.label))
    merged.sort(key=lambda h: (-h.score, h.label))
    return merged


def plan_tour(hotspots: Sequence[HotSpot], start: HotSpot | None = None) -> Tour:
    """Shortest closed circuit visiting every hotspot exactly once.

    Exact dynamic programming over visited subsets; intended for the handful
    of clusters a destination yields (at most 12 -- merge or filter first
    beyond that).  Cost ties are broken by the lexicographically smallest
    label sequence, making the result fully deterministic.
    """
    hotspots = list(hotspots)
    n = len(hotspots)
    if n == 0:
        raise ValueError("cannot plan a tour without hotspots")
    if n > MAX_TOUR_STOPS:
        raise ValueError(
            f"{n} hotspots exceed the exact-search limit of {MAX_TOUR_STOPS}; "
            "merge nearby hotspots or raise the detection percentile first"
        )
    if start is None:
        s = min(range(n), key=lambda i: hotspots[i].label)
    else:
        try:
            s = next(i for i, h in enumerate(hotspots) if h == start)
        except StopIteration:
            raise ValueError("start hotspot is not in the list") from None
    if n == 1:
        return Tour((hotspots[0],), 0.0)

    d = [[haversine_km(a.center, b.center) for b in hotspots] for a in hotspots]
    labels = [h.label for h in hotspots]
    others = [i for i in range(n) if i != s]

    # best[(mask, last)] = (cost, label sequence, index path); mask is over
    # `others`, paths start at s
    best: dict[tuple[int, int], tuple[float, tuple[str, ...], tuple[int, ...]]] = {}
    for bit, i in enumerate(others):
        best[(1 << bit, i)] = (d[s][i], (labels[s], labels[i]), (s, i))
    for size in range(2, n):
        for subset in combinations(range(len(others)), size):
            mask = 0
            for bit in subset:
                mask |= 1 << bit
            for bit in subset:
                i = others[bit]
                prev_mask = mask ^ (1 << bit)
                candidate = None
                for pbit in subset:
                    if pbit == bit:
                        continue
                    entry = best.get((prev_mask, others[pbit]))
                    if entry is None:
                        continue
                    cost = entry[0] + d[others[pbit]][i]
                    key = (cost, entry[1] + (labels[i],))
                    if candidate is None or key < (candidate[0], candidate[1]):
                        candidate = (cost, key[1], entry[2] + (i,))
                if candidate is not None:
                    best[(mask, i)] = candidate

    full = (1 << len(others)) - 1
    winner = None
    for i in others:
        entry = best[(full, i)]
        cost = entry[0] + d[i][s]
        key = (cost, entry[1])
        if winner is None or key < (winner[0], winner[1]):
            winner = (cost, entry[1], entry[2])
    length, _, path = winner
    return Tour(tuple(hotspots[i] for i in path), length)


def estimate_duration(tour: Tour, walk_speed_kmh: float,
                      dwell_minutes: tuple[float, float, float] = (0.0, 0.0, 0.0),
                      stops: int | None = None) -> tuple[float, float, float]:
    """(min, avg, max) duration in hours: walking time plus a per-stop dwell.

    Each bound uses the corresponding dwell bound; ``stops`` defaults to the
    number of tour stops.
    """
    if not walk_speed_kmh > 0:
        raise ConfigError(f"walking speed must be positive, got {walk_speed_kmh}")
    dmin, davg, dmax = dwell_minutes
    if not 0.0 <= dmin <= davg <= dmax:
        raise ConfigError(f"dwell bounds must satisfy 0 <= min <= avg <= max, got {dwell_minutes}")
    if stops is None:
        stops = len(tour.stops)
    walk = tour.length_km / walk_speed_kmh
    return tuple(walk + stops * dm / 60.0 for dm in (dmin, davg, dmax))
