"""GeoJSON (RFC 7946) builders for map output.

Coordinates are written as [lon, lat] rounded to 6 decimal places (about
0.1 m); metric properties are rounded to 6 significant digits.  Rounding
here keeps serialized output byte-stable across platforms.
"""

from __future__ import annotations

from typing import Any

from .spatial import DensityGrid, GeoPoint, HotSpot, Tour
from .valuation import ValuationResult

__all__ = [
    "feature_collection",
    "attraction_feature",
    "hotspot_feature",
    "tour_feature",
    "density_features",
]


def _coord(p: GeoPoint) -> list[float]:
    return [round(p.lon, 6), round(p.lat, 6)]


def _metric(x: float) -> float:
    return float(f"{x:.6g}")


def feature_collection(features: list[dict[str, Any]]) -> dict[str, Any]:
    return {"type": "FeatureCollection", "features": features}


def _feature(geometry: dict[str, Any], properties: dict[str, Any]) -> dict[str, Any]:
    return {"type": "Feature", "geometry": geometry, "properties": properties}


def attraction_feature(point: GeoPoint, result: ValuationResult, name: str,
                       rank: int | None = None) -> dict[str, Any]:
    properties: dict[str, Any] = {
        "feature_type": "attraction",
        "id": result.attraction_id,
        "name": name,
        "ftv_lo": _metric(result.ftv.lo),
        "ftv_mode": _metric(result.ftv.mode),
        "ftv_hi": _metric(result.ftv.hi),
        "crisp": _metric(result.crisp),
    }
    if result.tier is not None:
        properties["tier"] = result.tier
    if rank is not None:
        properties["rank"] = rank
    return _feature({"type": "Point", "coordinates": _coord(point)}, properties)


def hotspot_feature(hotspot: HotSpot) -> dict[str, Any]:
    properties = {
        "feature_type": "hotspot",
        "label": hotspot.label,
        "score": _metric(hotspot.score),
    }
    return _feature({"type": "Point", "coordinates": _coord(hotspot.center)}, properties)


def tour_feature(tour: Tour) -> dict[str, Any]:
    """The closed circuit as a LineString whose last position repeats the
    first."""
    coords = [_coord(h.center) for h in tour.stops]
    coords.append(coords[0])
    properties: dict[str, Any] = {
        "feature_type": "tour",
        "stops": [h.label for h in tour.stops],
        "length_km": _metric(tour.length_km),
    }
    if tour.duration_hours is not None:
        dmin, davg, dmax = tour.duration_hours
        properties["duration_hours_min"] = _metric(dmin)
        properties["duration_hours_avg"] = _metric(davg)
        properties["duration_hours_max"] = _metric(dmax)
    return _feature({"type": "LineString", "coordinates": coords}, properties)


def density_features(grid: DensityGrid) -> list[dict[str, Any]]:
    """One square Polygon per cell with positive density; zero cells are
    skipped to keep files small.  Rings are counter-clockwise and closed."""
    features = []
    for row in range(grid.nrows):
        for col in range(grid.ncols):
            value = float(grid.values[row, col])
            if value <= 0.0:
                continue
            ring = [_coord(p) for p in grid.cell_corners(row, col)]
            ring.append(ring[0])
            features.append(_feature(
                {"type": "Polygon", "coordinates": [ring]},
                {"feature_type": "density", "density": _metric(value)},
            ))
    return features
