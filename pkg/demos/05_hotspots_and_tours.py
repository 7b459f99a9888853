"""
===================================================================
Hotspots and walking tours from scored locations
===================================================================

Once attractions carry crisp value scores, geography takes over:

1.  A kernel density surface (quartic kernel on a metric grid) turns the
    scored points into a heat map.
2.  Strict local maxima above a percentile of the surface become
    labelled hotspots; nearby hotspots can be merged.
3.  An exact small-instance tour planner orders the hotspots into the
    shortest closed walking circuit and estimates its duration.
"""

from tourval.spatial import (
    GeoPoint,
    ScoredPoint,
    detect_hotspots,
    estimate_duration,
    kde_heatmap,
    merge_hotspots,
    plan_tour,
)

# --- 1. A small scored point set around a plaza ---

# Two tight clusters (plaza and harbour) plus one outlier up the hill.
points = [
    ScoredPoint(GeoPoint(-75.8262, 20.0210), 80.0),   # plaza, west side
    ScoredPoint(GeoPoint(-75.8258, 20.0212), 74.0),   # plaza, east side
    ScoredPoint(GeoPoint(-75.8238, 20.0196), 71.0),   # harbour
    ScoredPoint(GeoPoint(-75.8236, 20.0199), 68.0),   # harbour
    ScoredPoint(GeoPoint(-75.8281, 20.0234), 69.0),   # hillside chapel
]

grid = kde_heatmap(points, bandwidth_m=80.0, cell_m=10.0)
print("--- 1. Density surface ---")
print(f"  grid: {grid.nrows} x {grid.ncols} cells of {grid.cell_m:.0f} m, "
      f"peak density {grid.values.max():.2f}")

# --- 2. Hotspots ---

print("\n--- 2. Hotspots ---")
spots = detect_hotspots(grid, percentile=75.0)
for spot in spots:
    print(f"  {spot.label}: score {spot.score:.2f} at "
          f"({spot.center.lon:.5f}, {spot.center.lat:.5f})")

# The two plaza points sit ~50 m apart; with a wide enough merge radius
# their peaks collapse into one hotspot that keeps the dominant centre.
merged = merge_hotspots(spots, radius_m=120.0)
print(f"  after merging within 120 m: {[s.label for s in merged]}")

# --- 3. Tour ---

print("\n--- 3. Tour ---")
tour = plan_tour(merged)
route = " -> ".join(h.label for h in tour.stops)
print(f"  optimal circuit: {route} -> {tour.stops[0].label}")
print(f"  length: {tour.length_km:.3f} km")

lo, avg, hi = estimate_duration(tour, walk_speed_kmh=4.0,
                                dwell_minutes=(10.0, 15.0, 25.0))
print(f"  duration: {lo:.2f} h (brisk) / {avg:.2f} h (typical) / {hi:.2f} h (leisurely)")
