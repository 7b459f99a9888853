import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from tourval import (
    EARTH_RADIUS_KM,
    DensityGrid,
    GeoPoint,
    HotSpot,
    ScoredPoint,
    Tour,
    circuit_length_km,
    detect_hotspots,
    estimate_duration,
    haversine_km,
    kde_heatmap,
    merge_hotspots,
    plan_tour,
)
from tourval.errors import ConfigError

import oracles

CENTER = GeoPoint(-75.8267, 20.0211)


def offset_point(base: GeoPoint, east_km: float, north_km: float) -> GeoPoint:
    """Place a point a metric offset away using the same small-angle
    geometry the grid uses."""
    dlat = math.degrees(north_km / EARTH_RADIUS_KM)
    dlon = math.degrees(east_km / (EARTH_RADIUS_KM * math.cos(math.radians(base.lat))))
    return GeoPoint(base.lon + dlon, base.lat + dlat)


class TestGeoPoint:
    def test_valid(self):
        GeoPoint(-75.8, 20.0)

    @pytest.mark.parametrize("lon,lat", [(-181, 0), (181, 0), (0, 91), (0, -91),
                                         (float("nan"), 0)])
    def test_out_of_domain_rejected(self, lon, lat):
        with pytest.raises(ValueError):
            GeoPoint(lon, lat)

    def test_scored_point_weight_nonnegative(self):
        with pytest.raises(ValueError):
            ScoredPoint(CENTER, -1.0)


class TestHaversine:
    def test_zero_for_same_point(self):
        assert haversine_km(CENTER, CENTER) == 0.0

    def test_one_degree_longitude_at_equator(self):
        a, b = GeoPoint(0, 0), GeoPoint(1, 0)
        want = 2 * math.pi * EARTH_RADIUS_KM / 360.0
        assert haversine_km(a, b) == pytest.approx(want, rel=1e-9)

    def test_symmetry(self):
        a = GeoPoint(-75.8, 20.0)
        b = GeoPoint(-75.9, 20.1)
        assert haversine_km(a, b) == haversine_km(b, a)

    def test_metric_offset_roundtrip(self):
        b = offset_point(CENTER, 1.0, 0.0)
        assert haversine_km(CENTER, b) == pytest.approx(1.0, rel=1e-3)


class TestKde:
    def test_empty_input_gives_single_zero_cell(self):
        grid = kde_heatmap([], bandwidth_m=100, cell_m=10)
        assert grid.values.shape == (1, 1)
        assert grid.values[0, 0] == 0.0

    def test_bad_parameters_rejected(self):
        with pytest.raises(ConfigError):
            kde_heatmap([ScoredPoint(CENTER, 1.0)], bandwidth_m=0)
        with pytest.raises(ConfigError):
            kde_heatmap([ScoredPoint(CENTER, 1.0)], cell_m=-5)

    def test_single_point_peak_value(self):
        weight = 70.0
        grid = kde_heatmap([ScoredPoint(CENTER, weight)], bandwidth_m=100, cell_m=10)
        # the lone point sits at a cell centre, where K(0) = 15/16
        assert grid.values.max() == pytest.approx(weight * 15.0 / 16.0, rel=1e-9)

    def test_mass_bounded_by_kernel_peak(self):
        points = [ScoredPoint(offset_point(CENTER, dx, dy), 10.0)
                  for dx, dy in [(0, 0), (0.05, 0), (0, 0.05)]]
        grid = kde_heatmap(points, bandwidth_m=100, cell_m=10)
        assert grid.values.max() <= 30.0 * 15.0 / 16.0 + 1e-9

    def test_zero_weight_point_adds_nothing(self):
        base = [ScoredPoint(CENTER, 5.0), ScoredPoint(offset_point(CENTER, 0.3, 0), 5.0)]
        with_ghost = base + [ScoredPoint(offset_point(CENTER, 0.1, 0.0), 0.0)]
        a = kde_heatmap(base, bandwidth_m=100, cell_m=10)
        b = kde_heatmap(with_ghost, bandwidth_m=100, cell_m=10)
        assert np.array_equal(a.values, b.values)

    @given(st.floats(0.05, 0.95), st.floats(0.05, 0.95), st.floats(0.1, 50.0))
    @settings(max_examples=40, deadline=None)
    def test_adding_interior_mass_never_decreases_cells(self, u, v, weight):
        corners = [ScoredPoint(offset_point(CENTER, 0, 0), 3.0),
                   ScoredPoint(offset_point(CENTER, 0.4, 0.4), 3.0)]
        extra = ScoredPoint(offset_point(CENTER, 0.4 * u, 0.4 * v), weight)
        before = kde_heatmap(corners, bandwidth_m=100, cell_m=20)
        after = kde_heatmap(corners + [extra], bandwidth_m=100, cell_m=20)
        assert after.values.shape == before.values.shape
        assert np.all(after.values >= before.values - 1e-12)

    def test_grid_geometry_accessors(self):
        grid = kde_heatmap([ScoredPoint(CENTER, 1.0)], bandwidth_m=100, cell_m=10)
        assert grid.nrows == grid.values.shape[0]
        assert grid.ncols == grid.values.shape[1]
        corner_ring = grid.cell_corners(0, 0)
        assert len(corner_ring) == 4
        centre = grid.cell_center(0, 0)
        for corner in corner_ring:
            half_diagonal_km = grid.cell_m * math.sqrt(2) / 2 / 1000
            assert haversine_km(centre, corner) <= half_diagonal_km * 1.01

    def test_values_are_frozen(self):
        grid = kde_heatmap([ScoredPoint(CENTER, 1.0)], bandwidth_m=100, cell_m=10)
        with pytest.raises(ValueError):
            grid.values[0, 0] = 99.0


class TestHotspots:
    def test_uniform_surface_has_no_hotspots(self):
        grid = DensityGrid(CENTER, 0.0, 0.0, 10.0, np.full((5, 5), 3.0))
        assert detect_hotspots(grid) == []

    def test_single_peak_found_and_labelled(self):
        values = np.zeros((5, 5))
        values[2, 3] = 7.0
        grid = DensityGrid(CENTER, 0.0, 0.0, 10.0, values)
        spots = detect_hotspots(grid, percentile=50.0)
        assert len(spots) == 1
        assert spots[0].label == "H1"
        assert spots[0].score == 7.0

    def test_two_separated_kernels_give_two_hotspots(self):
        points = [ScoredPoint(CENTER, 5.0),
                  ScoredPoint(offset_point(CENTER, 0.5, 0.0), 4.0)]
        grid = kde_heatmap(points, bandwidth_m=100, cell_m=10)
        spots = detect_hotspots(grid, percentile=50.0)
        assert len(spots) == 2
        # strongest first, each within a cell diagonal of its point
        assert spots[0].score > spots[1].score
        assert haversine_km(spots[0].center, points[0].point) < 0.015
        assert haversine_km(spots[1].center, points[1].point) < 0.015

    def test_scores_reach_percentile_threshold(self):
        rng = np.random.default_rng(3)
        values = rng.uniform(0, 10, size=(20, 20))
        grid = DensityGrid(CENTER, 0.0, 0.0, 10.0, values)
        spots = detect_hotspots(grid, percentile=90.0)
        threshold = np.percentile(values[values > 0], 90.0)
        assert spots
        assert all(s.score >= threshold for s in spots)

    def test_ordering_is_deterministic(self):
        values = np.zeros((4, 6))
        values[1, 1] = 5.0
        values[2, 4] = 5.0
        grid = DensityGrid(CENTER, 0.0, 0.0, 10.0, values)
        spots = detect_hotspots(grid, percentile=50.0)
        assert [s.label for s in spots] == ["H1", "H2"]
        assert spots[0].score == spots[1].score
        # equal scores fall back to row-major cell order
        assert spots[0].center.lat < spots[1].center.lat

    def test_percentile_domain(self):
        grid = DensityGrid(CENTER, 0.0, 0.0, 10.0, np.ones((2, 2)))
        with pytest.raises(ValueError):
            detect_hotspots(grid, percentile=0.0)
        with pytest.raises(ValueError):
            detect_hotspots(grid, percentile=100.0)


class TestMergeHotspots:
    def _spot(self, east_km, score, label):
        return HotSpot(offset_point(CENTER, east_km, 0.0), score, label)

    def test_zero_radius_is_identity(self):
        spots = [self._spot(0, 5, "H1"), self._spot(0.05, 4, "H2")]
        assert merge_hotspots(spots, 0.0) == spots

    def test_nearby_spots_absorbed_into_strongest(self):
        spots = [self._spot(0.0, 5.0, "H1"), self._spot(0.08, 4.0, "H2"),
                 self._spot(1.0, 3.0, "H3")]
        merged = merge_hotspots(spots, radius_m=100.0)
        assert [h.label for h in merged] == ["H1", "H3"]
        assert merged[0].score == pytest.approx(9.0)
        assert merged[0].center == spots[0].center

    def test_chain_does_not_bridge(self):
        # H3 is near H2 but far from H1; H1 absorbs H2, H3 stays
        spots = [self._spot(0.0, 5.0, "H1"), self._spot(0.09, 4.0, "H2"),
                 self._spot(0.18, 3.0, "H3")]
        merged = merge_hotspots(spots, radius_m=100.0)
        assert [h.label for h in merged] == ["H1", "H3"]


class TestPlanTour:
    def _spots(self, coords):
        return [HotSpot(offset_point(CENTER, e, n), 1.0, f"H{i + 1}")
                for i, (e, n) in enumerate(coords)]

    def test_single_stop(self):
        tour = plan_tour(self._spots([(0, 0)]))
        assert tour.length_km == 0.0
        assert len(tour.stops) == 1

    def test_two_stops_out_and_back(self):
        spots = self._spots([(0, 0), (0.7, 0)])
        tour = plan_tour(spots)
        leg = haversine_km(spots[0].center, spots[1].center)
        assert tour.length_km == leg + leg

    def test_unit_square_perimeter(self):
        spots = self._spots([(0, 0), (1, 0), (1, 1), (0, 1)])
        tour = plan_tour(spots)
        assert tour.length_km == pytest.approx(4.0, rel=0.005)
        # perimeter order, never the crossing diagonals
        sequence = [h.label for h in tour.stops]
        assert sequence in (["H1", "H2", "H3", "H4"], ["H1", "H4", "H3", "H2"])

    def test_start_honoured(self):
        spots = self._spots([(0, 0), (1, 0), (1, 1)])
        tour = plan_tour(spots, start=spots[2])
        assert tour.stops[0] == spots[2]

    def test_unknown_start_rejected(self):
        spots = self._spots([(0, 0), (1, 0)])
        stranger = HotSpot(offset_point(CENTER, 5, 5), 1.0, "HX")
        with pytest.raises(ValueError):
            plan_tour(spots, start=stranger)

    def test_size_limits(self):
        with pytest.raises(ValueError):
            plan_tour([])
        many = self._spots([(0.1 * i, 0.05 * i) for i in range(13)])
        with pytest.raises(ValueError, match="12"):
            plan_tour(many)

    def test_length_matches_circuit_helper_exactly(self):
        spots = self._spots([(0, 0), (0.9, 0.1), (0.4, 0.8), (0.1, 0.5)])
        tour = plan_tour(spots)
        assert tour.length_km == circuit_length_km([h.center for h in tour.stops])

    @given(st.integers(3, 7), st.integers(0, 2 ** 31 - 1))
    @settings(max_examples=60, deadline=None)
    def test_matches_brute_force_exactly(self, n, seed):
        rng = np.random.default_rng(seed)
        coords = rng.uniform(0, 2, size=(n, 2))
        spots = [HotSpot(offset_point(CENTER, e, v), 1.0, f"H{i + 1}")
                 for i, (e, v) in enumerate(coords)]
        tour = plan_tour(spots)

        labels = [h.label for h in spots]
        dist = [[haversine_km(a.center, b.center) for b in spots] for a in spots]
        want_cost, want_order = oracles.brute_force_tour(labels, dist, 0)
        assert tour.length_km == want_cost
        assert [h.label for h in tour.stops] == [labels[i] for i in want_order]

    def test_tie_break_prefers_lexicographic_labels(self):
        # all four corners of a square: the two perimeter directions cost
        # the same, the planner must take the label-smaller one
        square = [(0, 0), (0, 1), (1, 1), (1, 0)]
        spots = [HotSpot(offset_point(CENTER, e, n), 1.0, label)
                 for (e, n), label in zip(square, ["HA", "HB", "HC", "HD"])]
        dist = [[haversine_km(a.center, b.center) for b in spots] for a in spots]
        want_cost, want_order = oracles.brute_force_tour([h.label for h in spots], dist, 0)
        tour = plan_tour(spots)
        assert [h.label for h in tour.stops] == [spots[i].label for i in want_order]
        assert tour.length_km == want_cost

    @given(st.integers(3, 6), st.integers(0, 2 ** 31 - 1), st.integers(0, 5))
    @settings(max_examples=40, deadline=None)
    def test_length_invariant_under_rotation_and_reflection(self, n, seed, shift):
        rng = np.random.default_rng(seed)
        coords = rng.uniform(0, 2, size=(n, 2))
        points = [offset_point(CENTER, e, v) for e, v in coords]
        base = circuit_length_km(points)
        rotated = points[shift % n:] + points[:shift % n]
        reflected = list(reversed(points))
        assert circuit_length_km(rotated) == pytest.approx(base, rel=1e-12)
        assert circuit_length_km(reflected) == pytest.approx(base, rel=1e-12)


class TestEstimateDuration:
    def _tour(self, length, stops=1):
        hotspots = tuple(
            HotSpot(offset_point(CENTER, 0.1 * i, 0), 1.0, f"H{i + 1}")
            for i in range(stops))
        return Tour(hotspots, length)

    def test_zero_everything(self):
        assert estimate_duration(self._tour(0.0), 4.0) == (0.0, 0.0, 0.0)

    def test_walk_only(self):
        got = estimate_duration(self._tour(1.2), 4.0, stops=6)
        assert got == pytest.approx((0.30, 0.30, 0.30))

    def test_walk_plus_dwell(self):
        got = estimate_duration(self._tour(1.2), 4.0, dwell_minutes=(5, 10, 15), stops=6)
        assert got == pytest.approx((0.80, 1.30, 1.80))

    def test_stops_default_to_tour_size(self):
        got = estimate_duration(self._tour(1.2, stops=6), 4.0, dwell_minutes=(5, 10, 15))
        assert got == pytest.approx((0.80, 1.30, 1.80))

    def test_bounds_are_ordered(self):
        got = estimate_duration(self._tour(2.0), 5.0, dwell_minutes=(1, 7, 30), stops=4)
        assert got[0] <= got[1] <= got[2]

    def test_faster_walk_never_longer(self):
        slow = estimate_duration(self._tour(2.0), 3.0, dwell_minutes=(5, 10, 15), stops=3)
        fast = estimate_duration(self._tour(2.0), 6.0, dwell_minutes=(5, 10, 15), stops=3)
        assert all(f <= s for f, s in zip(fast, slow))

    def test_bad_speed_rejected(self):
        with pytest.raises(ConfigError):
            estimate_duration(self._tour(1.0), 0.0)

    def test_unordered_dwell_rejected(self):
        with pytest.raises(ConfigError):
            estimate_duration(self._tour(1.0), 4.0, dwell_minutes=(10, 5, 15))
