"""Batch front door: CSV/JSON ingestion, valuation, spatial analysis, and
deterministic artifact emission.

Input layout (all UTF-8 CSV with header row):
  factors.csv       id,name,x,y[,weight]
  evaluations.csv   attraction_id,factor_id,expert_id,lo,mode,hi  (long format,
                    one row per expert judgement)
  attractions.csv   id,name,lon,lat
  pairwise.csv      square matrix, header row of factor ids (only needed when
                    factors.csv carries no weight column)

Outputs are rendered fully in memory before anything touches disk, with all
numbers fixed to 6 significant digits, so reruns on identical inputs are
byte-identical and failures leave no partial files behind.
"""

from __future__ import annotations

import csv
import io
import json
import logging
from dataclasses import asdict, dataclass, field, replace
from pathlib import Path
from typing import Any, Iterable

from . import fuzzy, geojson
from .ahp import MAX_FACTORS, WeightReport, derive_weights, validate_pairwise
from .errors import ConfigError, InputError
from .fuzzy import TFN
from .rescale import SourceRange, TargetRange
from .spatial import (MAX_TOUR_STOPS, GeoPoint, HotSpot, ScoredPoint, Tour,
                      detect_hotspots, estimate_duration, kde_heatmap,
                      merge_hotspots, plan_tour)
from .valuation import (AttractionEvaluation, FactorCatalogue, FactorDefinition,
                        ValuationResult, evaluate_attraction, filter_high, rank)

__all__ = [
    "KdeSettings",
    "TourSettings",
    "RunConfig",
    "load_config",
    "IngestResult",
    "ingest",
    "PipelineOutput",
    "run_pipeline",
    "run_valuation",
    "run_tour",
    "format_number",
]

log = logging.getLogger(__name__)

RESULT_COLUMNS = ("attraction_id", "ftv_lo", "ftv_mode", "ftv_hi", "crisp", "tier", "rank")


def format_number(x: float) -> str:
    """Fixed 6-significant-digit rendering used in every output file."""
    if x == 0.0:
        x = 0.0
    return f"{x:.6g}"


def _round6(x: float) -> float:
    return float(format_number(x))


@dataclass(frozen=True)
class KdeSettings:
    bandwidth_m: float = 100.0
    cell_m: float = 10.0
    hotspot_percentile: float = 90.0
    merge_radius_m: float = 0.0

    def __post_init__(self):
        if not self.bandwidth_m > 0:
            raise ConfigError(f"kde.bandwidth_m must be positive, got {self.bandwidth_m}")
        if not self.cell_m > 0:
            raise ConfigError(f"kde.cell_m must be positive, got {self.cell_m}")
        if not 0.0 < self.hotspot_percentile < 100.0:
            raise ConfigError(
                f"kde.hotspot_percentile must be in (0, 100), got {self.hotspot_percentile}")
        if self.merge_radius_m < 0:
            raise ConfigError(
                f"kde.merge_radius_m cannot be negative, got {self.merge_radius_m}")


@dataclass(frozen=True)
class TourSettings:
    walk_speed_kmh: float = 4.0
    dwell_minutes: tuple[float, float, float] = (0.0, 0.0, 0.0)

    def __post_init__(self):
        object.__setattr__(self, "dwell_minutes", tuple(self.dwell_minutes))
        if not self.walk_speed_kmh > 0:
            raise ConfigError(
                f"tour.walk_speed_kmh must be positive, got {self.walk_speed_kmh}")
        d = self.dwell_minutes
        if len(d) != 3 or not 0.0 <= d[0] <= d[1] <= d[2]:
            raise ConfigError(
                f"tour.dwell_minutes must be ordered (min, avg, max) >= 0, got {d}")


@dataclass(frozen=True)
class RunConfig:
    """Resolved run configuration; all paths are absolute."""

    factors: Path
    evaluations: Path
    attractions: Path
    pairwise: Path | None = None
    target: tuple[float, float] = (0.0, 100.0)
    defuzzify: str = "centroid"
    range_policy: str = "strict"
    tier_thresholds: tuple[float, float] = (33.0, 66.0)
    filter_threshold: float = 66.0
    kde: KdeSettings = field(default_factory=KdeSettings)
    tour: TourSettings = field(default_factory=TourSettings)
    out_dir: Path = Path("out")

    def __post_init__(self):
        object.__setattr__(self, "target", tuple(self.target))
        object.__setattr__(self, "tier_thresholds", tuple(self.tier_thresholds))
        if len(self.target) != 2 or not self.target[0] < self.target[1]:
            raise ConfigError(f"target must be (m, M) with m < M, got {self.target}")
        if self.defuzzify not in ("centroid", "mode"):
            raise ConfigError(f"defuzzify must be 'centroid' or 'mode', got {self.defuzzify!r}")
        if self.range_policy not in ("strict", "clamp"):
            raise ConfigError(
                f"range_policy must be 'strict' or 'clamp', got {self.range_policy!r}")
        t = self.tier_thresholds
        if len(t) != 2 or not t[0] < t[1]:
            raise ConfigError(f"tier_thresholds must be increasing, got {t}")
        for p in (self.factors, self.evaluations, self.attractions, self.pairwise):
            if p is not None and not Path(p).is_file():
                raise ConfigError(f"referenced file does not exist: {p}")


_CONFIG_KEYS = {
    "factors", "evaluations", "attractions", "pairwise", "target", "defuzzify",
    "range_policy", "tier_thresholds", "filter_threshold", "kde", "tour", "out_dir",
}
_KDE_KEYS = {"bandwidth_m", "cell_m", "hotspot_percentile", "merge_radius_m"}
_TOUR_KEYS = {"walk_speed_kmh", "dwell_minutes"}


def _reject_unknown(mapping: dict, allowed: set[str], where: str) -> None:
    unknown = sorted(set(mapping) - allowed)
    if unknown:
        raise ConfigError(f"{where}: unknown keys: {', '.join(unknown)}")


def load_config(path: Path | str) -> RunConfig:
    """Read a JSON run configuration.  Relative input paths are taken
    relative to the config file's directory; a relative out_dir is taken
    relative to the working directory, so a config shipped in a read-only
    location still writes where the caller stands.  Unknown keys are
    rejected rather than ignored."""
    path = Path(path)
    try:
        raw = json.loads(path.read_text(encoding="utf-8"))
    except OSError as e:
        raise ConfigError(f"cannot read config {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise ConfigError(f"{path}: invalid JSON: {e}") from e
    if not isinstance(raw, dict):
        raise ConfigError(f"{path}: config must be a JSON object")
    _reject_unknown(raw, _CONFIG_KEYS, str(path))

    base = path.resolve().parent

    def resolve(key: str, required: bool = False) -> Path | None:
        value = raw.get(key)
        if value is None:
            if required:
                raise ConfigError(f"{path}: missing required key {key!r}")
            return None
        return (base / str(value)).resolve()

    kde_raw = raw.get("kde", {})
    tour_raw = raw.get("tour", {})
    if not isinstance(kde_raw, dict):
        raise ConfigError(f"{path}: 'kde' must be an object")
    if not isinstance(tour_raw, dict):
        raise ConfigError(f"{path}: 'tour' must be an object")
    _reject_unknown(kde_raw, _KDE_KEYS, f"{path}: kde")
    _reject_unknown(tour_raw, _TOUR_KEYS, f"{path}: tour")

    try:
        return RunConfig(
            factors=resolve("factors", required=True),
            evaluations=resolve("evaluations", required=True),
            attractions=resolve("attractions", required=True),
            pairwise=resolve("pairwise"),
            target=tuple(raw.get("target", (0.0, 100.0))),
            defuzzify=raw.get("defuzzify", "centroid"),
            range_policy=raw.get("range_policy", "strict"),
            tier_thresholds=tuple(raw.get("tier_thresholds", (33.0, 66.0))),
            filter_threshold=float(raw.get("filter_threshold", 66.0)),
            kde=KdeSettings(**kde_raw),
            tour=TourSettings(**tour_raw),
            out_dir=(Path.cwd() / str(raw.get("out_dir", "out"))).resolve(),
        )
    except (TypeError, ValueError) as e:
        raise ConfigError(f"{path}: {e}") from e


# --- ingestion -------------------------------------------------------------


def _float_cell(row: dict, column: str, where: str) -> float:
    text = (row.get(column) or "").strip()
    if not text:
        raise InputError(f"{where}: missing value in column {column!r}")
    try:
        return float(text)
    except ValueError:
        raise InputError(f"{where}: column {column!r} is not a number: {text!r}") from None


def _reader(path: Path, required: Iterable[str]) -> tuple[csv.DictReader, io.TextIOWrapper]:
    handle = open(path, encoding="utf-8", newline="")
    reader = csv.DictReader(handle)
    missing = [c for c in required if c not in (reader.fieldnames or [])]
    if missing:
        handle.close()
        raise InputError(f"{path}: missing required columns: {', '.join(missing)}")
    return reader, handle


def load_factor_table(path: Path) -> tuple[tuple[FactorDefinition, ...], bool]:
    """Factor rows in file order.  Returns (factors, has_weight_column);
    without a weight column every definition carries weight 0 and the
    caller must supply weights from a pairwise matrix."""
    reader, handle = _reader(path, ("id", "name", "x", "y"))
    has_weights = "weight" in (reader.fieldnames or [])
    factors: list[FactorDefinition] = []
    seen: set[str] = set()
    with handle:
        for row in reader:
            where = f"{path}:{reader.line_num}"
            factor_id = (row.get("id") or "").strip()
            if not factor_id:
                raise InputError(f"{where}: empty factor id")
            if factor_id in seen:
                raise InputError(f"{where}: duplicate factor id {factor_id!r}")
            seen.add(factor_id)
            try:
                src = SourceRange(_float_cell(row, "x", where), _float_cell(row, "y", where))
                weight = _float_cell(row, "weight", where) if has_weights else 0.0
                factors.append(FactorDefinition(
                    id=factor_id, name=(row.get("name") or factor_id).strip(),
                    src=src, weight=weight))
            except ValueError as e:
                raise InputError(f"{where}: {e}") from e
    if not factors:
        raise InputError(f"{path}: no factors defined")
    return tuple(factors), has_weights


def load_pairwise(path: Path, expected_ids: Iterable[str]) -> tuple[list[str], list[list[float]]]:
    """Square pairwise matrix with a header row of factor ids.  The id set
    must match the catalogue exactly; row order follows the header."""
    with open(path, encoding="utf-8", newline="") as handle:
        rows = list(csv.reader(handle))
    rows = [r for r in rows if any(cell.strip() for cell in r)]
    if not rows:
        raise InputError(f"{path}: empty pairwise matrix file")
    ids = [c.strip() for c in rows[0]]
    expected = set(expected_ids)
    if set(ids) != expected or len(ids) != len(expected):
        missing = sorted(expected - set(ids))
        extra = sorted(set(ids) - expected)
        detail = []
        if missing:
            detail.append(f"missing ids: {', '.join(missing)}")
        if extra:
            detail.append(f"unknown ids: {', '.join(extra)}")
        raise InputError(f"{path}: header does not match factor catalogue"
                         + (" (" + "; ".join(detail) + ")" if detail else ""))
    n = len(ids)
    if len(rows) != n + 1:
        raise InputError(f"{path}: expected {n} data rows after the header, got {len(rows) - 1}")
    matrix: list[list[float]] = []
    for i, row in enumerate(rows[1:], start=2):
        if len(row) != n:
            raise InputError(f"{path}:{i}: expected {n} entries, got {len(row)}")
        try:
            matrix.append([float(cell) for cell in row])
        except ValueError as e:
            raise InputError(f"{path}:{i}: {e}") from e
    return ids, matrix


def load_evaluations(path: Path, catalogue_ids: Iterable[str]) -> dict[str, dict[str, list[TFN]]]:
    """Long-format expert judgements grouped as attraction -> factor ->
    TFNs in file order.  Duplicate (attraction, factor, expert) triples and
    unknown factor ids are rejected with their line number."""
    known = set(catalogue_ids)
    reader, handle = _reader(
        path, ("attraction_id", "factor_id", "expert_id", "lo", "mode", "hi"))
    grouped: dict[str, dict[str, list[TFN]]] = {}
    seen: set[tuple[str, str, str]] = set()
    with handle:
        for row in reader:
            where = f"{path}:{reader.line_num}"
            attraction = (row.get("attraction_id") or "").strip()
            factor = (row.get("factor_id") or "").strip()
            expert = (row.get("expert_id") or "").strip()
            if not attraction or not factor or not expert:
                raise InputError(f"{where}: attraction_id, factor_id and expert_id "
                                 "must all be non-empty")
            if factor not in known:
                raise InputError(f"{where}: unknown factor id {factor!r}")
            triple = (attraction, factor, expert)
            if triple in seen:
                raise InputError(f"{where}: duplicate judgement for attraction "
                                 f"{attraction!r}, factor {factor!r}, expert {expert!r}")
            seen.add(triple)
            try:
                score = TFN(_float_cell(row, "lo", where), _float_cell(row, "mode", where),
                            _float_cell(row, "hi", where))
            except ValueError as e:
                raise InputError(f"{where}: {e}") from e
            grouped.setdefault(attraction, {}).setdefault(factor, []).append(score)
    return grouped


def load_attractions(path: Path) -> tuple[dict[str, str], dict[str, GeoPoint]]:
    """Attraction display names and WGS84 locations keyed by id."""
    reader, handle = _reader(path, ("id", "name", "lon", "lat"))
    names: dict[str, str] = {}
    locations: dict[str, GeoPoint] = {}
    with handle:
        for row in reader:
            where = f"{path}:{reader.line_num}"
            attraction_id = (row.get("id") or "").strip()
            if not attraction_id:
                raise InputError(f"{where}: empty attraction id")
            if attraction_id in names:
                raise InputError(f"{where}: duplicate attraction id {attraction_id!r}")
            try:
                point = GeoPoint(_float_cell(row, "lon", where), _float_cell(row, "lat", where))
            except ValueError as e:
                raise InputError(f"{where}: {e}") from e
            names[attraction_id] = (row.get("name") or attraction_id).strip()
            locations[attraction_id] = point
    if not names:
        raise InputError(f"{path}: no attractions")
    return names, locations


@dataclass(frozen=True)
class IngestResult:
    catalogue: FactorCatalogue
    evaluations: tuple[AttractionEvaluation, ...]
    names: dict[str, str]
    locations: dict[str, GeoPoint]
    weight_source: str
    weight_report: WeightReport | None


def ingest(config: RunConfig) -> IngestResult:
    """Load and cross-validate all inputs; aggregate expert judgements to
    one mean TFN per (attraction, factor).

    The attraction universe is attractions.csv: every listed attraction
    must be fully scored, and judgements for unlisted attractions are
    errors.  Weight precedence: factor weight column, else pairwise matrix,
    else a configuration error.
    """
    factors, has_weights = load_factor_table(config.factors)
    factor_ids = [f.id for f in factors]

    weight_source = "column"
    report: WeightReport | None = None
    if has_weights:
        if config.pairwise is not None:
            log.info("factor file carries weights; ignoring pairwise matrix %s",
                     config.pairwise)
    else:
        if config.pairwise is None:
            raise ConfigError(
                f"{config.factors} has no weight column and no pairwise matrix is "
                "configured; supply one of the two")
        if len(factor_ids) > MAX_FACTORS:
            raise InputError(
                f"{config.pairwise}: pairwise comparison supports at most "
                f"{MAX_FACTORS} factors, catalogue has {len(factor_ids)}")
        ids, matrix = load_pairwise(config.pairwise, factor_ids)
        try:
            report = derive_weights(validate_pairwise(matrix))
        except ValueError as e:
            raise InputError(f"{config.pairwise}: {e}") from e
        by_id = dict(zip(ids, report.weights))
        factors = tuple(replace(f, weight=by_id[f.id]) for f in factors)
        weight_source = "pairwise"

    try:
        catalogue = FactorCatalogue(factors=factors, target=TargetRange(*config.target))
    except ValueError as e:
        raise InputError(f"{config.factors}: {e}") from e

    names, locations = load_attractions(config.attractions)
    grouped = load_evaluations(config.evaluations, factor_ids)

    unknown = sorted(set(grouped) - set(names))
    if unknown:
        raise InputError(f"{config.evaluations}: judgements for attractions absent "
                         f"from {config.attractions}: {', '.join(unknown)}")
    evaluations = []
    for attraction_id in names:
        scores = grouped.get(attraction_id, {})
        missing = [f for f in factor_ids if f not in scores]
        if missing:
            raise InputError(
                f"{config.evaluations}: attraction {attraction_id!r} lacks judgements "
                f"for: {', '.join(missing)}")
        evaluations.append(AttractionEvaluation(
            attraction_id,
            {f: fuzzy.mean(scores[f]) for f in factor_ids}))
    return IngestResult(catalogue, tuple(evaluations), names, locations,
                        weight_source, report)


# --- the run itself --------------------------------------------------------


@dataclass(frozen=True)
class PipelineOutput:
    """In-memory mirror of everything written to disk."""

    results: tuple[ValuationResult, ...]
    ranks: dict[str, int]
    retained: tuple[str, ...]
    weight_source: str
    weight_report: WeightReport | None
    hotspots: tuple[HotSpot, ...]
    tour: Tour | None
    written: tuple[Path, ...]


def _gate_consistency(report: WeightReport | None, allow_inconsistent: bool) -> None:
    if report is not None and report.inconsistent and not allow_inconsistent:
        raise InputError(
            f"pairwise judgements are inconsistent (CR = {report.consistency_ratio:.4f} "
            "> 0.1); re-elicit them or pass --allow-inconsistent")


def _valuate(config: RunConfig, ingested: IngestResult) -> tuple[list[ValuationResult], dict[str, int]]:
    results = [
        evaluate_attraction(ev, ingested.catalogue, policy=config.range_policy,
                            method=config.defuzzify, thresholds=config.tier_thresholds,
                            scale=config.target)
        for ev in ingested.evaluations
    ]
    ranked = rank(results)
    ranks = {r.attraction_id: i + 1 for i, r in enumerate(ranked)}
    return ranked, ranks


def _spatial_analysis(config: RunConfig, retained: list[ValuationResult],
                      locations: dict[str, GeoPoint]):
    points = [ScoredPoint(locations[r.attraction_id], r.crisp) for r in retained]
    grid = kde_heatmap(points, bandwidth_m=config.kde.bandwidth_m, cell_m=config.kde.cell_m)
    hotspots = detect_hotspots(grid, percentile=config.kde.hotspot_percentile)
    hotspots = merge_hotspots(hotspots, config.kde.merge_radius_m)
    if len(hotspots) > MAX_TOUR_STOPS:
        raise ConfigError(
            f"{len(hotspots)} hotspots exceed the tour planner's limit of "
            f"{MAX_TOUR_STOPS}; raise kde.merge_radius_m or kde.hotspot_percentile")
    tour = None
    if hotspots:
        tour = plan_tour(hotspots)
        duration = estimate_duration(tour, config.tour.walk_speed_kmh,
                                     config.tour.dwell_minutes)
        tour = replace(tour, duration_hours=duration)
    return grid, tuple(hotspots), tour


def _results_csv(ranked: list[ValuationResult], ranks: dict[str, int]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(RESULT_COLUMNS)
    for r in ranked:
        writer.writerow([
            r.attraction_id, format_number(r.ftv.lo), format_number(r.ftv.mode),
            format_number(r.ftv.hi), format_number(r.crisp),
            r.tier or "", ranks[r.attraction_id],
        ])
    return buffer.getvalue()


def _config_echo(config: RunConfig) -> dict[str, Any]:
    echo = asdict(config)
    for key in ("factors", "evaluations", "attractions", "pairwise", "out_dir"):
        echo[key] = None if echo[key] is None else str(echo[key])
    echo["target"] = list(config.target)
    echo["tier_thresholds"] = list(config.tier_thresholds)
    echo["kde"] = asdict(config.kde)
    echo["tour"] = {"walk_speed_kmh": config.tour.walk_speed_kmh,
                    "dwell_minutes": list(config.tour.dwell_minutes)}
    return echo


def _weights_block(catalogue: FactorCatalogue, source: str,
                   report: WeightReport | None) -> dict[str, Any]:
    block: dict[str, Any] = {
        "source": source,
        "values": {f.id: _round6(f.weight) for f in catalogue.factors},
    }
    if report is not None:
        block.update({
            "lambda_max": _round6(report.lambda_max),
            "consistency_index": _round6(report.consistency_index),
            "consistency_ratio": _round6(report.consistency_ratio),
            "inconsistent": report.inconsistent,
        })
    return block


def _results_json(config: RunConfig, ingested: IngestResult,
                  ranked: list[ValuationResult], ranks: dict[str, int],
                  retained: list[ValuationResult],
                  hotspots: tuple[HotSpot, ...], tour: Tour | None) -> str:
    document: dict[str, Any] = {
        "config": _config_echo(config),
        "weights": _weights_block(ingested.catalogue, ingested.weight_source,
                                  ingested.weight_report),
        "results": [
            {
                "attraction_id": r.attraction_id,
                "name": ingested.names[r.attraction_id],
                "ftv_lo": _round6(r.ftv.lo),
                "ftv_mode": _round6(r.ftv.mode),
                "ftv_hi": _round6(r.ftv.hi),
                "crisp": _round6(r.crisp),
                "tier": r.tier,
                "rank": ranks[r.attraction_id],
            }
            for r in ranked
        ],
        "filter": {
            "threshold": _round6(config.filter_threshold),
            "retained": [r.attraction_id for r in retained],
            "count": len(retained),
        },
        "spatial": {
            "hotspots": [
                {"label": h.label, "score": _round6(h.score),
                 "lon": round(h.center.lon, 6), "lat": round(h.center.lat, 6)}
                for h in hotspots
            ],
            "tour": None if tour is None else {
                "stops": [h.label for h in tour.stops],
                "length_km": _round6(tour.length_km),
                "duration_hours": [_round6(d) for d in tour.duration_hours],
            },
        },
    }
    return json.dumps(document, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _map_geojson(names: dict[str, str], locations: dict[str, GeoPoint],
                 ranked: list[ValuationResult], ranks: dict[str, int],
                 grid, hotspots, tour) -> str:
    features = [
        geojson.attraction_feature(locations[r.attraction_id], r,
                                   names[r.attraction_id], rank=ranks[r.attraction_id])
        for r in ranked
    ]
    features.extend(geojson.hotspot_feature(h) for h in hotspots)
    if tour is not None:
        features.append(geojson.tour_feature(tour))
    if grid is not None:
        features.extend(geojson.density_features(grid))
    document = geojson.feature_collection(features)
    return json.dumps(document, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _write_all(out_dir: Path, payloads: dict[str, str]) -> tuple[Path, ...]:
    """All-or-nothing write: on any failure, files created here are removed."""
    out_dir.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []
    try:
        for name, payload in payloads.items():
            target = out_dir / name
            target.write_text(payload, encoding="utf-8", newline="")
            written.append(target)
    except Exception:
        for path in written:
            path.unlink(missing_ok=True)
        raise
    return tuple(written)


def run_valuation(config: RunConfig, allow_inconsistent: bool = False) -> PipelineOutput:
    """Valuation stage only: results.csv and results.json, no map."""
    return _run(config, allow_inconsistent, with_spatial=False)


def run_pipeline(config: RunConfig, allow_inconsistent: bool = False) -> PipelineOutput:
    """Full run: valuation, filtering, spatial analysis, all three artifacts."""
    return _run(config, allow_inconsistent, with_spatial=True)


def _run(config: RunConfig, allow_inconsistent: bool, with_spatial: bool) -> PipelineOutput:
    ingested = ingest(config)
    _gate_consistency(ingested.weight_report, allow_inconsistent)
    ranked, ranks = _valuate(config, ingested)
    retained = filter_high(ranked, threshold=config.filter_threshold)

    grid, hotspots, tour = None, (), None
    if with_spatial:
        grid, hotspots, tour = _spatial_analysis(config, retained, ingested.locations)

    payloads = {
        "results.csv": _results_csv(ranked, ranks),
        "results.json": _results_json(config, ingested, ranked, ranks, retained,
                                      hotspots, tour),
    }
    if with_spatial:
        payloads["map.geojson"] = _map_geojson(ingested.names, ingested.locations,
                                               ranked, ranks, grid, hotspots, tour)
    written = _write_all(config.out_dir, payloads)
    return PipelineOutput(tuple(ranked), ranks, tuple(r.attraction_id for r in retained),
                          ingested.weight_source, ingested.weight_report,
                          hotspots, tour, written)


def run_tour(config: RunConfig) -> PipelineOutput:
    """Spatial stage alone, fed from a previous run's results.csv in
    config.out_dir; rewrites map.geojson only."""
    results_path = config.out_dir / "results.csv"
    if not results_path.is_file():
        raise InputError(f"{results_path}: not found; run the pipeline (or the "
                         "valuation stage) first")
    names, locations = load_attractions(config.attractions)

    reader, handle = _reader(results_path, RESULT_COLUMNS)
    results: list[ValuationResult] = []
    ranks: dict[str, int] = {}
    with handle:
        for row in reader:
            where = f"{results_path}:{reader.line_num}"
            attraction_id = (row.get("attraction_id") or "").strip()
            if attraction_id not in locations:
                raise InputError(f"{where}: attraction {attraction_id!r} has no "
                                 f"coordinates in {config.attractions}")
            ftv = TFN(_float_cell(row, "ftv_lo", where), _float_cell(row, "ftv_mode", where),
                      _float_cell(row, "ftv_hi", where))
            crisp = _float_cell(row, "crisp", where)
            tier = (row.get("tier") or "").strip() or None
            results.append(ValuationResult(attraction_id, ftv, crisp, tier))
            ranks[attraction_id] = int(_float_cell(row, "rank", where))
    if not results:
        raise InputError(f"{results_path}: no result rows")

    retained = filter_high(results, threshold=config.filter_threshold)
    grid, hotspots, tour = _spatial_analysis(config, retained, locations)
    payloads = {"map.geojson": _map_geojson(names, locations, results, ranks, grid,
                                            hotspots, tour)}
    written = _write_all(config.out_dir, payloads)
    return PipelineOutput(tuple(results), ranks, tuple(r.attraction_id for r in retained),
                          "column", None, hotspots, tour, written)
