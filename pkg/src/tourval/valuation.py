"""Weighted fuzzy valuation of attractions: the FTV index, tiers, ranking.

The fuzzy tourism value (FTV) of an attraction is the weight vector applied
to its factor scores after each score has been rescaled onto the common
target range:  FTV = sum_i w_i * rescale(score_i).  The crisp min-max
tourism value index of earlier (non-fuzzy) schemes is included as an
independent reference implementation; with degenerate TFN scores the two
agree, which the tests exploit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

import numpy as np

from . import fuzzy
from .errors import ConfigError, InputError
from .fuzzy import TFN
from .rescale import SourceRange, TargetRange, rescale_tfn

__all__ = [
    "FactorDefinition",
    "FactorCatalogue",
    "AttractionEvaluation",
    "ValuationResult",
    "compute_ftv",
    "evaluate_attraction",
    "crisp_tvi",
    "classify",
    "filter_high",
    "rank",
    "DEFAULT_THRESHOLDS",
    "DEFAULT_SCALE",
]

# Tier bands on the 0-100 scale: Low = [0, 33], Medium = (33, 66], High = (66, 100].
# The High band and the "keep only FTV > 66" filter coincide by construction.
DEFAULT_THRESHOLDS = (33.0, 66.0)
DEFAULT_SCALE = (0.0, 100.0)

# Published factor tables round their weights, so a catalogue whose weights
# sum to e.g. 0.998 must still be accepted.
WEIGHT_SUM_TOLERANCE = 0.01


@dataclass(frozen=True)
class FactorDefinition:
    """One evaluation factor: id, display name, inventoried range, weight."""

    id: str
    name: str
    src: SourceRange
    weight: float

    def __post_init__(self):
        if not self.id:
            raise ValueError("factor id must be nonempty")
        if not 0.0 <= self.weight <= 1.0:
            raise ValueError(f"factor {self.id!r}: weight must be in [0, 1], got {self.weight}")


@dataclass(frozen=True)
class FactorCatalogue:
    """Ordered factor list plus the shared target range.

    Weights must sum to 1 within ``weight_tolerance``; a violation is a
    configuration error because it silently rescales every result.
    """

    factors: tuple[FactorDefinition, ...]
    target: TargetRange
    weight_tolerance: float = WEIGHT_SUM_TOLERANCE

    def __post_init__(self):
        factors = tuple(self.factors)
        object.__setattr__(self, "factors", factors)
        if not factors:
            raise ValueError("catalogue must contain at least one factor")
        ids = [f.id for f in factors]
        dupes = sorted({i for i in ids if ids.count(i) > 1})
        if dupes:
            raise ValueError(f"duplicate factor ids in catalogue: {', '.join(dupes)}")
        total = sum(f.weight for f in factors)
        if abs(total - 1.0) > self.weight_tolerance:
            raise ConfigError(
                f"factor weights sum to {total:.6g}, outside 1 +/- {self.weight_tolerance}"
            )

    @property
    def ids(self) -> tuple[str, ...]:
        return tuple(f.id for f in self.factors)

    @property
    def weights(self) -> tuple[float, ...]:
        return tuple(f.weight for f in self.factors)


@dataclass(frozen=True)
class AttractionEvaluation:
    """Expert-aggregated TFN score per factor for one attraction."""

    attraction_id: str
    scores: Mapping[str, TFN]


@dataclass(frozen=True)
class ValuationResult:
    """Valuation of one attraction: fuzzy index, crisp value, tier."""

    attraction_id: str
    ftv: TFN
    crisp: float
    tier: str | None = None


def _check_score_ids(evaluation: AttractionEvaluation, catalogue: FactorCatalogue) -> None:
    have = set(evaluation.scores)
    want = set(catalogue.ids)
    missing = sorted(want - have)
    extra = sorted(have - want)
    problems = []
    if missing:
        problems.append(f"missing scores for: {', '.join(missing)}")
    if extra:
        problems.append(f"unknown factor ids: {', '.join(extra)}")
    if problems:
        raise InputError(f"attraction {evaluation.attraction_id!r}: " + "; ".join(problems))


def compute_ftv(evaluation: AttractionEvaluation, catalogue: FactorCatalogue,
                policy: str = "strict") -> TFN:
    """Weighted sum of the rescaled factor scores of one attraction.

    Every catalogue factor must be scored exactly once; offending ids are
    listed in the error.  ``policy`` controls scores outside their factor's
    inventoried range (see ``rescale_tfn``).
    """
    _check_score_ids(evaluation, catalogue)
    acc = TFN.crisp(0.0)
    for f in catalogue.factors:
        rescaled = rescale_tfn(evaluation.scores[f.id], f.src, catalogue.target,
                               policy=policy, label=f.id)
        acc = fuzzy.add(acc, fuzzy.scale(f.weight, rescaled))
    return acc


def evaluate_attraction(evaluation: AttractionEvaluation, catalogue: FactorCatalogue,
                        policy: str = "strict", method: str = "centroid",
                        thresholds: tuple[float, float] | None = DEFAULT_THRESHOLDS,
                        scale: tuple[float, float] = DEFAULT_SCALE) -> ValuationResult:
    """Full valuation of one attraction: FTV, defuzzified value and tier.

    Pass ``thresholds=None`` to skip tier classification (mandatory when the
    target range is not the 0-100 scale the default bands are defined on).
    """
    ftv = compute_ftv(evaluation, catalogue, policy=policy)
    crisp = fuzzy.defuzzify(ftv, method=method)
    tier = classify(crisp, thresholds=thresholds, scale=scale) if thresholds else None
    return ValuationResult(evaluation.attraction_id, ftv, crisp, tier)


def crisp_tvi(ratings, weights, minima, maxima) -> float:
    """Crisp min-max tourism value index on the 0-5 scale.

    ``ratings`` is an individuals x factors matrix; each rating is min-max
    normalized with its factor's [min, max], weighted, summed, and averaged
    over individuals with a factor of 5:

        (5 / n) * sum_i sum_k  w_k * (x_ik - min_k) / (max_k - min_k)

    Parameters
    ----------
    ratings : array-like, shape (n_individuals, n_factors)
    weights : array-like, shape (n_factors,)
    minima, maxima : array-like, shape (n_factors,)
        Per-factor rating bounds; min_k != max_k required.
    """
    x = np.asarray(ratings, dtype=float)
    if x.ndim != 2 or x.size == 0:
        raise ValueError("ratings must be a nonempty individuals x factors matrix")
    w = np.asarray(weights, dtype=float)
    lo = np.asarray(minima, dtype=float)
    hi = np.asarray(maxima, dtype=float)
    if not (w.shape == lo.shape == hi.shape == (x.shape[1],)):
        raise ValueError("weights, minima and maxima must each have one entry per factor")
    if np.any(hi == lo):
        raise ValueError("per-factor min and max must differ")
    n = x.shape[0]
    return (5.0 / n) * float(np.sum(w * (x - lo) / (hi - lo)))


def classify(crisp: float, thresholds: tuple[float, float] = DEFAULT_THRESHOLDS,
             scale: tuple[float, float] = DEFAULT_SCALE) -> str:
    """Tier of a defuzzified value: Low up to the first threshold, Medium up
    to the second, High above it.  Values outside the scale are rejected."""
    low_max, medium_max = thresholds
    lo, hi = scale
    if not lo <= crisp <= hi:
        raise ValueError(f"value {crisp} outside the classification scale [{lo}, {hi}]")
    if crisp <= low_max:
        return "Low"
    if crisp <= medium_max:
        return "Medium"
    return "High"


def filter_high(results: Iterable[ValuationResult], threshold: float = 66.0) -> list[ValuationResult]:
    """Keep only results whose crisp value exceeds the threshold, in order."""
    return [r for r in results if r.crisp > threshold]


def rank(results: Iterable[ValuationResult]) -> list[ValuationResult]:
    """Order results by descending crisp value; ties fall back to the
    descending fuzzy mode and then to the ascending attraction id."""
    return sorted(results, key=lambda r: (-r.crisp, -r.ftv.mode, r.attraction_id))
