"""Bundled reference data from a field assessment of the historic centre of
Santiago de Cuba.

Ships the twenty-factor experiential catalogue (source ranges, elicited
weights, and the surveyed mean ratings per factor) together with the five
top-valued attractions it produced, plus a small synthetic sample dataset
wired for the batch pipeline.
"""

from __future__ import annotations

import csv
from importlib.resources import files
from pathlib import Path

from .fuzzy import TriangularFuzzyNumber
from .rescale import SourceRange, TargetRange
from .valuation import FactorCatalogue, FactorDefinition

__all__ = [
    "santiago_catalogue",
    "santiago_factor_means",
    "santiago_reference_ftv",
    "santiago_sample_dir",
]

_DATA = files("tourval") / "data"


def _rows(name: str) -> list[dict[str, str]]:
    text = (_DATA / name).read_text(encoding="utf-8")
    return list(csv.DictReader(text.splitlines()))


def santiago_catalogue(target: tuple[float, float] = (0.0, 100.0)) -> FactorCatalogue:
    """The twenty-factor catalogue with its published weights.

    The weights sum to 0.998 as published, inside the catalogue's default
    0.01 tolerance.
    """
    factors = tuple(
        FactorDefinition(
            id=row["id"],
            name=row["name"],
            src=SourceRange(float(row["x"]), float(row["y"])),
            weight=float(row["weight"]),
        )
        for row in _rows("santiago_factors.csv")
    )
    return FactorCatalogue(factors=factors, target=TargetRange(*target))


def santiago_factor_means() -> dict[str, TriangularFuzzyNumber]:
    """Surveyed mean rating per factor, keyed by factor id.

    Note the historical_value mean sits below its declared range minimum;
    rescaling it requires the clamp policy.
    """
    return {
        row["id"]: TriangularFuzzyNumber(
            float(row["mean_lo"]), float(row["mean_mode"]), float(row["mean_hi"])
        )
        for row in _rows("santiago_factors.csv")
    }


def santiago_reference_ftv() -> list[tuple[str, TriangularFuzzyNumber]]:
    """The five top-valued attractions with their published FTV triplets,
    in published order (House of the Trova first)."""
    return [
        (row["name"],
         TriangularFuzzyNumber(float(row["lo"]), float(row["mode"]), float(row["hi"])))
        for row in _rows("santiago_reference_ftv.csv")
    ]


def santiago_sample_dir() -> Path:
    """Directory of the synthetic sample dataset (config.json plus CSVs).

    The sample is generated, not surveyed: ten attractions scored by three
    experts across the full catalogue, with exactly three attractions
    valued above the High threshold.  Requires an on-disk install.
    """
    return Path(str(_DATA / "santiago_sample"))
