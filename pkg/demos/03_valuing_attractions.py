"""
===================================================================
From expert ratings to a ranked list of attractions
===================================================================

The experiential value of a tourist attraction is scored against a
catalogue of weighted factors (condition, authenticity, engagement, ...),
each on its own survey scale.  Per attraction:

1.  every factor rating is rescaled onto 0..100,
2.  the rescaled TFNs are combined into one weighted fuzzy value (FTV),
3.  the FTV is defuzzified to a crisp score, classified into a tier
    (Low / Medium / High), and used for ranking and filtering.

This demo scores three fictional attractions against the bundled
20-factor catalogue from the Santiago de Cuba study.
"""

import random

from tourval import AttractionEvaluation, TriangularFuzzyNumber as TFN
from tourval import evaluate_attraction, filter_high, rank
from tourval import datasets

catalogue = datasets.santiago_catalogue()

print(f"catalogue: {len(catalogue.factors)} factors, "
      f"weights sum to {sum(catalogue.weights):.3f}")
print(f"           target range {catalogue.target.m}..{catalogue.target.M}\n")

# --- 1. Invent three rating bundles of different quality ---

# quality is the typical position inside each factor's own range
rng = random.Random(7)

def rate(quality: float) -> dict:
    scores = {}
    for factor in catalogue.factors:
        x, y = factor.src.x, factor.src.y
        span = y - x
        mode = x + span * min(0.95, max(0.05, quality + rng.uniform(-0.1, 0.1)))
        lo = max(x, mode - 0.12 * span)
        hi = min(y, mode + 0.12 * span)
        scores[factor.id] = TFN(lo, mode, hi)
    return scores

bundles = {
    "cathedral_steps": rate(0.85),
    "old_customs_house": rate(0.55),
    "forgotten_warehouse": rate(0.25),
}

# --- 2. Evaluate each attraction ---

print("--- evaluation ---")
results = []
for attraction_id, scores in bundles.items():
    result = evaluate_attraction(AttractionEvaluation(attraction_id, scores),
                                 catalogue)
    results.append(result)
    print(f"  {attraction_id:20s} FTV={result.ftv}  "
          f"crisp={result.crisp:6.2f}  tier={result.tier}")

# --- 3. Rank and filter ---

print("\n--- ranking (crisp score, ties by mode) ---")
for position, result in enumerate(rank(results), start=1):
    print(f"  {position}. {result.attraction_id} ({result.crisp:.2f})")

kept = filter_high(results)     # strictly above 66 by default
print(f"\nfilter keeps {len(kept)} of {len(results)}: "
      f"{[r.attraction_id for r in kept]}")

# --- 4. The published top five, for comparison ---

print("\n--- published Santiago de Cuba top five ---")
from tourval import classify, fuzzy
for name, ftv in datasets.santiago_reference_ftv():
    crisp = fuzzy.defuzzify(ftv)
    print(f"  {name:45s} {ftv}  -> {crisp:.2f} {classify(crisp)}")
