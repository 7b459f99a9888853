"""
===================================================================
Putting mixed survey scales on a common footing
===================================================================

Field studies rarely hand you tidy data: one questionnaire item runs 0..5,
another 1..5, a third scores *impact* on -5..0 where 0 is best.  Before
ratings can be weighted and summed they all have to live on one scale.

The rescaling here is the affine map that sends the source range onto the
target range, applied to each endpoint of a triangular fuzzy number.  It
preserves ordering and relative spread, and a crisp number rescales to
exactly the same value whether treated as a number or a degenerate TFN.
"""

import logging

from tourval import SourceRange, TargetRange, TriangularFuzzyNumber as TFN
from tourval import rescale_crisp, rescale_tfn
from tourval.errors import OutOfRangeError

TARGET = TargetRange(0.0, 100.0)

# --- 1. Crisp values first ---

print("--- 1. Crisp rescaling ---")
five_point = SourceRange(0.0, 5.0)
for raw in (0.0, 2.5, 4.0, 5.0):
    print(f"  {raw} on 0..5  ->  {rescale_crisp(raw, five_point, TARGET):.1f} on 0..100")

# --- 2. Whole fuzzy numbers ---

print("\n--- 2. Fuzzy rescaling ---")
rating = TFN(3.0, 4.0, 4.5)
print(f"  {rating} on 0..5 -> {rescale_tfn(rating, five_point, TARGET)}")

# --- 3. Reversed-polarity scales ---

# A -5..0 impact scale: -5 is the worst outcome, 0 the best.  The map is
# still order-preserving, so "nearly harmless" lands near 100.
print("\n--- 3. Negative source ranges ---")
impact = SourceRange(-5.0, 0.0)
nearly_harmless = TFN(-1.18, -0.18, -0.02)
print(f"  {nearly_harmless} on -5..0 -> {rescale_tfn(nearly_harmless, impact, TARGET)}")

# --- 4. Out-of-range answers: refuse or clamp ---

print("\n--- 4. Range policies ---")
typo = TFN(0.5, 4.5, 5.5)   # hi exceeds the 0..5 scale
try:
    rescale_tfn(typo, five_point, TARGET, label="enjoyment")
except OutOfRangeError as exc:
    print(f"  strict (default): {exc}")

logging.basicConfig(level=logging.WARNING, format="  [log] %(message)s")
clamped = rescale_tfn(typo, five_point, TARGET, policy="clamp", label="enjoyment")
print(f"  clamp: {typo} -> {clamped}")
print("  (the warning above records exactly what was moved)")
