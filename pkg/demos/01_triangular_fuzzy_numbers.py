"""
===================================================================
Triangular fuzzy numbers: construction, membership, arithmetic
===================================================================

A triangular fuzzy number (TFN) models an uncertain quantity with three
anchors: the lowest plausible value, the most plausible value, and the
highest plausible value.  Survey answers like "somewhere around 4, but
definitely between 3 and 5" become TFN(3, 4, 5).

This script walks through the basic toolkit:

1.  Building TFNs (including crisp ones) and reading them back from text.
2.  Membership grades and alpha-cuts.
3.  Interval arithmetic: sums, scalar multiples, averages across experts.
4.  Collapsing a TFN to a single number (centroid defuzzification).
"""

from tourval import TriangularFuzzyNumber as TFN
from tourval import fuzzy

# --- 1. Construction ---

print("--- 1. Construction ---")
vague = TFN(3.0, 4.0, 5.0)
sharp = TFN.crisp(4.0)          # lo == mode == hi: no uncertainty at all
parsed = fuzzy.tfn_from_text("3;4;5")

print(f"  vague  = {vague}")
print(f"  sharp  = {sharp}  (degenerate: a plain number in TFN clothing)")
print(f"  parsed = {parsed}  round-trips as {fuzzy.tfn_to_text(parsed)!r}")

# Ordering is enforced; TFN(5, 4, 3) is rejected outright.
try:
    TFN(5.0, 4.0, 3.0)
except ValueError as exc:
    print(f"  TFN(5, 4, 3) -> ValueError: {exc}")

# --- 2. Membership and alpha-cuts ---

print("\n--- 2. Membership and alpha-cuts ---")
for x in (2.5, 3.5, 4.0, 4.8):
    print(f"  membership({x}) = {fuzzy.membership(vague, x):.3f}")

# The alpha-cut is the interval of values with membership >= alpha.
for alpha in (0.0, 0.5, 1.0):
    cut = fuzzy.alpha_cut(vague, alpha)
    print(f"  alpha={alpha:.1f}: [{cut.low:.2f}, {cut.high:.2f}]")

# --- 3. Arithmetic ---

print("\n--- 3. Arithmetic ---")
a = TFN(1.0, 2.0, 3.0)
b = TFN(0.5, 1.0, 1.5)
print(f"  {a} + {b} = {fuzzy.add(a, b)}")
print(f"  0.4 * {a} = {fuzzy.scale(0.4, a)}")
# Negative scalars flip the endpoints (lo and hi swap) so the result is
# still a valid TFN; this is the move that powers scale conversion.
print(f"  -1  * {a} = {fuzzy.scale(-1.0, a)}")

# Three experts rate the same thing; the panel view is the component mean.
panel = [TFN(2.0, 3.0, 4.0), TFN(3.0, 4.0, 5.0), TFN(2.5, 3.5, 4.0)]
print(f"  mean of {len(panel)} expert ratings = {fuzzy.mean(panel)}")

# --- 4. Defuzzification ---

print("\n--- 4. Defuzzification ---")
skewed = TFN(1.0, 2.0, 6.0)
print(f"  centroid of {vague}  = {fuzzy.defuzzify(vague):.4f}")
print(f"  centroid of {skewed} = {fuzzy.defuzzify(skewed):.4f} "
      "(the long right tail pulls it past the mode)")
