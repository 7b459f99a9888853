"""
===================================================================
Factor weights from pairwise comparisons
===================================================================

When nobody can hand you a weight column, weights can be derived from a
matrix of pairwise judgements ("how much more important is A than B?").
The principal eigenvector of that matrix gives the weights; its principal
eigenvalue measures how self-consistent the judgements were.

Shown below:

1.  A consistent 4-factor example: weights, lambda_max, CI, CR.
2.  A circular set of judgements that the consistency check rejects.
3.  Sanity-checking a ready-made weight column instead.
"""

import numpy as np

from tourval import derive_weights, validate_pairwise, validate_weights

# --- 1. A well-behaved matrix ---

print("--- 1. Four factors, reasonably consistent judgements ---")
judgements = [
    [1.0, 2.0, 4.0, 3.0],
    [0.5, 1.0, 3.0, 2.0],
    [0.25, 1 / 3, 1.0, 0.5],
    [1 / 3, 0.5, 2.0, 1.0],
]
matrix = validate_pairwise(judgements)
report = derive_weights(matrix)

for i, w in enumerate(report.weights):
    print(f"  factor {i + 1}: weight {w:.4f}")
print(f"  lambda_max = {report.lambda_max:.4f}")
print(f"  CI = {report.consistency_index:.4f}, CR = {report.consistency_ratio:.4f}"
      f"  ({'acceptable' if not report.inconsistent else 'inconsistent'})")

# --- 2. Circular judgements ---

# A beats B, B beats C, yet C beats A: the classic intransitive panel.
print("\n--- 2. Circular judgements ---")
circular = validate_pairwise([
    [1.0, 2.0, 0.5],
    [0.5, 1.0, 4.0],
    [2.0, 0.25, 1.0],
])
report = derive_weights(circular)
print(f"  CR = {report.consistency_ratio:.4f} -> inconsistent={report.inconsistent}")
print("  (CR above 0.10 means the judgements disagree with themselves; "
      "revisit them rather than trusting the weights)")

# --- 3. Validating an existing weight column ---

print("\n--- 3. Weight columns ---")
column = np.array([0.30, 0.25, 0.25, 0.20])
print(f"  {column.tolist()} -> ok={validate_weights(column).ok}")

sloppy = np.array([0.30, 0.25, 0.25, 0.15])    # sums to 0.95
check = validate_weights(sloppy)
print(f"  {sloppy.tolist()} -> ok={check.ok}  ({check.detail})")

# Reciprocity and positivity are enforced on the way in:
try:
    validate_pairwise([[1.0, 2.0], [0.4, 1.0]])
except ValueError as exc:
    print(f"\n  broken reciprocity -> {exc}")
