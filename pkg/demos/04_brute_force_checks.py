"""
Brute-force checks
==================

The oracle module re-derives the group-theoretic facts behind the
construction by exhaustive enumeration, and recomputes every metric from
the raw definitions.
"""
import json

from hoplattice import field_new, find_primitive, monic, oracle
from hoplattice.metrics import evaluate
from hoplattice.pattern import CompanionPattern, companion_matrix

F3 = field_new(3)
f = find_primitive(F3, 3)
A = companion_matrix(f)
for v in oracle.run_all(A):
    print(f"{v.check:20} {'pass' if v else 'FAIL'}  {json.dumps(v.details)}")

# A reducible polynomial fails the orbit check: x^2 + 1 = (x + 1)^2 over F_2.
bad = companion_matrix(monic(field_new(2), [1, 0, 1]))
print("\nnegative control:", oracle.check_transitivity(bad).to_dict())

# Literal metric recomputation agrees with the vectorised engine.
P = CompanionPattern(F3, 2, f)
print("\nnaive == evaluate:", oracle.naive_metrics(P) == evaluate(P))
