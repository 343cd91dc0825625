"""
Metrics: companion pattern against the linear baseline
======================================================

On a 3 x 3 frame the linear baseline j(t) = j0 + i0*t (mod 3) has a pair
collision ratio of 1/3, while the companion pattern over F_3 reaches the
lower bound (m - 1)/(mn - 1) = 1/4.
"""
from hoplattice import evaluate, field_new, find_primitive, lower_bounds
from hoplattice.pattern import CompanionPattern, LinearPattern

F3 = field_new(3)
companion = CompanionPattern(F3, 1, find_primitive(F3, 2))
baseline = LinearPattern(3, 3)

ratio_bound, continual_bound = lower_bounds(3, 3)
print("bounds: ratio >=", ratio_bound, " continual >=", continual_bound)

for name, P in [("companion", companion), ("linear", baseline)]:
    R = evaluate(P)
    print(f"{name:10} column period {R.column_period:2}  ratio {str(R.max_collision_ratio):4}  "
          f"continual {R.max_continual}  balanced {R.occupancy_balanced}  "
          f"meets ratio bound: {R.ratio_meets_bound}")

# Larger frames: the companion values follow (q^(r+1)-1)/(q-1), (q^r-1)/(q^(r+1)-1), r.
print("\n q  r |  T   ratio   continual")
for q, r in [(2, 1), (2, 2), (2, 3), (3, 2), (5, 1)]:
    F = field_new(q)
    R = evaluate(CompanionPattern(F, r, find_primitive(F, r + 1)))
    print(f"{q:2} {r:2} | {R.column_period:2}  {str(R.max_collision_ratio):6}  {R.max_continual}")
