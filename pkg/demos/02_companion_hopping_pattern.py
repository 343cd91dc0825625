"""
A companion-matrix hopping pattern
==================================

With q = 2 and r = 2 the frame has m = 4 frequency slots and n = 2 time
slots, so 8 logical resources.  Each resource's slot is a state vector in
F_2^3 that the companion matrix advances by one step per frame.
"""
from hoplattice import field_new, find_primitive
from hoplattice.pattern import CompanionPattern

F = field_new(2)
f = find_primitive(F, 3)              # x^3 + x + 1
P = CompanionPattern(F, r=2, poly=f)
print(P, "frame:", P.frame, "state period:", P.period)

print("companion matrix:")
for row in P.matrix.entries:
    print("   ", row)

# Where does every resource transmit in each frame of one period?
print("\nframe | (i, j) for s = 0..7")
for t in range(P.period):
    print(f"{t:5} |", " ".join(f"({P.slot(t, s).i},{P.slot(t, s).j})" for s in range(P.num_resources)))

# Resource 0 has the zero state and never moves; everyone else cycles.
print("\nfirst schedule rows (t, s, i, j):", P.schedule(0, 1)[:4])
