"""
Binary fields and ordinary elliptic curves
==========================================

Build GF(2^n), look at the trace map, and count points on
``y^2 + xy = x^3 + r x^2 + a``.
"""

import numpy as np

from ascover import ec, make_field

k = make_field(5)
print(k, k.describe())

# The trace is linear, so half the field has trace 0.  Those are exactly the
# c for which y^2 + y = c has a solution.
tr = k.vtrace(k.vec_elements())
print("trace-0 elements:", int(np.count_nonzero(tr == 0)), "of", k.q)
c = 7
print("solve y^2 + y = %d ->" % c, k.solve_AS(c))

# An ordinary curve is fixed up to isomorphism by (j, sgn).  Changing the
# signature gives the quadratic twist, which flips the sign of the trace.
E = ec.from_invariants(k, j=3, sgn=0)
T = ec.quadratic_twist(E)
print(E, "trace", ec.trace_of(E))
print(T, "trace", ec.trace_of(T))

# Signature 0 curves always carry a rational 4-torsion point, so their trace
# is 1 mod 4.
traces = sorted({ec.trace_of(F) for F in ec.all_ordinary(k, r_values=(0,))})
print("signature-0 traces:", traces, "mod 4:", {t % 4 for t in traces})

# Translation by the 2-torsion point N has a closed form.
N = ec.two_torsion_point(E)
P = ec.rational_points(E)[3]
print("tau_N(P) =", ec.tau_N(E, P), " P + N =", ec.add_points(E, P, N))
