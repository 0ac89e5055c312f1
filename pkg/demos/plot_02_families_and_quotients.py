"""
Genus-3 curves and their three elliptic quotients
=================================================

Each family member has a C2 x C2 group of involutions.  Its Jacobian splits
into three elliptic curves, so the point count of the curve is
``q + 1 - (t1 + t2 + t3)``.
"""

import random

from ascover import genus3 as g3
from ascover import make_field
from ascover.quotients import quotients_of, verify_isogeny

k = make_field(4)
rng = random.Random(1)

for family in sorted(g3.FAMILIES):
    C = g3.random_curve(k, family, rng)
    rep = verify_isogeny(C)
    print("%-30s #C = %3d   traces %-14s ok=%s"
          % (g3.to_str(C), rep.count, rep.traces, rep.ok))

# The quotients of a plane quartic, written out.
C = g3.NHypB(k, 1, 2, 5, 0)
for E in quotients_of(C):
    print("  ", E)

# The three involutions permute the rational points.
inv = g3.involutions(C)
print("fixed points per involution:", [len(f) for f in inv.fixed])

# Every quartic member over F_8 is smooth.
k8 = make_field(3)
singular = [C for fam in g3.QUARTIC_FAMILIES for C in g3.enumerate_family(k8, fam)
            if g3.smoothness_spotcheck(C) is not None]
print("singular quartics over F_8:", len(singular))
